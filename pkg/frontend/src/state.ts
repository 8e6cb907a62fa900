import type { HintPayload, StatePayload } from "./types.js";

/** Immutable view model; every transition returns a fresh object. */
export interface ViewModel {
  sessionId: string | null;
  state: StatePayload | null;
  /** Blob id awaiting a color pick, or null. */
  selected: number | null;
  hint: HintPayload | null;
  /** True while a request is in flight; input stays disabled. */
  busy: boolean;
  /** Optimum for the starting position, fetched once per game. */
  optimalFromStart: number | null;
  error: string | null;
}

export function initialModel(): ViewModel {
  return {
    sessionId: null,
    state: null,
    selected: null,
    hint: null,
    busy: false,
    optimalFromStart: null,
    error: null,
  };
}

export function withGame(
  model: ViewModel,
  sessionId: string,
  state: StatePayload,
): ViewModel {
  return {
    ...model,
    sessionId,
    state,
    selected: null,
    hint: null,
    busy: false,
    optimalFromStart: null,
    error: null,
  };
}

/** A fresh state invalidates any stale hint and selection. */
export function withState(model: ViewModel, state: StatePayload): ViewModel {
  return { ...model, state, selected: null, hint: null, busy: false, error: null };
}

export function withSelection(model: ViewModel, blobId: number | null): ViewModel {
  return { ...model, selected: blobId };
}

export function withHint(model: ViewModel, hint: HintPayload): ViewModel {
  const selected = hintBlob(model, hint);
  return { ...model, hint, selected, busy: false, error: null };
}

export function withOptimal(model: ViewModel, value: number): ViewModel {
  return { ...model, optimalFromStart: value };
}

export function withBusy(model: ViewModel, busy: boolean): ViewModel {
  return { ...model, busy };
}

export function withError(model: ViewModel, message: string | null): ViewModel {
  return { ...model, error: message, busy: false };
}

/** Blob id containing a vertex, or null when no state is loaded. */
export function blobOfVertex(state: StatePayload | null, vertex: number): number | null {
  if (!state) return null;
  for (const blob of state.blobs) {
    if (blob.vertices.includes(vertex)) return blob.id;
  }
  return null;
}

function hintBlob(model: ViewModel, hint: HintPayload): number | null {
  return blobOfVertex(model.state, hint.move.vertex);
}

export function canAct(model: ViewModel): boolean {
  return !model.busy && model.sessionId !== null && model.state !== null && !model.state.won;
}

/**
 * In the fixed variant every move recolors the pivot blob, so a color pick
 * needs no selected blob; free play needs one.
 */
export function moveVertexFor(model: ViewModel): number | null {
  const state = model.state;
  if (!state) return null;
  if (state.variant === "fixed") return state.pivot ?? null;
  if (model.selected === null) return null;
  const blob = state.blobs.find((b) => b.id === model.selected);
  if (!blob || blob.vertices.length === 0) return null;
  return Math.min(...blob.vertices);
}
