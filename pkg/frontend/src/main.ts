import {
  ApiError,
  createGame,
  getHint,
  getSolution,
  postMove,
  postUndo,
} from "./api.js";
import { renderBoard, renderError, renderPalette, renderStatus } from "./render.js";
import {
  canAct,
  initialModel,
  moveVertexFor,
  withBusy,
  withError,
  withGame,
  withHint,
  withOptimal,
  withSelection,
  withState,
  type ViewModel,
} from "./state.js";
import type { CreateGameRequest, Variant } from "./types.js";

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    const field = err.field ? ` (${err.field})` : "";
    return `${err.code}${field}: ${err.message}`;
  }
  return err instanceof Error ? err.message : String(err);
}

export function initApp(doc: Document): void {
  const board = doc.getElementById("board") as unknown as SVGSVGElement;
  const palette = doc.getElementById("palette") as HTMLElement;
  const status = doc.getElementById("status") as HTMLElement;
  const errorBox = doc.getElementById("error") as HTMLElement;
  const form = doc.getElementById("new-game") as HTMLFormElement;
  const fileInput = doc.getElementById("instance-file") as HTMLInputElement;
  const hintButton = doc.getElementById("hint-btn") as HTMLButtonElement;
  const undoButton = doc.getElementById("undo-btn") as HTMLButtonElement;

  let model: ViewModel = initialModel();

  const callbacks = {
    onBlobClick(blobId: number): void {
      if (!canAct(model)) return;
      update(withSelection(model, model.selected === blobId ? null : blobId));
    },
    onColorClick(color: number): void {
      void playColor(color);
    },
  };

  function update(next: ViewModel): void {
    model = next;
    renderBoard(board, model, callbacks);
    renderPalette(palette, model, callbacks);
    renderStatus(status, model);
    renderError(errorBox, model);
    const active = canAct(model);
    hintButton.disabled = !active;
    undoButton.disabled = !active || (model.state?.move_count ?? 0) === 0;
  }

  async function startGame(body: CreateGameRequest): Promise<void> {
    update(withBusy(model, true));
    try {
      const game = await createGame(body);
      update(withGame(model, game.session_id, game.state));
      try {
        const solution = await getSolution(game.session_id);
        if (solution.optimal) update(withOptimal(model, solution.value));
      } catch {
        // instance too hard for the default budget; play without a target
      }
    } catch (err) {
      update(withError(model, describe(err)));
    }
  }

  async function playColor(color: number): Promise<void> {
    if (!canAct(model)) return;
    const vertex = moveVertexFor(model);
    if (vertex === null) {
      update(withError(model, "select a blob first, then pick a color"));
      return;
    }
    const sid = model.sessionId!;
    update(withBusy(model, true));
    try {
      const game = await postMove(sid, { vertex, color });
      update(withState(model, game.state));
    } catch (err) {
      update(withError(model, describe(err)));
    }
  }

  hintButton.addEventListener("click", () => {
    void (async () => {
      if (!canAct(model)) return;
      update(withBusy(model, true));
      try {
        const hint = await getHint(model.sessionId!);
        update(withHint(model, hint));
      } catch (err) {
        update(withError(model, describe(err)));
      }
    })();
  });

  undoButton.addEventListener("click", () => {
    void (async () => {
      if (!canAct(model)) return;
      update(withBusy(model, true));
      try {
        const game = await postUndo(model.sessionId!);
        update(withState(model, game.state));
      } catch (err) {
        update(withError(model, describe(err)));
      }
    })();
  });

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    if (model.busy) return;
    const data = new FormData(form);
    const variant = String(data.get("variant") ?? "free") as Variant;
    const body: CreateGameRequest = {
      generator: {
        kind: String(data.get("kind") ?? "proper_interval"),
        n: Number(data.get("n") ?? 12),
        k: Number(data.get("k") ?? 4),
        seed: Number(data.get("seed") ?? 1),
      },
      variant,
    };
    if (variant === "fixed") body.pivot = Number(data.get("pivot") ?? 0);
    void startGame(body);
  });

  fileInput.addEventListener("change", () => {
    void (async () => {
      const file = fileInput.files?.[0];
      if (!file || model.busy) return;
      try {
        const doc = JSON.parse(await file.text()) as Record<string, unknown>;
        await startGame({ instance: doc });
      } catch (err) {
        update(withError(model, describe(err)));
      } finally {
        fileInput.value = "";
      }
    })();
  });

  update(model);
}

if (typeof document !== "undefined" && document.getElementById("board")) {
  initApp(document);
}
