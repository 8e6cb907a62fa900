import {
  blobOfVertex,
  canAct,
  initialModel,
  moveVertexFor,
  withBusy,
  withGame,
  withHint,
  withSelection,
  withState,
} from "../src/state.js";
import type { StatePayload } from "../src/types.js";

function sampleState(overrides: Partial<StatePayload> = {}): StatePayload {
  return {
    n: 4,
    k: 3,
    variant: "free",
    blobs: [
      { id: 0, color: 1, vertices: [0, 1], neighbors: [1] },
      { id: 1, color: 2, vertices: [2, 3], neighbors: [0] },
    ],
    vertex_colors: [1, 1, 2, 2],
    move_count: 0,
    distinct_colors: 2,
    lower_bound: 1,
    won: false,
    ...overrides,
  };
}

test("withGame loads a session and clears per-game scraps", () => {
  const stale = withSelection(withGame(initialModel(), "old", sampleState()), 1);
  const model = withGame(stale, "fresh", sampleState());
  expect(model.sessionId).toBe("fresh");
  expect(model.selected).toBeNull();
  expect(model.hint).toBeNull();
  expect(model.optimalFromStart).toBeNull();
  expect(model.busy).toBe(false);
});

test("withState drops stale hint and selection", () => {
  let model = withGame(initialModel(), "s", sampleState());
  model = withHint(model, { move: { vertex: 2, color: 1 }, remaining_opt: 1, optimal: true });
  expect(model.selected).toBe(1);
  model = withState(model, sampleState({ move_count: 1 }));
  expect(model.hint).toBeNull();
  expect(model.selected).toBeNull();
  expect(model.state?.move_count).toBe(1);
});

test("withHint selects the blob containing the hinted vertex", () => {
  const model = withHint(withGame(initialModel(), "s", sampleState()), {
    move: { vertex: 3, color: 1 },
    remaining_opt: 2,
    optimal: false,
  });
  expect(model.selected).toBe(1);
});

test("blobOfVertex finds the owning blob", () => {
  const state = sampleState();
  expect(blobOfVertex(state, 0)).toBe(0);
  expect(blobOfVertex(state, 3)).toBe(1);
  expect(blobOfVertex(state, 9)).toBeNull();
  expect(blobOfVertex(null, 0)).toBeNull();
});

test("canAct requires a live unfinished game and no request in flight", () => {
  expect(canAct(initialModel())).toBe(false);
  const live = withGame(initialModel(), "s", sampleState());
  expect(canAct(live)).toBe(true);
  expect(canAct(withBusy(live, true))).toBe(false);
  expect(canAct(withGame(initialModel(), "s", sampleState({ won: true })))).toBe(false);
});

test("free variant moves come from the selected blob's smallest vertex", () => {
  const model = withGame(initialModel(), "s", sampleState());
  expect(moveVertexFor(model)).toBeNull();
  expect(moveVertexFor(withSelection(model, 1))).toBe(2);
});

test("fixed variant always plays the pivot, selection or not", () => {
  const model = withGame(
    initialModel(),
    "s",
    sampleState({ variant: "fixed", pivot: 2 }),
  );
  expect(moveVertexFor(model)).toBe(2);
  expect(moveVertexFor(withSelection(model, 0))).toBe(2);
});
