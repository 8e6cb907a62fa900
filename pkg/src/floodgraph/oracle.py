"""Exact search engines for flooding games.

Two routes, deliberately independent of the structured solvers:

- solve_exact / solve_exact_from: breadth-first search over colorings.
  Returns an optimal move list (witness) or raises BudgetExceededError;
  it never returns a possibly-wrong value.  Works for both variants.
- opt_table: optimal values for *every* coloring of one small graph at
  once (free variant), fully vectorized.  Exhaustive verification over
  thousands of colorings of the same graph amortizes to milliseconds.

Moves are enumerated per blob through the blob's smallest vertex id
(fixed variant: through the pivot), and only to colors present in the
current state; recoloring a blob to its own color is never emitted.
Absent target colors cannot merge anything now and anything they enable
later is available later at the same cost, so the restriction preserves
optimal values.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .core import ColoredGraph, GameState, Move, Variant
from .errors import BudgetExceededError, CapacityError, InputError

_INF = 255


@dataclass(frozen=True)
class SearchBudget:
    """Hard limits for solve_exact; exceeding any raises, never degrades."""

    max_states: int = 2_000_000
    max_depth: int = 64
    time_limit: float = 60.0


@dataclass(frozen=True)
class Solution:
    """Solver outcome: optimal move count plus one witnessing move list."""

    value: int
    moves: tuple[Move, ...]
    optimal: bool = True


def _blob_masks(adj: tuple[int, ...], n: int, colors: tuple[int, ...]) -> list[tuple[int, int]]:
    """(smallest-vertex-id, bitmask) per blob, ascending by id."""
    out = []
    assigned = 0
    for v in range(n):
        if (assigned >> v) & 1:
            continue
        col = colors[v]
        mask = 1 << v
        stack = [v]
        while stack:
            u = stack.pop()
            m = adj[u] & ~mask
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if colors[w] == col:
                    mask |= 1 << w
                    stack.append(w)
        assigned |= mask
        out.append((v, mask))
    return out


def _successors(graph: ColoredGraph, variant: Variant, colors: tuple[int, ...]):
    """Yield (move, successor-coloring) in deterministic (vertex, color) order."""
    present = sorted(set(colors))
    if variant.mode == "fixed":
        p = variant.pivot
        blobs = [(p, _pivot_blob(graph, colors, p))]
    else:
        blobs = _blob_masks(graph.adj, graph.n, colors)
    for rep, mask in blobs:
        col = colors[rep]
        for c in present:
            if c == col:
                continue
            succ = tuple(
                c if (mask >> v) & 1 else colors[v] for v in range(graph.n)
            )
            yield Move(rep, c), succ


def _pivot_blob(graph: ColoredGraph, colors: tuple[int, ...], p: int) -> int:
    col = colors[p]
    mask = 1 << p
    stack = [p]
    while stack:
        u = stack.pop()
        m = graph.adj[u] & ~mask
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if colors[w] == col:
                mask |= 1 << w
                stack.append(w)
    return mask


def solve_exact(
    graph: ColoredGraph, variant: Variant, budget: SearchBudget | None = None
) -> Solution:
    """Optimal move count and witness from the initial coloring."""
    return solve_exact_from(GameState(graph, variant), budget)


def solve_exact_from(state: GameState, budget: SearchBudget | None = None) -> Solution:
    """Optimal move count and witness from an arbitrary state.

    Breadth-first over reachable colorings, so the first goal dequeued
    is optimal and (by in-order expansion) its move list is the
    lexicographically least optimal sequence under (vertex, color)
    ordering.  Raises BudgetExceededError when max_states, max_depth,
    or time_limit is hit.
    """
    budget = budget or SearchBudget()
    graph, variant = state.graph, state.variant
    start = state.colors
    if len(set(start)) == 1:
        return Solution(0, ())
    deadline = time.monotonic() + budget.time_limit
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], Move] | None] = {start: None}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        if depth > budget.max_depth:
            raise BudgetExceededError(f"no solution within depth {budget.max_depth}")
        nxt: list[tuple[int, ...]] = []
        for cur in frontier:
            if time.monotonic() > deadline:
                raise BudgetExceededError(f"time limit {budget.time_limit}s exceeded")
            for move, succ in _successors(graph, variant, cur):
                if succ in parent:
                    continue
                parent[succ] = (cur, move)
                if len(parent) > budget.max_states:
                    raise BudgetExceededError(f"state budget {budget.max_states} exceeded")
                if len(set(succ)) == 1:
                    moves = []
                    node = succ
                    while parent[node] is not None:
                        node, mv = parent[node][0], parent[node][1]
                        moves.append(mv)
                    moves.reverse()
                    return Solution(depth, tuple(moves))
                nxt.append(succ)
        frontier = nxt
    raise AssertionError("connected graph must be floodable")


@dataclass(frozen=True)
class Hint:
    """Suggested next move.

    remaining_opt is the exact number of moves still needed when optimal
    is True; otherwise it is a lower-bound estimate (1 + the successor's
    distinct-color bound).
    """

    move: Move
    remaining_opt: int
    optimal: bool


def hint(state: GameState, budget: SearchBudget | None = None) -> Hint:
    """Best next move from state.

    With enough budget: the first move of the lexicographically least
    optimal continuation plus the exact remaining move count.  When the
    budget runs out the hint degrades to the move whose successor has
    the smallest distinct-color lower bound (ties: smallest blob id,
    then smallest color) and is flagged non-optimal.
    """
    if state.won:
        raise InputError("game is already won; no hint available")
    try:
        sol = solve_exact_from(state, budget)
        return Hint(sol.moves[0], sol.value, True)
    except BudgetExceededError:
        pass
    best = None
    for move, succ in _successors(state.graph, state.variant, state.colors):
        lower = len(set(succ)) - 1
        key = (lower, move.vertex, move.color)
        if best is None or key < best[0]:
            best = (key, move, lower)
    assert best is not None
    return Hint(best[1], best[2] + 1, False)


def pack_coloring(colors, k: int) -> int:
    """Index of a coloring in opt_table order (vertex 0 = least digit)."""
    idx = 0
    for v, c in enumerate(colors):
        idx += (c - 1) * k**v
    return idx


def opt_table(graph: ColoredGraph, k: int | None = None, max_states: int = 4_000_000) -> np.ndarray:
    """Free-variant optimal values for every coloring of one graph.

    Entry pack_coloring(colors, k) holds the optimal move count for that
    coloring.  Builds the full move graph over all k**n colorings, then
    runs a level-by-level backward sweep from the monochromatic states,
    all in vectorized array ops.  Intended for graphs where k**n is a
    few million at most; larger requests raise CapacityError.
    """
    k = graph.k if k is None else k
    n = graph.n
    total = k**n
    if total > max_states:
        raise CapacityError(f"coloring table of {total} states exceeds cap {max_states}")

    ids = np.arange(total, dtype=np.int64)
    colorings = np.empty((total, n), dtype=np.int8)
    for v in range(n):
        colorings[:, v] = (ids // k**v) % k

    # smallest-vertex label per same-color component, by propagation to fixpoint
    labels = np.tile(np.arange(n, dtype=np.int8), (total, 1))
    while True:
        changed = False
        for u, v in graph.edges:
            same = colorings[:, u] == colorings[:, v]
            if not same.any():
                continue
            lo = np.minimum(labels[same, u], labels[same, v])
            if (labels[same, u] != lo).any():
                labels[same, u] = lo
                changed = True
            if (labels[same, v] != lo).any():
                labels[same, v] = lo
                changed = True
        if not changed:
            break

    present = np.zeros((total, k), dtype=bool)
    for c in range(k):
        present[:, c] = (colorings == c).any(axis=1)

    powers = np.array([k**v for v in range(n)], dtype=np.int64)
    src_parts = []
    dst_parts = []
    for v in range(n):
        is_rep = labels[:, v] == np.int8(v)
        for c in range(k):
            mask = is_rep & (colorings[:, v] != c) & present[:, c]
            idx = np.nonzero(mask)[0]
            if idx.size == 0:
                continue
            blob = labels[idx] == np.int8(v)
            succ = np.where(blob, np.int8(c), colorings[idx])
            src_parts.append(idx)
            dst_parts.append(succ.astype(np.int64) @ powers)

    dist = np.full(total, _INF, dtype=np.uint8)
    mono = (colorings == colorings[:, :1]).all(axis=1)
    dist[mono] = 0
    if src_parts:
        src = np.concatenate(src_parts)
        dst = np.concatenate(dst_parts)
        level = 0
        while True:
            hits = src[dist[dst] == level]
            fresh = hits[dist[hits] == _INF]
            if fresh.size == 0:
                break
            dist[fresh] = level + 1
            level += 1
    assert (dist < _INF).all(), "every coloring of a connected graph is floodable"
    return dist
