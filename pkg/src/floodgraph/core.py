"""Game model: colored graphs, moves, states, and solution checking.

A position of the game is a vertex-colored graph.  A *blob* is a maximal
connected set of same-colored vertices.  Playing a move (v, c) recolors
the blob containing v to color c; the blob then coarsens with any
adjacent blobs that already have color c.  In the *free* variant any
vertex may be named; in the *fixed* variant every move must name the
pivot vertex, so only the pivot's blob ever changes color directly.

The state object is immutable: apply_move returns a fresh state and the
original stays valid, which keeps search code and the HTTP session
layer free of aliasing bugs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, VariantViolationError


@dataclass(frozen=True)
class Move:
    """One play: recolor the blob containing ``vertex`` to ``color``."""

    vertex: int
    color: int


@dataclass(frozen=True)
class Variant:
    """Game variant: mode is "free" or "fixed"; fixed pins a pivot vertex."""

    mode: str
    pivot: int | None = None

    def __post_init__(self):
        if self.mode not in ("free", "fixed"):
            raise InputError(f"unknown variant mode {self.mode!r}", field="variant")
        if self.mode == "fixed" and self.pivot is None:
            raise InputError("fixed variant requires a pivot vertex", field="pivot")
        if self.mode == "free" and self.pivot is not None:
            raise InputError("free variant takes no pivot", field="pivot")

    @staticmethod
    def free() -> "Variant":
        return Variant("free")

    @staticmethod
    def fixed(pivot: int) -> "Variant":
        return Variant("fixed", pivot)


class ColoredGraph:
    """Simple connected graph with vertex colors in 1..k.

    Vertices are 0..n-1.  Adjacency is stored as one int bitmask per
    vertex (bit u of adj[v] set iff uv is an edge), which makes blob
    traversals and the packed search fast without extra dependencies.
    """

    __slots__ = ("n", "k", "colors", "edges", "adj")

    def __init__(self, n: int, k: int, colors: Iterable[int], edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise InputError("graph needs at least one vertex", field="n")
        if k < 1:
            raise InputError("color count must be at least 1", field="k")
        colors = tuple(colors)
        if len(colors) != n:
            raise InputError(f"expected {n} colors, got {len(colors)}", field="colors")
        for i, c in enumerate(colors):
            if not isinstance(c, int) or not (1 <= c <= k):
                raise InputError(f"color of vertex {i} is {c!r}, not in 1..{k}", field="colors")

        seen: set[tuple[int, int]] = set()
        adj = [0] * n
        norm: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range", field="edges")
            if u == v:
                raise InputError(f"loop at vertex {u}", field="edges")
            a, b = (u, v) if u < v else (v, u)
            if (a, b) in seen:
                raise InputError(f"duplicate edge ({a}, {b})", field="edges")
            seen.add((a, b))
            norm.append((a, b))
            adj[u] |= 1 << v
            adj[v] |= 1 << u

        self.n = n
        self.k = k
        self.colors = colors
        self.edges = tuple(sorted(norm))
        self.adj = tuple(adj)

        if n > 1:
            reached = self._reachable(0)
            if reached.bit_count() != n:
                missing = next(v for v in range(n) if not (reached >> v) & 1)
                raise InputError(
                    f"graph is disconnected (vertex {missing} unreachable from 0)",
                    field="edges",
                )

    def _reachable(self, start: int) -> int:
        seen = 1 << start
        frontier = seen
        while frontier:
            grow = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                grow |= self.adj[v]
            frontier = grow & ~seen
            seen |= frontier
        return seen

    def neighbors(self, v: int) -> list[int]:
        out = []
        m = self.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            out.append(u)
        return out

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, k={self.k}, edges={len(self.edges)})"


class GameState:
    """Immutable snapshot: base graph, variant, current colors, move history."""

    __slots__ = ("graph", "variant", "colors", "history", "_blob_cache")

    def __init__(
        self,
        graph: ColoredGraph,
        variant: Variant,
        colors: tuple[int, ...] | None = None,
        history: tuple[Move, ...] = (),
    ):
        if variant.mode == "fixed" and not (0 <= variant.pivot < graph.n):
            raise InputError(f"pivot {variant.pivot} out of range", field="pivot")
        self.graph = graph
        self.variant = variant
        self.colors = graph.colors if colors is None else tuple(colors)
        if len(self.colors) != graph.n:
            raise InputError("state color vector has wrong length", field="colors")
        self.history = history
        self._blob_cache: list[frozenset[int]] | None = None

    # -- derived structure -------------------------------------------------

    def blob_of(self, v: int) -> frozenset[int]:
        """Maximal same-colored connected set containing v."""
        col = self.colors[v]
        adj = self.graph.adj
        seen = 1 << v
        queue = deque([v])
        while queue:
            u = queue.popleft()
            m = adj[u] & ~seen
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if self.colors[w] == col:
                    seen |= 1 << w
                    queue.append(w)
        return frozenset(_bits(seen))

    def blobs(self) -> list[frozenset[int]]:
        """All blobs, ordered by their smallest vertex id."""
        if self._blob_cache is None:
            out: list[frozenset[int]] = []
            assigned = 0
            for v in range(self.graph.n):
                if (assigned >> v) & 1:
                    continue
                blob = self.blob_of(v)
                for u in blob:
                    assigned |= 1 << u
                out.append(blob)
            self._blob_cache = out
        return self._blob_cache

    def distinct_colors(self) -> int:
        return len(set(self.colors))

    @property
    def won(self) -> bool:
        return self.distinct_colors() == 1

    def __repr__(self) -> str:
        return f"GameState(n={self.graph.n}, moves={len(self.history)}, won={self.won})"


def _bits(mask: int) -> Iterable[int]:
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        yield v


def flood_neighborhood(state: GameState, v: int, c: int) -> frozenset[int]:
    """Color-c territory the blob of v touches.

    If v already has color c this is simply v's blob.  Otherwise it is
    the union of all color-c blobs adjacent to v's blob: exactly the
    vertices that coarsen into v's blob when move (v, c) is played.
    Empty when no adjacent vertex has color c.
    """
    graph = state.graph
    if not (0 <= v < graph.n):
        raise InputError(f"vertex {v} out of range", field="vertex")
    if not (1 <= c <= graph.k):
        raise InputError(f"color {c} out of range 1..{graph.k}", field="color")
    if state.colors[v] == c:
        return state.blob_of(v)
    blob = state.blob_of(v)
    fringe = 0
    for u in blob:
        fringe |= graph.adj[u]
    result: set[int] = set()
    for u in _bits(fringe):
        if state.colors[u] == c and u not in result:
            result |= state.blob_of(u)
    return frozenset(result)


def apply_move(state: GameState, move: Move) -> GameState:
    """Play one move, returning the successor state.

    Raises VariantViolationError when a fixed-pivot game names any other
    vertex, and InputError for out-of-range vertex or color.  Recoloring
    a blob to its own color is legal and leaves the coloring unchanged
    (the move still appends to history).
    """
    graph = state.graph
    if not (0 <= move.vertex < graph.n):
        raise InputError(f"vertex {move.vertex} out of range", field="vertex")
    if not (1 <= move.color <= graph.k):
        raise InputError(f"color {move.color} out of range 1..{graph.k}", field="color")
    if state.variant.mode == "fixed" and move.vertex != state.variant.pivot:
        raise VariantViolationError(
            f"fixed variant: move must name pivot {state.variant.pivot}, got {move.vertex}",
            move_index=len(state.history),
        )
    blob = state.blob_of(move.vertex)
    colors = list(state.colors)
    for u in blob:
        colors[u] = move.color
    return GameState(graph, state.variant, tuple(colors), state.history + (move,))


def bounds(state: GameState) -> tuple[int, int]:
    """(lower, upper) bounds on remaining optimal moves.

    Lower: a move can remove at most one color from the set present, so
    at least distinct-1 moves remain.  Upper: repeatedly absorbing a
    neighbor blob into one growing blob wins in blobs-1 moves.
    """
    return state.distinct_colors() - 1, len(state.blobs()) - 1


def contract(state: GameState) -> tuple[ColoredGraph, list[int]]:
    """Quotient graph of blobs plus the vertex -> blob-id map.

    Blob ids follow ascending smallest-vertex order, so the quotient is
    deterministic for a given state.
    """
    blobs = state.blobs()
    qid = [0] * state.graph.n
    qcolors = []
    for i, blob in enumerate(blobs):
        for v in blob:
            qid[v] = i
        qcolors.append(state.colors[min(blob)])
    qedges: set[tuple[int, int]] = set()
    for u, v in state.graph.edges:
        a, b = qid[u], qid[v]
        if a != b:
            qedges.add((a, b) if a < b else (b, a))
    quotient = ColoredGraph(len(blobs), state.graph.k, qcolors, sorted(qedges))
    return quotient, qid


@dataclass(frozen=True)
class VerifyResult:
    """Outcome of replaying a claimed solution; see verify_solution."""

    valid: bool
    length: int
    final_color: int | None
    first_violation: int | None
    reason: str | None


def verify_solution(
    graph: ColoredGraph, variant: Variant, moves: Iterable[Move]
) -> VerifyResult:
    """Replay moves from the initial coloring and report the outcome.

    Never raises: malformed or variant-violating moves are reported via
    first_violation (index of the offending move) and reason.  valid is
    True only when every move replays cleanly and the final coloring is
    monochromatic.
    """
    moves = list(moves)
    state = GameState(graph, variant)
    for i, move in enumerate(moves):
        try:
            state = apply_move(state, move)
        except (InputError, VariantViolationError) as exc:
            return VerifyResult(
                valid=False,
                length=len(moves),
                final_color=None,
                first_violation=i,
                reason=str(exc),
            )
    if state.won:
        return VerifyResult(
            valid=True,
            length=len(moves),
            final_color=state.colors[0],
            first_violation=None,
            reason=None,
        )
    return VerifyResult(
        valid=False,
        length=len(moves),
        final_color=None,
        first_violation=None,
        reason=f"final coloring has {state.distinct_colors()} colors, not 1",
    )
