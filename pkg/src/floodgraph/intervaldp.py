"""Flood solver for proper interval graphs.

Pipeline: build a compact integer-endpoint representation from an
umbrella order, sample it at integer and half-integer points into a
path of color sets, then run a dynamic program over (range, color,
color-subset) cells.  f(l, r, c, S) is the cheapest way to make color c
appear at every position in [l, r] while only colors from S (plus c)
survive there; the game optimum is min over (c, S) of
f(0, end, c, S) + |S|, the +|S| paying one cleanup move per leftover
color once the c-colored region spans the whole board.

The subset-minimization inside the recurrence collapses to evaluating
the full budget mask only: enlarging S never hurts (monotonicity), so
the minimum over submask pairs is attained at the top.  A literal
submask-enumerating reference lives in the test suite and is asserted
equal on small instances.

Witness reconstruction backtracks the table into per-position cell
fixes and range merges, anchors each at a concrete vertex through the
sampled vertex sets, appends the cleanup moves, and replays the lot;
any mismatch against the claimed optimum raises WitnessGapError rather
than returning a wrong witness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ColoredGraph, GameState, Move, Variant, apply_move
from .errors import CapacityError, InputError, NotInClassError, WitnessGapError
from .oracle import SearchBudget, Solution, solve_exact
from .recognition import umbrella_order

_INF = 255
_MAX_COLORS = 24
_MEMORY_BUDGET = 1_200_000_000  # bytes of DP table the fill may allocate


@dataclass(frozen=True)
class IntervalRepresentation:
    """Integer-endpoint intervals, one per vertex, plus vertex colors.

    Compact: endpoints lie in [0..span], every integer point hosts an
    endpoint, and consecutive point neighborhoods differ.  Proper means
    no interval properly contains another (equal intervals are fine).
    """

    intervals: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]
    k: int
    span: int

    def covering(self, where: float) -> frozenset[int]:
        """Vertices whose interval covers the (half-)integer point."""
        return frozenset(
            v for v, (lo, hi) in enumerate(self.intervals) if lo <= where and hi >= where
        )

    def validate(self) -> None:
        n = len(self.intervals)
        if n == 0:
            raise InputError("empty representation", field="intervals")
        if len(self.colors) != n:
            raise InputError("one color per interval required", field="colors")
        events = set()
        for lo, hi in self.intervals:
            if not (isinstance(lo, int) and isinstance(hi, int)):
                raise InputError("endpoints must be integers", field="intervals")
            if not 0 <= lo <= hi <= self.span:
                raise InputError(
                    f"interval [{lo},{hi}] outside [0..{self.span}]", field="intervals"
                )
            events.add(lo)
            events.add(hi)
        if self.span > max(0, 2 * n - 1):
            raise InputError("span exceeds the compact limit", field="intervals")
        for p in range(self.span + 1):
            if p not in events:
                raise InputError(f"no endpoint at point {p}", field="intervals")
            if not self.covering(p):
                raise InputError(f"no interval covers point {p}", field="intervals")
        for p in range(self.span):
            if self.covering(p) == self.covering(p + 1):
                raise InputError(
                    f"points {p} and {p + 1} have identical neighborhoods",
                    field="intervals",
                )
            if not (self.covering(p) & self.covering(p + 1)):
                raise InputError("representation is disconnected", field="intervals")

    def is_proper(self) -> bool:
        ivs = self.intervals
        return not any(
            (a[0] < b[0] and b[1] < a[1]) or (b[0] < a[0] and a[1] < b[1])
            for i, a in enumerate(ivs)
            for b in ivs[i + 1:]
        )

    def to_graph(self) -> ColoredGraph:
        """Colored intersection graph of the intervals."""
        n = len(self.intervals)
        return ColoredGraph(n, self.k, self.colors, _intersection_edges(self.intervals))


@dataclass(frozen=True)
class ColorSetPath:
    """Sampled color sets plus the vertex sets they came from.

    Position 2p samples integer point p, position 2p+1 the open unit
    gap after it; builders from other substrates (tree sections) use
    the same shape.  vertex_sets anchor witness moves at real vertices.
    """

    sets: tuple[frozenset[int], ...]
    vertex_sets: tuple[frozenset[int], ...]
    k: int

    def __post_init__(self):
        if not self.sets or len(self.sets) != len(self.vertex_sets):
            raise InputError("malformed color-set path", field="sets")
        for i, s in enumerate(self.sets):
            if not s:
                raise InputError(f"empty color set at position {i}", field="sets")

    def reversed_path(self) -> "ColorSetPath":
        return ColorSetPath(self.sets[::-1], self.vertex_sets[::-1], self.k)


def build_representation(g: ColoredGraph) -> IntervalRepresentation:
    """Compact proper representation of g, canonical up to nothing.

    The umbrella order (verified, never trusted) is turned into an
    endpoint event walk: position i emits the left endpoint of the i-th
    vertex, then the right endpoints of every vertex whose neighborhood
    ends at i.  Coordinates only stand still between a left endpoint
    and an immediately following right endpoint, which yields touching
    intervals exactly for adjacent vertices.  Of the two orientations
    the one with the lexicographically smaller interval list wins.
    """
    ok, result = umbrella_order(g.n, g.adj)
    if not ok:
        kind, witness = result
        raise NotInClassError(
            f"not a proper interval graph: {kind} at {witness}", kind, witness
        )
    order = result
    candidates = []
    for direction in (order, order[::-1]):
        candidates.append(_intervals_from_umbrella(g, direction))
    intervals = min(candidates)
    span = max(hi for _, hi in intervals)
    rep = IntervalRepresentation(tuple(intervals), g.colors, g.k, span)
    rep.validate()
    assert rep.is_proper()
    assert _intersection_edges(intervals) == g.edges
    return rep


def _intervals_from_umbrella(g: ColoredGraph, order: list[int]) -> list[tuple[int, int]]:
    n = g.n
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    reach = [max([pos[w] for w in g.neighbors(order[i])] + [i]) for i in range(n)]
    ends: dict[int, list[int]] = {}
    for i in range(n):
        ends.setdefault(reach[i], []).append(i)
    lo = [0] * n
    hi = [0] * n
    coord = 0
    prev_left = False
    first = True
    for i in range(n):
        if not first:
            coord += 1
        first = False
        lo[i] = coord
        prev_left = True
        for j in sorted(ends.get(i, ())):
            if not prev_left:
                coord += 1
            hi[j] = coord
            prev_left = False
    out = [(0, 0)] * n
    for i, v in enumerate(order):
        out[v] = (lo[i], hi[i])
    return out


def _intersection_edges(intervals) -> tuple:
    n = len(intervals)
    return tuple(
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if intervals[u][0] <= intervals[v][1] and intervals[v][0] <= intervals[u][1]
    )


def build_colorset_path(rep: IntervalRepresentation) -> ColorSetPath:
    """Sample the representation at 0, 0.5, ..., span."""
    vsets = []
    for p in range(rep.span + 1):
        vsets.append(rep.covering(p))
        if p < rep.span:
            vsets.append(
                frozenset(
                    v
                    for v, (lo, hi) in enumerate(rep.intervals)
                    if lo <= p and hi >= p + 1
                )
            )
    csets = [frozenset(rep.colors[v] for v in vs) for vs in vsets]
    return ColorSetPath(tuple(csets), tuple(vsets), rep.k)


# -- the dynamic program --------------------------------------------------------


@dataclass
class DpTable:
    """Filled f-table plus the ingredients reconstruction needs."""

    k: int
    q: int
    f: np.ndarray  # (q, q, k, 2^k) uint8, diagonal and upper triangle valid
    cell_masks: np.ndarray  # (q,) original per-position color bitmasks


@dataclass(frozen=True)
class DpResult:
    opt: int
    table: DpTable
    best: tuple[int, frozenset[int]]  # dominating color id, leftover color ids


def dp_solve(path: ColorSetPath, k: int) -> DpResult:
    """Optimal move count for a color-set path with k colors.

    Ties among optimal (c, S) pairs go to the smallest color id, then
    the smallest leftover mask read as an integer.
    """
    if k < 1:
        raise InputError("k must be positive", field="k")
    masks = np.array([_mask_of(s) for s in path.sets], dtype=np.int64)[None, :]
    f = _dp_fill(masks, k)[0]
    q = len(path.sets)
    pc = _popcounts(k)
    top = f[0, q - 1].astype(np.int16) + pc[None, :]
    flat = int(np.argmin(top))
    c_bit, s_mask = divmod(flat, 1 << k)
    opt = int(top.reshape(-1)[flat])
    table = DpTable(k=k, q=q, f=f, cell_masks=masks[0])
    best = (c_bit + 1, frozenset(_color_ids(s_mask)))
    return DpResult(opt, table, best)


def dp_solve_values(cell_masks: np.ndarray, k: int) -> np.ndarray:
    """Optimal values for a batch of colorings sharing one position grid.

    cell_masks is (batch, q) of per-position color bitmasks; returns a
    (batch,) int array.  Witness-free and fully vectorized, built for
    exhaustive sweeps.
    """
    f = _dp_fill(np.asarray(cell_masks, dtype=np.int64), k)
    q = cell_masks.shape[1]
    pc = _popcounts(k)
    top = f[:, 0, q - 1].astype(np.int16) + pc[None, None, :]
    return top.reshape(top.shape[0], -1).min(axis=1).astype(np.int64)


def _mask_of(color_set) -> int:
    m = 0
    for c in color_set:
        m |= 1 << (c - 1)
    return m


def _color_ids(mask: int):
    while mask:
        c = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        yield c + 1


def _popcounts(k: int) -> np.ndarray:
    out = np.zeros(1 << k, dtype=np.int16)
    for j in range(k):
        out += (np.arange(1 << k) >> j) & 1
    return out


def _base_costs(masks: np.ndarray, k: int) -> np.ndarray:
    """(B, q, k, 2^k) single-position costs.

    0 when c is present and nothing at the position falls outside
    S + c; 1 when one recoloring fixes the position (either c is
    missing, or exactly one foreign color must go); impossible when two
    or more foreign colors would each need their own move here.
    """
    pc_all = _popcounts(k).astype(np.uint8)
    bits = (1 << np.arange(k, dtype=np.int64))[None, None, :, None]
    s_ax = np.arange(1 << k, dtype=np.int64)[None, None, None, :]
    cm = masks[:, :, None, None]
    bad = cm & ~(s_ax | bits)
    has = (cm & bits) != 0
    bc = pc_all[bad]
    return np.where(has & (bc == 0), 0, np.where(bc <= 1, 1, _INF)).astype(np.uint8)


def _dp_fill(masks: np.ndarray, k: int) -> np.ndarray:
    """Fill f for every coloring row in masks; returns (B,q,q,k,2^k)."""
    if k > _MAX_COLORS:
        raise CapacityError(f"{k} colors exceed the {_MAX_COLORS}-color table limit")
    b, q = masks.shape
    ns = 1 << k
    need = b * q * q * ns * (k + 3)
    if need > _MEMORY_BUDGET:
        raise CapacityError(
            f"table would need ~{need // 1_000_000} MB "
            f"(batch {b}, {q} positions, {k} colors)"
        )
    base = _base_costs(masks, k)
    f = np.full((b, q, q, k, ns), _INF, dtype=np.uint8)
    diag = np.arange(q)
    f[:, diag, diag] = base
    hmin = np.full((b, q, q, ns), _INF, dtype=np.uint8)
    hsec = np.full((b, q, q, ns), _INF, dtype=np.uint8)
    harg = np.zeros((b, q, q, ns), dtype=np.uint8)
    _update_h(f, hmin, hsec, harg, diag, diag, k)
    orx = (np.arange(ns, dtype=np.intp)[None, :] | (1 << np.arange(k, dtype=np.intp))[:, None])
    orx_b = orx[None, None, None]
    c_ax = np.arange(k, dtype=np.uint8)[None, None, None, :, None]
    chunk = max(1, 8_000_000 // max(1, b * (q // 2 + 1) * k * ns))
    for span in range(1, q):
        ls = np.arange(q - span)
        rs = ls + span
        acc = None
        for t0 in range(1, span + 1, chunk):
            ts = np.arange(t0, min(t0 + chunk, span + 1))
            lcell = ls[:, None] + ts[None, :] - 1
            rstart = ls[:, None] + ts[None, :]
            lt = f[:, ls[:, None], lcell].astype(np.int16)
            rt = f[:, rstart, rs[:, None]].astype(np.int16)
            cand = (lt + rt).min(axis=2)
            ltm = np.take_along_axis(lt, orx_b, axis=-1)
            rtm = np.take_along_axis(rt, orx_b, axis=-1)
            exc_r = _exclusion(hmin, hsec, harg, rstart, rs[:, None], orx, c_ax)
            exc_l = _exclusion(hmin, hsec, harg, ls[:, None], lcell, orx, c_ax)
            cand = np.minimum(cand, (ltm + exc_r + 1).min(axis=2))
            cand = np.minimum(cand, (exc_l + rtm + 1).min(axis=2))
            acc = cand if acc is None else np.minimum(acc, cand)
        f[:, ls, rs] = np.minimum(acc, _INF).astype(np.uint8)
        _update_h(f, hmin, hsec, harg, ls, rs, k)
    return f


def _exclusion(hmin, hsec, harg, rows, cols, orx, c_ax):
    """min over colors other than c of f[rows, cols, :, S|c]."""
    mg = hmin[:, rows, cols][..., orx].astype(np.int16)
    sg = hsec[:, rows, cols][..., orx].astype(np.int16)
    ag = harg[:, rows, cols][..., orx]
    return np.where(ag == c_ax, sg, mg)


def _update_h(f, hmin, hsec, harg, ls, rs, k):
    cells = f[:, ls, rs]
    if k == 1:
        hmin[:, ls, rs] = cells[..., 0, :]
        hsec[:, ls, rs] = _INF
        harg[:, ls, rs] = 0
        return
    part = np.partition(cells, 1, axis=-2)
    hmin[:, ls, rs] = part[..., 0, :]
    hsec[:, ls, rs] = part[..., 1, :]
    harg[:, ls, rs] = np.argmin(cells, axis=-2).astype(np.uint8)


# -- witness reconstruction -----------------------------------------------------


def reconstruct_witness(
    table: DpTable,
    path: ColorSetPath,
    best: tuple[int, frozenset[int]],
    graph: ColoredGraph,
    leftover_rank=None,
    claimed: int | None = None,
) -> tuple[Move, ...]:
    """Turn a filled table into a verified move list.

    Backtracks the producing split of every cell (ties: smallest split
    point, then smallest introduced color with the right-side case
    first, same-color split last), anchors the abstract operations at
    vertices through the path's vertex sets, appends one cleanup move
    per leftover color (ordered by leftover_rank, color id by default),
    and replays everything.  Raises WitnessGapError if the replay does
    not reach a monochrome state in exactly the claimed move count.
    """
    c_star, leftovers = best
    f = table.f
    k = table.k
    q = table.q
    s_star = _mask_of(leftovers)
    claimed = int(f[0, q - 1, c_star - 1, s_star]) + len(leftovers) if claimed is None else claimed
    ops: list[tuple] = []

    def bt(l, r, c_bit, s_mask):
        val = int(f[l, r, c_bit, s_mask])
        if l == r:
            if val:
                ops.append(("cell", l, c_bit + 1, s_mask | (1 << c_bit)))
            return
        m = s_mask | (1 << c_bit)
        for i in range(l + 1, r + 1):
            la = int(f[l, i - 1, c_bit, m])
            rc = int(f[i, r, c_bit, m])
            for cp in range(k):
                if cp == c_bit:
                    continue
                if la + int(f[i, r, cp, m]) + 1 == val:
                    bt(l, i - 1, c_bit, m)
                    bt(i, r, cp, m)
                    ops.append(("merge", i, r, cp + 1, c_bit + 1))
                    return
                if int(f[l, i - 1, cp, m]) + 1 + rc == val:
                    bt(l, i - 1, cp, m)
                    bt(i, r, c_bit, m)
                    ops.append(("merge", l, i - 1, cp + 1, c_bit + 1))
                    return
            if int(f[l, i - 1, c_bit, s_mask]) + int(f[i, r, c_bit, s_mask]) == val:
                bt(l, i - 1, c_bit, s_mask)
                bt(i, r, c_bit, s_mask)
                return
        raise AssertionError(f"no split reproduces f[{l},{r}] = {val}")

    bt(0, q - 1, c_star - 1, s_star)

    rank = leftover_rank or (lambda c: c)
    cleanup = sorted(leftovers, key=lambda c: (rank(c), c))
    state = GameState(graph, Variant.free())
    moves: list[Move] = []

    def play(v, c):
        nonlocal state
        state = apply_move(state, Move(v, c))
        moves.append(Move(v, c))

    for op in ops:
        if op[0] == "cell":
            _, pos, target, budget = op
            here = {state.colors[v] for v in path.vertex_sets[pos]}
            bad = {c for c in here if not (budget >> (c - 1)) & 1}
            if bad:
                source = min(bad)
            elif target not in here:
                source = min(here - {target})
            else:
                continue
            v = min(u for u in path.vertex_sets[pos] if state.colors[u] == source)
            play(v, target)
        else:
            _, lo, hi, source, target = op
            spot = next(
                (
                    min(u for u in path.vertex_sets[p] if state.colors[u] == source)
                    for p in range(lo, hi + 1)
                    if any(state.colors[u] == source for u in path.vertex_sets[p])
                ),
                None,
            )
            if spot is not None:
                play(spot, target)

    anchor = c_star
    for x in cleanup:
        if x in state.colors:
            v = min(u for u in range(graph.n) if state.colors[u] == anchor)
            play(v, x)
            anchor = x

    if not state.won or len(moves) != claimed:
        raise WitnessGapError(
            f"replay yielded {len(moves)} moves (won={state.won}), claimed {claimed}",
            claimed,
            prefix=list(moves),
            reference=_oracle_reference(graph),
        )
    return tuple(moves)


def reconstruct_best_witness(
    res: DpResult,
    path: ColorSetPath,
    graph: ColoredGraph,
    leftover_rank=None,
) -> tuple[Move, ...]:
    """Witness from the first replayable optimal (color, survivors) pair.

    Distinct optimal table entries can encode genuinely different plans,
    and on paths whose positions are not cliques a plan may rely on a
    single move fixing a position whose foreign color is split across
    several blobs there.  Walking the tied candidates in (color, mask)
    order and keeping the first that replays stays deterministic and
    only raises WitnessGapError when no optimal entry is realizable.
    """
    pc = _popcounts(res.table.k)
    vals = res.table.f[0, res.table.q - 1].astype(np.int16) + pc[None, :]
    assert int(vals.min()) == res.opt
    failure: WitnessGapError | None = None
    for c_bit in range(res.table.k):
        for s_mask in range(1 << res.table.k):
            if int(vals[c_bit, s_mask]) != res.opt:
                continue
            best = (c_bit + 1, frozenset(_color_ids(s_mask)))
            try:
                return reconstruct_witness(
                    res.table, path, best, graph, leftover_rank, claimed=res.opt
                )
            except WitnessGapError as exc:
                failure = exc
    assert failure is not None
    raise failure


def _oracle_reference(graph: ColoredGraph) -> int | None:
    try:
        return solve_exact(
            graph, Variant.free(), SearchBudget(max_states=200_000, time_limit=5.0)
        ).value
    except Exception:
        return None


def solve_proper_interval(g: ColoredGraph) -> Solution:
    """Exact free-variant optimum and witness for a proper interval graph."""
    rep = build_representation(g)
    cpath = build_colorset_path(rep)
    res = dp_solve(cpath, g.k)
    moves = reconstruct_best_witness(res, cpath, g)
    return Solution(res.opt, moves)
