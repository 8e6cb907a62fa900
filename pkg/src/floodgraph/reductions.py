"""Certified generators reducing vertex cover to flooding instances.

Both generators take a vertex-cover source graph and emit a flooding
instance whose optimum is a fixed offset plus the source's minimum
cover size.  The caterpillar route chains one 8-vertex gadget per edge
along a shared backbone (offset 3m); the proper-interval route lays
unit intervals on a line, one double interval per edge tied to the
neighboring backbones by color-coded paths (offset m^2).  Certificates
record the offset and the role of every produced color and vertex, and
each generator has a matching witness builder that turns any concrete
vertex cover into a verified move sequence hitting the certified
length, so both reduction directions are executable.

A small exhaustive vertex-cover solver (n <= 20) provides the
independent side of the round trip.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import ColoredGraph, Move
from .errors import BudgetExceededError, InputError, ReductionDomainError
from .intervaldp import IntervalRepresentation


@dataclass(frozen=True)
class VcInstance:
    """Uncolored simple graph serving as a vertex-cover source.

    Edge sequence order is preserved (the produced gadgets follow it);
    each pair is normalized to (low, high).
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges):
        if n < 1:
            raise InputError("source graph needs at least one vertex", field="n")
        norm = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range", field="edges")
            if u == v:
                raise InputError(f"loop at vertex {u}", field="edges")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise InputError(f"duplicate edge {pair}", field="edges")
            seen.add(pair)
            norm.append(pair)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class VertexCover:
    tau: int
    cover: tuple[int, ...]


@dataclass(frozen=True)
class ReductionCertificate:
    """What the produced instance is claimed to encode.

    The certified claim: the flooding optimum of the produced instance
    equals offset plus the source's minimum vertex cover size.
    """

    offset: int
    color_legend: dict[int, str]
    vertex_legend: dict[int, str]

    def as_record(self) -> dict:
        """Plain-data form with string keys, for instance metadata."""
        return {
            "offset": self.offset,
            "color_legend": {str(c): s for c, s in self.color_legend.items()},
            "vertex_legend": {str(v): s for v, s in self.vertex_legend.items()},
        }


def vc_bruteforce(vc: VcInstance, limit: int = 20) -> VertexCover:
    """Minimum vertex cover by exhaustive search, smallest-ids witness."""
    if vc.n > limit:
        raise BudgetExceededError(
            f"vertex cover brute force is capped at {limit} vertices, got {vc.n}"
        )
    for size in range(vc.n + 1):
        for cand in itertools.combinations(range(vc.n), size):
            chosen = set(cand)
            if all(u in chosen or v in chosen for u, v in vc.edges):
                return VertexCover(size, cand)
    raise AssertionError("the full vertex set always covers")


# ---------------------------------------------------------------- caterpillar

_BACKBONE = 1


def _source_color(v: int) -> int:
    return 2 + v


def _link_color(vc: VcInstance, i: int) -> int:
    # sharing link colors between gadgets is unsound: one recoloring of
    # a grown backbone blob then bridges several gadgets' link pairs at
    # once and beats 3m + tau, so every gadget gets its own link color
    return vc.n + 2 + i


def vc_to_caterpillar(vc: VcInstance) -> tuple[ColoredGraph, ReductionCertificate]:
    """Caterpillar whose flooding optimum is 3m + min cover size.

    Edge (u, v) becomes six chained spine vertices plus two hairs: the
    spine runs backbone, link, v, u, link, backbone, with a u-colored
    hair under the v-colored spine vertex and vice versa; consecutive
    gadgets share their backbone endpoints.  Colors: 1 backbone, 2+v
    per source vertex, one fresh link color per gadget; k = n + m + 1.
    Maximum degree is 3.
    """
    m = vc.m
    if m == 0:
        raise ReductionDomainError("caterpillar reduction needs at least one edge")
    spine = 5 * m + 1
    n = spine + 2 * m
    colors = [0] * n
    edges = [(j, j + 1) for j in range(spine - 1)]
    vertex_legend: dict[int, str] = {}
    for j in range(0, spine, 5):
        colors[j] = _BACKBONE
        vertex_legend[j] = f"backbone {j // 5}"
    for i, (u, v) in enumerate(vc.edges):
        base = 5 * i
        h3 = spine + 2 * i
        h4 = spine + 2 * i + 1
        colors[base + 1] = _link_color(vc, i)
        colors[base + 2] = _source_color(v)
        colors[base + 3] = _source_color(u)
        colors[base + 4] = _link_color(vc, i)
        colors[h3] = _source_color(u)
        colors[h4] = _source_color(v)
        edges.append((base + 2, h3))
        edges.append((base + 3, h4))
        vertex_legend[base + 1] = f"gadget {i} left link"
        vertex_legend[base + 2] = f"gadget {i} spine color {v}"
        vertex_legend[base + 3] = f"gadget {i} spine color {u}"
        vertex_legend[base + 4] = f"gadget {i} right link"
        vertex_legend[h3] = f"gadget {i} hair color {u}"
        vertex_legend[h4] = f"gadget {i} hair color {v}"
    color_legend = {_BACKBONE: "backbone"}
    for v in range(vc.n):
        color_legend[_source_color(v)] = f"source vertex {v}"
    for i in range(m):
        color_legend[_link_color(vc, i)] = f"gadget {i} link"
    graph = ColoredGraph(n, vc.n + m + 1, colors, edges)
    cert = ReductionCertificate(3 * m, color_legend, vertex_legend)
    return graph, cert


def caterpillar_cover_witness(vc: VcInstance, cover) -> tuple[Move, ...]:
    """Move sequence of length 3m + |distinct cover picks| from a cover.

    Per gadget: three moves walk one spine vertex through the uncovered
    endpoint's color, the link color, and the backbone color, leaving
    one hair whose color lies in the cover; a final pass recolors the
    joined backbone through each leftover color.
    """
    chosen = set(cover)
    moves = []
    leftovers = set()
    for i, (u, v) in enumerate(vc.edges):
        base = 5 * i
        s = min(chosen & {u, v})
        if s == v:
            anchor, absorb = base + 2, u
        else:
            anchor, absorb = base + 3, v
        moves.append(Move(anchor, _source_color(absorb)))
        moves.append(Move(anchor, _link_color(vc, i)))
        moves.append(Move(anchor, _BACKBONE))
        leftovers.add(_source_color(s))
    moves.extend(Move(0, c) for c in sorted(leftovers))
    return tuple(moves)


# ------------------------------------------------------------ proper interval


def _path_color(vc: VcInstance, i: int, j: int) -> int:
    # edge i (0-based), path position j (1-based, counted from the pair)
    return vc.n + 2 + i * (vc.m - 1) + (j - 1)


def _pair_ids(vc: VcInstance, i: int) -> tuple[int, int]:
    base = i * (2 * vc.m + 1)
    return base + vc.m, base + vc.m + 1


def vc_to_proper_interval(
    vc: VcInstance,
) -> tuple[IntervalRepresentation, ReductionCertificate]:
    """Unit-interval line whose flooding optimum is m^2 + min cover size.

    Layout per edge i, one unit interval per integer position: a
    backbone at 2mi, a color-coded path of m-1 intervals, the edge's
    two identical intervals (endpoint colors) at 2mi+m, the mirrored
    path, and the next backbone at 2m(i+1).  Each edge's two paths
    carry the same fresh color sequence, ascending from the pair, so
    walking either pair interval through it joins both backbones.
    Colors: 1 backbone, 2+v per source vertex, then one per (edge,
    path position); k = n + m(m-1) + 1.
    """
    m = vc.m
    if m < 2:
        raise ReductionDomainError(
            "proper interval reduction needs at least two edges: "
            "single-edge sources leave its connecting paths empty"
        )
    intervals: list[tuple[int, int]] = []
    colors: list[int] = []
    vertex_legend: dict[int, str] = {}

    def put(pos: int, color: int, role: str) -> None:
        vertex_legend[len(intervals)] = role
        intervals.append((pos, pos + 1))
        colors.append(color)

    for i, (u, v) in enumerate(vc.edges):
        start = 2 * m * i
        put(start, _BACKBONE, f"backbone {i}")
        for t in range(1, m):
            put(start + t, _path_color(vc, i, m - t), f"gadget {i} left path {m - t}")
        put(start + m, 2 + u, f"gadget {i} pair color {u}")
        put(start + m, 2 + v, f"gadget {i} pair color {v}")
        for t in range(1, m):
            put(start + m + t, _path_color(vc, i, t), f"gadget {i} right path {t}")
    put(2 * m * m, _BACKBONE, f"backbone {m}")

    k = vc.n + m * (m - 1) + 1
    color_legend = {_BACKBONE: "backbone"}
    for v in range(vc.n):
        color_legend[2 + v] = f"source vertex {v}"
    for i in range(m):
        for j in range(1, m):
            color_legend[_path_color(vc, i, j)] = f"gadget {i} path step {j}"
    rep = IntervalRepresentation(tuple(intervals), tuple(colors), k, 2 * m * m + 1)
    rep.validate()
    assert rep.is_proper()
    cert = ReductionCertificate(m * m, color_legend, vertex_legend)
    return rep, cert


def proper_cover_witness(vc: VcInstance, cover) -> tuple[Move, ...]:
    """Move sequence of length m^2 + |distinct cover picks| from a cover.

    Per edge: walk the uncovered endpoint's pair interval through the
    edge's path colors and the backbone color (m moves), fusing both
    neighboring backbones; then recolor the joined line through each
    leftover endpoint color.
    """
    chosen = set(cover)
    m = vc.m
    moves = []
    leftovers = set()
    for i, (u, v) in enumerate(vc.edges):
        s = min(chosen & {u, v})
        low, high = _pair_ids(vc, i)
        anchor = high if s == u else low
        for j in range(1, m):
            moves.append(Move(anchor, _path_color(vc, i, j)))
        moves.append(Move(anchor, _BACKBONE))
        leftovers.add(2 + s)
    moves.extend(Move(0, c) for c in sorted(leftovers))
    return tuple(moves)
