"""Instance documents: JSON parsing, emission, and seeded generators.

An instance is one JSON object with keys in the fixed order variant,
pivot, k, colors, edges, intervals, meta; absent optional keys are
omitted.  Vertex ids are 0-based dense integers and the vertex count
is the length of colors.  Parsing validates everything the game model
assumes (connectivity included) and, when intervals are present, that
their intersection graph is exactly the edge list.  Emission uses
2-space indentation so generated goldens are byte-stable; the file
extension used by the tooling is .flood.json.

Random generation is seeded with a tiny embedded SplitMix64 stream so
identical (kind, n, k, seed) inputs give byte-identical documents on
any platform or interpreter version; the PRNG is named in meta.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import ColoredGraph, Variant
from .errors import InputError
from .intervaldp import _intersection_edges
from .recognition import interval_or_witness, split_or_witness

_DOC_KEYS = ("variant", "pivot", "k", "colors", "edges", "intervals", "meta")
_KINDS = ("proper_interval", "interval", "caterpillar", "split", "path")


@dataclass(frozen=True, eq=True)
class InstanceDocument:
    """Validated in-memory form of one instance file."""

    variant: str
    pivot: int | None
    k: int
    colors: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    intervals: tuple[tuple[int, int], ...] | None = None
    meta: dict | None = None

    @property
    def n(self) -> int:
        return len(self.colors)

    def to_game(self) -> tuple[ColoredGraph, Variant]:
        graph = ColoredGraph(self.n, self.k, self.colors, self.edges)
        var = Variant.free() if self.variant == "free" else Variant.fixed(self.pivot)
        return graph, var

    @staticmethod
    def from_graph(
        graph: ColoredGraph,
        variant: Variant | None = None,
        intervals=None,
        meta: dict | None = None,
    ) -> "InstanceDocument":
        var = variant or Variant.free()
        return InstanceDocument(
            var.mode,
            var.pivot,
            graph.k,
            graph.colors,
            graph.edges,
            None if intervals is None else tuple(map(tuple, intervals)),
            meta,
        )


def parse(text: str) -> InstanceDocument:
    """Parse and fully validate one instance document."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise InputError("instance document must be a JSON object")
    unknown = set(obj) - set(_DOC_KEYS)
    if unknown:
        raise InputError(f"unknown keys: {sorted(unknown)}", field=sorted(unknown)[0])

    variant = obj.get("variant")
    if variant not in ("free", "fixed"):
        raise InputError(f"variant must be free or fixed, got {variant!r}", field="variant")
    pivot = obj.get("pivot")
    if pivot is not None and not isinstance(pivot, int):
        raise InputError("pivot must be an integer vertex id", field="pivot")
    Variant(variant, pivot)  # enforces the variant/pivot pairing

    k = obj.get("k")
    if not isinstance(k, int):
        raise InputError("k must be an integer", field="k")
    colors = obj.get("colors")
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise InputError("colors must be an array of integers", field="colors")
    edges = obj.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("edges must be an array of [u, v] pairs", field="edges")
    pairs = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise InputError(f"edge {e!r} is not a pair of integers", field="edges")
        pairs.append((e[0], e[1]))

    graph = ColoredGraph(len(colors), k, colors, pairs)
    if pivot is not None and not 0 <= pivot < graph.n:
        raise InputError(f"pivot {pivot} out of range", field="pivot")

    intervals = obj.get("intervals")
    if intervals is not None:
        if not isinstance(intervals, list) or len(intervals) != graph.n:
            raise InputError("one [L, R] interval per vertex required", field="intervals")
        ivs = []
        for iv in intervals:
            if not (
                isinstance(iv, list)
                and len(iv) == 2
                and all(isinstance(x, int) for x in iv)
                and iv[0] <= iv[1]
            ):
                raise InputError(f"bad interval {iv!r}", field="intervals")
            ivs.append((iv[0], iv[1]))
        if _intersection_edges(ivs) != graph.edges:
            raise InputError(
                "intervals disagree with edges: their intersection graph differs",
                field="intervals",
            )
        intervals = tuple(ivs)

    meta = obj.get("meta")
    if meta is not None and not isinstance(meta, dict):
        raise InputError("meta must be an object", field="meta")

    return InstanceDocument(variant, pivot, k, graph.colors, graph.edges, intervals, meta)


def emit(doc: InstanceDocument) -> str:
    """Serialize a document; parse(emit(doc)) == doc."""
    obj: dict = {"variant": doc.variant}
    if doc.pivot is not None:
        obj["pivot"] = doc.pivot
    obj["k"] = doc.k
    obj["colors"] = list(doc.colors)
    obj["edges"] = [list(e) for e in doc.edges]
    if doc.intervals is not None:
        obj["intervals"] = [list(iv) for iv in doc.intervals]
    if doc.meta is not None:
        obj["meta"] = doc.meta
    return json.dumps(obj, indent=2) + "\n"


# ------------------------------------------------------------------ generators


class _SplitMix64:
    """Seed-stable PRNG so generated documents never drift across versions."""

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self._MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self._MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self._MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self._MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # rejection sampling keeps the draw exactly uniform
        limit = self._MASK + 1 - (self._MASK + 1) % bound
        while True:
            x = self.next64()
            if x < limit:
                return x % bound

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def _random_colors(rng: _SplitMix64, n: int, k: int) -> list[int]:
    if k > n:
        raise InputError(
            f"cannot place {k} colors on {n} vertices with every color used",
            field="k",
        )
    colors = list(range(1, k + 1)) + [rng.randint(1, k) for _ in range(n - k)]
    rng.shuffle(colors)
    return colors


def _is_caterpillar(g: ColoredGraph) -> bool:
    if len(g.edges) != g.n - 1:
        return False
    inner = [v for v in range(g.n) if len(g.neighbors(v)) > 1]
    return all(sum(w in inner for w in g.neighbors(v)) <= 2 for v in inner)


def gen_random(kind: str, n: int, k: int, seed: int) -> InstanceDocument:
    """Seeded connected instance of the requested class.

    Colors are uniform over 1..k with every color used at least once,
    so k > n is a domain error.  Interval kinds carry their interval
    representation in the document; every output is re-validated
    against its class recognizer before being returned.
    """
    if kind not in _KINDS:
        raise InputError(f"unknown generator kind {kind!r}", field="kind")
    if n < 1 or k < 1:
        raise InputError("n and k must be positive", field="n" if n < 1 else "k")
    rng = _SplitMix64((seed * 1000003 + len(kind)) ^ n * 31 + k)
    colors = _random_colors(rng, n, k)
    intervals = None

    if kind == "path":
        order = list(range(n))
        rng.shuffle(order)
        edges = [(order[i], order[i + 1]) for i in range(n - 1)]
        graph = ColoredGraph(n, k, colors, edges)
        assert max((len(graph.neighbors(v)) for v in range(n)), default=0) <= 2
    elif kind == "caterpillar":
        spine = n if n <= 2 else rng.randint((n + 1) // 2, n)
        edges = [(j, j + 1) for j in range(spine - 1)]
        edges += [(rng.randint(0, spine - 1), h) for h in range(spine, n)]
        graph = ColoredGraph(n, k, colors, edges)
        assert _is_caterpillar(graph)
    elif kind == "split":
        clique = n if n <= 2 else rng.randint(max(1, n // 3), n)
        edges = [(u, v) for u in range(clique) for v in range(u + 1, clique)]
        for x in range(clique, n):
            hooks = list(range(clique))
            rng.shuffle(hooks)
            edges += [(h, x) for h in sorted(hooks[: rng.randint(1, clique)])]
        graph = ColoredGraph(n, k, colors, edges)
        ok, _ = split_or_witness(n, graph.adj)
        assert ok
    else:
        # each interval is chained to its predecessor, so the result is
        # connected; equal lengths for the proper kind rule out nesting
        ivs = []
        right = 0
        for i in range(n):
            length = 6 if kind == "proper_interval" else rng.randint(2, 10)
            start = 0 if i == 0 else rng.randint(max(0, right - length), right)
            ivs.append((start, start + length))
            right = start + length
        graph = ColoredGraph(n, k, colors, _intersection_edges(ivs))
        assert interval_or_witness(n, graph.adj)[0]
        intervals = tuple(ivs)

    meta = {"generator": kind, "seed": seed, "prng": "splitmix64"}
    return InstanceDocument.from_graph(graph, Variant.free(), intervals, meta)
