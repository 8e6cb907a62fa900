"""Shared test utilities: small-graph enumeration and coloring generators."""

import itertools

import networkx as nx

from floodgraph.core import ColoredGraph


def build(n, edges, colors=None, k=None):
    cols = list(colors) if colors is not None else [1] * n
    return ColoredGraph(n, k or max(cols), cols, edges)


def all_pairs(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def is_connected(n, edges):
    if n == 1:
        return True
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def connected_graphs(n):
    """Edge tuples of every connected labeled graph on n vertices."""
    pairs = all_pairs(n)
    for bits in range(1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if (bits >> i) & 1)
        if is_connected(n, edges):
            yield edges


def canon(n, edges):
    """Isomorphism-invariant form: min edge bitmask over relabelings."""
    pairs = all_pairs(n)
    idx = {p: i for i, p in enumerate(pairs)}
    best = None
    for perm in itertools.permutations(range(n)):
        m = 0
        for u, v in edges:
            a, b = sorted((perm[u], perm[v]))
            m |= 1 << idx[(a, b)]
        if best is None or m < best:
            best = m
    return best


def iso_classes(n):
    """One representative edge tuple per connected graph class on n vertices."""
    seen = set()
    for edges in connected_graphs(n):
        c = canon(n, edges)
        if c not in seen:
            seen.add(c)
            yield edges


def rgs_colorings(n, max_k):
    """Colorings canonical up to renaming: first-use colors appear in order."""

    def rec(prefix, used):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for c in range(1, min(used + 1, max_k) + 1):
            yield from rec(prefix + [c], max(used, c))

    yield from rec([], 0)


def _nx_graph(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return g


def _iso_dedup(n, edge_sets):
    """One representative per isomorphism class, bucketed by degree sequence."""
    reps = []
    buckets = {}
    for edges in edge_sets:
        g = _nx_graph(n, edges)
        key = tuple(sorted(d for _, d in g.degree()))
        bucket = buckets.setdefault(key, [])
        if not any(nx.is_isomorphic(g, h) for _, h in bucket):
            bucket.append((edges, g))
            reps.append(edges)
    return reps


def proper_interval_classes(n):
    """Connected proper interval graph classes on n vertices.

    Enumerates vertex orders with consecutive neighborhoods: each vertex i
    is adjacent to exactly i+1..f(i) for a nondecreasing f with f(i) > i,
    then deduplicates up to isomorphism.  The class counts this produces
    (1, 1, 2, 4, 10, 26, 76, 232 for n = 1..8) match the published count
    of connected unit interval graphs.
    """
    if n == 1:
        return [()]

    def windows(i, lo):
        if i == n - 1:
            yield ()
            return
        for f in range(max(lo, i + 1), n):
            for rest in windows(i + 1, f):
                yield (f,) + rest

    edge_sets = [
        tuple((i, j) for i, fi in enumerate(f) for j in range(i + 1, fi + 1))
        for f in windows(0, 1)
    ]
    return _iso_dedup(n, edge_sets)


def atlas_classes(predicate=None):
    """(n, edges) for every connected graph class with n <= 7.

    Backed by the graph atlas shipped with networkx, which lists one
    representative per isomorphism class.  predicate filters on
    (n, edges) when given.
    """
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        edges = tuple(sorted(tuple(sorted(e)) for e in g.edges()))
        if predicate is None or predicate(n, edges):
            out.append((n, edges))
    return out


def rgs_form(seq):
    """Relabel a color sequence so colors appear in first-use order."""
    seen = {}
    out = []
    for c in seq:
        if c not in seen:
            seen[c] = len(seen) + 1
        out.append(seen[c])
    return tuple(out)


def automorphisms(n, edges, cap=16):
    """Vertex permutations preserving the graph, capped to bound the cost."""
    g = _nx_graph(n, edges)
    matcher = nx.algorithms.isomorphism.GraphMatcher(g, g)
    perms = []
    for mapping in matcher.isomorphisms_iter():
        perms.append(tuple(mapping[i] for i in range(n)))
        if len(perms) >= cap:
            break
    return perms


def aut_reduced_colorings(n, edges, max_k):
    """RGS colorings with automorphic duplicates dropped.

    A coloring is kept only when it is the lexicographic minimum of its
    orbit under the (capped) automorphism group, so every orbit keeps at
    least one member and the sweep stays exhaustive.
    """
    perms = automorphisms(n, edges)
    if len(perms) <= 1:
        yield from rgs_colorings(n, max_k)
        return
    for colors in rgs_colorings(n, max_k):
        if colors == min(rgs_form(tuple(colors[p] for p in perm)) for perm in perms):
            yield colors
