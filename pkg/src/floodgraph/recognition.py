"""Graph-class recognition primitives.

Everything here works on a plain adjacency view (n, adj) where adj is a
tuple of neighbor bitmasks, the same shape ColoredGraph.adj exposes.
Functions return orders and concrete witnesses (a chordless cycle, a
claw, an asteroidal triple) as data; callers wrap them in errors.

Class facts used:
- chordal  <=>  the reverse of a lexicographic BFS order is a perfect
  elimination order;
- interval <=>  chordal and asteroidal-triple-free;
- proper interval <=> interval and claw-free <=> vertices admit an
  umbrella order (every closed neighborhood consecutive).
"""

from __future__ import annotations


def lbfs(n: int, adj: tuple[int, ...], tie_rank=None) -> list[int]:
    """Lexicographic BFS visit order via partition refinement.

    Ties (equal labels) go to the smallest tie_rank, vertex id by
    default: buckets start in tie order and splits are stable, so the
    front of the first bucket is always the tied vertex of least rank.
    """
    if tie_rank is None:
        start = list(range(n))
    else:
        start = sorted(range(n), key=lambda v: tie_rank[v])
    buckets = [start]
    order = []
    while buckets:
        head = buckets[0]
        v = head.pop(0)
        if not head:
            buckets.pop(0)
        order.append(v)
        refined = []
        for b in buckets:
            inside = [w for w in b if (adj[v] >> w) & 1]
            outside = [w for w in b if not (adj[v] >> w) & 1]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        buckets = refined
    return order


def lbfs_plus(n: int, adj: tuple[int, ...], prev: list[int]) -> list[int]:
    """LBFS sweep whose ties pick the vertex latest in the prev order."""
    pos = [0] * n
    for i, v in enumerate(prev):
        pos[v] = i
    return lbfs(n, adj, tie_rank=[-pos[v] for v in range(n)])


def peo_violation(n, adj, elim: list[int]):
    """First (u, w, x) breaking the perfect-elimination property, or None.

    elim is read as an elimination order: for each u, the neighbors
    placed later must form a clique, checked the standard way through
    the earliest later neighbor w.
    """
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    for u in elim:
        later = [w for w in _bits(adj[u]) if pos[w] > pos[u]]
        if not later:
            continue
        w = min(later, key=lambda t: pos[t])
        for x in later:
            if x != w and not (adj[w] >> x) & 1:
                return (u, w, x)
    return None


def chordal_or_hole(n: int, adj: tuple[int, ...]):
    """(True, elimination order) for chordal graphs, else (False, hole).

    The hole is a chordless cycle of length >= 4, listed in cycle order.
    """
    elim = list(reversed(lbfs(n, adj)))
    bad = peo_violation(n, adj, elim)
    if bad is None:
        return True, elim
    hole = _hole_through(n, adj, *bad) or _hole_exhaustive(n, adj)
    assert hole is not None, "PEO violation without a chordless cycle"
    return False, hole


def _hole_through(n, adj, u, w, x):
    """Chordless cycle through u built from nonadjacent w, x in N(u)."""
    blocked = adj[u] & ~(1 << w) & ~(1 << x) | (1 << u)
    path = _shortest_path_avoiding(n, adj, w, x, blocked)
    if path is None:
        return None
    return [u] + path


def _hole_exhaustive(n, adj):
    for u in range(n):
        nb = list(_bits(adj[u]))
        for i, w in enumerate(nb):
            for x in nb[i + 1:]:
                if (adj[w] >> x) & 1:
                    continue
                hole = _hole_through(n, adj, u, w, x)
                if hole is not None:
                    return hole
    return None


def _shortest_path_avoiding(n, adj, s, t, blocked):
    """Shortest s..t path with interior outside blocked; chordless by
    minimality inside the allowed subgraph."""
    allowed = ~blocked
    prev = {s: None}
    frontier = [s]
    while frontier:
        nxt = []
        for v in frontier:
            m = adj[v] & allowed
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if w in prev:
                    continue
                prev[w] = v
                if w == t:
                    path = [t]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                nxt.append(w)
        frontier = nxt
    return None


def maximal_cliques_chordal(n, adj, elim: list[int]) -> list[frozenset]:
    """Maximal cliques of a chordal graph from its elimination order.

    Candidates are u plus its later neighbors; subset filtering keeps
    the maximal ones in first-seen order.
    """
    pos = [0] * n
    for i, v in enumerate(elim):
        pos[v] = i
    cands = []
    for u in elim:
        mask = 1 << u
        for w in _bits(adj[u]):
            if pos[w] > pos[u]:
                mask |= 1 << w
        cands.append(mask)
    kept: list[int] = []
    for mask in cands:
        if any(other != mask and mask | other == other for other in cands):
            continue
        if mask not in kept:
            kept.append(mask)
    return [frozenset(_bits(m)) for m in kept]


def find_claw(n, adj):
    """(center, (a, b, c)) for the first induced claw, or None."""
    for v in range(n):
        nb = list(_bits(adj[v]))
        for i, a in enumerate(nb):
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if (adj[a] >> b) & 1:
                    continue
                for c in nb[j + 1:]:
                    if not (adj[a] >> c) & 1 and not (adj[b] >> c) & 1:
                        return v, (a, b, c)
    return None


def find_asteroidal_triple(n, adj):
    """First asteroidal triple in ascending order, or None.

    (a, b, c) is asteroidal when the three are pairwise nonadjacent and
    every pair is joined by a path avoiding the closed neighborhood of
    the third.
    """
    comp = [_components_outside(n, adj, x) for x in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            if (adj[a] >> b) & 1:
                continue
            for c in range(b + 1, n):
                if (adj[b] >> c) & 1 or (adj[a] >> c) & 1:
                    continue
                if (
                    comp[c][a] == comp[c][b] != -1
                    and comp[b][a] == comp[b][c] != -1
                    and comp[a][b] == comp[a][c] != -1
                ):
                    return (a, b, c)
    return None


def _components_outside(n, adj, x):
    """Component labels of the graph minus N[x]; -1 inside N[x]."""
    banned = adj[x] | (1 << x)
    label = [-1] * n
    nxt = 0
    for s in range(n):
        if label[s] != -1 or (banned >> s) & 1:
            continue
        label[s] = nxt
        stack = [s]
        while stack:
            v = stack.pop()
            m = adj[v] & ~banned
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if label[w] == -1:
                    label[w] = nxt
                    stack.append(w)
        nxt += 1
    return label


def interval_or_witness(n, adj):
    """(True, elimination order) or (False, (kind, witness))."""
    ok, result = chordal_or_hole(n, adj)
    if not ok:
        return False, ("chordless_cycle", tuple(result))
    at = find_asteroidal_triple(n, adj)
    if at is not None:
        return False, ("asteroidal_triple", at)
    return True, result


def umbrella_order(n, adj):
    """Umbrella order for proper interval graphs, else (kind, witness).

    Three LBFS sweeps produce the candidate order; the umbrella property
    (every closed neighborhood consecutive) is then verified outright,
    so a wrong order can never be returned.  On failure the witness is
    whichever forbidden structure is found first: a chordless cycle, a
    claw, or an asteroidal triple.
    """
    s1 = lbfs(n, adj)
    s2 = lbfs_plus(n, adj, s1)
    s3 = lbfs_plus(n, adj, s2)
    if _is_umbrella(n, adj, s3):
        return True, s3
    ok, result = chordal_or_hole(n, adj)
    if not ok:
        return False, ("chordless_cycle", tuple(result))
    claw = find_claw(n, adj)
    if claw is not None:
        return False, ("claw", claw)
    at = find_asteroidal_triple(n, adj)
    assert at is not None, "umbrella failed on a claw-free AT-free chordal graph"
    return False, ("asteroidal_triple", at)


def _is_umbrella(n, adj, order):
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    for v in range(n):
        nbp = [pos[w] for w in _bits(adj[v])] + [pos[v]]
        lo, hi = min(nbp), max(nbp)
        span = 0
        for p in range(lo, hi + 1):
            span |= 1 << order[p]
        if span & ~(adj[v] | (1 << v)):
            return False
    return True


def _bits(mask: int):
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        yield v


def split_or_witness(n, adj):
    """(True, (clique, independent)) or (False, (kind, witness)).

    Degree test: sort degrees nonincreasing and let m be the largest i
    with d_i >= i-1; the graph splits into a clique and an independent
    set iff sum(d_1..d_m) = m(m-1) + sum(d_(m+1)..d_n), and then the m
    vertices of largest degree are such a clique, of maximum size.
    Ties at the threshold degree go to smaller vertex ids; a vertex of
    degree >= m sits on the clique side of every maximum decomposition,
    so the returned clique is also the lexicographically least one.
    Both sides are re-verified before returning.
    """
    deg = [bin(a).count("1") for a in adj]
    order = sorted(range(n), key=lambda v: (-deg[v], v))
    seq = [deg[v] for v in order]
    m = max(i + 1 for i in range(n) if seq[i] >= i)
    if sum(seq[:m]) != m * (m - 1) + sum(seq[m:]):
        return False, _split_obstruction(n, adj)
    clique = tuple(sorted(order[:m]))
    indep = tuple(sorted(order[m:]))
    for i, u in enumerate(clique):
        for v in clique[i + 1 :]:
            assert (adj[u] >> v) & 1, "degree test accepted a non-clique"
    for i, u in enumerate(indep):
        for v in indep[i + 1 :]:
            assert not (adj[u] >> v) & 1, "degree test accepted a non-independent set"
    return True, (clique, indep)


def _split_obstruction(n, adj):
    """Forbidden structure in a non-split graph.

    One of: two induced disjoint edges, a chordless 4-cycle, or a
    chordless 5-cycle; every non-split graph contains one of the three.
    """
    edges = [(u, v) for u in range(n) for v in _bits(adj[u]) if u < v]
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if len({a, b, c, d}) < 4:
                continue
            ac = (adj[a] >> c) & 1
            ad = (adj[a] >> d) & 1
            bc = (adj[b] >> c) & 1
            bd = (adj[b] >> d) & 1
            if not (ac or ad or bc or bd):
                return "disjoint_edge_pair", (a, b, c, d)
            if ac and bd and not ad and not bc:
                return "chordless_cycle", (a, b, d, c)
            if ad and bc and not ac and not bd:
                return "chordless_cycle", (a, b, c, d)
    cycle = _chordless_five_cycle(n, adj)
    assert cycle is not None, "non-split graph must contain an obstruction"
    return "chordless_cycle", cycle


def _chordless_five_cycle(n, adj):
    def extend(path, mask):
        if len(path) == 5:
            return path if (adj[path[-1]] >> path[0]) & 1 else None
        for w in _bits(adj[path[-1]] & ~mask):
            if w <= path[0]:
                continue
            # the closing vertex may (and must) also touch path[0]
            banned = path[1:-1] if len(path) == 4 else path[:-1]
            if any((adj[w] >> u) & 1 for u in banned):
                continue
            got = extend(path + [w], mask | (1 << w))
            if got:
                return got
        return None

    for v0 in range(n):
        got = extend([v0], 1 << v0)
        if got:
            return tuple(got)
    return None
