"""Recognition tests: LBFS orders, chordality with hole witnesses,
maximal cliques, claw and asteroidal-triple detection, umbrella orders.
Family verdicts are cross-checked against a brute-force interval model
on every connected graph with up to 6 vertices."""

import itertools

from floodgraph.recognition import (
    chordal_or_hole,
    find_asteroidal_triple,
    find_claw,
    interval_or_witness,
    lbfs,
    lbfs_plus,
    maximal_cliques_chordal,
    umbrella_order,
)


def build(n, edges):
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return n, tuple(adj)


def path_graph(n):
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


CLAW = build(4, [(0, 1), (0, 2), (0, 3)])
# triangle 0-1-2 with a pendant hanging off each corner
NET = build(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
# star with every edge subdivided once
SPIDER = build(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


# -- LBFS ----------------------------------------------------------------------


def test_lbfs_visits_every_vertex_once():
    n, adj = cycle_graph(6)
    order = lbfs(n, adj)
    assert sorted(order) == list(range(6))


def test_lbfs_breaks_ties_by_vertex_id():
    n, adj = complete_graph(4)
    assert lbfs(n, adj) == [0, 1, 2, 3]


def test_lbfs_prefers_lexicographically_larger_labels():
    # star center 0: after visiting 1, the center beats the other leaves
    n, adj = CLAW
    assert lbfs(n, adj) == [0, 1, 2, 3] and lbfs(n, adj, [3, 2, 1, 0]) == [3, 0, 2, 1]


def test_lbfs_plus_ties_go_to_latest_in_previous_sweep():
    n, adj = path_graph(4)
    first = lbfs(n, adj)
    second = lbfs_plus(n, adj, first)
    assert sorted(second) == list(range(4))
    # a path swept twice ends in an umbrella order
    ok, _ = umbrella_order(n, adj)
    assert ok


# -- chordality ----------------------------------------------------------------


def test_paths_trees_and_cliques_are_chordal():
    for n, adj in (path_graph(6), complete_graph(5), SPIDER, NET):
        ok, elim = chordal_or_hole(n, adj)
        assert ok and sorted(elim) == list(range(n))


def test_cycles_of_length_four_plus_yield_themselves_as_holes():
    for size in (4, 5, 6, 7):
        n, adj = cycle_graph(size)
        ok, hole = chordal_or_hole(n, adj)
        assert not ok and sorted(hole) == list(range(size))


def test_hole_witness_is_a_chordless_cycle():
    # C_5 with one extra chord leaves a C_4
    n, adj = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    ok, hole = chordal_or_hole(n, adj)
    assert not ok and len(hole) >= 4
    for i, u in enumerate(hole):
        for j in range(i + 1, len(hole)):
            v = hole[j]
            expected = j - i == 1 or (i == 0 and j == len(hole) - 1)
            assert bool((adj[u] >> v) & 1) == expected, (hole, u, v)


# -- maximal cliques -----------------------------------------------------------


def test_cliques_of_a_path_are_its_edges():
    n, adj = path_graph(4)
    ok, elim = chordal_or_hole(n, adj)
    got = set(maximal_cliques_chordal(n, adj, elim))
    assert got == {frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})}


def test_cliques_of_complete_graph_and_diamond():
    n, adj = complete_graph(5)
    ok, elim = chordal_or_hole(n, adj)
    assert maximal_cliques_chordal(n, adj, elim) == [frozenset(range(5))]

    n, adj = build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    ok, elim = chordal_or_hole(n, adj)
    got = set(maximal_cliques_chordal(n, adj, elim))
    assert got == {frozenset({0, 1, 2}), frozenset({1, 2, 3})}


def test_cliques_cover_all_vertices_and_edges():
    n, adj = NET
    ok, elim = chordal_or_hole(n, adj)
    cliques = maximal_cliques_chordal(n, adj, elim)
    assert set().union(*cliques) == set(range(n))
    for u in range(n):
        for v in range(u + 1, n):
            if (adj[u] >> v) & 1:
                assert any(u in c and v in c for c in cliques)


# -- claws and asteroidal triples ----------------------------------------------


def test_claw_found_in_star_and_absent_in_net():
    center, leaves = find_claw(*CLAW)
    assert center == 0 and set(leaves) == {1, 2, 3}
    assert find_claw(*NET) is None
    assert find_claw(*complete_graph(4)) is None


def test_asteroidal_triple_of_net_and_spider_is_the_leaf_set():
    assert find_asteroidal_triple(*NET) == (3, 4, 5)
    assert find_asteroidal_triple(*SPIDER) == (2, 4, 6)
    assert find_asteroidal_triple(*path_graph(7)) is None
    assert find_asteroidal_triple(*CLAW) is None


def test_interval_verdicts():
    ok, _ = interval_or_witness(*path_graph(5))
    assert ok
    ok, (kind, _) = interval_or_witness(*cycle_graph(5))
    assert not ok and kind == "chordless_cycle"
    ok, (kind, _) = interval_or_witness(*NET)
    assert not ok and kind == "asteroidal_triple"
    ok, _ = interval_or_witness(*CLAW)
    assert ok  # a star is interval, just not proper interval


# -- umbrella orders -----------------------------------------------------------


def test_umbrella_order_on_proper_graphs():
    for n, adj in (path_graph(6), complete_graph(4), cycle_graph(3)):
        ok, order = umbrella_order(n, adj)
        assert ok
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        for u in range(n):
            for v in range(n):
                for w in range(n):
                    if pos[u] < pos[v] < pos[w] and (adj[u] >> w) & 1:
                        assert (adj[u] >> v) & 1 and (adj[v] >> w) & 1


def test_umbrella_rejections_carry_the_right_witness():
    ok, (kind, witness) = umbrella_order(*CLAW)
    assert not ok and kind == "claw" and witness[0] == 0
    ok, (kind, _) = umbrella_order(*cycle_graph(6))
    assert not ok and kind == "chordless_cycle"
    ok, (kind, _) = umbrella_order(*NET)
    assert not ok and kind == "asteroidal_triple"


# -- exhaustive cross-check against an independent interval model ---------------


def connected_graphs(n):
    """Every connected labeled graph on n vertices (no iso dedup)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (bits >> i) & 1]
        n_, adj = build(n, edges)
        if _connected(n_, adj):
            yield n_, adj


def _connected(n, adj):
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        m = adj[v] & ~seen
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            seen |= 1 << w
            stack.append(w)
    return seen == (1 << n) - 1


def brute_interval(n, adj, proper):
    """Can left/right endpoint events be interleaved to realize adj?

    Backtracks over event sequences: opening a vertex demands an edge to
    every currently open vertex and no edge to any closed one; proper
    mode additionally forces first-opened-first-closed (no containment).
    Entirely independent of the LBFS-based recognizers.
    """
    full = (1 << n) - 1
    dead = set()

    def go(unopened, openq):
        if unopened == 0 and not openq:
            return True
        key = (unopened, openq)
        if key in dead:
            return False
        openset = 0
        for x in openq:
            openset |= 1 << x
        closed = full & ~unopened & ~openset
        m = unopened
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if (openset & ~adj[w]) == 0 and (adj[w] & closed) == 0:
                if go(unopened & ~(1 << w), openq + (w,)):
                    return True
        for v in (openq[:1] if proper else openq):
            if go(unopened, tuple(x for x in openq if x != v)):
                return True
        dead.add(key)
        return False

    return go(full, ())


def canon(n, adj):
    """Isomorphism-class key: the minimum relabeled edge mask."""
    best = None
    pairs = {(u, v): i for i, (u, v) in enumerate(itertools.combinations(range(n), 2))}
    for perm in itertools.permutations(range(n)):
        mask = 0
        for u in range(n):
            for v in range(u + 1, n):
                if (adj[u] >> v) & 1:
                    a, b = sorted((perm[u], perm[v]))
                    mask |= 1 << pairs[(a, b)]
        if best is None or mask < best:
            best = mask
    return best


def test_recognizers_match_brute_force_on_all_small_graphs():
    for n in range(1, 6):
        classes = {}
        for n_, adj in connected_graphs(n):
            classes.setdefault(canon(n_, adj), []).append(adj)
        for members in classes.values():
            want_interval = brute_interval(n, members[0], proper=False)
            want_proper = brute_interval(n, members[0], proper=True)
            for adj in members:
                got_interval, _ = interval_or_witness(n, adj)
                got_proper, _ = umbrella_order(n, adj)
                assert got_interval == want_interval, (n, adj)
                assert got_proper == want_proper, (n, adj)
