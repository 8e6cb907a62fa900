"""Compact representations, color-set paths, the range DP, and witnesses."""

import functools
import itertools
import random

import numpy as np
import pytest

from floodgraph.core import ColoredGraph, Move, Variant, verify_solution
from floodgraph.errors import CapacityError, InputError, NotInClassError, WitnessGapError
from floodgraph.intervaldp import (
    ColorSetPath,
    IntervalRepresentation,
    build_colorset_path,
    build_representation,
    dp_solve,
    dp_solve_values,
    reconstruct_witness,
    solve_proper_interval,
)
from floodgraph.oracle import solve_exact
from helpers import build, iso_classes, rgs_colorings


def path_graph(colors, k=None):
    n = len(colors)
    return ColoredGraph(n, k or max(colors), colors, [(i, i + 1) for i in range(n - 1)])


def raw_path(sets, k):
    fsets = tuple(frozenset(s) for s in sets)
    return ColorSetPath(fsets, tuple(frozenset() for _ in fsets), k)


# -- representations -------------------------------------------------------------


def test_edge_representation_is_the_touching_pair():
    rep = build_representation(build(2, [(0, 1)], colors=[1, 2]))
    assert rep.intervals == ((0, 1), (1, 2))
    assert rep.span == 2


def test_path_and_triangle_representations():
    p3 = build_representation(path_graph([1, 1, 1]))
    assert p3.intervals == ((0, 1), (1, 2), (2, 3))
    k3 = build_representation(build(3, [(0, 1), (0, 2), (1, 2)]))
    assert k3.intervals == ((0, 2), (1, 3), (2, 4))


def test_representation_is_deterministic():
    g = build(5, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)])
    assert build_representation(g).intervals == build_representation(g).intervals


def test_claw_is_rejected_with_a_witness():
    with pytest.raises(NotInClassError) as err:
        build_representation(build(4, [(0, 1), (0, 2), (0, 3)]))
    assert err.value.kind == "claw"


def test_four_cycle_is_rejected_as_a_chordless_cycle():
    with pytest.raises(NotInClassError) as err:
        build_representation(build(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
    assert err.value.kind == "chordless_cycle"


def test_validator_rejects_uncovered_point():
    rep = IntervalRepresentation(((0, 2),), (1,), 1, 2)
    with pytest.raises(InputError):
        rep.validate()


def test_validator_rejects_identical_consecutive_neighborhoods():
    rep = IntervalRepresentation(((0, 1), (0, 2)), (1, 2), 2, 2)
    with pytest.raises(InputError):
        rep.validate()


def test_validator_rejects_gap_between_components():
    rep = IntervalRepresentation(((0, 1), (2, 3)), (1, 2), 2, 3)
    with pytest.raises(InputError):
        rep.validate()


def test_validator_rejects_endpoint_out_of_range():
    rep = IntervalRepresentation(((0, 3),), (1,), 1, 2)
    with pytest.raises(InputError):
        rep.validate()


def test_representations_exist_for_every_small_proper_interval_graph():
    built = 0
    for n in range(1, 6):
        for edges in iso_classes(n):
            g = build(n, edges)
            try:
                rep = build_representation(g)
            except NotInClassError:
                continue
            rep.validate()
            assert rep.is_proper()
            built += 1
    assert built >= 15


# -- path sampling ---------------------------------------------------------------


def test_edge_sampling_gives_the_five_golden_sets():
    rep = build_representation(build(2, [(0, 1)], colors=[1, 2]))
    cp = build_colorset_path(rep)
    assert [set(s) for s in cp.sets] == [{1}, {1}, {1, 2}, {2}, {2}]
    assert [set(v) for v in cp.vertex_sets] == [{0}, {0}, {0, 1}, {1}, {1}]


def test_half_positions_sit_between_integer_positions():
    rep = build_representation(path_graph([1, 2, 3]))
    cp = build_colorset_path(rep)
    assert len(cp.sets) == 2 * rep.span + 1
    assert [set(s) for s in cp.sets] == [
        {1}, {1}, {1, 2}, {2}, {2, 3}, {3}, {3}]


def test_empty_sample_is_rejected():
    with pytest.raises(InputError):
        raw_path([{1}, set(), {2}], 2)


# -- dp values -------------------------------------------------------------------


def test_single_position_is_already_flooded():
    assert dp_solve(raw_path([{1}], 1), 1).opt == 0


def test_golden_edge_path_needs_one_move():
    res = dp_solve(raw_path([{1}, {1}, {1, 2}, {2}, {2}], 2), 2)
    assert res.opt == 1


def test_alternating_five_path_needs_two_moves():
    g = path_graph([1, 2, 1, 2, 1])
    assert solve_proper_interval(g).value == 2


def test_monochrome_path_needs_nothing():
    g = path_graph([1, 1, 1, 1])
    sol = solve_proper_interval(g)
    assert sol.value == 0 and sol.moves == ()


def test_stray_color_inside_one_cell_needs_its_own_move():
    # b and b" share an interval; the color of b" never reaches a cell of
    # its own, yet flooding still has to spend a move removing it.
    g = ColoredGraph(4, 3, [1, 2, 3, 1], [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    sol = solve_proper_interval(g)
    assert sol.value == 2
    assert solve_exact(g, Variant.free()).value == 2


def _submasks(m):
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def reference_opt(sets, k):
    """Literal range DP that minimizes over all survivor submask splits.

    The production engine evaluates each split at the full budget mask
    only; this oracle-of-the-oracle keeps the exhaustive minimization.
    """
    masks = [sum(1 << (c - 1) for c in s) for s in sets]
    q = len(masks)
    big = 10 ** 9

    @functools.lru_cache(maxsize=None)
    def f(l, r, c, s_mask):
        budget = s_mask | (1 << c)
        if l == r:
            bad = masks[l] & ~budget
            if (masks[l] >> c) & 1 and not bad:
                return 0
            return 1 if bin(bad).count("1") <= 1 else big
        best = big
        for i in range(l + 1, r + 1):
            for a in _submasks(s_mask):
                for b in _submasks(s_mask):
                    best = min(best, f(l, i - 1, c, a) + f(i, r, c, b))
            for cp in range(k):
                if cp == c:
                    continue
                for a in _submasks(budget):
                    for b in _submasks(budget):
                        best = min(best, f(l, i - 1, c, a) + f(i, r, cp, b) + 1)
                        best = min(best, f(l, i - 1, cp, a) + 1 + f(i, r, c, b))
        return best

    return min(
        f(0, q - 1, c, s) + bin(s).count("1")
        for c in range(k)
        for s in range(1 << k)
        if f(0, q - 1, c, s) < big
    )


def _nonempty_subsets(k):
    return [s for r in range(1, k + 1) for s in itertools.combinations(range(1, k + 1), r)]


def test_collapsed_dp_matches_submask_reference_two_colors():
    for q in (1, 2, 3, 4):
        for sets in itertools.product(_nonempty_subsets(2), repeat=q):
            got = dp_solve(raw_path(sets, 2), 2).opt
            assert got == reference_opt(sets, 2), sets


def test_collapsed_dp_matches_submask_reference_three_colors():
    for q in (1, 2, 3):
        for sets in itertools.product(_nonempty_subsets(3), repeat=q):
            got = dp_solve(raw_path(sets, 3), 3).opt
            assert got == reference_opt(sets, 3), sets
    rng = random.Random(7)
    pool = _nonempty_subsets(3)
    for _ in range(40):
        sets = tuple(rng.choice(pool) for _ in range(5))
        got = dp_solve(raw_path(sets, 3), 3).opt
        assert got == reference_opt(sets, 3), sets


def test_table_never_worsens_when_survivors_grow():
    rng = random.Random(3)
    pool = _nonempty_subsets(3)
    for _ in range(20):
        sets = tuple(rng.choice(pool) for _ in range(5))
        f = dp_solve(raw_path(sets, 3), 3).table.f
        for s in range(8):
            for bit in range(3):
                if not (s >> bit) & 1:
                    assert np.all(f[..., s | (1 << bit)] <= f[..., s])


def test_values_are_reversal_invariant():
    rng = random.Random(11)
    pool = _nonempty_subsets(3)
    for _ in range(30):
        cp = raw_path([rng.choice(pool) for _ in range(6)], 3)
        assert dp_solve(cp, 3).opt == dp_solve(cp.reversed_path(), 3).opt


def test_batched_values_match_single_solves():
    rng = random.Random(5)
    pool = _nonempty_subsets(3)
    paths = [[rng.choice(pool) for _ in range(5)] for _ in range(12)]
    masks = np.array(
        [[sum(1 << (c - 1) for c in s) for s in sets] for sets in paths]
    )
    batch = dp_solve_values(masks, 3)
    singles = [dp_solve(raw_path(sets, 3), 3).opt for sets in paths]
    assert batch.tolist() == singles


def test_too_many_colors_is_a_capacity_error():
    cp = raw_path([{1}], 25)
    with pytest.raises(CapacityError):
        dp_solve(cp, 25)


def test_oversized_table_is_a_capacity_error_before_allocation():
    masks = np.zeros((1, 6000), dtype=np.int64) + 1
    with pytest.raises(CapacityError):
        dp_solve_values(masks, 8)


# -- witnesses -------------------------------------------------------------------


def test_edge_witness_is_one_verified_move():
    g = build(2, [(0, 1)], colors=[1, 2])
    sol = solve_proper_interval(g)
    assert sol.value == 1 and len(sol.moves) == 1
    assert verify_solution(g, Variant.free(), sol.moves).valid


def test_witnesses_are_deterministic():
    g = path_graph([1, 2, 3, 2, 1, 3])
    assert solve_proper_interval(g).moves == solve_proper_interval(g).moves


def test_single_vertex_graph_needs_no_moves():
    sol = solve_proper_interval(ColoredGraph(1, 2, [2], []))
    assert sol.value == 0 and sol.moves == ()


def test_solver_matches_oracle_on_all_small_proper_interval_graphs():
    checked = 0
    for n in range(2, 6):
        for edges in iso_classes(n):
            try:
                base = build_representation(build(n, edges))
            except NotInClassError:
                continue
            for colors in rgs_colorings(n, 3):
                k = max(colors)
                g = ColoredGraph(n, k, colors, edges)
                sol = solve_proper_interval(g)
                assert sol.value == solve_exact(g, Variant.free()).value, (edges, colors)
                check = verify_solution(g, Variant.free(), sol.moves)
                assert check.valid and check.length == sol.value, (edges, colors)
                checked += 1
    assert checked > 200


def test_unachievable_claim_raises_a_witness_gap():
    g = build(2, [(0, 1)], colors=[1, 2])
    rep = build_representation(g)
    cp = build_colorset_path(rep)
    res = dp_solve(cp, 2)
    with pytest.raises(WitnessGapError) as err:
        reconstruct_witness(res.table, cp, res.best, g, claimed=0)
    assert err.value.claimed == 0
    assert err.value.reference == 1
    assert len(err.value.prefix) == 1
