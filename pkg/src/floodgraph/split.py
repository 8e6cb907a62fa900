"""Exact free-variant solver for split graphs.

A split graph partitions into a clique K and an independent set I.
Clique vertices of one color always form a single blob, so the whole
game is driven by K: the solver searches abstract states (current color
of each initial K color class, plus which independent "twin" classes
have been swallowed by the clique) and only ever moves clique vertices.
Restricting moves to K loses nothing on split graphs; the test suite
cross-checks this against the unrestricted search engine.

Two classes of one current color are one blob (clique), so the class
partition never needs storing: grouping by current color is exact.  An
independent vertex joins the clique blob the moment an adjacent class
carries its color, and from then on just rides along; a swallowed flag
per twin class is all the state that behavior needs.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass

from .core import ColoredGraph, Move, Variant, verify_solution
from .errors import BudgetExceededError, NotInClassError
from .oracle import SearchBudget, Solution
from .recognition import split_or_witness


@dataclass(frozen=True)
class SplitDecomposition:
    """Vertex partition into a clique and an independent set."""

    clique: tuple[int, ...]
    independent: tuple[int, ...]


def recognize_split(g: ColoredGraph) -> SplitDecomposition:
    """Split decomposition with the largest clique side.

    Ties are broken toward the lexicographically least clique vertex
    set.  Non-split graphs raise NotInClassError carrying a forbidden
    structure (two induced disjoint edges or a chordless 4- or 5-cycle).
    """
    ok, result = split_or_witness(g.n, g.adj)
    if not ok:
        kind, witness = result
        raise NotInClassError(f"not a split graph: {kind} at {witness}", kind, witness)
    clique, independent = result
    return SplitDecomposition(clique, independent)


def solve_split(g: ColoredGraph, budget: SearchBudget | None = None) -> Solution:
    """Optimal free-variant move count and witness for a split graph.

    Breadth-first over abstract states, so the first goal reached is
    optimal; the witness replays on the concrete graph and is verified
    before returning.  Needs at most 2k moves: make the clique
    monochromatic (< k moves), then walk it through every color still
    waiting on an independent vertex.
    """
    dec = recognize_split(g)
    if len(set(g.colors)) == 1:
        return Solution(0, ())
    if g.k >= 8:
        warnings.warn(
            f"split search over k = {g.k} colors: the abstract state space "
            "grows factorially in k; the search budget still applies",
            RuntimeWarning,
            stacklevel=2,
        )
    budget = budget or SearchBudget()

    # initial clique color classes, ascending by color
    by_color: dict[int, list[int]] = {}
    for v in dec.clique:
        by_color.setdefault(g.colors[v], []).append(v)
    class_verts = tuple(tuple(sorted(by_color[c])) for c in sorted(by_color))
    start_colors = tuple(sorted(by_color))
    nclasses = len(class_verts)

    # independent twin classes: same color and same touched classes
    # behave identically, so one swallowed flag covers them all
    twin_set = {
        (
            g.colors[x],
            frozenset(
                j
                for j in range(nclasses)
                if any((g.adj[x] >> u) & 1 for u in class_verts[j])
            ),
        )
        for x in dec.independent
    }
    twins = sorted(twin_set, key=lambda t: (t[0], sorted(t[1])))
    ntwins = len(twins)

    def swallow(colors: tuple[int, ...], taken: int) -> int:
        for t in range(ntwins):
            if (taken >> t) & 1:
                continue
            c, touch = twins[t]
            if any(colors[j] == c for j in touch):
                taken |= 1 << t
        return taken

    def is_goal(colors: tuple[int, ...], taken: int) -> bool:
        c0 = colors[0]
        if any(c != c0 for c in colors):
            return False
        return all(
            (taken >> t) & 1 or twins[t][0] == c0 for t in range(ntwins)
        )

    start = (start_colors, swallow(start_colors, 0))
    deadline = time.monotonic() + budget.time_limit
    parent: dict[tuple, tuple | None] = {start: None}
    frontier = [start]
    depth = 0
    while frontier:
        depth += 1
        if depth > budget.max_depth:
            raise BudgetExceededError(f"no solution within depth {budget.max_depth}")
        nxt = []
        for cur in frontier:
            if time.monotonic() > deadline:
                raise BudgetExceededError(f"time limit {budget.time_limit}s exceeded")
            colors, taken = cur
            present = set(colors)
            for t in range(ntwins):
                if not (taken >> t) & 1:
                    present.add(twins[t][0])
            for group_color in sorted(set(colors)):
                group = [j for j in range(nclasses) if colors[j] == group_color]
                rep = min(class_verts[j][0] for j in group)
                for c in sorted(present):
                    if c == group_color:
                        continue
                    ncolors = tuple(
                        c if colors[j] == group_color else colors[j]
                        for j in range(nclasses)
                    )
                    succ = (ncolors, swallow(ncolors, taken))
                    if succ in parent:
                        continue
                    parent[succ] = (cur, Move(rep, c))
                    if len(parent) > budget.max_states:
                        raise BudgetExceededError(
                            f"state budget {budget.max_states} exceeded"
                        )
                    if is_goal(*succ):
                        moves = []
                        node = succ
                        while parent[node] is not None:
                            node, mv = parent[node]
                            moves.append(mv)
                        moves.reverse()
                        witness = tuple(moves)
                        assert verify_solution(g, Variant.free(), witness).valid
                        assert depth <= 2 * g.k
                        return Solution(depth, witness)
                    nxt.append(succ)
        frontier = nxt
    raise AssertionError("connected split graph must be floodable")
