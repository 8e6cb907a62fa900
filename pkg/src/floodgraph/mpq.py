"""Clique-tree machinery for interval graphs and the solver built on it.

The maximal cliques of an interval graph can be arranged on a line so
that the cliques containing any one vertex are consecutive.  The tree
built here captures every such arrangement at once: a p-node's children
may be permuted freely, a q-node's children are fixed up to reversal,
and each vertex is stored exactly once, at the deepest node whose whole
subtree it spans.  P-node and leaf vertices belong to every clique
below the node; q-node vertices occupy a consecutive run of per-child
sections.

Flooding reduces on top of this structure.  When the root is a leaf or
a p-node it stores a vertex that sits in every maximal clique, hence is
adjacent to everything, and the game is won by recoloring that vertex's
blob through each remaining color: distinct-colors - 1 moves, matching
the lower bound.  When the root is a q-node the game projects onto a
path that samples each section (together with everything hanging below
its child) and each overlap between consecutive sections; the range DP
from the proper-interval engine then produces the optimum and a
witness.  The overlap positions are load-bearing: sampling sections
alone lets the table glue through section boundaries that no vertex
actually bridges and undercounts some instances (a regression test
keeps one such seven-vertex graph).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ColoredGraph, Move, Variant, verify_solution
from .errors import NotInClassError
from .intervaldp import ColorSetPath, dp_solve, reconstruct_best_witness
from .oracle import Solution
from .recognition import interval_or_witness, maximal_cliques_chordal


@dataclass(frozen=True)
class MpqLeaf:
    """One maximal clique; vertices are those in this clique alone."""

    clique: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class MpqP:
    """Free-order node; vertices sit in every clique of the subtree."""

    vertices: tuple[int, ...]
    children: tuple["MpqNode", ...]


@dataclass(frozen=True)
class MpqQ:
    """Fixed-order node (up to reversal) with one section per child.

    sections[i] holds the vertices whose clique run covers child i;
    every such vertex appears in a consecutive block of sections.
    """

    sections: tuple[tuple[int, ...], ...]
    children: tuple["MpqNode", ...]


MpqNode = MpqLeaf | MpqP | MpqQ


@dataclass(frozen=True)
class MpqTree:
    root: MpqNode
    cliques: tuple[frozenset[int], ...]


@dataclass(frozen=True)
class UniversalCase:
    """Root stores a vertex adjacent to all others; optimum is distinct - 1."""

    vertex: int
    distinct: int


def build_mpq(g: ColoredGraph) -> MpqTree:
    """Build and fully validate the clique tree of an interval graph."""
    ok, res = interval_or_witness(g.n, g.adj)
    if not ok:
        kind, witness = res
        raise NotInClassError(f"not an interval graph: {kind} at {witness}", kind, witness)
    cliques = maximal_cliques_chordal(g.n, g.adj, res)
    kv = {
        v: frozenset(i for i, c in enumerate(cliques) if v in c) for v in range(g.n)
    }
    root = _node(tuple(range(len(cliques))), kv)
    tree = MpqTree(root, tuple(cliques))
    _validate_tree(tree, g, kv)
    return tree


def _node(c_ids: tuple[int, ...], kv: dict[int, frozenset[int]]) -> MpqNode:
    cset = frozenset(c_ids)
    mine = tuple(sorted(v for v, ks in kv.items() if ks == cset))
    if len(c_ids) == 1:
        return MpqLeaf(c_ids[0], mine)
    constraints = {ks for ks in kv.values() if 1 < len(ks) < len(c_ids)}
    blocks = _blocks(c_ids, constraints)
    if len(blocks) > 1:
        children = []
        for block in blocks:
            bset = frozenset(block)
            sub = {v: ks for v, ks in kv.items() if ks <= bset}
            children.append(_node(block, sub))
        return MpqP(mine, tuple(children))
    return _q_node(c_ids, cset, kv, constraints)


def _blocks(c_ids, constraints) -> list[tuple[int, ...]]:
    """Connected groups of cliques under shared constraints, by min id."""
    parent = {c: c for c in c_ids}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ks in constraints:
        it = iter(ks)
        first = find(next(it))
        for c in it:
            parent[find(c)] = first
    groups: dict[int, list[int]] = {}
    for c in c_ids:
        groups.setdefault(find(c), []).append(c)
    return sorted((tuple(sorted(v)) for v in groups.values()), key=min)


def _q_node(c_ids, cset, kv, constraints) -> MpqQ:
    family = _spanning_family(cset, constraints)
    while True:
        atoms = _atomize(c_ids, family)
        amap = {c: i for i, atom in enumerate(atoms) for c in atom}
        extra = [k for k in constraints - family if len({amap[c] for c in k}) > 1]
        if not extra:
            break
        family.update(extra)
    order = _seriate(len(atoms), _atom_constraints(family, amap))
    assert order is not None, "connected interval clique family failed to seriate"
    key = [min(atoms[a]) for a in order]
    if key[::-1] < key:
        order = order[::-1]
    ordered = [atoms[a] for a in order]
    pos = {a: i for i, a in enumerate(order)}

    children = []
    for atom in ordered:
        aset = frozenset(atom)
        sub = {v: ks for v, ks in kv.items() if ks <= aset}
        children.append(_node(atom, sub))

    sections: list[list[int]] = [[] for _ in ordered]
    for v, ks in kv.items():
        spots = sorted({pos[amap[c]] for c in ks})
        if len(spots) == 1 and ks <= frozenset(ordered[spots[0]]):
            continue
        assert spots == list(range(spots[0], spots[-1] + 1)), "section run not consecutive"
        assert ks == frozenset().union(*(ordered[i] for i in spots))
        for i in spots:
            sections[i].append(v)
    assert len(children) >= 3, "q-node needs at least three children"
    return MpqQ(tuple(tuple(sorted(s)) for s in sections), tuple(children))


def _spanning_family(cset, constraints) -> set[frozenset[int]]:
    """The unique properly-overlapping constraint family covering cset."""
    pool = sorted(constraints, key=lambda k: (min(k), sorted(k)))
    comp = {i: i for i in range(len(pool))}

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for i, a in enumerate(pool):
        for j in range(i + 1, len(pool)):
            b = pool[j]
            if (a & b) and not (a <= b) and not (b <= a):
                comp[find(j)] = find(i)
    fams: dict[int, set[frozenset[int]]] = {}
    for i, k in enumerate(pool):
        fams.setdefault(find(i), set()).add(k)
    spanning = [f for f in fams.values() if frozenset().union(*f) == cset]
    assert len(spanning) == 1, "exactly one family must span a q-node"
    return spanning[0]


def _atomize(c_ids, family) -> list[tuple[int, ...]]:
    """Group cliques with identical membership across the family."""
    keys = sorted(family, key=lambda k: (min(k), sorted(k)))
    groups: dict[tuple[bool, ...], list[int]] = {}
    for c in c_ids:
        groups.setdefault(tuple(c in k for k in keys), []).append(c)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=min)


def _atom_constraints(family, amap) -> list[frozenset[int]]:
    return sorted(
        {frozenset(amap[c] for c in k) for k in family if len({amap[c] for c in k}) > 1},
        key=sorted,
    )


def _seriate(t: int, csets: list[frozenset[int]]) -> list[int] | None:
    """Order 0..t-1 so every constraint is consecutive; None if impossible.

    Depth-first with the classic pruning: once a constraint has started
    and is unfinished, the next atom must belong to it.  Candidates are
    tried in ascending order, so the first completion is deterministic.
    """
    placed: list[int] = []
    used = [False] * t
    count = {k: 0 for k in csets}

    def candidates():
        open_sets = [k for k, c in count.items() if 0 < c < len(k)]
        pool = range(t) if not open_sets else sorted(set.intersection(*map(set, open_sets)))
        return [a for a in pool if not used[a]]

    def walk():
        if len(placed) == t:
            return True
        for a in candidates():
            used[a] = True
            placed.append(a)
            for k in csets:
                if a in k:
                    count[k] += 1
            if walk():
                return True
            for k in csets:
                if a in k:
                    count[k] -= 1
            placed.pop()
            used[a] = False
        return False

    return placed if walk() else None


# -- validation ------------------------------------------------------------------


def _validate_tree(tree: MpqTree, g: ColoredGraph, kv) -> None:
    leaves: list[int] = []
    homes: dict[int, int] = {}

    def walk(node, acc: frozenset[int]):
        if isinstance(node, MpqLeaf):
            leaves.append(node.clique)
            for v in node.vertices:
                _claim(homes, v)
            assert acc | set(node.vertices) == tree.cliques[node.clique], (
                "root-to-leaf vertices must reproduce the maximal clique"
            )
        elif isinstance(node, MpqP):
            for v in node.vertices:
                _claim(homes, v)
            for ch in node.children:
                walk(ch, acc | set(node.vertices))
        else:
            for v in sorted({v for s in node.sections for v in s}):
                _claim(homes, v)
            assert len(node.children) >= 3
            for i, ch in enumerate(node.children):
                walk(ch, acc | set(node.sections[i]))

    walk(tree.root, frozenset())
    assert len(homes) == g.n, "every vertex needs exactly one home"
    arrangement = {c: i for i, c in enumerate(leaves)}
    assert len(arrangement) == len(tree.cliques)
    for v in range(g.n):
        spots = sorted(arrangement[c] for c in kv[v])
        assert spots == list(range(spots[0], spots[-1] + 1)), (
            "in-order leaves must keep every vertex's cliques consecutive"
        )
    if isinstance(tree.root, (MpqLeaf, MpqP)):
        assert tree.root.vertices, "connected graph: root p-node/leaf stores a vertex"
    else:
        for i in range(len(tree.root.sections) - 1):
            assert set(tree.root.sections[i]) & set(tree.root.sections[i + 1]), (
                "connected graph: consecutive root sections overlap"
            )


def _claim(homes: dict[int, int], v: int) -> None:
    assert v not in homes, f"vertex {v} stored at two nodes"
    homes[v] = 1


# -- projection and solving ------------------------------------------------------


def subtree_vertices(node: MpqNode) -> set[int]:
    if isinstance(node, MpqLeaf):
        return set(node.vertices)
    if isinstance(node, MpqP):
        out = set(node.vertices)
        for ch in node.children:
            out |= subtree_vertices(ch)
        return out
    out = {v for s in node.sections for v in s}
    for ch in node.children:
        out |= subtree_vertices(ch)
    return out


def depth_map(tree: MpqTree) -> dict[int, int]:
    """Tree depth of each vertex's home node (root = 0)."""
    out: dict[int, int] = {}

    def walk(node, d):
        if isinstance(node, MpqLeaf):
            for v in node.vertices:
                out[v] = d
        elif isinstance(node, MpqP):
            for v in node.vertices:
                out[v] = d
            for ch in node.children:
                walk(ch, d + 1)
        else:
            for v in {v for s in node.sections for v in s}:
                out[v] = d
            for ch in node.children:
                walk(ch, d + 1)

    walk(tree.root, 0)
    return out


def root_projection(tree: MpqTree, g: ColoredGraph) -> UniversalCase | ColorSetPath:
    """Collapse the root into either a universal vertex or a sampled path.

    Q-node roots yield 2m-1 positions for m children: each section i
    (plus everything below child i) at the even positions, and each
    overlap between consecutive sections at the odd ones.
    """
    root = tree.root
    if isinstance(root, (MpqLeaf, MpqP)):
        return UniversalCase(min(root.vertices), len(set(g.colors)))
    vsets: list[frozenset[int]] = []
    for i, child in enumerate(root.children):
        if i:
            between = frozenset(root.sections[i - 1]) & frozenset(root.sections[i])
            assert between, "consecutive sections of a connected graph overlap"
            vsets.append(between)
        vsets.append(frozenset(root.sections[i]) | frozenset(subtree_vertices(child)))
    csets = tuple(frozenset(g.colors[v] for v in vs) for vs in vsets)
    return ColorSetPath(csets, tuple(vsets), g.k)


def solve_interval(g: ColoredGraph) -> Solution:
    """Exact free-variant optimum and witness for an interval graph."""
    tree = build_mpq(g)
    proj = root_projection(tree, g)
    if isinstance(proj, UniversalCase):
        u = proj.vertex
        targets = [c for c in sorted(set(g.colors)) if c != g.colors[u]]
        moves = tuple(Move(u, c) for c in targets)
        assert len(moves) == proj.distinct - 1
        assert verify_solution(g, Variant.free(), moves).valid
        return Solution(proj.distinct - 1, moves)
    res = dp_solve(proj, g.k)
    depths = depth_map(tree)
    by_color: dict[int, int] = {}
    for v in range(g.n):
        c = g.colors[v]
        by_color[c] = max(by_color.get(c, 0), depths[v])
    moves = reconstruct_best_witness(
        res, proj, g, leftover_rank=lambda c: by_color[c]
    )
    return Solution(res.opt, moves)


def format_mpq(tree: MpqTree) -> str:
    """Indented text rendering of the tree, for debugging."""
    lines: list[str] = []

    def walk(node, depth):
        pad = "  " * depth
        if isinstance(node, MpqLeaf):
            lines.append(f"{pad}leaf clique={node.clique} vertices={list(node.vertices)}")
        elif isinstance(node, MpqP):
            lines.append(f"{pad}p-node vertices={list(node.vertices)}")
            for ch in node.children:
                walk(ch, depth + 1)
        else:
            secs = [list(s) for s in node.sections]
            lines.append(f"{pad}q-node sections={secs}")
            for ch in node.children:
                walk(ch, depth + 1)

    walk(tree.root, 0)
    return "\n".join(lines)
