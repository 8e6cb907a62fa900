"""Exact solvers and tooling for flooding games on vertex-colored graphs.

A flooding game starts from a vertex-colored graph.  Each move picks a
vertex v and a color c and recolors the whole monochromatic blob around
v to c, merging it with any adjacent blobs of color c.  The goal is to
make the graph monochromatic in as few moves as possible.  The package
provides exact solvers (breadth-first over recolorings, an interval
dynamic program, a split-graph engine), NP-hardness reductions from
vertex cover, canonical instance files, a CLI, and an HTTP service.
"""

from .core import (
    ColoredGraph,
    GameState,
    Move,
    Variant,
    VerifyResult,
    apply_move,
    bounds,
    contract,
    flood_neighborhood,
    verify_solution,
)
from .errors import (
    BudgetExceededError,
    CapacityError,
    FloodgraphError,
    InputError,
    NotInClassError,
    ReductionDomainError,
    VariantViolationError,
    WitnessGapError,
)
from .instances import InstanceDocument, emit, gen_random, parse
from .intervaldp import (
    ColorSetPath,
    IntervalRepresentation,
    build_colorset_path,
    build_representation,
    dp_solve,
    reconstruct_best_witness,
    reconstruct_witness,
    solve_proper_interval,
)
from .mpq import (
    MpqLeaf,
    MpqP,
    MpqQ,
    MpqTree,
    UniversalCase,
    build_mpq,
    format_mpq,
    root_projection,
    solve_interval,
)
from .oracle import Hint, SearchBudget, Solution, hint, solve_exact
from .reductions import (
    ReductionCertificate,
    VcInstance,
    VertexCover,
    caterpillar_cover_witness,
    proper_cover_witness,
    vc_bruteforce,
    vc_to_caterpillar,
    vc_to_proper_interval,
)
from .split import SplitDecomposition, recognize_split, solve_split

__all__ = [
    "ColoredGraph",
    "GameState",
    "Move",
    "Variant",
    "VerifyResult",
    "apply_move",
    "bounds",
    "contract",
    "flood_neighborhood",
    "verify_solution",
    "FloodgraphError",
    "InputError",
    "VariantViolationError",
    "NotInClassError",
    "BudgetExceededError",
    "CapacityError",
    "WitnessGapError",
    "ReductionDomainError",
    "SearchBudget",
    "Solution",
    "Hint",
    "hint",
    "solve_exact",
    "ColorSetPath",
    "IntervalRepresentation",
    "build_colorset_path",
    "build_representation",
    "dp_solve",
    "reconstruct_best_witness",
    "reconstruct_witness",
    "solve_proper_interval",
    "MpqLeaf",
    "MpqP",
    "MpqQ",
    "MpqTree",
    "UniversalCase",
    "build_mpq",
    "format_mpq",
    "root_projection",
    "solve_interval",
    "SplitDecomposition",
    "recognize_split",
    "solve_split",
    "VcInstance",
    "VertexCover",
    "ReductionCertificate",
    "vc_bruteforce",
    "vc_to_caterpillar",
    "vc_to_proper_interval",
    "caterpillar_cover_witness",
    "proper_cover_witness",
    "InstanceDocument",
    "parse",
    "emit",
    "gen_random",
]
