"""Exception taxonomy for the floodgraph package.

Every error raised on a user-facing path derives from FloodgraphError so
CLI and service layers can map failures to exit codes / problem JSON
uniformly.  Structure-recognition failures carry a concrete witness
(a chordless cycle, an asteroidal triple, a claw) so callers can show
*why* a graph is outside the class instead of a bare "no".
"""

from __future__ import annotations

from typing import Any


class FloodgraphError(Exception):
    """Base class for all package errors."""


class InputError(FloodgraphError):
    """Malformed instance data (bad JSON shape, color out of range, ...).

    ``field`` names the offending key when known, for error reporting.
    """

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


class VariantViolationError(FloodgraphError):
    """A move named a vertex other than the pivot in a fixed-pivot game."""

    def __init__(self, message: str, move_index: int | None = None):
        super().__init__(message)
        self.move_index = move_index


class NotInClassError(FloodgraphError):
    """Graph falls outside a required class; carries a witness.

    ``kind`` is one of "chordless_cycle", "asteroidal_triple", "claw",
    "not_split"; ``witness`` is the vertex tuple/list demonstrating it.
    """

    def __init__(self, message: str, kind: str, witness: Any):
        super().__init__(message)
        self.kind = kind
        self.witness = witness


class BudgetExceededError(FloodgraphError):
    """Search budget (states, depth, or wall time) ran out.

    The solver never returns a possibly-wrong answer; it raises this
    instead.  ``best_known`` is an upper bound found so far, or None.
    """

    def __init__(self, message: str, best_known: int | None = None):
        super().__init__(message)
        self.best_known = best_known


class CapacityError(FloodgraphError):
    """Instance exceeds a hard size cap of an engine (table memory, k)."""


class WitnessGapError(FloodgraphError):
    """An optimal value was computed but no replayable move list reached it.

    Carries the claimed value, the move prefix that did replay, and an
    independently computed reference value when one was affordable.
    """

    def __init__(
        self,
        message: str,
        claimed: int,
        prefix: list | None = None,
        reference: int | None = None,
    ):
        super().__init__(message)
        self.claimed = claimed
        self.prefix = prefix or []
        self.reference = reference


class ReductionDomainError(FloodgraphError):
    """Source graph is outside the domain of a reduction (e.g. m < 2)."""
