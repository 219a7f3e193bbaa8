"""Exception hierarchy, organized by how the CLI maps failures to exit codes.

ValidationError and its children cover malformed input and violated
preconditions (exit 2).  SearchBudgetExceeded covers exhausted search budgets
(exit 3).  VerificationError and its children cover checks that ran and came
back negative (exit 4).
"""

from __future__ import annotations


class OrdembedError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(OrdembedError):
    """Malformed input or a violated operation precondition."""


class GroundSetMismatch(ValidationError):
    """Structures over different ground sets were combined."""

    def __init__(self, message: str = "operands are defined over different ground sets"):
        super().__init__(message)


class RelationPropertyError(ValidationError):
    """A relation lacks a property the operation requires.

    ``property_name`` names the missing property so callers and tests can
    distinguish failures without parsing messages.
    """

    def __init__(self, property_name: str, message: str | None = None):
        self.property_name = property_name
        super().__init__(message or f"relation is not {property_name}")


class NotPartialOrder(RelationPropertyError):
    def __init__(self, message: str = "relation is not a partial order"):
        super().__init__("partial_order", message)


class NotStrictPartialOrder(RelationPropertyError):
    def __init__(self, message: str = "relation is not a strict partial order"):
        super().__init__("strict_partial_order", message)


class NotCompleteTransitive(RelationPropertyError):
    def __init__(self, property_name: str = "complete_transitive",
                 message: str | None = None):
        super().__init__(property_name, message or "relation is not complete and transitive")


class NotContinuous(ValidationError):
    """A weak relation is not closed in the product topology."""

    def __init__(self, message: str = "relation is not closed in the product topology"):
        super().__init__(message)


class AcyclicityViolation(ValidationError):
    """Forcing a pair into an order closed into a cycle."""


class LengthMismatch(ValidationError):
    """Tuples of different lengths were compared coordinatewise."""


class EmptyFamily(ValidationError):
    """An operation needs at least one utility column."""


class NonpositiveEpsilon(ValidationError):
    """A threshold parameter must be strictly positive."""


class SearchBudgetExceeded(OrdembedError):
    """An exhaustive search ran out of its configured budget."""

    def __init__(self, message: str, *, max_k: int | None = None, max_n: int | None = None):
        self.max_k = max_k
        self.max_n = max_n
        super().__init__(message)


class VerificationError(OrdembedError):
    """A verification step ran to completion and failed."""


class ToleranceViolation(VerificationError):
    """A numeric check failed; carries the offending pair."""

    def __init__(self, message: str, *, pair: tuple[float, float] | None = None,
                 margin: float | None = None):
        self.pair = pair
        self.margin = margin
        super().__init__(message)


class InternalContractViolation(VerificationError):
    """A postcondition this package promises did not hold at runtime."""
