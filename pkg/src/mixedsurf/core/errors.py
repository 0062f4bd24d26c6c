"""Exception hierarchy for mixedsurf.

Every error carries the process exit code the CLI uses when it escapes a command.
"""
from __future__ import annotations

from typing import Optional


class MixedSurfError(Exception):
    """Base class for all mixedsurf errors."""

    exit_code: int = 1


# Validation failures (bad input or a candidate that fails a precondition)


class ValidationFailure(MixedSurfError):
    """Input or candidate data failed validation."""

    exit_code = 2


class InvalidPermutation(ValidationFailure):
    """A permutation is not a bijection of {1..d}."""


class NotASubgroup(ValidationFailure):
    """A member set is not a subgroup of the given group."""


class DoesNotNormalize(ValidationFailure):
    """The conjugating element does not normalize the subgroup."""


class NotCoprime(ValidationFailure):
    """n and a are not coprime."""


class OutOfRange(ValidationFailure):
    """A numeric argument is outside its admissible range."""


class DTypeInadmissible(ValidationFailure):
    """(n, a) cannot carry a D-type point."""

    def __init__(self, n: int, a: int, failures: list[str]):
        self.n = n
        self.a = a
        self.failures = failures
        super().__init__(f"D({n},{a}) inadmissible: {', '.join(failures)}")


class NonIntegralGenus(ValidationFailure):
    """Riemann-Hurwitz gives a non-integral genus."""


class NotIndexTwo(ValidationFailure):
    """The subgroup does not have index 2."""


class SplitExtension(ValidationFailure):
    """Some element outside G0 is an involution."""


class NotGenerating(ValidationFailure):
    """The vector fails the long relation or does not generate the group."""


class GenusBelowTwo(ValidationFailure):
    """The cover curve has genus below 2."""


class NotDiagonal(ValidationFailure):
    """Fixed point test called on an off-diagonal pair."""


class WrongIrregularity(ValidationFailure):
    """The operation needs a different base genus q."""


class MixedContextMissing(ValidationFailure):
    """Hurwitz reduction needs the extension group."""


class InconsistentPresentation(ValidationFailure):
    """A named group descriptor violates its presentation constraints."""


class InputError(ValidationFailure):
    """An input file is malformed."""


# Catalogue problems


class CatalogueError(MixedSurfError):
    """Catalogue could not be used."""

    exit_code = 3


class ParseError(CatalogueError):
    """The catalogue file does not parse."""


class CatalogueValidationError(CatalogueError):
    """The catalogue file parses but its groups are inconsistent."""


class OrderNotCovered(CatalogueError):
    """The catalogue does not declare this order complete."""

    def __init__(self, order: int, message: Optional[str] = None):
        self.order = order
        super().__init__(message or f"order {order} not covered by the catalogue")


# Caps


class CapError(MixedSurfError):
    """A configured size cap was exceeded."""

    exit_code = 2


class OrderCapExceeded(CapError):
    """Permutation closure passed the configured group order cap."""


class OracleCapExceeded(CapError):
    """The brute-force singularity oracle would exceed its cell cap."""


# Internal consistency (these indicate a bug, never bad input)


class InternalConsistencyError(MixedSurfError):
    """A proven identity failed."""

    exit_code = 1


class PairingParityError(InternalConsistencyError):
    """Non-fixed points of one analytic type are odd in number."""


class NoetherViolation(InternalConsistencyError):
    """K^2 + e is not 12 chi with chi integral."""


class IntegralityViolation(InternalConsistencyError):
    """A quantity that must be integral is not."""


class OracleMismatch(InternalConsistencyError):
    """Fast singularity path and brute-force oracle disagree."""
