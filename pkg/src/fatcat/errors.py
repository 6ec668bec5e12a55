"""Exception hierarchy shared across the package."""


class FatcatError(Exception):
    """Base class for all errors raised by this package."""


class StructuralError(FatcatError):
    """A table is malformed (dangling id, wrong arity, missing entry)."""


class CompositionUndefined(FatcatError):
    """Composition requested for a non-composable pair of arrows or cells."""


class NotInvertible(FatcatError):
    """An operation required an invertible arrow and none exists."""


class EndpointMismatch(FatcatError):
    """A cell's boundary data does not line up with its stated endpoints."""


class DefiningConditionError(FatcatError):
    """A cell's hom-set map does not send the top arrow to the bottom arrow."""


class SquareDoesNotCommute(FatcatError):
    """A square handed to the induced-cell constructor fails to commute."""


class SizeGuardExceeded(FatcatError):
    """An instance builder was asked for something too large to enumerate."""


class DocumentError(FatcatError):
    """A document failed to parse or cross-reference."""


class SuiteError(FatcatError):
    """A verification suite was requested for an inapplicable document kind."""
