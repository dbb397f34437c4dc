"""Exception hierarchy shared across the package."""


class Error(Exception):
    """Base class for all objred exceptions."""


class InfeasibleRegion(Error):
    """The feasible region Ax <= b, x >= 0 is empty."""


class UnboundedRegion(Error):
    """The feasible region is unbounded where a bounded one is required."""


class UnboundedObjective(Error):
    """A single objective has no finite maximum over the region."""


class InfeasibleInput(Error):
    """A point supplied as feasible is not."""


class ParseError(Error):
    """Problem document is malformed."""


class DimensionError(ParseError):
    """Coefficient list lengths disagree with the variable count."""


class RelationError(ParseError):
    """Constraint uses a relation other than '<='."""
