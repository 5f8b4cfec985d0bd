"""Exception hierarchy shared by all magtfd modules."""


class MagtfdError(Exception):
    """Base class for all magtfd errors."""


class ParameterError(MagtfdError):
    """An input violates a parameter invariant (wrong sign, wrong range)."""


class DivergenceError(MagtfdError):
    """A quantity diverges for the given inputs (e.g. a vanishing mode frequency)."""


class NumericDomainError(MagtfdError):
    """A computed value left its analytically guaranteed domain; indicates a bug upstream."""


class SingularRateError(MagtfdError):
    """The complexity rate is requested at a point where it is not defined."""


class InsufficientDataError(MagtfdError):
    """A time series does not contain enough structure for the requested estimate."""
