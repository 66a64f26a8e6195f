"""Exception hierarchy shared by every numrad module."""


class NumradError(Exception):
    """Base class for all library errors."""


class NotHermitian(NumradError):
    pass


class NotPsd(NumradError):
    pass


class NoConvergence(NumradError):
    pass


class DomainError(NumradError):
    """A scalar function returned NaN or inf on a spectral argument."""


class DimensionMismatch(NumradError):
    pass


class NegativeEntry(NumradError):
    pass


class EnclosureTooWide(NumradError):
    """The angular refinement could not shrink the enclosure below tolerance."""


class AssumptionViolated(NumradError):
    """An operator does not belong to the class a check requires."""


class ParamOutOfRange(NumradError):
    pass


class UnknownCheck(NumradError, KeyError):
    pass


class ConfigError(NumradError, ValueError):
    pass


class BadDim(NumradError, ValueError):
    pass


class MatrixFormatError(NumradError, ValueError):
    pass
