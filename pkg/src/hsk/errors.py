"""Exception hierarchy shared by all hsk modules."""


class HskError(Exception):
    """Base class for every error raised by hsk."""


class DimensionError(HskError, ValueError):
    """Matrix/vector shapes or cube dimensions do not fit together."""


class LabelError(HskError, ValueError):
    """A vertex label lies outside the cube."""


class ArgumentError(HskError, ValueError):
    """An argument is outside the documented domain of an operation."""


class UnsupportedError(HskError, ValueError):
    """Input is well formed but the construction does not cover it."""


class ConstructionError(HskError, RuntimeError):
    """A constructive routine failed to produce a certified object."""


class CertificationError(HskError, RuntimeError):
    """A callback or sub-construction returned an object that failed validation."""


class HypothesisError(HskError, RuntimeError):
    """A gluing precondition does not hold for the supplied blocks."""


class ScaleError(HskError, ValueError):
    """Exhaustive routine refused because the input is too large."""
