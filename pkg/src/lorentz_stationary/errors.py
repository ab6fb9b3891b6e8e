"""Exception types raised by the geometry and classification layers."""


class GeometryError(ValueError):
    """Base class for all domain errors."""


class DimensionError(GeometryError):
    pass


class OnConeError(GeometryError):
    """A point lies on (or numerically too close to) the lightlike cone."""


class DegenerateMetric(GeometryError):
    """The induced metric is singular (EG - F^2 ~ 0)."""


class IndeterminateAlpha(GeometryError):
    """<N, X> vanishes, so every alpha satisfies the stationarity equation."""


class WrongCausalType(GeometryError):
    pass


class NonUnitizableRuling(GeometryError):
    pass


class VanishingWPrime(GeometryError):
    pass


class ClassMismatch(GeometryError):
    """An operation was applied to a ruled chart of the wrong ruling class."""


class MixedClass(GeometryError):
    """Causal character of the ruling (or its derivative) changes along I."""


class DegenerateProbe(GeometryError):
    pass
