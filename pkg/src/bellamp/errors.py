"""Exception types shared across the package."""


class CutoffError(ValueError):
    """A photon index lies beyond the truncation cutoff of a state."""


class DimensionMismatchError(ValueError):
    """Two states with different cutoffs were combined."""


class DomainError(ValueError):
    """A scalar argument lies outside the mathematical domain of a formula."""


class DegeneratePointError(ValueError):
    """Error propagation was requested at a signal extremum, where the
    slope vanishes and the propagated phase error diverges."""
