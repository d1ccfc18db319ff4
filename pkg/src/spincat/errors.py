"""Exception hierarchy shared by every spincat module."""


class SpinCatError(ValueError):
    """Base class for domain errors raised by spincat."""


class InvalidParams(SpinCatError):
    pass


class DegenerateCat(SpinCatError):
    """Odd cat state with p**(2j) == 1: the normalization diverges."""


class DegenerateTarget(SpinCatError):
    """Target superposition a|eta> + b|-eta> has zero (or negative) norm."""


class ZeroBranch(SpinCatError):
    """A measurement branch with vanishing probability has no conditional state."""


class TreeTooDeep(SpinCatError):
    pass


class UnsupportedDepth(SpinCatError):
    pass


class InfiniteRepetitions(SpinCatError):
    pass


class SingularBasis(SpinCatError):
    """The coherent -> logical change of basis is singular at p == 1."""


class InvalidSpec(SpinCatError):
    pass
