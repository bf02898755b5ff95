"""Exception types shared across the package."""


class TwoChainError(Exception):
    """Base class for every error raised by this package."""


class SizeError(TwoChainError, ValueError):
    """An exhaustive routine was asked to run above its size cap."""


class CycleError(TwoChainError, ValueError):
    """A relation would not be antisymmetric after transitive closure."""


class NotTwoChain(TwoChainError, ValueError):
    pass


class NotMaximal(TwoChainError, ValueError):
    pass


class ShapeError(TwoChainError, ValueError):
    """Maximal/minimal structure or a splice shape is not of the required form."""


class NotCaterpillar(TwoChainError, ValueError):
    pass


class LengthMismatch(TwoChainError, ValueError):
    pass


class InternalInconsistency(TwoChainError, AssertionError):
    """Two independent constructions of the same object disagreed."""


class ParseError(TwoChainError, ValueError):
    pass


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeError(f"{what}: size {n} exceeds cap {cap}")
