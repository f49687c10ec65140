"""Exception hierarchy shared by every module."""


class CohadjError(Exception):
    """Base class for all errors raised by the package."""


class SquiggleError(CohadjError, ValueError):
    pass


class EndpointNotSign(SquiggleError):
    def __init__(self, index: int):
        super().__init__(f"letter {index} is an endpoint but not a sign")
        self.index = index


class GapOutOfRange(SquiggleError):
    def __init__(self, index: int, letter: int, dim: int):
        super().__init__(f"letter {index} = {letter} lies outside 1..{dim}")
        self.index = index


class UndulationViolation(SquiggleError):
    def __init__(self, index: int):
        super().__init__(f"strict undulation fails between letters {index} and {index + 1}")
        self.index = index


class DimensionMismatch(CohadjError, ValueError):
    pass


class NotComposable(CohadjError, ValueError):
    pass


class IsIdentity(CohadjError, ValueError):
    pass


class IndexOutOfRange(CohadjError, IndexError):
    pass


class SquiggleSyntaxError(CohadjError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class TruncationTooSmall(CohadjError):
    pass


class IncompleteWitness(CohadjError):
    pass


class VerticesDoNotMatch(CohadjError, ValueError):
    pass


class NotFillable(CohadjError, ValueError):
    pass


class DimZero(CohadjError, ValueError):
    pass


class IsFillable(CohadjError, ValueError):
    pass


class NotAtomic(CohadjError, ValueError):
    pass


class Degenerate(CohadjError, ValueError):
    pass


class NotParental(CohadjError):
    pass


class FaceNotInBase(CohadjError):
    def __init__(self, index: int):
        super().__init__(f"face {index} is not a member of the base")
        self.index = index


class NotInSubcategory(CohadjError, ValueError):
    pass


class NotFoundWithinBound(CohadjError):
    pass


class InputNotFinite(CohadjError, ValueError):
    pass


class LawViolation(CohadjError, ValueError):
    pass


class NotAnAlgebra(CohadjError, ValueError):
    pass


class NotStabilized(CohadjError):
    pass
