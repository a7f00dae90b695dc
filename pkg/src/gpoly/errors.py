"""Exception hierarchy shared by every gpoly module."""


class GpolyError(Exception):
    """Base class for all library errors."""


class DuplicateAbscissa(GpolyError, ValueError):
    pass


class IndexOutOfRange(GpolyError, IndexError):
    pass


class NotSymmetric(GpolyError, ValueError):
    pass


class DimensionTooLarge(GpolyError):
    """A permanent was requested above the configured dimension cap."""

    def __init__(self, n, cap):
        super().__init__(f"permanent of a {n}x{n} matrix exceeds the cap of {cap}")
        self.n = n
        self.cap = cap


class MalformedGraph6(GpolyError, ValueError):
    pass


class TooManyVertices(GpolyError, ValueError):
    pass


class NoSuchEdge(GpolyError, KeyError):
    pass


class ZeroGamma(GpolyError, ValueError):
    pass


class ZeroWeight(GpolyError, ValueError):
    pass


class MalformedDeck(GpolyError, ValueError):
    """A deck bundle violates its structural invariants."""


class MissingPairDeck(MalformedDeck):
    pass


class DegreeMismatch(MalformedDeck):
    pass


class MalformedRational(GpolyError, ValueError):
    pass
