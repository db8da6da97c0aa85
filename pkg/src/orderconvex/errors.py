"""Exception types shared across the library."""


class OrderConvexError(Exception):
    """Base class for all library errors."""


class DuplicateElement(OrderConvexError):
    def __init__(self, name):
        super().__init__(f"duplicate element name: {name!r}")
        self.name = name


class CycleDetected(OrderConvexError):
    def __init__(self, names):
        super().__init__(f"order relation contains a cycle through {list(names)}")
        self.names = tuple(names)


class NotASemilattice(OrderConvexError):
    """Some pair of elements has no least upper bound."""

    def __init__(self, x, y):
        super().__init__(f"elements {x!r} and {y!r} have no least upper bound")
        self.pair = (x, y)


class CapExceeded(OrderConvexError):
    """A search space is larger than the configured cap.

    Raised instead of returning approximate answers; `partial` may carry
    whatever exact partial information was gathered before bailing out.
    """

    def __init__(self, what, limit, size=None, partial=None):
        msg = f"{what} exceeds cap {limit}" + (f" (needed {size})" if size else "")
        super().__init__(msg)
        self.what = what
        self.limit = limit
        self.size = size
        self.partial = partial


class NoBottom(OrderConvexError):
    pass


class NotDistributive(OrderConvexError):
    pass


class NotConvex(OrderConvexError):
    pass


class NotUpperSet(OrderConvexError):
    pass


class PointInA(OrderConvexError):
    pass


class NotInUpSet(OrderConvexError):
    pass


class HypothesisUnmet(OrderConvexError):
    """A theorem checker was invoked on an instance violating its hypotheses."""


class NotConvexMap(OrderConvexError):
    pass


class NotQuasiconcave(OrderConvexError):
    pass


class ConstantTop(OrderConvexError):
    pass
