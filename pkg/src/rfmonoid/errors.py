"""Exception types raised across the package."""


class MonoidError(ValueError):
    pass


class IndexOutOfRange(MonoidError):
    def __init__(self, index, size):
        self.index = index
        self.size = size
        super().__init__(f"element index {index} out of range for a monoid of order {size}")


class AssociativityViolation(MonoidError):
    def __init__(self, x, y, z):
        self.triple = (x, y, z)
        super().__init__(f"(x*y)*z != x*(y*z) for (x, y, z) = {self.triple}")


class IdentityViolation(MonoidError):
    def __init__(self, x, identity=None):
        self.x = x
        self.identity = identity
        super().__init__(f"identity law fails at element {x} (claimed identity {identity})")


class GeneratorsNotGenerating(MonoidError):
    def __init__(self, missing):
        self.missing = missing
        super().__init__(f"element {missing} is not a product of the generators")


class SizeOverflow(MonoidError):
    def __init__(self, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"construction needs {size} elements, cap is {cap}")


class NotAnIdeal(MonoidError):
    def __init__(self, x, s, side):
        self.x, self.s, self.side = x, s, side
        prod = f"{x}*{s}" if side == "right" else f"{s}*{x}"
        super().__init__(f"not an ideal: {prod} leaves the set")


class NotACongruence(MonoidError):
    def __init__(self, x, y, m, side):
        self.x, self.y, self.m, self.side = x, y, m, side
        super().__init__(f"pair ({x}, {y}) not stable under {side} multiplication by {m}")


class NotHomomorphism(MonoidError):
    def __init__(self, x, y):
        self.pair = (x, y)
        super().__init__(f"map(x*y) != map(x)*map(y) at (x, y) = {self.pair}")


class IdentityNotPreserved(MonoidError):
    pass


class NotIdempotent(MonoidError):
    def __init__(self, which):
        self.which = which
        super().__init__(f"element {which} is not idempotent")


class NotAnHClass(MonoidError):
    pass


class OrderBoundExceeded(MonoidError):
    def __init__(self, order, bound):
        self.order, self.bound = order, bound
        super().__init__(f"order {order} exceeds the brute-force bound {bound}")


class EqualElements(MonoidError):
    pass


class NotRegular(MonoidError):
    pass


class LRelatedPair(MonoidError):
    pass


class NotAGroup(MonoidError):
    pass


class NotNormal(MonoidError):
    pass


class NoSource(MonoidError):
    pass


class MalformedElement(MonoidError):
    pass


class InvalidParameter(MonoidError):
    pass


class ZeroArgument(MonoidError):
    pass


class OutsideDomain(MonoidError):
    pass


class WindowTooSmall(MonoidError):
    pass


class ParseError(MonoidError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")
