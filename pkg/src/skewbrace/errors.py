"""Exception hierarchy shared by every module."""
from __future__ import annotations


class GroupError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(GroupError):
    """A table or file does not describe the claimed structure."""


class NotLatinSquare(ValidationError):
    def __init__(self, kind: str, index: int):
        self.kind, self.index = kind, index
        super().__init__(f"{kind} {index} of the table is not a permutation")


class NoIdentity(ValidationError):
    def __init__(self, identity: int, witness: int):
        self.identity, self.witness = identity, witness
        super().__init__(f"element {identity} is not an identity (fails against {witness})")


class NoInverse(ValidationError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class NotAssociative(ValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for (a, b, c) = {self.witness}")


class NotNormal(GroupError):
    pass


class NotNilpotent(GroupError):
    pass


class NotSoluble(GroupError):
    pass


class NotFound(GroupError):
    """A search that should succeed by theory came back empty."""


class TooLarge(GroupError):
    pass


class IdentityMismatch(ValidationError):
    def __init__(self, add_identity: int, mul_identity: int):
        self.add_identity, self.mul_identity = add_identity, mul_identity
        super().__init__(
            f"additive identity {add_identity} != multiplicative identity {mul_identity}"
        )


class CompatibilityFailure(ValidationError):
    def __init__(self, a: int, b: int, c: int, labels=None):
        self.witness = (a, b, c)
        shown = self.witness if labels is None else tuple(labels[i] for i in self.witness)
        super().__init__(f"a(b+c) != ab - a + ac at (a, b, c) = {shown}")


class HypothesisFailure(GroupError):
    """A theorem's hypothesis does not hold for the given input."""

    def __init__(self, index, message: str = "", witness=None):
        self.index, self.witness = index, witness
        super().__init__(message or f"hypothesis {index} fails (witness {witness})")


class SylowClassTooBig(HypothesisFailure):
    def __init__(self, p: int, nil_class):
        self.p, self.nil_class = p, nil_class
        super().__init__(
            "sylow-class", f"Sylow {p}-subgroup has nilpotency class {nil_class} > 2", p
        )


class Sylow2NotQ8(HypothesisFailure):
    def __init__(self, order: int):
        super().__init__("sylow2-q8", f"Sylow 2-subgroup (order {order}) is not isomorphic to Q8")


class NotClassTwo(HypothesisFailure):
    def __init__(self, message: str = "group is not nilpotent of class at most 2"):
        super().__init__("class-two", message)


class EvenCommutator(HypothesisFailure):
    def __init__(self, order: int):
        self.order = order
        super().__init__("odd-commutator", f"derived subgroup has even order {order}")


class NoSylowTower(HypothesisFailure):
    def __init__(self):
        super().__init__("sylow-tower", "group has no Sylow tower")


class NotWellDefined(GroupError):
    def __init__(self, g1: int, g2: int, sums):
        self.witness = (g1, g2)
        self.sums = sums
        super().__init__(f"sum of {g1} and {g2} depends on the factorisation: {sorted(sums)}")


class ConditionFailure(GroupError):
    def __init__(self, i: int, condition, witness=None, message: str = ""):
        self.i, self.condition, self.witness = i, condition, witness
        super().__init__(
            message or f"factor {i}: condition ({condition}) fails, witness {witness}"
        )


class Unsupported(GroupError):
    def __init__(self, reason: str, cause: Exception | None = None):
        self.reason, self.cause = reason, cause
        super().__init__(reason)


class ParseError(ValidationError):
    pass


class UnknownName(GroupError):
    pass
