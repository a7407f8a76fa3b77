"""Exception hierarchy shared by every module."""


class SquarelegError(ValueError):
    """Base class; every library error is also a ValueError."""


class ZeroInput(SquarelegError):
    pass


class NotOddPrime(SquarelegError):
    pass


class EvenModulus(SquarelegError):
    pass


class NotCoprime(SquarelegError):
    pass


class NotOddSquarefree(SquarelegError):
    pass


class BadParams(SquarelegError):
    pass


class BadFamily(SquarelegError):
    pass


class BadModulus(SquarelegError):
    pass


class BadPrimes(SquarelegError):
    pass


class InvalidInput(SquarelegError):
    pass


class NonPrimitive(SquarelegError):
    pass


class DegenerateY(SquarelegError):
    pass


class ParityUnsupported(SquarelegError):
    pass


class StructuralViolation(SquarelegError):
    pass


class NotDescentCase(SquarelegError):
    pass


class HypothesisNotSatisfied(SquarelegError):
    pass
