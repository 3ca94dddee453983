"""Exception hierarchy shared by every module of the package."""


class SemigroupError(ValueError):
    """Base class for invalid semigroup input or out-of-domain queries."""


class EmptyGenerators(SemigroupError):
    pass


class NonPositiveGenerator(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    pass


class KOutOfRange(SemigroupError):
    pass


class NotAMember(SemigroupError):
    pass


class InvalidRepresentation(SemigroupError):
    pass


class OutOfDomain(SemigroupError):
    pass


class GridTooLarge(SemigroupError):
    pass


class IntegerOverflow(OverflowError):
    """A value left the signed 64-bit range."""
