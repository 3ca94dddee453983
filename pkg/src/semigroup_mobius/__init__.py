"""Möbius function of the poset (Z, <=_S) induced by a numerical semigroup S."""

from .closed_forms import (
    ArithmeticRecursion,
    EvenCaseParams,
    Family,
    MultisetId,
    mobius_arithmetic,
    mobius_deddens,
    mobius_even_closed,
    mobius_even_step,
    multiplicity,
)
from .errors import (
    EmptyGenerators,
    GcdNotOne,
    GridTooLarge,
    IntegerOverflow,
    InvalidRepresentation,
    KOutOfRange,
    NonPositiveGenerator,
    NotAMember,
    OutOfDomain,
    SemigroupError,
)
from .intmath import strict_int64
from .oracle import (
    ChainCounter,
    MobiusMemo,
    convolution_residual,
    count_chains,
    mobius_bivariate,
    mobius_by_chains,
    mobius_recursive,
)
from .semigroup import (
    ArithmeticParams,
    NumericalSemigroup,
    Representation,
    apery_arithmetic,
    apery_set,
    compose,
    contains,
    contains_arithmetic,
    decompose,
    make_arithmetic,
    make_semigroup,
)

__version__ = "0.1.0"
