"""Fast formulas for mu_S.

* two generators: a constant-time periodic formula with period ``a*b``;
* ``<a, a+d, ..., a+kd>``: a recursion that only looks back along the
  Apéry set of ``a`` (``O(k)`` work per value);
* ``<2q, 2q+d, 2q+2d>``: a closed form in terms of the multiplicity
  functions of the multisets ``A_i``, ``B_i``, ``C_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Callable

from .errors import GcdNotOne, KOutOfRange, OutOfDomain, SemigroupError
from .intmath import checked
from .oracle import MobiusMemo
from .semigroup import (
    ArithmeticParams,
    Representation,
    compose,
    decompose,
    make_arithmetic,
)


def mobius_deddens(a: int, b: int, x: int) -> int:
    """Two-generator formula for ``S = <a, b>``.

    >>> [mobius_deddens(2, 3, x) for x in range(7)]
    [1, 0, -1, -1, 0, 1, 1]
    """
    if a > b:
        a, b = b, a
    if a < 2 or a == b:
        raise SemigroupError(f"need 2 <= a < b, got a={a}, b={b}")
    if gcd(a, b) != 1:
        raise GcdNotOne(f"gcd({a}, {b}) = {gcd(a, b)}")
    if x < 0:
        return 0
    ab = a * b
    res = x % ab
    if res == 0 or res == (a + b) % ab:
        return 1
    if res == a or res == b:
        return -1
    return 0


class ArithmeticRecursion:
    """Memoized mu_S for ``S = <a, a+d, ..., a+kd>`` with ``k >= 2``.

    Off the four points ``{0, a, T, a+T}`` (``T = a + kd``) every value is a
    signed sum of earlier values shifted by ``a + i*d`` and multiples of
    ``T``.  The four excluded points are taken once from the oracle.
    Same single-writer contract as :class:`MobiusMemo`.
    """

    def __init__(self, params: ArithmeticParams):
        if params.k < 2:
            raise KOutOfRange("k must be at least 2; use mobius_deddens for k = 1")
        self.params = params
        a, d, k, q, r = params.a, params.d, params.k, params.q, params.r
        T = params.step
        oracle = MobiusMemo(params.semigroup)
        self._base = {x: oracle[x] for x in (0, a, T, a + T)}
        gens = [a + i * d for i in range(1, k)]
        # (shift, sign) pairs: mu(x) = sum sign * mu(x - shift)
        if r == 0:
            terms = [(q * T, 1)]
            terms += [(g + q * T, 1) for g in gens]
        else:
            terms = [((q + 1) * T, 1)]
            terms += [(a + i * d + (q + 1) * T, 1) for i in range(1, r)]
            terms += [(a + i * d + q * T, 1) for i in range(r, k)]
        terms += [(g, -1) for g in gens]
        self.terms = terms
        self._mu: list[int] = []

    def __getitem__(self, x: int) -> int:
        if x < 0:
            return 0
        mu = self._mu
        for n in range(len(mu), x + 1):
            base = self._base.get(n)
            if base is not None:
                mu.append(base)
                continue
            s = 0
            for shift, sign in self.terms:
                if n >= shift:
                    s += sign * mu[n - shift]
            mu.append(checked(s))
        return mu[x]


def mobius_arithmetic(
    params: ArithmeticParams, x: int, memo: ArithmeticRecursion | None = None
) -> int:
    """mu_S(x) for an arithmetic semigroup with ``k >= 2``.

    >>> A = make_arithmetic(3, 1, 2)
    >>> mobius_arithmetic(A, 12), mobius_arithmetic(A, 7)
    (-3, 1)
    """
    if memo is None:
        memo = ArithmeticRecursion(params)
    elif memo.params != params:
        raise ValueError("memo was built for different parameters")
    return memo[x]


@dataclass(frozen=True)
class EvenCaseParams:
    """``S = <2q, 2q+d, 2q+2d>`` with ``d`` odd, ``gcd(q, d) = 1``, ``q >= 2``."""

    q: int
    d: int

    def __post_init__(self):
        if self.q < 2:
            raise KOutOfRange(f"q={self.q} must be at least 2")
        if self.d < 1:
            raise SemigroupError(f"d={self.d} must be positive")
        if gcd(2 * self.q, self.d) != 1:
            raise GcdNotOne(f"gcd(2q, d) = gcd({2 * self.q}, {self.d}) != 1")

    @property
    def a(self) -> int:
        return 2 * self.q

    @property
    def arithmetic(self) -> ArithmeticParams:
        return make_arithmetic(self.a, self.d, 2)

    @classmethod
    def from_arithmetic(cls, A: ArithmeticParams) -> "EvenCaseParams":
        if A.k != 2 or A.a % 2:
            raise SemigroupError(f"{A} is not of the form <2q, 2q+d, 2q+2d>")
        return cls(A.a // 2, A.d)


class Family(Enum):
    A = "A"
    B = "B"
    C = "C"


@dataclass(frozen=True)
class MultisetId:
    family: Family
    offset: int

    def __post_init__(self):
        if self.offset not in (-1, 0, 1):
            raise ValueError(f"offset {self.offset} not in {{-1, 0, 1}}")


def _mult_a(P: EvenCaseParams, i: int, x: int) -> int:
    y = x - i
    return 1 if y >= 0 and y % (P.q + P.d) == 0 else 0


def _mult_b(P: EvenCaseParams, i: int, x: int) -> int:
    """Count pairs ``(m, n)``, ``m >= 2``, ``1 <= n <= m//2`` with
    ``m*(q+d) - n*d + i == x``.

    ``n`` is an integer only for ``m`` in one residue class mod ``d``
    (``q+d`` is invertible mod ``d``), and ``n >= 1`` bounds ``m`` below.
    The smallest value reachable for a given ``m`` grows with ``m``, so the
    scan stops at the first ``m`` whose minimum overshoots ``x``; every
    ``m`` visited before that has ``n <= m//2``.
    """
    step, d = P.q + P.d, P.d
    target = x - i
    lo = max(2, -(-(target + d) // step))
    residue = (target * pow(step, -1, d)) % d if d > 1 else 0
    m = lo + (residue - lo) % d
    count = 0
    while m * step - (m // 2) * d <= target:
        count += 1
        m += d
    return count


def multiplicity(P: EvenCaseParams, ident: MultisetId, x: int) -> int:
    """How many times ``x`` occurs in ``A_i``, ``B_i`` or ``C_i = A_i + B_i``.

    >>> P = EvenCaseParams(11, 5)
    >>> multiplicity(P, MultisetId(Family.B, 0), 459)
    2
    """
    i = ident.offset
    if ident.family is Family.A:
        return _mult_a(P, i, x)
    if ident.family is Family.B:
        return _mult_b(P, i, x)
    return _mult_a(P, i, x) + _mult_b(P, i, x)


def _m(P: EvenCaseParams, family: Family, i: int, x: int) -> int:
    return multiplicity(P, MultisetId(family, i), x)


def mobius_even_closed(P: EvenCaseParams, x: int) -> int:
    """Closed form for ``<2q, 2q+d, 2q+2d>`` through ``x = [x0, x1, x2]``.

    >>> P = EvenCaseParams(11, 5)
    >>> mobius_even_closed(P, 54), mobius_even_closed(P, 594)
    (2, 2)
    """
    rep = decompose(P.arithmetic, x)
    return _even_value(P, rep.x0, rep.xi, rep.xk)


def _even_value(P: EvenCaseParams, x0: int, x1: int, x2: int) -> int:
    sign = -1 if x1 else 1
    if x2 == 0:
        A, B = Family.A, Family.B
        v = (
            _m(P, A, 0, x0)
            - _m(P, A, 1, x0)
            + 2 * _m(P, B, 0, x0)
            - _m(P, B, -1, x0)
            - _m(P, B, 1, x0)
        )
    else:
        C, y = Family.C, x0 - x2
        v = 2 * _m(P, C, 0, y) - _m(P, C, -1, y) - _m(P, C, 1, y)
    return sign * v


def even_rep(P: EvenCaseParams, x0: int, x1: int, x2: int) -> Representation:
    """``[x0, x1, x2]`` as a :class:`Representation` (``x0`` any integer)."""
    return Representation(x0, 1, x1, x2)


def mobius_even_step(
    P: EvenCaseParams,
    rep: Representation,
    mu: Callable[[int], int] | None = None,
) -> int:
    """Right-hand side of the three-term recursion for ``[x0, x1, x2]``.

    ``mu`` evaluates mu_S at an integer; it defaults to the closed form.
    The ``x1 = 1`` case reuses the ``x1 = 0`` shape with ``x1`` held at 1.
    """
    x0, x1, x2 = rep.x0, rep.xi, rep.xk
    if x0 in (0, 1) and x2 in (0, 1):
        raise OutOfDomain(f"(x0, x2) = ({x0}, {x2}) lies in the excluded corner")
    if not 0 <= x2 <= P.q - 1 or x1 not in (0, 1):
        raise OutOfDomain(f"[{x0}, {x1}, {x2}] is not an admissible representation")
    if mu is None:
        mu = lambda y: mobius_even_closed(P, y)  # noqa: E731
    A = P.arithmetic
    s = P.q + P.d

    def at(y0: int, y2: int) -> int:
        return mu(compose(A, even_rep(P, y0, x1, y2)))

    if x2 == 0:
        return checked(at(x0 - s, 0) + at(x0 - s - 1, P.q - 1) - at(x0 - 2 * s - 1, P.q - 1))
    return checked(at(x0 - s, x2) + at(x0 - 1, x2 - 1) - at(x0 - s - 1, x2 - 1))
