"""Numerical semigroups, arithmetic semigroups, Apéry sets and normal forms.

A numerical semigroup ``S = <a1, ..., an>`` is the set of nonnegative
integer combinations of coprime positive generators.  An arithmetic
semigroup is the special case ``<a, a+d, ..., a+kd>`` with
``gcd(a, d) = 1`` and ``1 <= k <= a-1``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

from .errors import (
    EmptyGenerators,
    GcdNotOne,
    InvalidRepresentation,
    KOutOfRange,
    NonPositiveGenerator,
    NotAMember,
    SemigroupError,
)
from .intmath import checked


class _MembershipTable:
    """Forward DP table ``member[x]`` for ``0 <= x < len``, grown on demand.

    Once ``multiplicity`` consecutive members have been seen, every larger
    integer is a member too (add the smallest generator repeatedly), so the
    table stops growing at that point.
    """

    def __init__(self, generators: tuple[int, ...]):
        self._gens = generators
        self._m = generators[0]
        self._member = [True]
        self._run = 1 if self._m == 1 else 0
        self._closed_from: int | None = 0 if self._m == 1 else None
        self._lock = threading.Lock()

    def __call__(self, x: int) -> bool:
        if x < 0:
            return False
        if self._closed_from is not None and x >= self._closed_from:
            return True
        if x >= len(self._member):
            self._grow(x)
            if self._closed_from is not None and x >= self._closed_from:
                return True
        return self._member[x]

    def _grow(self, target: int) -> None:
        with self._lock:
            member = self._member
            n = len(member)
            stop = max(target + 1, 2 * n)
            while n < stop and self._closed_from is None:
                ok = any(g <= n and member[n - g] for g in self._gens)
                member.append(ok)
                self._run = self._run + 1 if ok else 0
                if self._run >= self._m:
                    self._closed_from = n - self._m + 1
                n += 1


@dataclass(frozen=True)
class NumericalSemigroup:
    generators: tuple[int, ...]
    _table: _MembershipTable = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        object.__setattr__(self, "_table", _MembershipTable(self.generators))

    def __reduce__(self):
        return (type(self), (self.generators,))

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def minimal_generators(self) -> tuple[int, ...]:
        """Generators that are not sums of smaller generators."""
        mins: list[int] = []
        for g in self.generators:
            if not _reachable(g, mins):
                mins.append(g)
        return tuple(mins)

    def __contains__(self, x: int) -> bool:
        return self._table(x)

    def elements_up_to(self, n: int) -> list[int]:
        return [x for x in range(n + 1) if self._table(x)]

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.generators)) + ">"


def _reachable(x: int, gens: list[int]) -> bool:
    if not gens:
        return x == 0
    reach = [False] * (x + 1)
    reach[0] = True
    for y in range(1, x + 1):
        reach[y] = any(g <= y and reach[y - g] for g in gens)
    return reach[x]


def make_semigroup(generators) -> NumericalSemigroup:
    """Validate, sort and deduplicate ``generators``.

    >>> make_semigroup([3, 2, 3])
    NumericalSemigroup(generators=(2, 3))
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] < 1:
        raise NonPositiveGenerator(f"generator {gens[0]} is not positive")
    if reduce(gcd, gens) != 1:
        raise GcdNotOne(f"gcd of {gens} is {reduce(gcd, gens)}, expected 1")
    return NumericalSemigroup(tuple(gens))


@dataclass(frozen=True)
class ArithmeticParams:
    """``S = <a, a+d, ..., a+kd>`` together with ``a = q*k + r``."""

    a: int
    d: int
    k: int
    q: int
    r: int

    @property
    def step(self) -> int:
        """The largest generator ``a + k*d``."""
        return self.a + self.k * self.d

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(self.a + j * self.d for j in range(self.k + 1))

    @property
    def semigroup(self) -> NumericalSemigroup:
        return _semigroup_cache(self.generators)

    @property
    def d_inverse(self) -> int:
        """Inverse of ``d`` modulo ``a`` (0 when ``a == 1``)."""
        return pow(self.d, -1, self.a) if self.a > 1 else 0

    def __str__(self) -> str:
        return f"<{self.a},{self.a}+{self.d},...,{self.a}+{self.k}*{self.d}>"


_SEMIGROUPS: dict[tuple[int, ...], NumericalSemigroup] = {}


def _semigroup_cache(gens: tuple[int, ...]) -> NumericalSemigroup:
    s = _SEMIGROUPS.get(gens)
    if s is None:
        s = _SEMIGROUPS.setdefault(gens, make_semigroup(gens))
    return s


def make_arithmetic(a: int, d: int, k: int) -> ArithmeticParams:
    """Build the parameters of ``<a, a+d, ..., a+kd>``.

    >>> make_arithmetic(22, 5, 2)
    ArithmeticParams(a=22, d=5, k=2, q=11, r=0)
    """
    if a < 2:
        raise KOutOfRange(f"a={a} leaves no admissible k (need 1 <= k <= a-1)")
    if d < 1:
        raise SemigroupError(f"common difference d={d} must be positive")
    if k < 1 or k > a - 1:
        raise KOutOfRange(f"k={k} outside 1..{a - 1}")
    if gcd(a, d) != 1:
        raise GcdNotOne(f"gcd({a}, {d}) = {gcd(a, d)}")
    q, r = divmod(a, k)
    return ArithmeticParams(a, d, k, q, r)


def as_arithmetic(S: NumericalSemigroup) -> ArithmeticParams | None:
    """Return arithmetic parameters if the generator list is a progression."""
    g = S.generators
    if len(g) < 2:
        return None
    d = g[1] - g[0]
    if any(g[j + 1] - g[j] != d for j in range(len(g) - 1)):
        return None
    try:
        return make_arithmetic(g[0], d, len(g) - 1)
    except SemigroupError:
        return None


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


def contains_arithmetic(A: ArithmeticParams, x: int) -> bool:
    """Membership through ``x = m_a*a + m_d*d`` with ``0 <= m_d < a``.

    ``x`` is in S exactly when ``m_a >= ceil(m_d / k)``.
    """
    if x < 0:
        return False
    m_d = (x * A.d_inverse) % A.a
    m_a, rem = divmod(x - m_d * A.d, A.a)
    if rem:
        return False
    return m_a >= -(-m_d // A.k)


def apery_set(S: NumericalSemigroup, m: int) -> list[int]:
    """Smallest element of S in each residue class mod ``m``, sorted."""
    if m < 1 or m not in S:
        raise NotAMember(f"{m} is not a positive element of {S}")
    found: dict[int, int] = {}
    x = 0
    while len(found) < m:
        if x in S and x % m not in found:
            found[x % m] = x
        x += 1
    return sorted(found.values())


def apery_arithmetic(A: ArithmeticParams) -> list[int]:
    """``ceil(i/k)*a + i*d`` for ``i = 0..a-1``, in order of ``i``."""
    return [-(-i // A.k) * A.a + i * A.d for i in range(A.a)]


@dataclass(frozen=True)
class Representation:
    """``x = x0*a + xi*(a + i*d) + xk*(a + k*d)``.

    ``x0`` may be negative; the element lies in S iff ``x0 >= 0``.  When
    ``xi == 0`` the index ``i`` is normalized to 1.
    """

    x0: int
    i: int
    xi: int
    xk: int

    def as_list(self) -> list[int]:
        return [self.x0, self.xi, self.xk]


def _require_k2(A: ArithmeticParams) -> None:
    if A.k < 2:
        raise KOutOfRange("representations need k >= 2; use the two-generator formula")


def decompose(A: ArithmeticParams, x: int) -> Representation:
    """Normal form of any integer ``x``; total on Z for ``k >= 2``.

    >>> A = make_arithmetic(22, 5, 2)
    >>> decompose(A, 54).as_list()
    [1, 0, 1]
    >>> decompose(A, 100).as_list()
    [-10, 0, 10]
    """
    _require_k2(A)
    t = (x * A.d_inverse) % A.a
    xk, i = divmod(t, A.k)
    xi = 1 if i else 0
    if not xi:
        i = 1
    rest = x - xi * (A.a + i * A.d) - xk * A.step
    x0, rem = divmod(rest, A.a)
    assert rem == 0
    return Representation(checked(x0), i, xi, xk)


def compose(A: ArithmeticParams, rep: Representation) -> int:
    _require_k2(A)
    if rep.xi not in (0, 1):
        raise InvalidRepresentation(f"xi={rep.xi} must be 0 or 1")
    if not 1 <= rep.i <= A.k - 1:
        raise InvalidRepresentation(f"i={rep.i} outside 1..{A.k - 1}")
    if rep.xi == 0 and rep.i != 1:
        raise InvalidRepresentation("i must be normalized to 1 when xi == 0")
    if rep.xk < 0 or rep.xk > A.a // A.k:
        raise InvalidRepresentation(f"xk={rep.xk} outside 0..{A.a // A.k}")
    if rep.i * rep.xi + A.k * rep.xk >= A.a:
        raise InvalidRepresentation("i*xi + k*xk must be below a")
    return checked(rep.x0 * A.a + rep.xi * (A.a + rep.i * A.d) + rep.xk * A.step)
