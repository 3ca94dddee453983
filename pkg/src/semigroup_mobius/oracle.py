"""Ground-truth Möbius values on the poset (Z, <=_S).

Two independent routes are provided:

* :func:`mobius_by_chains` sums ``(-1)**l * c_l(0, x)`` over chain counts,
  where counts come from the segment recursion in :class:`ChainCounter`.
* :func:`mobius_recursive` uses ``mu(x) = -sum_{y in S, y > 0} mu(x - y)``
  filled bottom-up into a :class:`MobiusMemo`.

Because ``mu_S(x, y) = mu_S(0, y - x)``, everything is a function of one
integer.
"""

from __future__ import annotations

import numpy as np

from .intmath import INT64_MAX, checked, checked_sum
from .semigroup import NumericalSemigroup


class ChainCounter:
    """Memoized ``c_l(0, x)``: chains ``0 = a0 <_S a1 <_S ... <_S al = x``.

    Uses ``c_l(0, x) = sum_{c in [0, x[} c_{l-1}(0, c)``; the half-open
    segment ``[0, x[`` is every ``c`` in S with ``x - c`` in ``S \\ {0}``.
    """

    def __init__(self, S: NumericalSemigroup):
        self.S = S
        self._cache: dict[tuple[int, int], int] = {}

    def __call__(self, x: int, l: int) -> int:
        if l < 0:
            raise ValueError("chain length must be nonnegative")
        if x < 0 or x not in self.S:
            return 0
        if l == 0:
            return 1 if x == 0 else 0
        key = (x, l)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        S = self.S
        total = checked_sum(
            self(c, l - 1) for c in range(x) if c in S and (x - c) in S
        )
        self._cache[key] = total
        return total


def count_chains(S: NumericalSemigroup, x: int, l: int, counter: ChainCounter | None = None) -> int:
    """Number of chains of length ``l`` from 0 to ``x``.

    >>> from semigroup_mobius.semigroup import make_semigroup
    >>> S = make_semigroup([2, 3])
    >>> count_chains(S, 5, 1), count_chains(S, 5, 2)
    (1, 2)
    """
    return (counter or ChainCounter(S))(x, l)


def mobius_by_chains(S: NumericalSemigroup, x: int, counter: ChainCounter | None = None) -> int:
    if x < 0 or x not in S:
        return 0
    counter = counter or ChainCounter(S)
    total = 0
    # Consecutive chain elements differ by at least 1, so l <= x.
    for l in range(x + 1):
        c = counter(x, l)
        if c == 0 and l > 0:
            break
        total = checked(total + (-c if l % 2 else c))
    return total


class MobiusMemo:
    """Dense table of ``mu_S(x)`` for ``0 <= x <= high_water``.

    Values are exact Python integers.  While every partial sum provably
    fits in int64 the inner sum runs as a numpy dot product; after that it
    falls back to exact integer summation.

    Single writer: callers sharing one instance across threads must
    serialize access.  Entries are never rewritten once set.
    """

    def __init__(self, S: NumericalSemigroup):
        self.semigroup = S
        self._mu: list[int] = [1]
        self._pos: list[int] = []  # elements of S \ {0} seen so far
        self._mu64 = np.zeros(64, dtype=np.int64)
        self._member64 = np.zeros(64, dtype=np.int64)
        self._mu64[0] = 1
        self._fast = True
        self._max_abs = 1
        self.high_water = 0

    def _reserve(self, n: int) -> None:
        size = len(self._mu64)
        if n < size:
            return
        while size <= n:
            size *= 2
        for name in ("_mu64", "_member64"):
            old = getattr(self, name)
            new = np.zeros(size, dtype=np.int64)
            new[: len(old)] = old
            setattr(self, name, new)

    def fill_to(self, n: int) -> None:
        if n <= self.high_water:
            return
        S = self.semigroup
        mu, pos = self._mu, self._pos
        if self._fast:
            self._reserve(n)
        for x in range(self.high_water + 1, n + 1):
            if x not in S:
                mu.append(0)
                continue
            pos.append(x)
            if self._fast and x * self._max_abs >= INT64_MAX:
                self._fast = False
                self._mu64 = self._member64 = None
            if self._fast:
                self._member64[x] = 1
                # mu[x - y] over y in S \ {0}, y <= x; off-S terms are 0.
                s = int(np.dot(self._member64[1 : x + 1], self._mu64[x - 1 :: -1][:x]))
            else:
                s = sum([mu[x - y] for y in pos])
            value = checked(-s)
            mu.append(value)
            if self._fast:
                self._mu64[x] = value
                self._max_abs = max(self._max_abs, abs(value))
        self.high_water = n

    def __getitem__(self, x: int) -> int:
        if x < 0:
            return 0
        self.fill_to(x)
        return self._mu[x]

    def values(self, lo: int, hi: int) -> list[int]:
        if hi >= 0:
            self.fill_to(hi)
        return [self._mu[x] if x >= 0 else 0 for x in range(lo, hi + 1)]


def mobius_recursive(memo: MobiusMemo, x: int) -> int:
    """``mu_S(x)``: 1 at 0, 0 off S, ``-sum mu(x - y)`` over positive y in S.

    >>> from semigroup_mobius.semigroup import make_semigroup
    >>> memo = MobiusMemo(make_semigroup([3, 4, 5]))
    >>> [mobius_recursive(memo, x) for x in range(9)]
    [1, 0, 0, -1, -1, -1, 0, 1, 2]
    """
    return memo[x]


def mobius_bivariate(memo: MobiusMemo, x: int, y: int) -> int:
    return memo[y - x]


def convolution_residual(memo: MobiusMemo, x: int) -> int:
    """``sum_{y in S, 0 <= y <= x} mu_S(x - y)``; zero for every ``x >= 1``."""
    if x < 1:
        raise ValueError("residual is defined for x >= 1")
    S = memo.semigroup
    return checked_sum(memo[x - y] for y in range(x + 1) if y in S)
