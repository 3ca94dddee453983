"""Optional signed 64-bit range enforcement.

Python integers never wrap, so results are exact by default.  Inside a
:func:`strict_int64` block every value passed through :func:`checked` must
also fit in a signed 64-bit word, otherwise :class:`IntegerOverflow` is
raised.  The flag lives in a context variable, so it is per thread.
"""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar

from .errors import IntegerOverflow

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

_STRICT: ContextVar[bool] = ContextVar("strict_int64", default=False)


@contextmanager
def strict_int64(enabled: bool = True):
    """Enforce the 64-bit range on checked values within the block.

    >>> with strict_int64():
    ...     checked(2**63)
    Traceback (most recent call last):
    ...
    semigroup_mobius.errors.IntegerOverflow: 9223372036854775808 exceeds the signed 64-bit range
    >>> checked(2**63)
    9223372036854775808
    """
    token = _STRICT.set(enabled)
    try:
        yield
    finally:
        _STRICT.reset(token)


def is_strict() -> bool:
    return _STRICT.get()


def checked(value: int) -> int:
    if (value > INT64_MAX or value < INT64_MIN) and _STRICT.get():
        raise IntegerOverflow(f"{value} exceeds the signed 64-bit range")
    return value


def checked_sum(values) -> int:
    total = sum(values)
    return checked(total)
