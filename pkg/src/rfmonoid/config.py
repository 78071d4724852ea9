"""Construction limits.

The element-count cap is held in a context variable so that threads and
``with size_cap(...)`` blocks see their own value.
"""
from contextlib import contextmanager
from contextvars import ContextVar

from .errors import SizeOverflow

DEFAULT_MAX_SIZE = 100_000
BRUTE_FORCE_ORDER = 64
ENUMERATION_BOUND = 7

_max_size: ContextVar[int] = ContextVar("max_size", default=DEFAULT_MAX_SIZE)


def max_size() -> int:
    return _max_size.get()


def set_max_size(n: int) -> None:
    if n < 1:
        raise ValueError("size cap must be positive")
    _max_size.set(n)


@contextmanager
def size_cap(n: int):
    token = _max_size.set(n)
    try:
        yield
    finally:
        _max_size.reset(token)


def check_size(n: int) -> None:
    cap = _max_size.get()
    if n > cap:
        raise SizeOverflow(n, cap)
