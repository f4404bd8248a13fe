"""The chromatic threshold sequence g(m, i) and the bounds derived from it."""

from __future__ import annotations

from functools import lru_cache

from ..errors import PreconditionError


def in_domain(m: int, i: int) -> bool:
    return m >= 4 and 0 <= i and 2 * i <= m - 2


@lru_cache(maxsize=None)
def _g(m: int, i: int) -> int:
    if i == 0:
        return m
    if m == 4 and i == 1:
        return 4
    return _g(m - 1, i - 1) + 2 * (m - 3)


def g(m: int, i: int) -> int:
    """Threshold such that every digraph with chi >= g(m, i) contains every
    P(k, m-1-k-i, i). Defined for m >= 4 and 0 <= i <= m/2 - 1."""
    if not in_domain(m, i):
        raise PreconditionError(f"g({m},{i}) is outside m >= 4, 0 <= i <= m/2 - 1")
    return _g(m, i)


def extreme_index(m: int) -> int:
    if m < 4:
        raise PreconditionError("m must be >= 4")
    return m // 2 - 1 if m % 2 == 0 else (m - 3) // 2


def g_extreme(m: int) -> int:
    return g(m, extreme_index(m))


def g_extreme_closed_form_x4(m: int) -> int:
    """Four times the closed form of g_extreme, as an exact integer.

    Even m: 3m^2 - 12m + 20. Odd m: 3m^2 - 14m + 27. The recurrence agrees
    for every m >= 5; at m = 4 the fixed value g(4,1) = 4 overrides it.
    """
    if m % 2 == 0:
        return 3 * m * m - 12 * m + 20
    return 3 * m * m - 14 * m + 27


def tree_bound(m: int) -> int:
    """(m-1)^2, the bound inherited from oriented trees of order m."""
    return (m - 1) ** 2


def f_upper_bound(m: int) -> int:
    if m < 4:
        raise PreconditionError("m must be >= 4")
    return min(g_extreme(m), tree_bound(m))
