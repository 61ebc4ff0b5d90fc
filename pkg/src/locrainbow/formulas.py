"""Closed-form values of rvcl and rvc for the graph families, and the counting
bounds for (n,t)-regular graphs of diameter 2."""

from __future__ import annotations

from math import comb

from .errors import InvalidOrderError


def _ceil_half(n: int) -> int:
    return -(-n // 2)


def _ceil_tenth(n: int) -> int:
    return -(-n // 10)


def rvcl_cycle_formula(n: int) -> int:
    if n < 3:
        raise InvalidOrderError(f"cycle order must be >= 3, got {n}")
    if n <= 7:
        return 3
    if n in (9, 15) or 11 <= n <= 13:
        return _ceil_half(n) - 1
    return _ceil_half(n)


def rvc_cycle_formula(n: int) -> int:
    """Rainbow vertex connection number of C_n.

    n = 11 is not covered by the published piecewise statement; it takes the
    ceil(n/2) - 1 branch, which the exact solver confirms.
    """
    if n < 3:
        raise InvalidOrderError(f"cycle order must be >= 3, got {n}")
    if n in (3, 5, 9):
        return _ceil_half(n) - 2
    if n == 14 or n >= 16:
        return _ceil_half(n)
    return _ceil_half(n) - 1


def rvcl_complete(n: int) -> int:
    if n < 3:
        raise InvalidOrderError(f"order must be >= 3, got {n}")
    return n


def rvcl_n2_formula(n: int) -> int:
    if n < 4 or n % 2:
        raise InvalidOrderError(f"order must be even >= 4, got {n}")
    return n // 2 + 1


def rvcl_n3_formula(n: int) -> int:
    if n < 5:
        raise InvalidOrderError(f"order must be >= 5, got {n}")
    base = _ceil_half(n) - _ceil_tenth(n)
    if n % 10 in (2, 4):
        return base + 2
    return base + 1


def max_class_size(r: int, t: int) -> int:
    """Largest color class in a locating r-coloring of an (n,t)-regular graph
    of diameter 2: one code with no entry 2, plus codes with 1..t-1 entries 2
    among the other r-1 colors."""
    if t not in (2, 3):
        raise ValueError(f"t must be 2 or 3, got {t}")
    if r < 3:
        raise ValueError(f"r must be >= 3, got {r}")
    return 1 + sum(comb(r - 1, t - j) for j in range(1, t))


def diameter_bound_max_n(r: int, diam: int) -> int:
    if r < 1 or diam < 1:
        raise ValueError("r and diam must be >= 1")
    return r * diam ** (r - 1)


def entry2_cap(t: int) -> int:
    if t not in (2, 3):
        raise ValueError(f"t must be 2 or 3, got {t}")
    return t - 1
