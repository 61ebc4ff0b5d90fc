"""Explicit locating rainbow colorings for cycles, R(n,2) and R(n,3).

Small cycles (n <= 15) use stored certificates produced by the exact solver
(``scripts/make_fixtures.py``); they are re-verified every time they load.
"""

from __future__ import annotations

import warnings
from functools import lru_cache
from importlib import resources

from .certificates import load_certificate
from .coloring import Coloring, check_locating_rainbow
from .errors import CertificateError, InvalidOrderError, OutOfRangeError
from .formulas import rvcl_cycle_formula, rvcl_n2_formula, rvcl_n3_formula
from .graph import cycle

FIXTURE_VERSION = "v1"


class UnprovenConstructionWarning(UserWarning):
    """The cycle construction was emitted for an order where it is not the
    optimal coloring (11 <= n <= 15, n != 14)."""


def residue_cycle_coloring(n: int) -> Coloring:
    """The plain residue coloring of C_n with ceil(n/2) colors.

    Odd n: v_i gets i mod m (m = ceil(n/2)) and v_m alone gets color m.
    Even n: residue 0 stands for n/2, and v_(n-1), v_n get n/2 and n/2 - 1.
    For odd n = 3 (mod 4) this is not locating: v_(m/2) and v_(m/2+m) sit
    symmetrically about v_m and end up with equal codes.
    """
    if n < 3:
        raise InvalidOrderError(f"cycle order must be >= 3, got {n}")
    if n % 2:
        m = (n + 1) // 2
        return Coloring(tuple(m if i == m else i % m for i in range(1, n + 1)), m)
    h = n // 2
    colors = [(i % h) or h for i in range(1, n + 1)]
    colors[n - 1] = h - 1
    colors[n - 2] = h
    return Coloring(tuple(colors), h)


def cycle_coloring_large(n: int) -> Coloring:
    """Locating rainbow ceil(n/2)-coloring of C_n for n >= 11.

    The residue coloring, with the colors of v_(n-1) and v_n exchanged when
    n = 3 (mod 4) to break the symmetric collision.
    """
    if n < 11:
        raise OutOfRangeError(f"cycle construction needs n >= 11, got {n}")
    if n <= 15 and n != 14:
        warnings.warn(
            f"C_{n} has rvcl {rvcl_cycle_formula(n)}; this construction uses {-(-n // 2)} colors",
            UnprovenConstructionWarning,
            stacklevel=2,
        )
    c = residue_cycle_coloring(n)
    if n % 4 == 3:
        colors = list(c.colors)
        colors[n - 2], colors[n - 1] = colors[n - 1], colors[n - 2]
        c = Coloring(tuple(colors), c.k)
    return c


def coloring_n2(n: int) -> Coloring:
    """v_i gets color i for i <= n/2 + 1, every later vertex color 1."""
    k = rvcl_n2_formula(n)
    return Coloring(tuple(i if i <= k else 1 for i in range(1, n + 1)), k)


def coloring_n3(n: int) -> Coloring:
    if n < 5:
        raise OutOfRangeError(f"R(n,3) construction needs n >= 5, got {n}")
    r = rvcl_n3_formula(n)
    colors = [1] * (n + 1)  # 1-indexed scratch, slot 0 unused
    pairs = (r - 2) // 2 if r % 2 == 0 else (r - 3) // 2
    for i in range(1, pairs + 1):
        colors[4 + 5 * (i - 1)] = 2 * i
        colors[6 + 5 * (i - 1)] = 2 * i + 1
    colors[n] = r
    if r % 2:
        gap = n - (6 + 5 * (pairs - 1))
        if gap in (3, 4):
            colors[n - 1] = r - 1
        elif gap == 5:
            colors[n - 2] = r - 1
    return Coloring(tuple(colors[1:]), r)


def _fixture_name(n: int) -> str:
    return f"cycle_{n:02d}.json"


@lru_cache(maxsize=None)
def small_cycle_certificates(n: int) -> Coloring:
    """Stored optimal coloring of C_n for 3 <= n <= 15."""
    if not 3 <= n <= 15:
        raise OutOfRangeError(f"stored cycle certificates cover 3 <= n <= 15, got {n}")
    text = resources.files("locrainbow").joinpath("data").joinpath(FIXTURE_VERSION).joinpath(_fixture_name(n)).read_text("utf-8")
    g = cycle(n)
    c = load_certificate(text, g)
    if c.k != rvcl_cycle_formula(n):
        raise CertificateError(f"fixture for C_{n} uses {c.k} colors, expected {rvcl_cycle_formula(n)}")
    verdict = check_locating_rainbow(g, c)
    if not verdict:
        raise CertificateError(f"fixture for C_{n} fails the checker: {verdict.describe()}")
    return c


def cycle_coloring(n: int) -> Coloring:
    """Optimal coloring of C_n: a stored certificate up to n = 15, the residue
    construction beyond."""
    if n < 3:
        raise InvalidOrderError(f"cycle order must be >= 3, got {n}")
    if n <= 15:
        return small_cycle_certificates(n)
    return cycle_coloring_large(n)


def construct(family: str, n: int) -> Coloring:
    if family == "cycle":
        return cycle_coloring(n)
    if family == "n2":
        return coloring_n2(n)
    if family == "n3":
        return coloring_n3(n)
    raise ValueError(f"unknown family {family!r}")
