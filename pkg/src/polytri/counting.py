"""Exact counting formulas for triangulations, ears, and symmetry classes.

All counts are exact integers.  Formulas with rational prefactors are
evaluated in exact rational arithmetic and asserted integral before being
returned; a non-integral value raises ArithmeticError rather than being
silently rounded.

The key closed forms:

* catalan(k) = binom(2k, k) / (k+1); the n-gon has catalan(n-2)
  triangulations.
* The number of triangulations of the n-gon with exactly k ears is
  (n/k) * 2^(n-2k) * binom(n-4, 2k-4) * catalan(k-2), the Hurtado-Noy
  count.  It vanishes for k > n/2, and k ranges over 2..floor(n/2).
* The number of dihedral symmetry classes of 2-eared triangulations is
  2^(n-6) + 2^(floor(n/2)-3) for n >= 5 (the formula is not integral at
  n = 4, where the true class count is 1).
* The number of symmetry classes of 3-eared triangulations is
  (1/3) 2^(n-8) (n-4)(n-5) + [2|n] 2^(n/2-4) + [3|n] (1/3) 2^(n/3-2)
  for n >= 6.

Orbit counts used to cross-check the closed forms stream the full
enumeration, filter by ear count, and count distinct canonical forms, so
they never hold all triangulations in memory at once.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from polytri.triangulation import (
    _canonical_diagonals,
    _diagonal_sets,
    _ear_count,
)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {value}")
    return int(value)


@lru_cache(maxsize=None)
def catalan(k: int) -> int:
    """Catalan number C(k) = binom(2k, k) / (k+1)."""
    if k < 0:
        raise ValueError(f"Catalan numbers need k >= 0, got {k}")
    return comb(2 * k, k) // (k + 1)


def catalan_list(upto: int) -> list[int]:
    """[C(0), ..., C(upto)]."""
    return [catalan(k) for k in range(upto + 1)]


def catalan_partial_convolution(n: int, k: int) -> int:
    """Partial convolution S(n, k) = sum_{i=0}^{k} C(i) C(n-4-i).

    Defined for -1 <= k <= n-4; the empty sum S(n, -1) is 0 and the full
    sum S(n, n-4) equals C(n-3).
    """
    if k < -1:
        raise ValueError(f"k must be >= -1, got {k}")
    if k > n - 4:
        raise ValueError(f"k={k} exceeds n-4={n - 4}")
    return sum(catalan(i) * catalan(n - 4 - i) for i in range(k + 1))


def max_ears(n: int) -> int:
    """Largest possible ear count of an n-gon triangulation: floor(n/2)."""
    if n < 4:
        raise ValueError(f"ear counts need n >= 4, got {n}")
    return n // 2


def hurtado_noy(n: int, k: int) -> int:
    """Number of triangulations of the n-gon with exactly k ears.

    Evaluates (n/k) 2^(n-2k) binom(n-4, 2k-4) C(k-2) in exact rational
    arithmetic.  Zero whenever 2k-4 > n-4, i.e. for k > n/2.
    """
    if n < 4:
        raise ValueError(f"ear counts need n >= 4, got {n}")
    if k < 2:
        raise ValueError(f"every triangulation has >= 2 ears, got k={k}")
    binomial = comb(n - 4, 2 * k - 4)  # comb() is 0 when 2k-4 > n-4
    if binomial == 0:
        return 0
    value = Fraction(n, k) * Fraction(2) ** (n - 2 * k) * binomial * catalan(k - 2)
    return _as_int(value, f"ear count formula at n={n}, k={k}")


def ear_census(n: int, method: str = "formula") -> dict[int, int]:
    """Map k -> number of triangulations with k ears, k = 2..floor(n/2).

    method 'formula' evaluates the closed form per k; 'brute' streams the
    full enumeration and tallies ear counts.
    """
    if n < 4:
        raise ValueError(f"ear census needs n >= 4, got {n}")
    ks = range(2, max_ears(n) + 1)
    if method == "formula":
        return {k: hurtado_noy(n, k) for k in ks}
    if method == "brute":
        counts = dict.fromkeys(ks, 0)
        for diags in _diagonal_sets(tuple(range(n))):
            counts[_ear_count(n, set(diags))] += 1
        return counts
    raise ValueError(f"unknown method {method!r}")


def symmetry_classes_2ear(n: int) -> int:
    """Closed-form count of symmetry classes of 2-eared triangulations.

    2^(n-6) + 2^(floor(n/2)-3), valid for n >= 5.  At n = 4 the expression
    evaluates to 3/4; the true class count there is 1 (see the orbit
    method).
    """
    if n < 5:
        raise ValueError(f"2-ear class formula requires n >= 5, got {n}")
    value = Fraction(2) ** (n - 6) + Fraction(2) ** (n // 2 - 3)
    return _as_int(value, f"2-ear class formula at n={n}")


def symmetry_classes_3ear(n: int) -> int:
    """Closed-form count of symmetry classes of 3-eared triangulations (n >= 6)."""
    if n < 6:
        raise ValueError(f"3-ear class formula requires n >= 6, got {n}")
    value = Fraction(1, 3) * Fraction(2) ** (n - 8) * (n - 4) * (n - 5)
    if n % 2 == 0:
        value += Fraction(2) ** (n // 2 - 4)
    if n % 3 == 0:
        value += Fraction(1, 3) * Fraction(2) ** (n // 3 - 2)
    return _as_int(value, f"3-ear class formula at n={n}")


def symmetry_classes_orbit(n: int, ears: int | None = None) -> int:
    """Number of dihedral symmetry classes, optionally filtered by ear count.

    Streams the enumeration and counts distinct canonical forms; feasible
    up to n around 14.
    """
    if n < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got n={n}")
    if ears is not None and n < 4:
        raise ValueError("ear filter requires n >= 4")
    seen: set[tuple] = set()
    for diags in _diagonal_sets(tuple(range(n))):
        if ears is not None and _ear_count(n, set(diags)) != ears:
            continue
        seen.add(_canonical_diagonals(n, diags))
    return len(seen)
