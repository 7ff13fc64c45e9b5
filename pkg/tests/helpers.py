"""Shared oracles for the test suite.

These are written independently of the package internals on purpose: the
Catalan oracle uses the Segner recurrence (the package uses the binomial
closed form), and the ear oracle classifies triangles by counting boundary
sides directly.
"""

from __future__ import annotations

from functools import lru_cache

from polytri.triangulation import Triangulation


@lru_cache(maxsize=None)
def segner_catalan(k: int) -> int:
    """Catalan number via the Segner recurrence C(k) = sum C(i) C(k-1-i)."""
    if k < 0:
        raise ValueError(k)
    if k == 0:
        return 1
    return sum(segner_catalan(i) * segner_catalan(k - 1 - i) for i in range(k))


def boundary_sides(n: int, tri: tuple[int, int, int]) -> int:
    """Number of polygon sides among the edges of a sorted vertex triple."""
    a, b, c = tri
    count = 0
    for x, y in ((a, b), (b, c), (a, c)):
        if y - x == 1 or (x, y) == (0, n - 1):
            count += 1
    return count


def ears_by_definition(t: Triangulation) -> list[tuple[int, int, int]]:
    return [tri for tri in t.triangles() if boundary_sides(t.n, tri) == 2]


def internal_by_definition(t: Triangulation) -> list[tuple[int, int, int]]:
    return [tri for tri in t.triangles() if boundary_sides(t.n, tri) == 0]
