"""Exact combinatorics of convex polygon triangulations.

Counting and structure of triangulations of a labeled convex n-gon:
ears and internal triangles, dihedral symmetry classes, the composition
correspondence for 2-eared triangulations, and counts of triangulations
disjoint from (sharing no diagonal with) a given one.  All arithmetic is
exact; rational prefactors are checked to produce integers.
"""

from polytri.triangulation import (
    DualTree,
    Triangulation,
    crosses,
    diagonal,
    enumerate_triangulations,
    is_diagonal,
    is_triangulation,
)

__version__ = "0.1.0"

__all__ = [
    "DualTree",
    "Triangulation",
    "crosses",
    "diagonal",
    "enumerate_triangulations",
    "is_diagonal",
    "is_triangulation",
    "__version__",
]
