"""Counting triangulations disjoint from a given one.

Two triangulations of the same n-gon are *disjoint* when they share no
diagonal.  The central quantity here is

    count_disjoint(T) = #{T' : T' shares no diagonal with T},

computed by count_avoiding(n, F): the number of triangulations avoiding a
fixed set F of forbidden diagonals.  That count is evaluated by a pruned
recursive decomposition: the sub-polygon on the arc i..j (closed by the
chord (i, j)) is split at the apex of the triangle over its closing chord,
and any split that would create a forbidden diagonal is discarded.  With
memoization on (i, j) the full list of triangulations is never
materialized.

Identities implemented and cross-checked by the verify suites:

* Every 2-eared triangulation has exactly catalan(n-3) disjoint partners.
  For the fan ("arrow") this reduces to: T' is disjoint from the fan at
  vertex 1 iff T' contains the diagonal (0, 2).
* Inclusion-exclusion over compositions of n-2:
      sum_{(a_1..a_i)} (-1)^(i+1) C(a_1) ... C(a_i) = C(n-3),
  with the generating-series form  sum_i (-x)^i s(x)^(i+1) = c(x)  where
  c is the Catalan series and s = (c-1)/x.
* Avoiding the m shortest diagonals at one vertex leaves
      sum_{i=0}^{n-3-m} C(i) C(n-3-i)   triangulations.
* A 3-eared triangulation of type (p, q, r) (the triangle counts of the
  three dual-tree branches, p+q+r = n-3) has

      sum_{i=0}^{n-4-q} C(i) C(n-4-i)  +  sum_{j=p}^{p+q-1} C(j) C(n-4-j)

  disjoint partners, equivalently 2 C(n-3) - S(p-1) - S(q-1) - S(r-1)
  with S(k) = catalan_partial_convolution(n, k); in particular the count
  depends only on the multiset {p, q, r}.  A published variant of the
  closed form sums to p, q, r instead of p-1, q-1, r-1; it disagrees with
  the case analysis (already at n=6, type (1,1,1): 1 versus 4) and is kept
  only so the verify suite can report the discrepancy as an erratum.
* More generally, the disjointness count depends only on the positions of
  the internal triangles (the internal signature), not on the rest of the
  triangulation.
* In a regular n-gon, diagonals (a, b) and (c, d) are parallel iff
  a+b = c+d (mod n).  The triangulations avoiding every diagonal parallel
  to one of the sides (0,1) or (0,2) -- residues 1 and 2 -- are exactly
  those disjoint from the "snake", and for even polygons avoiding a single
  residue class leaves 2 C(n-3) triangulations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from polytri.counting import catalan, catalan_partial_convolution
from polytri.triangulation import (
    Pair,
    Triple,
    Triangulation,
    _diagonal_sets,
    diagonal,
)


# -- named triangulations ----------------------------------------------------


def arrow(n: int) -> Triangulation:
    """The fan at vertex 1: diagonals (1, 3), (1, 4), ..., (1, n-1)."""
    if n < 4:
        raise ValueError(f"fan triangulations need n >= 4, got {n}")
    return Triangulation(n, tuple((1, b) for b in range(3, n)), validate=False)


def snake(n: int) -> Triangulation:
    """The zigzag triangulation 0-2, 2-(n-1), (n-1)-3, 3-(n-2), ...

    Starting from the chord (0, 2) the path alternately connects the last
    endpoint to the next unused vertex on the opposite side until the n-3
    diagonals are placed.  Every diagonal has (a+b) mod n in {1, 2}.
    """
    if n < 4:
        raise ValueError(f"snake triangulations need n >= 4, got {n}")
    chain = [0, 2]
    lo, hi = 3, n - 1
    take_high = True
    while len(chain) < n - 2:
        if take_high:
            chain.append(hi)
            hi -= 1
        else:
            chain.append(lo)
            lo += 1
        take_high = not take_high
    diags = tuple(
        (a, b) if a < b else (b, a) for a, b in zip(chain, chain[1:])
    )
    return Triangulation(n, diags, validate=False)


def three_ear_rep(n: int, ptype: Iterable[int]) -> Triangulation:
    """Standard 3-eared triangulation of type (p, q, r).

    The internal triangle is {0, p+1, p+q+2}; each of its sides carries a
    fan: at 0 over 1..p+1, at p+1 over p+2..p+q+2, and at p+q+2 over the
    rest back to 0.  The dual-tree branches then have p, q and r triangles.
    """
    p, q, r = _check_type(n, ptype)
    diags = [(0, j) for j in range(2, p + 2)]
    diags += [(p + 1, j) for j in range(p + 3, p + q + 3)]
    diags += [(p + q + 2, j) for j in range(p + q + 4, n)]
    diags.append((0, p + q + 2))
    return Triangulation(n, tuple(sorted(set(diags))))


def _check_type(n: int, ptype: Iterable[int]) -> tuple[int, int, int]:
    parts = tuple(ptype)
    if len(parts) != 3 or any(not isinstance(x, int) or x < 1 for x in parts):
        raise ValueError(f"type must be three positive integers, got {parts!r}")
    if sum(parts) != n - 3:
        raise ValueError(f"type {parts} must sum to n-3 = {n - 3}")
    return parts  # type: ignore[return-value]


def three_ear_type(t: Triangulation) -> tuple[int, int, int]:
    """Branch sizes (descending) of the dual tree of a 3-eared triangulation."""
    if t.ear_count() != 3:
        raise ValueError(f"triangulation has {t.ear_count()} ears, need exactly 3")
    dt = t.dual_tree()
    (center,) = dt.branch_nodes()
    sizes = []
    for start in dt.adjacency[center]:
        size, prev, node = 1, center, start
        while dt.degree(node) != 1:
            (node, prev) = (
                next(x for x in dt.adjacency[node] if x != prev),
                node,
            )
            size += 1
        sizes.append(size)
    result = tuple(sorted(sizes, reverse=True))
    assert sum(result) == t.n - 3
    return result  # type: ignore[return-value]


# -- avoidance counting --------------------------------------------------------


def count_avoiding(n: int, forbidden: Iterable[Pair]) -> int:
    """Number of triangulations of the n-gon using no forbidden diagonal.

    Pruned recursive split with memoization on sub-polygon arcs; the
    triangulations themselves are never materialized.
    """
    if n < 3:
        raise ValueError(f"polygon needs at least 3 vertices, got n={n}")
    forb = frozenset(diagonal(n, a, b) for a, b in forbidden)

    @lru_cache(maxsize=None)
    def arc(i: int, j: int) -> int:
        # triangulations of the sub-polygon i..j closed by the chord (i, j)
        if j - i < 2:
            return 1
        total = 0
        for m in range(i + 1, j):
            if m - i >= 2 and (i, m) in forb:
                continue
            if j - m >= 2 and (m, j) in forb:
                continue
            total += arc(i, m) * arc(m, j)
        return total

    return arc(0, n - 1)


def count_disjoint(t: Triangulation) -> int:
    """Number of triangulations sharing no diagonal with t."""
    return count_avoiding(t.n, t.diagonals)


# -- 2-eared formulas ------------------------------------------------------------


def disjoint_two_eared(n: int) -> int:
    """Disjointness count of any 2-eared triangulation: catalan(n-3)."""
    if n < 4:
        raise ValueError(f"2-eared triangulations need n >= 4, got {n}")
    return catalan(n - 3)


def disjoint_inclusion_exclusion(n: int) -> int:
    """Evaluate sum over compositions (a_1..a_i) of n-2 of
    (-1)^(i+1) C(a_1)...C(a_i); equals catalan(n-3)."""
    from polytri.compositions import enumerate_compositions

    if n < 4:
        raise ValueError(f"inclusion-exclusion needs n >= 4, got {n}")
    total = 0
    for comp in enumerate_compositions(n - 2):
        product = 1
        for part in comp:
            product *= catalan(part)
        total += -product if len(comp) % 2 == 0 else product
    return total


def disjoint_series(limit: int) -> list[int]:
    """Coefficients 0..limit of  sum_{i>=0} (-1)^i x^i s(x)^(i+1)
    where s(x) = (c(x) - 1)/x and c is the Catalan series.

    The alternating sum telescopes back to c(x), so the returned list is
    the Catalan numbers again; the verify suite checks exactly that.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    size = limit + 1

    def mul(f: list[int], g: list[int]) -> list[int]:
        out = [0] * size
        for i, fi in enumerate(f):
            if fi:
                for j in range(min(len(g), size - i)):
                    out[i + j] += fi * g[j]
        return out

    s = [catalan(i + 1) for i in range(size)]
    total = [0] * size
    power = s[:]  # s^(i+1), truncated
    for i in range(size):
        sign = -1 if i % 2 else 1
        for j in range(i, size):  # multiply by x^i and accumulate
            total[j] += sign * power[j - i]
        power = mul(power, s)
    return total


# -- fan-avoidance and 3-eared formulas --------------------------------------------


def fan_prefix_diagonals(n: int, apex: int, m: int) -> tuple[Pair, ...]:
    """The m shortest diagonals at a vertex: (a, a+2), ..., (a, a+m+1) mod n."""
    if not 0 <= apex < n:
        raise ValueError(f"apex {apex} out of range for n={n}")
    if not 0 <= m <= n - 3:
        raise ValueError(f"need 0 <= m <= n-3, got m={m}")
    return tuple(diagonal(n, apex, (apex + j) % n) for j in range(2, m + 2))


def avoid_fan_formula(n: int, m: int) -> int:
    """Triangulations avoiding the m shortest diagonals at one vertex:
    sum_{i=0}^{n-3-m} C(i) C(n-3-i).  At m = 0 this is catalan(n-2)."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    if not 0 <= m <= n - 3:
        raise ValueError(f"need 0 <= m <= n-3, got m={m}")
    return sum(catalan(i) * catalan(n - 3 - i) for i in range(n - 2 - m))


def three_ear_disjoint(n: int, ptype: Iterable[int]) -> int:
    """Disjointness count of a 3-eared triangulation of type (p, q, r).

    Sum of the two case counts (partner triangulations separated by
    whether they use the long chord of the first branch):

        sum_{i=0}^{n-4-q} C(i) C(n-4-i)  +  sum_{j=p}^{p+q-1} C(j) C(n-4-j)

    which is symmetric in (p, q, r): it equals
    2 C(n-3) - S(p-1) - S(q-1) - S(r-1).
    """
    p, q, r = _check_type(n, ptype)
    case1 = sum(catalan(i) * catalan(n - 4 - i) for i in range(n - 3 - q))
    case2 = sum(catalan(j) * catalan(n - 4 - j) for j in range(p, p + q))
    return case1 + case2


def three_ear_disjoint_published(n: int, ptype: Iterable[int]) -> int:
    """Published closed-form variant with summation limits p, q, r.

    Evaluates 2 C(n-3) - S(p) - S(q) - S(r) with
    S(k) = sum_{i=0}^{k} C(i) C(n-4-i).  The limits are off by one: the
    case analysis gives 2 C(n-3) - S(p-1) - S(q-1) - S(r-1), and already
    at n=6, type (1,1,1), this variant yields 1 where the true count is 4.
    Kept so the verify suite can report the discrepancy as an erratum.
    """
    p, q, r = _check_type(n, ptype)
    return 2 * catalan(n - 3) - sum(
        catalan_partial_convolution(n, x) for x in (p, q, r)
    )


# -- parallel diagonal classes --------------------------------------------------


def parallel_residue(n: int, chord: Pair) -> int:
    """Residue (a+b) mod n; chords of a regular n-gon are parallel iff
    their residues agree."""
    a, b = diagonal(n, *chord)
    return (a + b) % n


def diagonals_with_residue(n: int, residues: Iterable[int]) -> tuple[Pair, ...]:
    """All diagonals whose parallel class lies in the given residues."""
    wanted = {r % n for r in residues}
    out = []
    for a in range(n):
        for b in range(a + 2, n):
            if (a, b) != (0, n - 1) and (a + b) % n in wanted:
                out.append((a, b))
    return tuple(out)


def count_avoiding_parallel(n: int, residues: Iterable[int]) -> int:
    """Triangulations avoiding every diagonal in the given parallel classes."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    return count_avoiding(n, diagonals_with_residue(n, residues))


# -- internal signatures ----------------------------------------------------------


def internal_signature(t: Triangulation) -> frozenset[Triple]:
    """The set of internal triangles of t (no dihedral normalization)."""
    return frozenset(t.internal_triangles())


@dataclass(frozen=True)
class SignatureGroup:
    signature: tuple[Triple, ...]
    size: int
    disjoint_counts: tuple[int, ...]

    @property
    def constant(self) -> bool:
        return len(set(self.disjoint_counts)) == 1


@dataclass(frozen=True)
class SignatureReport:
    n: int
    groups: tuple[SignatureGroup, ...]

    @property
    def ok(self) -> bool:
        return all(g.constant for g in self.groups)

    @property
    def violations(self) -> tuple[SignatureGroup, ...]:
        return tuple(g for g in self.groups if not g.constant)


def signature_invariance_check(n: int) -> SignatureReport:
    """Group all triangulations by internal signature and test that the
    disjointness count is constant within each group.

    The counts are obtained by brute-force pair scanning (independent of
    the pruned counting route), so this is only feasible for n <= 10.
    """
    if not 4 <= n <= 10:
        raise ValueError(f"pairwise signature check is feasible for 4 <= n <= 10, got {n}")
    from polytri.triangulation import enumerate_triangulations

    ts = list(enumerate_triangulations(n))
    sets = [t.diagonal_set for t in ts]
    by_sig: dict[tuple[Triple, ...], list[int]] = {}
    for idx, t in enumerate(ts):
        by_sig.setdefault(tuple(sorted(internal_signature(t))), []).append(idx)
    groups = []
    for sig in sorted(by_sig):
        members = by_sig[sig]
        counts = tuple(
            sum(1 for other in sets if not (sets[idx] & other)) for idx in members
        )
        groups.append(SignatureGroup(sig, len(members), counts))
    return SignatureReport(n, tuple(groups))
