"""Subspaces as points of Grassmannians: Plücker coordinates, limits of
one-parameter families, and torus invariance.

Plücker coordinates are indexed by sorted k-subsets of column indices,
enumerated in colexicographic order.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import linalg as la
from .lie import LieSubspace
from .polys import Poly, RatFunc


@lru_cache(maxsize=None)
def colex_subsets(N: int, k: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(N), k), key=lambda s: s[::-1])


def _perm_sign(seq: Sequence[int]) -> int:
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


class PluckerVector:
    """Nonzero vector of maximal minors; equality is projective."""

    __slots__ = ("N", "k", "coords")

    def __init__(self, N: int, k: int, coords: dict):
        self.N, self.k = N, k
        self.coords = {s: Fraction(c) for s, c in coords.items() if c}
        if not self.coords:
            raise ValueError("Plücker vector is identically zero")

    def __getitem__(self, subset) -> Fraction:
        return self.coords.get(tuple(subset), Fraction(0))

    def ordered(self, idx: Sequence[int]) -> Fraction:
        """Coordinate for an arbitrary index tuple (alternating extension)."""
        if len(set(idx)) < len(idx):
            return Fraction(0)
        return _perm_sign(idx) * self[tuple(sorted(idx))]

    def vector(self) -> list[Fraction]:
        return [self[s] for s in colex_subsets(self.N, self.k)]

    def normalized(self) -> dict:
        lead = self.coords[min(self.coords, key=lambda s: s[::-1])]
        return {s: c / lead for s, c in self.coords.items()}

    def __eq__(self, other) -> bool:
        return (isinstance(other, PluckerVector) and (self.N, self.k) == (other.N, other.k)
                and self.normalized() == other.normalized())

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.normalized().items())))

    def basis(self) -> list[list[Fraction]]:
        """A basis of the subspace with these coordinates (assumed decomposable)."""
        pivot = min(self.coords, key=lambda s: s[::-1])
        p0 = self.coords[pivot]
        rows = []
        for a in range(self.k):
            row = []
            for j in range(self.N):
                idx = list(pivot)
                idx[a] = j
                row.append(self.ordered(idx) / p0)
            rows.append(row)
        if plucker_rows(rows, self.N) != self:
            raise ValueError("Plücker vector is not decomposable")
        return rows


def _minors(rows: list[list], N: int, det_fn) -> dict:
    k = len(rows)
    out = {}
    for s in colex_subsets(N, k):
        sub = [[r[j] for j in s] for r in rows]
        d = det_fn(sub)
        if d:
            out[s] = d
    return out


def plucker_rows(rows: Sequence[Sequence], N: int | None = None) -> PluckerVector:
    rows = [list(r) for r in rows]
    if N is None:
        N = len(rows[0])
    k = len(rows)
    return PluckerVector(N, k, _minors(rows, N, la.det))


def plucker(s: LieSubspace) -> PluckerVector:
    return plucker_rows(s.basis, s.n * s.n)


# -- curves over rational functions ---------------------------------------

class CurveSubspace:
    """k rows of rational functions in t spanning a subspace of gl_n."""

    def __init__(self, n: int, rows: Sequence[Sequence]):
        self.n = n
        self.rows = [[x if isinstance(x, RatFunc) else RatFunc(Poly([x])) for x in r] for r in rows]
        if any(len(r) != n * n for r in self.rows):
            raise ValueError("curve rows must be flattened n x n matrices")

    @classmethod
    def from_matrices(cls, n: int, mats: Sequence[Sequence[Sequence]]) -> "CurveSubspace":
        return cls(n, [[x for row in m for x in row] for m in mats])

    @property
    def k(self) -> int:
        return len(self.rows)

    def at(self, t) -> LieSubspace:
        return LieSubspace.span(self.n, [[[x(t) for x in r[i * self.n:(i + 1) * self.n]] for i in range(self.n)]
                                         for r in self.rows])

    def generic_value(self) -> Fraction:
        """A deterministic value of t where all entries are defined and the rank is k."""
        for cand in (Fraction(7, 3), Fraction(11, 5), Fraction(-13, 7), Fraction(17, 2), Fraction(23, 9)):
            try:
                if self.at(cand).dim == self.k:
                    return cand
            except ZeroDivisionError:
                continue
        raise ValueError("curve has a rank drop at every sample value")

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[x.to_json() for x in r] for r in self.rows]}


def _rat_det(m):
    return la.det_generic(m, RatFunc(0), RatFunc(1))


def limit_plucker(c: CurveSubspace) -> PluckerVector:
    """Limit at t = 0 of the Plücker point of the curve."""
    N = c.n * c.n
    minors = _minors(c.rows, N, _rat_det)
    if not minors:
        raise ValueError("malformed curve: all Plücker coordinates vanish")
    v = min(f.valuation() for f in minors.values())
    shift = RatFunc.t() ** (-v)
    return PluckerVector(N, c.k, {s: (f * shift).value_at_zero() for s, f in minors.items()})


def limit_subspace(c: CurveSubspace) -> LieSubspace:
    c.generic_value()  # rank check
    return LieSubspace(c.n, limit_plucker(c).basis())


# -- torus invariance ---------------------------------------------------------

def torus_invariant(s: LieSubspace) -> bool:
    """Whether s is the sum of its intersections with the weight spaces of
    the diagonal torus (the diagonal matrices, and each line E_ij)."""
    n, k = s.n, s.dim
    rows = s.basis
    diag_cols = [i * n + i for i in range(n)]
    off_cols = [c for c in range(n * n) if c not in diag_cols]

    def inter_dim(keep: list[int]) -> int:
        others = [c for c in range(n * n) if c not in keep]
        if not others:
            return k
        return k - la.rank([[r[c] for c in others] for r in rows], len(others))

    total = inter_dim(diag_cols) + sum(inter_dim([c]) for c in off_cols)
    return total == k
