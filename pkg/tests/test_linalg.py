"""Exact elimination against sympy as an independent oracle."""
from fractions import Fraction

import pytest

from redvar import linalg as la
from redvar.properties import random_rational_matrix

sympy = pytest.importorskip("sympy")


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def from_sympy(m):
    return [[Fraction(int(x.p), int(x.q)) for x in m.row(i)] for i in range(m.rows)]


@pytest.mark.parametrize("seed", range(40))
def test_rref_matches_sympy(seed):
    from redvar import lie
    r = lie.rng(seed)
    m = random_rational_matrix(r, r.randint(1, 6), r.randint(1, 6))
    rows, rank, piv = la.rref(m, len(m[0]))
    ref, ref_piv = to_sympy(m).rref()
    assert rank == len(ref_piv)
    assert list(piv) == list(ref_piv)
    assert rows == from_sympy(ref)[:rank]


@pytest.mark.parametrize("seed", range(30))
def test_det_matches_sympy(seed):
    from redvar import lie
    r = lie.rng(100 + seed)
    n = r.randint(1, 6)
    m = random_rational_matrix(r, n, n)
    assert la.det(m) == Fraction(str(to_sympy(m).det()))


def test_kernel_of_known_matrix():
    m = [[1, 2, 3], [2, 4, 6]]
    ker = la.kernel_basis(m, 3)
    assert len(ker) == 2
    assert all(sum(Fraction(a) * b for a, b in zip(row, v)) == 0 for row in m for v in ker)


def test_solve_in_span():
    basis = [[1, 0, 1], [0, 1, 1]]
    assert la.solve_in_span(basis, [2, 3, 5]) == [2, 3]
    assert la.solve_in_span(basis, [1, 1, 0]) is None


def test_rank_nullity_property():
    from redvar.properties import rank_nullity_holds
    assert rank_nullity_holds(200, seed=7)
