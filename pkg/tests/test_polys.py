from fractions import Fraction

import pytest

from redvar import lie
from redvar.polys import Poly, RatFunc, multiplicity_partition, rational_roots, squarefree_factors

sympy = pytest.importorskip("sympy")


def test_poly_arithmetic():
    x = Poly.x()
    p = (x - 1) * (x + 2)
    assert p == Poly([-2, 1, 1])
    q, r = p.divmod(x - 1)
    assert q == x + 2 and r.is_zero()


def test_squarefree_factors():
    x = Poly.x()
    f = (x - 1) ** 3 * (x + 2) ** 2 * (x - 5)
    fac = squarefree_factors(f)
    assert fac[3] == (x - 1) and fac[2] == (x + 2) and fac[1] == (x - 5)
    assert sorted(rational_roots(f)) == [-2, 1, 5]


def test_ratfunc_valuation():
    t = RatFunc.t()
    f = (t * t + t ** 3) / (t + 1)
    assert f.valuation() == 2
    assert (1 / t).valuation() == -1
    assert (f / (t * t)).value_at_zero() == 1


@pytest.mark.parametrize("seed", range(15))
def test_charpoly_matches_sympy(seed):
    r = lie.rng(seed)
    m = lie.random_traceless(4, r)
    ours = lie.charpoly(m)
    ref = sympy.Matrix(m).charpoly().all_coeffs()[::-1]
    assert list(ours.coeffs) == [Fraction(str(c)) for c in ref]


@pytest.mark.parametrize("seed", range(10))
def test_minpoly_divides_charpoly(seed):
    r = lie.rng(50 + seed)
    m = lie.random_traceless(4, r, -2, 2)
    assert (lie.charpoly(m) % lie.minpoly(m)).is_zero()
