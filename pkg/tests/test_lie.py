from fractions import Fraction

import pytest

from redvar import lie
from redvar.lie import LieSubspace


def test_bracket_of_elementary_matrices():
    assert lie.bracket(lie.E(3, 0, 1), lie.E(3, 1, 2)) == lie.E(3, 0, 2)
    h = lie.bracket(lie.E(2, 0, 1), lie.E(2, 1, 0))
    assert h == lie.diag(1, -1)


def test_sl_coordinates_roundtrip(rng):
    x = lie.random_traceless(4, rng)
    assert lie.from_sl_coords(lie.sl_coords(x), 4) == x


@pytest.mark.parametrize("x, dim", [
    (lie.diag(1, 2, 3, -6), 4),
    (lie.diag(1, 1, 1, -3), 10),
    (lie.add(lie.E(4, 0, 1), lie.E(4, 1, 2), lie.E(4, 2, 3)), 4),
    (lie.E(4, 0, 3), 10),
])
def test_centralizer_dim(x, dim):
    assert lie.centralizer_dim(x) == dim


def test_jordan_partition_nilpotent():
    x = lie.add(lie.E(4, 0, 1), lie.E(4, 1, 2))
    assert lie.is_nilpotent(x)
    parts = lie.jordan_partition(x)
    assert [p for _, p in parts] == [(3, 1)]


def test_regular_and_multiplicities():
    x = lie.diag(2, 2, -1, -3)
    assert not lie.is_regular(x)
    assert lie.eigen_multiplicities(x) == (2, 1, 1)


def test_subspace_equality_is_basis_free():
    a = LieSubspace.from_matrices(4, [lie.E(4, 0, 1), lie.E(4, 0, 2)])
    b = LieSubspace.from_matrices(4, [lie.add(lie.E(4, 0, 1), lie.E(4, 0, 2)), lie.E(4, 0, 2)])
    assert a == b and hash(a) == hash(b)


def test_dependent_basis_rejected():
    with pytest.raises(ValueError):
        LieSubspace.from_matrices(4, [lie.E(4, 0, 1), lie.scale(2, lie.E(4, 0, 1))])


def test_conjugation_preserves_abelian(rng):
    a = LieSubspace.from_matrices(4, [lie.diag(1, -1, 0, 0), lie.diag(0, 1, -1, 0), lie.diag(0, 0, 1, -1)])
    g = lie.random_invertible(4, rng)
    b = a.conjugate(g, lie.inverse(g))
    assert b.is_abelian() and b.is_traceless() and b.dim == 3


def test_inverse(rng):
    g = lie.random_invertible(4, rng)
    prod = lie.mat([[sum(g[i][k] * lie.inverse(g)[k][j] for k in range(4)) for j in range(4)] for i in range(4)])
    assert prod == lie.diag(*[Fraction(1)] * 4)
