from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np
import pytest

from redvar import exterior as ex
from redvar import lie
from redvar.lie import LieSubspace
from redvar.properties import random_abelian


def _theta_rank_numpy(n: int) -> int:
    """Oracle: Theta assembled from explicit matrix brackets in floating
    point, then an SVD rank."""
    basis = [np.array(m, dtype=float) for m in lie.sl_basis(n)]
    N = len(basis)
    flat = np.array([b.ravel() for b in basis]).T  # columns are the basis
    rests = {s: i for i, s in enumerate(combinations(range(N), n - 3))}
    cols = []
    for s in combinations(range(N), n - 1):
        v = np.zeros((N, len(rests)))
        for p in range(n - 1):
            for q in range(p + 1, n - 1):
                br = basis[s[p]] @ basis[s[q]] - basis[s[q]] @ basis[s[p]]
                coords = np.linalg.lstsq(flat, br.ravel(), rcond=None)[0]
                rest = tuple(x for k, x in enumerate(s) if k not in (p, q))
                v[:, rests[rest]] += (-1) ** (p + q + 1) * coords
        cols.append(v.ravel())
    return np.linalg.matrix_rank(np.array(cols).T, tol=1e-8)


def test_theta_kernel_n3_is_bracket_kernel():
    # Theta is the bracket Λ²sl_3 -> sl_3, onto because sl_3 is perfect
    assert ex.theta_kernel_dim(3) == comb(8, 2) - 8 == 20


def test_theta_kernel_n4_against_float_oracle():
    assert ex.theta_kernel_dim(4) == comb(15, 3) - _theta_rank_numpy(4) == 245


def test_theta_guard_for_large_n():
    with pytest.raises(ex.ResourceGuardError):
        ex.theta_matrix(5)


def test_plucker_of_abelian_subspace_in_kernel(rng):
    for _ in range(10):
        a = random_abelian(rng)
        assert not ex.theta_apply(4, ex.plucker_sl(a))


def test_ab_membership_rejects_nonabelian():
    a = LieSubspace.from_matrices(4, [lie.E(4, 0, 1), lie.E(4, 1, 0), lie.E(4, 2, 3)])
    assert ex.ab_membership(a) is False


def test_killing_quadric_values():
    h = [lie.diag(1, -1, 0, 0), lie.diag(0, 1, -1, 0), lie.diag(0, 0, 1, -1)]
    assert ex.killing_quadric(h) == 4
    assert ex.killing_quadric([lie.E(4, 0, 3), lie.E(4, 1, 3), lie.E(4, 2, 3)]) == 0


@pytest.mark.parametrize("n", [3, 4])
def test_diagram_identities(n):
    assert all(ex.diagram_identities(n).values())


def test_twist_coefficient_pinned():
    # the pinned coefficient makes t_n∘tau vanish on the Cartan
    assert ex.diagram_maps(3).twist == 6
    assert ex.diagram_maps(4).twist == 24
    assert ex.literal_twist(4) == Fraction(-3, 2)


@pytest.mark.parametrize("n, sign", [(3, -1), (4, -1), (5, 1)])
def test_vandermonde_on_cartan(n, sign):
    p = ex.t_n_on_diagonal_symbolic(n, ex.cartan_wedge(n))
    assert p == ex.vandermonde_symbolic(n) * sign


def test_t4_at_a_diagonal_point():
    h = [lie.diag(1, -1, 0, 0), lie.diag(0, 1, -1, 0), lie.diag(0, 0, 1, -1)]
    x = lie.diag(1, 2, 3, -6)
    # -prod_{i<j}(x_i - x_j)
    assert ex.t_n_eval(h, x) == 1008


def test_twisted_vanishes_on_conjugated_cartan(rng):
    h = LieSubspace.from_matrices(4, [lie.diag(1, -1, 0, 0), lie.diag(0, 1, -1, 0), lie.diag(0, 0, 1, -1)])
    for _ in range(5):
        g = lie.random_invertible(4, rng)
        a = h.conjugate(g, lie.inverse(g))
        assert ex.t_n_twisted_eval(a, a.element([3, -1, 2])) == 0


def test_theta_kernel_vanishes_on_wbar():
    assert ex.theta_kernel_vanishes_on_wbar(ex.wbar4_points(8))
    assert ex.non_kernel_witness(10) is not None
