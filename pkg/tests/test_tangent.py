import numpy as np
import pytest

from redvar import lie, orbits4
from redvar import tangent as tg
from redvar.lie import LieSubspace
from redvar.polys import RatFunc


def tangent_dim_oracle(a: LieSubspace) -> int:
    """Float oracle: phi(x_i) ranges over all of sl_n; solutions of
    [phi(x_i), x_j] + [x_i, phi(x_j)] = 0, minus the k^2 maps into a."""
    n, xs = a.n, [np.array(m, dtype=float) for m in a.matrices()]
    k = len(xs)
    basis = [np.array(b, dtype=float) for b in lie.sl_basis(n)]
    N = len(basis)
    blocks = []
    for i in range(k):
        for j in range(i + 1, k):
            row = np.zeros((n * n, k * N))
            for m, b in enumerate(basis):
                row[:, i * N + m] += (b @ xs[j] - xs[j] @ b).ravel()
                row[:, j * N + m] += (xs[i] @ b - b @ xs[i]).ravel()
            blocks.append(row)
    M = np.vstack(blocks) if blocks else np.zeros((1, k * N))
    return k * N - np.linalg.matrix_rank(M, tol=1e-8) - k * k


@pytest.mark.parametrize("n", [3, 4, 5])
def test_o_bound_tangent(n):
    a = tg.o_bound(n)
    assert tg.tangent_dim(a) == n * (n - 1) == tangent_dim_oracle(a)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_o_min_tangent(n):
    a = tg.o_min_closed(n)
    assert tg.tangent_dim(a) == n * (n - 1) ** 2 // 2 == tangent_dim_oracle(a)


@pytest.mark.parametrize("label", orbits4.LABELS)
def test_tangent_dim_against_oracle(label):
    a = orbits4.representative(label)
    assert tg.tangent_dim(a) == tangent_dim_oracle(a)


@pytest.mark.parametrize("label", ["O12", "O7", "O6"])
def test_complement_choice_is_irrelevant(label):
    a = orbits4.representative(label)
    dims = {tg.tangent_dim(a, m) for m in ("pivot", "pivot-reversed")}
    assert len(dims) == 1


def test_nonabelian_rejected():
    a = LieSubspace.from_matrices(3, [lie.E(3, 0, 1), lie.E(3, 1, 0)])
    with pytest.raises(tg.NotAbelianError):
        tg.tangent_space_ab(a)


@pytest.mark.parametrize("d, expected", [((1, 2, 3, -6), 0), ((1, 1, 2, -4), 2), ((1, 1, 1, -3), 6)])
def test_sigma_fiber(d, expected):
    x = lie.diag(*d)
    a = LieSubspace.span(4, [lie.project_sl(lie.mpow(x, k)) for k in (1, 2, 3)])
    if a.dim < 3:
        a = LieSubspace.span(4, [lie.diag(1, -1, 0, 0), lie.diag(0, 1, -1, 0), lie.diag(0, 0, 1, -1)])
    assert tg.sigma_fiber_tangent(x, a) == expected


def test_cartan_orbit_dimension():
    h = LieSubspace.from_matrices(4, [lie.diag(1, -1, 0, 0), lie.diag(0, 1, -1, 0), lie.diag(0, 0, 1, -1)])
    assert tg.orbit_dimension(h) == 12


def test_psi_parameters_span_tangent():
    assert tg.deformation_span_matches(4)


def test_quadric_first_order():
    first = tg.quadric_first_order(4)
    assert first["nu"] == (0, 4)
    assert all(v == (0, 0) for p, v in first.items() if p != "nu")


def test_canonical_order():
    rep = tg.canonical_vanishing_order(4)
    tau = RatFunc.t()
    assert rep.valuation == 3
    assert rep.theta_identity
    assert rep.nu_factor == -4 * tau * tau
    assert rep.mu_factor == -2 * tau
    assert rep.tangent_dim == 12


@pytest.mark.parametrize("n", [4, 5, 6])
def test_built_B_satisfies_cone_equations(n):
    assert tg.check_cone_eqs(tg.build_B(n)).ok


def test_stabilizers():
    assert tg.stabilizer_lie_dim(tg.build_B(4)) == 0
    assert tg.stabilizer_lie_dim(tg.build_B(5)) == 0
    # the all-plus form of the defining equations leaves a 2-dim stabilizer at n = 4
    assert tg.stabilizer_lie_dim_literal(tg.build_B(4)) == 2
    assert tg.stabilizer_lie_dim(tg.pure_trace_B(4)) > 0


def test_random_symmetric_B_fails_with_witness():
    c = tg.check_cone_eqs(tg.random_symmetric_B(4, seed=1))
    assert not c.ok and c.witness is not None


def test_tmap_pencil():
    B = tg.tmap(*tg.cayley_pencil())
    assert B.mats == tg.expected_pencil_B().mats
    comm, _, _ = tg.symbolic_commutator(B)
    assert comm == tg.expected_delta_matrix()


def test_tmap_is_isomorphism_onto_traceless_symmetric():
    from redvar import linalg as la
    M = tg.tmap_matrix()
    assert la.rank(M, 15) == 15
    assert la.rank(la.transpose(M) + tg.traceless_symmetric_basis(), 18) == 15
    for col in la.transpose(M):
        assert tg.check_cone_eqs(tg.ConeMapB(4, [[[col[(tg.SYM2_MONOMIALS.index((min(a, b), max(a, b)))) * 3 + k]
                                                   for b in range(3)] for k in range(3)] for a in range(3)])).symmetric
