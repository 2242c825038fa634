"""The numba and numpy backends must agree bit for bit."""
import numpy as np
import pytest

from redvar import exterior, kernels, lie
from redvar._accel import ENABLE_NUMBA

BACKENDS = ["numpy"] + (["numba"] if ENABLE_NUMBA else [])


@pytest.mark.parametrize("backend", BACKENDS)
def test_t4_eval_matches_exact(backend):
    pts = exterior.t4_sample_points(6)
    V = kernels.t4_eval_batch(pts, backend)
    basis = lie.sl_basis(4)
    for row, p in zip(V, pts):
        x = lie.lincomb([int(c) for c in p], basis)
        exact = exterior.minors_table(x)
        assert [int(v) for v in row] == [int(e) for e in exact]


@pytest.mark.skipif(not ENABLE_NUMBA, reason="numba disabled")
def test_backends_agree():
    rng = np.random.default_rng(3)
    a = rng.integers(-20, 20, size=(60, 80))
    b = rng.integers(-20, 20, size=(80, 50))
    p = kernels.BIG_PRIMES[0]
    ra, rb = kernels.rref_mod_p(a, p, "numpy"), kernels.rref_mod_p(a, p, "numba")
    assert ra[1] == rb[1] and ra[2] == rb[2] and np.array_equal(ra[0], rb[0])
    q = kernels.SMALL_PRIMES[0]
    assert np.array_equal(kernels.matmul_mod_p(a, b, q, "numpy"), kernels.matmul_mod_p(a, b, q, "numba"))
    pts = exterior.t4_sample_points(50)
    assert np.array_equal(kernels.t4_eval_batch(pts, "numpy"), kernels.t4_eval_batch(pts, "numba"))


@pytest.mark.parametrize("backend", BACKENDS)
def test_rank_mod_p_small(backend):
    a = np.array([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert kernels.rank_mod_p(a, 7, backend) == 2


def test_overflow_guard():
    with pytest.raises(OverflowError):
        kernels.t4_eval_batch(np.full((1, 15), 10 ** 6), "numpy")
