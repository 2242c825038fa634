"""Hot integer kernels: elimination mod p, batched evaluation of t_4 on
monomials of the third exterior power, and matrix products mod p.

Each kernel has an explicit-loop implementation compiled with numba and a
vectorized numpy implementation. ``backend=None`` picks numba when enabled
(see ``_accel``); tests and the benchmark call both explicitly.
"""
from __future__ import annotations

from itertools import combinations

import numpy as np

from ._accel import ENABLE_NUMBA, jit_decorator

# primes below 2**31: products of two residues fit in int64
BIG_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579, 2147483563, 2147483549)
# primes below 2**21: float64 dot products of length <= 2**11 stay exact
SMALL_PRIMES = (2097143, 2097133, 2097131, 2097097, 2097091, 2097083, 2097047, 2097041)


def _pick(backend: str | None) -> str:
    if backend is None:
        return "numba" if ENABLE_NUMBA else "numpy"
    if backend == "numba" and not ENABLE_NUMBA:
        raise RuntimeError("numba backend requested but disabled")
    return backend


# -- rank / rref mod p ----------------------------------------------------

@jit_decorator
def _rref_mod_p_loop(a, p):
    rows, cols = a.shape
    piv = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = -1
        for i in range(r, rows):
            if a[i, c] != 0:
                k = i
                break
        if k < 0:
            continue
        if k != r:
            for j in range(cols):
                t = a[r, j]
                a[r, j] = a[k, j]
                a[k, j] = t
        # inverse by Fermat
        inv = 1
        base = a[r, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = (inv * base) % p
            base = (base * base) % p
            e >>= 1
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(rows):
            if i != r:
                f = a[i, c]
                if f != 0:
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
        piv[r] = c
        r += 1
    return r, piv[:r]


def _rref_mod_p_numpy(a, p):
    rows, cols = a.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = (a[r, c:] * inv) % p
        f = a[:, c].copy()
        f[r] = 0
        hit = np.nonzero(f)[0]
        if hit.size:
            a[np.ix_(hit, np.arange(c, cols))] = (
                a[np.ix_(hit, np.arange(c, cols))] - np.outer(f[hit], a[r, c:])
            ) % p
        piv.append(c)
        r += 1
    return r, np.array(piv, dtype=np.int64)


def rref_mod_p(a, p: int, backend: str | None = None):
    """Reduced echelon form of an integer matrix modulo a prime p < 2**31.

    Returns (reduced matrix, rank, pivot columns); the input is not modified.
    """
    work = np.mod(np.asarray(a, dtype=np.int64), p)
    if _pick(backend) == "numba":
        r, piv = _rref_mod_p_loop(work, np.int64(p))
    else:
        r, piv = _rref_mod_p_numpy(work, p)
    return work[:r], int(r), [int(c) for c in piv]


def rank_mod_p(a, p: int, backend: str | None = None) -> int:
    return rref_mod_p(a, p, backend)[1]


# -- batched t_4 evaluation ------------------------------------------------

def sl4_basis_array() -> np.ndarray:
    """The 15 standard sl_4 basis matrices (same order as ``lie.sl_basis``)."""
    out = []
    for i in range(4):
        for j in range(4):
            if i != j:
                m = np.zeros((4, 4), dtype=np.int64)
                m[i, j] = 1
                out.append(m)
    for k in range(3):
        m = np.zeros((4, 4), dtype=np.int64)
        m[k, k], m[k + 1, k + 1] = 1, -1
        out.append(m)
    return np.array(out)


def colex_triples(n: int) -> np.ndarray:
    """All 3-subsets of range(n) in colexicographic order."""
    trip = sorted(combinations(range(n), 3), key=lambda s: s[::-1])
    return np.array(trip, dtype=np.int64)


def t4_value_bound(points) -> int:
    """Upper bound for |t_4(monomial)(x)| over the given coordinate rows."""
    basis = sl4_basis_array()
    x = np.tensordot(np.asarray(points, dtype=np.int64), basis, axes=(1, 0))
    b = int(np.abs(x).sum(axis=2).max()) if len(x) else 0
    return 48 * b ** 6


@jit_decorator
def _t4_eval_loop(points, basis, triples):
    npts = points.shape[0]
    nb = basis.shape[0]
    nt = triples.shape[0]
    out = np.zeros((npts, nt), dtype=np.int64)
    x = np.zeros((4, 4), dtype=np.int64)
    xp = np.zeros((3, 4, 4), dtype=np.int64)
    tr = np.zeros((nb, 3), dtype=np.int64)
    for q in range(npts):
        for i in range(4):
            for j in range(4):
                s = 0
                for b in range(nb):
                    s += points[q, b] * basis[b, i, j]
                x[i, j] = s
        for i in range(4):
            for j in range(4):
                xp[0, i, j] = x[i, j]
        for k in range(1, 3):
            for i in range(4):
                for j in range(4):
                    s = 0
                    for l in range(4):
                        s += xp[k - 1, i, l] * x[l, j]
                    xp[k, i, j] = s
        for b in range(nb):
            for k in range(3):
                s = 0
                for i in range(4):
                    for j in range(4):
                        s += basis[b, i, j] * xp[k, j, i]
                tr[b, k] = s
        for t in range(nt):
            r0 = triples[t, 0]
            r1 = triples[t, 1]
            r2 = triples[t, 2]
            out[q, t] = (
                tr[r0, 0] * (tr[r1, 1] * tr[r2, 2] - tr[r1, 2] * tr[r2, 1])
                - tr[r0, 1] * (tr[r1, 0] * tr[r2, 2] - tr[r1, 2] * tr[r2, 0])
                + tr[r0, 2] * (tr[r1, 0] * tr[r2, 1] - tr[r1, 1] * tr[r2, 0])
            )
    return out


def _t4_eval_numpy(points, basis, triples):
    x = np.tensordot(points, basis, axes=(1, 0))  # (P,4,4)
    x2 = x @ x
    x3 = x2 @ x
    tr = np.stack([np.einsum("bkl,plk->pb", basis, xk) for xk in (x, x2, x3)], axis=2)  # (P,15,3)
    m = tr[:, triples, :]  # (P,T,3,3)
    return (
        m[..., 0, 0] * (m[..., 1, 1] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 1])
        - m[..., 0, 1] * (m[..., 1, 0] * m[..., 2, 2] - m[..., 1, 2] * m[..., 2, 0])
        + m[..., 0, 2] * (m[..., 1, 0] * m[..., 2, 1] - m[..., 1, 1] * m[..., 2, 0])
    )


def t4_eval_batch(points, backend: str | None = None) -> np.ndarray:
    """Exact values t_4(z_a ^ z_b ^ z_c)(x) for every colex triple of basis
    vectors and every point x given by its 15 sl_4 coordinates.

    Returns an int64 array of shape (points, 455). Raises if the values could
    overflow int64.
    """
    pts = np.ascontiguousarray(points, dtype=np.int64)
    if t4_value_bound(pts) >= 2 ** 62:
        raise OverflowError("sample points too large for exact int64 evaluation")
    basis = sl4_basis_array()
    triples = colex_triples(15)
    if _pick(backend) == "numba":
        return _t4_eval_loop(pts, basis, triples)
    return _t4_eval_numpy(pts, basis, triples)


# -- matrix product mod p ------------------------------------------------

@jit_decorator
def _matmul_mod_p_loop(a, b, p):
    n, m = a.shape
    k = b.shape[1]
    out = np.zeros((n, k), dtype=np.int64)
    acc = np.zeros(k, dtype=np.int64)
    for i in range(n):
        acc[:] = 0
        for l in range(m):
            f = a[i, l]
            if f != 0:
                for j in range(k):
                    acc[j] += f * b[l, j]
        for j in range(k):
            out[i, j] = acc[j] % p
    return out


def _matmul_mod_p_numpy(a, b, p):
    # float64 products are exact below 2**53 when p < 2**21 and depth <= 2**11
    depth = a.shape[1]
    step = max(1, min(depth, (2 ** 53) // max(1, (p - 1) ** 2)))
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for s in range(0, depth, step):
        part = a[:, s:s + step].astype(np.float64) @ b[s:s + step].astype(np.float64)
        out = (out + np.mod(part, p).astype(np.int64)) % p
    return out


def matmul_mod_p(a, b, p: int, backend: str | None = None) -> np.ndarray:
    """(a @ b) mod p for integer matrices; requires p < 2**21."""
    if p >= 2 ** 21:
        raise ValueError("matmul_mod_p needs p < 2**21")
    a = np.mod(np.asarray(a, dtype=np.int64), p)
    b = np.mod(np.asarray(b, dtype=np.int64), p)
    if _pick(backend) == "numba":
        return _matmul_mod_p_loop(np.ascontiguousarray(a), np.ascontiguousarray(b), np.int64(p))
    return _matmul_mod_p_numpy(a, b, p)
