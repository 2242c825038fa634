"""Multilinear algebra on sl_n: the map Theta whose kernel cuts out abelian
subalgebras, the Killing quadric, the maps i, j, pi, rho, alpha, beta
between Λ^{n-1} sl_n, Λ^n gl_n and S^n C^n, the twist tau, and the
determinantal polynomials t_n and s_n.

Bases: sl_n uses ``lie.sl_basis`` (E_ij for i != j row-major, then H_k);
gl_n uses E_ij at flat index i*n + j; wedge monomials are sorted index
tuples enumerated colexicographically; S^n C^n uses exponent tuples in
reverse lexicographic order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import comb, factorial
from typing import Sequence

import numpy as np

from . import kernels
from . import lie
from . import linalg as la
from .grassmann import colex_subsets
from .lie import LieSubspace, Matrix
from .polys import MPoly

F0, F1 = Fraction(0), Fraction(1)

SparseVec = dict  # index -> Fraction
SparseMap = dict  # column -> SparseVec


class ResourceGuardError(RuntimeError):
    """Raised when a computation is too large without explicit opt-in."""


# -- wedge helpers ---------------------------------------------------------

def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    """Sign of the sorting permutation, or 0 on a repeated index."""
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return 0, ()
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return sign, tuple(sorted(idx))


def wedge(vectors: Sequence[SparseVec]) -> SparseVec:
    """Expand v_1 ^ ... ^ v_k into sorted-tuple monomials."""
    terms: dict[tuple, Fraction] = {(): F1}
    for v in vectors:
        nxt: dict[tuple, Fraction] = {}
        for mono, c in terms.items():
            for i, a in v.items():
                if i in mono:
                    continue
                s, key = _sort_sign(mono + (i,))
                nxt[key] = nxt.get(key, F0) + s * c * a
        terms = {m: c for m, c in nxt.items() if c}
    return terms


def _sparse(v: Sequence[Fraction]) -> SparseVec:
    return {i: Fraction(x) for i, x in enumerate(v) if x}


@lru_cache(maxsize=None)
def monomial_index(N: int, k: int) -> dict:
    return {s: i for i, s in enumerate(colex_subsets(N, k))}


def compose(a: SparseMap, b: SparseMap) -> SparseMap:
    """Sparse matrix of a∘b."""
    out: SparseMap = {}
    for col, vec in b.items():
        acc: SparseVec = {}
        for r, c in vec.items():
            for r2, c2 in a.get(r, {}).items():
                acc[r2] = acc.get(r2, F0) + c * c2
        out[col] = {r: c for r, c in acc.items() if c}
    return out


def apply(a: SparseMap, v: SparseVec) -> SparseVec:
    acc: SparseVec = {}
    for col, c in v.items():
        for r, c2 in a.get(col, {}).items():
            acc[r] = acc.get(r, F0) + c * c2
    return {r: c for r, c in acc.items() if c}


def is_scalar_identity(m: SparseMap, dim: int, scalar=F1) -> bool:
    for col in range(dim):
        want = {col: Fraction(scalar)} if scalar else {}
        if m.get(col, {}) != want:
            return False
    return True


# -- sl_n structure ----------------------------------------------------------

@lru_cache(maxsize=None)
def sl_dim(n: int) -> int:
    return n * n - 1


@lru_cache(maxsize=None)
def _sl_basis_cached(n: int) -> tuple:
    return tuple(tuple(tuple(r) for r in m) for m in lie.sl_basis(n))


def sl_basis(n: int) -> list[Matrix]:
    return [[list(r) for r in m] for m in _sl_basis_cached(n)]


@lru_cache(maxsize=None)
def structure_constants(n: int) -> dict:
    """(a, b) -> sparse sl-coordinates of [b_a, b_b] for a < b."""
    basis = sl_basis(n)
    out = {}
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            v = _sparse(lie.sl_coords(lie.bracket(basis[a], basis[b])))
            if v:
                out[(a, b)] = v
    return out


@lru_cache(maxsize=None)
def trace_gram(n: int) -> tuple:
    """tr(b_a b_b) on the sl basis."""
    basis = sl_basis(n)
    return tuple(tuple(lie.trace(la.matmul(x, y)) for y in basis) for x in basis)


# -- Theta ---------------------------------------------------------------------

def theta_matrix(n: int, allow_large: bool = False) -> tuple[list[list[Fraction]], int, int]:
    """Dense matrix of Theta : Λ^{n-1} sl_n -> sl_n ⊗ Λ^{n-3} sl_n.

    Theta(X_1^...^X_{n-1}) = sum_{p<q} (-1)^{p+q+1} [X_p, X_q] ⊗ (wedge of the others),
    with 1-based positions. Rows are indexed by a * C(N, n-3) + colex(S).
    """
    if n < 3:
        raise ValueError("Theta needs n >= 3")
    if n >= 5 and not allow_large:
        raise ResourceGuardError(f"Theta for n={n} is large; pass allow_large=True")
    N = sl_dim(n)
    cols = colex_subsets(N, n - 1)
    rest_index = monomial_index(N, n - 3)
    nrest = comb(N, n - 3)
    sc = structure_constants(n)
    nrows = N * nrest
    mat = [[F0] * len(cols) for _ in range(nrows)]
    for ci, s in enumerate(cols):
        for p in range(n - 1):
            for q in range(p + 1, n - 1):
                br = sc.get((s[p], s[q]))
                if not br:
                    continue
                sign = -1 if (p + q + 1) % 2 else 1  # (-1)^{(p+1)+(q+1)+1}
                rest = tuple(x for k, x in enumerate(s) if k not in (p, q))
                r0 = rest_index[rest]
                for a, c in br.items():
                    mat[a * nrest + r0][ci] += sign * c
    return mat, nrows, len(cols)


@lru_cache(maxsize=None)
def _theta_rank(n: int, allow_large: bool) -> int:
    m, _, ncols = theta_matrix(n, allow_large)
    return la.rank(m, ncols)


def theta_kernel_dim(n: int, allow_large: bool = False) -> int:
    return comb(sl_dim(n), n - 1) - _theta_rank(n, allow_large)


@lru_cache(maxsize=None)
def _theta_kernel(n: int) -> tuple:
    m, _, ncols = theta_matrix(n)
    return tuple(tuple(v) for v in la.kernel_basis(m, ncols))


def theta_kernel_basis(n: int) -> list[list[Fraction]]:
    return [list(v) for v in _theta_kernel(n)]


def theta_apply(n: int, omega: SparseVec) -> SparseVec:
    """Theta applied to a sparse vector indexed by colex position."""
    N = sl_dim(n)
    cols = colex_subsets(N, n - 1)
    rest_index = monomial_index(N, n - 3)
    nrest = comb(N, n - 3)
    sc = structure_constants(n)
    out: SparseVec = {}
    for ci, w in omega.items():
        s = cols[ci]
        for p in range(n - 1):
            for q in range(p + 1, n - 1):
                br = sc.get((s[p], s[q]))
                if not br:
                    continue
                sign = -1 if (p + q + 1) % 2 else 1
                rest = tuple(x for k, x in enumerate(s) if k not in (p, q))
                r0 = rest_index[rest]
                for a, c in br.items():
                    key = a * nrest + r0
                    out[key] = out.get(key, F0) + sign * c * w
    return {k: v for k, v in out.items() if v}


def plucker_sl(a: LieSubspace) -> SparseVec:
    """Plücker vector of a traceless subspace in sl-basis coordinates,
    keyed by colex position."""
    N = sl_dim(a.n)
    idx = monomial_index(N, a.dim)
    w = wedge([_sparse(r) for r in a.sl_coordinate_rows()])
    return {idx[s]: c for s, c in w.items()}


def ab_membership(a: LieSubspace) -> bool:
    """Theta-kernel test for an (n-1)-dimensional traceless subspace,
    cross-checked against pairwise brackets."""
    n = a.n
    if a.dim != n - 1:
        raise ValueError(f"expected dimension {n - 1}, got {a.dim}")
    if not a.is_traceless():
        raise ValueError("subspace is not traceless")
    via_theta = not theta_apply(n, plucker_sl(a))
    direct = a.is_abelian()
    if via_theta != direct:
        raise AssertionError("Theta test and bracket test disagree")
    return via_theta


# -- Killing quadric ------------------------------------------------------------

def gram(xs: Sequence[Matrix]) -> list[list[Fraction]]:
    return [[lie.trace(la.matmul(x, y)) for y in xs] for x in xs]


def killing_quadric(xs: Sequence[Matrix]) -> Fraction:
    """det(tr(x_i x_j))."""
    return la.det(gram(xs))


# -- the diagram i, j, pi, rho, alpha, beta ---------------------------------

def sym_monomials(n: int) -> list[tuple[int, ...]]:
    """Exponent tuples of degree n in n variables, reverse lexicographic."""
    out = []
    for c in combinations_with_replacement(range(n), n):
        e = [0] * n
        for i in c:
            e[i] += 1
        out.append(tuple(e))
    return sorted(set(out), reverse=True)


def _multinomial(e: Sequence[int]) -> int:
    out = factorial(sum(e))
    for x in e:
        out //= factorial(x)
    return out


@dataclass
class DiagramMaps:
    n: int
    alpha: SparseMap = field(repr=False)
    beta: SparseMap = field(repr=False)
    j: SparseMap = field(repr=False)
    rho: SparseMap = field(repr=False)
    i: SparseMap = field(repr=False)
    pi: SparseMap = field(repr=False)
    tau: SparseMap = field(repr=False)
    sym_basis: list = field(repr=False)
    twist: Fraction = F1

    @property
    def dims(self) -> dict:
        N = sl_dim(self.n)
        return {"wedge_sl": comb(N, self.n - 1), "wedge_gl": comb(self.n ** 2, self.n),
                "sym": len(self.sym_basis)}


def literal_twist(n: int) -> Fraction:
    """(-1)^{n-1} (n-1)!/n, the textbook coefficient of i∘pi in tau."""
    return Fraction((-1) ** (n - 1) * factorial(n - 1), n)


def _pinned_twist(n: int, ipi: SparseMap) -> Fraction:
    """The scalar c making t_n∘(id - c i∘pi) vanish on the diagonal Cartan.

    With the normalizations beta∘alpha = id and pi∘i = (1/n) id this is n!,
    not ``literal_twist(n)``; it is computed here rather than assumed."""
    t = cartan_wedge(n)
    lhs = t_n_on_diagonal_symbolic(n, t)
    rhs = t_n_on_diagonal_symbolic(n, apply(ipi, t))
    mono = next(iter(rhs.terms))
    c = lhs.coefficient(mono) / rhs.coefficient(mono)
    if lhs != rhs * c:
        raise ArithmeticError("t_n(i∘pi(t)) is not proportional to t_n(t)")
    return c


@lru_cache(maxsize=None)
def diagram_maps(n: int) -> DiagramMaps:
    if n not in (3, 4):
        raise ValueError("diagram maps are materialized for n = 3, 4")
    N = sl_dim(n)
    gl_idx = monomial_index(n * n, n)
    sl_idx = monomial_index(N, n - 1)
    basis = sl_basis(n)
    gl_vecs = [_sparse(lie.flatten(m)) for m in basis]
    ident = {i * n + i: F1 for i in range(n)}
    syms = sym_monomials(n)
    sym_idx = {e: k for k, e in enumerate(syms)}

    alpha: SparseMap = {}
    for s, col in sl_idx.items():
        w = wedge([ident] + [gl_vecs[x] for x in s])
        alpha[col] = {gl_idx[m]: c for m, c in w.items()}

    p_elem = {}
    for a in range(n):
        for b in range(n):
            mtx = lie.project_sl(lie.E(n, a, b))
            p_elem[a * n + b] = _sparse(lie.sl_coords(mtx))
    beta: SparseMap = {}
    for t, col in gl_idx.items():
        acc: SparseVec = {}
        for jpos, g in enumerate(t):
            a, b = divmod(g, n)
            if a != b:
                continue
            sign = 1 if jpos % 2 == 0 else -1
            others = [p_elem[x] for k, x in enumerate(t) if k != jpos]
            for m, c in wedge(others).items():
                key = sl_idx[m]
                acc[key] = acc.get(key, F0) + Fraction(sign, n) * c
        beta[col] = {k: v for k, v in acc.items() if v}

    jmap: SparseMap = {}
    for e, col in sym_idx.items():
        content = [i for i, m in enumerate(e) for _ in range(m)]
        acc = {}
        for f in set(permutations(content)):
            s, key = _sort_sign([f[k] * n + k for k in range(n)])
            acc[gl_idx[key]] = acc.get(gl_idx[key], F0) + Fraction(s, _multinomial(e))
        jmap[col] = {k: v for k, v in acc.items() if v}

    rho: SparseMap = {}
    for t, col in gl_idx.items():
        pairs = [divmod(g, n) for g in t]
        bs = [b for _, b in pairs]
        if sorted(bs) != list(range(n)):
            rho[col] = {}
            continue
        s, _ = _sort_sign(bs)
        e = [0] * n
        for a, _ in pairs:
            e[a] += 1
        rho[col] = {sym_idx[tuple(e)]: Fraction(s)}

    i_map = compose(beta, jmap)
    pi_map = compose(rho, alpha)
    ipi = compose(i_map, pi_map)
    c = _pinned_twist(n, ipi)
    tau: SparseMap = {}
    for col in range(comb(N, n - 1)):
        v = {r: -c * x for r, x in ipi.get(col, {}).items()}
        v[col] = v.get(col, F0) + 1
        tau[col] = {r: x for r, x in v.items() if x}
    return DiagramMaps(n, alpha, beta, jmap, rho, i_map, pi_map, tau, syms, c)


def diagram_identities(n: int) -> dict[str, bool]:
    """rho∘j = id, beta∘alpha = id, pi∘i = (1/n) id on the monomial bases."""
    d = diagram_maps(n)
    dims = d.dims
    return {
        "rho_j": is_scalar_identity(compose(d.rho, d.j), dims["sym"]),
        "beta_alpha": is_scalar_identity(compose(d.beta, d.alpha), dims["wedge_sl"]),
        "pi_i": is_scalar_identity(compose(d.pi, d.i), dims["sym"], Fraction(1, n)),
    }


def sym_power_vector(n: int, v: Sequence) -> SparseVec:
    """v^n in the monomial basis of S^n C^n."""
    idx = {e: k for k, e in enumerate(diagram_maps(n).sym_basis)}
    out = {}
    for e, k in idx.items():
        c = Fraction(_multinomial(e))
        for vi, ei in zip(v, e):
            c *= Fraction(vi) ** ei
        if c:
            out[k] = c
    return out


def wedge_gl(mats: Sequence[Matrix]) -> SparseVec:
    n = len(mats[0])
    idx = monomial_index(n * n, len(mats))
    return {idx[m]: c for m, c in wedge([_sparse(lie.flatten(x)) for x in mats]).items()}


def wedge_sl(mats: Sequence[Matrix]) -> SparseVec:
    n = len(mats[0])
    idx = monomial_index(sl_dim(n), len(mats))
    return {idx[m]: c for m, c in wedge([_sparse(lie.sl_coords(x)) for x in mats]).items()}


# -- t_n, s_n ------------------------------------------------------------------

def kvector_eval(zs: Sequence[Matrix], ws: Sequence[Matrix]) -> Fraction:
    """(Z_1 ^ ... ^ Z_k)(W_1, ..., W_k) = det(tr(Z_i W_j))."""
    return la.det([[lie.trace(la.matmul(z, w)) for w in ws] for z in zs])


def t_n_eval(zs: Sequence[Matrix], x: Matrix) -> Fraction:
    """det(tr(z_i x^j)), j = 1..n-1."""
    n = len(x)
    powers = [x]
    for _ in range(n - 2):
        powers.append(la.matmul(powers[-1], x))
    return kvector_eval(zs, powers)


def _trace_table(x: Matrix) -> list[list[Fraction]]:
    """tr(b_a x^j) for every sl basis element b_a and j = 1..n-1."""
    n = len(x)
    powers = [x]
    for _ in range(n - 2):
        powers.append(la.matmul(powers[-1], x))
    table = []
    for lab in lie.sl_basis_labels(n):
        if lab[0] == "E":
            _, i, j = lab
            table.append([p[j][i] for p in powers])
        else:
            k = lab[1]
            table.append([p[k][k] - p[k + 1][k + 1] for p in powers])
    return table


def t_n_vector_eval(n: int, omega: SparseVec, x: Matrix) -> Fraction:
    """t_n applied to a vector of Λ^{n-1} sl_n (colex keys), evaluated at x."""
    table = _trace_table(x)
    cols = colex_subsets(sl_dim(n), n - 1)
    total = F0
    for ci, w in omega.items():
        total += w * la.det([table[a] for a in cols[ci]])
    return total


def t_n_twisted_eval(a: LieSubspace, x: Matrix) -> Fraction:
    """t'_n = t_n∘tau on the Plücker vector of a, evaluated at x."""
    d = diagram_maps(a.n)
    return t_n_vector_eval(a.n, apply(d.tau, plucker_sl(a)), x)


def s_n_eval(v: Sequence, x: Matrix) -> Fraction:
    """det(v | xv | ... | x^{n-1} v)."""
    n = len(x)
    cols = [[Fraction(c) for c in v]]
    for _ in range(n - 1):
        cols.append(la.matvec(x, cols[-1]))
    return la.det(la.transpose(cols))


def s_n_dual_eval(e: Sequence, x: Matrix) -> Fraction:
    return s_n_eval(e, lie.transpose(x))


# -- symbolic checks on the diagonal ---------------------------------------------

def diagonal_symbolic(n: int) -> list[MPoly]:
    """x_1..x_{n-1} as variables and x_n = -(x_1+...+x_{n-1})."""
    xs = [MPoly.var(n - 1, i) for i in range(n - 1)]
    last = MPoly.const(n - 1, 0)
    for v in xs:
        last = last - v
    return xs + [last]


def _mpoly_det(m: list[list[MPoly]]) -> MPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = MPoly.const(m[0][0].nvars, 0)
    for c in range(n):
        minor = [row[:c] + row[c + 1:] for row in m[1:]]
        term = m[0][c] * _mpoly_det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def t_n_on_diagonal_symbolic(n: int, omega: SparseVec) -> MPoly:
    """t_n(omega) on a generic traceless diagonal matrix, as a polynomial in
    x_1..x_{n-1}. Only monomials in the H_k contribute."""
    xs = diagonal_symbolic(n)
    off = n * n - n
    cols = colex_subsets(sl_dim(n), n - 1)
    table = {}
    for k in range(n - 1):
        table[off + k] = [xs[k] ** j - xs[k + 1] ** j for j in range(1, n)]
    total = MPoly.const(n - 1, 0)
    for ci, w in omega.items():
        s = cols[ci]
        if all(a in table for a in s):
            total = total + _mpoly_det([table[a] for a in s]) * w
    return total


def vandermonde_symbolic(n: int) -> MPoly:
    xs = diagonal_symbolic(n)
    out = MPoly.const(n - 1, 1)
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (xs[i] - xs[j])
    return out


def cartan_wedge(n: int) -> SparseVec:
    """H_1 ^ ... ^ H_{n-1} in colex coordinates."""
    off = n * n - n
    return {monomial_index(sl_dim(n), n - 1)[tuple(range(off, off + n - 1))]: F1}


# -- rank of t_4 -----------------------------------------------------------------

@dataclass
class T4RankReport:
    rank: int | None
    lower_bound: int
    upper_bound: int
    certified: bool
    n_samples: int
    n_lattice: int
    kernel_vectors: int
    witness: dict | None = None

    @property
    def status(self) -> str:
        return "pass" if self.certified else "indeterminate"


def t4_sample_points(count: int = 640, seed: int = 20240611, bound: int = 3) -> np.ndarray:
    """Deterministic integer points of sl_4 (15 coordinates); each has a
    negative coordinate, so none lies on the certification lattice."""
    r = lie.rng(seed)
    pts = []
    while len(pts) < count:
        p = [r.randint(-bound, bound) for _ in range(15)]
        if min(p) < 0:
            pts.append(p)
    return np.array(pts, dtype=np.int64)


def lattice_points(nvars: int = 15, degree: int = 6) -> np.ndarray:
    """{x in N^nvars : |x| = degree}, unisolvent for homogeneous forms of that degree."""
    out = []
    for c in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for i in c:
            e[i] += 1
        out.append(e)
    return np.array(out, dtype=np.int64)


def _lambda3_gram_map() -> SparseMap:
    """Λ^3 of the trace form on sl_4 as a sparse map on colex monomials."""
    g = trace_gram(4)
    rows = [{b: Fraction(v) for b, v in enumerate(r) if v} for r in g]
    idx = monomial_index(15, 3)
    out: SparseMap = {}
    for s, col in idx.items():
        out[col] = {idx[m]: c for m, c in wedge([rows[a] for a in s]).items()}
    return out


@lru_cache(maxsize=None)
def t4_annihilator_vectors() -> tuple:
    """Primitive integer vectors spanning the trace-pairing annihilator of
    ker Theta. t_4(z)(x) pairs z with p(x)^p(x^2)^p(x^3), which always lies
    in ker Theta, so each such z is a candidate kernel vector of t_4."""
    from math import gcd, lcm

    K = theta_kernel_basis(4)
    G = _lambda3_gram_map()
    kg = [[F0] * 455 for _ in K]
    for r, k in enumerate(K):
        for col, c in enumerate(k):
            if c:
                for r2, c2 in G[col].items():
                    kg[r][r2] += c * c2
    Z = la.kernel_basis(kg, 455)
    out = []
    for z in Z:
        den = lcm(*(x.denominator for x in z))
        ints = [int(x * den) for x in z]
        g = 0
        for x in ints:
            g = gcd(g, x)
        out.append(tuple(x // g for x in ints))
    return tuple(out)


def _zero_certificate(Z: np.ndarray, V: np.ndarray, backend) -> tuple[bool, tuple | None]:
    """Whether Z @ V.T is exactly zero, using enough small primes to exceed
    the a-priori bound on |entries|."""
    bound = int(np.abs(Z).sum(axis=1).max()) * int(np.abs(V).max() or 1)
    primes = []
    prod = 1
    for p in kernels.SMALL_PRIMES:
        if prod > 2 * bound:
            break
        primes.append(p)
        prod *= p
    if prod <= 2 * bound:
        raise OverflowError("not enough primes for the value bound")
    for p in primes:
        r = kernels.matmul_mod_p(Z, V.T, p, backend)
        nz = np.argwhere(r != 0)
        if nz.size:
            return False, (int(nz[0][0]), int(nz[0][1]))
    return True, None


def t4_rank(samples: int = 640, chunk: int = 8000, backend: str | None = None) -> T4RankReport:
    """Certified rank of t_4 : Λ^3 sl_4 -> degree 6 forms on sl_4.

    Lower bound: rank mod p of the 455 x samples evaluation matrix.
    Upper bound: 455 minus the number of independent vectors z with t_4(z)
    vanishing on the degree-6 simplex lattice of 15 variables; a degree-6
    form vanishing there is identically zero.
    """
    pts = t4_sample_points(samples)
    V = kernels.t4_eval_batch(pts, backend)
    lower = kernels.rank_mod_p(V, kernels.BIG_PRIMES[0], backend)
    Z = np.array(t4_annihilator_vectors(), dtype=np.int64)
    lattice = lattice_points()
    witness = None
    ok = True
    for s in range(0, len(lattice), chunk):
        VL = kernels.t4_eval_batch(lattice[s:s + chunk], backend)
        good, where = _zero_certificate(Z, VL, backend)
        if not good:
            ok = False
            witness = {"kernel_vector": where[0], "lattice_point": lattice[s + where[1]].tolist()}
            break
    upper = 455 - len(Z) if ok else 455
    certified = ok and lower == upper
    return T4RankReport(lower if certified else None, lower, upper, certified,
                        samples, len(lattice), len(Z), witness)


def wbar4_points(count: int = 30, seed: int = 7) -> list[Matrix]:
    """p(g diag(0,0,b,c) g^{-1}), scaled by 4 to integer entries."""
    r = lie.rng(seed)
    out = []
    while len(out) < count:
        g = lie.random_invertible(4, r, -2, 2)
        b, c = r.randint(1, 3), r.randint(-3, -1)
        x = lie.conjugate(g, lie.diag(0, 0, b, c))
        out.append(lie.scale(4, lie.project_sl(x)))
    return out


def minors_table(x: Matrix) -> list[Fraction]:
    """t_4 of every colex basis monomial at x."""
    table = _trace_table(x)
    return [la.det([table[a] for a in s]) for s in colex_subsets(15, 3)]


def theta_kernel_vanishes_on_wbar(points: Sequence[Matrix]) -> bool:
    K = theta_kernel_basis(4)
    for x in points:
        vals = minors_table(x)
        for k in K:
            if sum((c * v for c, v in zip(k, vals) if c and v), F0) != 0:
                return False
    return True


def non_kernel_witness(samples: int = 40) -> dict | None:
    """A basis monomial outside ker Theta whose t_4 is nonzero at a sample."""
    pts = t4_sample_points(samples, seed=99)
    V = kernels.t4_eval_batch(pts)
    cols = colex_subsets(15, 3)
    for ci, s in enumerate(cols):
        if theta_apply(4, {ci: F1}):
            nz = np.nonzero(V[:, ci])[0]
            if nz.size:
                return {"monomial": [lie.sl_basis_labels(4)[a] for a in s],
                        "point": pts[nz[0]].tolist(), "value": int(V[nz[0], ci])}
    return None
