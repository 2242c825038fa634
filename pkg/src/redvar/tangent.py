"""Zariski tangent spaces to the variety of abelian subalgebras, fibers of
the map to W̄_n, the cone tensor B at the closed orbit, and the order of
vanishing of the squared volume form along the boundary divisor."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Sequence

from . import lie
from . import linalg as la
from .lie import LieSubspace, Matrix
from .polys import MPoly, Poly, RatFunc

F0, F1 = Fraction(0), Fraction(1)


class NotAbelianError(ValueError):
    pass


# -- complements -----------------------------------------------------------------

def complement(a: LieSubspace, method: str = "auto") -> list[Matrix]:
    """A basis of a complement of a inside sl_n.

    ``killing``: the trace-form orthogonal (needs a nondegenerate restriction);
    ``pivot``: coordinate vectors on the non-pivot sl coordinates;
    ``pivot-reversed``: the same after reversing the coordinate order;
    ``auto``: killing when possible, else pivot.
    """
    n = a.n
    N = n * n - 1
    rows = a.sl_coordinate_rows()
    basis = lie.sl_basis(n)
    if method == "auto":
        method = "killing" if la.det(_gram(a.matrices())) != 0 else "pivot"
    if method == "killing":
        if la.det(_gram(a.matrices())) == 0:
            raise ValueError("trace form is degenerate on the subspace")
        eqs = [[lie.trace(la.matmul(x, b)) for b in basis] for x in a.matrices()]
        return [lie.from_sl_coords(v, n) for v in la.kernel_basis(eqs, N)]
    if method in ("pivot", "pivot-reversed"):
        order = list(range(N)) if method == "pivot" else list(range(N))[::-1]
        _, _, piv = la.rref([[r[c] for c in order] for r in rows], N)
        used = {order[p] for p in piv}
        return [basis[c] for c in range(N) if c not in used]
    raise ValueError(f"unknown complement method {method!r}")


def _gram(xs):
    return [[lie.trace(la.matmul(x, y)) for y in xs] for x in xs]


# -- tangent spaces ---------------------------------------------------------------

@dataclass
class DeformationSpace:
    base: LieSubspace
    complement: list = field(repr=False)
    basis: list = field(repr=False)  # vectors y with psi(x_i) = sum_m y[i*c + m] c_m

    @property
    def dim(self) -> int:
        return len(self.basis)

    def hom(self, y: Sequence[Fraction]) -> list[Matrix]:
        c = len(self.complement)
        return [lie.lincomb(y[i * c:(i + 1) * c], self.complement) for i in range(self.base.dim)]


def _linearized_system(a: LieSubspace, comp: list[Matrix]) -> list[list[Fraction]]:
    xs = a.matrices()
    k, c = len(xs), len(comp)
    n = a.n
    br = [[lie.flatten(lie.bracket(cm, x)) for x in xs] for cm in comp]  # [c_m, x_j]
    rows = []
    for i in range(k):
        for j in range(i + 1, k):
            block = [[F0] * (k * c) for _ in range(n * n)]
            for m in range(c):
                col_i, col_j = br[m][j], br[m][i]
                for e in range(n * n):
                    # [psi(x_i), x_j] + [x_i, psi(x_j)] = [c_m, x_j] y_im - [c_m, x_i] y_jm
                    if col_i[e]:
                        block[e][i * c + m] += col_i[e]
                    if col_j[e]:
                        block[e][j * c + m] -= col_j[e]
            rows.extend(r for r in block if any(r))
    return rows


def tangent_space_ab(a: LieSubspace, method: str = "auto") -> DeformationSpace:
    if not a.is_abelian():
        raise NotAbelianError("subspace is not abelian")
    comp = complement(a, method)
    nunk = a.dim * len(comp)
    rows = _linearized_system(a, comp)
    return DeformationSpace(a, comp, la.kernel_basis(rows, nunk) if rows else
                            [[F1 if i == j else F0 for j in range(nunk)] for i in range(nunk)])


def tangent_dim(a: LieSubspace, method: str = "auto") -> int:
    comp = complement(a, method)
    nunk = a.dim * len(comp)
    if not a.is_abelian():
        raise NotAbelianError("subspace is not abelian")
    rows = _linearized_system(a, comp)
    return nunk - (la.rank(rows, nunk) if rows else 0)


def sigma_fiber_tangent(x: Matrix, a: LieSubspace) -> int:
    """dim {psi in T_a : psi(x) = 0}."""
    coeffs = la.solve_in_span(a.basis, lie.flatten(x))
    if coeffs is None:
        raise ValueError("x does not lie in the subspace")
    comp = complement(a)
    c = len(comp)
    nunk = a.dim * c
    rows = _linearized_system(a, comp)
    for m in range(c):
        row = [F0] * nunk
        for i, ci in enumerate(coeffs):
            row[i * c + m] = ci
        rows.append(row)
    return nunk - la.rank(rows, nunk)


def vector_in_tangent(space: DeformationSpace, images: Sequence[Matrix]) -> list[Fraction]:
    """Coordinates (in the unknowns of ``space``) of the hom x_i -> images[i] mod a."""
    a = space.base
    comb_basis = [lie.flatten(m) for m in a.matrices()] + [lie.flatten(m) for m in space.complement]
    out = []
    for img in images:
        coeffs = la.solve_in_span(comb_basis, lie.flatten(img))
        if coeffs is None:
            raise ValueError("image is not traceless")
        out.extend(coeffs[a.dim:])
    return out


def orbit_dimension(a: LieSubspace) -> int:
    """Rank of sl_n -> Hom(a, sl_n/a), X -> ([X, .] mod a)."""
    n = a.n
    N = n * n - 1
    red, _, piv = la.rref(a.sl_coordinate_rows(), N)
    free = [c for c in range(N) if c not in piv]
    xs = a.matrices()

    def reduce(v):
        v = list(v)
        for row, p in zip(red, piv):
            if v[p]:
                c = v[p]
                v = [x - c * y for x, y in zip(v, row)]
        return [v[c] for c in free]

    rows = []
    for b in lie.sl_basis(n):
        img = []
        for x in xs:
            img.extend(reduce(lie.sl_coords(lie.bracket(b, x))))
        rows.append(img)
    return la.rank(rows, len(xs) * len(free))


# -- the boundary representative and its deformations ----------------------------

def o_bound(n: int) -> LieSubspace:
    """p of span{E_12, E_11 + E_22, E_33, ..., E_nn} (0-based E(0,1) etc.)."""
    mats = [lie.E(n, 0, 1), lie.project_sl(lie.add(lie.E(n, 0, 0), lie.E(n, 1, 1)))]
    mats += [lie.project_sl(lie.E(n, k, k)) for k in range(2, n - 1)]
    return LieSubspace.from_matrices(n, mats)


def o_min_closed(n: int) -> LieSubspace:
    """Matrices with image in and kernel containing the hyperplane <e_1..e_{n-1}>:
    span{E_in : i < n}."""
    return LieSubspace.from_matrices(n, [lie.E(n, i, n - 1) for i in range(n - 1)])


def psi_parameters(n: int) -> list:
    """'mu', 'nu', then ('theta', j, k) (1-based) for j != k with max(j, k) >= 3."""
    params: list = ["mu", "nu"]
    params += [("theta", j, k) for j in range(1, n + 1) for k in range(1, n + 1)
               if j != k and max(j, k) >= 3]
    return params


def psi_family(n: int, t, zero, one) -> tuple[list[list[list]], dict]:
    """Base matrices psi_k(t, 0) and derivative matrices d psi_k / d p.

    Entries are built from ``zero``, ``one`` and the parameter value ``t`` of
    the curve (t = 0 gives the first-order deformation of the boundary point).
    Returns (base, derivs) with derivs[p][k] a matrix.
    """
    def blank():
        return [[zero] * n for _ in range(n)]

    base = [blank() for _ in range(n)]
    base[0][0][1] = one
    base[0][1][0] = t
    base[1][0][0] = one
    base[1][1][1] = one
    for k in range(2, n):
        base[k][k][k] = one
    derivs = {p: [blank() for _ in range(n)] for p in psi_parameters(n)}

    def put(p, k, i, j, val):
        derivs[p][k][i][j] = derivs[p][k][i][j] + val

    put("mu", 0, 0, 0, one)
    put("mu", 0, 1, 1, -one)
    put("nu", 0, 1, 0, one)
    for c in range(2, n):  # 0-based index of k >= 3
        K = c + 1
        put(("theta", 2, K), 0, 0, c, -one)
        put(("theta", 1, K), 0, 1, c, -t)
        put(("theta", K, 2), 0, c, 0, -t)
        put(("theta", K, 1), 0, c, 1, -one)
        put(("theta", 1, K), 1, 0, c, -one)
        put(("theta", 2, K), 1, 1, c, -one)
        put(("theta", K, 1), 1, c, 0, -one)
        put(("theta", K, 2), 1, c, 1, -one)
    for c in range(2, n):
        K = c + 1
        for r in range(n):
            if r == c:
                continue
            J = r + 1
            sign = one if r < c else -one
            put(("theta", J, K), c, r, c, sign)  # column k
            put(("theta", K, J), c, c, r, sign)  # row k
    return base, derivs


def psi_at(n: int, values: dict, t=F0) -> list[Matrix]:
    """psi_k(t, params) as rational matrices; missing parameters are zero."""
    base, derivs = psi_family(n, Fraction(t), F0, F1)
    out = []
    for k in range(n):
        m = [list(r) for r in base[k]]
        for p, v in values.items():
            d = derivs[p][k]
            for i in range(n):
                for j in range(n):
                    if d[i][j]:
                        m[i][j] += Fraction(v) * d[i][j]
        out.append(m)
    return out


def boundary_deformation_vectors(n: int) -> tuple[DeformationSpace, dict]:
    """The tangent vector of each psi-parameter at the boundary point, in
    coordinates of the computed tangent space."""
    a = o_bound(n)
    space = tangent_space_ab(a)
    base, derivs = psi_family(n, F0, F0, F1)
    xs = a.matrices()
    # x_0 = p psi_1, x_1 = p psi_2, x_i = p psi_{i+1}: same ordering as o_bound
    vecs = {}
    for p, d in derivs.items():
        vecs[p] = vector_in_tangent(space, [lie.project_sl(d[k]) for k in range(len(xs))])
    return space, vecs


def deformation_span_matches(n: int) -> bool:
    """The psi-directions form a basis of the tangent space at the boundary point."""
    space, vecs = boundary_deformation_vectors(n)
    c = len(space.complement)
    rows = _linearized_system(space.base, space.complement)
    for v in vecs.values():
        if any(sum((r[i] * v[i] for i in range(len(v)) if r[i] and v[i]), F0) for r in rows):
            return False
    return la.rank(list(vecs.values()), space.base.dim * c) == space.dim == len(vecs)


def _det_ring(m: list[list]):
    """Leibniz expansion; fine for the 4x4 and 5x5 Gram matrices used here."""
    n = len(m)
    total = None
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = m[0][perm[0]]
        for i in range(1, n):
            term = term * m[i][perm[i]]
        term = term if sign > 0 else -term
        total = term if total is None else total + term
    return total


def quadric_first_order(n: int) -> dict:
    """Gram determinant det(tr(psi_i psi_j)) along each parameter line,
    returned as {parameter: (constant term, linear coefficient)}."""
    base, derivs = psi_family(n, Poly(), Poly(), Poly([1]))
    eps = Poly.x()
    out = {}
    for p, d in derivs.items():
        mats = [[[base[k][i][j] + eps * d[k][i][j] for j in range(n)] for i in range(n)] for k in range(n)]
        gram = [[_trace_poly(x, y) for y in mats] for x in mats]
        g = _det_ring(gram)
        cs = list(g.coeffs) + [F0, F0]
        out[p] = (cs[0], cs[1])
    return out


def _trace_poly(x, y):
    n = len(x)
    acc = Poly()
    for i in range(n):
        for k in range(n):
            acc = acc + x[i][k] * y[k][i]
    return acc


# -- order of vanishing along the boundary divisor -------------------------------

@dataclass
class CanonicalOrderReport:
    valuation: int
    determinant: RatFunc
    theta_identity: bool
    nu_factor: RatFunc
    mu_factor: RatFunc
    tangent_dim: int


def _rat(x) -> RatFunc:
    return x if isinstance(x, RatFunc) else RatFunc(Poly([x]))


def canonical_vanishing_order(n: int = 4) -> CanonicalOrderReport:
    """Valuation in tau (t = tau^2) of the transition determinant between the
    psi-parameter basis and the ad-basis of the tangent space along the curve
    a(t) = span{E_12 + t E_21, E_11 + E_22, E_33, ..., E_nn}."""
    tau = RatFunc.t()
    t = tau * tau
    zero, one = RatFunc(0), RatFunc(1)
    base, derivs = psi_family(n, t, zero, one)
    # sanity: the tangent dimension along the curve (at t = 4) is n(n-1)
    sample = LieSubspace.span(n, [lie.project_sl([[x(Fraction(4)) for x in row] for row in m]) for m in base])
    tdim = tangent_dim(sample)
    if tdim != n * (n - 1):
        raise ArithmeticError(f"tangent dimension {tdim} along the curve")

    pivots = [(0, 1), (0, 0)] + [(k, k) for k in range(2, n)]
    kept = [(i, j) for i in range(n) for j in range(n) if (i, j) not in pivots]

    def reduce(v: list[list]) -> list:
        v = [list(r) for r in v]
        for k, (pi, pj) in enumerate(pivots):
            c = v[pi][pj]
            if c:
                for i in range(n):
                    for j in range(n):
                        if base[k][i][j]:
                            v[i][j] = v[i][j] - c * base[k][i][j]
        return [v[i][j] for i, j in kept]

    def rat_bracket(x, y):
        return [[sum((x[i][l] * y[l][j] - y[i][l] * x[l][j] for l in range(n)), zero) for j in range(n)]
                for i in range(n)]

    def hom_vector(images: list) -> list:
        out = []
        for img in images:
            out.extend(reduce(img))
        return out

    # well-definedness: the images of psi_2 + ... + psi_n = I must vanish
    for p, d in derivs.items():
        tot = [[sum((d[k][i][j] for k in range(1, n)), zero) for j in range(n)] for i in range(n)]
        if any(reduce(tot)):
            raise ArithmeticError(f"parameter {p} does not define a tangent vector")

    A = {p: hom_vector(d) for p, d in derivs.items()}

    def ad(x):
        return hom_vector([rat_bracket(x, b) for b in base])

    def unit(i, j, c=one):
        m = [[zero] * n for _ in range(n)]
        m[i][j] = c
        return m

    h = [[zero] * n for _ in range(n)]
    h[0][0], h[1][1] = one, -one
    skew = [[zero] * n for _ in range(n)]
    skew[1][0], skew[0][1] = tau, -(one / tau)
    B = {"h": ad(h), "skew": ad(skew)}
    for j in range(n):
        for k in range(n):
            if j != k and max(j, k) >= 2:
                B[("theta", j + 1, k + 1)] = ad(unit(j, k))

    # d/d theta_jk = sign(k - j) ad(E_jk): the sign follows the psi_k pattern
    theta_ok = all(B[p] == [x if p[1] < p[2] else -x for x in A[p]] for p in A if isinstance(p, tuple))
    nu_factor = _proportionality(A["nu"], B["h"])
    mu_factor = _proportionality(A["mu"], B["skew"])

    names = list(A)
    cols = [A[p] for p in names] + [B[q] for q in B]
    mat = [[col[r] for col in cols] for r in range(len(cols[0]))]
    red, piv = la.rref_generic(mat, len(cols), zero, one)
    if piv[:len(names)] != list(range(len(names))):
        raise ArithmeticError("psi-directions are dependent along the curve")
    coeffs = [[red[r][len(names) + q] for r in range(len(names))] for q in range(len(B))]
    d = la.det_generic(coeffs, zero, one)
    return CanonicalOrderReport(d.valuation(), d, theta_ok, nu_factor, mu_factor, tdim)


def _proportionality(v: list, w: list):
    """lambda with w = lambda v, or None."""
    lam = None
    for x, y in zip(v, w):
        if x:
            lam = y / x
            break
    if lam is None or any(y != lam * x for x, y in zip(v, w)):
        return None
    return lam


# -- the cone tensor B -------------------------------------------------------------

@dataclass
class ConeMapB:
    """B(e_i) for i = 1..n-1 as (n-1)x(n-1) matrices over Q."""
    n: int
    mats: list

    @property
    def m(self) -> int:
        return self.n - 1

    def apply(self, u: Sequence, v: Sequence) -> list:
        """B(u) v."""
        m = self.m
        out = [F0] * m
        for i in range(m):
            if u[i]:
                bv = la.matvec(self.mats[i], v)
                for r in range(m):
                    out[r] += u[i] * bv[r]
        return out


def build_B(n: int) -> ConeMapB:
    """B(e_i) = pi J^i iota with J e_k = e_{k+1} (indices mod n)."""
    m = n - 1
    mats = []
    for i in range(1, n):
        b = la.zeros(m, m)
        for k in range(1, n):
            s = (i + k) % n
            if s:
                b[s - 1][k - 1] = F1
        mats.append(b)
    return ConeMapB(n, mats)


def pure_trace_B(n: int, phi: Sequence | None = None) -> ConeMapB:
    """B_phi(u) v = phi(u) v + phi(v) u."""
    m = n - 1
    phi = [Fraction(x) for x in (phi or [1] + [0] * (m - 1))]
    mats = []
    for i in range(m):
        b = la.zeros(m, m)
        for k in range(m):
            b[k][k] += phi[i]
            b[i][k] += phi[k]
        mats.append(b)
    return ConeMapB(n, mats)


def _symbolic_vec(nv: int, offset: int, m: int) -> list[MPoly]:
    return [MPoly.var(nv, offset + i) for i in range(m)]


def _mat_mpoly(mats: list, u: list[MPoly]) -> list[list[MPoly]]:
    m = len(mats[0])
    nv = u[0].nvars
    out = [[MPoly.const(nv, 0) for _ in range(m)] for _ in range(m)]
    for i, b in enumerate(mats):
        for r in range(m):
            for c in range(m):
                if b[r][c]:
                    out[r][c] = out[r][c] + u[i] * b[r][c]
    return out


def _mm(a, b):
    m = len(a)
    nv = a[0][0].nvars
    return [[sum((a[i][l] * b[l][j] for l in range(m)), MPoly.const(nv, 0)) for j in range(m)] for i in range(m)]


def symbolic_commutator(B: ConeMapB) -> tuple[list[list[MPoly]], list[MPoly], list[MPoly]]:
    """[B(u), B(v)] with u, v symbolic (variables u_1..u_m, v_1..v_m)."""
    m = B.m
    u = _symbolic_vec(2 * m, 0, m)
    v = _symbolic_vec(2 * m, m, m)
    bu, bv = _mat_mpoly(B.mats, u), _mat_mpoly(B.mats, v)
    x, y = _mm(bu, bv), _mm(bv, bu)
    return [[x[i][j] - y[i][j] for j in range(m)] for i in range(m)], u, v


def _wedge3_components(a: list, b: list, c: list) -> list:
    m = len(a)
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                out.append(a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i])
                           + a[k] * (b[i] * c[j] - b[j] * c[i]))
    return out


@dataclass
class ConeCheck:
    symmetric: bool
    traceless: bool
    quadratic: bool
    witness: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.symmetric and self.traceless and self.quadratic


def check_cone_eqs(B: ConeMapB) -> ConeCheck:
    """Symmetry B(u)v = B(v)u, tracelessness, and u ^ v ^ [B(u),B(v)]w = 0,
    the last as a polynomial identity (every coefficient vanishes)."""
    m = B.m
    basis = [[F1 if i == j else F0 for j in range(m)] for i in range(m)]
    sym = all(B.apply(basis[i], basis[j]) == B.apply(basis[j], basis[i]) for i in range(m) for j in range(m))
    trl = all(lie.trace(b) == 0 for b in B.mats)
    quad = True
    witness = None
    if m >= 3:
        comm, u, v = symbolic_commutator(B)
        nv = 2 * m
        for widx in range(m):
            w = basis[widx]
            img = [sum((comm[r][c] * w[c] for c in range(m) if w[c]), MPoly.const(nv, 0)) for r in range(m)]
            if any(not p.is_zero() for p in _wedge3_components(u, v, img)):
                quad = False
                witness = _find_witness(B, widx)
                break
    return ConeCheck(sym, trl, quad, witness)


def _find_witness(B: ConeMapB, widx: int) -> tuple | None:
    m = B.m
    cands = []
    for i in range(m):
        cands.append([F1 if k == i else F0 for k in range(m)])
    for i in range(m):
        for j in range(i + 1, m):
            cands.append([F1 if k in (i, j) else F0 for k in range(m)])
    w = [F1 if k == widx else F0 for k in range(m)]
    for u in cands:
        for v in cands:
            bu = lambda x: B.apply(u, x)  # noqa: E731
            bv = lambda x: B.apply(v, x)  # noqa: E731
            cw = [p - q for p, q in zip(bu(bv(w)), bv(bu(w)))]
            if la.rank([u, v, cw]) == 3:
                return (u, v, w)
    return None


def stabilizer_lie_dim(B: ConeMapB, projective: bool = True) -> int:
    """Dimension of {X in sl(U) : X.B = c B} (c = 0 unless projective),
    where (X.B)(u, v) = X B(u, v) - B(Xu, v) - B(u, Xv)."""
    m = B.m
    nx = m * m
    nunk = nx + (1 if projective else 0)
    basis = [[F1 if i == j else F0 for j in range(m)] for i in range(m)]
    rows = []
    for a in range(m):
        for b in range(a, m):
            for r in range(m):
                row = [F0] * nunk
                buv = B.apply(basis[a], basis[b])
                for p in range(m):
                    for q in range(m):
                        col = p * m + q  # X[p][q]
                        val = F0
                        # X B(u,v): row r picks X[r][q] B(u,v)[q]
                        if p == r:
                            val += buv[q]
                        # -B(X e_a, e_b): X e_a = sum_p X[p][a] e_p
                        if q == a:
                            val -= B.apply(basis[p], basis[b])[r]
                        if q == b:
                            val -= B.apply(basis[a], basis[p])[r]
                        row[col] = val
                if projective:
                    row[nx] = -buv[r]
                rows.append(row)
    rows.append([F1 if p == q else F0 for p in range(m) for q in range(m)] + ([F0] if projective else []))
    return nunk - la.rank(rows, nunk)


def stabilizer_lie_dim_literal(B: ConeMapB) -> int:
    """The same count with the all-plus form X B(u,v) + B(Xu,v) + B(Xv,u) = 0."""
    m = B.m
    basis = [[F1 if i == j else F0 for j in range(m)] for i in range(m)]
    rows = []
    for a in range(m):
        for b in range(m):
            for r in range(m):
                row = [F0] * (m * m)
                buv = B.apply(basis[a], basis[b])
                for p in range(m):
                    for q in range(m):
                        val = F0
                        if p == r:
                            val += buv[q]
                        if q == a:
                            val += B.apply(basis[p], basis[b])[r]
                        if q == b:
                            val += B.apply(basis[p], basis[a])[r]
                        row[p * m + q] = val
                rows.append(row)
    rows.append([F1 if p == q else F0 for p in range(m) for q in range(m)])
    return m * m - la.rank(rows, m * m)


# -- the map T : Λ^2 S^2 U* -> S^2 U* ⊗ U  (dim U = 3) --------------------------------

SYM2_MONOMIALS = [(a, b) for a in range(3) for b in range(a, 3)]


def _cross(x, y):
    return [x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]]


def _unit3(i):
    return [F1 if k == i else F0 for k in range(3)]


def _quadratic_map(pairs: list) -> Callable:
    """Q(u) = sum over (coef, e, e', f, f') of the polarized expression
    (e,u)(f,u) e'^f' + (e',u)(f,u) e^f' + (e,u)(f',u) e'^f + (e',u)(f',u) e^f."""
    def q(u):
        out = [F0, F0, F0]
        for coef, e, e2, f, f2 in pairs:
            def dot(x):
                return sum((a * b for a, b in zip(x, u)), F0)
            terms = [(dot(e) * dot(f), _cross(e2, f2)), (dot(e2) * dot(f), _cross(e, f2)),
                     (dot(e) * dot(f2), _cross(e2, f)), (dot(e2) * dot(f2), _cross(e, f))]
            for s, vec in terms:
                if s:
                    for k in range(3):
                        out[k] += coef * s * vec[k]
        return out
    return q


def _b_from_quadratic(q: Callable) -> ConeMapB:
    """B(u) v = Q(u + v) - Q(u) - Q(v)."""
    mats = []
    for i in range(3):
        b = la.zeros(3, 3)
        ei = _unit3(i)
        for j in range(3):
            ej = _unit3(j)
            col = [x - y - z for x, y, z in zip(q([p + r for p, r in zip(ei, ej)]), q(ei), q(ej))]
            for r in range(3):
                b[r][j] = col[r]
        mats.append(b)
    return ConeMapB(4, mats)


def quadform_to_monomials(q: dict) -> dict:
    """Normalize a quadratic form given as {(a, b): coef} to a <= b keys."""
    out = {}
    for (a, b), c in q.items():
        key = (min(a, b), max(a, b))
        out[key] = out.get(key, F0) + Fraction(c)
    return {k: v for k, v in out.items() if v}


def tmap(q1: dict, q2: dict) -> ConeMapB:
    """T(q1 ^ q2) for quadratic forms on U = C^3 given as {(a, b): coef},
    meaning sum coef x_a x_b."""
    q1, q2 = quadform_to_monomials(q1), quadform_to_monomials(q2)
    pairs = []
    for (a, b), c1 in q1.items():
        for (c, d), c2 in q2.items():
            pairs.append((c1 * c2, _unit3(a), _unit3(b), _unit3(c), _unit3(d)))
    return _b_from_quadratic(_quadratic_map(pairs))


def b_coordinates(B: ConeMapB) -> list[Fraction]:
    """B(e_a) e_b, a <= b, flattened (18 numbers)."""
    out = []
    for a, b in SYM2_MONOMIALS:
        out.extend(B.apply(_unit3(a), _unit3(b)))
    return out


def tmap_matrix() -> list[list[Fraction]]:
    """Columns T(m_i ^ m_j) for monomials m_i < m_j of S^2 U*, as an 18 x 15 matrix."""
    cols = []
    for i in range(6):
        for j in range(i + 1, 6):
            cols.append(b_coordinates(tmap({SYM2_MONOMIALS[i]: 1}, {SYM2_MONOMIALS[j]: 1})))
    return la.transpose(cols)


def traceless_symmetric_basis() -> list[list[Fraction]]:
    """Basis (18-coordinate rows) of the symmetric, traceless B's (dim 15)."""
    # constraints: sum_k B(e_k) e_b has k-th coordinate ... trace B(e_a) = sum_k B(e_a)e_k [k]
    eqs = []
    idx = {ab: n for n, ab in enumerate(SYM2_MONOMIALS)}
    for a in range(3):
        row = [F0] * 18
        for k in range(3):
            key = (min(a, k), max(a, k))
            row[idx[key] * 3 + k] += 1
        eqs.append(row)
    return la.kernel_basis(eqs, 18)


def cayley_pencil() -> tuple[dict, dict]:
    """The pencil <(x - z) y, (x - y) z>."""
    return ({(0, 1): 1, (1, 2): -1}, {(0, 2): 1, (1, 2): -1})


def expected_pencil_B() -> ConeMapB:
    """[[3u1, -u1, -u1], [-u2, 3u2, -u2], [-u3, -u3, 3u3]] - (u1 + u2 + u3) I."""
    mats = []
    for i in range(3):
        b = la.zeros(3, 3)
        for c in range(3):
            b[i][c] = Fraction(3 if c == i else -1)
        for k in range(3):
            b[k][k] -= 1
        mats.append(b)
    return ConeMapB(4, mats)


def expected_delta_matrix() -> list[list[MPoly]]:
    """The commutator [B(u), B(v)] for the pencil, in delta_ij = u_i v_j - u_j v_i."""
    u = _symbolic_vec(6, 0, 3)
    v = _symbolic_vec(6, 3, 3)

    def d(i, j):
        return u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]

    d12, d13, d23 = d(1, 2), d(1, 3), d(2, 3)
    return [
        [d12 + d13, d12 * -3 + d13, d12 - d13 * 3],
        [d12 * 3 + d23, -d12 + d23, -d12 - d23 * 3],
        [d13 * 3 - d23, d23 * 3 - d13, -d13 - d23],
    ]


def random_symmetric_B(n: int, seed: int = 0, bound: int = 3) -> ConeMapB:
    """A random symmetric traceless B with small integer entries."""
    m = n - 1
    r = lie.rng(seed)
    while True:
        mats = [la.zeros(m, m) for _ in range(m)]
        for a in range(m):
            for b in range(a, m):
                for k in range(m):
                    x = Fraction(r.randint(-bound, bound))
                    mats[a][k][b] = x
                    mats[b][k][a] = x
        # make each B(e_a) traceless by adjusting the (a, a) slot of the diagonal
        for a in range(m):
            tr = lie.trace(mats[a])
            # entry [a][a] of B(e_a) is B(e_a) e_a [a]; it appears only in trace of B(e_a)
            mats[a][a][a] -= tr
        B = ConeMapB(n, mats)
        if check_cone_eqs(B).symmetric and all(lie.trace(x) == 0 for x in mats):
            return B
