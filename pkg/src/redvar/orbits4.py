"""The fourteen PGL_4-orbits of three-dimensional abelian subalgebras of sl_4:
representatives, an invariant-based classifier, degeneration curves and the
secant planes through a Cartan subalgebra."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from . import lie
from . import linalg as la
from .grassmann import CurveSubspace, limit_subspace
from .lie import LieSubspace, Matrix
from .polys import RatFunc
from .tangent import orbit_dimension

N = 4
LABELS = ("O12", "O11", "O10p", "O10pp", "O9", "O8", "O8p", "O8pp",
          "O7", "O7p", "O7pp", "O6", "O3p", "O3pp")


class ClassificationError(ValueError):
    pass


def label_dimension(label: str) -> int:
    return int("".join(ch for ch in label[1:] if ch.isdigit()))


def _e(i: int, j: int) -> Matrix:
    """Matrix unit with 1-based indices."""
    return lie.E(N, i - 1, j - 1)


def _sum(*pairs) -> Matrix:
    return lie.add(*[_e(i, j) for i, j in pairs])


# basis elements before traceless normalization; one list per free parameter
_REPS: dict[str, list[Matrix]] = {
    "O12": [_e(1, 1), _e(2, 2), _e(3, 3), _e(4, 4)],
    "O11": [_sum((1, 1), (2, 2)), _e(1, 2), _e(3, 3), _e(4, 4)],
    "O10p": [_sum((1, 1), (2, 2)), _e(1, 2), _sum((3, 3), (4, 4)), _e(3, 4)],
    "O10pp": [_sum((1, 1), (2, 2), (3, 3)), _sum((1, 2), (2, 3)), _e(1, 3), _e(4, 4)],
    "O9": [_sum((1, 2), (2, 3), (3, 4)), _sum((1, 3), (2, 4)), _e(1, 4)],
    "O8": [_sum((1, 2), (2, 4)), _sum((1, 3), (3, 4)), _e(1, 4)],
    "O8p": [_sum((1, 1), (2, 2), (3, 3)), _e(1, 2), _e(1, 3), _e(4, 4)],
    "O8pp": [_sum((1, 1), (2, 2), (3, 3)), _e(1, 3), _e(2, 3), _e(4, 4)],
    "O7": [_e(1, 3), _sum((1, 4), (2, 3)), _e(2, 4)],
    "O7p": [_sum((1, 2), (2, 4)), _e(1, 3), _e(1, 4)],
    "O7pp": [_sum((1, 3), (3, 4)), _e(2, 4), _e(1, 4)],
    "O6": [_e(1, 3), _e(1, 4), _e(2, 4)],
    "O3p": [_e(1, 2), _e(1, 3), _e(1, 4)],
    "O3pp": [_e(1, 4), _e(2, 4), _e(3, 4)],
}


def representative(label: str) -> LieSubspace:
    if label not in _REPS:
        raise KeyError(f"unknown orbit label {label!r}")
    return LieSubspace.span(N, [lie.project_sl(m) for m in _REPS[label]])


# -- invariants ----------------------------------------------------------------------

@dataclass(frozen=True)
class OrbitSignature:
    regular: bool
    nilpotent: bool
    multiplicities: tuple
    jordan: tuple  # per-eigenvalue block partitions, sorted
    nilradical: tuple  # (dim of sum of images, dim of common kernel)
    det_form_rank: int
    generic_rank: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["multiplicities"] = list(self.multiplicities)
        d["jordan"] = [list(p) for p in self.jordan]
        d["nilradical"] = list(self.nilradical)
        return d


# structured small-integer coefficient vectors for "generic" elements
_GENERIC_COEFFS = ((1, 2, 5), (3, -1, 2), (2, 7, -3), (-4, 3, 11), (5, -2, 9), (7, 13, -5), (1, -6, 4), (11, 4, 17))


def _per_root_partitions(x: Matrix) -> tuple:
    parts = []
    for g, p in lie.jordan_partition(x):
        parts.extend([p] * g.degree)
    return tuple(sorted(parts, reverse=True))


def generic_element(a: LieSubspace) -> Matrix:
    """Among K = 8 fixed samples, the element with the smallest centralizer and
    then the most distinct eigenvalues (first such sample wins)."""
    best, key = None, None
    for c in _GENERIC_COEFFS:
        x = a.element([Fraction(v) for v in c[:a.dim]])
        k = (lie.centralizer_dim(x), -len(lie.eigen_multiplicities(x)))
        if key is None or k < key:
            best, key = x, k
    return best


def _span_dim(vectors: list[list[Fraction]], ncols: int) -> int:
    return la.rank(vectors, ncols) if vectors else 0


def associative_closure(mats: list[Matrix], unital: bool = True) -> list[list[Fraction]]:
    """Basis (flattened) of the associative algebra generated by ``mats``."""
    n = len(mats[0])
    gens = [lie.flatten(m) for m in mats]
    basis = la.row_space(([lie.flatten(la.identity(n))] if unital else []) + gens, n * n)
    while True:
        prods = [lie.flatten(la.matmul(lie.unflatten(b, n), m)) for b in basis for m in mats]
        new = la.row_space(basis + prods, n * n)
        if len(new) == len(basis):
            return basis
        basis = new


def nilradical(a: LieSubspace) -> tuple[LieSubspace, str]:
    """Nilpotent elements of a commutative subspace.

    First the radical of the trace form on a, validated by nilpotency of its
    basis and non-nilpotency of a generic element of a complement; otherwise
    the exact description {x in a : tr(x m) = 0 for all m in the unital
    associative algebra generated by a} is used."""
    n = a.n
    xs = a.matrices()
    gram = [[lie.trace(la.matmul(x, y)) for y in xs] for x in xs]
    coeffs = la.kernel_basis(gram, len(xs))
    rad = [a.element(c) for c in coeffs]
    ok = all(lie.is_zero(lie.mpow(x, n)) for x in rad)
    if ok and len(rad) < len(xs):
        red, _, piv = la.rref(coeffs, len(xs)) if coeffs else ([], 0, [])
        free = [i for i in range(len(xs)) if i not in piv]
        comp = [xs[i] for i in free]
        y = lie.lincomb([Fraction(v) for v in _GENERIC_COEFFS[3][:len(comp)]], comp)
        ok = not lie.is_zero(lie.mpow(y, n))
    if ok:
        return LieSubspace.span(n, rad), "trace-radical"
    alg = [lie.unflatten(b, n) for b in associative_closure(xs)]
    eqs = [[lie.trace(la.matmul(x, m)) for x in xs] for m in alg]
    coeffs = la.kernel_basis(eqs, len(xs))
    return LieSubspace.span(n, [a.element(c) for c in coeffs]), "associative"


def _nil_image_kernel(nil: LieSubspace) -> tuple[int, int]:
    n = nil.n
    mats = nil.matrices()
    if not mats:
        return (0, n)
    images = [col for m in mats for col in la.transpose(m)]
    return (_span_dim(images, n), n - la.rank([row for m in mats for row in m], n))


def _minors2(x: Matrix) -> list:
    n = len(x)
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(k + 1, n):
                    out.append((i, j, k, l))
    return out


def det_form_rank(a: LieSubspace) -> int:
    """Rank of the quadratic map x -> (2x2 minors of x) on a, for square-zero
    algebras whose images span a plane; 0 otherwise."""
    xs = a.matrices()
    n = a.n
    if any(not lie.is_zero(la.matmul(x, x)) for x in xs):
        return 0
    if _nil_image_kernel(a)[0] != 2:
        return 0
    idx = _minors2(xs[0])

    def pol(x, y):
        return [x[i][k] * y[j][l] + y[i][k] * x[j][l] - x[i][l] * y[j][k] - y[i][l] * x[j][k]
                for i, j, k, l in idx]

    k = len(xs)
    rows = [sum((pol(xs[i], xs[j]) for j in range(k)), []) for i in range(k)]
    return la.rank(rows, k * len(idx))


def signature(a: LieSubspace) -> OrbitSignature:
    if a.n != N or a.dim != N - 1:
        raise ClassificationError(f"expected a 3-dimensional subspace of sl_4, got n={a.n}, dim={a.dim}")
    if not a.is_traceless():
        raise ClassificationError("subspace is not traceless")
    if not a.is_abelian():
        raise ClassificationError("subspace is not abelian")
    x = generic_element(a)
    nil, _ = nilradical(a)
    return OrbitSignature(
        regular=lie.is_regular(x),
        nilpotent=lie.is_nilpotent(x),
        multiplicities=lie.eigen_multiplicities(x),
        jordan=_per_root_partitions(x),
        nilradical=_nil_image_kernel(nil),
        det_form_rank=det_form_rank(a),
        generic_rank=la.rank(x),
    )


# frozen from the representatives (see tests/test_orbits4.py for the oracle run)
SIGNATURE_TABLE: dict[OrbitSignature, str] = {}


def _freeze_table() -> dict[OrbitSignature, str]:
    table = {}
    for label in LABELS:
        sig = signature(representative(label))
        if sig in table:
            raise ClassificationError(f"{label} and {table[sig]} share a signature")
        table[sig] = label
    return table


def _table() -> dict[OrbitSignature, str]:
    if not SIGNATURE_TABLE:
        SIGNATURE_TABLE.update(_freeze_table())
    return SIGNATURE_TABLE


def classify_orbit(a: LieSubspace) -> str:
    sig = signature(a)
    label = _table().get(sig)
    if label is None:
        raise ClassificationError(f"no orbit matches signature {sig.to_json()}")
    return label


# -- degenerations -----------------------------------------------------------------

W0 = [[Fraction(int(i + j == N - 1)) for j in range(N)] for i in range(N)]


def antitranspose(x: Matrix) -> Matrix:
    """x -> w x^T w with w the antidiagonal permutation."""
    return la.matmul(la.matmul(W0, lie.transpose(x)), W0)


def _rat(c) -> RatFunc:
    return c if isinstance(c, RatFunc) else RatFunc(c)


def _rat_matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n) if a[i][k] and b[k][j]), RatFunc(0))
             for j in range(n)] for i in range(n)]


def _rat_inverse(g):
    n = len(g)
    aug = [[_rat(x) for x in row] + [RatFunc(int(i == j)) for j in range(n)] for i, row in enumerate(g)]
    red, piv = la.rref_generic(aug, 2 * n, RatFunc(0), RatFunc(1))
    if piv != list(range(n)):
        raise ValueError("basis change is singular")
    return [row[n:] for row in red]


def change_of_basis_curve(a: LieSubspace, columns: list[list]) -> CurveSubspace:
    """The family g(t)^{-1} a g(t), where column j of g is the new j-th basis vector."""
    g = [[_rat(columns[j][i]) for j in range(N)] for i in range(N)]
    gi = _rat_inverse(g)
    mats = [_rat_matmul(_rat_matmul(gi, [[_rat(v) for v in r] for r in x]), g) for x in a.matrices()]
    return CurveSubspace.from_matrices(N, mats)


def centralizer_curve(x_of_t: list[list]) -> CurveSubspace:
    """span{p x, p x^2, p x^3} for a curve x(t) of regular matrices."""
    x = [[_rat(v) for v in r] for r in x_of_t]
    powers = [x]
    for _ in range(N - 2):
        powers.append(_rat_matmul(powers[-1], x))
    out = []
    for m in powers:
        tr = sum((m[i][i] for i in range(N)), RatFunc(0)) / RatFunc(N)
        out.append([[m[i][j] - (tr if i == j else RatFunc(0)) for j in range(N)] for i in range(N)])
    return CurveSubspace.from_matrices(N, out)


def antitranspose_curve(c: CurveSubspace) -> CurveSubspace:
    rows = []
    for r in c.rows:
        m = [r[i * N:(i + 1) * N] for i in range(N)]
        rows.append([m[N - 1 - j][N - 1 - i] for i in range(N) for j in range(N)])
    return CurveSubspace(N, rows)


def _t():
    return RatFunc.t()


def _diag_basis(*scales) -> list[list]:
    return [[scales[j] if i == j else 0 for i in range(N)] for j in range(N)]


def _jordan_x(entries: dict) -> list[list]:
    m = [[RatFunc(0)] * N for _ in range(N)]
    for (i, j), v in entries.items():
        m[i - 1][j - 1] = _rat(v)
    return m


def _curve_o12_o11():
    t = _t()
    return centralizer_curve(_jordan_x({(1, 2): 1, (1, 1): 1, (2, 2): 1 + t, (3, 3): 2, (4, 4): -4}))


def _curve_o11_o10p():
    t = _t()
    return centralizer_curve(_jordan_x({(1, 2): 1, (3, 3): 1, (3, 4): 1, (4, 4): 1 + t}))


def _curve_o11_o10pp():
    t = _t()
    return centralizer_curve(_jordan_x({(1, 2): 1, (2, 3): 1, (3, 3): t, (4, 4): 1}))


def _curve_o10p_o9():
    t = _t()
    return centralizer_curve(_jordan_x({(1, 2): 1, (2, 3): 1, (3, 4): 1, (3, 3): t, (4, 4): t}))


def _curve_o10pp_o9():
    t = _t()
    return centralizer_curve(_jordan_x({(1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 4): t}))


def _curve_o9_o8():
    t = _t()
    return change_of_basis_curve(representative("O9"), _diag_basis(t, 1, t, 1))


def _curve_o10pp_o8p():
    t = _t()
    return change_of_basis_curve(representative("O10pp"), _diag_basis(1, 1 / t, 1, 1))


def _curve_o8p_o7():
    t = _t()
    cols = [[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 1 / t]]
    return change_of_basis_curve(representative("O8p"), cols)


def _curve_o8_o7p():
    t = _t()
    return change_of_basis_curve(representative("O8"), _diag_basis(1, 1, 1 / t, 1))


def _curve_o7_o6():
    t = _t()
    return change_of_basis_curve(representative("O7"), _diag_basis(1, 1, 1 / t, 1))


def _curve_o7p_o6():
    t = _t()
    return change_of_basis_curve(representative("O7p"), _diag_basis(1, t, 1, 1))


def _curve_o7p_o3p():
    t = _t()
    return change_of_basis_curve(representative("O7p"), _diag_basis(1, 1 / t, 1, 1))


def _mirror(f: Callable[[], CurveSubspace]) -> Callable[[], CurveSubspace]:
    return lambda: antitranspose_curve(f())


# (source, target, curve builder, how the curve was obtained)
ARROWS: list[tuple[str, str, Callable[[], CurveSubspace], str]] = [
    ("O12", "O11", _curve_o12_o11, "centralizers of diag-perturbed Jordan matrix"),
    ("O11", "O10p", _curve_o11_o10p, "centralizers, eigenvalue collision in a second block"),
    ("O11", "O10pp", _curve_o11_o10pp, "centralizers, eigenvalue joining the 2-block"),
    ("O10p", "O9", _curve_o10p_o9, "centralizers, two 2-blocks merging"),
    ("O10pp", "O9", _curve_o10pp_o9, "centralizers, 3-block absorbing a 1-block"),
    ("O10pp", "O8p", _curve_o10pp_o8p, "e2 -> e2/t"),
    ("O10pp", "O8pp", _mirror(_curve_o10pp_o8p), "antitranspose of O10pp -> O8p"),
    ("O9", "O8", _curve_o9_o8, "e1 -> t e1, e3 -> t e3"),
    ("O8p", "O7", _curve_o8p_o7, "e1->e4, e2->e3, e3->e2, e4->e1+e4/t"),
    ("O8pp", "O7", _mirror(_curve_o8p_o7), "antitranspose of O8p -> O7"),
    ("O8", "O7p", _curve_o8_o7p, "e3 -> e3/t"),
    ("O8", "O7pp", _mirror(_curve_o8_o7p), "antitranspose of O8 -> O7p"),
    ("O7", "O6", _curve_o7_o6, "e3 -> e3/t"),
    ("O7p", "O6", _curve_o7p_o6, "e2 -> t e2"),
    ("O7pp", "O6", _mirror(_curve_o7p_o6), "antitranspose of O7p -> O6"),
    ("O7p", "O3p", _curve_o7p_o3p, "e2 -> e2/t"),
    ("O7pp", "O3pp", _mirror(_curve_o7p_o3p), "antitranspose of O7p -> O3p"),
]


def _curve_o9_o7():
    """Straight line from the O7 representative along a commuting tangent
    direction: span{E13 + t(E21 + E34), E14 + E23, E24}."""
    t = _t()
    x1 = _jordan_x({(1, 3): 1, (2, 1): t, (3, 4): t})
    x2 = _jordan_x({(1, 4): 1, (2, 3): 1})
    x3 = _jordan_x({(2, 4): 1})
    return CurveSubspace.from_matrices(N, [x1, x2, x3])


SUPPLEMENTARY_ARROWS = [("O9", "O7", _curve_o9_o7, "linear curve from O7 along a commuting tangent vector")]


@dataclass
class ArrowResult:
    source: str
    target: str
    source_found: str
    limit_found: str
    method: str
    obstruction: str | None = None

    @property
    def ok(self) -> bool:
        return self.source_found == self.source and self.limit_found == self.target


def verify_degenerations(arrows=None) -> list[ArrowResult]:
    out = []
    for src, dst, build, how in (ARROWS if arrows is None else arrows):
        curve = build()
        gen = curve.at(curve.generic_value())
        lim = limit_subspace(curve)
        res = ArrowResult(src, dst, classify_orbit(gen), classify_orbit(lim), how)
        if not res.ok:
            res.obstruction = rank_one_obstruction(src, dst)
        out.append(res)
    return out


# -- an obstruction to degeneration -------------------------------------------------

def _symbolic_element(a: LieSubspace):
    from .polys import MPoly
    k = a.dim
    vs = [MPoly.var(k, i) for i in range(k)]
    mats = a.matrices()
    zero = MPoly.const(k, 0)
    return [[sum((vs[c] * mats[c][i][j] for c in range(k) if mats[c][i][j]), zero)
             for j in range(a.n)] for i in range(a.n)]


def describe_matrix(m: Matrix) -> str:
    """Sparse text form such as 'E12 - 2 E34' (1-based indices)."""
    parts = []
    for i, row in enumerate(m):
        for j, v in enumerate(row):
            if v:
                coef = "" if v == 1 else "-" if v == -1 else f"{v} "
                parts.append(f"{coef}E{i + 1}{j + 1}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def rank_one_planes(a: LieSubspace) -> list[LieSubspace]:
    """2-planes of a made of matrices of rank <= 1 among those spanned by two
    basis vectors of the nilradical (enough for the orbits that have one)."""
    nil, _ = nilradical(a)
    ms = nil.matrices()
    out = []
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            plane = LieSubspace.span(a.n, [ms[i], ms[j]])
            x = _symbolic_element(plane)
            if all((x[p][r] * x[q][s] - x[p][s] * x[q][r]).is_zero()
                   for p in range(a.n) for q in range(p + 1, a.n)
                   for r in range(a.n) for s in range(r + 1, a.n)):
                out.append(plane)
    return out


def nondegenerate_minor_conic(a: LieSubspace) -> bool:
    """Whether some 2x2 minor, as a ternary quadratic form on a, has rank 3.
    Its zero set is then a smooth conic containing no line, so the rank <= 1
    locus of a contains no 2-plane."""
    xs = a.matrices()
    n = a.n
    for (i, j, k, l) in _minors2(xs[0]):
        g = [[(x[i][k] * y[j][l] + y[i][k] * x[j][l] - x[i][l] * y[j][k] - y[i][l] * x[j][k])
              for y in xs] for x in xs]
        if la.rank(g) == 3:
            return True
    return False


def rank_one_obstruction(source: str, target: str) -> str | None:
    """A closed condition separating the orbits: containing a 2-plane of
    matrices of rank <= 1 is preserved under limits."""
    src, dst = representative(source), representative(target)
    planes = rank_one_planes(src)
    if planes and nondegenerate_minor_conic(dst):
        basis = ", ".join(describe_matrix(m) for m in planes[0].matrices())
        return (f"{source} contains the rank<=1 plane <{basis}>; the rank<=1 locus of {target} "
                f"is a smooth conic, so {target} is not in the closure of {source}")
    return None


def o_min_curve(n: int = N) -> CurveSubspace:
    """Diagonal algebra in the basis e_1, e_1 + t e_2, ..., e_1 + t e_n."""
    t = _t()
    cols = [[RatFunc(1)] + [RatFunc(0)] * (n - 1)]
    for k in range(1, n):
        cols.append([RatFunc(1)] + [t if i == k else RatFunc(0) for i in range(1, n)])
    g = [[cols[j][i] for j in range(n)] for i in range(n)]
    gi = _rat_inverse(g)
    mats = []
    for k in range(n - 1):
        d = [[RatFunc(0)] * n for _ in range(n)]
        d[k][k], d[k + 1][k + 1] = RatFunc(1), RatFunc(-1)
        mats.append(_rat_matmul(_rat_matmul(g, d), gi))
    return CurveSubspace.from_matrices(n, mats)


# -- secant planes -------------------------------------------------------------------

@dataclass
class SecantPlane:
    pair: tuple[int, int]
    hyperplane: LieSubspace
    centralizer_dim: int
    samples_abelian: bool
    tangent: list  # two tangent vectors (flattened homs) at the base point


def secant_planes(a: LieSubspace | None = None, n_samples: int = 10, seed: int = 12) -> tuple[list[SecantPlane], bool]:
    """For each pair i < j, the projective plane of 3-spaces between the
    hyperplane P_ij = {x_i = x_j} of the Cartan and its centralizer.

    ``a`` may be any conjugate of the diagonal Cartan given with a regular
    semisimple element; only the diagonal case is handled directly, other
    inputs are conjugated back by diagonalizing a generic element over Q.
    Returns the planes and whether their tangent spaces at a are pairwise transverse.
    """
    n = N
    if a is None:
        a = representative("O12")
    x = generic_element(a)
    if lie.centralizer_dim(x) != n or len(lie.eigen_multiplicities(x)) != n:
        raise ValueError("subspace is not a Cartan subalgebra with rational spectrum")
    g = _eigenbasis(x)
    gi = lie.inverse(g)
    diag_a = a.conjugate(gi, g)  # g^{-1} a g is diagonal
    r = lie.rng(seed)
    planes = []
    tangents = []
    for i in range(n):
        for j in range(i + 1, n):
            hyper = [m for m in diag_a.matrices()]
            eqs = [[m[i][i] - m[j][j] for m in hyper]]
            hcoef = la.kernel_basis(eqs, len(hyper))
            p_ij = LieSubspace.span(n, [diag_a.element(c) for c in hcoef])
            cent = _common_centralizer(p_ij)
            h = [[Fraction(int(k == i) - int(k == j)) if k == l else Fraction(0) for l in range(n)] for k in range(n)]
            eij, eji = lie.E(n, i, j), lie.E(n, j, i)
            ok = True
            for _ in range(n_samples):
                c = [Fraction(r.randint(-5, 5)) for _ in range(3)]
                if not any(c):
                    c[0] = Fraction(1)
                v = lie.lincomb(c, [h, eij, eji])
                pt = LieSubspace.span(n, p_ij.matrices() + [v])
                ok = ok and pt.dim == 3 and pt.is_abelian() and all(cent.contains(m) for m in pt.matrices())
            # tangent directions at the Cartan: P_ij -> 0, h -> E_ij or E_ji
            tvec = [_hom_vector(diag_a, p_ij, h, y) for y in (eij, eji)]
            planes.append(SecantPlane((i + 1, j + 1), p_ij.conjugate(g, gi), cent.dim, ok, tvec))
            tangents.append(tvec)
    transverse = all(la.rank(tangents[p] + tangents[q]) == 4
                     for p in range(len(tangents)) for q in range(p + 1, len(tangents)))
    return planes, transverse


def _eigenbasis(x: Matrix) -> Matrix:
    from .polys import rational_roots
    n = len(x)
    roots = rational_roots(lie.charpoly(x))
    if len(roots) != n:
        raise ValueError("spectrum is not rational and simple")
    cols = []
    for lam in sorted(roots):
        m = [[x[i][k] - (lam if i == k else 0) for k in range(n)] for i in range(n)]
        cols.append(la.kernel_basis(m, n)[0])
    return la.transpose(cols)


def _common_centralizer(s: LieSubspace) -> LieSubspace:
    n = s.n
    rows = []
    for m in s.matrices():
        rows.extend(lie._commutator_system(m))
    basis = la.kernel_basis(rows, n * n)
    return LieSubspace(n, [lie.flatten(lie.project_sl(lie.unflatten(b, n))) for b in basis], allow_dependent=True)


def _hom_vector(a: LieSubspace, p: LieSubspace, h: Matrix, image: Matrix) -> list[Fraction]:
    """Flattened hom on the basis (P basis, h) sending P to 0 and h to image."""
    return [Fraction(0)] * (N * N * p.dim) + lie.flatten(image)


def plane_intersections_trivial(planes: list[SecantPlane]) -> bool:
    """Two planes can only share the base point: P_ij + P_kl is the whole Cartan."""
    for p in range(len(planes)):
        for q in range(p + 1, len(planes)):
            s = LieSubspace.span(N, planes[p].hyperplane.matrices() + planes[q].hyperplane.matrices())
            if s.dim != N - 1:
                return False
    return True


def associative_span_dim(a: LieSubspace) -> int:
    return len(associative_closure(a.matrices()))
