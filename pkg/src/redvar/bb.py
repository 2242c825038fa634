"""Torus fixed points of Red(4) and of its blow-up along the two minimal
orbits, tangent weights, and the Bialynicki-Birula count of Betti numbers."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import lie
from . import linalg as la
from . import orbits4
from .lie import LieSubspace
from .tangent import _linearized_system, complement

N = 4
ROOTS = [(i, j) for i in range(N) for j in range(N) if i != j]  # 0-based (i, j) <-> E_ij
ORBIT_TABLE = ("O12", "O11", "O10p", "O10pp", "O9", "O8", "O8p", "O8pp",
               "O7", "O7p", "O7pp", "O6", "O3p", "O3pp")
EXPECTED_COUNTS = (1, 12, 12, 0, 0, 0, 12, 12, 0, 0, 0, 24, 4, 4)
EXPECTED_BETTI = (1, 3, 9, 15, 23, 29, 33, 29, 23, 15, 9, 3, 1)
TARGET_CHOW = (1, 1, 3, 5, 7, 11, 14, 13, 11, 7, 5, 1, 1)


class FixedPointError(RuntimeError):
    pass


# -- weights ---------------------------------------------------------------------

Weight = tuple  # 4 integers, normalized so that the last entry is 0


def weight(vec) -> Weight:
    last = vec[-1]
    return tuple(int(v - last) for v in vec)


def root_weight(i: int, j: int) -> Weight:
    v = [0] * N
    v[i] += 1
    v[j] -= 1
    return weight(v)


def wadd(*ws) -> Weight:
    return weight([sum(c) for c in zip(*ws)])


def wneg(w) -> Weight:
    return weight([-c for c in w])


def wsub(a, b) -> Weight:
    return wadd(a, wneg(b))


ZERO = (0,) * N


def pairing(lam, w) -> int:
    """<lambda, w> for lambda with entries summing to zero (well defined on weights)."""
    return sum(a * b for a, b in zip(lam, w))


# -- base fixed points -------------------------------------------------------------

@dataclass
class FixedPoint:
    roots: tuple
    diagonal: list = field(repr=False)  # basis matrices of the diagonal part
    orbit: str = ""
    exceptional: tuple | None = None  # the 2-plane of S^2 U* (two monomials) over a minimal point
    base: "FixedPoint | None" = field(default=None, repr=False)

    def subspace(self) -> LieSubspace:
        return LieSubspace.from_matrices(N, [lie.E(N, i, j) for i, j in self.roots] + self.diagonal)

    def label(self) -> str:
        r = ",".join(f"E{i + 1}{j + 1}" for i, j in self.roots) or "cartan"
        if self.exceptional is not None:
            r += " | " + "^".join(_mono_name(m) for m in self.exceptional)
        return r


def _diag_kernel(roots) -> list:
    """Traceless diagonal matrices killed by every root in ``roots``."""
    rows = [[Fraction(1)] * N]
    for i, j in roots:
        r = [Fraction(0)] * N
        r[i], r[j] = Fraction(1), Fraction(-1)
        rows.append(r)
    return [lie.diag(*v) for v in la.kernel_basis(rows, N)]


def _compatible(a, b) -> bool:
    (i, j), (k, l) = a, b
    if (i, j) == (l, k):
        return False  # sum zero
    return not (j == k or l == i)  # sum is a root


def enumerate_fixed_points() -> list[FixedPoint]:
    """Root subsets S with pairwise sums neither roots nor zero, and diagonal
    part the common kernel, of dimension exactly 3 - |S|."""
    pts = []
    for size in range(N):
        for S in combinations(ROOTS, size):
            if not all(_compatible(a, b) for a, b in combinations(S, 2)):
                continue
            diag = _diag_kernel(S)
            if len(diag) != N - 1 - size:
                continue
            p = FixedPoint(S, diag)
            a = p.subspace()
            if not a.is_abelian():
                raise FixedPointError(f"candidate {p.label()} is not abelian")
            p.orbit = orbits4.classify_orbit(a)
            pts.append(p)
    return pts


def brute_force_fixed_points() -> set:
    """Oracle: every torus-invariant 3-dim abelian subspace is a sum of root
    lines and a subspace of the Cartan; scan all root subsets and all diagonal
    parts forced to be isolated (the full common kernel)."""
    found = set()
    for size in range(N):
        for S in combinations(ROOTS, size):
            diag = _diag_kernel(S)
            if len(diag) + size != N - 1:
                continue
            mats = [lie.E(N, i, j) for i, j in S] + diag
            a = LieSubspace.span(N, mats)
            if a.dim == N - 1 and a.is_abelian():
                found.add(a)
    return found


def fixed_point_table(points=None) -> dict[str, int]:
    points = enumerate_fixed_points() if points is None else points
    c = Counter(p.orbit for p in points)
    return {lab: c.get(lab, 0) for lab in ORBIT_TABLE}


# -- tangent weights at smooth fixed points ------------------------------------------

def _sl_basis_weights() -> list[Weight]:
    out = [root_weight(i, j) for i in range(N) for j in range(N) if i != j]
    return out + [ZERO] * (N - 1)


def _matrix_weight(m) -> Weight:
    """Weight of a matrix that is a weight vector (diagonal or a single E_ij)."""
    nz = [(i, j) for i in range(N) for j in range(N) if m[i][j]]
    off = [(i, j) for i, j in nz if i != j]
    if not off:
        return ZERO
    if len(off) == 1 and len(nz) == 1:
        return root_weight(*off[0])
    raise FixedPointError("basis element is not a weight vector")


def tangent_weight_spaces(a: LieSubspace) -> Counter:
    """Multiplicities of the torus weights on the Zariski tangent space at a
    torus-fixed point (basis of a made of weight vectors)."""
    comp = complement(a, "pivot")
    xs = a.matrices()
    rows = _linearized_system(a, comp)
    c = len(comp)
    wx = [_matrix_weight(x) for x in xs]
    wc = [_matrix_weight(m) for m in comp]
    cols_by_w: dict = {}
    for i in range(len(xs)):
        for m in range(c):
            cols_by_w.setdefault(wsub(wc[m], wx[i]), []).append(i * c + m)
    out = Counter()
    for w, cols in cols_by_w.items():
        sub = [[r[k] for k in cols] for r in rows]
        sub = [r for r in sub if any(r)]
        d = len(cols) - (la.rank(sub, len(cols)) if sub else 0)
        if d:
            out[w] = d
    return out


def tangent_weights(p: FixedPoint) -> list[Weight]:
    if p.orbit in ("O3p", "O3pp"):
        raise FixedPointError("minimal points are singular; use blowup_fixed_points")
    ws = tangent_weight_spaces(p.subspace())
    total = sum(ws.values())
    if total != 12:
        raise FixedPointError(f"tangent dimension {total} at {p.label()}")
    if ws.get(ZERO):
        raise FixedPointError(f"zero weight at {p.label()}: fixed point not isolated")
    return sorted(w for w, k in ws.items() for _ in range(k))


def orbit_tangent_weights(a: LieSubspace) -> Counter:
    """Weights of the image of ad: sl_n -> Hom(a, sl_n/a) at a fixed point."""
    comp = complement(a, "pivot")
    xs = a.matrices()
    c = len(comp)
    comb = [lie.flatten(m) for m in xs] + [lie.flatten(m) for m in comp]
    wx = [_matrix_weight(x) for x in xs]
    wc = [_matrix_weight(m) for m in comp]
    by_w: dict = {}
    for b, wb in zip(lie.sl_basis(N), _sl_basis_weights()):
        vec = []
        for x in xs:
            coeffs = la.solve_in_span(comb, lie.flatten(lie.bracket(b, x)))
            vec.extend(coeffs[len(xs):])
        by_w.setdefault(wb, []).append(vec)
    out = Counter()
    for w, vecs in by_w.items():
        r = la.rank(vecs, len(xs) * c)
        if r:
            out[w] = r
    return out


# -- the blow-up over the minimal orbits ----------------------------------------------

def _mono_name(m) -> str:
    a, b = m
    return f"x{a + 1}x{b + 1}"


@dataclass
class MinimalPointData:
    """Weight bookkeeping at a point of O3pp (line l = e_k, hyperplane U) or,
    by the duality x -> -x^T, of O3p."""
    point: FixedPoint
    k: int
    dual: bool
    orbit_weights: list
    sym_weights: dict  # monomial (a, b) of S^2 U* -> weight
    twist: Weight  # character with normal weights = twist + w(m) + w(m')


def _minimal_data(p: FixedPoint) -> MinimalPointData:
    a = p.subspace()
    dual = p.orbit == "O3p"
    if dual:
        # O3p: image in the line e_k; the dual point of O3pp has kernel ⊇ U = <e_i : i != k>
        k = p.roots[0][0]
    else:
        k = p.roots[0][1]
    others = [i for i in range(N) if i != k]
    sign = -1 if dual else 1

    def eps(i):
        v = [0] * N
        v[i] = sign
        return weight(v)

    sym = {}
    monos = [(x, y) for ix, x in enumerate(others) for y in others[ix:]]
    for (x, y) in monos:
        sym[(x, y)] = wneg(wadd(eps(x), eps(y)))
    total = tangent_weight_spaces(a)
    orbit = orbit_tangent_weights(a)
    if sum(total.values()) != 18 or sum(orbit.values()) != 3:
        raise FixedPointError(f"unexpected tangent data at minimal point {p.label()}")
    normal = total - orbit
    pair_ws = [wadd(sym[m1], sym[m2]) for m1, m2 in combinations(monos, 2)]
    # the twist is fixed by comparing weight sums (the module is 15-dimensional)
    sum_normal = [sum(w[c] * k_ for w, k_ in normal.items()) for c in range(N)]
    sum_pairs = [sum(w[c] for w in pair_ws) for c in range(N)]
    diff = [x - y for x, y in zip(sum_normal, sum_pairs)]
    if any(d % 15 for d in diff):
        raise FixedPointError("normal module is not a twist of the second exterior power")
    twist = weight([d // 15 for d in diff])
    if Counter(wadd(twist, w) for w in pair_ws) != normal:
        raise FixedPointError("normal weights do not match the Plücker module of G(2, S^2 U*)")
    if len(set(sym.values())) != 6:
        raise FixedPointError("weights of S^2 U* collide; exceptional fixed points not isolated")
    return MinimalPointData(p, k, dual, sorted(orbit.elements()), sym, twist)


def blowup_fixed_points(p: FixedPoint) -> list[tuple[FixedPoint, list[Weight]]]:
    """The 15 fixed points over a minimal fixed point, with their 12 weights:
    orbit directions, tangent to G(2, S^2 U*) at V, and the line of V."""
    data = _minimal_data(p)
    monos = sorted(data.sym_weights)
    out = []
    for V in combinations(monos, 2):
        rest = [m for m in monos if m not in V]
        grass = [wsub(data.sym_weights[b], data.sym_weights[a]) for a in V for b in rest]
        line = wadd(data.twist, data.sym_weights[V[0]], data.sym_weights[V[1]])
        ws = sorted(data.orbit_weights + grass + [line])
        if ZERO in ws:
            raise FixedPointError(f"zero weight over {p.label()}")
        q = FixedPoint(p.roots, p.diagonal, p.orbit, V, p)
        out.append((q, ws))
    return out


@lru_cache(maxsize=None)
def all_fixed_points() -> tuple:
    """(fixed point, weights) for the 193 fixed points of the resolution."""
    out = []
    for p in enumerate_fixed_points():
        if p.orbit in ("O3p", "O3pp"):
            out.extend(blowup_fixed_points(p))
        else:
            out.append((p, tangent_weights(p)))
    return tuple(out)


def euler_characteristic() -> int:
    return len(all_fixed_points())


# -- Bialynicki-Birula ---------------------------------------------------------------

def candidate_subgroups():
    """lambda = (N^3, N^2, N, -N^3 - N^2 - N) for N = 2, 3, ... then variants."""
    for n in range(2, 50):
        yield (n ** 3, n ** 2, n, -(n ** 3 + n ** 2 + n))


def is_generic(lam, weights_list) -> bool:
    return all(pairing(lam, w) != 0 for ws in weights_list for w in ws)


def find_subgroups(count: int = 1) -> list[tuple]:
    wl = [ws for _, ws in all_fixed_points()]
    found = []
    for lam in candidate_subgroups():
        if is_generic(lam, wl):
            found.append(lam)
            if len(found) == count:
                return found
    raise FixedPointError("no generic one-parameter subgroup in the search range")


def betti_numbers(lam=None) -> list[int]:
    """b_{2k} = number of fixed points with exactly k negative weights."""
    pts = all_fixed_points()
    if lam is None:
        lam = find_subgroups(1)[0]
    if not is_generic(lam, [ws for _, ws in pts]):
        raise FixedPointError(f"one-parameter subgroup {lam} is not generic")
    b = [0] * 13
    for _, ws in pts:
        b[sum(1 for w in ws if pairing(lam, w) < 0)] += 1
    return b


# -- Chow groups ---------------------------------------------------------------------

def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _gauss_binomial(n: int, k: int) -> list[int]:
    """Betti numbers of G(k, n) (coefficients of the q-binomial)."""
    counts = Counter(sum(s) - k * (k - 1) // 2 for s in combinations(range(n), k))
    return [counts.get(d, 0) for d in range(k * (n - k) + 1)]


@dataclass
class ChowReport:
    target: tuple
    reconstruction: list
    betti: list
    method: str
    discrepancy: bool

    def to_json(self) -> dict:
        return {"target": list(self.target), "reconstruction": self.reconstruction, "betti": self.betti,
                "method": self.method, "discrepancy": self.discrepancy}


def chow_report(betti=None) -> ChowReport:
    """Replace the two exceptional G(2,6)-bundles over P^3 by the P^3's:
    rank CH_k = b_{2k} - 2 e_k + 2 p_k with e, p the Betti numbers of the
    bundle and of P^3, indexed by dimension."""
    betti = list(betti_numbers() if betti is None else betti)
    bundle = _poly_mul(_gauss_binomial(6, 2), [1, 1, 1, 1])
    p3 = [1, 1, 1, 1]
    rec = []
    for k in range(13):
        e = bundle[k] if k < len(bundle) else 0
        p = p3[k] if k < len(p3) else 0
        rec.append(betti[k] - 2 * e + 2 * p)
    method = "b(R~) - 2 b(G(2,6)-bundle over P^3) + 2 b(P^3), by dimension"
    return ChowReport(TARGET_CHOW, rec, betti, method, tuple(rec) != TARGET_CHOW)


def render_table(points=None) -> str:
    table = fixed_point_table(points)
    head = " ".join(f"{lab:>5}" for lab in ORBIT_TABLE)
    vals = " ".join(f"{table[lab]:>5}" for lab in ORBIT_TABLE)
    return f"{'orbit':>6} {head}\n{'#T':>6} {vals}"
