"""gl_n / sl_n: brackets, projection from the identity, centralizers,
regularity and Jordan data without root extraction, and subspaces of the
flattened matrix space with canonical bases."""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg as la
from .polys import Poly, gcd_tower, multiplicity_partition, poly_gcd, squarefree_factors

Matrix = list  # n x n list of Fraction rows
F0 = Fraction(0)
F1 = Fraction(1)


# -- basic matrix helpers ------------------------------------------------------

def E(n: int, i: int, j: int, c=1) -> Matrix:
    """Elementary matrix with c at (i, j); indices are 0-based."""
    m = la.zeros(n, n)
    m[i][j] = Fraction(c)
    return m


def diag(*entries) -> Matrix:
    n = len(entries)
    m = la.zeros(n, n)
    for i, x in enumerate(entries):
        m[i][i] = Fraction(x)
    return m


def mat(rows: Sequence[Sequence]) -> Matrix:
    return la.frac_matrix(rows)


def add(*ms: Matrix) -> Matrix:
    n = len(ms[0])
    return [[sum((m[i][j] for m in ms), F0) for j in range(n)] for i in range(n)]


def scale(c, m: Matrix) -> Matrix:
    c = Fraction(c)
    return [[c * x for x in row] for row in m]


def sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def lincomb(coeffs: Iterable, ms: Sequence[Matrix]) -> Matrix:
    n = len(ms[0])
    out = la.zeros(n, n)
    for c, m in zip(coeffs, ms):
        if c:
            c = Fraction(c)
            for i in range(n):
                row, orow = out[i], m[i]
                for j in range(n):
                    if orow[j]:
                        row[j] += c * orow[j]
    return out


def trace(m: Matrix) -> Fraction:
    return sum((m[i][i] for i in range(len(m))), F0)


def is_zero(m: Matrix) -> bool:
    return not any(x for row in m for x in row)


def bracket(x: Matrix, y: Matrix) -> Matrix:
    return sub(la.matmul(x, y), la.matmul(y, x))


def project_sl(x: Matrix) -> Matrix:
    """p(x) = x - (tr x / n) I."""
    n = len(x)
    t = trace(x) / n
    out = [list(r) for r in x]
    for i in range(n):
        out[i][i] -= t
    return out


def flatten(m: Matrix) -> list[Fraction]:
    return [x for row in m for x in row]


def unflatten(v: Sequence, n: int) -> Matrix:
    return [list(v[i * n:(i + 1) * n]) for i in range(n)]


def mpow(m: Matrix, k: int) -> Matrix:
    out = la.identity(len(m))
    for _ in range(k):
        out = la.matmul(out, m)
    return out


def inverse(g: Matrix) -> Matrix:
    n = len(g)
    aug = [list(g[i]) + la.identity(n)[i] for i in range(n)]
    red, rk, piv = la.rref(aug, 2 * n)
    if rk < n or piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def conjugate(g: Matrix, x: Matrix, g_inv: Matrix | None = None) -> Matrix:
    """g x g^{-1}."""
    if g_inv is None:
        g_inv = inverse(g)
    return la.matmul(la.matmul(g, x), g_inv)


def transpose(m: Matrix) -> Matrix:
    return la.transpose(m)


# -- the standard sl_n basis ---------------------------------------------------

@lru_cache(maxsize=None)
def sl_basis_labels(n: int) -> tuple:
    """("E", i, j) for i != j in row-major order, then ("H", k) for
    H_k = E_kk - E_{k+1,k+1}, k = 0..n-2."""
    labels = [("E", i, j) for i in range(n) for j in range(n) if i != j]
    labels += [("H", k) for k in range(n - 1)]
    return tuple(labels)


def sl_basis(n: int) -> list[Matrix]:
    out = []
    for lab in sl_basis_labels(n):
        if lab[0] == "E":
            out.append(E(n, lab[1], lab[2]))
        else:
            k = lab[1]
            m = E(n, k, k)
            m[k + 1][k + 1] = Fraction(-1)
            out.append(m)
    return out


def sl_coords(x: Matrix) -> list[Fraction]:
    """Coordinates of a traceless matrix in ``sl_basis``."""
    n = len(x)
    if trace(x) != 0:
        raise ValueError("matrix is not traceless")
    coords = [x[i][j] for i in range(n) for j in range(n) if i != j]
    acc = F0
    for k in range(n - 1):
        acc += x[k][k]
        coords.append(acc)
    return coords


def from_sl_coords(c: Sequence, n: int) -> Matrix:
    return lincomb(c, sl_basis(n))


# -- subspaces ------------------------------------------------------------------

class LieSubspace:
    """Subspace of gl_n given by flattened basis rows; ``canonical`` is the
    reduced row echelon basis, which decides equality."""

    __slots__ = ("n", "basis", "canonical")

    def __init__(self, n: int, rows: Sequence[Sequence], *, allow_dependent: bool = False):
        self.n = n
        rows = [[Fraction(x) for x in r] for r in rows]
        if any(len(r) != n * n for r in rows):
            raise ValueError(f"basis rows must have length {n * n}")
        red, rk, _ = la.rref(rows, n * n) if rows else ([], 0, [])
        if rk < len(rows) and not allow_dependent:
            raise ValueError("basis is linearly dependent")
        self.canonical = tuple(tuple(r) for r in red)
        self.basis = rows if rk == len(rows) else [list(r) for r in red]

    @classmethod
    def from_matrices(cls, n: int, mats: Sequence[Matrix]) -> "LieSubspace":
        return cls(n, [flatten(m) for m in mats])

    @classmethod
    def span(cls, n: int, mats: Sequence[Matrix]) -> "LieSubspace":
        return cls(n, [flatten(m) for m in mats], allow_dependent=True)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrices(self) -> list[Matrix]:
        return [unflatten(r, self.n) for r in self.basis]

    def canonical_matrices(self) -> list[Matrix]:
        return [unflatten(r, self.n) for r in self.canonical]

    def __eq__(self, other) -> bool:
        return isinstance(other, LieSubspace) and self.n == other.n and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash((self.n, self.canonical))

    def __repr__(self) -> str:
        return f"LieSubspace(n={self.n}, dim={self.dim})"

    def contains(self, x: Matrix) -> bool:
        return la.in_span([list(r) for r in self.canonical], flatten(x))

    def element(self, coeffs: Sequence) -> Matrix:
        return unflatten(la.matvec(la.transpose(self.basis), coeffs), self.n) if self.basis else la.zeros(self.n, self.n)

    def is_traceless(self) -> bool:
        return all(trace(m) == 0 for m in self.matrices())

    def is_abelian(self) -> bool:
        ms = self.matrices()
        return all(is_zero(bracket(ms[i], ms[j])) for i in range(len(ms)) for j in range(i + 1, len(ms)))

    def conjugate(self, g: Matrix, g_inv: Matrix | None = None) -> "LieSubspace":
        if g_inv is None:
            g_inv = inverse(g)
        return LieSubspace.from_matrices(self.n, [conjugate(g, m, g_inv) for m in self.matrices()])

    def transpose(self) -> "LieSubspace":
        return LieSubspace.from_matrices(self.n, [transpose(m) for m in self.matrices()])

    def sl_coordinate_rows(self) -> list[list[Fraction]]:
        return [sl_coords(m) for m in self.matrices()]


# -- centralizers, regularity, Jordan data -----------------------------------

def _commutator_system(x: Matrix) -> list[list[Fraction]]:
    """Rows of the linear map y -> [x, y] in flattened coordinates."""
    n = len(x)
    rows = []
    for i in range(n):
        for j in range(n):
            row = [F0] * (n * n)
            # (xy - yx)_{ij} = sum_k x_ik y_kj - y_ik x_kj
            for k in range(n):
                if x[i][k]:
                    row[k * n + j] += x[i][k]
                if x[k][j]:
                    row[i * n + k] -= x[k][j]
            rows.append(row)
    return rows


def centralizer(x: Matrix, ambient: str = "gl") -> LieSubspace:
    n = len(x)
    rows = _commutator_system(x)
    if ambient == "sl":
        rows.append([F1 if i == j else F0 for i in range(n) for j in range(n)])
    elif ambient != "gl":
        raise ValueError("ambient must be 'gl' or 'sl'")
    return LieSubspace(n, la.kernel_basis(rows, n * n))


def centralizer_dim(x: Matrix) -> int:
    n = len(x)
    return n * n - la.rank(_commutator_system(x), n * n)


def is_regular(x: Matrix) -> bool:
    return centralizer_dim(x) == len(x)


def is_nilpotent(x: Matrix) -> bool:
    return is_zero(mpow(x, len(x)))


def charpoly(x: Matrix) -> Poly:
    return la.charpoly(x)


def minpoly(x: Matrix) -> Poly:
    return la.minpoly(x)


def _nullity(m: Matrix) -> int:
    return len(m) - la.rank(m)


def jordan_partition(x: Matrix) -> list[tuple[Poly, tuple[int, ...]]]:
    """Jordan block sizes grouped by squarefree factors of the characteristic
    polynomial.

    The Yun factors of charpoly and minpoly are intersected so that every
    returned factor g has roots sharing the same algebraic multiplicity and
    the same largest block. The nullities of g(x)^j, divided by deg g, then
    give the number of blocks of size >= j at each root.
    """
    n = len(x)
    cp, mp = charpoly(x), minpoly(x)
    cfac, mfac = squarefree_factors(cp), squarefree_factors(mp)
    out = []
    for cm, cg in sorted(cfac.items()):
        for mm, mg in sorted(mfac.items()):
            g = poly_gcd(cg, mg)
            if g.degree <= 0:
                continue
            d = g.degree
            gx = la.poly_at_matrix(g, x)
            acc = la.identity(n)
            ranks_ge = []
            prev = 0
            for _ in range(mm):
                acc = la.matmul(acc, gx)
                null = _nullity(acc)
                if (null - prev) % d:
                    raise ArithmeticError("roots of a factor carry different Jordan types")
                ranks_ge.append((null - prev) // d)
                prev = null
            parts = []
            for j, cnt in enumerate(ranks_ge, start=1):
                nxt = ranks_ge[j] if j < len(ranks_ge) else 0
                parts.extend([j] * (cnt - nxt))
            part = tuple(sorted(parts, reverse=True))
            if sum(part) != cm:
                raise ArithmeticError("Jordan data inconsistent with multiplicity")
            out.append((g, part))
    if sum(g.degree * sum(p) for g, p in out) != n:
        raise ArithmeticError("Jordan data does not account for the full dimension")
    return out


def jordan_type(x: Matrix) -> tuple:
    """Hashable summary: sorted ((deg factor, partition), ...)."""
    return tuple(sorted(((g.degree, p) for g, p in jordan_partition(x)), reverse=True))


def eigen_multiplicities(x: Matrix) -> tuple[int, ...]:
    return tuple(multiplicity_partition(charpoly(x)))


def is_nonregular_projected(x: Matrix) -> bool:
    """True iff x, p(x^2), ..., p(x^{n-1}) are linearly dependent."""
    n = len(x)
    vecs = [flatten(x)]
    xp = x
    for _ in range(2, n):
        xp = la.matmul(xp, x)
        vecs.append(flatten(project_sl(xp)))
    return la.rank(vecs, n * n) < n - 1


# -- deterministic randomness ---------------------------------------------------

def rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_traceless(n: int, r: random.Random, lo: int = -5, hi: int = 5) -> Matrix:
    m = [[Fraction(r.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
    m[n - 1][n - 1] -= trace(m)
    return m


def random_invertible(n: int, r: random.Random, lo: int = -3, hi: int = 3) -> Matrix:
    """Product of a unit lower and a unit upper triangular integer matrix,
    composed with a random permutation; determinant is +-1."""
    lower = la.identity(n)
    upper = la.identity(n)
    for i in range(n):
        for j in range(n):
            if i > j:
                lower[i][j] = Fraction(r.randint(lo, hi))
            elif i < j:
                upper[i][j] = Fraction(r.randint(lo, hi))
    perm = list(range(n))
    r.shuffle(perm)
    pm = la.zeros(n, n)
    for i, p in enumerate(perm):
        pm[i][p] = F1
    return la.matmul(pm, la.matmul(lower, upper))
