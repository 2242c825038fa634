"""Exact matrix arithmetic over Q (and, generically, over any exact field).

Matrices are plain lists of row lists. Rational elimination runs on
integer rows with content removal, which keeps entry growth in check on the
large sparse matrices used elsewhere; results are normalized to Fractions
only at the end. Pivots are always the first nonzero entry in column order,
so every output is deterministic.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Sequence

from .polys import Poly

Mat = list  # list[list[Fraction]]


def frac_matrix(rows: Sequence[Sequence]) -> Mat:
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in rows]


def zeros(r: int, c: int) -> Mat:
    return [[Fraction(0)] * c for _ in range(r)]


def identity(n: int) -> Mat:
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def transpose(m: Mat) -> Mat:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def matvec(a: Mat, v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a]


# -- sparse integer rows ----------------------------------------------------

def _row_to_ints(row: Sequence[Fraction]) -> dict[int, int]:
    den = 1
    for x in row:
        if x:
            den = lcm(den, Fraction(x).denominator)
    out = {}
    for j, x in enumerate(row):
        if x:
            out[j] = int(Fraction(x) * den)
    return _primitive(out)


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {j: v // g for j, v in row.items()}
    return row


def _sparse_rref(rows: list[dict[int, int]], ncols: int) -> tuple[list[dict[int, int]], list[int]]:
    """Gauss-Jordan on integer sparse rows; returns (pivot rows, pivot columns).

    Pivot rows are primitive integer vectors whose pivot entry is positive,
    and every other pivot row is zero in that column.
    """
    rows = [r for r in rows if r]
    pivots: list[int] = []
    done: list[dict[int, int]] = []
    for col in range(ncols):
        k = next((i for i, r in enumerate(rows) if col in r), None)
        if k is None:
            continue
        prow = rows.pop(k)
        if prow[col] < 0:
            prow = {j: -v for j, v in prow.items()}
        pc = prow[col]

        def reduce(r: dict[int, int]) -> dict[int, int]:
            c = r[col]
            g = gcd(pc, c)
            a, b = pc // g, c // g
            out = {j: a * v for j, v in r.items()}
            for j, v in prow.items():
                w = out.get(j, 0) - b * v
                if w:
                    out[j] = w
                else:
                    out.pop(j, None)
            return _primitive(out)

        rows = [reduce(r) if col in r else r for r in rows]
        rows = [r for r in rows if r]
        done = [reduce(r) if col in r else r for r in done]
        done.append(prow)
        pivots.append(col)
        if not rows:
            break
    return done, pivots


def rref(m: Mat, ncols: int | None = None) -> tuple[Mat, int, list[int]]:
    """Reduced row echelon form of a rational matrix.

    Returns (nonzero rows of the reduced form, rank, pivot columns).
    """
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows = [_row_to_ints(r) for r in m]
    prows, pivots = _sparse_rref(rows, ncols)
    out = []
    for r, c in zip(prows, pivots):
        p = r[c]
        dense = [Fraction(0)] * ncols
        for j, v in r.items():
            dense[j] = Fraction(v, p)
        out.append(dense)
    return out, len(pivots), pivots


def rank(m: Mat, ncols: int | None = None) -> int:
    if ncols is None:
        ncols = len(m[0]) if m else 0
    return len(_sparse_rref([_row_to_ints(r) for r in m], ncols)[1])


def kernel_basis(m: Mat, ncols: int | None = None) -> Mat:
    """Rows spanning {x : m x = 0}, one per free column (standard basis)."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    red, _, pivots = rref(m, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(red, pivots):
            if row[f]:
                v[c] = -row[f]
        basis.append(v)
    return basis


def row_space(m: Mat, ncols: int | None = None) -> Mat:
    return rref(m, ncols)[0]


def solve_in_span(basis: Mat, v: Sequence) -> list[Fraction] | None:
    """Coefficients c with sum c_i basis_i = v, or None if v is not in the span.
    ``basis`` must have independent rows."""
    k = len(basis)
    ncols = len(v)
    # columns are the basis rows, augmented by v
    aug = [[basis[i][j] for i in range(k)] + [-Fraction(v[j])] for j in range(ncols)]
    ker = kernel_basis(aug, k + 1)
    for z in ker:
        if z[k] != 0:
            return [z[i] / z[k] for i in range(k)]
    return None


def in_span(basis: Mat, v: Sequence) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [list(v)]) == rank(basis)


def intersect_spans(a: Mat, b: Mat) -> Mat:
    """Basis of span(a) ∩ span(b) (rows)."""
    if not a or not b:
        return []
    a = row_space(a)
    b = row_space(b)
    ka, ncols = len(a), len(a[0])
    cols = [[a[i][j] for i in range(ka)] + [-b[i][j] for i in range(len(b))] for j in range(ncols)]
    ker = kernel_basis(cols, ka + len(b))
    vecs = [[sum((z[i] * a[i][j] for i in range(ka) if z[i]), Fraction(0)) for j in range(ncols)] for z in ker]
    return row_space(vecs, ncols)


def det(m: Mat) -> Fraction:
    """Determinant via Bareiss elimination on a cleared-denominator copy."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    a = []
    for row in m:
        den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        scale /= den
        a.append([int(Fraction(x) * den) for x in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            s = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if s is None:
                return Fraction(0)
            a[k], a[s] = a[s], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] * scale


# -- generic fields (used for rational functions) -----------------------------

def rref_generic(rows: list[list], ncols: int, zero, one) -> tuple[list[list], list[int]]:
    """Gauss-Jordan over any exact field whose elements support + - * / and bool()."""
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        k = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        inv = one / rows[r][col]
        rows[r] = [x * inv if x else zero for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x - c * y if y else x for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def det_generic(m: list[list], zero, one):
    n = len(m)
    a = [list(r) for r in m]
    result = one
    for k in range(n):
        s = next((i for i in range(k, n) if a[i][k]), None)
        if s is None:
            return zero
        if s != k:
            a[k], a[s] = a[s], a[k]
            result = -result
        piv = a[k][k]
        result = result * piv
        for i in range(k + 1, n):
            if a[i][k]:
                c = a[i][k] / piv
                a[i] = [x - c * y if y else x for x, y in zip(a[i], a[k])]
    return result


# -- polynomials attached to a square matrix ----------------------------------

def charpoly(m: Mat) -> Poly:
    """det(xI - m) by the Faddeev-LeVerrier recursion."""
    n = len(m)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    mk = zeros(n, n)
    for k in range(1, n + 1):
        # M_k = m M_{k-1} + c_{n-k+1} I
        mk = matmul(m, mk)
        for i in range(n):
            mk[i][i] += coeffs[n - k + 1]
        am = matmul(m, mk)
        coeffs[n - k] = -sum((am[i][i] for i in range(n)), Fraction(0)) / k
    return Poly(coeffs)


def minpoly(m: Mat) -> Poly:
    """Monic generator of the first linear dependence among I, m, m^2, ..."""
    n = len(m)
    powers = [identity(n)]
    for k in range(1, n + 1):
        powers.append(matmul(powers[-1], m))
        cols = [[p[i][j] for p in powers] for i in range(n) for j in range(n)]
        ker = kernel_basis(cols, k + 1)
        if ker:
            z = ker[0]
            return Poly([c / z[k] for c in z])
    raise AssertionError("no dependence up to degree n")


def poly_at_matrix(f: Poly, m: Mat) -> Mat:
    n = len(m)
    out = zeros(n, n)
    for c in reversed(f.coeffs):
        out = matmul(out, m)
        for i in range(n):
            out[i][i] += c
    if not f.coeffs:
        return zeros(n, n)
    return out


def scalar_apply(rows: Mat, fn: Callable) -> Mat:
    return [[fn(x) for x in row] for row in rows]
