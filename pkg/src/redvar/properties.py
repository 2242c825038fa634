"""Randomized property suites with fixed seeds."""
from __future__ import annotations

from fractions import Fraction

from . import bb, exterior, lie, orbits4
from . import linalg as la
from .lie import LieSubspace


def random_rational_matrix(r, rows: int, cols: int, bound: int = 4) -> list[list[Fraction]]:
    m = [[Fraction(r.randint(-bound, bound), r.randint(1, 3)) for _ in range(cols)] for _ in range(rows)]
    # force some rank deficiency now and then
    if rows > 2 and r.random() < 0.4:
        a, b = r.sample(range(rows), 2)
        m[a] = [x + 2 * y for x, y in zip(m[a], m[b])] if r.random() < 0.5 else list(m[b])
    return m


def rank_nullity_holds(count: int = 500, seed: int = 101) -> bool:
    r = lie.rng(seed)
    for _ in range(count):
        rows, cols = r.randint(1, 7), r.randint(1, 7)
        m = random_rational_matrix(r, rows, cols)
        red, rk, piv = la.rref(m, cols)
        ker = la.kernel_basis(m, cols)
        if rk + len(ker) != cols or len(piv) != rk:
            return False
        if any(sum(a * b for a, b in zip(row, v)) for row in m for v in ker):
            return False
        if la.rref(red, cols)[0] != red:
            return False
    return True


def random_abelian(r, n: int = 4) -> LieSubspace:
    """span{x, x^2, x^3} projected to sl_n for a random x: abelian, usually 3-dim."""
    while True:
        x = lie.random_traceless(n, r, -3, 3)
        a = LieSubspace.span(n, [lie.project_sl(lie.mpow(x, k)) for k in range(1, n)])
        if a.dim == n - 1:
            return a


def ab_membership_agrees(count: int = 500, seed: int = 202) -> bool:
    r = lie.rng(seed)
    for k in range(count):
        kind = k % 3
        if kind == 0:
            a = LieSubspace.span(4, [lie.random_traceless(4, r, -2, 2) for _ in range(3)])
            if a.dim != 3:
                continue
        elif kind == 1:
            a = random_abelian(r)
        else:
            rep = orbits4.representative(orbits4.LABELS[r.randrange(len(orbits4.LABELS))])
            g = lie.random_invertible(4, r)
            a = rep.conjugate(g, lie.inverse(g))
        if exterior.ab_membership(a) != a.is_abelian():
            return False
    return True


def classifier_conjugation_invariant(per_rep: int = 20, seed: int = 303) -> bool:
    r = lie.rng(seed)
    for label in orbits4.LABELS:
        rep = orbits4.representative(label)
        for _ in range(per_rep):
            g = lie.random_invertible(4, r)
            if orbits4.classify_orbit(rep.conjugate(g, lie.inverse(g))) != label:
                return False
    return True


def tangent_weights_nonzero() -> bool:
    pts = bb.all_fixed_points()
    return len(pts) == 193 and all(bb.ZERO not in ws for _, ws in pts)
