from fractions import Fraction

from redvar import grassmann as gr
from redvar import lie
from redvar.grassmann import CurveSubspace
from redvar.lie import LieSubspace
from redvar.polys import RatFunc


def test_plucker_relation_on_random_plane(rng):
    rows = [[Fraction(rng.randint(-4, 4)) for _ in range(4)] for _ in range(2)]
    p = gr.plucker_rows(rows)
    # the single Plücker relation of G(2, 4)
    rel = (p.ordered((0, 1)) * p.ordered((2, 3)) - p.ordered((0, 2)) * p.ordered((1, 3))
           + p.ordered((0, 3)) * p.ordered((1, 2)))
    assert rel == 0


def test_plucker_recovers_subspace(rng):
    a = LieSubspace.span(3, [lie.random_traceless(3, rng) for _ in range(2)])
    assert LieSubspace(3, gr.plucker(a).basis()) == a


def test_limit_of_secant_line():
    # span{E11 + t E12}: the limit is the line of E11, while span{E11, E11 + t E12} -> {E11, E12}
    t = RatFunc.t()
    zero, one = RatFunc(0), RatFunc(1)
    c = CurveSubspace(2, [[one, t, zero, zero]])
    assert gr.limit_subspace(c) == LieSubspace.from_matrices(2, [lie.E(2, 0, 0)])
    c2 = CurveSubspace(2, [[one, zero, zero, zero], [one, t, zero, zero]])
    assert gr.limit_subspace(c2) == LieSubspace.from_matrices(2, [lie.E(2, 0, 0), lie.E(2, 0, 1)])


def test_torus_invariance():
    assert gr.torus_invariant(LieSubspace.from_matrices(3, [lie.E(3, 0, 1), lie.diag(1, 1, -2)]))
    assert not gr.torus_invariant(LieSubspace.from_matrices(3, [lie.add(lie.E(3, 0, 1), lie.E(3, 1, 0))]))
