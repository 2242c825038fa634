import pytest

from redvar import lie, orbits4
from redvar import tangent as tg
from redvar.checks import conjugates
from redvar.lie import LieSubspace


@pytest.mark.parametrize("label", orbits4.LABELS)
def test_representative_classifies(label):
    a = orbits4.representative(label)
    assert a.dim == 3 and a.is_abelian() and a.is_traceless()
    assert orbits4.classify_orbit(a) == label


@pytest.mark.parametrize("label", orbits4.LABELS)
def test_conjugation_invariance(label):
    rep = orbits4.representative(label)
    for a in conjugates(rep, 20, seed=hash(label) % 1000):
        assert orbits4.classify_orbit(a) == label


@pytest.mark.parametrize("label", orbits4.LABELS)
def test_orbit_dimension_is_subscript(label):
    assert tg.orbit_dimension(orbits4.representative(label)) == orbits4.label_dimension(label)


def test_signatures_distinct():
    sigs = {orbits4.signature(orbits4.representative(l)) for l in orbits4.LABELS}
    assert len(sigs) == 14


def test_signature_examples():
    s = orbits4.signature(orbits4.representative("O7"))
    assert s.det_form_rank == 3 and s.nilpotent
    s6 = orbits4.signature(orbits4.representative("O6"))
    assert s6.det_form_rank == 2


@pytest.mark.parametrize("label", orbits4.LABELS)
def test_associative_span(label):
    assert orbits4.associative_span_dim(orbits4.representative(label)) == 4


def test_nonabelian_input_rejected():
    a = LieSubspace.from_matrices(4, [lie.E(4, 0, 1), lie.E(4, 1, 0), lie.E(4, 2, 3)])
    with pytest.raises(orbits4.ClassificationError):
        orbits4.classify_orbit(a)


def test_antitranspose_swaps_primes():
    for x, y in [("O8p", "O8pp"), ("O7p", "O7pp"), ("O3p", "O3pp"), ("O10p", "O10p")]:
        a = orbits4.representative(x)
        b = LieSubspace.from_matrices(4, [orbits4.antitranspose(m) for m in a.matrices()])
        assert orbits4.classify_orbit(b) == y


def test_degenerations():
    results = {(r.source, r.target): r for r in orbits4.verify_degenerations()}
    assert len(results) == 17
    failing = {k for k, r in results.items() if not r.ok}
    # these two are impossible: the source contains a plane of rank <= 1 matrices, O7 does not
    assert failing == {("O8p", "O7"), ("O8pp", "O7")}
    for k in failing:
        assert results[k].obstruction


def test_supplementary_arrow_into_O7():
    assert all(r.ok for r in orbits4.verify_degenerations(orbits4.SUPPLEMENTARY_ARROWS))


def test_rank_one_planes():
    assert orbits4.rank_one_planes(orbits4.representative("O8p"))
    assert not orbits4.rank_one_planes(orbits4.representative("O7"))
    assert orbits4.nondegenerate_minor_conic(orbits4.representative("O7"))


def test_o_min_curve_limit():
    from redvar.grassmann import limit_subspace
    assert orbits4.classify_orbit(limit_subspace(orbits4.o_min_curve(4))) == "O3p"


def test_secant_planes():
    planes, transverse = orbits4.secant_planes()
    assert len(planes) == 6 and transverse
    assert all(p.centralizer_dim == 5 and p.samples_abelian for p in planes)
    assert orbits4.plane_intersections_trivial(planes)


def test_describe_matrix():
    assert orbits4.describe_matrix(lie.add(lie.E(4, 0, 1), lie.scale(-2, lie.E(4, 2, 3)))) == "E12 - 2 E34"
