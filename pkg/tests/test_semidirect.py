"""Test defect_topology.semidirect
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from defect_topology.exceptions import InconsistentSpec, InfiniteOrderError
from defect_topology.intlin import IntMat
from defect_topology.semidirect import (IDENTITY, LATTICES, PointGroup2D, SdElement,
                                        brute_force_classes, canonical_rep, class_family,
                                        closed_form_partition, conjugate, f_classes, inverse,
                                        multiply, oracle_agrees, rep_key)


@pytest.fixture(params=sorted(LATTICES))
def point_group(request):
    return PointGroup2D.named(request.param)


@pytest.fixture
def hexagonal():
    return PointGroup2D.named("hexagonal")


def test_catalog():
    assert PointGroup2D.named("square").order_n == 4
    assert PointGroup2D.named("hexagonal").order_n == 6
    assert PointGroup2D.named("rectangle").has_reflection
    assert not PointGroup2D.named("parallelogram").has_reflection
    assert PointGroup2D.named("parallelogram").chirality_size() == 2
    assert PointGroup2D.named("square").chirality_size() == 1


def test_custom_point_group():
    pg = PointGroup2D.custom([[0, -1], [1, 1]])
    assert pg.order_n == 6
    with pytest.raises(InfiniteOrderError):
        PointGroup2D.custom([[2, 0], [0, 1]])
    with pytest.raises(InfiniteOrderError):
        PointGroup2D.custom([[1, 1], [0, 1]])
    with pytest.raises(InconsistentSpec):
        PointGroup2D.named("triclinic")


def test_multiply(hexagonal):
    a = SdElement((1, 0), 1)
    b = SdElement((1, 0), 0)
    assert multiply(a, b, hexagonal) == SdElement((2, -1), 1)
    assert multiply(IDENTITY, a, hexagonal) == a


def test_conjugate_example(hexagonal):
    g = SdElement((-1, 1), 0)
    x = SdElement((1, 0), 1)
    assert conjugate(g, x, hexagonal) == SdElement((0, 0), 1)
    assert conjugate(IDENTITY, x, hexagonal) == x


def test_canonical_rep_examples(hexagonal):
    assert canonical_rep(hexagonal, SdElement((5, -3), 1)) == SdElement((0, 0), 1)
    square = PointGroup2D.named("square")
    assert canonical_rep(square, SdElement((2, 1), 2)) == SdElement((0, 1), 2)
    assert canonical_rep(square, SdElement((3, 3), 2)) == SdElement((1, 1), 2)


elements = st.builds(SdElement,
                     st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
                     st.integers(-13, 13))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(LATTICES)), elements, elements, elements)
def test_group_laws(lattice, a, b, c):
    pg = PointGroup2D.named(lattice)
    assert multiply(multiply(a, b, pg), c, pg) == multiply(a, multiply(b, c, pg), pg)
    assert multiply(a, inverse(a, pg), pg) == IDENTITY
    assert multiply(inverse(a, pg), a, pg) == IDENTITY
    explicit = multiply(multiply(a, b, pg), inverse(a, pg), pg)
    assert conjugate(a, b, pg) == explicit
    assert conjugate(a, b, pg).n3 == b.n3


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(sorted(LATTICES)), elements, elements)
def test_canonical_rep_is_class_invariant(lattice, g, x):
    pg = PointGroup2D.named(lattice)
    rep = canonical_rep(pg, x)
    assert rep.n3 == x.n3
    assert canonical_rep(pg, rep) == rep
    assert canonical_rep(pg, conjugate(g, x, pg)) == rep


def _reps(cs):
    return [list(v) for v in cs.representatives]


@pytest.mark.parametrize("n3", [1, 5, -1, 7])
def test_hexagonal_single_class(hexagonal, n3):
    cs = f_classes(hexagonal, n3)
    assert cs.is_finite()
    assert _reps(cs) == [[0, 0]]
    assert cs.table_notation() == u"{0̃} ∪ ∅"


@pytest.mark.parametrize("n3", [2, 3, 4, -2, 8])
def test_hexagonal_two_classes(hexagonal, n3):
    cs = f_classes(hexagonal, n3)
    assert _reps(cs) == [[0, 0], [0, 1]]
    assert cs.table_notation() == u"{0̃} ∪ {(0,1)}"


@pytest.mark.parametrize("lattice,descriptor", [
    ("hexagonal", u"{(n₁,n₂) | n₁≥0, n₂>0}"),
    ("square", u"{(n₁,n₂) | n₁≥0, n₂>0}"),
    ("rectangle", u"{(n₁,n₂) | n₂>0} ∪ {(n₁,0) | n₁>0}"),
    ("parallelogram", u"ℤ²"),
])
def test_fundamental_domains(lattice, descriptor):
    pg = PointGroup2D.named(lattice)
    cs = f_classes(pg, 0)
    assert not cs.is_finite()
    assert cs.count() is None
    assert cs.descriptor == descriptor
    assert cs.contains((0, 0))


def test_hexagonal_domain_membership(hexagonal):
    cs = f_classes(hexagonal, 6)
    for v in [(0, 1), (3, 2), (0, 7)]:
        assert cs.contains(v)
    for v in [(1, 0), (-1, 1), (2, -1), (0, -1)]:
        assert not cs.contains(v)
    assert cs.canonical((1, 0)) == (0, 1)


def test_rectangle_domain_membership():
    cs = f_classes(PointGroup2D.named("rectangle"), 2)
    assert cs.contains((-3, 1))
    assert cs.contains((2, 0))
    assert not cs.contains((-2, 0))
    assert not cs.contains((5, -1))


@pytest.mark.parametrize("lattice,n3,reps", [
    ("square", 1, [[0, 0], [0, 1]]),
    ("square", 2, [[0, 0], [0, 1], [1, 1]]),
    ("square", 3, [[0, 0], [0, 1]]),
    ("rectangle", 1, [[0, 0], [0, 1], [1, 0], [1, 1]]),
    ("rectangle", -3, [[0, 0], [0, 1], [1, 0], [1, 1]]),
])
def test_finite_classes(lattice, n3, reps):
    assert _reps(f_classes(PointGroup2D.named(lattice), n3)) == reps


def test_class_family(point_group):
    family = class_family(point_group)
    assert len(family) == point_group.order_n
    assert [cs.n3 for cs in family] == list(range(point_group.order_n))


def test_to_dict(hexagonal):
    d = f_classes(hexagonal, 2).to_dict()
    assert d == {"kind": "finite", "n3": 2, "count": 2, "representatives": [[0, 0], [0, 1]]}
    d = f_classes(hexagonal, 0).to_dict(window=2)
    assert d["kind"] == "fundamental_domain"
    assert [0, 1] in d["examples"] and [1, 0] not in d["examples"]


def test_oracle_examples(hexagonal):
    classes = brute_force_classes(hexagonal, 3, 5)
    assert len(classes) == 2
    assert sorted(min(c, key=rep_key) for c in classes) == [(0, 0), (0, 1)]

    assert len(brute_force_classes(PointGroup2D.named("parallelogram"), 0, 4)) == 81
    rect = brute_force_classes(PointGroup2D.named("rectangle"), 2, 3)
    assert all(c == sorted({v, tuple(-x for x in v)}) for c in rect for v in c)


def test_oracle_rejects_small_window(hexagonal):
    with pytest.raises(ValueError):
        brute_force_classes(hexagonal, 1, 0)


@pytest.mark.parametrize("n3", range(-8, 9))
def test_oracle_agreement(point_group, n3):
    assert oracle_agrees(point_group, n3, 6)


@pytest.mark.slow
@pytest.mark.parametrize("n3", [0, 1, 2, 3])
def test_oracle_agreement_large_bound(point_group, n3):
    assert brute_force_classes(point_group, n3, 4, bound=24) == \
        closed_form_partition(point_group, n3, 4)


def test_custom_matrix_classes():
    # conjugate of the hexagonal generator
    pg = PointGroup2D.custom(IntMat([[0, -1], [1, 1]]))
    for n3 in range(6):
        assert oracle_agrees(pg, n3, 4)
