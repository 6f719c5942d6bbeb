"""Truncated kernel algebras: bases, generators, growth, presentations."""

import pytest

from quotrel.eqrel import relation_from_map
from quotrel.fields import QQ
from quotrel.poly import PolyRing
from quotrel.quotient import (
    coequalizer_kernel_basis,
    element_to_vector,
    noetherian_probe,
    ordered_columns,
    present_subalgebra,
    vector_to_element,
)
from quotrel.ring import AmbientRing, RingMap

from oracles import arith_for, span_dim


@pytest.fixture
def cusp_rel():
    A = AmbientRing.free(QQ, ("t",))
    pr = A.poly_ring(0)
    return relation_from_map(A, [pr.parse("t^2"), pr.parse("t^3")])


@pytest.fixture
def glued_lines():
    """A point of one line glued to a point of another: two maps from A^1."""
    X = AmbientRing([(PolyRing(QQ, ("u",)), []), (PolyRing(QQ, ("v",)), [])])
    Z = AmbientRing.free(QQ, ("s",))
    zero = Z.poly_ring(0).zero
    return X, RingMap(X, Z, [(0, [zero])]), RingMap(X, Z, [(1, [zero])])


def test_ordered_columns_most_significant_first():
    B = AmbientRing.free(QQ, ("x", "y"))
    assert ordered_columns(B, 2) == [
        (0, (2, 0)),
        (0, (1, 1)),
        (0, (0, 2)),
        (0, (1, 0)),
        (0, (0, 1)),
        (0, (0, 0)),
    ]


def test_vector_round_trip():
    X = AmbientRing([(PolyRing(QQ, ("u",)), []), (PolyRing(QQ, ("v",)), [])])
    el = X.element([X.poly_ring(0).parse("u^2 - 3"), X.poly_ring(1).parse("v")])
    v = element_to_vector(el)
    assert v[(0, (2,))] == QQ.one and (1, (1,)) in v
    assert vector_to_element(X, v) == el


def test_cusp_kernel_basis(cusp_rel):
    tr = coequalizer_kernel_basis(cusp_rel, 6)
    assert tr.dims() == [1, 1, 2, 3, 4, 5, 6]
    assert [f.render() for f in tr.basis()] == ["1", "t^2", "t^3", "t^4", "t^5", "t^6"]
    assert tr.render_basis().splitlines()[:2] == ["degree 0: 1", "degree 2: t^2"]


def test_cusp_kernel_membership(cusp_rel):
    tr = coequalizer_kernel_basis(cusp_rel, 6)
    pr = tr.ring.poly_ring(0)
    inside = tr.ring.embed(0, pr.parse("t^4 + 2*t^2 - 5"))
    outside = tr.ring.embed(0, pr.parse("t^2 + t"))
    assert tr.contains(inside)
    assert not tr.contains(outside)
    # the defining condition agrees, checked directly on the relation ideal
    assert tr.defining_membership(inside)
    assert not tr.defining_membership(outside)


def test_cusp_minimal_generators(cusp_rel):
    tr = coequalizer_kernel_basis(cusp_rel, 6)
    assert [(g.render(), e) for g, e in tr.minimal_generators()] == [
        ("t^2", 2),
        ("t^3", 3),
    ]
    assert tr.new_generator_counts() == [0, 0, 1, 1, 0, 0, 0]


def test_kernel_layers_match_independent_rank(cusp_rel):
    # cross-check each filtration dimension against a from-scratch echelon
    tr = coequalizer_kernel_basis(cusp_rel, 5)
    rows = [element_to_vector(f) for f in tr.basis()]
    assert span_dim(rows, arith_for(QQ)) == tr.dims()[-1]


def test_degree_bound_validation(cusp_rel):
    with pytest.raises(ValueError):
        coequalizer_kernel_basis(cusp_rel, -1)


def test_pair_kernel_glues_the_lines(glued_lines):
    X, s1, s2 = glued_lines
    tr = coequalizer_kernel_basis((s1, s2), 3)
    assert tr.dims() == [1, 3, 5, 7]
    assert [f.render() for f in tr.basis()] == [
        "(1, 1)",
        "(u, 0)",
        "(0, v)",
        "(u^2, 0)",
        "(0, v^2)",
        "(u^3, 0)",
        "(0, v^3)",
    ]
    # constants must agree across the pieces
    assert tr.contains(X.one)
    assert not tr.contains(X.element([X.poly_ring(0).one, X.poly_ring(1).zero]))


def test_pair_kernel_generators_present_the_node(glued_lines):
    X, s1, s2 = glued_lines
    tr = coequalizer_kernel_basis((s1, s2), 3)
    gens = tr.minimal_generators()
    assert [(g.render(), e) for g, e in gens] == [("(u, 0)", 1), ("(0, v)", 1)]
    ring, rels = present_subalgebra([g for g, _ in gens])
    assert ring.names == ("w1", "w2")
    assert [ring.render(r) for r in rels] == ["w1*w2"]


def test_pair_source_validation(glued_lines):
    X, s1, _ = glued_lines
    with pytest.raises(TypeError):
        coequalizer_kernel_basis((s1, "other"), 2)
    Y = AmbientRing.free(QQ, ("w",))
    foreign = RingMap(Y, Y, [(0, [Y.poly_ring(0).var(0)])])
    with pytest.raises(ValueError):
        coequalizer_kernel_basis((s1, foreign), 2)


def test_probe_stabilized(cusp_rel):
    rep = noetherian_probe(cusp_rel, 4)
    assert not rep.not_stabilized
    lines = rep.render().splitlines()
    assert lines[0] == "degree | basis dim | new generators"
    assert lines[-1] == "no new generators at degree 4"
    assert rep.rows()[2] == (2, 2, 1)


def test_probe_flags_fresh_generators_at_the_bound(cusp_rel):
    rep = noetherian_probe(cusp_rel, 2)
    assert rep.not_stabilized
    assert rep.render().splitlines()[-1] == "generation NOT stabilized through degree 2"


def test_probe_accepts_a_precomputed_truncation(cusp_rel):
    tr = coequalizer_kernel_basis(cusp_rel, 4)
    assert noetherian_probe(tr, 4).rows() == noetherian_probe(cusp_rel, 4).rows()


def test_probe_needs_room(cusp_rel):
    with pytest.raises(ValueError):
        noetherian_probe(cusp_rel, 1)


# -- presentations -----------------------------------------------------------


def test_present_cusp_coordinates():
    A = AmbientRing.free(QQ, ("t",))
    pr = A.poly_ring(0)
    ring, rels = present_subalgebra(
        [A.embed(0, pr.parse("t^2")), A.embed(0, pr.parse("t^3"))]
    )
    assert ring.names == ("w1", "w2")
    assert [ring.render(r) for r in rels] == ["w1^3 - w2^2"]


def test_present_veronese():
    B = AmbientRing.free(QQ, ("x", "y"))
    pb = B.poly_ring(0)
    gens = [B.embed(0, pb.parse(s)) for s in ("x^2", "x*y", "y^2")]
    ring, rels = present_subalgebra(gens)
    assert [ring.render(r) for r in rels] == ["w2^2 - w1*w3"]
    named_ring, named = present_subalgebra(gens, names=["a", "b", "c"])
    assert named_ring.names == ("a", "b", "c")
    assert [named_ring.render(r) for r in named] == ["b^2 - a*c"]


def test_present_free_generators():
    B = AmbientRing.free(QQ, ("x", "y"))
    pb = B.poly_ring(0)
    ring, rels = present_subalgebra([B.embed(0, pb.parse("x")), B.embed(0, pb.parse("y"))])
    assert rels == []
    assert ring.names == ("w1", "w2")


def test_present_validation():
    B = AmbientRing.free(QQ, ("x",))
    C = AmbientRing.free(QQ, ("y",))
    x = B.embed(0, B.poly_ring(0).var(0))
    with pytest.raises(ValueError):
        present_subalgebra([])
    with pytest.raises(ValueError):
        present_subalgebra([x, C.embed(0, C.poly_ring(0).var(0))])
    with pytest.raises(ValueError):
        present_subalgebra([x], names=["a", "b"])


def test_present_avoids_variable_capture():
    B = AmbientRing.free(QQ, ("w1", "w2"))
    pb = B.poly_ring(0)
    ring, rels = present_subalgebra([B.embed(0, pb.parse("w1 + w2"))])
    assert ring.names == ("_w1",)
    assert rels == []
