import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dextral.formats import FormatError, graph_from_json, graph_to_json
from dextral.leavitt import (
    DirectedGraph,
    Edge,
    GraphError,
    LpaElement,
    Path,
    certify_nonzero,
    classify_graph,
    edge,
    ghost,
    lpa_multiply,
    monomial,
    random_monomials,
    validate_witness,
    vertex,
)
from dextral.verification import leavitt_examples, random_graph

ONE_LOOP = DirectedGraph(["v"], [Edge("f", "v", "v")])
TWO_LOOPS = DirectedGraph(["v"], [Edge("f", "v", "v"), Edge("g", "v", "v")])
ARROW = DirectedGraph(["u", "v"], [Edge("e", "u", "v")])


@pytest.mark.parametrize("label,E,dextral,I,J,iso", leavitt_examples())
def test_classification_examples(label, E, dextral, I, J, iso):
    c = classify_graph(E)
    assert c.dextral == dextral
    assert c.dextral == (not c.violations)
    if dextral:
        assert (c.isolated, c.looped, c.iso_class) == (I, J, iso)
        assert c.isolated + c.looped == len(E.vertices)
    for v in c.violations:
        assert v.certificate is not None
        assert validate_witness(E, *v.witness)


def test_witness_shapes():
    (v,) = classify_graph(ARROW).violations
    assert [str(x) for x in v.witness] == ["e", "u", "v"]
    (v,) = classify_graph(TWO_LOOPS).violations
    assert [str(x) for x in v.witness] == ["g*", "f", "v"]


def test_empty_graph():
    c = classify_graph(DirectedGraph([]))
    assert c.dextral and c.iso_class == "0"


def test_relations():
    E = TWO_LOOPS
    f, g, v = edge(E, "f"), edge(E, "g"), vertex(E, "v")
    assert lpa_multiply(E, ghost(E, "f"), f) == v
    assert lpa_multiply(E, ghost(E, "f"), g).is_zero
    assert lpa_multiply(ARROW, vertex(ARROW, "u"), vertex(ARROW, "v")).is_zero
    assert lpa_multiply(ARROW, vertex(ARROW, "u"), edge(ARROW, "e")) == edge(ARROW, "e")
    assert lpa_multiply(ARROW, edge(ARROW, "e"), vertex(ARROW, "u")).is_zero


def test_ghost_times_edge_is_not_reduced_by_ck2():
    """f f* + g g* stays as it is; only CK-1 is applied."""
    E = TWO_LOOPS
    s = lpa_multiply(E, edge(E, "f"), ghost(E, "f")) + lpa_multiply(E, edge(E, "g"), ghost(E, "g"))
    assert len(s.terms) == 2
    assert certify_nonzero(E, s) is None


def test_certificates():
    E = TWO_LOOPS
    x = lpa_multiply(E, edge(E, "f"), ghost(E, "g"))
    cert = certify_nonzero(E, x)
    assert cert.side == "right" and str(cert.multiplier) == "g" and str(cert.result) == "f"
    cert = certify_nonzero(ARROW, edge(ARROW, "e"))
    assert str(cert.multiplier) == "v" and str(cert.result) == "e"
    assert certify_nonzero(E, LpaElement()) is None


def test_long_monomial_certificate():
    E = TWO_LOOPS
    x = monomial(E, E.path("f"), E.path("g", "f"))
    cert = certify_nonzero(E, x, max_len=2)
    assert str(cert.multiplier) == "gf" and str(cert.result) == "f"


def test_one_sided_certificates_need_a_short_side():
    """Right factors never shorten alpha and left factors never shorten beta."""
    E = TWO_LOOPS
    x = monomial(E, E.path("f", "g"), E.path("g", "f"))
    assert certify_nonzero(E, x, max_len=3) is None


def test_validate_witness_rejects_identity_triple():
    E = DirectedGraph(["v"])
    v = vertex(E, "v")
    assert not validate_witness(E, v, v, v)


def test_malformed_graphs():
    with pytest.raises(GraphError):
        DirectedGraph(["u"], [Edge("e", "u", "w")])
    with pytest.raises(GraphError):
        DirectedGraph(["u"], [Edge("e", "u", "u"), Edge("e", "u", "u")])
    with pytest.raises(GraphError):
        ARROW.path("e", "e")
    with pytest.raises(GraphError):
        lpa_multiply(ARROW, edge(TWO_LOOPS, "f"), vertex(ARROW, "u"))
    with pytest.raises(FormatError):
        graph_from_json({"edges": []})


def test_graph_json_roundtrip():
    E = random_graph(random.Random(3))
    F = graph_from_json(graph_to_json(E))
    assert F.vertices == E.vertices and F.edges == E.edges


@given(st.integers(0, 10**6))
@settings(max_examples=60, deadline=None)
def test_associativity(seed):
    rng = random.Random(seed)
    E = random_graph(rng)
    for key in [tuple(random_monomials(E, rng, 3)) for _ in range(5)]:
        x, y, z = (LpaElement.from_map({k: 1}) for k in key)
        assert lpa_multiply(E, lpa_multiply(E, x, y), z) == lpa_multiply(E, x, lpa_multiply(E, y, z))


@given(st.integers(0, 10**6))
@settings(max_examples=60)
def test_disjoint_union(seed):
    rng = random.Random(seed)
    E1, E2 = random_graph(rng), random_graph(rng)
    assert classify_graph(E1.disjoint_union(E2)).dextral == (
        classify_graph(E1).dextral and classify_graph(E2).dextral
    )


@given(st.integers(0, 10**6))
@settings(max_examples=60)
def test_every_violation_validates(seed):
    E = random_graph(random.Random(seed))
    for v in classify_graph(E).violations:
        assert validate_witness(E, *v.witness)


def test_path_helpers():
    assert str(Path("v")) == "v"
    assert len(TWO_LOOPS.paths(2)) == 1 + 2 + 4
