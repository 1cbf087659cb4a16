from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzygraph import (
    MICRO,
    DuplicateEdgeError,
    DuplicateVertexError,
    FuzzyGraph,
    Membership,
    MuExceedsSigmaError,
    NoSuchEdgeError,
    ParseError,
    SelfLoopError,
    UnknownEndpointError,
    ZeroMuError,
    build_graph,
    format_fraction,
    parse_graph,
    path_record,
)
from fuzzygraph.samples import five_vertex_tree

from conftest import fuzzy_graphs


def M(text: str) -> Membership:
    return Membership.parse(text)


def test_parse_is_exact_fixed_point():
    assert M("0.1").micro == 100_000
    assert M("1").micro == MICRO
    assert M("0").micro == 0
    assert M("0.123456").micro == 123_456
    assert M("1.000000").micro == MICRO
    assert M("0.30").micro == 300_000


def test_summing_grades_is_exact():
    total = sum(M("0.3").micro for _ in range(4))
    assert total == 1_200_000


@pytest.mark.parametrize(
    "bad", ["1.5", "2", "0.1234567", "-0.1", "abc", "", ".5", "0.1e-3", "0x1"]
)
def test_parse_rejects_bad_grades(bad):
    with pytest.raises(ValueError):
        M(bad)


def test_membership_range_checked():
    with pytest.raises(ValueError):
        Membership(MICRO + 1)
    with pytest.raises(ValueError):
        Membership(-1)


@given(st.integers(0, MICRO))
@settings(deadline=None)
def test_membership_render_parse_round_trip(micro):
    grade = Membership(micro)
    assert M(str(grade)) == grade


def test_format_fraction_exact_decimal():
    assert format_fraction(Fraction(37, 5)) == "7.4"
    assert format_fraction(Fraction(7, 2)) == "3.5"
    assert format_fraction(Fraction(0)) == "0"
    assert format_fraction(Fraction(3)) == "3"
    assert format_fraction(Fraction(43, 4)) == "10.75"
    assert format_fraction(Fraction(1, 3)) == "1/3"
    assert format_fraction(Fraction(225, 8)) == "28.125"
    assert format_fraction(Fraction(-37, 5)) == "-7.4"


def test_build_five_vertex_tree():
    g = five_vertex_tree()
    assert g.vertex_count == 5
    assert g.edge_count == 5
    assert g.mu("a", "b") == M("0.1")
    assert g.mu("e", "c") == M("0.3")  # stored on the canonical pair c, e
    assert g.sigma("a") == M("1")


def test_single_vertex_and_empty_graph():
    lone = build_graph([("x", M("0.7"))], [])
    assert lone.vertex_count == 1
    assert lone.is_crisp_connected()
    empty = build_graph([], [])
    assert empty.vertex_count == 0


def test_zero_sigma_vertex_allowed_but_cannot_carry_edges():
    g = build_graph([("a", M("0")), ("b", M("1"))], [])
    assert g.sigma("a").is_zero
    with pytest.raises(MuExceedsSigmaError):
        build_graph(
            [("a", M("0")), ("b", M("1"))], [("a", "b", M("0.1"))]
        )


def test_build_graph_error_cases():
    one = M("1")
    with pytest.raises(DuplicateVertexError):
        build_graph([("a", one), ("a", one)], [])
    with pytest.raises(DuplicateEdgeError):
        build_graph(
            [("a", one), ("b", one)],
            [("a", "b", M("0.1")), ("b", "a", M("0.2"))],
        )
    with pytest.raises(SelfLoopError):
        build_graph([("a", one)], [("a", "a", M("0.1"))])
    with pytest.raises(UnknownEndpointError):
        build_graph([("a", one)], [("a", "b", M("0.1"))])
    with pytest.raises(ZeroMuError):
        build_graph([("a", one), ("b", one)], [("a", "b", M("0"))])
    with pytest.raises(MuExceedsSigmaError):
        build_graph(
            [("a", M("0.4")), ("b", one)], [("a", "b", M("0.5"))]
        )


def test_mu_at_sigma_cap_is_legal():
    g = build_graph(
        [("a", M("0.4")), ("b", M("1"))], [("a", "b", M("0.4"))]
    )
    assert g.mu("a", "b") == M("0.4")


def test_parse_graph_basic():
    text = """
# comment line

v a 1
v b 0.5
e a b 0.3
"""
    g = parse_graph(text)
    assert g.vertices() == ("a", "b")
    assert g.mu("a", "b").micro == 300_000


def test_parse_graph_accepts_bytes():
    g = parse_graph(b"v a 1\nv b 1\ne a b 0.1\n")
    assert g.edge_count == 1


def test_parse_reports_line_numbers():
    with pytest.raises(ParseError) as info:
        parse_graph("v a 1\nv b\n")
    assert info.value.line == 2
    with pytest.raises(ParseError) as info:
        parse_graph("v a 1\nv b 1\ne a b 1.0000001\n")
    assert info.value.line == 3
    with pytest.raises(ParseError) as info:
        parse_graph("vertex a 1\n")
    assert info.value.line == 1
    with pytest.raises(ParseError) as info:
        parse_graph("v a 1\ne a 0.1\n")
    assert info.value.line == 2


def test_parse_requires_vertices_before_edges():
    with pytest.raises(UnknownEndpointError):
        parse_graph("e a b 0.1\nv a 1\nv b 1\n")


def test_parse_surfaces_build_errors():
    with pytest.raises(DuplicateVertexError):
        parse_graph("v a 1\nv a 1\n")
    with pytest.raises(MuExceedsSigmaError):
        parse_graph("v a 0.2\nv b 1\ne a b 0.3\n")


def test_serialize_round_trip_samples():
    g = five_vertex_tree()
    assert parse_graph(g.serialize()) == g


@given(fuzzy_graphs(max_vertices=6))
@settings(max_examples=120, deadline=None)
def test_serialize_round_trip_random(g):
    assert parse_graph(g.serialize()) == g


def test_remove_edge_is_persistent():
    g = five_vertex_tree()
    trimmed = g.remove_edge("a", "b")
    assert trimmed.edge_count == 4
    assert g.edge_count == 5  # original untouched
    assert not trimmed.has_edge("a", "b")
    with pytest.raises(NoSuchEdgeError):
        trimmed.remove_edge("a", "b")


def test_edge_subgraph_keeps_all_vertices():
    g = five_vertex_tree()
    sub = g.edge_subgraph([("e", "a")])
    assert sub.vertex_count == 5
    assert sub.edge_count == 1
    with pytest.raises(NoSuchEdgeError):
        g.edge_subgraph([("a", "d")])


def test_crisp_components():
    g = build_graph(
        [("a", M("1")), ("b", M("1")), ("c", M("1"))],
        [("a", "b", M("0.5"))],
    )
    assert g.crisp_components() == (("a", "b"), ("c",))
    assert not g.is_crisp_connected()


def test_path_record():
    g = five_vertex_tree()
    record = path_record(g, ["a", "b", "c", "d"])
    assert record.strength == M("0.1")
    assert record.length == Fraction(9, 10)
    with pytest.raises(NoSuchEdgeError):
        path_record(g, ["a", "c"])
    with pytest.raises(ValueError):
        path_record(g, ["a"])
    with pytest.raises(ValueError):
        path_record(g, ["a", "b", "a"])


_VIOLATIONS = ("none", "dup_vertex", "dup_edge", "self_loop", "unknown",
               "zero_mu", "mu_cap")


@given(fuzzy_graphs(min_vertices=2, max_vertices=5, connected=True),
       st.sampled_from(_VIOLATIONS))
@settings(max_examples=150, deadline=None)
def test_build_graph_rejects_exactly_the_invalid(g, violation):
    vertices = [(name, g.sigma(name)) for name in g.vertices()]
    edges = [(u, v, grade) for u, v, grade in g.edges()]
    expected = None
    if violation == "dup_vertex":
        vertices.append(vertices[0])
        expected = DuplicateVertexError
    elif violation == "dup_edge":
        u, v, grade = edges[0]
        edges.append((v, u, grade))
        expected = DuplicateEdgeError
    elif violation == "self_loop":
        name = vertices[0][0]
        edges.append((name, name, Membership(10_000)))
        expected = SelfLoopError
    elif violation == "unknown":
        edges.append((vertices[0][0], "ghost", Membership(10_000)))
        expected = UnknownEndpointError
    elif violation == "zero_mu":
        u, v, _ = edges[0]
        edges[0] = (u, v, Membership(0))
        expected = ZeroMuError
    elif violation == "mu_cap":
        u, v, _ = edges[0]
        cap = min(g.sigma(u), g.sigma(v))
        if cap.micro == MICRO:
            return  # cannot push a grade above 1
        edges[0] = (u, v, Membership(cap.micro + 1))
        expected = MuExceedsSigmaError
    if expected is None:
        rebuilt = build_graph(vertices, edges)
        assert rebuilt == g
    else:
        with pytest.raises(expected):
            build_graph(vertices, edges)
