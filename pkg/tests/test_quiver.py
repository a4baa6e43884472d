import json

import pytest
from hypothesis import given, settings, strategies as st
from pydantic import ValidationError

from psyquiver.coloring import ColoringSet, enumerate_colorings
from psyquiver.diagram import parse_diagram, perturb
from psyquiver.endo import EndoMap, EndoSet, enumerate_endomorphisms
from psyquiver.errors import BoundExceededError, QuiverInvariantError
from psyquiver.quiver import (
    Edge,
    InDegreePolynomial,
    Quiver,
    build_quiver,
    export_dot,
    export_json_lines,
    in_degree_polynomial,
    parse_polynomial,
    quiver_to_networkx,
    quivers_isomorphic,
)


def _endos(n, *maps):
    return EndoSet.of(n, [EndoMap(images=m) for m in maps])


@pytest.fixture(scope="module")
def bouquet_colorings(qui1, bouquet):
    return enumerate_colorings(qui1, bouquet)


def test_qui1_phi_quiver(bouquet_colorings):
    q = build_quiver(bouquet_colorings, _endos(4, (1, 4, 4, 1)))
    assert q.edges == tuple(Edge(v, 0, 0) for v in range(4))
    assert q.in_degrees() == [4, 0, 0, 0]
    assert str(in_degree_polynomial(q)) == "u^4 + 3"


def test_identity_gives_one_loop_per_vertex(bouquet_colorings):
    q = build_quiver(bouquet_colorings, _endos(4, (1, 2, 3, 4)))
    assert q.loop_counts() == [1, 1, 1, 1]
    assert str(in_degree_polynomial(q)) == "4u"


def test_constant_map_gives_a_star(bouquet_colorings):
    q = build_quiver(bouquet_colorings, _endos(4, (4, 4, 4, 4)))
    assert q.in_degrees() == [0, 0, 0, 4]
    assert q.out_degrees() == [1, 1, 1, 1]


def test_automorphism_gives_in_degree_one(bouquet_colorings):
    q = build_quiver(bouquet_colorings, _endos(4, (4, 2, 3, 1)))
    assert in_degree_polynomial(q) == InDegreePolynomial(terms={1: 4})
    assert q.loop_counts() == [0, 0, 0, 0]


def test_full_quiver_of_bouquet_by_qui1(qui1, bouquet_colorings):
    q = build_quiver(bouquet_colorings, enumerate_endomorphisms(qui1))
    p = in_degree_polynomial(q)
    assert str(p) == "2u^24 + 2u^8"
    assert p.degree_sum == 16 * 4
    assert all(loops >= 1 for loops in q.loop_counts())


def test_pseudoknot_quiver(corpus, qui1):
    colorings = enumerate_colorings(qui1, corpus.diagram("3_1.1"))
    q = build_quiver(colorings, corpus.endos("qui2-s"))
    assert len(q.edges) == 8
    assert q.loop_counts() == [1, 0, 0, 1]
    assert {Edge(0, 3, 1), Edge(3, 0, 1)} <= set(q.edges)
    assert str(in_degree_polynomial(q)) == "2u^4 + 2"


def test_trefoil_quiver(corpus, trefoil):
    alg = corpus.algebra("qui1-classical")
    q = build_quiver(enumerate_colorings(alg, trefoil), corpus.endos("qui1-phi", alg))
    assert str(in_degree_polynomial(q)) == "2u^2 + 2"


def test_virtual_knot_full_quiver(corpus):
    alg = corpus.algebra("alexander-9-4-5")
    q = build_quiver(enumerate_colorings(alg, corpus.diagram("v2.1")), enumerate_endomorphisms(alg))
    assert in_degree_polynomial(q) == parse_polynomial("u^15 + 2u^6")


def test_bouquet_quiver_by_inout8(corpus, inout8, bouquet):
    q = build_quiver(enumerate_colorings(inout8, bouquet), corpus.endos("inout8-phi"))
    p = in_degree_polynomial(q)
    assert p == parse_polynomial("2u^15 + u^13 + u^9 + 48")
    assert p.vertex_count == 52


def test_full_bouquet_quiver_by_inout8_is_consistent(inout8, bouquet):
    endos = enumerate_endomorphisms(inout8)
    p = in_degree_polynomial(build_quiver(enumerate_colorings(inout8, bouquet), endos))
    assert p.vertex_count == 52
    assert p.degree_sum == len(endos) * 52


def test_non_endomorphism_breaks_the_quiver(bouquet_colorings):
    with pytest.raises(QuiverInvariantError, match="not a coloring"):
        build_quiver(bouquet_colorings, _endos(4, (2, 2, 2, 2)))


@pytest.mark.parametrize(
    "terms, text",
    [
        ({4: 1, 0: 3}, "u^4 + 3"),
        ({1: 4}, "4u"),
        ({1: 1}, "u"),
        ({0: 7}, "7"),
        ({}, "0"),
        ({6: 2, 15: 1, 3: 0}, "u^15 + 2u^6"),
    ],
)
def test_polynomial_strings(terms, text):
    assert str(InDegreePolynomial(terms=terms)) == text


def test_parse_polynomial_forms():
    p = parse_polynomial("2u^15 + u^13 + u^9 + 48")
    assert p.terms == {15: 2, 13: 1, 9: 1, 0: 48}
    assert parse_polynomial("u**33 + 8*u**6") == parse_polynomial("u^33 + 8u^6")
    assert p.evaluate(1) == 52
    assert p.to_sympy().subs("u", 2) == p.evaluate(2)


def test_parse_polynomial_rejects_non_counting_terms():
    with pytest.raises(ValidationError):
        parse_polynomial("u^2 - u")
    with pytest.raises(ValueError, match="non-integer"):
        parse_polynomial("u/2")


def test_dot_export(bouquet_colorings):
    q = build_quiver(bouquet_colorings, _endos(4, (1, 4, 4, 1)))
    dot = export_dot(q)
    assert dot.startswith("digraph quiver {")
    assert 'v0 [label="(1, 1, 1, 1)"]' in dot
    assert dot.count("->") == 4
    assert "v3 -> v0 [label=phi1]" in dot
    assert dot == export_dot(q)


def test_json_lines_export(bouquet_colorings):
    q = build_quiver(bouquet_colorings, _endos(4, (1, 4, 4, 1)))
    records = [json.loads(line) for line in export_json_lines(q).splitlines()]
    assert len(records) == 8
    assert records[0] == {"kind": "vertex", "tuple": [1, 1, 1, 1], "indegree": 4}
    assert records[-1] == {"kind": "edge", "source": [4, 4, 4, 4], "target": [1, 1, 1, 1], "endo": [1, 4, 4, 1]}


def _cycle_quiver(order):
    colorings = ColoringSet(semiarc_count=1, colorings=tuple((v,) for v in range(1, len(order) + 1)))
    edges = tuple(Edge(order[i], order[(i + 1) % len(order)], 0) for i in range(len(order)))
    return Quiver(colorings=colorings, endos=_endos(4, (2, 3, 4, 1)), edges=edges)


def test_isomorphism_ignores_vertex_labels():
    assert quivers_isomorphic(_cycle_quiver([0, 1, 2, 3]), _cycle_quiver([2, 0, 3, 1]))


def test_isomorphism_sees_past_degrees():
    cycle = _cycle_quiver([0, 1, 2, 3])
    pairs = cycle.model_copy(update={"edges": (Edge(0, 1, 0), Edge(1, 0, 0), Edge(2, 3, 0), Edge(3, 2, 0))})
    assert sorted(pairs.in_degrees()) == sorted(cycle.in_degrees())
    assert not quivers_isomorphic(cycle, pairs)


def test_isomorphism_bound():
    cycle = _cycle_quiver([0, 1, 2, 3])
    with pytest.raises(BoundExceededError):
        quivers_isomorphic(cycle, cycle, limit=2)


def test_networkx_view_keeps_parallel_edges(bouquet_colorings):
    q = build_quiver(bouquet_colorings, _endos(4, (1, 1, 1, 1), (1, 4, 4, 1)))
    graph = quiver_to_networkx(q)
    assert graph.number_of_edges() == 8
    assert graph.number_of_edges(0, 0) == 2


@settings(max_examples=20, deadline=None)
@given(
    moves=st.lists(st.sampled_from(["r1+", "r1-", "r2"]), min_size=1, max_size=3),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_quiver_survives_reidemeister_moves(corpus, moves, seed):
    alg = corpus.algebra("qui1")
    endos = enumerate_endomorphisms(alg)
    d = corpus.diagram("1l1")
    before = build_quiver(enumerate_colorings(alg, d), endos)
    after = build_quiver(enumerate_colorings(alg, perturb(d, moves, seed)), endos)
    assert in_degree_polynomial(after) == in_degree_polynomial(before)
    assert quivers_isomorphic(after, before)


def test_dot_export_of_empty_quiver():
    q = build_quiver(ColoringSet(semiarc_count=1, colorings=()), _endos(2, (1, 2)))
    assert export_dot(q).split() == ["digraph", "quiver", "{", "}"]
    assert str(in_degree_polynomial(q)) == "0"


@pytest.fixture(scope="module")
def alexander_endos(corpus):
    return {name: enumerate_endomorphisms(corpus.algebra(name)) for name in ("alexander-9-7-2", "alexander-9-4-5")}


@settings(max_examples=100, deadline=None)
@given(
    moves=st.lists(st.sampled_from(["r1+", "r1-", "r2"]), min_size=1, max_size=3),
    seed=st.integers(min_value=0, max_value=10_000),
)
@pytest.mark.parametrize(
    "algebra, diagram",
    [
        ("alexander-9-7-2", "3_1"),
        ("alexander-9-4-5", "3_1"),
        ("alexander-9-7-2", "v2.1"),
        ("alexander-9-4-5", "v2.1"),
        ("alexander-9-7-2", "unlink2"),
        ("alexander-9-4-5", "unlink2"),
    ],
)
def test_alexander_quivers_survive_reidemeister_moves(corpus, alexander_endos, algebra, diagram, moves, seed):
    alg, d = corpus.algebra(algebra), corpus.diagram(diagram)
    endos = alexander_endos[algebra]
    before = enumerate_colorings(alg, d)
    after = enumerate_colorings(alg, perturb(d, moves, seed))
    assert after.count == before.count, f"count changed after {moves} with seed {seed}"
    assert in_degree_polynomial(build_quiver(after, endos)) == in_degree_polynomial(build_quiver(before, endos))


@pytest.mark.parametrize("algebra", ["alexander-9-7-2", "alexander-9-4-5"])
def test_cyclic_coloring_module_gives_the_nine_coloring_polynomial(corpus, alexander_endos, algebra):
    # every coloring is a multiple of the one with last semiarc 1, so the colorings form Z_9
    alg = corpus.algebra(algebra)
    found = enumerate_colorings(alg, parse_diagram("O1- O2- O3- U1- U2- U3-"))
    assert found.count == 9
    assert len(alexander_endos[algebra]) == 9
    assert str(in_degree_polynomial(build_quiver(found, alexander_endos[algebra]))) == "u^21 + 2u^12 + 6u^6"
