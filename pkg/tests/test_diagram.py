import pytest

from psyquiver.diagram import (
    CrossingKind,
    DiagramKind,
    Semiarc,
    Sign,
    check_diagram,
    crossing_constraints,
    orientations,
    parse_diagram,
    perturb,
    reverse_components,
    semiarcs,
    serialize_diagram,
)
from psyquiver.errors import DiagramParseError


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "no components"),
        ("# nothing here\n", "no components"),
        ("O1+ U2+", "crossing 1 appears 1 times"),
        ("O1+ O1+", "two overs"),
        ("U1- U1-", "two unders"),
        ("Sa1+ Pb1+", "mixes singular and pre"),
        ("Sa1 Sa1", "two role-a passes"),
        ("O1+ U1-", "mismatched signs"),
        ("O1 U1+", "needs a sign"),
        ("V1+ V1", "takes no sign"),
        ("X1+ U1+", "unrecognised pass"),
        ("O0+ U0+", "crossing ids are positive"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(DiagramParseError, match=message):
        parse_diagram(text)


def test_parse_error_location():
    with pytest.raises(DiagramParseError) as info:
        parse_diagram("O1+ U1+\nO2+ Q2+\n")
    assert (info.value.line, info.value.column) == (2, 5)


def test_unicode_minus_and_defaults():
    d = parse_diagram("O1− U1−\nSa2 Sb2")
    assert d.components[0][0].sign is Sign.NEGATIVE
    assert d.components[1][0].sign is Sign.POSITIVE
    assert d.kind is DiagramKind.SINGULAR


def test_kinds(corpus):
    assert corpus.diagram("3_1").kind is DiagramKind.CLASSICAL
    assert corpus.diagram("1l1").kind is DiagramKind.SINGULAR
    assert corpus.diagram("3_1.1").kind is DiagramKind.PSEUDO
    assert parse_diagram("O1+ V2 U1+ V2").kind is DiagramKind.VIRTUAL
    assert parse_diagram("Sa1 Pa2 Sb1 Pb2").kind is DiagramKind.MIXED


def test_serialize(bouquet):
    assert serialize_diagram(bouquet) == "Sa1+ O2+\nSb1+ U2+\n"
    assert serialize_diagram(parse_diagram("()\n()")) == "()\n()\n"


def test_bouquet_constraints(bouquet):
    singular, classical = crossing_constraints(bouquet)
    assert singular.kind is CrossingKind.SINGULAR
    assert singular.slots == (1, 3, 0, 2)
    assert classical.kind is CrossingKind.CLASSICAL
    # strand a is the under strand, on the second component
    assert classical.slots == (2, 0, 3, 1)


def test_semiarc_order_follows_components(bouquet):
    arcs = semiarcs(bouquet)
    assert [(a.index, a.component) for a in arcs] == [(0, 0), (1, 0), (2, 1), (3, 1)]
    assert (arcs[0].from_pass, arcs[0].to_pass) == (0, 1)


def test_virtual_passes_are_transparent():
    plain = parse_diagram("O1+ U2- O3+ U1+ O2- U3+")
    with_virtuals = parse_diagram("V9 O1+ U2- V8 O3+ V9 U1+ O2- V8 U3+")
    assert len(semiarcs(with_virtuals)) == 6
    assert crossing_constraints(with_virtuals) == crossing_constraints(plain)


def test_crossingless_components(unknot):
    assert semiarcs(unknot) == [Semiarc(index=0, component=0)]
    assert crossing_constraints(unknot) == []
    assert len(semiarcs(parse_diagram("()\n()"))) == 2
    assert len(semiarcs(parse_diagram("V1 V1"))) == 1


def test_check_diagram_rejects_empty():
    with pytest.raises(DiagramParseError):
        check_diagram(parse_diagram("()").model_copy(update={"components": ()}))


def test_perturb_is_deterministic(trefoil):
    first = perturb(trefoil, ["r1+"], seed=7)
    assert sum(len(c) for c in first.components) == 8
    assert first == perturb(trefoil, ["r1+"], seed=7)
    assert first.crossing_ids == (1, 2, 3, 4)
    check_diagram(first)


def test_perturb_r2_on_unknot(unknot):
    d = perturb(unknot, ["r2"], seed=0)
    assert len(d.components[0]) == 4
    assert d.crossing_ids == (1, 2)
    assert parse_diagram(serialize_diagram(d)) == d


def test_perturb_rejects_unknown_move(trefoil):
    with pytest.raises(ValueError):
        perturb(trefoil, ["r3"], seed=0)


def test_reversing_a_knot_keeps_signs(trefoil):
    reversed_trefoil = reverse_components(trefoil, {0})
    assert serialize_diagram(reversed_trefoil) == "U3+ O2+ U1+ O3+ U2+ O1+\n"


def test_reversing_one_component_of_a_link(bouquet):
    d = reverse_components(bouquet, {1})
    assert serialize_diagram(d) == "Sb1+ O2-\nU2- Sa1+\n"
    check_diagram(d)


def test_orientations_start_with_the_diagram(bouquet):
    found = list(orientations(bouquet))
    assert [chosen for chosen, _ in found] == [(), (0,), (1,), (0, 1)]
    assert found[0][1] == bouquet
