import json
import os

import pytest
from click.testing import CliRunner

from psyquiver.algebra import OpId, op_apply, parse_algebra
from psyquiver.cli import main
from psyquiver.config import LOCAL_CORPUS_DIR


def data(*parts):
    return os.path.join(LOCAL_CORPUS_DIR, *parts)


QUI1 = data("algebras", "qui1.alg")
BOUQUET = data("diagrams", "1l1.gc")
TREFOIL = data("diagrams", "3_1.gc")


@pytest.fixture
def runner():
    return CliRunner()


def test_validate_reports_adequacy(runner):
    result = runner.invoke(main, ["validate", QUI1])
    assert result.exit_code == 0, result.output
    assert "valid psyquandle, pI-adequate" in result.output


def test_validate_mutated_table(runner, tmp_path):
    with open(QUI1, encoding="utf-8") as f:
        text = f.read().replace("1 1 1 1 | 1 1 1 1 | 1 1 1 1 | 1 1 1 1", "3 1 1 1 | 1 1 1 1 | 1 1 1 1 | 1 1 1 1")
    path = tmp_path / "mutated.alg"
    path.write_text(text)
    result = runner.invoke(main, ["validate", str(path)])
    assert result.exit_code == 1
    assert "invalid psyquandle" in result.output
    assert "column 1 of ul is a permutation" in result.output


@pytest.mark.parametrize("contents", ["", None])
def test_validate_unreadable_input(runner, tmp_path, contents):
    path = tmp_path / "empty.alg"
    if contents is not None:
        path.write_text(contents)
    result = runner.invoke(main, ["validate", str(path)])
    assert result.exit_code == 2


def test_colorings_count_and_list(runner):
    result = runner.invoke(main, ["colorings", QUI1, BOUQUET, "--list"])
    assert result.exit_code == 0, result.output
    lines = result.stdout.splitlines()
    assert lines[0] == "4"
    assert lines[1:] == ["(1, 1, 1, 1)", "(1, 1, 4, 4)", "(4, 4, 1, 1)", "(4, 4, 4, 4)"]


def test_colorings_json(runner):
    result = runner.invoke(main, ["colorings", QUI1, data("diagrams", "unknot.gc"), "--json"])
    lines = result.stdout.splitlines()
    assert [json.loads(line) for line in lines] == [{"tuple": [c]} for c in range(1, 5)]


def test_colorings_flavor_mismatch(runner):
    result = runner.invoke(main, ["colorings", data("algebras", "l7a4.alg"), BOUQUET])
    assert result.exit_code == 1
    assert "needs a psyquandle" in result.output


def test_quiver_polynomials(runner):
    phi = "file:" + data("endos", "qui1_phi.endo")
    result = runner.invoke(main, ["quiver", QUI1, BOUQUET, "--endos", phi, "--poly"])
    assert result.exit_code == 0, result.output
    assert result.stdout.strip() == "u^4 + 3"

    result = runner.invoke(main, ["quiver", QUI1, BOUQUET, "--endos", "identity"])
    assert result.stdout.strip() == "4u"


def test_quiver_dot_and_json(runner, tmp_path):
    dot_path = tmp_path / "q.dot"
    result = runner.invoke(main, ["quiver", QUI1, BOUQUET, "--endos", "identity", "--dot", str(dot_path), "--json"])
    assert result.exit_code == 0, result.output
    assert dot_path.read_text().startswith("digraph quiver {")
    assert len(result.stdout.splitlines()) == 8

    result = runner.invoke(main, ["quiver", QUI1, BOUQUET, "--endos", "identity", "--dot", "-"])
    assert result.stdout.startswith("digraph quiver {")
    assert "4u" not in result.stdout


def test_quiver_rejects_unknown_endo_source(runner):
    result = runner.invoke(main, ["quiver", QUI1, BOUQUET, "--endos", "some"])
    assert result.exit_code == 2


def test_gen_then_full_quiver(runner, tmp_path):
    result = runner.invoke(main, ["gen", "alexander", "9", "4", "5"])
    assert result.exit_code == 0, result.output
    path = tmp_path / "alex.alg"
    path.write_text(result.stdout)
    result = runner.invoke(main, ["quiver", str(path), data("diagrams", "v2.1.gc"), "--endos", "all", "--poly"])
    assert result.stdout.strip() == "u^15 + 2u^6"


def test_gen_alexander_table(runner):
    alg = parse_algebra(runner.invoke(main, ["gen", "alexander", "9", "7", "2"]).stdout)
    assert [op_apply(alg, OpId.OL, x, 5) for x in range(1, 10)] == [1, 3, 5, 7, 9, 2, 4, 6, 8]


def test_gen_rejects_even_jablan_modulus(runner):
    result = runner.invoke(main, ["gen", "jablan", "8", "1", "1"])
    assert result.exit_code == 1
    assert "modulus must be odd" in result.output


def test_perturb(runner):
    args = ["perturb", TREFOIL, "--moves", "r1+", "--seed", "7"]
    first = runner.invoke(main, args)
    assert first.exit_code == 0, first.output
    assert len(first.stdout.split()) == 8
    assert runner.invoke(main, args).stdout == first.stdout


def test_perturbed_count_is_unchanged(runner, tmp_path):
    moved = tmp_path / "moved.gc"
    moved.write_text(runner.invoke(main, ["perturb", BOUQUET, "--moves", "r2,r1-", "--seed", "3"]).stdout)
    before = runner.invoke(main, ["colorings", QUI1, BOUQUET]).stdout
    after = runner.invoke(main, ["colorings", QUI1, str(moved)]).stdout
    assert before == after == "4\n"


@pytest.mark.parametrize("moves", ["r3", ",".join(["r1+"] * 40)])
def test_perturb_rejects_bad_moves(runner, moves):
    assert runner.invoke(main, ["perturb", TREFOIL, "--moves", moves]).exit_code == 2


def test_endos_listing_and_check(runner):
    result = runner.invoke(main, ["endos", data("algebras", "jablan3.alg")])
    assert result.stdout.splitlines() == ["1 2 3", "2 3 1", "3 1 2"]

    result = runner.invoke(main, ["endos", QUI1, "--check", data("endos", "qui2_s.endo")])
    assert result.exit_code == 0
    assert "2 endomorphisms ok" in result.stdout


def test_endos_check_rejects(runner, tmp_path):
    path = tmp_path / "bad.endo"
    path.write_text("1 2 3 4\n2 2 2 2\n")
    result = runner.invoke(main, ["endos", QUI1, "--check", str(path)])
    assert result.exit_code == 1
    assert "line 2" in result.output


@pytest.mark.corpus
def test_reproduce_virtual_table(runner):
    result = runner.invoke(main, ["reproduce", "virtual-table"])
    assert result.exit_code == 0, result.output
    assert "MATCH=2 MISMATCH=0 SKIPPED=10" in result.stdout


def test_reproduce_unknown_table(runner):
    assert runner.invoke(main, ["reproduce", "no-such-table"]).exit_code == 2
