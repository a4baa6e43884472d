# Copyright 2025 Google LLC
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Command-line entry point.

Exit codes: 0 success or match, 1 domain failure (invalid algebra, rejected
endomorphism, mismatching table row), 2 unreadable or malformed input.
"""

import functools
import json
import logging
from typing import Optional

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from .algebra import (
    FiniteAlgebra,
    make_alexander_biquandle,
    make_jablan_psyquandle,
    parse_algebra,
    serialize_algebra,
    validate,
)
from .coloring import enumerate_colorings
from .config import configs
from .corpus import Corpus, RowStatus, reproduce_table
from .diagram import DiagramCode, Move, parse_diagram, perturb, serialize_diagram
from .endo import EndoMap, EndoSet, enumerate_endomorphisms, parse_endo_set, serialize_endo_set
from .errors import AlgebraParseError, DiagramParseError, PsyquiverError
from .quiver import build_quiver, export_dot, export_json_lines, in_degree_polynomial
from .utils import format_tuple

logger = logging.getLogger(__name__)
console = Console()

EXIT_DOMAIN = 1
EXIT_INPUT = 2


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise click.exceptions.Exit(_fail(f"cannot read {path}: {e.strerror}", EXIT_INPUT))


def _fail(message: str, code: int) -> int:
    click.echo(f"error: {message}", err=True)
    return code


def _load_algebra(path: str) -> FiniteAlgebra:
    return parse_algebra(_read(path))


def _load_diagram(path: str) -> DiagramCode:
    return parse_diagram(_read(path))


def _handle_errors(command):
    """Maps library exceptions onto the exit-code contract."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (AlgebraParseError, DiagramParseError) as e:
            raise click.exceptions.Exit(_fail(str(e), EXIT_INPUT))
        except PsyquiverError as e:
            raise click.exceptions.Exit(_fail(str(e), EXIT_DOMAIN))

    return wrapper


def _resolve_endos(source: str, alg: FiniteAlgebra) -> EndoSet:
    if source == "all":
        return enumerate_endomorphisms(alg)
    if source == "identity":
        return EndoSet.of(alg.n, [EndoMap.identity(alg.n)])
    if source.startswith("file:"):
        return parse_endo_set(alg, _read(source[len("file:"):]))
    raise click.BadParameter("expected all, identity or file:PATH", param_hint="--endos")


@click.group()
@click.option("--log-level", default=None, help="Overrides PSYQUIVER_LOG_LEVEL.")
def main(log_level: Optional[str]):
    """Psyquandle and biquandle coloring quivers for knot diagrams."""
    logging.basicConfig(
        level=(log_level or configs.log_level).upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
    )


@main.command("validate")
@click.argument("algebra_path")
@_handle_errors
def validate_cmd(algebra_path: str):
    """Checks an algebra file against the axioms."""
    alg = _load_algebra(algebra_path)
    report = validate(alg)

    table = Table(title=f"{alg.flavor.value} of order {alg.n}")
    table.add_column("axiom")
    table.add_column("violations", justify="right")
    counts = report.by_axiom()
    for axiom, count in counts.items():
        if axiom in report.skipped:
            status = "skipped"
        elif count == 0:
            status = "ok"
        else:
            status = str(count)
        if axiom in ("iv", "v", "vi") and not alg.is_psyquandle:
            continue
        table.add_row(axiom, status)
    console.print(table)
    for v in report.violations[:10]:
        console.print(
            f"  ({v.axiom}) {v.equation} at {format_tuple(v.witness)}: {v.lhs} != {v.rhs}",
            markup=False, soft_wrap=True,
        )

    if alg.is_psyquandle:
        adequacy = ", pI-adequate" if report.pi_adequate else ", not pI-adequate"
    else:
        adequacy = ""
    verdict = "valid" if report.valid else "invalid"
    click.echo(f"{verdict} {alg.flavor.value}{adequacy}")
    if not report.valid:
        raise click.exceptions.Exit(EXIT_DOMAIN)


@main.command()
@click.argument("algebra_path")
@click.argument("diagram_path")
@click.option("--list", "list_tuples", is_flag=True, help="Print every coloring.")
@click.option("--json", "as_json", is_flag=True, help="Print colorings as JSON lines.")
@_handle_errors
def colorings(algebra_path: str, diagram_path: str, list_tuples: bool, as_json: bool):
    """Counts the colorings of a diagram by an algebra."""
    found = enumerate_colorings(_load_algebra(algebra_path), _load_diagram(diagram_path))
    if as_json:
        for coloring in found:
            click.echo(json.dumps({"tuple": list(coloring)}))
        return
    click.echo(str(found.count))
    if list_tuples:
        for coloring in found:
            click.echo(format_tuple(coloring))


@main.command()
@click.argument("algebra_path")
@click.option("--check", "check_path", default=None, help="Verify an endomorphism file instead of enumerating.")
@_handle_errors
def endos(algebra_path: str, check_path: Optional[str]):
    """Lists the endomorphisms of an algebra, or checks a file of them."""
    alg = _load_algebra(algebra_path)
    if check_path is not None:
        found = parse_endo_set(alg, _read(check_path))
        click.echo(f"{len(found)} endomorphisms ok")
        return
    found = enumerate_endomorphisms(alg)
    click.echo(serialize_endo_set(found), nl=False)
    logger.info(f"{len(found)} endomorphisms")


@main.command()
@click.argument("algebra_path")
@click.argument("diagram_path")
@click.option("--endos", "endo_source", default="all", show_default=True, help="all, identity or file:PATH.")
@click.option("--dot", "dot_path", default=None, help="Write the quiver as DOT ('-' for stdout).")
@click.option("--poly", is_flag=True, help="Print the in-degree polynomial.")
@click.option("--json", "as_json", is_flag=True, help="Print vertices and edges as JSON lines.")
@_handle_errors
def quiver(algebra_path: str, diagram_path: str, endo_source: str, dot_path: Optional[str], poly: bool,
           as_json: bool):
    """Builds the coloring quiver of a diagram."""
    alg = _load_algebra(algebra_path)
    d = _load_diagram(diagram_path)
    q = build_quiver(enumerate_colorings(alg, d), _resolve_endos(endo_source, alg))

    if dot_path == "-":
        click.echo(export_dot(q), nl=False)
    elif dot_path is not None:
        with open(dot_path, "w", encoding="utf-8") as f:
            f.write(export_dot(q))
    if as_json:
        click.echo(export_json_lines(q), nl=False)
    if poly or (dot_path is None and not as_json):
        click.echo(str(in_degree_polynomial(q)))


@main.command()
@click.argument("kind", type=click.Choice(["alexander", "jablan"]))
@click.argument("n", type=int)
@click.argument("t", type=int)
@click.argument("s", type=int)
@_handle_errors
def gen(kind: str, n: int, t: int, s: int):
    """Writes the table file of a modular algebra."""
    make = make_alexander_biquandle if kind == "alexander" else make_jablan_psyquandle
    click.echo(serialize_algebra(make(n, t, s)), nl=False)


@main.command("perturb")
@click.argument("diagram_path")
@click.option("--moves", required=True, help="Comma-separated moves: r1+, r1-, r2.")
@click.option("--seed", default=0, show_default=True, type=int)
@_handle_errors
def perturb_cmd(diagram_path: str, moves: str, seed: int):
    """Applies seeded Reidemeister moves to a diagram."""
    sequence = [m.strip() for m in moves.split(",") if m.strip()]
    allowed = {m.value for m in Move}
    unknown = [m for m in sequence if m not in allowed]
    if unknown:
        raise click.BadParameter(f"unknown move {unknown[0]!r}", param_hint="--moves")
    if len(sequence) > configs.perturb_max_moves:
        raise click.BadParameter(f"at most {configs.perturb_max_moves} moves", param_hint="--moves")
    click.echo(serialize_diagram(perturb(_load_diagram(diagram_path), sequence, seed)), nl=False)


_STATUS_STYLE = {RowStatus.MATCH: "green", RowStatus.MISMATCH: "red", RowStatus.SKIPPED: "yellow"}


@main.command()
@click.argument("table_id")
@click.option("--corpus", "corpus_dir", default=None, help="Overrides PSYQUIVER_CORPUS_DIR.")
@_handle_errors
def reproduce(table_id: str, corpus_dir: Optional[str]):
    """Recomputes a table of expected polynomials from the corpus."""
    corpus = Corpus(corpus_dir)
    if table_id not in corpus.tables:
        raise click.BadParameter(f"choose from {', '.join(sorted(corpus.tables))}", param_hint="TABLE_ID")
    report = reproduce_table(corpus, table_id)

    table = Table(title=report.description)
    table.add_column("row")
    table.add_column("status")
    table.add_column("expected")
    table.add_column("computed")
    for row in report.rows:
        style = _STATUS_STYLE[row.status]
        table.add_row(row.name, f"[{style}]{row.status.value}[/{style}]", row.expected, row.computed or row.note or "")
    console.print(table)
    tally = report.tally()
    click.echo(" ".join(f"{status.value}={count}" for status, count in tally.items()))
    if not report.ok:
        raise click.exceptions.Exit(EXIT_DOMAIN)


if __name__ == "__main__":
    main()
