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

import logging
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel

from ..algebra import FiniteAlgebra
from ..coloring import enumerate_colorings
from ..diagram import DiagramCode, orientations
from ..endo import EndoMap, EndoSet, enumerate_endomorphisms
from ..quiver import InDegreePolynomial, build_quiver, in_degree_polynomial, parse_polynomial
from .registry import Corpus, TableRow

logger = logging.getLogger(__name__)


class RowStatus(str, Enum):
    MATCH = "MATCH"
    MISMATCH = "MISMATCH"
    SKIPPED = "SKIPPED"


class RowResult(BaseModel):
    name: str
    status: RowStatus
    expected: str
    computed: Optional[str] = None
    count: Optional[int] = None
    reversed_components: Optional[Tuple[int, ...]] = None
    note: Optional[str] = None


class TableReport(BaseModel):
    table_id: str
    description: str
    rows: List[RowResult]

    @property
    def ok(self) -> bool:
        return all(r.status is not RowStatus.MISMATCH for r in self.rows)

    def tally(self) -> Dict[RowStatus, int]:
        return {s: sum(r.status is s for r in self.rows) for s in RowStatus}


def resolve_endos(corpus: Corpus, source: str, alg: FiniteAlgebra) -> EndoSet:
    if source == "all":
        return enumerate_endomorphisms(alg)
    if source == "identity":
        return EndoSet.of(alg.n, [EndoMap.identity(alg.n)])
    return corpus.endos(source, alg)


def quiver_polynomial(alg: FiniteAlgebra, d: DiagramCode, endos: EndoSet) -> Tuple[InDegreePolynomial, int]:
    colorings = enumerate_colorings(alg, d)
    polynomial = in_degree_polynomial(build_quiver(colorings, endos))
    return polynomial, colorings.count


def _run_row(corpus: Corpus, row: TableRow, algebra: str, endos: str, cache: dict) -> RowResult:
    if row.diagram is None:
        return RowResult(name=row.name, status=RowStatus.SKIPPED, expected=row.expected,
                         note="no transcription in the corpus")
    key = (algebra, endos)
    if key not in cache:
        alg = corpus.algebra(algebra)
        cache[key] = (alg, resolve_endos(corpus, endos, alg))
    alg, endo_set = cache[key]
    expected = parse_polynomial(row.expected)
    d = corpus.diagram(row.diagram)

    candidates = orientations(d) if row.orientation == "search" else [((), d)]
    first = None
    for reversed_components, oriented in candidates:
        polynomial, count = quiver_polynomial(alg, oriented, endo_set)
        result = RowResult(
            name=row.name,
            status=RowStatus.MATCH if polynomial == expected else RowStatus.MISMATCH,
            expected=row.expected,
            computed=str(polynomial),
            count=count,
            reversed_components=reversed_components,
        )
        if row.count is not None and count != row.count:
            result = result.model_copy(update={"status": RowStatus.MISMATCH,
                                               "note": f"expected {row.count} colorings"})
        if result.status is RowStatus.MATCH:
            return result
        first = first or result
    return first


def reproduce_table(corpus: Corpus, table_id: str) -> TableReport:
    table = corpus.table(table_id)
    cache: dict = {}
    rows = [
        _run_row(corpus, row, row.algebra or table.algebra, row.endos or table.endos, cache)
        for row in table.rows
    ]
    report = TableReport(table_id=table_id, description=table.description, rows=rows)
    logger.info(f"{table_id}: {report.tally()}")
    return report
