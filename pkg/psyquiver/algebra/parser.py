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

"""Reads and writes the block-matrix algebra file format.

    psyquandle 3
    2 2 2 | 2 2 2 | 3 3 3 | 3 3 3
    3 3 3 | 3 3 3 | 1 1 1 | 1 1 1
    1 1 1 | 1 1 1 | 2 2 2 | 2 2 2
"""

import logging

from ..errors import AlgebraParseError
from ..utils import content_lines, tokens_with_columns
from .tables import BASE_OPERATIONS, FiniteAlgebra, Flavor

logger = logging.getLogger(__name__)


def parse_algebra(text: str) -> FiniteAlgebra:
    lines = list(content_lines(text.replace("|", " ")))
    if not lines:
        raise AlgebraParseError("empty algebra file")

    header_line, header = lines[0]
    fields = header.split()
    if len(fields) != 2:
        raise AlgebraParseError("header must be '<flavor> <n>'", line=header_line, column=1)
    try:
        flavor = Flavor(fields[0].lower())
    except ValueError:
        raise AlgebraParseError(
            f"unknown flavor {fields[0]!r}, expected 'psyquandle' or 'biquandle'",
            line=header_line, column=1,
        ) from None
    try:
        n = int(fields[1])
    except ValueError:
        n = 0
    if n < 1:
        raise AlgebraParseError(f"carrier size must be a positive integer, got {fields[1]!r}",
                                line=header_line, column=header.index(fields[1]) + 1)

    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (body[-1][0] if body else header_line)
        raise AlgebraParseError(f"expected {n} rows, found {len(body)}", line=where)

    width = flavor.block_count * n
    rows = []
    for line_number, line in body:
        row = []
        for column, token in tokens_with_columns(line):
            try:
                value = int(token)
            except ValueError:
                raise AlgebraParseError(f"not an integer: {token!r}", line=line_number, column=column) from None
            if not 1 <= value <= n:
                raise AlgebraParseError(f"entry {value} outside 1..{n}", line=line_number, column=column)
            row.append(value)
        if len(row) != width:
            raise AlgebraParseError(f"expected {width} entries, found {len(row)}", line=line_number)
        rows.append(row)

    tables = [[row[b * n:(b + 1) * n] for row in rows] for b in range(flavor.block_count)]
    algebra = FiniteAlgebra.from_tables(flavor, tables)
    logger.debug(f"Parsed {flavor.value} of order {n}")
    return algebra


def serialize_algebra(alg: FiniteAlgebra) -> str:
    lines = [f"{alg.flavor.value} {alg.n}"]
    blocks = [alg.entries(op) for op in BASE_OPERATIONS[: alg.flavor.block_count]]
    for x in range(alg.n):
        lines.append(" ".join(" ".join(str(v) for v in block[x]) for block in blocks))
    return "\n".join(lines) + "\n"
