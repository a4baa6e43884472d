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

"""Diagram file codec.

One line per component, whitespace separated passes:

    O1+ U2+ O3+ U1+ O2+ U3+     # classical over/under with crossing sign
    Sa1+ Sb1 Pa2- Pb2-          # singular / pre passes, role a or b, sign defaults to +
    V4                          # virtual pass
    ()                          # a component without crossings
"""

import logging
import re
from collections import defaultdict
from typing import Dict, List, Optional, Tuple

from ..errors import DiagramParseError
from ..utils import content_lines, tokens_with_columns
from .model import CrossingKind, CrossingPass, DiagramCode, PassKind, Role, Sign

logger = logging.getLogger(__name__)

EMPTY_COMPONENT = "()"

_PASS_TOKEN = re.compile(r"^(?:(?P<cls>[OU])|(?P<rigid>[SP])(?P<role>[ab])|(?P<virt>V))(?P<id>\d+)(?P<sign>[+\-−])?$")

_KINDS = {"O": PassKind.CLASSICAL_OVER, "U": PassKind.CLASSICAL_UNDER, "S": PassKind.SINGULAR, "P": PassKind.PRE}


def parse_pass(token: str, line: Optional[int] = None, column: Optional[int] = None) -> CrossingPass:
    match = _PASS_TOKEN.match(token)
    if match is None:
        raise DiagramParseError(f"unrecognised pass {token!r}", line=line, column=column)
    crossing_id = int(match["id"])
    if crossing_id < 1:
        raise DiagramParseError(f"crossing ids are positive, got {crossing_id}", line=line, column=column)
    sign = match["sign"]
    if sign == "−":
        sign = "-"
    if match["virt"]:
        if sign is not None:
            raise DiagramParseError(f"virtual pass {token!r} takes no sign", line=line, column=column)
        return CrossingPass(kind=PassKind.VIRTUAL, crossing_id=crossing_id)
    if match["cls"]:
        if sign is None:
            raise DiagramParseError(f"classical pass {token!r} needs a sign", line=line, column=column)
        return CrossingPass(kind=_KINDS[match["cls"]], crossing_id=crossing_id, sign=Sign(sign))
    return CrossingPass(
        kind=_KINDS[match["rigid"]],
        crossing_id=crossing_id,
        sign=Sign(sign or "+"),
        role=Role(match["role"]),
    )


def _check_crossings(located: Dict[int, List[Tuple[CrossingPass, int, int]]]) -> None:
    """Every id twice, consistent kinds, complementary over/under or roles, equal signs."""
    for crossing_id, occurrences in sorted(located.items()):
        _, line, column = occurrences[-1]
        if len(occurrences) != 2:
            raise DiagramParseError(
                f"crossing {crossing_id} appears {len(occurrences)} times, expected 2",
                line=line, column=column,
            )
        (first, _, _), (second, _, _) = occurrences
        kind = first.kind.crossing_kind
        if second.kind.crossing_kind is not kind:
            raise DiagramParseError(
                f"crossing {crossing_id} mixes {kind.value} and {second.kind.crossing_kind.value} passes",
                line=line, column=column,
            )
        if kind is CrossingKind.VIRTUAL:
            continue
        if kind is CrossingKind.CLASSICAL and first.kind is second.kind:
            which = "overs" if first.kind is PassKind.CLASSICAL_OVER else "unders"
            raise DiagramParseError(f"crossing {crossing_id} has two {which}", line=line, column=column)
        if kind is not CrossingKind.CLASSICAL and first.role is second.role:
            raise DiagramParseError(
                f"crossing {crossing_id} has two role-{first.role.value} passes", line=line, column=column
            )
        if first.sign is not second.sign:
            raise DiagramParseError(f"crossing {crossing_id} has mismatched signs", line=line, column=column)


def check_diagram(d: DiagramCode) -> DiagramCode:
    """Structural checks for codes built in memory rather than parsed."""
    if not d.components:
        raise DiagramParseError("no components")
    located: Dict[int, List[Tuple[CrossingPass, int, int]]] = defaultdict(list)
    for c, component in enumerate(d.components, start=1):
        for p, crossing_pass in enumerate(component, start=1):
            located[crossing_pass.crossing_id].append((crossing_pass, c, p))
    _check_crossings(located)
    return d


def parse_diagram(text: str) -> DiagramCode:
    components = []
    located: Dict[int, List[Tuple[CrossingPass, int, int]]] = defaultdict(list)
    for line_number, line in content_lines(text):
        component = []
        tokens = list(tokens_with_columns(line))
        if [t for _, t in tokens] == [EMPTY_COMPONENT]:
            components.append(())
            continue
        for column, token in tokens:
            crossing_pass = parse_pass(token, line=line_number, column=column)
            located[crossing_pass.crossing_id].append((crossing_pass, line_number, column))
            component.append(crossing_pass)
        components.append(tuple(component))
    if not components:
        raise DiagramParseError("no components")
    _check_crossings(located)

    diagram = DiagramCode(components=tuple(components))
    logger.debug(
        f"Parsed {diagram.kind.value} diagram: {len(components)} components, "
        f"{len(located)} crossings"
    )
    return diagram


def serialize_diagram(d: DiagramCode) -> str:
    lines = []
    for component in d.components:
        lines.append(" ".join(p.token for p in component) if component else EMPTY_COMPONENT)
    return "\n".join(lines) + "\n"
