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

"""Semiarc extraction and per-crossing coloring slots.

Semiarc j of a component starts at its j-th non-virtual pass and runs to the
next one, cyclically. Virtual passes do not cut semiarcs.
"""

import logging
from collections import defaultdict
from typing import Dict, List, Tuple

from .model import CrossingConstraint, CrossingKind, DiagramCode, PassKind, Role, Semiarc

logger = logging.getLogger(__name__)

# (component, position) -> (in-semiarc, out-semiarc)
PassSlots = Dict[Tuple[int, int], Tuple[int, int]]


def _layout(d: DiagramCode) -> Tuple[List[Semiarc], PassSlots]:
    arcs: List[Semiarc] = []
    slots: PassSlots = {}
    for c, component in enumerate(d.components):
        positions = [i for i, p in enumerate(component) if not p.is_virtual]
        offset = len(arcs)
        if not positions:
            arcs.append(Semiarc(index=offset, component=c))
            continue
        m = len(positions)
        for j, position in enumerate(positions):
            arcs.append(Semiarc(
                index=offset + j,
                component=c,
                from_pass=position,
                to_pass=positions[(j + 1) % m],
            ))
            slots[(c, position)] = (offset + (j - 1) % m, offset + j)
    return arcs, slots


def semiarcs(d: DiagramCode) -> List[Semiarc]:
    return _layout(d)[0]


def crossing_constraints(d: DiagramCode) -> List[CrossingConstraint]:
    """One constraint per non-virtual crossing, ordered by crossing id.

    Strand a is the under strand of a classical crossing and the role-a strand
    of a singular or pre crossing.
    """
    _, slots = _layout(d)
    strands: Dict[int, Dict[str, Tuple[int, int]]] = defaultdict(dict)
    passes = {}
    for c, component in enumerate(d.components):
        for position, crossing_pass in enumerate(component):
            if crossing_pass.is_virtual:
                continue
            if crossing_pass.kind is PassKind.CLASSICAL_UNDER or crossing_pass.role is Role.A:
                strand = "a"
            else:
                strand = "b"
            strands[crossing_pass.crossing_id][strand] = slots[(c, position)]
            passes[crossing_pass.crossing_id] = crossing_pass

    constraints = []
    for crossing_id in sorted(strands):
        crossing_pass = passes[crossing_id]
        (in_a, out_a), (in_b, out_b) = strands[crossing_id]["a"], strands[crossing_id]["b"]
        constraints.append(CrossingConstraint(
            crossing_id=crossing_id,
            kind=crossing_pass.kind.crossing_kind,
            sign=crossing_pass.sign,
            in_a=in_a,
            in_b=in_b,
            out_a=out_a,
            out_b=out_b,
        ))
    logger.debug(
        f"{len(constraints)} crossing constraints "
        f"({sum(c.kind is CrossingKind.CLASSICAL for c in constraints)} classical)"
    )
    return constraints
