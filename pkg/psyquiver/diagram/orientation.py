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

"""Reversing the orientation of chosen components.

A classical crossing between a reversed and a kept strand changes sign. A
singular crossing or precrossing in the same position is the standard one
turned a quarter, so its roles swap. Crossings whose strands are both reversed
keep sign and roles.
"""

import itertools
from collections import Counter
from typing import AbstractSet, Iterator, Tuple

from .model import CrossingKind, CrossingPass, DiagramCode, Role, Sign


def _reoriented(p: CrossingPass, mixed: bool) -> CrossingPass:
    if not mixed or p.is_virtual:
        return p
    if p.kind.crossing_kind is CrossingKind.CLASSICAL:
        flipped = Sign.NEGATIVE if p.sign is Sign.POSITIVE else Sign.POSITIVE
        return p.model_copy(update={"sign": flipped})
    swapped = Role.B if p.role is Role.A else Role.A
    return p.model_copy(update={"role": swapped})


def reverse_components(d: DiagramCode, reversed_components: AbstractSet[int]) -> DiagramCode:
    reversed_passes = Counter(
        p.crossing_id
        for c, component in enumerate(d.components)
        if c in reversed_components
        for p in component
    )
    components = []
    for c, component in enumerate(d.components):
        passes = [_reoriented(p, reversed_passes[p.crossing_id] == 1) for p in component]
        if c in reversed_components:
            passes.reverse()
        components.append(tuple(passes))
    return DiagramCode(components=tuple(components))


def orientations(d: DiagramCode) -> Iterator[Tuple[Tuple[int, ...], DiagramCode]]:
    """Every choice of reversed components, as (reversed indices, diagram), starting with the diagram itself."""
    count = len(d.components)
    for size in range(count + 1):
        for chosen in itertools.combinations(range(count), size):
            yield chosen, reverse_components(d, set(chosen))
