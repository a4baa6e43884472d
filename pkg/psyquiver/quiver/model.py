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

"""Coloring quivers: a vertex per coloring, an edge f -> phi∘f per endomorphism phi."""

import logging
from typing import List, NamedTuple, Tuple

from pydantic import BaseModel, ConfigDict

from ..coloring import ColoringSet
from ..endo import EndoSet
from ..errors import QuiverInvariantError
from ..utils import format_tuple

logger = logging.getLogger(__name__)


class Edge(NamedTuple):
    source: int
    target: int
    endo: int


class Quiver(BaseModel):
    """Vertices are indices into `colorings`; `endo` indexes into `endos`."""

    model_config = ConfigDict(frozen=True)

    colorings: ColoringSet
    endos: EndoSet
    edges: Tuple[Edge, ...]

    @property
    def vertex_count(self) -> int:
        return len(self.colorings)

    def in_degrees(self) -> List[int]:
        degrees = [0] * self.vertex_count
        for edge in self.edges:
            degrees[edge.target] += 1
        return degrees

    def out_degrees(self) -> List[int]:
        degrees = [0] * self.vertex_count
        for edge in self.edges:
            degrees[edge.source] += 1
        return degrees

    def loop_counts(self) -> List[int]:
        loops = [0] * self.vertex_count
        for edge in self.edges:
            if edge.source == edge.target:
                loops[edge.source] += 1
        return loops


def build_quiver(colorings: ColoringSet, endos: EndoSet) -> Quiver:
    edges = []
    for source, coloring in enumerate(colorings):
        for e, phi in enumerate(endos):
            image = phi.apply(coloring)
            if image not in colorings:
                raise QuiverInvariantError(
                    f"{phi} carries coloring {format_tuple(coloring)} to {format_tuple(image)}, "
                    f"which is not a coloring"
                )
            edges.append(Edge(source, colorings.index(image), e))

    quiver = Quiver(colorings=colorings, endos=endos, edges=tuple(edges))
    in_total = sum(quiver.in_degrees())
    if in_total != len(endos) * len(colorings):
        raise QuiverInvariantError(f"in-degree sum {in_total} != |S|·|V| = {len(endos) * len(colorings)}")
    logger.debug(f"Quiver with {quiver.vertex_count} vertices and {len(edges)} edges")
    return quiver
