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

"""DOT and JSON-lines renderings of a quiver. Output order follows the canonical coloring order."""

import logging
from typing import Iterator, List, Literal

import graphviz
from pydantic import BaseModel

from ..utils import format_tuple
from .model import Quiver

logger = logging.getLogger(__name__)


def export_dot(q: Quiver, name: str = "quiver") -> str:
    dot = graphviz.Digraph(name=name)
    for v, coloring in enumerate(q.colorings):
        dot.node(f"v{v}", label=format_tuple(coloring))
    for edge in q.edges:
        dot.edge(f"v{edge.source}", f"v{edge.target}", label=f"phi{edge.endo + 1}")
    return dot.source


class VertexRecord(BaseModel):
    kind: Literal["vertex"] = "vertex"
    tuple: List[int]
    indegree: int


class EdgeRecord(BaseModel):
    kind: Literal["edge"] = "edge"
    source: List[int]
    target: List[int]
    endo: List[int]


def quiver_records(q: Quiver) -> Iterator[BaseModel]:
    in_degrees = q.in_degrees()
    for v, coloring in enumerate(q.colorings):
        yield VertexRecord(tuple=list(coloring), indegree=in_degrees[v])
    colorings = q.colorings.colorings
    for edge in q.edges:
        yield EdgeRecord(
            source=list(colorings[edge.source]),
            target=list(colorings[edge.target]),
            endo=list(q.endos.maps[edge.endo].images),
        )


def export_json_lines(q: Quiver) -> str:
    return "".join(record.model_dump_json() + "\n" for record in quiver_records(q))
