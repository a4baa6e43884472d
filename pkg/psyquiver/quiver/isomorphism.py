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
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import MultiDiGraphMatcher

from ..config import configs
from ..errors import BoundExceededError
from .model import Quiver

logger = logging.getLogger(__name__)


def quiver_to_networkx(q: Quiver) -> nx.MultiDiGraph:
    """Nodes carry the coloring plus (indeg, outdeg, loops); parallel edges stay distinct."""
    graph = nx.MultiDiGraph()
    in_degrees, out_degrees, loops = q.in_degrees(), q.out_degrees(), q.loop_counts()
    for v, coloring in enumerate(q.colorings):
        graph.add_node(v, coloring=coloring, signature=(in_degrees[v], out_degrees[v], loops[v]))
    for edge in q.edges:
        graph.add_edge(edge.source, edge.target, endo=edge.endo)
    return graph


def _same_signature(a: dict, b: dict) -> bool:
    return a["signature"] == b["signature"]


def quivers_isomorphic(q1: Quiver, q2: Quiver, limit: Optional[int] = None) -> bool:
    """Exact test: a vertex bijection preserving every edge multiplicity, endomorphism labels ignored."""
    limit = configs.bounds.isomorphism_vertex_limit if limit is None else limit
    largest = max(q1.vertex_count, q2.vertex_count)
    if largest > limit:
        raise BoundExceededError(f"quiver with {largest} vertices exceeds the isomorphism bound {limit}")
    if q1.vertex_count != q2.vertex_count or len(q1.edges) != len(q2.edges):
        return False
    if sorted(q1.in_degrees()) != sorted(q2.in_degrees()):
        return False
    g1, g2 = quiver_to_networkx(q1), quiver_to_networkx(q2)
    matcher = MultiDiGraphMatcher(g1, g2, node_match=_same_signature)
    found = matcher.is_isomorphic()
    logger.debug(f"Isomorphism test on {largest} vertices: {found}")
    return found
