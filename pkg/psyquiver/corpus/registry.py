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

"""Registry of the bundled algebras, diagrams, endomorphism sets and expected tables."""

import logging
import os
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import yaml
from pydantic import BaseModel, Field

from ..algebra import (
    FiniteAlgebra,
    classical_fragment,
    make_alexander_biquandle,
    make_jablan_psyquandle,
    parse_algebra,
)
from ..config import configs
from ..diagram import DiagramCode, parse_diagram
from ..endo import EndoSet, parse_endo_set

logger = logging.getLogger(__name__)

_CONSTRUCTORS = {
    "alexander": make_alexander_biquandle,
    "jablan": make_jablan_psyquandle,
}


class AlgebraEntry(BaseModel):
    name: str
    provenance: str
    file: Optional[str] = None
    constructor: Optional[Literal["alexander", "jablan"]] = None
    params: Optional[Tuple[int, int, int]] = None
    derived_from: Optional[str] = None
    pi_adequate: Optional[bool] = None
    # axioms the printed tables are known to violate
    failed_axioms: List[str] = Field(default_factory=list)


class CorpusEntry(BaseModel):
    """A diagram transcription and where it comes from."""
    name: str
    provenance: str
    file: str
    tuple_order: Optional[List[int]] = None


class EndoEntry(BaseModel):
    name: str
    provenance: str
    file: str
    algebra: str


class TableRow(BaseModel):
    name: str
    expected: str
    diagram: Optional[str] = None
    count: Optional[int] = None
    algebra: Optional[str] = None
    endos: Optional[str] = None
    orientation: Literal["fixed", "search"] = "fixed"


class ExpectedTable(BaseModel):
    id: str
    description: str
    algebra: str
    endos: str
    rows: List[TableRow] = Field(default_factory=list)


def _named(raw: Optional[dict]) -> Dict[str, dict]:
    return {str(name): {"name": str(name), **fields} for name, fields in (raw or {}).items()}


class Corpus:
    def __init__(self, root: Optional[str] = None):
        self.root = root or configs.corpus_dir
        with open(os.path.join(self.root, "corpus.yaml"), encoding="utf-8") as f:
            raw = yaml.safe_load(f) or {}
        self.algebras = {k: AlgebraEntry(**v) for k, v in _named(raw.get("algebras")).items()}
        self.diagrams = {k: CorpusEntry(**v) for k, v in _named(raw.get("diagrams")).items()}
        self.endo_sets = {k: EndoEntry(**v) for k, v in _named(raw.get("endos")).items()}

        tables_path = os.path.join(self.root, "tables.yaml")
        tables_raw = {}
        if os.path.exists(tables_path):
            with open(tables_path, encoding="utf-8") as f:
                tables_raw = yaml.safe_load(f) or {}
        self.tables = {
            str(k): ExpectedTable(id=str(k), **v) for k, v in tables_raw.items()
        }
        logger.info(
            f"Loaded corpus from {self.root}: {len(self.algebras)} algebras, "
            f"{len(self.diagrams)} diagrams, {len(self.tables)} tables"
        )

    def _read(self, relative: str) -> str:
        with open(os.path.join(self.root, relative), encoding="utf-8") as f:
            return f.read()

    def algebra(self, name: str) -> FiniteAlgebra:
        entry = self.algebras[name]
        if entry.derived_from is not None:
            return classical_fragment(self.algebra(entry.derived_from))
        if entry.constructor is not None:
            return _CONSTRUCTORS[entry.constructor](*entry.params)
        return parse_algebra(self._read(entry.file))

    def diagram(self, name: str) -> DiagramCode:
        return parse_diagram(self._read(self.diagrams[name].file))

    def endos(self, name: str, alg: Optional[FiniteAlgebra] = None) -> EndoSet:
        entry = self.endo_sets[name]
        alg = alg if alg is not None else self.algebra(entry.algebra)
        return parse_endo_set(alg, self._read(entry.file))

    def table(self, table_id: str) -> ExpectedTable:
        return self.tables[table_id]

    def figure_order(self, name: str, coloring: Sequence[int]) -> Tuple[int, ...]:
        """Reorders a coloring into the semiarc labeling of the published figure."""
        order = self.diagrams[name].tuple_order
        if order is None:
            return tuple(coloring)
        return tuple(coloring[i] for i in order)
