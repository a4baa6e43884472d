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

"""Oriented signed Gauss codes with singular, pre and virtual passes."""

from enum import Enum
from typing import Optional, Set, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class PassKind(str, Enum):
    CLASSICAL_OVER = "classical_over"
    CLASSICAL_UNDER = "classical_under"
    SINGULAR = "singular"
    PRE = "pre"
    VIRTUAL = "virtual"

    @property
    def crossing_kind(self) -> "CrossingKind":
        if self in (PassKind.CLASSICAL_OVER, PassKind.CLASSICAL_UNDER):
            return CrossingKind.CLASSICAL
        return CrossingKind(self.value)


class CrossingKind(str, Enum):
    CLASSICAL = "classical"
    SINGULAR = "singular"
    PRE = "pre"
    VIRTUAL = "virtual"


class Sign(str, Enum):
    POSITIVE = "+"
    NEGATIVE = "-"


class Role(str, Enum):
    A = "a"
    B = "b"


class DiagramKind(str, Enum):
    CLASSICAL = "classical"
    VIRTUAL = "virtual"
    SINGULAR = "singular"
    PSEUDO = "pseudo"
    MIXED = "mixed"


_LETTERS = {
    PassKind.CLASSICAL_OVER: "O",
    PassKind.CLASSICAL_UNDER: "U",
    PassKind.SINGULAR: "S",
    PassKind.PRE: "P",
    PassKind.VIRTUAL: "V",
}


class CrossingPass(BaseModel):
    """One passage of a component through a crossing."""

    model_config = ConfigDict(frozen=True)

    kind: PassKind
    crossing_id: int
    sign: Optional[Sign] = None
    role: Optional[Role] = None

    @model_validator(mode="after")
    def _check_decorations(self) -> "CrossingPass":
        if self.crossing_id < 1:
            raise ValueError("crossing ids are positive integers")
        kind = self.kind.crossing_kind
        if kind is CrossingKind.VIRTUAL:
            if self.sign is not None or self.role is not None:
                raise ValueError("virtual passes carry neither sign nor role")
        elif self.sign is None:
            raise ValueError(f"{self.kind.value} pass needs a sign")
        elif kind is CrossingKind.CLASSICAL and self.role is not None:
            raise ValueError("classical passes carry no role")
        elif kind in (CrossingKind.SINGULAR, CrossingKind.PRE) and self.role is None:
            raise ValueError(f"{self.kind.value} pass needs a role")
        return self

    @property
    def is_virtual(self) -> bool:
        return self.kind is PassKind.VIRTUAL

    @property
    def token(self) -> str:
        role = self.role.value if self.role is not None else ""
        sign = self.sign.value if self.sign is not None else ""
        return f"{_LETTERS[self.kind]}{role}{self.crossing_id}{sign}"


Component = Tuple[CrossingPass, ...]


class DiagramCode(BaseModel):
    model_config = ConfigDict(frozen=True)

    components: Tuple[Component, ...]

    @property
    def kind(self) -> DiagramKind:
        kinds = {p.kind.crossing_kind for comp in self.components for p in comp}
        if CrossingKind.SINGULAR in kinds and CrossingKind.PRE in kinds:
            return DiagramKind.MIXED
        if CrossingKind.SINGULAR in kinds:
            return DiagramKind.SINGULAR
        if CrossingKind.PRE in kinds:
            return DiagramKind.PSEUDO
        if CrossingKind.VIRTUAL in kinds:
            return DiagramKind.VIRTUAL
        return DiagramKind.CLASSICAL

    @property
    def crossing_ids(self) -> Tuple[int, ...]:
        return tuple(sorted({p.crossing_id for comp in self.components for p in comp}))

    def crossing_kinds(self) -> Set[CrossingKind]:
        return {p.kind.crossing_kind for comp in self.components for p in comp if not p.is_virtual}

    @property
    def non_virtual_pass_count(self) -> int:
        return sum(1 for comp in self.components for p in comp if not p.is_virtual)


class Semiarc(BaseModel):
    """A stretch of one component between consecutive non-virtual passes.

    `from_pass` and `to_pass` are positions in the component's pass list; both
    are None on a component without non-virtual passes.
    """

    model_config = ConfigDict(frozen=True)

    index: int
    component: int
    from_pass: Optional[int] = None
    to_pass: Optional[int] = None


class CrossingConstraint(BaseModel):
    """Semiarc slots at one crossing. For classical crossings `a` is the under strand."""

    model_config = ConfigDict(frozen=True)

    crossing_id: int
    kind: CrossingKind
    sign: Sign
    in_a: int
    in_b: int
    out_a: int
    out_b: int

    @property
    def slots(self) -> Tuple[int, int, int, int]:
        return (self.in_a, self.in_b, self.out_a, self.out_b)
