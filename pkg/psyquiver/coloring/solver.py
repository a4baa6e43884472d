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

"""Exact enumeration of X-colorings.

Every crossing is a table relation over its four slots (in_a, in_b, out_a,
out_b) with n^2 rows: two slots are free and the crossing map fixes the other
two. Every semiarc keeps a domain of still possible colors; after each
choice the domains are narrowed until each crossing is arc consistent, and the
search branches on the semiarc with the smallest domain.
"""

import itertools
import logging
from collections import deque
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..algebra import FiniteAlgebra
from ..config import configs
from ..diagram import CrossingConstraint, CrossingKind, DiagramCode, Sign, crossing_constraints, semiarcs
from ..errors import BoundExceededError, FlavorMismatchError

logger = logging.getLogger(__name__)

Coloring = Tuple[int, ...]


class ColoringSet(BaseModel):
    """Colorings as 1-based tuples in lexicographic order."""

    model_config = ConfigDict(frozen=True)

    semiarc_count: int
    colorings: Tuple[Coloring, ...]

    @property
    def count(self) -> int:
        return len(self.colorings)

    def __len__(self) -> int:
        return len(self.colorings)

    def __iter__(self) -> Iterator[Coloring]:
        return iter(self.colorings)

    def __contains__(self, coloring) -> bool:
        return tuple(coloring) in self.positions

    def index(self, coloring: Sequence[int]) -> int:
        return self.positions[tuple(coloring)]

    @cached_property
    def positions(self) -> Dict[Coloring, int]:
        return {c: i for i, c in enumerate(self.colorings)}

    @classmethod
    def from_assignments(cls, semiarc_count: int, assignments) -> "ColoringSet":
        colorings = sorted({tuple(int(v) + 1 for v in a) for a in assignments})
        return cls(semiarc_count=semiarc_count, colorings=tuple(colorings))


def check_flavor(alg: FiniteAlgebra, d: DiagramCode) -> None:
    """Raises unless the algebra carries the structure the diagram's crossings need."""
    alg.require_inverses()
    kinds = d.crossing_kinds()
    if CrossingKind.SINGULAR in kinds and CrossingKind.PRE in kinds:
        raise FlavorMismatchError("diagrams mixing singular crossings and precrossings are not supported")
    if kinds & {CrossingKind.SINGULAR, CrossingKind.PRE} and not alg.is_psyquandle:
        raise FlavorMismatchError(f"a {d.kind.value} diagram needs a psyquandle, got a biquandle")
    if CrossingKind.PRE in kinds and not alg.pi_adequate:
        raise FlavorMismatchError("precrossings need a pI-adequate psyquandle")


def crossing_relation(alg: FiniteAlgebra, kind: CrossingKind, sign: Sign) -> np.ndarray:
    """All valid (in_a, in_b, out_a, out_b) rows of one crossing type, 0-based, shape (n*n, 4).

    Positive:  S(in_a, out_b) = (in_b, out_a).
    Negative:  S(out_a, in_b) = (out_b, in_a).
    S(x, y) = (y ol x, x ul y) at classical crossings, S' with the bullet tables otherwise.
    """
    if kind is CrossingKind.CLASSICAL:
        lower, upper = alg.ul, alg.ol
    else:
        lower, upper = alg.ub, alg.ob
    n = alg.n
    x, y = (g.ravel() for g in np.meshgrid(np.arange(n), np.arange(n), indexing="ij"))
    swapped = upper[y, x]
    moved = lower[x, y]
    if sign is Sign.POSITIVE:
        rows = np.stack([x, swapped, moved, y], axis=1)
    else:
        rows = np.stack([moved, y, x, swapped], axis=1)
    return rows


class _Crossing:
    def __init__(self, constraint: CrossingConstraint, relation: np.ndarray):
        self.slots = np.array(constraint.slots)
        # a kink puts one semiarc in two slots; keep only rows that agree there
        keep = np.ones(len(relation), dtype=bool)
        for i, j in itertools.combinations(range(4), 2):
            if self.slots[i] == self.slots[j]:
                keep &= relation[:, i] == relation[:, j]
        self.rows = relation[keep]

    def supported(self, domains: np.ndarray) -> np.ndarray:
        """Rows whose every slot value is still in that slot's domain."""
        mask = np.ones(len(self.rows), dtype=bool)
        for k, s in enumerate(self.slots):
            mask &= domains[s, self.rows[:, k]]
        return self.rows[mask]


def _propagate(crossings: List[_Crossing], touching: Dict[int, List[int]], domains: np.ndarray,
               queue: Sequence[int]) -> bool:
    """Narrows domains until every crossing is arc consistent; False on a wipeout."""
    n = domains.shape[1]
    pending = deque(queue)
    queued = set(queue)
    while pending:
        c = pending.popleft()
        queued.discard(c)
        crossing = crossings[c]
        rows = crossing.supported(domains)
        if len(rows) == 0:
            return False
        for k, s in enumerate(crossing.slots):
            allowed = np.zeros(n, dtype=bool)
            allowed[rows[:, k]] = True
            narrowed = domains[s] & allowed
            if np.array_equal(narrowed, domains[s]):
                continue
            domains[s] = narrowed
            for other in touching[int(s)]:
                if other != c and other not in queued:
                    pending.append(other)
                    queued.add(other)
    return True


def _pick(domains: np.ndarray, crossings: List[_Crossing], touching: Dict[int, List[int]]) -> int:
    # smallest domain first, then the semiarc sharing crossings with the most fixed slots
    sizes = domains.sum(axis=1)
    fixed = sizes == 1
    best, best_key = -1, None
    for s in np.flatnonzero(sizes > 1):
        links = sum(int(fixed[crossings[c].slots].sum()) for c in touching[int(s)])
        key = (int(sizes[s]), -links, int(s))
        if best_key is None or key < best_key:
            best, best_key = int(s), key
    return best


def _search(crossings: List[_Crossing], touching: Dict[int, List[int]],
            domains: np.ndarray) -> Iterator[np.ndarray]:
    semiarc = _pick(domains, crossings, touching)
    if semiarc < 0:
        yield domains.argmax(axis=1)
        return
    for value in np.flatnonzero(domains[semiarc]):
        branch = domains.copy()
        branch[semiarc] = False
        branch[semiarc, value] = True
        if _propagate(crossings, touching, branch, touching[semiarc]):
            yield from _search(crossings, touching, branch)


def _prepare(alg: FiniteAlgebra, d: DiagramCode) -> Tuple[int, List[_Crossing]]:
    check_flavor(alg, d)
    count = len(semiarcs(d))
    relations = {}
    crossings = []
    for constraint in crossing_constraints(d):
        key = (constraint.kind is CrossingKind.CLASSICAL, constraint.sign)
        if key not in relations:
            relations[key] = crossing_relation(alg, constraint.kind, constraint.sign)
        crossings.append(_Crossing(constraint, relations[key]))
    return count, crossings


def enumerate_colorings(alg: FiniteAlgebra, d: DiagramCode) -> ColoringSet:
    count, crossings = _prepare(alg, d)
    touching: Dict[int, List[int]] = {s: [] for s in range(count)}
    for c, crossing in enumerate(crossings):
        for s in sorted(set(int(s) for s in crossing.slots)):
            touching[s].append(c)

    domains = np.ones((count, alg.n), dtype=bool)
    if _propagate(crossings, touching, domains, range(len(crossings))):
        found = ColoringSet.from_assignments(count, _search(crossings, touching, domains))
    else:
        found = ColoringSet.from_assignments(count, [])
    logger.debug(f"{found.count} colorings over {count} semiarcs and {len(crossings)} crossings")
    return found


def counting_invariant(alg: FiniteAlgebra, d: DiagramCode) -> int:
    return enumerate_colorings(alg, d).count


def brute_force_colorings(alg: FiniteAlgebra, d: DiagramCode, limit: Optional[int] = None) -> ColoringSet:
    """Filters every assignment against every crossing; for cross-checking the search."""
    limit = configs.bounds.brute_force_limit if limit is None else limit
    count, crossings = _prepare(alg, d)
    if alg.n ** count > limit:
        raise BoundExceededError(f"{alg.n}^{count} assignments exceed the brute-force bound {limit}")
    allowed = [{tuple(int(v) for v in row) for row in crossing.rows} for crossing in crossings]
    slots = [tuple(int(s) for s in crossing.slots) for crossing in crossings]
    valid = [
        assignment
        for assignment in itertools.product(range(alg.n), repeat=count)
        if all(tuple(assignment[s] for s in slot) in rows for slot, rows in zip(slots, allowed))
    ]
    return ColoringSet.from_assignments(count, valid)
