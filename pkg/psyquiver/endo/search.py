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

"""Endomorphism checks and exhaustive enumeration of Hom(X, X).

The search fixes images in element order. Whenever f(x) and f(y) are both
known, f(x op y) is forced to f(x) op f(y) for every operation; a forced value
that disagrees with an existing one kills the branch.
"""

import logging
from typing import Iterator, List, NamedTuple, Optional, Sequence

import numpy as np

from ..algebra import FiniteAlgebra, OpId
from ..config import configs
from ..errors import BoundExceededError
from .maps import EndoMap, EndoSet

logger = logging.getLogger(__name__)


class Witness(NamedTuple):
    """f(x op y) != f(x) op f(y), 1-based."""
    op: OpId
    x: int
    y: int


class EndoCheck(NamedTuple):
    holds: bool
    witness: Optional[Witness] = None


def is_endomorphism(alg: FiniteAlgebra, images: Sequence[int]) -> EndoCheck:
    if len(images) != alg.n or any(not 1 <= v <= alg.n for v in images):
        raise ValueError(f"expected {alg.n} images in 1..{alg.n}")
    f = np.asarray(images, dtype=np.int64) - 1
    for op in alg.operations:
        table = alg.table(op)
        lhs = f[table]
        rhs = table[f[:, None], f[None, :]]
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            x, y = bad[0]
            return EndoCheck(False, Witness(op, int(x) + 1, int(y) + 1))
    return EndoCheck(True)


def _close(tables: List[np.ndarray], f: np.ndarray) -> bool:
    """Forces images until nothing changes; False on a contradiction."""
    while True:
        known = np.flatnonzero(f >= 0)
        forced = {}
        for table in tables:
            targets = table[np.ix_(known, known)]
            required = table[f[known][:, None], f[known][None, :]]
            for z, value in zip(targets.ravel(), required.ravel()):
                z, value = int(z), int(value)
                current = f[z] if f[z] >= 0 else forced.get(z)
                if current is None:
                    forced[z] = value
                elif current != value:
                    return False
        if not forced:
            return True
        for z, value in forced.items():
            f[z] = value


def _extend(tables: List[np.ndarray], n: int, f: np.ndarray) -> Iterator[np.ndarray]:
    if not _close(tables, f):
        return
    free = np.flatnonzero(f < 0)
    if len(free) == 0:
        yield f.copy()
        return
    x = int(free[0])
    for value in range(n):
        branch = f.copy()
        branch[x] = value
        yield from _extend(tables, n, branch)


def enumerate_endomorphisms(alg: FiniteAlgebra, limit: Optional[int] = None) -> EndoSet:
    limit = configs.bounds.max_endo_carrier if limit is None else limit
    if alg.n > limit:
        raise BoundExceededError(f"carrier of size {alg.n} exceeds the endomorphism search bound {limit}")
    tables = [alg.table(op) for op in alg.operations]
    start = np.full(alg.n, -1, dtype=np.int64)
    maps = [EndoMap(images=tuple(int(v) + 1 for v in f)) for f in _extend(tables, alg.n, start)]
    endos = EndoSet.of(alg.n, maps)
    logger.info(f"|Hom(X,X)| = {len(endos)} for the {alg.flavor.value} of order {alg.n}")
    return endos


def constant_endomorphisms(alg: FiniteAlgebra) -> EndoSet:
    """Constant maps to an element idempotent under every operation."""
    maps = [
        EndoMap.constant(alg.n, c)
        for c in range(1, alg.n + 1)
        if all(int(alg.table(op)[c - 1, c - 1]) == c - 1 for op in alg.operations)
    ]
    return EndoSet.of(alg.n, maps)


def is_monoid(endos: EndoSet) -> bool:
    """Identity present and closed under composition."""
    return endos.contains_identity and endos.closed_under_composition
