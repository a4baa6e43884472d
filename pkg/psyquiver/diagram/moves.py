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

"""Seeded Reidemeister I and II insertions on Gauss codes.

An R2 insertion puts `O k± O m∓` on one stretch of strand and the matching
under passes on another: `U k± U m∓` when the strands run parallel,
`U m∓ U k±` when they run against each other. Both stretches may lie on the
same edge, in which case the two groups are inserted side by side.
"""

import logging
import random
from enum import Enum
from typing import List, Sequence, Tuple

from .model import CrossingPass, DiagramCode, PassKind, Sign

logger = logging.getLogger(__name__)


class Move(str, Enum):
    R1_POSITIVE = "r1+"
    R1_NEGATIVE = "r1-"
    R2 = "r2"


def _over(crossing_id: int, sign: Sign) -> CrossingPass:
    return CrossingPass(kind=PassKind.CLASSICAL_OVER, crossing_id=crossing_id, sign=sign)


def _under(crossing_id: int, sign: Sign) -> CrossingPass:
    return CrossingPass(kind=PassKind.CLASSICAL_UNDER, crossing_id=crossing_id, sign=sign)


def _flip(sign: Sign) -> Sign:
    return Sign.NEGATIVE if sign is Sign.POSITIVE else Sign.POSITIVE


def _gap(rng: random.Random, components: List[List[CrossingPass]]) -> Tuple[int, int]:
    c = rng.randrange(len(components))
    return c, rng.randrange(len(components[c]) + 1)


def _insert_r1(rng, components, move: Move, k: int) -> None:
    sign = Sign.POSITIVE if move is Move.R1_POSITIVE else Sign.NEGATIVE
    c, position = _gap(rng, components)
    components[c][position:position] = [_over(k, sign), _under(k, sign)]
    logger.debug(f"{move.value} crossing {k} at component {c}, position {position}")


def _insert_r2(rng, components, k: int, m: int) -> None:
    sign = rng.choice((Sign.POSITIVE, Sign.NEGATIVE))
    parallel = rng.random() < 0.5
    overs = [_over(k, sign), _over(m, _flip(sign))]
    unders = [_under(k, sign), _under(m, _flip(sign))]
    if not parallel:
        unders.reverse()

    first, second = _gap(rng, components), _gap(rng, components)
    if first == second:
        c, position = first
        components[c][position:position] = overs + unders
    else:
        # the later gap first so the earlier position stays valid
        for (c, position), group in sorted(zip((first, second), (overs, unders)), key=lambda g: g[0], reverse=True):
            components[c][position:position] = group
    logger.debug(
        f"r2 crossings {k},{m} ({'parallel' if parallel else 'antiparallel'}) at {first} and {second}"
    )


def perturb(d: DiagramCode, moves: Sequence[str], seed: int) -> DiagramCode:
    """Applies the moves in order at seeded random positions; fresh crossing ids follow the largest in use."""
    rng = random.Random(seed)
    components = [list(c) for c in d.components]
    next_id = max(d.crossing_ids, default=0) + 1
    for raw in moves:
        move = Move(raw)
        if move is Move.R2:
            _insert_r2(rng, components, next_id, next_id + 1)
            next_id += 2
        else:
            _insert_r1(rng, components, move, next_id)
            next_id += 1
    return DiagramCode(components=tuple(tuple(c) for c in components))
