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

from ..algebra import FiniteAlgebra
from ..errors import EndomorphismError
from ..utils import content_lines
from .maps import EndoMap, EndoSet
from .search import is_endomorphism

logger = logging.getLogger(__name__)


def parse_endo_set(alg: FiniteAlgebra, text: str) -> EndoSet:
    """One map per line as n images; every line must be an endomorphism of `alg`."""
    maps = []
    for line_number, line in content_lines(text):
        try:
            images = tuple(int(token) for token in line.split())
        except ValueError:
            raise EndomorphismError(f"not a list of integers: {line.strip()!r}", line=line_number) from None
        if len(images) != alg.n or any(not 1 <= v <= alg.n for v in images):
            raise EndomorphismError(f"expected {alg.n} images in 1..{alg.n}", line=line_number)
        check = is_endomorphism(alg, images)
        if not check.holds:
            op, x, y = check.witness
            raise EndomorphismError(
                f"{images} is not an endomorphism: f({x} {op.value} {y}) != f({x}) {op.value} f({y})",
                witness=tuple(check.witness),
                line=line_number,
            )
        maps.append(EndoMap(images=images))
    endos = EndoSet.of(alg.n, maps)
    logger.debug(f"Read {len(endos)} endomorphisms")
    return endos


def serialize_endo_set(endos: EndoSet) -> str:
    return "".join(" ".join(str(v) for v in m.images) + "\n" for m in endos)
