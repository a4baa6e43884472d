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

"""Finite biquandles and psyquandles stored as operation tables.

Elements are the integers 1..n at the API surface. Internally every table is a
read-only numpy array indexed from 0, so `table[x - 1, y - 1] + 1 == x op y`.
"""

import logging
from enum import Enum
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..errors import InvalidAlgebraError, OperationUnavailableError

logger = logging.getLogger(__name__)


class Flavor(str, Enum):
    BIQUANDLE = "biquandle"
    PSYQUANDLE = "psyquandle"

    @property
    def block_count(self) -> int:
        return 2 if self is Flavor.BIQUANDLE else 4


class OpId(str, Enum):
    """Operation identifiers: under/over triangle, under/over bullet and their right inverses."""
    UL = "ul"
    OL = "ol"
    UB = "ub"
    OB = "ob"
    UL_INV = "ul_inv"
    OL_INV = "ol_inv"
    UB_INV = "ub_inv"
    OB_INV = "ob_inv"

    @property
    def base(self) -> "OpId":
        return OpId(self.value.removesuffix("_inv"))

    @property
    def is_inverse(self) -> bool:
        return self.value.endswith("_inv")

    @property
    def is_bullet(self) -> bool:
        return self.base in (OpId.UB, OpId.OB)


# Block order of the file format: ul | ol | ub | ob
BASE_OPERATIONS: Tuple[OpId, ...] = (OpId.UL, OpId.OL, OpId.UB, OpId.OB)

OPERATION_SYMBOLS = {
    OpId.UL: "▷̲",
    OpId.OL: "▷̄",
    OpId.UB: "•̲",
    OpId.OB: "•̄",
}


def _freeze(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.int64, copy=True)
    array.setflags(write=False)
    return array


def column_inverse(table: np.ndarray) -> Optional[np.ndarray]:
    """Returns the right-inverse table, or None if some column is not a permutation."""
    n = table.shape[0]
    identity = np.arange(n)
    if not all(np.array_equal(np.sort(table[:, y]), identity) for y in range(n)):
        return None
    # argsort of a permutation is its inverse
    return _freeze(np.argsort(table, axis=0, kind="stable"))


class FiniteAlgebra(BaseModel):
    """A finite biquandle (two tables) or psyquandle (four tables)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    flavor: Flavor
    n: int
    tables: Tuple[np.ndarray, ...]
    inverse_tables: Optional[Tuple[np.ndarray, ...]] = None

    @classmethod
    def from_tables(cls, flavor: Flavor, tables: Sequence[Sequence[Sequence[int]]]) -> "FiniteAlgebra":
        """Builds an algebra from 1-based tables and derives the inverse tables."""
        flavor = Flavor(flavor)
        if len(tables) != flavor.block_count:
            raise ValueError(f"a {flavor.value} needs {flavor.block_count} tables, got {len(tables)}")
        frozen = tuple(_freeze(np.asarray(t, dtype=np.int64) - 1) for t in tables)
        n = frozen[0].shape[0]
        for table in frozen:
            if table.shape != (n, n):
                raise ValueError(f"every table must be {n}x{n}")
            if table.min() < 0 or table.max() >= n:
                raise ValueError(f"table entries must lie in 1..{n}")
        inverses = [column_inverse(t) for t in frozen]
        inverse_tables = None if any(inv is None for inv in inverses) else tuple(inverses)
        if inverse_tables is None:
            logger.debug("Axiom (0) fails; inverse tables left undefined")
        return cls(flavor=flavor, n=n, tables=frozen, inverse_tables=inverse_tables)

    @property
    def is_psyquandle(self) -> bool:
        return self.flavor is Flavor.PSYQUANDLE

    @property
    def has_inverses(self) -> bool:
        return self.inverse_tables is not None

    def require_inverses(self) -> None:
        if self.inverse_tables is None:
            raise InvalidAlgebraError("operation tables are not right-invertible (axiom (0) fails)")

    def table(self, op: OpId) -> np.ndarray:
        """The 0-based table of an operation; inverse operations need axiom (0)."""
        op = OpId(op)
        if op.is_bullet and not self.is_psyquandle:
            raise OperationUnavailableError(f"operation {op.value} is not defined on a biquandle")
        index = BASE_OPERATIONS.index(op.base)
        if op.is_inverse:
            self.require_inverses()
            return self.inverse_tables[index]
        return self.tables[index]

    @property
    def ul(self) -> np.ndarray:
        return self.tables[0]

    @property
    def ol(self) -> np.ndarray:
        return self.tables[1]

    @property
    def ub(self) -> np.ndarray:
        return self.table(OpId.UB)

    @property
    def ob(self) -> np.ndarray:
        return self.table(OpId.OB)

    @property
    def operations(self) -> Tuple[OpId, ...]:
        return BASE_OPERATIONS[: self.flavor.block_count]

    @cached_property
    def pair_map_s(self) -> np.ndarray:
        """S(x, y) = (y ol x, x ul y) as an (n, n, 2) array of 0-based elements."""
        return _pair_map(self.ul, self.ol)

    @cached_property
    def pair_map_sprime(self) -> Optional[np.ndarray]:
        """S'(x, y) = (y ob x, x ub y); None on a biquandle."""
        if not self.is_psyquandle:
            return None
        return _pair_map(self.ub, self.ob)

    @property
    def pi_adequate(self) -> bool:
        if not self.is_psyquandle:
            return False
        return bool(np.array_equal(np.diagonal(self.ub), np.diagonal(self.ob)))

    def entries(self, op: OpId) -> Tuple[Tuple[int, ...], ...]:
        """1-based rows of an operation table."""
        return tuple(tuple(int(v) + 1 for v in row) for row in self.table(op))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (
            self.flavor is other.flavor
            and self.n == other.n
            and all(np.array_equal(a, b) for a, b in zip(self.tables, other.tables))
        )

    def __hash__(self) -> int:
        return hash((self.flavor, self.n, tuple(t.tobytes() for t in self.tables)))


def _pair_map(lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    n = lower.shape[0]
    x = np.arange(n)[:, None]
    y = np.arange(n)[None, :]
    first = np.broadcast_to(upper[y, x], (n, n))
    second = np.broadcast_to(lower[x, y], (n, n))
    result = np.stack([first, second], axis=-1)
    result.setflags(write=False)
    return result


def op_apply(alg: FiniteAlgebra, op_id: OpId, x: int, y: int) -> int:
    """x op y for 1-based elements."""
    if not (1 <= x <= alg.n and 1 <= y <= alg.n):
        raise ValueError(f"elements must lie in 1..{alg.n}")
    return int(alg.table(OpId(op_id))[x - 1, y - 1]) + 1


def classical_fragment(alg: FiniteAlgebra) -> FiniteAlgebra:
    """The biquandle given by the two left blocks of a psyquandle."""
    if not alg.is_psyquandle:
        return alg
    tables = [alg.entries(OpId.UL), alg.entries(OpId.OL)]
    return FiniteAlgebra.from_tables(Flavor.BIQUANDLE, tables)


def kink_map(alg: FiniteAlgebra) -> Tuple[int, ...]:
    """x -> x ul x (equal to x ol x on a valid algebra), 1-based."""
    return tuple(int(v) + 1 for v in np.diagonal(alg.ul))
