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

"""Linear algebras over Z_n.

Element k of the carrier stands for the residue k - 1.
"""

import logging
from math import gcd

import numpy as np

from ..errors import ConstructorError
from .tables import FiniteAlgebra, Flavor

logger = logging.getLogger(__name__)


def _check_units(n: int, **params: int) -> None:
    if n < 1:
        raise ConstructorError(f"modulus must be positive, got {n}")
    for name, value in params.items():
        if gcd(value % n, n) != 1:
            raise ConstructorError(f"{name}={value} is not a unit mod {n}")


def _linear_table(n: int, a: int, b: int) -> np.ndarray:
    """1-based table of x op y = a*x + b*y (mod n)."""
    residues = np.arange(n)
    return (a * residues[:, None] + b * residues[None, :]) % n + 1


def make_alexander_biquandle(n: int, t: int, s: int) -> FiniteAlgebra:
    """x ul y = t x + (s - t) y and x ol y = s x."""
    _check_units(n, t=t, s=s)
    ul = _linear_table(n, t, s - t)
    ol = _linear_table(n, s, 0)
    logger.debug(f"Alexander biquandle Z_{n} t={t} s={s}")
    return FiniteAlgebra.from_tables(Flavor.BIQUANDLE, [ul, ol])


def make_jablan_psyquandle(n: int, t: int, s: int) -> FiniteAlgebra:
    """Alexander biquandle plus x ub y = x ob y = ((s + t)/2) x + ((s - t)/2) y."""
    if n % 2 == 0:
        raise ConstructorError(f"modulus must be odd, got {n}")
    _check_units(n, t=t, s=s)
    half = pow(2, -1, n) if n > 1 else 0
    c = (s + t) * half % n
    d = (s - t) * half % n
    # column x -> c x + d y is a permutation only when c is a unit
    if gcd(c, n) != 1:
        raise ConstructorError(f"(s+t)/2 = {c} is not a unit mod {n}, bullet columns would not be bijective")
    ul = _linear_table(n, t, s - t)
    ol = _linear_table(n, s, 0)
    bullet = _linear_table(n, c, d)
    logger.debug(f"Jablan psyquandle Z_{n} t={t} s={s} bullet=({c}, {d})")
    return FiniteAlgebra.from_tables(Flavor.PSYQUANDLE, [ul, ol, bullet, bullet])
