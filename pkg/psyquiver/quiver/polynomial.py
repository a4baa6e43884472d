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

"""In-degree quiver polynomials: the sum over vertices of u^(in-degree)."""

from collections import Counter
from typing import Dict

import sympy
from pydantic import BaseModel, ConfigDict, field_validator
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from .model import Quiver

U = sympy.Symbol("u")

_TRANSFORMATIONS = standard_transformations + (implicit_multiplication_application, convert_xor)


class InDegreePolynomial(BaseModel):
    """exponent -> coefficient; zero coefficients are never stored."""

    model_config = ConfigDict(frozen=True)

    terms: Dict[int, int]

    @field_validator("terms")
    @classmethod
    def _nonnegative(cls, terms: Dict[int, int]) -> Dict[int, int]:
        for exponent, coefficient in terms.items():
            if exponent < 0 or coefficient < 0:
                raise ValueError(f"negative term {coefficient}u^{exponent}")
        return {e: c for e, c in sorted(terms.items(), reverse=True) if c}

    def evaluate(self, u: int = 1) -> int:
        return sum(c * u ** e for e, c in self.terms.items())

    @property
    def vertex_count(self) -> int:
        return self.evaluate(1)

    @property
    def degree_sum(self) -> int:
        return sum(e * c for e, c in self.terms.items())

    def to_sympy(self) -> sympy.Expr:
        return sympy.Add(*(c * U ** e for e, c in self.terms.items()))

    def __hash__(self) -> int:
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        return polynomial_to_string(self)


def in_degree_polynomial(q: Quiver) -> InDegreePolynomial:
    return InDegreePolynomial(terms=dict(Counter(q.in_degrees())))


def polynomial_to_string(p: InDegreePolynomial) -> str:
    parts = []
    for exponent, coefficient in p.terms.items():
        if exponent == 0:
            parts.append(str(coefficient))
            continue
        power = "u" if exponent == 1 else f"u^{exponent}"
        parts.append(power if coefficient == 1 else f"{coefficient}{power}")
    return " + ".join(parts) if parts else "0"


def parse_polynomial(text: str) -> InDegreePolynomial:
    """Reads forms like "2u^15 + u^13 + u^9 + 48" or "u**33 + 8*u**6"."""
    expr = parse_expr(text.strip(), local_dict={"u": U}, transformations=_TRANSFORMATIONS)
    poly = sympy.Poly(expr, U)
    terms = {}
    for (exponent,), coefficient in poly.terms():
        if not coefficient.is_Integer:
            raise ValueError(f"non-integer coefficient {coefficient} in {text!r}")
        terms[int(exponent)] = int(coefficient)
    return InDegreePolynomial(terms=terms)
