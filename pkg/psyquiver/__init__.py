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

from .algebra import FiniteAlgebra, parse_algebra, validate
from .coloring import counting_invariant, enumerate_colorings
from .diagram import parse_diagram
from .endo import enumerate_endomorphisms, is_endomorphism
from .quiver import build_quiver, in_degree_polynomial

__version__ = "0.1.0"

__all__ = [
    "FiniteAlgebra",
    "build_quiver",
    "counting_invariant",
    "enumerate_colorings",
    "enumerate_endomorphisms",
    "in_degree_polynomial",
    "is_endomorphism",
    "parse_algebra",
    "parse_diagram",
    "validate",
]
