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

"""Exceptions raised by psyquiver."""

from typing import Optional


class PsyquiverError(Exception):
    """Base class for every error raised by the library."""


class _PositionedError(PsyquiverError):
    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(f"{where}{message}")


class AlgebraParseError(_PositionedError):
    """Malformed algebra file."""


class DiagramParseError(_PositionedError):
    """Malformed or inconsistent diagram code."""


class InvalidAlgebraError(PsyquiverError):
    """The algebra fails axiom (0), so its inverse tables do not exist."""


class OperationUnavailableError(PsyquiverError):
    """A bullet operation was requested from a biquandle."""


class ConstructorError(PsyquiverError, ValueError):
    """Bad parameters for a modular constructor."""


class FlavorMismatchError(PsyquiverError):
    """The diagram needs operations or adequacy the algebra does not have."""


class BoundExceededError(PsyquiverError):
    """An exhaustive search was asked to run past its configured bound."""


class EndomorphismError(PsyquiverError):
    """A listed map is not an endomorphism."""

    def __init__(self, message: str, witness: Optional[tuple] = None, line: Optional[int] = None):
        self.witness = witness
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class QuiverInvariantError(PsyquiverError):
    """An endomorphism carried a coloring outside the coloring set."""
