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

import re
from typing import Iterator, Tuple

_TOKEN = re.compile(r"\S+")


def content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yields (1-based line number, line) with `#` comments cut and blank lines skipped.

    The line keeps its leading whitespace so token columns stay meaningful.
    """
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield number, line


def tokens_with_columns(line: str) -> Iterator[Tuple[int, str]]:
    """Yields (1-based column, token) for whitespace separated tokens."""
    for match in _TOKEN.finditer(line):
        yield match.start() + 1, match.group(0)


def format_tuple(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"
