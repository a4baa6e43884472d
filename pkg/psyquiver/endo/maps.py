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

"""Self-maps of a finite carrier, stored as 1-based image tuples."""

from typing import Iterable, Iterator, Tuple

from pydantic import BaseModel, ConfigDict, field_validator

from ..utils import format_tuple


class EndoMap(BaseModel):
    """f(x) = images[x - 1]."""

    model_config = ConfigDict(frozen=True)

    images: Tuple[int, ...]

    @field_validator("images")
    @classmethod
    def _in_range(cls, images: Tuple[int, ...]) -> Tuple[int, ...]:
        n = len(images)
        if any(not 1 <= v <= n for v in images):
            raise ValueError(f"images must lie in 1..{n}")
        return images

    @classmethod
    def identity(cls, n: int) -> "EndoMap":
        return cls(images=tuple(range(1, n + 1)))

    @classmethod
    def constant(cls, n: int, value: int) -> "EndoMap":
        return cls(images=(value,) * n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def apply(self, coloring: Iterable[int]) -> Tuple[int, ...]:
        """Pointwise image of a coloring tuple."""
        return tuple(self.images[v - 1] for v in coloring)

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.n

    def __lt__(self, other: "EndoMap") -> bool:
        return self.images < other.images

    def __str__(self) -> str:
        return format_tuple(self.images)


def compose(f: EndoMap, g: EndoMap) -> EndoMap:
    """(f ∘ g)(x) = f(g(x))."""
    if f.n != g.n:
        raise ValueError(f"cannot compose maps on carriers of size {f.n} and {g.n}")
    return EndoMap(images=tuple(f(g(x)) for x in range(1, g.n + 1)))


def is_automorphism(f: EndoMap) -> bool:
    """A bijective endomorphism; the caller is expected to have checked the homomorphism condition."""
    return f.is_bijective()


class EndoSet(BaseModel):
    """A sorted, duplicate-free set of endomorphisms of one algebra."""

    model_config = ConfigDict(frozen=True)

    n: int
    maps: Tuple[EndoMap, ...] = ()

    @classmethod
    def of(cls, n: int, maps: Iterable[EndoMap]) -> "EndoSet":
        return cls(n=n, maps=tuple(sorted(set(maps))))

    def __len__(self) -> int:
        return len(self.maps)

    def __iter__(self) -> Iterator[EndoMap]:
        return iter(self.maps)

    def __contains__(self, f) -> bool:
        images = f.images if isinstance(f, EndoMap) else tuple(f)
        return any(m.images == images for m in self.maps)

    @property
    def contains_identity(self) -> bool:
        return EndoMap.identity(self.n) in self

    @property
    def closed_under_composition(self) -> bool:
        members = {m.images for m in self.maps}
        return all(compose(f, g).images in members for f in self.maps for g in self.maps)
