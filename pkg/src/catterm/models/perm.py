"""Permutations of strands: the symmetric shadow of braids."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ModelError
from ..kernel.modes import Mode
from .base import Model


@dataclass(frozen=True)
class Perm:
    """``images[i]`` is the output position of input strand ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ModelError(f"not a permutation: {list(self.images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def inverse(self) -> "Perm":
        out = [0] * self.n
        for i, j in enumerate(self.images):
            out[j] = i
        return Perm(tuple(out))

    def first_difference(self, other: "Perm") -> int | None:
        if self.n != other.n:
            return 0
        for i, (a, b) in enumerate(zip(self.images, other.images)):
            if a != b:
                return i
        return None

    def one_line(self) -> list[int]:
        """1-based one-line notation."""
        return [i + 1 for i in self.images]

    def to_json(self) -> dict:
        return {"perm": list(self.images)}


class PermModel(Model):
    kind = "perm"
    max_mode = Mode.SYMMETRIC

    def unit_size(self):
        return 0

    def tensor_size(self, a, b):
        return a + b

    def identity(self, n):
        return Perm(tuple(range(n)))

    def compose(self, f, g):
        return Perm(tuple(g.images[v] for v in f.images))

    def tensor(self, f, g):
        return Perm(f.images + tuple(v + f.n for v in g.images))

    def swap(self, a, b):
        return Perm(tuple(b + i for i in range(a)) + tuple(range(b)))

    def dagger(self, c):
        return c.inverse()

    def binding_shape(self, c):
        return (c.n, c.n)

    def shape(self, dom, cod):
        return (cod, dom)

    def describe_shape(self, shp):
        return f"permutation {shp[1]} -> {shp[0]} strands"
