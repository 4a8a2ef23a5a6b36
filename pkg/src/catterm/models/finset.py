"""Finite sets and total functions, with canonical index carriers.

A set of size ``n`` is ``range(n)``.  Pairs use row-major indexing
``(a, b) -> a * |B| + b``.  A function ``phi : X -> Y`` is stored in the hom
carrier as the base-``|Y|`` number whose digits are ``phi(0), phi(1), ...``
with ``phi(0)`` most significant.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ModelError
from ..kernel.modes import Mode
from .base import Model


@dataclass(frozen=True)
class Table:
    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dom:
            raise ModelError(f"table has {len(self.values)} entries, expected {self.dom}")
        for v in self.values:
            if not 0 <= v < self.cod:
                raise ModelError(f"table entry {v} out of range 0..{self.cod - 1}")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def first_difference(self, other: "Table") -> int | None:
        if (self.dom, self.cod) != (other.dom, other.cod):
            return 0
        for i, (a, b) in enumerate(zip(self.values, other.values)):
            if a != b:
                return i
        return None

    def to_json(self) -> dict:
        return {"table": list(self.values)}


def encode_fn(phi: list[int], cod: int) -> int:
    out = 0
    for v in phi:
        out = out * cod + v
    return out


def decode_fn(code: int, dom: int, cod: int) -> list[int]:
    digits = [0] * dom
    for i in range(dom - 1, -1, -1):
        code, digits[i] = divmod(code, cod)
    return digits


class FinSetModel(Model):
    kind = "finset"
    max_mode = Mode.CARTESIAN_CLOSED

    def hom_size(self, a, b):
        return b ** a

    def identity(self, n):
        return Table(n, n, tuple(range(n)))

    def compose(self, f, g):
        return Table(f.dom, g.cod, tuple(g.values[v] for v in f.values))

    def tensor(self, f, g):
        return Table(f.dom * g.dom, f.cod * g.cod,
                     tuple(f.values[a] * g.cod + g.values[b]
                           for a in range(f.dom) for b in range(g.dom)))

    def swap(self, a, b):
        return Table(a * b, a * b, tuple(j * a + i for i in range(a) for j in range(b)))

    def curry(self, f, x, y, z):
        return Table(y, z ** x, tuple(encode_fn([f.values[xi * y + yi] for xi in range(x)], z)
                                     for yi in range(y)))

    def uncurry(self, g, x, y, z):
        return Table(x * y, z, tuple(decode_fn(g.values[yi], x, z)[xi]
                                     for xi in range(x) for yi in range(y)))

    def ev(self, x, y):
        h = y ** x
        return Table(x * h, y, tuple(decode_fn(phi, x, y)[xi]
                                     for xi in range(x) for phi in range(h)))

    def name_of(self, f, x, y):
        return Table(1, y ** x, (encode_fn(list(f.values), y),))

    def dup(self, n):
        return Table(n, n * n, tuple(a * n + a for a in range(n)))

    def delete(self, n):
        return Table(n, 1, (0,) * n)

    def pair(self, f, g):
        return Table(f.dom, f.cod * g.cod,
                     tuple(f.values[a] * g.cod + g.values[a] for a in range(f.dom)))

    def proj(self, a, b, which):
        if which == 0:
            return Table(a * b, a, tuple(i for i in range(a) for _ in range(b)))
        return Table(a * b, b, tuple(j for _ in range(a) for j in range(b)))

    def dagger(self, c):
        raise ModelError("finite sets have no dagger: a function cannot in general be reversed")

    def binding_shape(self, c):
        return (c.cod, c.dom)

    def describe_shape(self, shp):
        return f"table of {shp[1]} entries into {shp[0]}"
