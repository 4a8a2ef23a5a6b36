"""Functorial evaluation of morphism terms in strict concrete models."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import ModeError, ModelError, UnknownName
from ..kernel.infer import infer_dom_cod
from ..kernel.modes import Mode, mode_allows
from ..kernel.signature import Signature
from ..kernel.terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Del, Dup,
                            Ev, Gen, Id, LeftU, MorTerm, Name, Pair, Par,
                            Proj1, Proj2, RightU, Seq, Unassoc, Uncurry,
                            UnleftU, UnrightU, tags_used)
from ..kernel.types import Dual, Hom, Tensor, TypeExpr, Unit, BasicType


@dataclass
class Model:
    """Objects go to carrier sizes, generators to concrete morphisms.

    Subclasses supply the primitive operations; ``eval`` does the
    structural recursion.  Every model here is strict, so associators and
    unitors evaluate to identities.
    """

    sig: Signature
    objects: dict[str, int]
    bindings: dict = field(default_factory=dict)
    name: str = "model"

    kind = "abstract"
    max_mode = Mode.MONOIDAL

    # -- carriers -------------------------------------------------------------
    def size(self, t: TypeExpr) -> int:
        if isinstance(t, BasicType):
            if t.name not in self.objects:
                raise ModelError(f"model {self.name}: no carrier for object '{t.name}'")
            return self.objects[t.name]
        if isinstance(t, Unit):
            return self.unit_size()
        if isinstance(t, Tensor):
            return self.tensor_size(self.size(t.left), self.size(t.right))
        if isinstance(t, Hom):
            return self.hom_size(self.size(t.source), self.size(t.target))
        if isinstance(t, Dual):
            return self.dual_size(self.size(t.body))
        raise TypeError(f"not a type expression: {t!r}")

    def unit_size(self) -> int:
        return 1

    def tensor_size(self, a: int, b: int) -> int:
        return a * b

    def hom_size(self, a: int, b: int) -> int:
        raise ModelError(f"{self.kind} model has no internal hom")

    def dual_size(self, a: int) -> int:
        raise ModelError(f"{self.kind} model has no duals")

    # -- evaluation -------------------------------------------------------------
    def check_mode(self, t: MorTerm) -> None:
        for tg in sorted(tags_used(t)):
            if not mode_allows(self.max_mode, tg):
                raise ModeError(f"constructor '{tg}' exceeds the {self.kind} model's mode {self.max_mode}")

    def eval(self, t: MorTerm):
        self.check_mode(t)
        return self._eval(t)

    def _types(self, t: MorTerm):
        return infer_dom_cod(t, self.sig)

    def _eval(self, t: MorTerm):
        s = self.size
        if isinstance(t, Gen):
            if t.name not in self.bindings:
                if self.sig.generator(t.name) is None:
                    raise UnknownName(f"unknown generator '{t.name}'")
                raise ModelError(f"model {self.name}: generator '{t.name}' is unbound")
            return self.bindings[t.name]
        if isinstance(t, Id):
            return self.identity(s(t.at))
        if isinstance(t, Seq):
            return self.compose(self._eval(t.first), self._eval(t.then))
        if isinstance(t, Par):
            return self.tensor(self._eval(t.left), self._eval(t.right))
        if isinstance(t, (Assoc, Unassoc, LeftU, UnleftU, RightU, UnrightU)):
            return self.identity(s(self._types(t)[0]))
        if isinstance(t, Braid):
            return self.swap(s(t.x), s(t.y))
        if isinstance(t, BraidInv):
            return self.swap(s(t.y), s(t.x))
        if isinstance(t, Curry):
            d, z = self._types(t.body)
            return self.curry(self._eval(t.body), s(d.left), s(d.right), s(z))
        if isinstance(t, Uncurry):
            y, h = self._types(t.body)
            x, z = _hom_parts(h)
            return self.uncurry(self._eval(t.body), s(x), s(y), s(z))
        if isinstance(t, Ev):
            return self.ev(s(t.x), s(t.y))
        if isinstance(t, Name):
            x, y = self._types(t.body)
            return self.name_of(self._eval(t.body), s(x), s(y))
        if isinstance(t, Cup):
            return self.cup(s(t.x))
        if isinstance(t, Cap):
            return self.cap(s(t.x))
        if isinstance(t, Dup):
            return self.dup(s(t.x))
        if isinstance(t, Del):
            return self.delete(s(t.x))
        if isinstance(t, Pair):
            return self.pair(self._eval(t.first), self._eval(t.second))
        if isinstance(t, Proj1):
            return self.proj(s(t.x), s(t.y), 0)
        if isinstance(t, Proj2):
            return self.proj(s(t.x), s(t.y), 1)
        raise TypeError(f"not a morphism term: {t!r}")

    # -- primitives (overridden per model) ---------------------------------------
    def _unsupported(self, what: str):
        raise ModeError(f"{self.kind} model does not interpret {what}")

    def identity(self, n): self._unsupported("identities")
    def compose(self, f, g): self._unsupported("composition")
    def tensor(self, f, g): self._unsupported("tensor")
    def swap(self, a, b): self._unsupported("braiding")
    def curry(self, f, x, y, z): self._unsupported("currying")
    def uncurry(self, g, x, y, z): self._unsupported("uncurrying")
    def ev(self, x, y): self._unsupported("evaluation")
    def name_of(self, f, x, y): self._unsupported("names")
    def cup(self, n): self._unsupported("cups")
    def cap(self, n): self._unsupported("caps")
    def dup(self, n): self._unsupported("duplication")
    def delete(self, n): self._unsupported("deletion")
    def pair(self, f, g): self._unsupported("pairing")
    def proj(self, a, b, which): self._unsupported("projections")

    def dagger(self, c):
        raise ModelError(f"{self.kind} model has no dagger")

    def shape(self, dom: int, cod: int):
        """Expected binding shape as reported in errors."""
        return (cod, dom)

    def binding_shape(self, c):
        raise NotImplementedError

    def validate_bindings(self) -> None:
        for g in self.sig.generators:
            if g.name not in self.bindings:
                raise ModelError(f"model {self.name}: missing binding for generator '{g.name}'")
            self.check_binding(g.name, self.bindings[g.name])

    def check_binding(self, gname: str, c) -> None:
        from ..errors import ShapeMismatch
        g = self.sig.generator(gname)
        want = self.shape(self.size(g.dom), self.size(g.cod))
        got = self.binding_shape(c)
        if want != got:
            raise ShapeMismatch(
                f"generator '{gname}': expected shape {self.describe_shape(want)}, "
                f"got {self.describe_shape(got)}")

    def describe_shape(self, shp) -> str:
        return str(shp)


def _hom_parts(h: TypeExpr):
    if isinstance(h, Hom):
        return h.source, h.target
    if isinstance(h, Tensor):  # compact form X^ * Z
        from ..kernel.types import dual
        return dual(h.left), h.right
    raise ModelError(f"expected an internal hom, got {h!r}")


def eval_mor(m: Model, t: MorTerm):
    return m.eval(t)


def dagger(m: Model, c):
    return m.dagger(c)


@dataclass(frozen=True)
class Refuted:
    model: str
    index: int

    def __bool__(self) -> bool:
        return True


def refute_eq(m: Model, t1: MorTerm, t2: MorTerm) -> Refuted | None:
    """Evaluate both sides; return the first differing basis input, or None."""
    d1 = infer_dom_cod(t1, m.sig)
    d2 = infer_dom_cod(t2, m.sig)
    if d1 != d2:
        from ..errors import TypeMismatch
        raise TypeMismatch("refute_eq: the two terms have different types", d1, d2)
    a, b = m.eval(t1), m.eval(t2)
    i = a.first_difference(b)
    return None if i is None else Refuted(m.name, i)
