"""Linear types, combinators and variable-linear terms.

Types are the kernel's type expressions (basic, I, tensor, hom).  Basic
combinators may omit their type arguments inside a term; they are then
read off the argument's type.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import CatTermError, TypeMismatch, UnknownName
from ..kernel.signature import GenDecl
from ..kernel.types import UNIT, Hom, Tensor, TypeExpr, Unit, show_type

LinType = TypeExpr

BASIC_TAGS = ("id", "assoc", "unassoc", "braid", "left", "unleft", "right", "unright", "eval")
_NARGS = {"id": 1, "assoc": 3, "unassoc": 3, "braid": 2, "left": 1, "unleft": 1,
          "right": 1, "unright": 1, "eval": 2}


class LinearityError(CatTermError):
    """A variable occurs twice in a term."""


@dataclass(frozen=True)
class LinTheory:
    basic_types: tuple[str, ...] = ()
    functions: tuple[GenDecl, ...] = ()
    # basic combinator tag -> name of the structural morphism it is identified with
    identifications: tuple[tuple[str, str], ...] = ()

    def function(self, name: str) -> GenDecl | None:
        for g in self.functions:
            if g.name == name:
                return g
        return None


# -- combinators -------------------------------------------------------------------------


@dataclass(frozen=True)
class FnSym:
    name: str


@dataclass(frozen=True)
class BasicC:
    tag: str
    at: tuple[TypeExpr, ...] | None = None  # None: infer from the argument


@dataclass(frozen=True)
class Comp:
    """``g o f``: first f, then g."""
    g: "Combinator"
    f: "Combinator"


@dataclass(frozen=True)
class TensorC:
    f: "Combinator"
    g: "Combinator"


@dataclass(frozen=True)
class CurryC:
    f: "Combinator"


Combinator = Union[FnSym, BasicC, Comp, TensorC, CurryC]


def _basic_type(tag: str, at: tuple) -> tuple[TypeExpr, TypeExpr]:
    if tag == "id":
        (x,) = at
        return x, x
    if tag == "assoc":
        x, y, z = at
        return Tensor(Tensor(x, y), z), Tensor(x, Tensor(y, z))
    if tag == "unassoc":
        x, y, z = at
        return Tensor(x, Tensor(y, z)), Tensor(Tensor(x, y), z)
    if tag == "braid":
        x, y = at
        return Tensor(x, y), Tensor(y, x)
    if tag == "left":
        (x,) = at
        return Tensor(UNIT, x), x
    if tag == "unleft":
        (x,) = at
        return x, Tensor(UNIT, x)
    if tag == "right":
        (x,) = at
        return Tensor(x, UNIT), x
    if tag == "unright":
        (x,) = at
        return x, Tensor(x, UNIT)
    if tag == "eval":
        x, y = at
        return Tensor(x, Hom(x, y)), y
    raise UnknownName(f"unknown basic combinator {tag!r}")


def _infer_at(tag: str, dom: TypeExpr) -> tuple | None:
    """Type arguments of a basic combinator applied to ``dom``, or None if it does not fit."""
    if tag in ("id", "unleft", "unright"):
        return (dom,)
    if not isinstance(dom, Tensor):
        return None
    l, r = dom.left, dom.right
    if tag == "assoc" and isinstance(l, Tensor):
        return (l.left, l.right, r)
    if tag == "unassoc" and isinstance(r, Tensor):
        return (l, r.left, r.right)
    if tag == "braid":
        return (l, r)
    if tag == "left" and isinstance(l, Unit):
        return (r,)
    if tag == "right" and isinstance(r, Unit):
        return (l,)
    if tag == "eval" and isinstance(r, Hom) and r.source == l:
        return (l, r.target)
    return None


def comb_type(c: Combinator, th: LinTheory) -> tuple[TypeExpr, TypeExpr]:
    """(dom, cod) of a fully annotated combinator."""
    if isinstance(c, FnSym):
        g = th.function(c.name)
        if g is None:
            raise UnknownName(f"unknown function symbol {c.name!r}")
        return g.dom, g.cod
    if isinstance(c, BasicC):
        if c.at is None:
            raise TypeMismatch(f"cannot infer the type of {c.tag!r} without an argument")
        if len(c.at) != _NARGS.get(c.tag, -1):
            raise TypeMismatch(f"{c.tag} takes {_NARGS.get(c.tag)} type arguments")
        return _basic_type(c.tag, c.at)
    if isinstance(c, Comp):
        fd, fc = comb_type(c.f, th)
        gd, gc = comb_type(c.g, th)
        if fc != gd:
            raise TypeMismatch(f"cannot compose: {show_type(fc)} vs {show_type(gd)}", fc, gd)
        return fd, gc
    if isinstance(c, TensorC):
        fd, fc = comb_type(c.f, th)
        gd, gc = comb_type(c.g, th)
        return Tensor(fd, gd), Tensor(fc, gc)
    if isinstance(c, CurryC):
        d, z = comb_type(c.f, th)
        if not isinstance(d, Tensor):
            raise TypeMismatch(f"curry needs a combinator out of a tensor, not {show_type(d)}")
        return d.right, Hom(d.left, z)
    raise TypeError(f"not a combinator: {c!r}")


def resolve(c: Combinator, dom: TypeExpr, th: LinTheory) -> Combinator:
    """Fill in missing type arguments so that ``c`` starts at ``dom``."""
    if isinstance(c, BasicC) and c.at is None:
        at = _infer_at(c.tag, dom)
        if at is None:
            raise TypeMismatch(f"{c.tag} cannot be applied to a term of type {show_type(dom)}")
        return BasicC(c.tag, at)
    if isinstance(c, Comp):
        f = resolve(c.f, dom, th)
        return Comp(resolve(c.g, comb_type(f, th)[1], th), f)
    if isinstance(c, TensorC):
        if not isinstance(dom, Tensor):
            raise TypeMismatch(f"a tensor of combinators needs a tensor argument, "
                               f"not {show_type(dom)}")
        return TensorC(resolve(c.f, dom.left, th), resolve(c.g, dom.right, th))
    d, _ = comb_type(c, th)
    if d != dom:
        raise TypeMismatch(f"combinator expects {show_type(d)}, argument has {show_type(dom)}",
                           d, dom)
    return c


# -- terms -------------------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str
    type: TypeExpr


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class TensorTm:
    left: "LinTerm"
    right: "LinTerm"


@dataclass(frozen=True)
class Apply:
    comb: Combinator
    arg: "LinTerm"


LinTerm = Union[Var, One, TensorTm, Apply]


def variables(t: LinTerm) -> list[Var]:
    """Variables in left-to-right order of occurrence."""
    if isinstance(t, Var):
        return [t]
    if isinstance(t, TensorTm):
        return variables(t.left) + variables(t.right)
    if isinstance(t, Apply):
        return variables(t.arg)
    return []


def is_basic(t: LinTerm) -> bool:
    if isinstance(t, Apply):
        return False
    if isinstance(t, TensorTm):
        return is_basic(t.left) and is_basic(t.right)
    return True


def lin_typecheck(t: LinTerm, th: LinTheory | None = None) -> LinType:
    th = th or LinTheory()
    names = [v.name for v in variables(t)]
    dup = sorted({n for n in names if names.count(n) > 1})
    if dup:
        raise LinearityError(f"variable {dup[0]!r} occurs more than once")
    return _type_of(t, th)


def _type_of(t: LinTerm, th: LinTheory) -> LinType:
    if isinstance(t, Var):
        return t.type
    if isinstance(t, One):
        return UNIT
    if isinstance(t, TensorTm):
        return Tensor(_type_of(t.left, th), _type_of(t.right, th))
    if isinstance(t, Apply):
        d = _type_of(t.arg, th)
        c = resolve(t.comb, d, th)
        return comb_type(c, th)[1]
    raise TypeError(f"not a linear term: {t!r}")


def annotate(t: LinTerm, th: LinTheory) -> LinTerm:
    """The same term with every combinator's type arguments filled in."""
    if isinstance(t, TensorTm):
        return TensorTm(annotate(t.left, th), annotate(t.right, th))
    if isinstance(t, Apply):
        arg = annotate(t.arg, th)
        return Apply(resolve(t.comb, _type_of(arg, th), th), arg)
    return t


def cpvp(t: LinTerm, th: LinTheory | None = None) -> tuple[Combinator, LinTerm]:
    """Combinator part and variable part, so that ``t ~ cp(t)(vp(t))``."""
    th = th or LinTheory()
    lin_typecheck(t, th)
    return _cp(annotate(t, th), th), _vp(t)


def _cp(t: LinTerm, th: LinTheory) -> Combinator:
    if isinstance(t, Var):
        return BasicC("id", (t.type,))
    if isinstance(t, One):
        return BasicC("id", (UNIT,))
    if isinstance(t, TensorTm):
        return TensorC(_cp(t.left, th), _cp(t.right, th))
    return Comp(t.comb, _cp(t.arg, th))


def _vp(t: LinTerm) -> LinTerm:
    if isinstance(t, TensorTm):
        return TensorTm(_vp(t.left), _vp(t.right))
    if isinstance(t, Apply):
        return _vp(t.arg)
    return t


def canonical_basic_term(ty: LinType, prefix: str = "v") -> LinTerm:
    """Fresh distinct variables at basic and hom leaves, 1 at I, pairs at tensors."""
    counter = iter(range(1, 1 << 30))

    def go(t: LinType) -> LinTerm:
        if isinstance(t, Unit):
            return One()
        if isinstance(t, Tensor):
            left = go(t.left)
            return TensorTm(left, go(t.right))
        return Var(f"{prefix}{next(counter)}", t)

    return go(ty)


def rename_canonical(t: LinTerm, prefix: str = "v") -> LinTerm:
    """Rename variables to v1, v2, ... in order of occurrence."""
    mapping = {v.name: f"{prefix}{k}" for k, v in enumerate(variables(t), 1)}

    def go(u: LinTerm) -> LinTerm:
        if isinstance(u, Var):
            return Var(mapping[u.name], u.type)
        if isinstance(u, TensorTm):
            return TensorTm(go(u.left), go(u.right))
        if isinstance(u, Apply):
            return Apply(u.comb, go(u.arg))
        return u

    return go(t)
