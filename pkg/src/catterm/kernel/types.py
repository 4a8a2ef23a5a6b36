"""Object expressions: basic names, the unit, tensor, internal hom and duals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .modes import Mode, is_compact


@dataclass(frozen=True)
class BasicType:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Unit:
    def __str__(self) -> str:
        return "I"


@dataclass(frozen=True)
class Tensor:
    left: "TypeExpr"
    right: "TypeExpr"


@dataclass(frozen=True)
class Hom:
    source: "TypeExpr"
    target: "TypeExpr"


@dataclass(frozen=True)
class Dual:
    body: "TypeExpr"


TypeExpr = Union[BasicType, Unit, Tensor, Hom, Dual]

UNIT = Unit()


def dual(t: TypeExpr) -> TypeExpr:
    """Dual with the involution applied syntactically."""
    if isinstance(t, Dual):
        return t.body
    return Dual(t)


def tensor_all(types: list[TypeExpr]) -> TypeExpr:
    """Right-nested tensor of a list; the empty list gives the unit."""
    if not types:
        return UNIT
    out = types[-1]
    for t in reversed(types[:-1]):
        out = Tensor(t, out)
    return out


def expand_compact(t: TypeExpr) -> TypeExpr:
    """Rewrite every ``X -o Y`` to ``X^ * Y`` and collapse double duals."""
    if isinstance(t, (BasicType, Unit)):
        return t
    if isinstance(t, Tensor):
        return Tensor(expand_compact(t.left), expand_compact(t.right))
    if isinstance(t, Hom):
        return Tensor(dual(expand_compact(t.source)), expand_compact(t.target))
    if isinstance(t, Dual):
        return dual(expand_compact(t.body))
    raise TypeError(f"not a type expression: {t!r}")


def normalize_type(t: TypeExpr, mode: Mode) -> TypeExpr:
    return expand_compact(t) if is_compact(mode) else t


def type_tags(t: TypeExpr) -> set[str]:
    """Constructor tags used by a type (for mode checks)."""
    if isinstance(t, BasicType):
        return set()
    if isinstance(t, Unit):
        return {"unit"}
    if isinstance(t, Tensor):
        return {"tensor"} | type_tags(t.left) | type_tags(t.right)
    if isinstance(t, Hom):
        return {"hom"} | type_tags(t.source) | type_tags(t.target)
    if isinstance(t, Dual):
        return {"dual"} | type_tags(t.body)
    raise TypeError(f"not a type expression: {t!r}")


def basic_names(t: TypeExpr) -> set[str]:
    if isinstance(t, BasicType):
        return {t.name}
    if isinstance(t, Unit):
        return set()
    if isinstance(t, Tensor):
        return basic_names(t.left) | basic_names(t.right)
    if isinstance(t, Hom):
        return basic_names(t.source) | basic_names(t.target)
    if isinstance(t, Dual):
        return basic_names(t.body)
    raise TypeError(f"not a type expression: {t!r}")


def subst_type(t: TypeExpr, mapping: dict[str, TypeExpr]) -> TypeExpr:
    if isinstance(t, BasicType):
        return mapping.get(t.name, t)
    if isinstance(t, Unit):
        return t
    if isinstance(t, Tensor):
        return Tensor(subst_type(t.left, mapping), subst_type(t.right, mapping))
    if isinstance(t, Hom):
        return Hom(subst_type(t.source, mapping), subst_type(t.target, mapping))
    if isinstance(t, Dual):
        return dual(subst_type(t.body, mapping))
    raise TypeError(f"not a type expression: {t!r}")


# -- flattening ---------------------------------------------------------------
#
# In a strict monoidal category an object is a word of atoms.  Atoms are basic
# names, duals of basic names, and internal homs (whose insides are flattened
# too, so reassociating inside a hom does not change the atom).


def flatten(t: TypeExpr) -> list[TypeExpr]:
    if isinstance(t, Unit):
        return []
    if isinstance(t, Tensor):
        return flatten(t.left) + flatten(t.right)
    if isinstance(t, Dual):
        b = t.body
        if isinstance(b, Unit):
            return []
        if isinstance(b, Tensor):
            return flatten(dual(b.left)) + flatten(dual(b.right))
        if isinstance(b, Dual):
            return flatten(b.body)
        return [t]
    return [t]


def atom_key(a: TypeExpr) -> str:
    """Canonical string for an atom, identical for strictly equal atoms."""
    if isinstance(a, BasicType):
        return a.name
    if isinstance(a, Dual):
        return atom_key(a.body) + "^"
    if isinstance(a, Hom):
        src = ",".join(atom_key(x) for x in flatten(a.source))
        tgt = ",".join(atom_key(x) for x in flatten(a.target))
        return f"[{src}]-o[{tgt}]"
    raise TypeError(f"not an atom: {a!r}")


def flat_keys(t: TypeExpr) -> tuple[str, ...]:
    return tuple(atom_key(a) for a in flatten(t))


# -- printing -----------------------------------------------------------------

_PREC_HOM, _PREC_TENSOR, _PREC_POSTFIX = 1, 2, 3


def show_type(t: TypeExpr, cartesian: bool = False) -> str:
    return _show(t, cartesian, 0)


def _show(t: TypeExpr, cart: bool, ctx: int) -> str:
    if isinstance(t, BasicType):
        return t.name
    if isinstance(t, Unit):
        return "1" if cart else "I"
    if isinstance(t, Tensor):
        # '*' is left-associative
        s = f"{_show(t.left, cart, _PREC_TENSOR)} * {_show(t.right, cart, _PREC_TENSOR + 1)}"
        return f"({s})" if ctx > _PREC_TENSOR else s
    if isinstance(t, Hom):
        # '-o' is right-associative
        s = f"{_show(t.source, cart, _PREC_HOM + 1)} -o {_show(t.target, cart, _PREC_HOM)}"
        return f"({s})" if ctx > _PREC_HOM else s
    if isinstance(t, Dual):
        return _show(t.body, cart, _PREC_POSTFIX) + "^"
    raise TypeError(f"not a type expression: {t!r}")
