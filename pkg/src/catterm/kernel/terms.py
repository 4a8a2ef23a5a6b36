"""Morphism terms.

Composition is diagrammatic: ``Seq(f, g)`` is "first f, then g".
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Iterator, Union

from .types import TypeExpr, subst_type


@dataclass(frozen=True)
class Gen:
    name: str


@dataclass(frozen=True)
class Id:
    at: TypeExpr


@dataclass(frozen=True)
class Seq:
    first: "MorTerm"
    then: "MorTerm"


@dataclass(frozen=True)
class Par:
    left: "MorTerm"
    right: "MorTerm"


@dataclass(frozen=True)
class Assoc:
    """(X * Y) * Z -> X * (Y * Z)"""
    x: TypeExpr
    y: TypeExpr
    z: TypeExpr


@dataclass(frozen=True)
class Unassoc:
    """X * (Y * Z) -> (X * Y) * Z"""
    x: TypeExpr
    y: TypeExpr
    z: TypeExpr


@dataclass(frozen=True)
class LeftU:
    """I * X -> X"""
    x: TypeExpr


@dataclass(frozen=True)
class UnleftU:
    x: TypeExpr


@dataclass(frozen=True)
class RightU:
    """X * I -> X"""
    x: TypeExpr


@dataclass(frozen=True)
class UnrightU:
    x: TypeExpr


@dataclass(frozen=True)
class Braid:
    """X * Y -> Y * X"""
    x: TypeExpr
    y: TypeExpr


@dataclass(frozen=True)
class BraidInv:
    """Y * X -> X * Y, the inverse of ``Braid(x, y)``."""
    x: TypeExpr
    y: TypeExpr


@dataclass(frozen=True)
class Curry:
    """f : X * Y -> Z  gives  Y -> (X -o Z)."""
    body: "MorTerm"


@dataclass(frozen=True)
class Uncurry:
    """g : Y -> (X -o Z)  gives  X * Y -> Z."""
    body: "MorTerm"


@dataclass(frozen=True)
class Ev:
    """X * (X -o Y) -> Y"""
    x: TypeExpr
    y: TypeExpr


@dataclass(frozen=True)
class Cup:
    """I -> X^ * X"""
    x: TypeExpr


@dataclass(frozen=True)
class Cap:
    """X * X^ -> I"""
    x: TypeExpr


@dataclass(frozen=True)
class Dup:
    x: TypeExpr


@dataclass(frozen=True)
class Del:
    x: TypeExpr


@dataclass(frozen=True)
class Pair:
    first: "MorTerm"
    second: "MorTerm"


@dataclass(frozen=True)
class Proj1:
    x: TypeExpr
    y: TypeExpr


@dataclass(frozen=True)
class Proj2:
    x: TypeExpr
    y: TypeExpr


@dataclass(frozen=True)
class Name:
    """f : X -> Y  gives its name  I -> (X -o Y)."""
    body: "MorTerm"


MorTerm = Union[
    Gen, Id, Seq, Par, Assoc, Unassoc, LeftU, UnleftU, RightU, UnrightU,
    Braid, BraidInv, Curry, Uncurry, Ev, Cup, Cap, Dup, Del, Pair, Proj1,
    Proj2, Name,
]

TAG_OF = {
    Gen: "gen", Id: "id", Seq: "seq", Par: "par", Assoc: "assoc",
    Unassoc: "unassoc", LeftU: "left", UnleftU: "unleft", RightU: "right",
    UnrightU: "unright", Braid: "braid", BraidInv: "braidinv", Curry: "curry",
    Uncurry: "uncurry", Ev: "ev", Cup: "cup", Cap: "cap", Dup: "dup",
    Del: "del", Pair: "pair", Proj1: "p1", Proj2: "p2", Name: "name",
}

# constructors whose fields are all types
STRUCTURAL = (Assoc, Unassoc, LeftU, UnleftU, RightU, UnrightU, Braid,
              BraidInv, Ev, Cup, Cap, Dup, Del, Proj1, Proj2)

SYMMETRIC_FRAGMENT = (Gen, Id, Seq, Par, Assoc, Unassoc, LeftU, UnleftU,
                      RightU, UnrightU, Braid, BraidInv)


def tag(t: MorTerm) -> str:
    return TAG_OF[type(t)]


def children(t: MorTerm) -> list[MorTerm]:
    if isinstance(t, (Seq,)):
        return [t.first, t.then]
    if isinstance(t, Par):
        return [t.left, t.right]
    if isinstance(t, Pair):
        return [t.first, t.second]
    if isinstance(t, (Curry, Uncurry, Name)):
        return [t.body]
    return []


def subterms(t: MorTerm) -> Iterator[MorTerm]:
    yield t
    for c in children(t):
        yield from subterms(c)


def tags_used(t: MorTerm) -> set[str]:
    return {tag(s) for s in subterms(t)}


def generators_used(t: MorTerm) -> set[str]:
    return {s.name for s in subterms(t) if isinstance(s, Gen)}


def in_symmetric_fragment(t: MorTerm) -> bool:
    return all(isinstance(s, SYMMETRIC_FRAGMENT) for s in subterms(t))


def size(t: MorTerm) -> int:
    return 1 + sum(size(c) for c in children(t))


def seq_all(terms: list[MorTerm]) -> MorTerm:
    """Left-to-right diagrammatic composite of a non-empty list."""
    out = terms[0]
    for t in terms[1:]:
        out = Seq(out, t)
    return out


def map_types(t: MorTerm, fn) -> MorTerm:
    """Apply ``fn`` to every type argument in ``t``."""
    if isinstance(t, Gen):
        return t
    if isinstance(t, (Seq, Par, Pair, Curry, Uncurry, Name)):
        return type(t)(*[map_types(c, fn) for c in children(t)])
    # all remaining constructors carry only types
    return type(t)(*[fn(getattr(t, f.name)) for f in fields(t)])


def subst_term_types(t: MorTerm, mapping: dict[str, TypeExpr]) -> MorTerm:
    return map_types(t, lambda ty: subst_type(ty, mapping))
