"""Signatures: a mode plus declared objects, aliases, generators and named terms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .modes import Mode, mode_allows
from .terms import MorTerm
from .types import TypeExpr, basic_names, show_type, type_tags


@dataclass(frozen=True)
class GenDecl:
    name: str
    dom: TypeExpr
    cod: TypeExpr


@dataclass(frozen=True)
class Signature:
    mode: Mode
    objects: tuple[str, ...] = ()
    aliases: tuple[tuple[str, TypeExpr], ...] = ()
    generators: tuple[GenDecl, ...] = ()
    terms: tuple[tuple[str, MorTerm], ...] = ()
    # lenient signatures accept any identifier as an object
    open_objects: bool = field(default=False, compare=False)

    def generator(self, name: str) -> GenDecl | None:
        for g in self.generators:
            if g.name == name:
                return g
        return None

    def alias(self, name: str) -> TypeExpr | None:
        for n, t in self.aliases:
            if n == name:
                return t
        return None

    def term(self, name: str) -> MorTerm | None:
        for n, t in self.terms:
            if n == name:
                return t
        return None

    def has_object(self, name: str) -> bool:
        return self.open_objects or name in self.objects

    def with_mode(self, mode: Mode) -> "Signature":
        return Signature(mode, self.objects, self.aliases, self.generators,
                         self.terms, self.open_objects)

    def extend(self, objects=(), generators=()) -> "Signature":
        objs = tuple(self.objects) + tuple(o for o in objects if o not in self.objects)
        return Signature(self.mode, objs, self.aliases,
                         tuple(self.generators) + tuple(generators),
                         self.terms, self.open_objects)


def open_signature(mode: Mode = Mode.CLOSED_SYMMETRIC) -> Signature:
    """A signature in which every identifier names a basic object."""
    return Signature(mode, open_objects=True)


@dataclass(frozen=True)
class Violation:
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.where}: {self.message}"


def _check_type(t: TypeExpr, sig: Signature, where: str, out: list[Violation]) -> None:
    cart = sig.mode in (Mode.CARTESIAN, Mode.CARTESIAN_CLOSED)
    for tag in sorted(type_tags(t)):
        if not mode_allows(sig.mode, tag):
            out.append(Violation(where, f"type constructor '{tag}' not allowed in mode {sig.mode}"
                                        f" (in {show_type(t, cart)})"))
    for n in sorted(basic_names(t)):
        if not sig.has_object(n):
            out.append(Violation(where, f"undeclared object '{n}'"))


def validate_signature(sig: Signature) -> list[Violation]:
    """List every violated signature invariant; empty means valid."""
    out: list[Violation] = []
    seen: dict[str, str] = {}

    def claim(name: str, kind: str) -> None:
        if name in seen:
            out.append(Violation(f"{kind} {name}", f"duplicate name (already declared as {seen[name]})"))
        else:
            seen[name] = kind

    for o in sig.objects:
        claim(o, "object")
    for n, t in sig.aliases:
        claim(n, "alias")
        _check_type(t, sig, f"alias {n}", out)
    for g in sig.generators:
        claim(g.name, "generator")
        _check_type(g.dom, sig, f"generator {g.name}", out)
        _check_type(g.cod, sig, f"generator {g.name}", out)
    if sig.terms:
        from .infer import infer_dom_cod  # local: infer depends on this module
        from ..errors import CatTermError
        for n, t in sig.terms:
            claim(n, "term")
            try:
                infer_dom_cod(t, sig)
            except CatTermError as e:
                out.append(Violation(f"term {n}", str(e)))
    return out
