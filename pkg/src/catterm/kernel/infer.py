"""Domain/codomain inference for morphism terms."""

from __future__ import annotations

from ..errors import ModeError, TypeMismatch, UnknownName
from .modes import Mode, mode_allows
from .signature import Signature
from .terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Del, Dup, Ev, Gen,
                    Id, LeftU, MorTerm, Name, Pair, Par, Proj1, Proj2, RightU,
                    Seq, Unassoc, Uncurry, UnleftU, UnrightU, tag)
from .types import (UNIT, Hom, Tensor, TypeExpr, basic_names, dual,
                    normalize_type, show_type, type_tags)


def _show(t: TypeExpr, sig: Signature) -> str:
    return show_type(t, sig.mode in (Mode.CARTESIAN, Mode.CARTESIAN_CLOSED))


def hom(x: TypeExpr, z: TypeExpr, mode: Mode) -> TypeExpr:
    """Internal hom, or its dual-tensor form in compact mode."""
    return normalize_type(Hom(x, z), mode)


def _check_type_arg(t: TypeExpr, sig: Signature) -> TypeExpr:
    for tg in type_tags(t):
        if tg == "hom" and mode_allows(sig.mode, "dual"):
            continue
        if not mode_allows(sig.mode, tg):
            raise ModeError(f"type constructor '{tg}' not allowed in mode {sig.mode}")
    for n in basic_names(t):
        if not sig.has_object(n):
            raise UnknownName(f"unknown object '{n}'")
    return normalize_type(t, sig.mode)


def infer_dom_cod(t: MorTerm, sig: Signature) -> tuple[TypeExpr, TypeExpr]:
    """Return ``(dom, cod)`` of a term, raising on any ill-formedness."""
    return _infer(t, sig)


def _split_tensor(t: TypeExpr, what: str, sig: Signature) -> tuple[TypeExpr, TypeExpr]:
    if not isinstance(t, Tensor):
        raise TypeMismatch(f"{what}: expected a tensor, got {_show(t, sig)}", t)
    return t.left, t.right


def _split_hom(t: TypeExpr, what: str, sig: Signature) -> tuple[TypeExpr, TypeExpr]:
    if isinstance(t, Hom):
        return t.source, t.target
    if sig.mode == Mode.COMPACT_SYMMETRIC and isinstance(t, Tensor):
        return dual(t.left), t.right
    raise TypeMismatch(f"{what}: expected an internal hom, got {_show(t, sig)}", t)


def _infer(t: MorTerm, sig: Signature) -> tuple[TypeExpr, TypeExpr]:
    tg = tag(t)
    if not mode_allows(sig.mode, tg):
        raise ModeError(f"constructor '{tg}' not allowed in mode {sig.mode}")
    m = sig.mode
    a = lambda ty: _check_type_arg(ty, sig)  # noqa: E731

    if isinstance(t, Gen):
        g = sig.generator(t.name)
        if g is None:
            raise UnknownName(f"unknown generator '{t.name}'")
        return normalize_type(g.dom, m), normalize_type(g.cod, m)
    if isinstance(t, Id):
        x = a(t.at)
        return x, x
    if isinstance(t, Seq):
        d1, c1 = _infer(t.first, sig)
        d2, c2 = _infer(t.then, sig)
        if c1 != d2:
            raise TypeMismatch(
                f"composition mismatch: codomain {_show(c1, sig)} != domain {_show(d2, sig)}",
                c1, d2)
        return d1, c2
    if isinstance(t, Par):
        d1, c1 = _infer(t.left, sig)
        d2, c2 = _infer(t.right, sig)
        return Tensor(d1, d2), Tensor(c1, c2)
    if isinstance(t, Assoc):
        x, y, z = a(t.x), a(t.y), a(t.z)
        return Tensor(Tensor(x, y), z), Tensor(x, Tensor(y, z))
    if isinstance(t, Unassoc):
        x, y, z = a(t.x), a(t.y), a(t.z)
        return Tensor(x, Tensor(y, z)), Tensor(Tensor(x, y), z)
    if isinstance(t, LeftU):
        x = a(t.x)
        return Tensor(UNIT, x), x
    if isinstance(t, UnleftU):
        x = a(t.x)
        return x, Tensor(UNIT, x)
    if isinstance(t, RightU):
        x = a(t.x)
        return Tensor(x, UNIT), x
    if isinstance(t, UnrightU):
        x = a(t.x)
        return x, Tensor(x, UNIT)
    if isinstance(t, Braid):
        x, y = a(t.x), a(t.y)
        return Tensor(x, y), Tensor(y, x)
    if isinstance(t, BraidInv):
        x, y = a(t.x), a(t.y)
        return Tensor(y, x), Tensor(x, y)
    if isinstance(t, Curry):
        d, z = _infer(t.body, sig)
        x, y = _split_tensor(d, "curry", sig)
        return y, hom(x, z, m)
    if isinstance(t, Uncurry):
        y, h = _infer(t.body, sig)
        x, z = _split_hom(h, "uncurry", sig)
        return Tensor(x, y), z
    if isinstance(t, Ev):
        x, y = a(t.x), a(t.y)
        return Tensor(x, hom(x, y, m)), y
    if isinstance(t, Name):
        x, y = _infer(t.body, sig)
        return UNIT, hom(x, y, m)
    if isinstance(t, Cup):
        x = a(t.x)
        return UNIT, Tensor(dual(x), x)
    if isinstance(t, Cap):
        x = a(t.x)
        return Tensor(x, dual(x)), UNIT
    if isinstance(t, Dup):
        x = a(t.x)
        return x, Tensor(x, x)
    if isinstance(t, Del):
        x = a(t.x)
        return x, UNIT
    if isinstance(t, Pair):
        d1, c1 = _infer(t.first, sig)
        d2, c2 = _infer(t.second, sig)
        if d1 != d2:
            raise TypeMismatch(
                f"pair mismatch: domains {_show(d1, sig)} and {_show(d2, sig)} differ", d1, d2)
        return d1, Tensor(c1, c2)
    if isinstance(t, Proj1):
        x, y = a(t.x), a(t.y)
        return Tensor(x, y), x
    if isinstance(t, Proj2):
        x, y = a(t.x), a(t.y)
        return Tensor(x, y), y
    raise TypeError(f"not a morphism term: {t!r}")
