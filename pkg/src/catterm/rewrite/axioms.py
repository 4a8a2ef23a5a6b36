"""Coherence axiom schemas and canonical structural isomorphisms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..kernel.modes import Mode, mode_leq
from ..kernel.signature import GenDecl
from ..kernel.terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Del, Dup,
                            Ev, Gen, Id, LeftU, MorTerm, Name, Par, Pair,
                            Proj1, Proj2, RightU, Seq, Unassoc, UnleftU,
                            UnrightU, seq_all, subst_term_types)
from ..kernel.types import (UNIT, BasicType, Dual, Hom, Tensor, TypeExpr, Unit,
                            tensor_all)

W, X, Y, Z = (BasicType(n) for n in "WXYZ")
X2, Y2 = BasicType("X'"), BasicType("Y'")


@dataclass(frozen=True)
class Axiom:
    name: str
    mode: Mode
    lhs: MorTerm
    rhs: MorTerm
    objects: tuple[str, ...]
    generators: tuple[GenDecl, ...] = ()

    def instantiate(self, mapping: dict[str, TypeExpr]) -> tuple[MorTerm, MorTerm]:
        return subst_term_types(self.lhs, mapping), subst_term_types(self.rhs, mapping)


def _axioms() -> list[Axiom]:
    f = GenDecl("f", X, X2)
    g = GenDecl("g", Y, Y2)
    h = GenDecl("h", Z, BasicType("Z'"))
    fc = GenDecl("f", Tensor(X, Y), Z)
    gc = GenDecl("g", Y, Hom(X, Z))
    xd = Dual(X)
    return [
        Axiom("triangle", Mode.MONOIDAL,
              Seq(Assoc(X, UNIT, Y), Par(Id(X), LeftU(Y))),
              Par(RightU(X), Id(Y)), ("X", "Y")),
        Axiom("pentagon", Mode.MONOIDAL,
              seq_all([Par(Assoc(W, X, Y), Id(Z)), Assoc(W, Tensor(X, Y), Z),
                       Par(Id(W), Assoc(X, Y, Z))]),
              Seq(Assoc(Tensor(W, X), Y, Z), Assoc(W, X, Tensor(Y, Z))),
              ("W", "X", "Y", "Z")),
        Axiom("assoc-naturality", Mode.MONOIDAL,
              Seq(Par(Par(Gen("f"), Gen("g")), Gen("h")), Assoc(X2, Y2, BasicType("Z'"))),
              Seq(Assoc(X, Y, Z), Par(Gen("f"), Par(Gen("g"), Gen("h")))),
              ("X", "Y", "Z", "X'", "Y'", "Z'"), (f, g, h)),
        Axiom("hexagon-1", Mode.BRAIDED,
              seq_all([Assoc(X, Y, Z), Braid(X, Tensor(Y, Z)), Assoc(Y, Z, X)]),
              seq_all([Par(Braid(X, Y), Id(Z)), Assoc(Y, X, Z), Par(Id(Y), Braid(X, Z))]),
              ("X", "Y", "Z")),
        Axiom("hexagon-2", Mode.BRAIDED,
              seq_all([Unassoc(X, Y, Z), Braid(Tensor(X, Y), Z), Unassoc(Z, X, Y)]),
              seq_all([Par(Id(X), Braid(Y, Z)), Unassoc(X, Z, Y), Par(Braid(X, Z), Id(Y))]),
              ("X", "Y", "Z")),
        Axiom("braid-inverse", Mode.BRAIDED,
              Seq(Braid(X, Y), BraidInv(X, Y)), Id(Tensor(X, Y)), ("X", "Y")),
        Axiom("braid-inverse-2", Mode.BRAIDED,
              Seq(BraidInv(X, Y), Braid(X, Y)), Id(Tensor(Y, X)), ("X", "Y")),
        Axiom("yang-baxter", Mode.BRAIDED,
              seq_all([Par(Braid(X, Y), Id(Z)), Assoc(Y, X, Z), Par(Id(Y), Braid(X, Z)),
                       Unassoc(Y, Z, X), Par(Braid(Y, Z), Id(X))]),
              seq_all([Assoc(X, Y, Z), Par(Id(X), Braid(Y, Z)), Unassoc(X, Z, Y),
                       Par(Braid(X, Z), Id(Y)), Assoc(Z, X, Y), Par(Id(Z), Braid(X, Y)),
                       Unassoc(Z, Y, X)]),
              ("X", "Y", "Z")),
        Axiom("braid-naturality", Mode.BRAIDED,
              Seq(Par(Gen("f"), Gen("g")), Braid(X2, Y2)),
              Seq(Braid(X, Y), Par(Gen("g"), Gen("f"))),
              ("X", "Y", "X'", "Y'"), (f, g)),
        Axiom("symmetry", Mode.SYMMETRIC,
              Seq(Braid(X, Y), Braid(Y, X)), Id(Tensor(X, Y)), ("X", "Y")),
        Axiom("dup-del-right", Mode.CARTESIAN,
              seq_all([Dup(X), Par(Id(X), Del(X)), RightU(X)]), Id(X), ("X",)),
        Axiom("dup-del-left", Mode.CARTESIAN,
              seq_all([Dup(X), Par(Del(X), Id(X)), LeftU(X)]), Id(X), ("X",)),
        Axiom("dup-cocommutative", Mode.CARTESIAN,
              Seq(Dup(X), Braid(X, X)), Dup(X), ("X",)),
        Axiom("pair-projections", Mode.CARTESIAN,
              Pair(Proj1(X, Y), Proj2(X, Y)), Id(Tensor(X, Y)), ("X", "Y")),
        Axiom("curry-eval", Mode.CLOSED_MONOIDAL,
              Seq(Par(Id(X), Curry(Gen("f"))), Ev(X, Z)), Gen("f"),
              ("X", "Y", "Z"), (fc,)),
        Axiom("curry-eta", Mode.CLOSED_MONOIDAL,
              Curry(Seq(Par(Id(X), Gen("g")), Ev(X, Z))), Gen("g"),
              ("X", "Y", "Z"), (gc,)),
        Axiom("name-eval", Mode.CLOSED_MONOIDAL,
              seq_all([UnrightU(X), Par(Id(X), Name(Gen("f"))), Ev(X, X2)]), Gen("f"),
              ("X", "X'"), (f,)),
        Axiom("zigzag-1", Mode.COMPACT_SYMMETRIC,
              seq_all([UnrightU(X), Par(Id(X), Cup(X)), Unassoc(X, xd, X),
                       Par(Cap(X), Id(X)), LeftU(X)]),
              Id(X), ("X",)),
        Axiom("zigzag-2", Mode.COMPACT_SYMMETRIC,
              seq_all([UnleftU(xd), Par(Cup(X), Id(xd)), Assoc(xd, X, xd),
                       Par(Id(xd), Cap(X)), RightU(xd)]),
              Id(xd), ("X",)),
    ]


AXIOMS = _axioms()


def coherence_axioms(m: Mode) -> list[Axiom]:
    """Axiom schemas that hold in every category of mode ``m``."""
    return [a for a in AXIOMS if mode_leq(a.mode, m)]


# -- canonical isomorphisms ------------------------------------------------------


def _words(t: TypeExpr) -> list[TypeExpr]:
    if isinstance(t, Unit):
        return []
    if isinstance(t, Tensor):
        return _words(t.left) + _words(t.right)
    return [t]


def _merge(a: list[TypeExpr], b: list[TypeExpr]) -> list[MorTerm]:
    """tensor_all(a) * tensor_all(b)  ->  tensor_all(a + b)"""
    if not a:
        return [LeftU(tensor_all(b))]
    if not b:
        return [RightU(tensor_all(a))]
    if len(a) == 1:
        return []
    rest = a[1:]
    inner = _merge(rest, b)
    steps: list[MorTerm] = [Assoc(a[0], tensor_all(rest), tensor_all(b))]
    if inner:
        steps.append(Par(Id(a[0]), seq_all(inner)))
    return steps


def to_right_nested(t: TypeExpr) -> list[MorTerm]:
    """Structural steps from ``t`` to the right-nested word of its atoms."""
    if not isinstance(t, Tensor):
        return []
    a, b = _words(t.left), _words(t.right)
    steps: list[MorTerm] = []
    la, lb = to_right_nested(t.left), to_right_nested(t.right)
    if la or lb:
        steps.append(Par(seq_all(la) if la else Id(t.left), seq_all(lb) if lb else Id(t.right)))
    return steps + _merge(a, b)


def _left_nest(ws: list[TypeExpr]) -> TypeExpr:
    if not ws:
        return UNIT
    out = ws[0]
    for w in ws[1:]:
        out = Tensor(out, w)
    return out


def _right_to_left(ws: list[TypeExpr]) -> list[MorTerm]:
    """tensor_all(ws) -> left-nested word."""
    if len(ws) <= 2:
        return []
    # a * R  where R = tensor_all(ws[1:]); first left-nest R, then pull a inside.
    a, rest = ws[0], ws[1:]
    steps: list[MorTerm] = []
    inner = _right_to_left(rest)
    if inner:
        steps.append(Par(Id(a), seq_all(inner)))
    # a * (((r1 * r2) * ...) * rk)  ->  ((a * r1) * ...) * rk
    steps += _absorb(a, rest)
    return steps


def _absorb(a: TypeExpr, rest: list[TypeExpr]) -> list[MorTerm]:
    """a * leftnest(rest) -> leftnest([a] + rest)"""
    if len(rest) == 1:
        return []
    init, last = rest[:-1], rest[-1]
    steps: list[MorTerm] = [Unassoc(a, _left_nest(init), last)]
    inner = _absorb(a, init)
    if inner:
        steps.append(Par(seq_all(inner), Id(last)))
    return steps


def invert(t: MorTerm) -> MorTerm:
    """Inverse of a structural term built from isomorphisms."""
    if isinstance(t, Seq):
        return Seq(invert(t.then), invert(t.first))
    if isinstance(t, Par):
        return Par(invert(t.left), invert(t.right))
    if isinstance(t, Id):
        return t
    pairs = {Assoc: Unassoc, Unassoc: Assoc, LeftU: UnleftU, UnleftU: LeftU,
             RightU: UnrightU, UnrightU: RightU}
    if type(t) in pairs:
        args = [getattr(t, f) for f in t.__dataclass_fields__]
        return pairs[type(t)](*args)
    if isinstance(t, Braid):
        return BraidInv(t.x, t.y)
    if isinstance(t, BraidInv):
        return Braid(t.x, t.y)
    raise ValueError(f"cannot invert {t!r}")


def canonical_iso(src: TypeExpr, dst: TypeExpr, via: str = "right") -> MorTerm:
    """The structural isomorphism between two bracketings of the same word.

    ``via`` picks the intermediate normal form ("right" or "left" nested),
    which gives two syntactically different composites with the same
    endpoints.
    """
    if _words(src) != _words(dst):
        raise ValueError("canonical_iso: the two objects have different atoms")
    if src == dst:
        return Id(src)
    go = to_right_nested if via == "right" else _to_left
    steps = go(src) + [invert(s) for s in reversed(go(dst))]
    return seq_all(steps) if steps else Id(src)


def _to_left(t: TypeExpr) -> list[MorTerm]:
    return to_right_nested(t) + _right_to_left(_words(t))


# -- bracketings ------------------------------------------------------------------


@lru_cache(maxsize=None)
def _bracketings(n: int) -> tuple:
    if n == 1:
        return ("*",)
    out = []
    for k in range(1, n):
        for left in _bracketings(k):
            for right in _bracketings(n - k):
                out.append((left, right))
    return tuple(out)


def parenthesizations(atoms: list[TypeExpr]) -> list[TypeExpr]:
    """Every binary bracketing of the word ``atoms`` (units included as atoms)."""
    def build(shape, it):
        if shape == "*":
            return next(it)
        return Tensor(build(shape[0], it), build(shape[1], it))
    return [build(s, iter(atoms)) for s in _bracketings(len(atoms))]
