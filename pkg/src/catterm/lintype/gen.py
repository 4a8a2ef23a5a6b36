"""Seeded random linear terms and combinators, for property tests."""

from __future__ import annotations

import itertools
import random

from ..kernel.signature import GenDecl
from ..kernel.types import UNIT, BasicType, Hom, Tensor, TypeExpr, Unit
from .core import (Apply, BasicC, Comp, Combinator, CurryC, FnSym, LinTerm, LinTheory, One,
                   TensorC, TensorTm, Var, _infer_at, comb_type)

X, Y, Z = BasicType("X"), BasicType("Y"), BasicType("Z")

SAMPLE_THEORY = LinTheory(
    ("X", "Y", "Z"),
    (GenDecl("f", Tensor(Y, Z), X), GenDecl("g", X, Y), GenDecl("h", Tensor(X, Y), Z),
     GenDecl("k", Z, Hom(X, Y)), GenDecl("u", UNIT, X)),
)


def _leaf_types(th: LinTheory) -> list[TypeExpr]:
    base = [BasicType(n) for n in th.basic_types] or [X]
    return base + [UNIT, Hom(base[0], base[-1])]


def applicable(ty: TypeExpr, th: LinTheory, rng: random.Random, depth: int = 2) -> list[Combinator]:
    """Annotated combinators with domain ``ty``."""
    out: list[Combinator] = []
    for tag in ("id", "assoc", "unassoc", "braid", "left", "unleft", "right", "unright", "eval"):
        at = _infer_at(tag, ty)
        if at is not None:
            out.append(BasicC(tag, at))
    for g in th.functions:
        if g.dom == ty:
            out.append(FnSym(g.name))
        if isinstance(g.dom, Tensor) and g.dom.right == ty:
            out.append(CurryC(FnSym(g.name)))
    if depth > 0 and isinstance(ty, Tensor):
        ls = applicable(ty.left, th, rng, depth - 1)
        rs = applicable(ty.right, th, rng, depth - 1)
        out.append(TensorC(rng.choice(ls), rng.choice(rs)))
    if depth > 0 and out:
        first = rng.choice(out)
        mid = comb_type(first, th)[1]
        out.append(Comp(rng.choice(applicable(mid, th, rng, depth - 1)), first))
    return out


def random_lin_term(th: LinTheory, rng: random.Random, size: int = 12,
                    names=None) -> LinTerm:
    """A well-typed, variable-linear term with at most ``size`` nodes."""
    names = names if names is not None else (f"x{k}" for k in itertools.count())
    return _term(th, rng, max(1, size), names)[0]


def _term(th, rng, size, names) -> tuple[LinTerm, TypeExpr]:
    if size <= 1 or rng.random() < 0.15:
        ty = rng.choice(_leaf_types(th))
        if isinstance(ty, Unit) and rng.random() < 0.5:
            return One(), UNIT
        return Var(next(names), ty), ty
    if size >= 3 and rng.random() < 0.45:
        k = rng.randint(1, size - 2)
        a, ta = _term(th, rng, k, names)
        b, tb = _term(th, rng, size - 1 - k, names)
        return TensorTm(a, b), Tensor(ta, tb)
    s, ts = _term(th, rng, size - 1, names)
    c = rng.choice(applicable(ts, th, rng))
    return Apply(c, s), comb_type(c, th)[1]


def random_combinator(th: LinTheory, rng: random.Random, dom: TypeExpr, steps: int = 3) -> Combinator:
    c: Combinator = BasicC("id", (dom,))
    for _ in range(rng.randint(1, steps)):
        cod = comb_type(c, th)[1]
        c = Comp(rng.choice(applicable(cod, th, rng)), c)
    return c


def random_pair(th: LinTheory, rng: random.Random) -> tuple[Combinator, Combinator]:
    """Two combinators with the same type; some equivalent by construction, some not."""
    dom = rng.choice([Tensor(X, Y), Tensor(Tensor(X, Y), Z), Tensor(X, X), Tensor(Y, Y), Y,
                      Tensor(UNIT, Z)])
    f = random_combinator(th, rng, dom)
    d, cod = comb_type(f, th)
    roll = rng.random()
    if roll < 0.3:
        # insert an identity-like detour after f
        detours = [BasicC("id", (cod,))]
        if isinstance(cod, Tensor):
            detours.append(Comp(BasicC("braid", (cod.right, cod.left)),
                                BasicC("braid", (cod.left, cod.right))))
        detours.append(Comp(BasicC("left", (cod,)), BasicC("unleft", (cod,))))
        return f, Comp(rng.choice(detours), f)
    if roll < 0.55 and isinstance(d, Tensor) and d.left == d.right:
        # precomposing with a swap of two like strands usually changes the map
        return f, Comp(f, BasicC("braid", (d.left, d.right)))
    for _ in range(40):
        g = random_combinator(th, rng, d)
        if comb_type(g, th)[1] == cod:
            return f, g
    if isinstance(cod, Tensor) and cod.left == cod.right:
        return f, Comp(BasicC("braid", (cod.left, cod.right)), f)
    return f, f
