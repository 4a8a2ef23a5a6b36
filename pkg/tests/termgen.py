"""Random well-typed kernel terms for property tests."""

from __future__ import annotations

import random

from catterm.kernel import (UNIT, Assoc, BasicType, Braid, BraidInv, Cap, Cup, Curry, Del, Dup,
                            Ev, Gen, GenDecl, Hom, Id, LeftU, Mode, Par, RightU, Seq, Signature,
                            Tensor, Unassoc, Uncurry, UnleftU, UnrightU, infer_dom_cod)
from catterm.kernel.modes import is_cartesian, is_closed, is_compact, is_symmetric, mode_leq
from catterm.kernel.terms import subterms
from catterm.kernel.types import Dual

X, Y, Z = BasicType("X"), BasicType("Y"), BasicType("Z")


def signature_for(mode: Mode) -> Signature:
    gens = [GenDecl("f", X, Y), GenDecl("g", Tensor(Y, Z), X), GenDecl("h", X, Tensor(X, Z)),
            GenDecl("e", Y, Y)]
    if is_closed(mode) and not is_compact(mode):
        gens.append(GenDecl("k", Z, Hom(X, Y)))
    return Signature(mode, ("X", "Y", "Z"), (), tuple(gens))


def _braided(m: Mode) -> bool:
    return mode_leq(Mode.BRAIDED, m)


class TermGen:
    def __init__(self, sig: Signature, rng: random.Random):
        self.sig = sig
        self.rng = rng

    def options(self, ty, depth: int = 1) -> list:
        m = self.sig.mode
        out: list = [Id(ty), UnleftU(ty), UnrightU(ty)]
        out += [Gen(g.name) for g in self.sig.generators if g.dom == ty]
        if isinstance(ty, Tensor):
            l, r = ty.left, ty.right
            if l == UNIT:
                out.append(LeftU(r))
            if r == UNIT:
                out.append(RightU(l))
            if isinstance(l, Tensor):
                out.append(Assoc(l.left, l.right, r))
            if isinstance(r, Tensor):
                out.append(Unassoc(l, r.left, r.right))
            if _braided(m):
                out += [Braid(l, r), BraidInv(r, l)]
            if is_closed(m) and isinstance(r, Hom) and r.source == l:
                out.append(Ev(l, r.target))
            if is_compact(m) and isinstance(r, Dual) and r.body == l:
                out.append(Cap(l))
            if depth > 0:
                out.append(Par(self.pick(l, depth - 1), Id(r)))
                out.append(Par(Id(l), self.pick(r, depth - 1)))
        if is_cartesian(m):
            out.append(Dup(ty))
            if ty != UNIT:
                out.append(Del(ty))
        if ty == UNIT and is_compact(m):
            out.append(Cup(X))
        if is_closed(m) and not is_compact(m) and depth > 0:
            bodies = [o for o in self.options(Tensor(X, ty), depth - 1) if not isinstance(o, Id)]
            if bodies:
                out.append(Curry(self.rng.choice(bodies)))
        return out

    def pick(self, ty, depth: int = 1):
        return self.rng.choice(self.options(ty, depth))

    def term(self, dom=None, steps: int = 4):
        rng = self.rng
        if dom is None:
            dom = rng.choice([X, Tensor(X, Y), Tensor(Y, Z), Tensor(Tensor(X, Y), Z),
                              Tensor(X, X)])
        t, cod = Id(dom), dom
        for _ in range(rng.randint(1, steps)):
            t = Seq(t, self.pick(cod))
            cod = infer_dom_cod(t, self.sig)[1]
            if width(cod) > 4:
                break
        return t

    def detour(self, ty):
        """A composite on ``ty`` that the axioms of the mode make an identity."""
        m = self.sig.mode
        opts = [Seq(UnleftU(ty), LeftU(ty)), Seq(UnrightU(ty), RightU(ty))]
        if isinstance(ty, Tensor):
            l, r = ty.left, ty.right
            if _braided(m):
                opts.append(Seq(Braid(l, r), BraidInv(l, r)))
            if is_symmetric(m):
                opts.append(Seq(Braid(l, r), Braid(r, l)))
            if isinstance(l, Tensor):
                opts.append(Seq(Assoc(l.left, l.right, r), Unassoc(l.left, l.right, r)))
            if is_closed(m) and not is_compact(m):
                opts.append(Uncurry(Curry(Id(ty))))
        if is_cartesian(m):
            opts.append(Seq(Seq(Dup(ty), Par(Id(ty), Del(ty))), RightU(ty)))
        if is_compact(m) and isinstance(ty, BasicType):
            opts.append(zigzag(ty))
        return self.rng.choice(opts)

    def pair(self):
        """Two terms with the same type, often equal by construction."""
        rng = self.rng
        t = self.term()
        dom, cod = infer_dom_cod(t, self.sig)
        if rng.random() < 0.4:
            if rng.random() < 0.5:
                return t, Seq(t, self.detour(cod))
            return t, Seq(self.detour(dom), t)
        for _ in range(30):
            u = self.term(dom)
            if infer_dom_cod(u, self.sig)[1] == cod:
                return t, u
        return t, Seq(t, Id(cod))


def zigzag(x):
    """x -> x*I -> x*(x^*x) -> (x*x^)*x -> I*x -> x"""
    return Seq(Seq(UnrightU(x), Par(Id(x), Cup(x))),
               Seq(Unassoc(x, Dual(x), x), Seq(Par(Cap(x), Id(x)), LeftU(x))))


def width(ty) -> int:
    if isinstance(ty, Tensor):
        return width(ty.left) + width(ty.right)
    return 1


def too_big(m, terms, limit: int = 1 << 12) -> bool:
    """Whether evaluating ``terms`` in ``m`` would touch a carrier product over ``limit``."""
    for t in terms:
        for u in subterms(t):
            d, c = infer_dom_cod(u, m.sig)
            if m.size(d) * m.size(c) > limit:
                return True
    return False
