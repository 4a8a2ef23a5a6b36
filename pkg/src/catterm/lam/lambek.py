"""The category of a typed lambda theory, and translations to and from kernel terms.

Contexts compile right-closed: under ``\\a:A`` the context object becomes
``A * Gamma`` (the new variable on the left), so abstraction is exactly
``Curry`` and application is ``pair(arg, fun) ; ev``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..errors import ModeError, TypeMismatch, UnknownName
from ..kernel.infer import infer_dom_cod
from ..kernel.modes import Mode, is_cartesian
from ..kernel.signature import GenDecl, Signature
from ..kernel.terms import (Assoc, Braid, BraidInv, Curry, Del, Dup, Ev, Gen, Id,
                            LeftU, MorTerm, Name, Pair, Par, Proj1, Proj2, RightU,
                            Seq, Unassoc, Uncurry, UnleftU, UnrightU)
from ..kernel.types import UNIT, Hom, Tensor, TypeExpr, basic_names, show_type
from .typed import (EQUAL, P1, P2, Basic, FreeVariableEscape, LambdaTheory, PairT,
                    TApp, TLam, TVar, TypedTerm, UnitT, equiv_typed, free_vars,
                    substitute_typed, typecheck)


@dataclass(frozen=True)
class LMor:
    """The morphism represented by the pair ``(x, t)``."""
    var: TVar
    term: TypedTerm


@dataclass(frozen=True)
class LambekCategory:
    theory: LambdaTheory
    fuel: int = 10_000

    def mor_of(self, x: TVar, t: TypedTerm) -> LMor:
        extra = set(free_vars(t)) - {x.name}
        if extra:
            raise FreeVariableEscape(f"term has free variables {sorted(extra)} besides {x.name}")
        typecheck(t, self.theory, {x.name: x.type})
        return LMor(x, t)

    def identity(self, obj: TypeExpr, name: str = "x") -> LMor:
        v = TVar(name, obj)
        return LMor(v, v)

    def dom(self, f: LMor) -> TypeExpr:
        return f.var.type

    def cod(self, f: LMor) -> TypeExpr:
        return typecheck(f.term, self.theory, {f.var.name: f.var.type})

    def compose(self, f: LMor, g: LMor) -> LMor:
        """First ``f`` then ``g``: the pair ``(x, u[t/y])``."""
        if self.cod(f) != self.dom(g):
            raise TypeMismatch(f"cannot compose: {show_type(self.cod(f), True)} vs "
                               f"{show_type(self.dom(g), True)}")
        return LMor(f.var, substitute_typed(g.term, g.var.name, f.term))

    def equal(self, f: LMor, g: LMor) -> str:
        if self.dom(f) != self.dom(g):
            raise TypeMismatch("morphisms have different domains")
        renamed = substitute_typed(g.term, g.var.name, f.var)
        return equiv_typed(f.term, renamed, {f.var.name}, self.fuel, self.theory)

    def same(self, f: LMor, g: LMor) -> bool:
        return self.equal(f, g) == EQUAL


def lambda_to_ccc(th: LambdaTheory, fuel: int = 10_000) -> LambekCategory:
    return LambekCategory(th, fuel)


# -- lambda theory <-> signature ----------------------------------------------------


def theory_signature(th: LambdaTheory) -> Signature:
    """Each basic term ``c : T`` becomes a generator ``c : 1 -> T``."""
    objs = set(th.basic_types)
    for _, ty in th.basics:
        objs |= basic_names(ty)
    return Signature(Mode.CARTESIAN_CLOSED, tuple(sorted(objs)), tuple(th.aliases),
                     tuple(GenDecl(n, UNIT, ty) for n, ty in th.basics))


def _ctx_obj(ctx: list[TVar]) -> TypeExpr:
    if len(ctx) == 1:
        return ctx[0].type
    return Tensor(ctx[0].type, _ctx_obj(ctx[1:]))


def _lookup(ctx: list[TVar], name: str) -> MorTerm:
    for i, v in enumerate(ctx):
        if v.name == name:
            break
    else:
        raise FreeVariableEscape(f"variable {name!r} is not in the context")
    path: list[MorTerm] = []
    rest = ctx
    for _ in range(i):
        path.append(Proj2(rest[0].type, _ctx_obj(rest[1:])))
        rest = rest[1:]
    if len(rest) > 1:
        path.append(Proj1(rest[0].type, _ctx_obj(rest[1:])))
    if not path:
        return Id(_ctx_obj(ctx))
    out = path[0]
    for p in path[1:]:
        out = Seq(out, p)
    return out


def typed_to_kernel(x: TVar, t: TypedTerm, sig: Signature) -> MorTerm:
    """Compile ``(x, t)`` to a morphism ``type(x) -> type(t)``."""
    if not is_cartesian(sig.mode) or (sig.mode != Mode.CARTESIAN_CLOSED and _uses_hom(t)):
        raise ModeError(f"compiling lambda terms needs a cartesian-closed signature, "
                        f"not {sig.mode}")
    extra = set(free_vars(t)) - {x.name}
    if extra:
        raise FreeVariableEscape(f"term has free variables {sorted(extra)} besides {x.name}")
    return _compile(t, [x], sig)


def _uses_hom(t: TypedTerm) -> bool:
    return isinstance(t, (TLam, TApp)) or any(_uses_hom(c) for c in _kids(t))


def _kids(t: TypedTerm) -> list:
    if isinstance(t, TApp):
        return [t.fun, t.arg]
    if isinstance(t, TLam):
        return [t.body]
    if isinstance(t, PairT):
        return [t.fst, t.snd]
    if isinstance(t, (P1, P2)):
        return [t.of]
    return []


def _compile(t: TypedTerm, ctx: list[TVar], sig: Signature) -> MorTerm:
    gamma = _ctx_obj(ctx)
    if isinstance(t, TVar):
        return _lookup(ctx, t.name)
    if isinstance(t, Basic):
        g = sig.generator(t.name)
        if g is None:
            raise UnknownName(f"basic term {t.name!r} has no generator")
        if g.dom == UNIT and g.cod == t.type:
            return Seq(Del(gamma), Gen(t.name))
        if t.type == Hom(g.dom, g.cod):
            return Seq(Del(gamma), Name(Gen(t.name)))
        raise TypeMismatch(f"generator {t.name} does not have type {show_type(t.type, True)}")
    if isinstance(t, TApp):
        fty = typecheck(t.fun, None, {v.name: v.type for v in ctx})
        return Seq(Pair(_compile(t.arg, ctx, sig), _compile(t.fun, ctx, sig)),
                   Ev(fty.source, fty.target))
    if isinstance(t, TLam):
        # lookup finds the innermost binding first, so shadowing needs no renaming
        return Curry(_compile(t.body, [TVar(t.bound, t.bound_type)] + ctx, sig))
    if isinstance(t, PairT):
        return Pair(_compile(t.fst, ctx, sig), _compile(t.snd, ctx, sig))
    if isinstance(t, (P1, P2)):
        pty = typecheck(t.of, None, {v.name: v.type for v in ctx})
        proj = Proj1 if isinstance(t, P1) else Proj2
        return Seq(_compile(t.of, ctx, sig), proj(pty.left, pty.right))
    if isinstance(t, UnitT):
        return Del(gamma)
    raise TypeError(f"not a typed term: {t!r}")


# -- readback: kernel term -> lambda term ---------------------------------------------


class _Readback:
    def __init__(self, sig: Signature):
        self.sig = sig
        self.counter = itertools.count()

    def fresh(self, ty: TypeExpr) -> TVar:
        return TVar(f"a{next(self.counter)}", ty)

    def go(self, t: MorTerm, x: TypedTerm) -> TypedTerm:
        if isinstance(t, Gen):
            g = self.sig.generator(t.name)
            if g is None:
                raise UnknownName(f"unknown generator {t.name!r}")
            if g.dom == UNIT:
                # a basic term c : T; its unit argument carries nothing
                return Basic(t.name, g.cod)
            return TApp(Basic(t.name, Hom(g.dom, g.cod)), x)
        if isinstance(t, Id):
            return x
        if isinstance(t, Seq):
            mid = self.go(t.first, x)
            if isinstance(mid, TVar):
                return self.go(t.then, mid)
            # share the intermediate value through a redex instead of copying it
            _, c = infer_dom_cod(t.first, self.sig)
            a = self.fresh(c)
            return TApp(TLam(a.name, a.type, self.go(t.then, a)), mid)
        if isinstance(t, Par):
            return PairT(self.go(t.left, P1(x)), self.go(t.right, P2(x)))
        if isinstance(t, Assoc):
            return PairT(P1(P1(x)), PairT(P2(P1(x)), P2(x)))
        if isinstance(t, Unassoc):
            return PairT(PairT(P1(x), P1(P2(x))), P2(P2(x)))
        if isinstance(t, (LeftU,)):
            return P2(x)
        if isinstance(t, RightU):
            return P1(x)
        if isinstance(t, UnleftU):
            return PairT(UnitT(), x)
        if isinstance(t, UnrightU):
            return PairT(x, UnitT())
        if isinstance(t, (Braid, BraidInv)):
            return PairT(P2(x), P1(x))
        if isinstance(t, Dup):
            return PairT(x, x)
        if isinstance(t, Del):
            return UnitT()
        if isinstance(t, Pair):
            return PairT(self.go(t.first, x), self.go(t.second, x))
        if isinstance(t, Proj1):
            return P1(x)
        if isinstance(t, Proj2):
            return P2(x)
        if isinstance(t, Curry):
            d, _ = infer_dom_cod(t.body, self.sig)
            a = self.fresh(d.left)
            return TLam(a.name, a.type, self.go(t.body, PairT(a, x)))
        if isinstance(t, Uncurry):
            return TApp(self.go(t.body, P2(x)), P1(x))
        if isinstance(t, Ev):
            return TApp(P2(x), P1(x))
        if isinstance(t, Name):
            d, _ = infer_dom_cod(t.body, self.sig)
            a = self.fresh(d)
            return TLam(a.name, a.type, self.go(t.body, a))
        raise ModeError(f"{type(t).__name__} has no lambda-calculus reading")


def kernel_to_typed(t: MorTerm, sig: Signature, var: str = "x") -> tuple[TVar, TypedTerm]:
    """Read a cartesian kernel term back as ``(x, term)``; generators become constants."""
    dom, _ = infer_dom_cod(t, sig)
    x = TVar(var, dom)
    return x, _Readback(sig).go(t, x)


def kernel_equiv(t1: MorTerm, t2: MorTerm, sig: Signature, fuel: int = 10_000) -> str:
    """Equality in the free cartesian closed category, via the lambda reading."""
    x, a = kernel_to_typed(t1, sig)
    _, b = kernel_to_typed(t2, sig)
    return equiv_typed(a, b, {x.name}, fuel)
