"""Typed lambda calculus with products and unit, decided by normalization by evaluation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..errors import CatTermError, FuelExhausted, TypeMismatch, UnknownName
from ..kernel.types import UNIT, BasicType, Hom, Tensor, TypeExpr, Unit, show_type


@dataclass(frozen=True)
class TVar:
    name: str
    type: TypeExpr


@dataclass(frozen=True)
class Basic:
    name: str
    type: TypeExpr


@dataclass(frozen=True)
class TApp:
    fun: "TypedTerm"
    arg: "TypedTerm"


@dataclass(frozen=True)
class TLam:
    bound: str
    bound_type: TypeExpr
    body: "TypedTerm"


@dataclass(frozen=True)
class PairT:
    fst: "TypedTerm"
    snd: "TypedTerm"


@dataclass(frozen=True)
class P1:
    of: "TypedTerm"


@dataclass(frozen=True)
class P2:
    of: "TypedTerm"


@dataclass(frozen=True)
class UnitT:
    pass


TypedTerm = Union[TVar, Basic, TApp, TLam, PairT, P1, P2, UnitT]


@dataclass(frozen=True)
class LambdaTheory:
    basic_types: tuple[str, ...] = ()
    aliases: tuple[tuple[str, TypeExpr], ...] = ()
    basics: tuple[tuple[str, TypeExpr], ...] = ()
    defs: tuple[tuple[str, TypedTerm], ...] = field(default=(), compare=False)

    def basic(self, name: str) -> TypeExpr | None:
        return dict(self.basics).get(name)


class FreeVariableEscape(CatTermError):
    pass


# -- typing -------------------------------------------------------------------------


def typecheck(t: TypedTerm, th: LambdaTheory | None = None,
              env: dict[str, TypeExpr] | None = None) -> TypeExpr:
    """The type of ``t``. Variables carry their types; bound ones must match their binder."""
    return _tc(t, th, dict(env or {}), {})


def _tc(t, th, free, bound) -> TypeExpr:
    if isinstance(t, TVar):
        if t.name in bound:
            if bound[t.name] != t.type:
                raise TypeMismatch(f"variable {t.name} used at {show_type(t.type, True)} "
                                   f"but bound at {show_type(bound[t.name], True)}")
            return t.type
        if t.name in free and free[t.name] != t.type:
            raise TypeMismatch(f"free variable {t.name} used at two types")
        free[t.name] = t.type
        return t.type
    if isinstance(t, Basic):
        if th is not None:
            declared = th.basic(t.name)
            if declared is None:
                raise UnknownName(f"unknown basic term {t.name!r}")
            if declared != t.type:
                raise TypeMismatch(f"basic term {t.name} declared at {show_type(declared, True)}")
        return t.type
    if isinstance(t, TApp):
        f = _tc(t.fun, th, free, bound)
        a = _tc(t.arg, th, free, bound)
        if not isinstance(f, Hom):
            raise TypeMismatch(f"cannot apply a term of type {show_type(f, True)}", f, a)
        if f.source != a:
            raise TypeMismatch(f"argument of type {show_type(a, True)} given to a function "
                               f"expecting {show_type(f.source, True)}", f.source, a)
        return f.target
    if isinstance(t, TLam):
        inner = dict(bound)
        inner[t.bound] = t.bound_type
        return Hom(t.bound_type, _tc(t.body, th, free, inner))
    if isinstance(t, PairT):
        return Tensor(_tc(t.fst, th, free, bound), _tc(t.snd, th, free, bound))
    if isinstance(t, (P1, P2)):
        p = _tc(t.of, th, free, bound)
        if not isinstance(p, Tensor):
            raise TypeMismatch(f"projection from non-product type {show_type(p, True)}")
        return p.left if isinstance(t, P1) else p.right
    if isinstance(t, UnitT):
        return UNIT
    raise TypeError(f"not a typed term: {t!r}")


def free_vars(t: TypedTerm) -> dict[str, TypeExpr]:
    out: dict[str, TypeExpr] = {}

    def go(u, bound):
        if isinstance(u, TVar):
            if u.name not in bound:
                out[u.name] = u.type
        elif isinstance(u, TApp):
            go(u.fun, bound)
            go(u.arg, bound)
        elif isinstance(u, TLam):
            go(u.body, bound | {u.bound})
        elif isinstance(u, PairT):
            go(u.fst, bound)
            go(u.snd, bound)
        elif isinstance(u, (P1, P2)):
            go(u.of, bound)

    go(t, frozenset())
    return out


def _names(t: TypedTerm) -> set[str]:
    if isinstance(t, TVar):
        return {t.name}
    if isinstance(t, TApp):
        return _names(t.fun) | _names(t.arg)
    if isinstance(t, TLam):
        return _names(t.body) | {t.bound}
    if isinstance(t, PairT):
        return _names(t.fst) | _names(t.snd)
    if isinstance(t, (P1, P2)):
        return _names(t.of)
    return set()


def substitute_typed(t: TypedTerm, x: str, s: TypedTerm) -> TypedTerm:
    """Capture-avoiding ``t[s/x]``."""
    fs = set(free_vars(s))

    def go(u):
        if isinstance(u, TVar):
            return s if u.name == x else u
        if isinstance(u, TApp):
            return TApp(go(u.fun), go(u.arg))
        if isinstance(u, PairT):
            return PairT(go(u.fst), go(u.snd))
        if isinstance(u, P1):
            return P1(go(u.of))
        if isinstance(u, P2):
            return P2(go(u.of))
        if isinstance(u, TLam):
            if u.bound == x or x not in free_vars(u.body):
                return u
            if u.bound in fs:
                avoid = fs | _names(u.body) | {x}
                new = u.bound + "'"
                while new in avoid:
                    new += "'"
                body = substitute_typed(u.body, u.bound, TVar(new, u.bound_type))
                return TLam(new, u.bound_type, go(body))
            return TLam(u.bound, u.bound_type, go(u.body))
        return u

    return go(t)


# -- normalization by evaluation ----------------------------------------------------
#
# Values: Python callables at function types, 2-tuples at products, () at the
# unit, and neutral terms at basic types.  Reading back at a type eta-expands,
# so the result is the beta-eta-long normal form, with every unit-typed term
# collapsed to ().


@dataclass(frozen=True)
class _NVar:
    name: str
    type: TypeExpr


@dataclass(frozen=True)
class _NConst:
    name: str
    type: TypeExpr


@dataclass(frozen=True)
class _NApp:
    fun: object
    arg: object  # a value of type fun.type.source


@dataclass(frozen=True)
class _NProj:
    which: int
    of: object


def _ntype(n) -> TypeExpr:
    if isinstance(n, (_NVar, _NConst)):
        return n.type
    if isinstance(n, _NApp):
        return _ntype(n.fun).target
    t = _ntype(n.of)
    return t.left if n.which == 1 else t.right


class _Nbe:
    def __init__(self, fuel: int):
        self.fuel = fuel

    def tick(self) -> None:
        self.fuel -= 1
        if self.fuel < 0:
            raise FuelExhausted("typed normalization ran out of fuel")

    def eval(self, t: TypedTerm, env: dict):
        self.tick()
        if isinstance(t, TVar):
            if t.name in env:
                return env[t.name]
            return self.reflect(_NVar(t.name, t.type))
        if isinstance(t, Basic):
            return self.reflect(_NConst(t.name, t.type))
        if isinstance(t, TApp):
            return self.eval(t.fun, env)(self.eval(t.arg, env))
        if isinstance(t, TLam):
            def closure(v, t=t, env=env):
                inner = dict(env)
                inner[t.bound] = v
                return self.eval(t.body, inner)
            return closure
        if isinstance(t, PairT):
            return (self.eval(t.fst, env), self.eval(t.snd, env))
        if isinstance(t, P1):
            return self.eval(t.of, env)[0]
        if isinstance(t, P2):
            return self.eval(t.of, env)[1]
        return ()

    def reflect(self, n):
        ty = _ntype(n)
        if isinstance(ty, Hom):
            return lambda v: self.reflect(_NApp(n, v))
        if isinstance(ty, Tensor):
            return (self.reflect(_NProj(1, n)), self.reflect(_NProj(2, n)))
        if isinstance(ty, Unit):
            return ()
        return n

    def reify(self, ty: TypeExpr, v, depth: int) -> TypedTerm:
        self.tick()
        if isinstance(ty, Hom):
            name = f"#{depth}"
            body = self.reify(ty.target, v(self.reflect(_NVar(name, ty.source))), depth + 1)
            return TLam(name, ty.source, body)
        if isinstance(ty, Tensor):
            return PairT(self.reify(ty.left, v[0], depth), self.reify(ty.right, v[1], depth))
        if isinstance(ty, Unit):
            return UnitT()
        return self.neutral(v, depth)

    def neutral(self, n, depth: int) -> TypedTerm:
        if isinstance(n, _NVar):
            return TVar(n.name, n.type)
        if isinstance(n, _NConst):
            return Basic(n.name, n.type)
        if isinstance(n, _NApp):
            src = _ntype(n.fun).source
            return TApp(self.neutral(n.fun, depth), self.reify(src, n.arg, depth))
        inner = self.neutral(n.of, depth)
        return P1(inner) if n.which == 1 else P2(inner)


def normalize_typed(t: TypedTerm, th: LambdaTheory | None = None, fuel: int = 10_000,
                    env: dict[str, TypeExpr] | None = None) -> TypedTerm:
    """Beta-eta-long normal form with canonical binder names ``#0, #1, ...``."""
    ty = typecheck(t, th, env)
    nbe = _Nbe(fuel)
    return nbe.reify(ty, nbe.eval(t, {}), 0)


def _strip(t: TypedTerm):
    # comparison key that ignores variable annotations (binders fix them)
    if isinstance(t, TVar):
        return ("v", t.name)
    if isinstance(t, Basic):
        return ("c", t.name)
    if isinstance(t, TApp):
        return ("a", _strip(t.fun), _strip(t.arg))
    if isinstance(t, TLam):
        return ("l", t.bound, t.bound_type, _strip(t.body))
    if isinstance(t, PairT):
        return ("p", _strip(t.fst), _strip(t.snd))
    if isinstance(t, P1):
        return ("1", _strip(t.of))
    if isinstance(t, P2):
        return ("2", _strip(t.of))
    return ("u",)


EQUAL, NOT_EQUAL, UNKNOWN = "equal", "not-equal", "unknown"


def equiv_typed(t1: TypedTerm, t2: TypedTerm, S=None, fuel: int = 10_000,
                th: LambdaTheory | None = None) -> str:
    """Decide ``t1 ~_S t2``: "equal", "not-equal", or "unknown" when fuel runs out."""
    ty1, ty2 = typecheck(t1, th), typecheck(t2, th)
    if ty1 != ty2:
        raise TypeMismatch(f"terms have different types {show_type(ty1, True)} "
                           f"and {show_type(ty2, True)}", ty1, ty2)
    if S is not None:
        allowed = set(S)
        for t in (t1, t2):
            extra = set(free_vars(t)) - allowed
            if extra:
                raise FreeVariableEscape(f"free variables {sorted(extra)} not in {sorted(allowed)}")
    try:
        n1 = normalize_typed(t1, th, fuel)
        n2 = normalize_typed(t2, th, fuel)
    except FuelExhausted:
        return UNKNOWN
    return EQUAL if _strip(n1) == _strip(n2) else NOT_EQUAL


# -- printing -----------------------------------------------------------------------


def show_typed(t: TypedTerm) -> str:
    if isinstance(t, (TVar, Basic)):
        return t.name
    if isinstance(t, TLam):
        return f"\\{t.bound}:{show_type(t.bound_type, True)}. {show_typed(t.body)}"
    if isinstance(t, PairT):
        return f"({show_typed(t.fst)}, {show_typed(t.snd)})"
    if isinstance(t, (P1, P2)):
        kw = "p1" if isinstance(t, P1) else "p2"
        return f"{kw} {_atom(t.of)}"
    if isinstance(t, UnitT):
        return "()"
    fun = show_typed(t.fun) if isinstance(t.fun, (TVar, Basic, TApp)) else f"({show_typed(t.fun)})"
    return f"{fun} {_atom(t.arg)}"


def _atom(t: TypedTerm) -> str:
    s = show_typed(t)
    return s if isinstance(t, (TVar, Basic, PairT, UnitT)) else f"({s})"


__all__ = ["TVar", "Basic", "TApp", "TLam", "PairT", "P1", "P2", "UnitT", "TypedTerm",
           "LambdaTheory", "FreeVariableEscape", "typecheck", "free_vars",
           "substitute_typed", "normalize_typed", "equiv_typed", "show_typed",
           "EQUAL", "NOT_EQUAL", "UNKNOWN", "BasicType"]
