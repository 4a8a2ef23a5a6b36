"""SKI combinators: abstraction elimination, normal-order evaluation, readback."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from ..errors import FuelExhausted, ParseError
from .untyped import App, Lam, Term, Var


@dataclass(frozen=True)
class Comb:
    name: str  # "S", "K" or "I"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SVar:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class SApp:
    fun: "SkiTerm"
    arg: "SkiTerm"

    def __str__(self) -> str:
        return show_ski(self)


SkiTerm = Union[Comb, SVar, SApp]
S, K, I = Comb("S"), Comb("K"), Comb("I")


def sapp(f: SkiTerm, *args: SkiTerm) -> SkiTerm:
    for a in args:
        f = SApp(f, a)
    return f


def _occurs(x: str, t: SkiTerm) -> bool:
    if isinstance(t, SVar):
        return t.name == x
    if isinstance(t, SApp):
        return _occurs(x, t.fun) or _occurs(x, t.arg)
    return False


def _abstract(x: str, t: SkiTerm) -> SkiTerm:
    if t == SVar(x):
        return I
    if not _occurs(x, t):
        return SApp(K, t)
    return sapp(S, _abstract(x, t.fun), _abstract(x, t.arg))


def ski_eliminate(t: Term) -> SkiTerm:
    """Compile away every lambda, innermost first. Free variables survive."""
    if isinstance(t, Var):
        return SVar(t.name)
    if isinstance(t, App):
        return SApp(ski_eliminate(t.fun), ski_eliminate(t.arg))
    return _abstract(t.bound, ski_eliminate(t.body))


def _spine(t: SkiTerm) -> tuple[SkiTerm, list[SkiTerm]]:
    args = []
    while isinstance(t, SApp):
        args.append(t.arg)
        t = t.fun
    return t, args[::-1]


def _step(t: SkiTerm) -> SkiTerm | None:
    head, args = _spine(t)
    if head == I and len(args) >= 1:
        return sapp(args[0], *args[1:])
    if head == K and len(args) >= 2:
        return sapp(args[0], *args[2:])
    if head == S and len(args) >= 3:
        a, b, c = args[:3]
        return sapp(SApp(SApp(a, c), SApp(b, c)), *args[3:])
    for i, a in enumerate(args):
        r = _step(a)
        if r is not None:
            return sapp(head, *args[:i], r, *args[i + 1:])
    return None


def ski_eval(t: SkiTerm, fuel: int = 10_000) -> SkiTerm:
    steps = 0
    while True:
        try:
            nxt = _step(t)
        except RecursionError:
            raise FuelExhausted(f"SKI term grew too deep after {steps} steps", t) from None
        if nxt is None:
            return t
        if steps >= fuel:
            raise FuelExhausted(f"SKI evaluation did not finish in {fuel} steps", t)
        t = nxt
        steps += 1


_READBACK = {
    "I": Lam("a", Var("a")),
    "K": Lam("a", Lam("b", Var("a"))),
    "S": Lam("a", Lam("b", Lam("c", App(App(Var("a"), Var("c")),
                                          App(Var("b"), Var("c")))))),
}


def ski_to_lambda(t: SkiTerm) -> Term:
    if isinstance(t, Comb):
        return _READBACK[t.name]
    if isinstance(t, SVar):
        return Var(t.name)
    return App(ski_to_lambda(t.fun), ski_to_lambda(t.arg))


def show_ski(t: SkiTerm) -> str:
    """Curried style: ``K(I)(x)(y)``."""
    head, args = _spine(t)
    return str(head) + "".join(f"({show_ski(a)})" for a in args)


def parse_ski(src: str) -> SkiTerm:
    """Parse the curried notation printed by :func:`show_ski`.

    Juxtaposition is also accepted, so ``S K K c`` and ``S(K)(K)(c)`` agree.
    """
    toks = re.findall(r"[A-Za-z_][A-Za-z0-9_']*|[()]|\S", src)
    pos = 0

    def atom() -> SkiTerm:
        nonlocal pos
        if pos >= len(toks):
            raise ParseError("unexpected end of SKI term")
        tok = toks[pos]
        pos += 1
        if tok == "(":
            t = seq()
            if pos >= len(toks) or toks[pos] != ")":
                raise ParseError("missing ')' in SKI term")
            pos += 1
            return t
        if not (tok[0].isalpha() or tok[0] == "_"):
            raise ParseError(f"unexpected {tok!r} in SKI term")
        return Comb(tok) if tok in ("S", "K", "I") else SVar(tok)

    def seq() -> SkiTerm:
        t = atom()
        while pos < len(toks) and toks[pos] != ")":
            t = SApp(t, atom())
        return t

    t = seq()
    if pos != len(toks):
        raise ParseError(f"unexpected {toks[pos]!r} in SKI term")
    return t
