"""Reading and printing linear terms and combinators.

Terms::

    term  := unit ("(x)" unit)*
    unit  := IDENT ":" type | "1" | "(" term ")" | comb "(" term ")"
    comb  := ctens ("o" ctens)*          (g o f: first f, then g)
    ctens := catom ("(x)" catom)*
    catom := "curry" "(" comb ")" | TAG ["[" type, ... "]"] | IDENT | "(" comb ")"

Theories are kernel signature files in ``mode closed-symmetric``.
"""

from __future__ import annotations

from ..errors import CatTermError, ParseError
from ..kernel.signature import Signature
from ..kernel.syntax import TokenStream, TypeParser, parse_signature
from ..kernel.types import show_type
from .core import (BASIC_TAGS, Apply, BasicC, Comp, Combinator, CurryC, FnSym, LinTerm,
                   LinTheory, One, TensorC, TensorTm, Var)
from .theory import kernel_to_theory, theory_signature


class _Reader:
    def __init__(self, ts: TokenStream, th: LinTheory):
        self.ts = ts
        self.th = th
        sig = theory_signature(th)
        if not sig.objects:
            sig = Signature(sig.mode, generators=sig.generators, open_objects=True)
        self.types = TypeParser(sig)

    def term(self) -> LinTerm:
        t = self.unit()
        while self.ts.accept("(x)"):
            t = TensorTm(t, self.unit())
        return t

    def unit(self) -> LinTerm:
        ts = self.ts
        tok = ts.peek
        if tok.kind == "num" and tok.text == "1":
            ts.next()
            return One()
        if tok.kind == "ident" and ts.peek_at(1).text == ":" and tok.text not in BASIC_TAGS:
            ts.next()
            ts.next()
            return Var(tok.text, self.types.parse(ts))
        # a combinator applied to a term, or a parenthesized term
        start = ts.i
        try:
            c = self.catom()
            ts.expect("(")
            arg = self.term()
            ts.expect(")")
            return Apply(c, arg)
        except CatTermError:
            ts.i = start
        if ts.accept("("):
            t = self.term()
            ts.expect(")")
            return t
        raise ts.error(f"expected a term but found {tok.text or 'end of input'!r}")

    def comb(self) -> Combinator:
        c = self.ctens()
        if self.ts.accept("o"):
            return Comp(c, self.comb())
        return c

    def ctens(self) -> Combinator:
        c = self.catom()
        while self.ts.accept("(x)"):
            c = TensorC(c, self.catom())
        return c

    def catom(self) -> Combinator:
        ts = self.ts
        tok = ts.peek
        if ts.accept("("):
            c = self.comb()
            ts.expect(")")
            return c
        if tok.kind != "ident":
            raise ts.error(f"expected a combinator but found {tok.text or 'end of input'!r}")
        ts.next()
        if tok.text == "curry":
            ts.expect("(")
            c = self.comb()
            ts.expect(")")
            return CurryC(c)
        if tok.text in BASIC_TAGS:
            at = None
            if ts.accept("["):
                at = [self.types.parse(ts)]
                while ts.accept(","):
                    at.append(self.types.parse(ts))
                ts.expect("]")
                at = tuple(at)
            return BasicC(tok.text, at)
        return FnSym(tok.text)


def parse_lin_term(src: str, th: LinTheory | None = None) -> LinTerm:
    ts = TokenStream(src)
    t = _Reader(ts, th or LinTheory()).term()
    ts.expect_eof()
    return t


def parse_combinator(src: str, th: LinTheory | None = None) -> Combinator:
    ts = TokenStream(src)
    c = _Reader(ts, th or LinTheory()).comb()
    ts.expect_eof()
    return c


def parse_lin_theory(text: str) -> LinTheory:
    sig = parse_signature(text)
    if str(sig.mode) != "closed-symmetric":
        raise ParseError(f"linear theory files need 'mode closed-symmetric', not {sig.mode}")
    return kernel_to_theory(sig)


def show_comb(c: Combinator, top: bool = True, types: bool = False) -> str:
    if isinstance(c, FnSym):
        return c.name
    if isinstance(c, BasicC):
        if types and c.at:
            return f"{c.tag}[{', '.join(show_type(t) for t in c.at)}]"
        return c.tag
    if isinstance(c, CurryC):
        return f"curry({show_comb(c.f, True, types)})"
    if isinstance(c, Comp):
        s = f"{show_comb(c.g, False, types)} o {show_comb(c.f, False, types)}"
    else:
        s = f"{show_comb(c.f, False, types)} (x) {show_comb(c.g, False, types)}"
    return s if top else f"({s})"


def show_lin(t: LinTerm, top: bool = True, types: bool = False) -> str:
    """Display form; with ``types`` the output is source that parses back to ``t``."""
    if isinstance(t, Var):
        return f"{t.name}:{show_type(t.type)}" if types else t.name
    if isinstance(t, One):
        return "1"
    if isinstance(t, TensorTm):
        s = f"{show_lin(t.left, False, types)} (x) {show_lin(t.right, False, types)}"
        return s if top and not types else f"({s})"
    c = show_comb(t.comb, False, types)
    return f"{c}({show_lin(t.arg, True, types)})"
