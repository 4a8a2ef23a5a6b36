"""Concrete syntax for types, morphism terms and signature files.

Types::

    type := IDENT | "I" | "1" | type "*" type | type "-o" type | type "^" | "(" type ")"

``*`` is left-associative and binds tighter than the right-associative
``-o``; postfix ``^`` binds tightest.

Morphisms::

    mor := mor ";" mor | mor "*" mor | IDENT | "(" mor ")"
         | "id[" type "]" | "assoc[" type "," type "," type "]" | ...
         | "curry(" mor ")" | "pair(" mor "," mor ")" | ...

``;`` (diagrammatic composition) binds looser than ``*``; both are
left-associative.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ModeError, ParseError, UnknownName
from .modes import Mode, mode_allows
from .signature import GenDecl, Signature
from .terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Del, Dup, Ev, Gen,
                    Id, LeftU, MorTerm, Name, Pair, Par, Proj1, Proj2, RightU,
                    Seq, Unassoc, Uncurry, UnleftU, UnrightU)
from .types import (UNIT, BasicType, Dual, Hom, Tensor, TypeExpr, dual,
                    expand_compact, show_type)

_TOKEN_RE = re.compile(r"""
    (?P<ws>\s+)
  | (?P<str>"[^"]*")
  | (?P<op>\|-|->|-o|\(x\)|[()\[\],;*^=:]|\\|\.)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # 'op', 'num', 'ident', 'str', 'eof'
    text: str
    pos: int


def tokenize(src: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos, src)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(src)))
    return out


class TokenStream:
    def __init__(self, src: str):
        self.src = src
        self.toks = tokenize(src)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.toks[self.i]

    def peek_at(self, k: int) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def next(self) -> Token:
        t = self.toks[self.i]
        if t.kind != "eof":
            self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.peek
        return t.kind in ("op", "ident") and t.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.next()
            return True
        return False

    def expect(self, text: str) -> Token:
        t = self.peek
        if not self.at(text):
            shown = t.text or "end of input"
            raise ParseError(f"expected {text!r} but found {shown!r}", t.pos, self.src)
        return self.next()

    def expect_ident(self) -> Token:
        t = self.peek
        if t.kind != "ident":
            raise ParseError(f"expected an identifier but found {t.text or 'end of input'!r}",
                             t.pos, self.src)
        return self.next()

    def expect_eof(self) -> None:
        t = self.peek
        if t.kind != "eof":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.pos, self.src)

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.peek.pos, self.src)


# -- types --------------------------------------------------------------------

UNIT_NAMES = ("I", "1")


class TypeParser:
    """Parses types against a signature.

    With ``strict=False`` unknown names become basic objects and mode
    restrictions are not enforced, so that a signature file can be read in
    full and validated afterwards.
    """

    def __init__(self, sig: Signature | None, strict: bool = True):
        self.sig = sig
        self.strict = strict and sig is not None

    def _allow(self, ts: TokenStream, tag: str, pos: int) -> None:
        if self.strict and not mode_allows(self.sig.mode, tag):
            raise ModeError(f"type constructor '{tag}' not allowed in mode {self.sig.mode} "
                            f"at position {pos}")

    def parse(self, ts: TokenStream) -> TypeExpr:
        return self._hom(ts)

    def _hom(self, ts: TokenStream) -> TypeExpr:
        left = self._tensor(ts)
        if ts.at("-o"):
            pos = ts.next().pos
            if self.strict and not mode_allows(self.sig.mode, "hom") \
                    and self.sig.mode != Mode.COMPACT_SYMMETRIC:
                raise ModeError(f"type constructor 'hom' not allowed in mode {self.sig.mode} "
                                f"at position {pos}")
            right = self._hom(ts)
            return Hom(left, right)
        return left

    def _tensor(self, ts: TokenStream) -> TypeExpr:
        left = self._postfix(ts)
        while ts.at("*"):
            ts.next()
            left = Tensor(left, self._postfix(ts))
        return left

    def _postfix(self, ts: TokenStream) -> TypeExpr:
        t = self._atom(ts)
        while ts.at("^"):
            pos = ts.next().pos
            self._allow(ts, "dual", pos)
            t = dual(t)
        return t

    def _atom(self, ts: TokenStream) -> TypeExpr:
        tok = ts.peek
        if ts.accept("("):
            t = self._hom(ts)
            ts.expect(")")
            return t
        if tok.kind == "num":
            if tok.text != "1":
                raise ParseError(f"unexpected number {tok.text!r}", tok.pos, ts.src)
            ts.next()
            return UNIT
        if tok.kind == "ident":
            ts.next()
            if tok.text == "I":
                return UNIT
            if self.sig is not None:
                al = self.sig.alias(tok.text)
                if al is not None:
                    return al
                if self.strict and not self.sig.has_object(tok.text):
                    raise UnknownName(f"unknown object '{tok.text}' at position {tok.pos}")
            return BasicType(tok.text)
        raise ParseError(f"expected a type but found {tok.text or 'end of input'!r}",
                         tok.pos, ts.src)


def _finish_type(t: TypeExpr, sig: Signature | None) -> TypeExpr:
    if sig is not None and sig.mode == Mode.COMPACT_SYMMETRIC:
        return expand_compact(t)
    return t


def parse_type(src: str, sig: Signature | None = None, strict: bool = True) -> TypeExpr:
    """Parse a type, expanding aliases (and ``-o`` in compact mode)."""
    ts = TokenStream(src)
    t = TypeParser(sig, strict).parse(ts)
    ts.expect_eof()
    return _finish_type(t, sig)


# -- morphisms ----------------------------------------------------------------

# keyword -> (constructor, number of type arguments)
_TYPE_ARG_FORMS = {
    "id": (Id, 1), "assoc": (Assoc, 3), "unassoc": (Unassoc, 3),
    "left": (LeftU, 1), "unleft": (UnleftU, 1), "right": (RightU, 1),
    "unright": (UnrightU, 1), "braid": (Braid, 2), "braidinv": (BraidInv, 2),
    "ev": (Ev, 2), "cup": (Cup, 1), "cap": (Cap, 1), "dup": (Dup, 1),
    "del": (Del, 1), "p1": (Proj1, 2), "p2": (Proj2, 2),
}
# keyword -> (constructor, number of morphism arguments)
_MOR_ARG_FORMS = {
    "curry": (Curry, 1), "uncurry": (Uncurry, 1), "name": (Name, 1), "pair": (Pair, 2),
}
KEYWORDS = frozenset(_TYPE_ARG_FORMS) | frozenset(_MOR_ARG_FORMS) | {"I"}


class MorParser:
    def __init__(self, sig: Signature, strict: bool = True):
        self.sig = sig
        self.strict = strict
        self.types = TypeParser(sig, strict)

    def _gate(self, kw: str, pos: int) -> None:
        if self.strict and not mode_allows(self.sig.mode, kw):
            raise ModeError(f"constructor '{kw}' not allowed in mode {self.sig.mode} "
                            f"at position {pos}")

    def parse(self, ts: TokenStream) -> MorTerm:
        return self._seq(ts)

    def _seq(self, ts: TokenStream) -> MorTerm:
        left = self._par(ts)
        while ts.at(";"):
            ts.next()
            left = Seq(left, self._par(ts))
        return left

    def _par(self, ts: TokenStream) -> MorTerm:
        left = self._atom(ts)
        while ts.at("*"):
            ts.next()
            left = Par(left, self._atom(ts))
        return left

    def _type(self, ts: TokenStream) -> TypeExpr:
        return _finish_type(self.types.parse(ts), self.sig)

    def _atom(self, ts: TokenStream) -> MorTerm:
        tok = ts.peek
        if ts.accept("("):
            t = self._seq(ts)
            ts.expect(")")
            return t
        if tok.kind != "ident":
            raise ParseError(f"expected a morphism but found {tok.text or 'end of input'!r}",
                             tok.pos, ts.src)
        kw = tok.text
        if kw in _TYPE_ARG_FORMS and ts.peek_at(1).text == "[":
            ts.next()
            self._gate(kw, tok.pos)
            ctor, n = _TYPE_ARG_FORMS[kw]
            ts.expect("[")
            args = [self._type(ts)]
            for _ in range(n - 1):
                ts.expect(",")
                args.append(self._type(ts))
            ts.expect("]")
            return ctor(*args)
        if kw in _MOR_ARG_FORMS and ts.peek_at(1).text == "(":
            ts.next()
            self._gate(kw, tok.pos)
            ctor, n = _MOR_ARG_FORMS[kw]
            ts.expect("(")
            args = [self._seq(ts)]
            for _ in range(n - 1):
                ts.expect(",")
                args.append(self._seq(ts))
            ts.expect(")")
            return ctor(*args)
        ts.next()
        if self.sig.generator(kw) is not None:
            return Gen(kw)
        named = self.sig.term(kw)
        if named is not None:
            return named
        if not self.strict:
            return Gen(kw)
        raise UnknownName(f"unknown generator '{kw}' at position {tok.pos}")


def parse_mor(src: str, sig: Signature, strict: bool = True) -> MorTerm:
    ts = TokenStream(src)
    t = MorParser(sig, strict).parse(ts)
    ts.expect_eof()
    return t


# -- printing -----------------------------------------------------------------

_PREC_SEQ, _PREC_PAR, _PREC_ATOM = 1, 2, 3


def show_mor(t: MorTerm, cartesian: bool = False) -> str:
    return _show_mor(t, cartesian, 0)


def _show_mor(t: MorTerm, cart: bool, ctx: int) -> str:
    st = lambda ty: show_type(ty, cart)  # noqa: E731
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Seq):
        s = f"{_show_mor(t.first, cart, _PREC_SEQ)} ; {_show_mor(t.then, cart, _PREC_SEQ + 1)}"
        return f"({s})" if ctx > _PREC_SEQ else s
    if isinstance(t, Par):
        s = f"{_show_mor(t.left, cart, _PREC_PAR)} * {_show_mor(t.right, cart, _PREC_PAR + 1)}"
        return f"({s})" if ctx > _PREC_PAR else s
    for kw, (ctor, _) in _TYPE_ARG_FORMS.items():
        if type(t) is ctor:
            args = [getattr(t, f) for f in t.__dataclass_fields__]
            return f"{kw}[{', '.join(st(a) for a in args)}]"
    for kw, (ctor, _) in _MOR_ARG_FORMS.items():
        if type(t) is ctor:
            args = [getattr(t, f) for f in t.__dataclass_fields__]
            return f"{kw}({', '.join(_show_mor(a, cart, 0) for a in args)})"
    raise TypeError(f"not a morphism term: {t!r}")


# -- signature files ----------------------------------------------------------


def parse_signature(text: str) -> Signature:
    """Read a signature file.

    Names and modes inside declarations are resolved leniently; call
    :func:`validate_signature` for the full well-formedness report.
    Named terms are parsed strictly since they may refer to generators.
    """
    mode = Mode.SYMMETRIC
    objects: list[str] = []
    aliases: list[tuple[str, TypeExpr]] = []
    gens: list[GenDecl] = []
    terms: list[tuple[str, MorTerm]] = []
    seen_decl = False

    def current() -> Signature:
        return Signature(mode, tuple(objects), tuple(aliases), tuple(gens), tuple(terms))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if head == "mode":
                if seen_decl:
                    raise ParseError("'mode' must precede all declarations")
                try:
                    mode = Mode.parse(rest)
                except ValueError as e:
                    raise ParseError(str(e)) from None
            elif head == "obj":
                seen_decl = True
                objects.extend(rest.split())
            elif head == "alias":
                seen_decl = True
                name, eq, body = rest.partition("=")
                if not eq:
                    raise ParseError("expected 'alias <Name> = <type>'")
                aliases.append((name.strip(), parse_type(body, current(), strict=False)))
            elif head == "gen":
                seen_decl = True
                name, colon, body = rest.partition(":")
                dom_src, arrow, cod_src = body.partition("->")
                if not colon or not arrow:
                    raise ParseError("expected 'gen <name> : <type> -> <type>'")
                sig = current()
                gens.append(GenDecl(name.strip(), parse_type(dom_src, sig, strict=False),
                                    parse_type(cod_src, sig, strict=False)))
            elif head == "term":
                seen_decl = True
                name, eq, body = rest.partition("=")
                if not eq:
                    raise ParseError("expected 'term <name> = <mor-expr>'")
                terms.append((name.strip(), parse_mor(body, current())))
            else:
                raise ParseError(f"unknown declaration {head!r}")
        except ParseError as e:
            raise ParseError(f"line {lineno}: {e}") from None
        except (UnknownName, ModeError) as e:
            raise type(e)(f"line {lineno}: {e}") from None
    return current()


def show_signature(sig: Signature) -> str:
    cart = sig.mode in (Mode.CARTESIAN, Mode.CARTESIAN_CLOSED)
    lines = [f"mode {sig.mode}"]
    if sig.objects:
        lines.append("obj " + " ".join(sig.objects))
    for n, t in sig.aliases:
        lines.append(f"alias {n} = {show_type(t, cart)}")
    for g in sig.generators:
        lines.append(f"gen {g.name} : {show_type(g.dom, cart)} -> {show_type(g.cod, cart)}")
    for n, t in sig.terms:
        lines.append(f"term {n} = {show_mor(t, cart)}")
    return "\n".join(lines) + "\n"


__all__ = [
    "Token", "TokenStream", "tokenize", "TypeParser", "MorParser", "parse_type",
    "parse_mor", "show_mor", "parse_signature", "show_signature", "KEYWORDS",
    "Hom", "Dual",
]
