"""Lambda source files.

Terms::

    term := "\\" IDENT [":" type] "." term | app
    app  := atom+                      (left-associative juxtaposition)
    atom := IDENT | NUMBER | "()" | "(" term ")" | "(" term "," term ")"
          | "p1" atom | "p2" atom

Declarations, one per line: ``basic name : T``, ``def name = term``, and an
optional ``type Name`` (or ``alias Name = T``) for basic types.  In untyped
files a number ``n`` stands for the Church numeral of ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError, TypeMismatch, UnknownName
from ..kernel.modes import Mode
from ..kernel.signature import Signature
from ..kernel.syntax import TokenStream, TypeParser
from ..kernel.types import TypeExpr
from . import typed as T
from . import untyped as U


class _Reader:
    """Shared recursive-descent reader; ``build`` supplies the node constructors."""

    def __init__(self, ts: TokenStream, build):
        self.ts = ts
        self.b = build

    def term(self):
        ts = self.ts
        if ts.accept("\\"):
            name = ts.expect_ident().text
            ty = None
            if ts.accept(":"):
                ty = self.b.type(ts)
            ts.expect(".")
            return self.b.lam(name, ty, self.term, ts)
        return self.app()

    def _starts_atom(self) -> bool:
        t = self.ts.peek
        return t.kind in ("ident", "num") or (t.kind == "op" and t.text in ("(", "(x)", "\\"))

    def app(self):
        f = self.atom()
        while self._starts_atom():
            if self.ts.at("\\"):
                f = self.b.app(f, self.term())
                break
            f = self.b.app(f, self.atom())
        return f

    def atom(self):
        ts = self.ts
        tok = ts.peek
        if tok.kind == "op" and tok.text == "(x)":
            # the tokenizer reads "(x)" as one symbol; here it is a variable
            ts.next()
            return self.b.var("x", tok)
        if ts.accept("("):
            if ts.accept(")"):
                return self.b.unit(tok)
            first = self.term()
            if ts.accept(","):
                second = self.term()
                ts.expect(")")
                return self.b.pair(first, second, tok)
            ts.expect(")")
            return first
        if tok.kind == "num":
            ts.next()
            return self.b.number(int(tok.text), tok)
        if tok.kind == "ident":
            ts.next()
            if tok.text in ("p1", "p2"):
                return self.b.proj(1 if tok.text == "p1" else 2, self.atom(), tok)
            return self.b.var(tok.text, tok)
        raise ts.error(f"expected a term but found {tok.text or 'end of input'!r}")


class _UntypedBuild:
    def __init__(self, defs: dict[str, U.Term]):
        self.defs = defs
        self.scope: list[str] = []

    def type(self, ts):
        raise ts.error("type annotations need a typed file")

    def lam(self, name, ty, body, ts):
        self.scope.append(name)
        try:
            return U.Lam(name, body())
        finally:
            self.scope.pop()

    def app(self, f, a):
        return U.App(f, a)

    def var(self, name, tok):
        if name not in self.scope and name in self.defs:
            return self.defs[name]
        return U.Var(name)

    def number(self, n, tok):
        return U.church(n)

    def unit(self, tok):
        raise ParseError("'()' is not an untyped term", tok.pos)

    def pair(self, a, b, tok):
        raise ParseError("pairs are not untyped terms", tok.pos)

    def proj(self, k, a, tok):
        return U.App(U.Var(f"p{k}"), a)


class _TypedBuild:
    def __init__(self, th: T.LambdaTheory, env: dict[str, TypeExpr], defs: dict):
        self.th = th
        self.env = dict(env)
        self.defs = defs
        self.scope: list[tuple[str, TypeExpr]] = []
        sig = Signature(Mode.CARTESIAN_CLOSED, tuple(th.basic_types), tuple(th.aliases),
                        open_objects=not th.basic_types)
        self.types = TypeParser(sig)

    def type(self, ts):
        return self.types.parse(ts)

    def lam(self, name, ty, body, ts):
        if ty is None:
            raise ts.error(f"binder {name!r} needs a type annotation")
        self.scope.append((name, ty))
        try:
            return T.TLam(name, ty, body())
        finally:
            self.scope.pop()

    def app(self, f, a):
        return T.TApp(f, a)

    def var(self, name, tok):
        for n, ty in reversed(self.scope):
            if n == name:
                return T.TVar(name, ty)
        if name in self.env:
            return T.TVar(name, self.env[name])
        if name in self.defs:
            return self.defs[name]
        ty = self.th.basic(name)
        if ty is not None:
            return T.Basic(name, ty)
        raise UnknownName(f"unbound variable {name!r} at position {tok.pos}")

    def number(self, n, tok):
        raise ParseError("numerals are untyped sugar", tok.pos)

    def unit(self, tok):
        return T.UnitT()

    def pair(self, a, b, tok):
        return T.PairT(a, b)

    def proj(self, k, a, tok):
        return T.P1(a) if k == 1 else T.P2(a)


def parse_untyped(src: str, defs: dict[str, U.Term] | None = None) -> U.Term:
    ts = TokenStream(src)
    t = _Reader(ts, _UntypedBuild(dict(defs or {}))).term()
    ts.expect_eof()
    return t


def parse_typed(src: str, th: T.LambdaTheory | None = None,
                env: dict[str, TypeExpr] | None = None, defs: dict | None = None) -> T.TypedTerm:
    th = th or T.LambdaTheory()
    ts = TokenStream(src)
    t = _Reader(ts, _TypedBuild(th, env or {}, dict(defs or {}))).term()
    ts.expect_eof()
    return t


@dataclass
class LambdaFile:
    typed: bool
    theory: T.LambdaTheory
    defs: dict  # name -> term, in declaration order


def parse_lambda_file(text: str) -> LambdaFile:
    """Read declarations; the file is typed if it declares types or annotates a binder."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    typed = any(l.startswith(("basic ", "type ", "alias ")) or ":" in l.partition("=")[2]
                for _, l in lines)
    basic_types: list[str] = []
    aliases: list[tuple[str, TypeExpr]] = []
    basics: list[tuple[str, TypeExpr]] = []
    defs: dict = {}

    def theory() -> T.LambdaTheory:
        return T.LambdaTheory(tuple(basic_types), tuple(aliases), tuple(basics))

    def type_of(src: str) -> TypeExpr:
        th = theory()
        sig = Signature(Mode.CARTESIAN_CLOSED, tuple(th.basic_types), tuple(th.aliases),
                        open_objects=not th.basic_types)
        ts = TokenStream(src)
        ty = TypeParser(sig).parse(ts)
        ts.expect_eof()
        return ty

    for lineno, line in lines:
        head, _, rest = line.partition(" ")
        try:
            if head == "type":
                basic_types.extend(rest.split())
            elif head == "alias":
                name, eq, body = rest.partition("=")
                if not eq:
                    raise ParseError("expected 'alias Name = type'")
                aliases.append((name.strip(), type_of(body)))
            elif head == "basic":
                name, colon, body = rest.partition(":")
                if not colon:
                    raise ParseError("expected 'basic name : type'")
                basics.append((name.strip(), type_of(body)))
            elif head == "def":
                name, eq, body = rest.partition("=")
                if not eq:
                    raise ParseError("expected 'def name = term'")
                if typed:
                    term = parse_typed(body, theory(), defs=defs)
                    T.typecheck(term, theory())
                else:
                    term = parse_untyped(body, defs)
                defs[name.strip()] = term
            else:
                raise ParseError(f"unknown declaration {head!r}")
        except ParseError as e:
            raise ParseError(f"line {lineno}: {e}") from None
        except (UnknownName, TypeMismatch) as e:
            raise type(e)(f"line {lineno}: {e}") from None
    return LambdaFile(typed, theory(), defs)
