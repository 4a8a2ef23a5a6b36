"""Proof files.

A proof is an s-expression ``(RULE premise... "LHS |- RHS")``; a generator
leaf is ``(gen name "X |- Y")``.  A file holds ``proof name = (...)``
declarations, with ``#`` comments.
"""

from __future__ import annotations

import re

from ..errors import ParseError, UnknownName
from ..kernel.signature import Signature
from ..kernel.syntax import TokenStream, TypeParser, _finish_type
from ..kernel.types import show_type
from .proof import MACROS, RULES, ProofTree, Sequent, arity, default_signature

_SEXP_RE = re.compile(r'(?P<ws>\s+|#[^\n]*)|(?P<str>"[^"]*")|(?P<op>[()=])|(?P<atom>[^\s()"=#]+)')


def _tokens(src: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(src):
        m = _SEXP_RE.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(("eof", "", len(src)))
    return out


def parse_sequent(src: str, sig: Signature | None = None) -> Sequent:
    sig = sig or default_signature()
    ts = TokenStream(src)
    parser = TypeParser(sig)
    lhs = parser.parse(ts)
    ts.expect("|-")
    rhs = parser.parse(ts)
    ts.expect_eof()
    return Sequent(_finish_type(lhs, sig), _finish_type(rhs, sig))


class _Reader:
    def __init__(self, src: str, sig: Signature | None):
        self.toks = _tokens(src)
        self.i = 0
        self.sig = sig

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        if t[0] != "eof":
            self.i += 1
        return t

    def expect(self, text: str):
        t = self.next()
        if t[1] != text or t[0] == "str":
            raise ParseError(f"expected {text!r} but found {t[1] or 'end of input'!r}", t[2])
        return t

    def tree(self) -> ProofTree:
        self.expect("(")
        kind, rule, pos = self.next()
        if kind != "atom":
            raise ParseError(f"expected a rule name but found {rule or 'end of input'!r}", pos)
        if rule not in RULES and rule not in MACROS:
            raise UnknownName(f"unknown rule {rule!r} at position {pos}")
        gen = None
        if rule == "gen":
            kind, gen, gpos = self.next()
            if kind != "atom":
                raise ParseError("expected a generator name after 'gen'", gpos)
        premises = []
        while self.peek()[1] == "(" and self.peek()[0] == "op":
            premises.append(self.tree())
        kind, text, spos = self.next()
        if kind != "str" and len(premises) != arity(rule):
            raise ParseError(f"rule {rule!r} takes {arity(rule)} premises, "
                             f"found {len(premises)}", pos)
        if kind != "str":
            raise ParseError(f"expected a quoted conclusion but found {text or 'end of input'!r}",
                             spos)
        try:
            concl = parse_sequent(text[1:-1], self.sig)
        except ParseError as e:
            raise ParseError(f"in conclusion at position {spos}: {e}") from None
        self.expect(")")
        if len(premises) != arity(rule):
            raise ParseError(f"rule {rule!r} takes {arity(rule)} premises, "
                             f"found {len(premises)}", pos)
        return ProofTree(rule, tuple(premises), concl, gen)


def parse_proof(src: str, sig: Signature | None = None) -> ProofTree:
    r = _Reader(src, sig)
    t = r.tree()
    kind, text, pos = r.peek()
    if kind != "eof":
        raise ParseError(f"unexpected trailing input {text!r}", pos)
    return t


def parse_proof_file(text: str, sig: Signature | None = None) -> dict[str, ProofTree]:
    """Read ``proof name = (...)`` declarations; a bare tree is named ``main``."""
    r = _Reader(text, sig)
    out: dict[str, ProofTree] = {}
    if r.peek()[1] == "(":
        out["main"] = r.tree()
    while r.peek()[0] != "eof":
        kind, word, pos = r.next()
        if word != "proof":
            raise ParseError(f"expected 'proof' but found {word!r}", pos)
        kind, name, pos = r.next()
        if kind != "atom":
            raise ParseError("expected a proof name", pos)
        if name in out:
            raise ParseError(f"proof {name!r} declared twice", pos)
        r.expect("=")
        out[name] = r.tree()
    return out


def show_proof(p: ProofTree, indent: int = 0) -> str:
    pad = "  " * indent
    head = p.rule if p.gen is None else f"{p.rule} {p.gen}"
    concl = f'"{show_type(p.conclusion.lhs)} |- {show_type(p.conclusion.rhs)}"'
    if not p.premises:
        return f"{pad}({head} {concl})"
    inner = "\n".join(show_proof(q, indent + 1) for q in p.premises)
    return f"{pad}({head}\n{inner}\n{pad}  {concl})"
