"""MILL deductions on single-formula sequents, their checking and compilation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import CatTermError, TypeMismatch, UnknownName
from ..kernel.modes import Mode
from ..kernel.signature import Signature, open_signature
from ..kernel.terms import (Assoc, Braid, Curry, Gen, Id, LeftU, MorTerm, Par, RightU,
                            Seq, Unassoc, Uncurry, UnleftU, UnrightU)
from ..kernel.types import UNIT, BasicType, Hom, Tensor, TypeExpr, show_type, subst_type

RULES = {
    "i": 0, "gen": 0, "cut": 2, "tensor": 2,
    "a": 1, "a-inv": 1, "l": 1, "l-inv": 1, "r": 1, "r-inv": 1,
    "b": 1, "c": 1, "c-inv": 1,
}
MACROS = {"ev": 0, "alpha": 1, "alpha-inv": 1, "icomp": 0}
# an open premise inside a macro fragment; never valid in a finished proof
HOLE = "hyp"


class InvalidProof(CatTermError):
    def __init__(self, report: "CheckReport"):
        self.report = report
        super().__init__("; ".join(str(v) for v in report.violations))


@dataclass(frozen=True)
class Sequent:
    lhs: TypeExpr
    rhs: TypeExpr

    def __str__(self) -> str:
        return f"{show_type(self.lhs)} |- {show_type(self.rhs)}"


@dataclass(frozen=True)
class ProofTree:
    rule: str
    premises: tuple["ProofTree", ...]
    conclusion: Sequent
    gen: str | None = None  # generator name, for "gen" leaves

    def size(self) -> int:
        """Number of rule applications (open premises are not counted)."""
        own = 0 if self.rule == HOLE else 1
        return own + sum(p.size() for p in self.premises)

    def nodes(self, path: tuple[int, ...] = ()):
        yield path, self
        for k, p in enumerate(self.premises):
            yield from p.nodes(path + (k,))


def arity(rule: str) -> int:
    if rule in RULES:
        return RULES[rule]
    if rule in MACROS:
        return MACROS[rule]
    raise UnknownName(f"unknown rule {rule!r}")


def show_path(path: tuple[int, ...]) -> str:
    return "root" + "".join(f"/{k}" for k in path)


@dataclass(frozen=True)
class Violation:
    path: tuple[int, ...]
    rule: str
    message: str

    def __str__(self) -> str:
        return f"{show_path(self.path)} ({self.rule}): {self.message}"


@dataclass
class CheckReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"ok": self.ok,
                "violations": [{"path": show_path(v.path), "rule": v.rule,
                                "message": v.message} for v in self.violations]}


# -- macros ----------------------------------------------------------------------------


def _leaf_i(t: TypeExpr) -> ProofTree:
    return ProofTree("i", (), Sequent(t, t))


def _hole(s: Sequent) -> ProofTree:
    return ProofTree(HOLE, (), s)


_METAVARS = {"ev": "XY", "alpha": "ABCD", "alpha-inv": "ABCD", "icomp": "XYZ"}


def expand_macro(tag: str, bindings: dict[str, TypeExpr],
                 premises: tuple[ProofTree, ...] = ()) -> ProofTree:
    """One level of expansion; nested macros (ev inside icomp) stay folded.

    Without ``premises``, the open premise of alpha/alpha-inv is a hole.
    """
    if tag not in MACROS:
        raise UnknownName(f"unknown macro {tag!r}")
    missing = [v for v in _METAVARS[tag] if v not in bindings]
    if missing:
        raise ValueError(f"macro {tag} needs bindings for {', '.join(missing)}")
    b = {k: v if not isinstance(v, str) else BasicType(v) for k, v in bindings.items()}
    if tag == "ev":
        x, y = b["X"], b["Y"]
        h = Hom(x, y)
        return ProofTree("c-inv", (_leaf_i(h),), Sequent(Tensor(x, h), y))
    if tag in ("alpha", "alpha-inv"):
        A, B, C, D = b["A"], b["B"], b["C"], b["D"]
        left, right = Tensor(Tensor(A, B), C), Tensor(A, Tensor(B, C))
        src, dst = (left, right) if tag == "alpha" else (right, left)
        prem = premises[0] if premises else _hole(Sequent(dst, D))
        step = ProofTree("a" if tag == "alpha" else "a-inv", (_leaf_i(src),), Sequent(src, dst))
        return ProofTree("cut", (step, prem), Sequent(src, D))
    x, y, z = b["X"], b["Y"], b["Z"]
    xy, yz = Hom(x, y), Hom(y, z)
    ev_xy = ProofTree("ev", (), Sequent(Tensor(x, xy), y))
    ev_yz = ProofTree("ev", (), Sequent(Tensor(y, yz), z))
    par = ProofTree("tensor", (ev_xy, _leaf_i(yz)),
                    Sequent(Tensor(Tensor(x, xy), yz), Tensor(y, yz)))
    cut = ProofTree("cut", (par, ev_yz), Sequent(Tensor(Tensor(x, xy), yz), z))
    re = ProofTree("alpha-inv", (cut,), Sequent(Tensor(x, Tensor(xy, yz)), z))
    return ProofTree("c", (re,), Sequent(Tensor(xy, yz), Hom(x, z)))


def _macro_bindings(p: ProofTree) -> dict[str, TypeExpr] | None:
    """Read the metavariables off a macro node's conclusion, or None on a shape mismatch."""
    s = p.conclusion
    if p.rule == "ev":
        if isinstance(s.lhs, Tensor) and isinstance(s.lhs.right, Hom):
            return {"X": s.lhs.left, "Y": s.lhs.right.target}
    elif p.rule == "alpha":
        if isinstance(s.lhs, Tensor) and isinstance(s.lhs.left, Tensor):
            return {"A": s.lhs.left.left, "B": s.lhs.left.right, "C": s.lhs.right, "D": s.rhs}
    elif p.rule == "alpha-inv":
        if isinstance(s.lhs, Tensor) and isinstance(s.lhs.right, Tensor):
            return {"A": s.lhs.left, "B": s.lhs.right.left, "C": s.lhs.right.right, "D": s.rhs}
    elif p.rule == "icomp":
        if isinstance(s.lhs, Tensor) and isinstance(s.lhs.left, Hom) \
                and isinstance(s.lhs.right, Hom):
            return {"X": s.lhs.left.source, "Y": s.lhs.left.target, "Z": s.lhs.right.target}
    return None


def expand_all(p: ProofTree) -> ProofTree:
    """Replace every macro node by its definition, recursively.

    Raises ValueError when a macro node's conclusion does not fit its schema.
    """
    prem = tuple(expand_all(q) for q in p.premises)
    if p.rule not in MACROS:
        return ProofTree(p.rule, prem, p.conclusion, p.gen)
    b = _macro_bindings(p)
    if b is None:
        raise ValueError(f"conclusion {p.conclusion} does not fit the {p.rule} schema")
    out = expand_macro(p.rule, b, prem)
    if out.conclusion != p.conclusion:
        raise ValueError(f"{p.rule} concludes {out.conclusion}, not {p.conclusion}")
    return expand_all(out)


# -- checking -------------------------------------------------------------------------


def _expected(p: ProofTree, sig: Signature | None) -> str | None:
    """None if ``p`` instantiates its rule schema, else the mismatch."""
    s, ps = p.conclusion, [q.conclusion for q in p.premises]
    r = p.rule
    if r == "i":
        return None if s.lhs == s.rhs else "identity needs the same formula on both sides"
    if r == "gen":
        if sig is None:
            return f"generator leaf {p.gen!r} needs a signature"
        g = sig.generator(p.gen or "")
        if g is None:
            return f"unknown generator {p.gen!r}"
        if (g.dom, g.cod) != (s.lhs, s.rhs):
            return (f"generator {g.name} proves {show_type(g.dom)} |- {show_type(g.cod)}, "
                    f"not {s}")
        return None
    if r == HOLE:
        return f"open premise {s}"
    if r == "cut":
        a, b = ps
        if a.rhs != b.lhs:
            return f"cut formulas differ: {show_type(a.rhs)} vs {show_type(b.lhs)}"
        want = Sequent(a.lhs, b.rhs)
    elif r == "tensor":
        a, b = ps
        want = Sequent(Tensor(a.lhs, b.lhs), Tensor(a.rhs, b.rhs))
    else:
        (a,) = ps
        w = _unary(r, a)
        if isinstance(w, str):
            return w
        want = w
    if want != s:
        return f"expected conclusion {want}, found {s}"
    return None


def _unary(r: str, a: Sequent) -> Sequent | str:
    x, y = a.lhs, a.rhs
    if r == "a":
        if isinstance(y, Tensor) and isinstance(y.left, Tensor):
            return Sequent(x, Tensor(y.left.left, Tensor(y.left.right, y.right)))
        return "(a) needs a premise of the form W |- (X * Y) * Z"
    if r == "a-inv":
        if isinstance(y, Tensor) and isinstance(y.right, Tensor):
            return Sequent(x, Tensor(Tensor(y.left, y.right.left), y.right.right))
        return "(a-inv) needs a premise of the form W |- X * (Y * Z)"
    if r == "l":
        if isinstance(y, Tensor) and y.left == UNIT:
            return Sequent(x, y.right)
        return "(l) needs a premise of the form X |- I * Y"
    if r == "l-inv":
        return Sequent(x, Tensor(UNIT, y))
    if r == "r":
        if isinstance(y, Tensor) and y.right == UNIT:
            return Sequent(x, y.left)
        return "(r) needs a premise of the form X |- Y * I"
    if r == "r-inv":
        return Sequent(x, Tensor(y, UNIT))
    if r == "b":
        if isinstance(y, Tensor):
            return Sequent(x, Tensor(y.right, y.left))
        return "(b) needs a premise of the form W |- X * Y"
    if r == "c":
        if isinstance(x, Tensor):
            return Sequent(x.right, Hom(x.left, y))
        return "(c) needs a premise whose left side is a tensor X * Y"
    if r == "c-inv":
        if isinstance(y, Hom):
            return Sequent(Tensor(y.source, x), y.target)
        return "(c-inv) needs a premise of the form Y |- X -o Z"
    return f"unknown rule {r!r}"


def check_proof(p: ProofTree, sig: Signature | None = None) -> CheckReport:
    """Every violation, each with the path of the offending node."""
    report = CheckReport()
    _check(p, (), sig, report)
    return report


def _check(p: ProofTree, path, sig, report: CheckReport) -> None:
    try:
        want = arity(p.rule) if p.rule != HOLE else 0
    except UnknownName as e:
        report.violations.append(Violation(path, p.rule, str(e)))
        return
    if len(p.premises) != want:
        report.violations.append(Violation(path, p.rule, f"expects {want} premises, "
                                                         f"found {len(p.premises)}"))
        return
    for k, q in enumerate(p.premises):
        _check(q, path + (k,), sig, report)
    if p.rule in MACROS:
        try:
            ex = expand_all(ProofTree(p.rule, tuple(_hole(q.conclusion) for q in p.premises),
                                      p.conclusion))
        except ValueError as e:
            report.violations.append(Violation(path, p.rule, str(e)))
            return
        for sub, node in ex.nodes():
            if node.rule == HOLE:
                continue
            msg = _expected(node, sig)
            if msg:
                report.violations.append(Violation(path, p.rule,
                                                   f"in expansion at {show_path(sub)}: {msg}"))
        return
    msg = _expected(p, sig)
    if msg:
        report.violations.append(Violation(path, p.rule, msg))


# -- compilation ----------------------------------------------------------------------


def proof_to_mor(p: ProofTree, sig: Signature | None = None) -> MorTerm:
    """Compile a checked proof: cut is Seq, tensor is Par, (c) is Curry, and so on."""
    report = check_proof(p, sig)
    if not report.ok:
        raise InvalidProof(report)
    return _compile(expand_all(p))


def _compile(p: ProofTree) -> MorTerm:
    r, s = p.rule, p.conclusion
    if r == "i":
        return Id(s.lhs)
    if r == "gen":
        return Gen(p.gen)
    kids = [_compile(q) for q in p.premises]
    if r == "cut":
        return Seq(kids[0], kids[1])
    if r == "tensor":
        return Par(kids[0], kids[1])
    (f,) = kids
    prem = p.premises[0].conclusion.rhs
    if r == "a":
        return Seq(f, Assoc(prem.left.left, prem.left.right, prem.right))
    if r == "a-inv":
        return Seq(f, Unassoc(prem.left, prem.right.left, prem.right.right))
    if r == "l":
        return Seq(f, LeftU(s.rhs))
    if r == "l-inv":
        return Seq(f, UnleftU(prem))
    if r == "r":
        return Seq(f, RightU(s.rhs))
    if r == "r-inv":
        return Seq(f, UnrightU(prem))
    if r == "b":
        return Seq(f, Braid(prem.left, prem.right))
    if r == "c":
        return Curry(f)
    if r == "c-inv":
        return Uncurry(f)
    raise TypeMismatch(f"cannot compile rule {r!r}")


def subst_proof(p: ProofTree, mapping: dict[str, TypeExpr]) -> ProofTree:
    s = Sequent(subst_type(p.conclusion.lhs, mapping), subst_type(p.conclusion.rhs, mapping))
    return ProofTree(p.rule, tuple(subst_proof(q, mapping) for q in p.premises), s, p.gen)


def default_signature() -> Signature:
    return open_signature(Mode.CLOSED_SYMMETRIC)
