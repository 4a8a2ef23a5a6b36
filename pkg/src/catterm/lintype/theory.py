"""Linear type theories as closed symmetric monoidal signatures, and their equivalence."""

from __future__ import annotations

import random
from dataclasses import dataclass

from ..errors import CatTermError, ModeError, TypeMismatch
from ..kernel.modes import Mode
from ..kernel.signature import Signature
from ..kernel.terms import (Assoc, Braid, Curry, Ev, Gen, Id, LeftU, MorTerm, Par, RightU,
                            Seq, Unassoc, UnleftU, UnrightU, seq_all,
                            subst_term_types)
from ..kernel.types import UNIT, BasicType, Hom, Tensor, TypeExpr, basic_names
from ..rewrite.axioms import invert, to_right_nested
from ..rewrite.decide import EqVerdict, Witness, eq_decide
from .core import (Apply, BasicC, Comp, Combinator, CurryC, FnSym, LinTerm, LinTheory, One,
                   TensorC, TensorTm, Var, annotate, canonical_basic_term, comb_type, cpvp,
                   lin_typecheck, variables)

# basic combinator -> the structural morphism it names in a closed symmetric monoidal category
IDENTIFICATIONS = (
    ("id", "1"), ("assoc", "a"), ("unassoc", "a^-1"), ("braid", "b"), ("left", "l"),
    ("unleft", "l^-1"), ("right", "r"), ("unright", "r^-1"), ("eval", "ev"),
)
STRUCTURAL = {"1": Id, "a": Assoc, "a^-1": Unassoc, "b": Braid, "l": LeftU,
              "l^-1": UnleftU, "r": RightU, "r^-1": UnrightU, "ev": Ev}

# the equations a closed symmetric monoidal category induces on terms
INDUCED_EQUATIONS = (
    "1_A(x) ~ x",
    "(g [] f)(x) ~ g(f(x))",
    "(f . g)(x (x) y) ~ (f(x) (x) g(y))",
    "a_{A,B,C}((x (x) y) (x) z) ~ (x (x) (y (x) z))",
    "b_{A,B}(x (x) y) ~ (y (x) x)",
    "l_A(1 (x) x) ~ x",
    "r_A(x (x) 1) ~ x",
    "ev_{A,B}(x (x) curry(f)(y)) ~ f(x (x) y)",
)


@dataclass(frozen=True)
class KernelView:
    """A theory seen as a signature, with the combinator translation."""
    theory: LinTheory
    sig: Signature

    def translate(self, c: Combinator) -> MorTerm:
        return to_mor(c, self.theory)


def theory_signature(th: LinTheory) -> Signature:
    objs = set(th.basic_types)
    for g in th.functions:
        objs |= basic_names(g.dom) | basic_names(g.cod)
    return Signature(Mode.CLOSED_SYMMETRIC, tuple(sorted(objs)), (), tuple(th.functions))


def theory_to_kernel(th: LinTheory) -> KernelView:
    return KernelView(th, theory_signature(th))


def kernel_to_theory(sig: Signature) -> LinTheory:
    """Basic types are the objects, function symbols the generators.

    The structural morphisms enter through the identifications of the
    basic combinators (assoc = a, braid = b, eval = ev, ...).
    """
    if sig.mode != Mode.CLOSED_SYMMETRIC:
        raise ModeError(f"a linear type theory needs a closed-symmetric signature, not {sig.mode}")
    return LinTheory(tuple(sig.objects), tuple(sig.generators), IDENTIFICATIONS)


def to_mor(c: Combinator, th: LinTheory) -> MorTerm:
    """Translate an annotated combinator; ``g o f`` becomes ``Seq(f, g)``."""
    if isinstance(c, FnSym):
        comb_type(c, th)
        return Gen(c.name)
    if isinstance(c, BasicC):
        comb_type(c, th)
        name = dict(IDENTIFICATIONS)[c.tag]
        return STRUCTURAL[name](*c.at)
    if isinstance(c, Comp):
        comb_type(c, th)
        return Seq(to_mor(c.f, th), to_mor(c.g, th))
    if isinstance(c, TensorC):
        return Par(to_mor(c.f, th), to_mor(c.g, th))
    if isinstance(c, CurryC):
        comb_type(c, th)
        return Curry(to_mor(c.f, th))
    raise TypeError(f"not a combinator: {c!r}")


# -- the rewrite relation ------------------------------------------------------------------


def rewrite_steps(t: LinTerm, th: LinTheory) -> list[LinTerm]:
    """Every one-step rewrite of an annotated term, at any position."""
    out = []
    here = _rewrite_root(t)
    if here is not None:
        out.append(here)
    if isinstance(t, TensorTm):
        out += [TensorTm(s, t.right) for s in rewrite_steps(t.left, th)]
        out += [TensorTm(t.left, s) for s in rewrite_steps(t.right, th)]
    elif isinstance(t, Apply):
        out += [Apply(t.comb, s) for s in rewrite_steps(t.arg, th)]
    return out


def _rewrite_root(t: LinTerm) -> LinTerm | None:
    if not isinstance(t, Apply):
        return None
    c, s = t.comb, t.arg
    if isinstance(c, Comp):
        return Apply(c.g, Apply(c.f, s))
    if isinstance(c, TensorC) and isinstance(s, TensorTm):
        return TensorTm(Apply(c.f, s.left), Apply(c.g, s.right))
    if not isinstance(c, BasicC):
        return None
    tag = c.tag
    if tag == "id":
        return s
    if tag == "unleft":
        return TensorTm(One(), s)
    if tag == "unright":
        return TensorTm(s, One())
    if not isinstance(s, TensorTm):
        return None
    l, r = s.left, s.right
    if tag == "assoc" and isinstance(l, TensorTm):
        return TensorTm(l.left, TensorTm(l.right, r))
    if tag == "unassoc" and isinstance(r, TensorTm):
        return TensorTm(TensorTm(l, r.left), r.right)
    if tag == "braid":
        return TensorTm(r, l)
    if tag == "left" and isinstance(l, One):
        return r
    if tag == "right" and isinstance(r, One):
        return l
    if tag == "eval" and isinstance(r, Apply) and isinstance(r.comb, CurryC):
        return Apply(r.comb.f, TensorTm(l, r.arg))
    return None


def lin_normalize(t: LinTerm, th: LinTheory, fuel: int = 10_000) -> LinTerm:
    """Rewrite innermost-first until no rule applies (or fuel runs out)."""
    t = annotate(t, th)
    for _ in range(fuel):
        nxt = _innermost(t)
        if nxt is None:
            return t
        t = nxt
    return t


def _innermost(t: LinTerm) -> LinTerm | None:
    if isinstance(t, TensorTm):
        s = _innermost(t.left)
        if s is not None:
            return TensorTm(s, t.right)
        s = _innermost(t.right)
        return None if s is None else TensorTm(t.left, s)
    if isinstance(t, Apply):
        s = _innermost(t.arg)
        if s is not None:
            return Apply(t.comb, s)
    return _rewrite_root(t)


# -- equivalence -----------------------------------------------------------------------------


def _shape(b: LinTerm) -> TypeExpr:
    # each variable becomes an opaque atom, so tensor-typed variables stay whole
    if isinstance(b, Var):
        return BasicType("#" + b.name)
    if isinstance(b, TensorTm):
        return Tensor(_shape(b.left), _shape(b.right))
    return UNIT


def _rearrange(b1: LinTerm, b2: LinTerm) -> MorTerm:
    """Structural iso sending the basic term b1 to b2 (same variables, any order or units)."""
    s1, s2 = _shape(b1), _shape(b2)
    to_flat = to_right_nested(s1)
    from_flat = [invert(s) for s in reversed(to_right_nested(s2))]
    order1 = ["#" + v.name for v in variables(b1)]
    order2 = ["#" + v.name for v in variables(b2)]
    steps = list(to_flat) + _permute(order1, order2) + from_flat
    iso = seq_all(steps) if steps else Id(s1)
    return subst_term_types(iso, {"#" + v.name: v.type for v in variables(b1)})


def _right_nest(ts: list[TypeExpr]) -> TypeExpr:
    out = ts[-1]
    for t in reversed(ts[:-1]):
        out = Tensor(t, out)
    return out


def _permute(src: list[str], dst: list[str]) -> list[MorTerm]:
    """Adjacent transpositions turning the right-nested word ``src`` into ``dst``."""
    cur = list(src)
    steps = []
    for i, want in enumerate(dst):
        j = cur.index(want)
        while j > i:
            steps.append(_swap_at(cur, j - 1))
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            j -= 1
    return steps


def _swap_at(word: list[str], k: int) -> MorTerm:
    ts = [BasicType(n) for n in word]
    a, b, rest = ts[k], ts[k + 1], ts[k + 2:]
    if rest:
        r = _right_nest(rest)
        core = seq_all([Unassoc(a, b, r), Par(Braid(a, b), Id(r)), Assoc(b, a, r)])
    else:
        core = Braid(a, b)
    for t in reversed(ts[:k]):
        core = Par(Id(t), core)
    return core


def _extensional(k: MorTerm, cod: TypeExpr) -> MorTerm:
    # apply a hom-valued morphism to a fresh argument until the result is not a function
    while isinstance(cod, Hom):
        k = Seq(Par(Id(cod.source), k), Ev(cod.source, cod.target))
        cod = cod.target
    return k


def lin_equiv_terms(t1: LinTerm, t2: LinTerm, th: LinTheory | None = None,
                    fuel: int = 10_000, seed: int = 0) -> EqVerdict:
    """Decide ``t1 ~ t2``: rewriting first, then the combinator parts in the kernel."""
    th = th or LinTheory()
    ty1, ty2 = lin_typecheck(t1, th), lin_typecheck(t2, th)
    if {(v.name, v.type) for v in variables(t1)} != {(v.name, v.type) for v in variables(t2)}:
        raise TypeMismatch("the terms do not contain the same variables")
    view = theory_to_kernel(th)
    if ty1 != ty2:
        # equivalent terms have the same type; a model can still show the maps differ
        return EqVerdict("not-equal", witness=_shape_blind_witness(t1, t2, view, seed),
                         reason="the terms have different types")
    if lin_normalize(t1, th, fuel) == lin_normalize(t2, th, fuel):
        return EqVerdict("equal", by="axiom-path")
    k1, k2, cod = _kernel_pair(t1, t2, view)
    return eq_decide(_extensional(k1, cod), _extensional(k2, cod), view.sig,
                     fuel=fuel, seed=seed)


def _kernel_pair(t1: LinTerm, t2: LinTerm, view: KernelView):
    th = view.theory
    c1, b1 = cpvp(t1, th)
    c2, b2 = cpvp(t2, th)
    k1 = to_mor(c1, th)
    k2 = Seq(_rearrange(b1, b2), to_mor(c2, th))
    return k1, k2, comb_type(c1, th)[1]


def _shape_blind_witness(t1, t2, view: KernelView, seed: int) -> Witness | None:
    """Compare the two maps as raw matrices in random matrix models of equal carrier sizes."""
    from ..models.io import random_model
    k1, k2, _ = _kernel_pair(t1, t2, view)
    rng = random.Random(seed)
    for k in range(8):
        m = random_model("matrix", view.sig, rng, max_dim=3, name=f"random-matrix-{seed}-{k}")
        try:
            a, b = m.eval(k1), m.eval(k2)
        except CatTermError:
            continue
        if (a.rows, a.cols) == (b.rows, b.cols):
            w = a.first_difference(b)
            if w is not None:
                return Witness(m.name, w, "matrix", m)
    return None


def lin_equiv_combinators(f: Combinator, g: Combinator, th: LinTheory | None = None,
                          fuel: int = 10_000, seed: int = 0, prefix: str = "v") -> EqVerdict:
    """``f ~ g`` iff ``f(b) ~ g(b)`` for a canonical basic term ``b`` of the domain."""
    th = th or LinTheory()
    df, cf = comb_type(f, th)
    dg, cg = comb_type(g, th)
    if (df, cf) != (dg, cg):
        raise TypeMismatch("combinators have different types", (df, cf), (dg, cg))
    b = canonical_basic_term(df, prefix)
    return lin_equiv_terms(Apply(f, b), Apply(g, b), th, fuel, seed)
