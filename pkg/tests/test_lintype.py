import random
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from catterm.errors import ModeError, TypeMismatch
from catterm.kernel import (UNIT, Assoc, BasicType, Curry, Ev, Gen, Seq, Tensor,
                            infer_dom_cod, parse_signature)
from catterm.lintype import (Apply, BasicC, Comp, CurryC, FnSym, LinearityError, One, TensorC,
                             TensorTm, Var, comb_type, cpvp, is_basic, kernel_to_theory,
                             lin_equiv_combinators, lin_equiv_terms, lin_typecheck,
                             parse_combinator, parse_lin_term, parse_lin_theory,
                             rewrite_steps, show_comb, show_lin, theory_to_kernel, to_mor,
                             variables)
from catterm.lintype.gen import SAMPLE_THEORY, random_lin_term, random_pair
from catterm.models import MatrixModel, random_model, refute_eq
from catterm.rewrite import eq_decide

W, X, Y, Z = (BasicType(n) for n in "WXYZ")

TH = parse_lin_theory("mode closed-symmetric\nobj W X Y Z\n"
                      "gen f : Y * Z -> W\ngen h : X * Y -> Z\ngen k : Z -> X -o Y\n")


def term(src):
    return parse_lin_term(src, TH)


def test_typecheck_examples():
    t = term("(z:Z (x) ((x:X (x) y:Y) (x) w:W))")
    assert lin_typecheck(t, TH) == Tensor(Z, Tensor(Tensor(X, Y), W))
    with pytest.raises(LinearityError):
        lin_typecheck(term("(x:X (x) x:X)"), TH)
    assert lin_typecheck(term("braid(x:X (x) f(y:Y (x) z:Z))"), TH) == Tensor(W, X)
    assert lin_typecheck(One(), TH) == UNIT


def test_typecheck_errors():
    with pytest.raises(TypeMismatch):
        lin_typecheck(term("f(x:X (x) z:Z)"), TH)
    with pytest.raises(LinearityError):
        lin_typecheck(term("(x:X (x) braid(y:Y (x) x:X))"), TH)


def test_application_is_typed_by_codomain():
    # f(t) has the codomain of f, not the type of t
    assert lin_typecheck(term("f(y:Y (x) z:Z)"), TH) == W


def test_cpvp_examples():
    cp, vp = cpvp(term("braid(x:X (x) f(y:Y (x) z:Z))"), TH)
    assert show_comb(cp) == "braid o (id (x) (f o (id (x) id)))"
    assert vp == term("(x:X (x) (y:Y (x) z:Z))")
    cp, vp = cpvp(Var("x", X), TH)
    assert cp == BasicC("id", (X,)) and vp == Var("x", X)
    cp, vp = cpvp(One(), TH)
    assert cp == BasicC("id", (UNIT,)) and vp == One()


def test_equiv_term_examples():
    s = term("(x:X (x) y:Y)")
    assert lin_equiv_terms(Apply(BasicC("id", None), s), s, TH).kind == "equal"
    lhs = term("eval(x:X (x) curry(h)(y:Y))")
    rhs = term("h(x:X (x) y:Y)")
    assert lin_equiv_terms(lhs, rhs, TH).kind == "equal"
    v = lin_equiv_terms(term("braid(x:X (x) y:Y)"), s, TH)
    assert v.kind == "not-equal"
    with pytest.raises(TypeMismatch):
        lin_equiv_terms(s, term("(x:X (x) z:Y)"), TH)


def test_braid_refuted_on_dims_2_3():
    view = theory_to_kernel(TH)
    m = MatrixModel(view.sig, {"W": 1, "X": 2, "Y": 3, "Z": 1})
    a = m.eval(to_mor(BasicC("braid", (X, Y)), TH))
    b = m.eval(to_mor(BasicC("id", (Tensor(X, Y),)), TH))
    assert (a.rows, a.cols) == (b.rows, b.cols) and a != b


def test_equiv_combinator_examples():
    left_unleft = Comp(BasicC("left", (X,)), BasicC("unleft", (X,)))
    assert lin_equiv_combinators(left_unleft, BasicC("id", (X,)), TH).kind == "equal"
    bb = Comp(BasicC("braid", (Y, X)), BasicC("braid", (X, Y)))
    assert lin_equiv_combinators(bb, BasicC("id", (Tensor(X, Y),)), TH).kind == "equal"
    v = lin_equiv_combinators(BasicC("braid", (X, X)), BasicC("id", (Tensor(X, X),)), TH)
    assert v.kind == "not-equal" and v.witness is not None
    with pytest.raises(TypeMismatch):
        lin_equiv_combinators(BasicC("id", (X,)), BasicC("id", (Y,)), TH)


def test_right_unright_types():
    assert comb_type(BasicC("right", (X,)), TH) == (Tensor(X, UNIT), X)
    assert comb_type(BasicC("unright", (X,)), TH) == (X, Tensor(X, UNIT))
    t = Apply(BasicC("right", None), TensorTm(Var("x", X), One()))
    assert lin_equiv_terms(t, Var("x", X), TH).kind == "equal"


def test_translation_examples():
    assert to_mor(BasicC("assoc", (X, Y, Z)), TH) == Assoc(X, Y, Z)
    c = Comp(FnSym("k"), FnSym("h"))
    assert to_mor(c, TH) == Seq(Gen("h"), Gen("k"))
    assert to_mor(CurryC(FnSym("h")), TH) == Curry(Gen("h"))
    assert to_mor(BasicC("eval", (X, Y)), TH) == Ev(X, Y)
    view = theory_to_kernel(TH)
    assert infer_dom_cod(to_mor(c, TH), view.sig) == comb_type(c, TH)


def test_round_trip_and_identifications():
    sig = parse_signature((Path(__file__).resolve().parent.parent / "samples" / "lin.sig").read_text())
    th = kernel_to_theory(sig)
    back = theory_to_kernel(th).sig
    assert {(g.name, g.dom, g.cod) for g in back.generators} == \
        {(g.name, g.dom, g.cod) for g in sig.generators}
    ids = dict(th.identifications)
    assert ids["eval"] == "ev" and ids["braid"] == "b"
    with pytest.raises(ModeError):
        kernel_to_theory(parse_signature("mode symmetric\nobj X"))


def test_parse_and_print_round_trip():
    for src in ("braid(x:X (x) f(y:Y (x) z:Z))", "(1 (x) x:X)", "eval(x:X (x) k(z:Z))"):
        t = term(src)
        assert term(show_lin(t, types=True)) == t
    assert show_lin(term("(1 (x) x:X)")) == "1 (x) x"
    c = parse_combinator("braid o (id (x) (f o (id (x) id)))", TH)
    assert show_comb(c) == "braid o (id (x) (f o (id (x) id)))"


@given(st.integers(0, 1_000_000))
@settings(max_examples=200, deadline=None)
def test_cpvp_is_sound(seed):
    t = random_lin_term(SAMPLE_THEORY, random.Random(seed), 12)
    cp, vp = cpvp(t, SAMPLE_THEORY)
    assert is_basic(vp)
    assert [v.name for v in variables(vp)] == [v.name for v in variables(t)]
    assert lin_equiv_terms(Apply(cp, vp), t, SAMPLE_THEORY).kind == "equal"


@given(st.integers(0, 1_000_000))
@settings(max_examples=100, deadline=None)
def test_rewrites_preserve_linearity(seed):
    t = random_lin_term(SAMPLE_THEORY, random.Random(seed), 12)
    vars_t = sorted((v.name, str(v.type)) for v in variables(t))
    ty = lin_typecheck(t, SAMPLE_THEORY)
    for s in rewrite_steps(t, SAMPLE_THEORY):
        assert lin_typecheck(s, SAMPLE_THEORY) == ty
        assert sorted((v.name, str(v.type)) for v in variables(s)) == vars_t


@given(st.integers(0, 1_000_000))
@settings(max_examples=100, deadline=None)
def test_basic_term_choice_is_immaterial(seed):
    f, g = random_pair(SAMPLE_THEORY, random.Random(seed))
    a = lin_equiv_combinators(f, g, SAMPLE_THEORY, seed=seed, prefix="v")
    b = lin_equiv_combinators(f, g, SAMPLE_THEORY, seed=seed + 1, prefix="w")
    assert a.kind == b.kind


@given(st.integers(0, 1_000_000))
@settings(max_examples=100, deadline=None)
def test_translation_is_sound(seed):
    rng = random.Random(seed)
    f, g = random_pair(SAMPLE_THEORY, rng)
    if lin_equiv_combinators(f, g, SAMPLE_THEORY, seed=seed).kind != "equal":
        return
    view = theory_to_kernel(SAMPLE_THEORY)
    k1, k2 = to_mor(f, SAMPLE_THEORY), to_mor(g, SAMPLE_THEORY)
    assert eq_decide(k1, k2, view.sig, seed=seed).kind != "not-equal"
    m = random_model("matrix", view.sig, rng, max_dim=2)
    assert refute_eq(m, k1, k2) is None


def test_tensor_combinator_rewrites_componentwise():
    t = Apply(TensorC(FnSym("h"), BasicC("id", None)),
              TensorTm(TensorTm(Var("x", X), Var("y", Y)), Var("w", W)))
    u = TensorTm(Apply(FnSym("h"), TensorTm(Var("x", X), Var("y", Y))), Var("w", W))
    assert lin_equiv_terms(t, u, TH).kind == "equal"
