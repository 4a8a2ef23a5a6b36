import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from catterm.errors import FuelExhausted, ModeError, TypeMismatch, UnknownName
from catterm.kernel import (UNIT, BasicType, Dup, Hom, Id, Mode, Name, Pair,
                            Signature, Tensor, infer_dom_cod)
from catterm.lam import (EQUAL, NOT_EQUAL, P1, P2, Basic, FreeVariableEscape, I, K,
                         NotANumeral, PairT, S, SApp, SVar, TApp, TLam, TVar, UnitT, App, Lam,
                         Var, alpha_eq, church, church_decode, equiv_typed, kernel_equiv,
                         kernel_to_typed, lambda_to_ccc, normalize_typed, normalize_untyped,
                         parse_lambda_file, parse_ski, parse_typed, parse_untyped, show_ski,
                         ski_eliminate, ski_eval, ski_to_lambda, substitute, substitute_typed,
                         theory_signature, times, typecheck, typed_to_kernel)
from catterm.models import FinSetModel, random_model, refute_eq
from catterm.rewrite import eq_decide
from lamgen import closed_term, size

INT, DAY, X, Y = BasicType("integer"), BasicType("day"), BasicType("X"), BasicType("Y")
THEORY = parse_lambda_file("type integer day\nbasic tuesday : day\n"
                           "basic succ : integer -o integer\nbasic zero : integer\n").theory


def u(src):
    return parse_untyped(src)


def test_substitution_examples():
    assert substitute(u("x x"), "x", Var("f")) == u("f f")
    renamed = substitute(u(r"\y. x"), "x", Var("y"))
    assert isinstance(renamed, Lam) and renamed.bound != "y" and renamed.body == Var("y")
    assert substitute(u(r"\x. x"), "x", Var("s")) == u(r"\x. x")


def test_normalize_examples():
    assert alpha_eq(normalize_untyped(times(church(3), church(2))), church(6))
    assert normalize_untyped(u(r"(\x. x) y")) == Var("y")
    with pytest.raises(FuelExhausted) as info:
        normalize_untyped(u(r"(\x. x x) (\x. x x)"), fuel=100)
    assert info.value.last is not None
    assert normalize_untyped(u(r"\x. f x")) == Var("f")


def test_church_examples():
    assert alpha_eq(church(0), u(r"\f. \x. x"))
    assert alpha_eq(church(3), u(r"\f. \x. f (f (f x))"))
    with pytest.raises(NotANumeral):
        church_decode(u(r"\x. x"))
    assert church_decode(u(r"\x. x"), eta=True) == 1
    with pytest.raises(NotANumeral):
        church_decode(u(r"\f. \x. x f"))
    with pytest.raises(ValueError):
        church(-1)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(6) for m in range(6)])
def test_church_times(n, m):
    got = normalize_untyped(times(church(n), church(m)))
    # eta turns church(1) into \f. f
    assert church_decode(got, eta=True) == n * m
    assert alpha_eq(got, normalize_untyped(church(n * m)))


@given(st.integers(0, 40))
def test_church_round_trip(n):
    assert church_decode(church(n)) == n


def test_ski_examples():
    assert ski_eliminate(u(r"\x. \y. y")) == SApp(K, I)
    assert ski_eval(parse_ski("K(I)(x)(y)")) == SVar("y")
    assert ski_eliminate(u(r"\x. x")) == I
    assert ski_eliminate(u(r"\x. u")) == SApp(K, SVar("u"))
    assert ski_eval(parse_ski("I(a)")) == SVar("a")
    assert ski_eval(parse_ski("S(K)(K)(c)")) == SVar("c")
    assert parse_ski("S K K c") == parse_ski("S(K)(K)(c)")
    assert show_ski(SApp(K, I)) == "K(I)"
    with pytest.raises(FuelExhausted):
        ski_eval(parse_ski("S I I (S I I)"), fuel=50)


def _combinator_only(t):
    if isinstance(t, SApp):
        return _combinator_only(t.fun) and _combinator_only(t.arg)
    return t in (S, K, I)


@given(st.integers(0, 1_000_000))
def test_elimination_of_closed_terms_is_variable_free(seed):
    assert _combinator_only(ski_eliminate(closed_term(random.Random(seed), 12)))


def _ski_agrees(t, args, fuel=10_000):
    lam = t
    ski = ski_eliminate(t)
    for a in args:
        lam = App(lam, a)
        ski = SApp(ski, ski_eliminate(a))
    try:
        want = normalize_untyped(lam, fuel)
        got = normalize_untyped(ski_to_lambda(ski_eval(ski, fuel)), fuel)
    except FuelExhausted:
        return None
    return alpha_eq(want, got)


@given(st.integers(0, 1_000_000))
@settings(max_examples=200, deadline=None)
def test_ski_extensional(seed):
    rng = random.Random(seed)
    t = closed_term(rng, 12)
    assert size(t) <= 12
    a = closed_term(rng, 6)
    assert _ski_agrees(t, [a]) in (True, None)
    assert _ski_agrees(t, [Var("p"), Var("q")]) in (True, None)


def test_typecheck_examples():
    dup = parse_typed(r"\x:integer. (x, x)", THEORY)
    assert typecheck(dup, THEORY) == Hom(INT, Tensor(INT, INT))
    with pytest.raises(TypeMismatch):
        typecheck(parse_typed("succ tuesday", THEORY), THEORY)
    assert typecheck(UnitT()) == UNIT
    with pytest.raises(UnknownName):
        typecheck(Basic("monday", DAY), THEORY)
    with pytest.raises(TypeMismatch):
        typecheck(P1(TVar("x", INT)))


def test_equiv_examples():
    s = TVar("s", INT)
    body = PairT(TVar("x", INT), TVar("x", INT))
    redex = TApp(TLam("x", INT, body), s)
    assert equiv_typed(redex, substitute_typed(body, "x", s), {"s"}) == EQUAL
    t = TVar("t", DAY)
    assert equiv_typed(P1(PairT(s, t)), s, {"s", "t"}) == EQUAL
    assert equiv_typed(P2(TVar("w", Tensor(INT, UNIT))), UnitT(), {"w"}) == EQUAL
    assert equiv_typed(s, TVar("r", INT), {"s", "r"}) == NOT_EQUAL
    with pytest.raises(TypeMismatch):
        equiv_typed(s, t)
    with pytest.raises(FreeVariableEscape):
        equiv_typed(s, s, {"r"})


def test_eta_for_pairs_and_functions():
    p = TVar("p", Tensor(INT, DAY))
    assert equiv_typed(PairT(P1(p), P2(p)), p) == EQUAL
    f = TVar("f", Hom(INT, INT))
    assert equiv_typed(TLam("z", INT, TApp(f, TVar("z", INT))), f) == EQUAL


# random typed terms over a small context, for the relation properties

CTX = [TVar("a", INT), TVar("b", DAY), TVar("g", Hom(INT, INT)), TVar("p", Tensor(INT, DAY))]


def typed_term(rng, ty, depth=3):
    opts = [v for v in CTX if v.type == ty]
    if ty == UNIT:
        opts.append(UnitT())
    if depth > 0:
        if isinstance(ty, Tensor):
            opts.append(PairT(typed_term(rng, ty.left, depth - 1), typed_term(rng, ty.right, depth - 1)))
        if isinstance(ty, Hom):
            opts.append(TLam("z", ty.source, typed_term(rng, ty.target, depth - 1)))
        if ty == INT:
            opts.append(TApp(CTX[2], typed_term(rng, INT, depth - 1)))
            opts.append(P1(typed_term(rng, Tensor(INT, DAY), depth - 1)))
            opts.append(TApp(TLam("z", INT, TVar("z", INT)), typed_term(rng, INT, depth - 1)))
        if ty == DAY:
            opts.append(P2(typed_term(rng, Tensor(INT, DAY), depth - 1)))
    return rng.choice(opts)


TYPES = [INT, DAY, Tensor(INT, DAY), Hom(INT, INT), UNIT]


@given(st.integers(0, 1_000_000), st.sampled_from(TYPES))
@settings(max_examples=100, deadline=None)
def test_equiv_is_an_equivalence(seed, ty):
    rng = random.Random(seed)
    a, b, c = (typed_term(rng, ty) for _ in range(3))
    assert equiv_typed(a, a) == EQUAL
    assert equiv_typed(a, b) == equiv_typed(b, a)
    if equiv_typed(a, b) == EQUAL and equiv_typed(b, c) == EQUAL:
        assert equiv_typed(a, c) == EQUAL


@given(st.integers(0, 1_000_000))
@settings(max_examples=100, deadline=None)
def test_equiv_is_a_congruence(seed):
    rng = random.Random(seed)
    a, b = typed_term(rng, INT), typed_term(rng, INT)
    assume(equiv_typed(a, b) == EQUAL or rng.random() < 0.2)
    verdict = equiv_typed(a, b)
    g = CTX[2]
    assert equiv_typed(TApp(g, a), TApp(g, b)) == verdict
    # abstracting a free variable neither merges nor splits classes
    assert equiv_typed(TLam("a", INT, a), TLam("a", INT, b)) == verdict
    assert equiv_typed(TLam("q", DAY, a), TLam("q", DAY, b)) == verdict


def test_normalize_typed_is_canonical():
    a = normalize_typed(parse_typed(r"\x:integer. x"))
    b = normalize_typed(parse_typed(r"\y:integer. y"))
    assert a == b


def _mor(rng, cat, dom, cod):
    x = TVar("x", dom)
    body = typed_term(random.Random(rng.random()), cod)
    # close the term over x by substituting the context variables
    for v in CTX:
        if v.type == dom:
            body = substitute_typed(body, v.name, x)
        else:
            body = substitute_typed(body, v.name, _default(v.type, x))
    return cat.mor_of(x, body)


def _default(ty, x):
    if ty == INT:
        return P1(x) if x.type == Tensor(INT, DAY) else Basic("zero", INT)
    if ty == DAY:
        return P2(x) if x.type == Tensor(INT, DAY) else Basic("tuesday", DAY)
    if ty == Hom(INT, INT):
        return Basic("succ", ty)
    return PairT(_default(INT, x), _default(DAY, x))


@given(st.integers(0, 1_000_000))
@settings(max_examples=100, deadline=None)
def test_lambek_category_laws(seed):
    rng = random.Random(seed)
    cat = lambda_to_ccc(THEORY)
    objs = [INT, Tensor(INT, DAY), Hom(INT, INT)]
    a, b, c, d = (rng.choice(objs) for _ in range(4))
    f, g, h = _mor(rng, cat, a, b), _mor(rng, cat, b, c), _mor(rng, cat, c, d)
    assert cat.same(cat.compose(cat.compose(f, g), h), cat.compose(f, cat.compose(g, h)))
    assert cat.same(cat.compose(cat.identity(a, "y"), f), f)
    assert cat.same(cat.compose(f, cat.identity(b, "y")), f)


def test_lambek_examples():
    cat = lambda_to_ccc(THEORY)
    x = TVar("x", INT)
    dup = cat.mor_of(x, PairT(x, x))
    assert cat.cod(dup) == Tensor(INT, INT)
    with pytest.raises(FreeVariableEscape):
        cat.mor_of(x, TVar("y", INT))
    t = cat.mor_of(x, TApp(Basic("succ", Hom(INT, INT)), x))
    assert cat.same(cat.compose(t, cat.identity(INT, "y")), t)


SIG = theory_signature(THEORY)


def test_typed_to_kernel_examples():
    x = TVar("x", INT)
    dup = typed_to_kernel(x, PairT(x, x), SIG)
    assert dup == Pair(Id(INT), Id(INT))
    assert eq_decide(dup, Dup(INT), SIG).kind == "equal"
    assert typed_to_kernel(x, x, SIG) == Id(INT)
    with pytest.raises(FreeVariableEscape):
        typed_to_kernel(x, TVar("y", INT), SIG)
    sym = Signature(Mode.SYMMETRIC, ("integer",))
    with pytest.raises(ModeError):
        typed_to_kernel(x, x, sym)


def test_identity_lambda_is_name_of_identity():
    sig = Signature(Mode.CARTESIAN_CLOSED, ("X",))
    u_ = TVar("u", UNIT)
    t = typed_to_kernel(u_, TLam("x", X, TVar("x", X)), sig)
    assert infer_dom_cod(t, sig) == (UNIT, Hom(X, X))
    m = FinSetModel(sig, {"X": 2})
    assert m.eval(t) == m.eval(Name(Id(X)))


@given(st.integers(0, 1_000_000), st.sampled_from([INT, Tensor(INT, DAY), Hom(INT, INT)]))
@settings(max_examples=60, deadline=None)
def test_compilation_is_sound(seed, cod):
    rng = random.Random(seed)
    cat = lambda_to_ccc(THEORY)
    dom = rng.choice([INT, Tensor(INT, DAY)])
    f = _mor(rng, cat, dom, cod)
    if rng.random() < 0.5:
        g_term = TApp(TLam("w", cod, TVar("w", cod)), f.term)
    else:
        g = _mor(rng, cat, dom, cod)
        g_term = substitute_typed(g.term, g.var.name, f.var)
    k1, k2 = typed_to_kernel(f.var, f.term, SIG), typed_to_kernel(f.var, g_term, SIG)
    assert infer_dom_cod(k1, SIG) == (dom, cod)
    if equiv_typed(f.term, g_term) == EQUAL:
        m = random_model("finset", SIG, rng, max_dim=2)
        assert refute_eq(m, k1, k2) is None
        assert kernel_equiv(k1, k2, SIG) == EQUAL


def test_readback_round_trip():
    x = TVar("x", Tensor(INT, DAY))
    t = PairT(P2(x), TApp(Basic("succ", Hom(INT, INT)), P1(x)))
    k = typed_to_kernel(x, t, SIG)
    y, back = kernel_to_typed(k, SIG)
    assert equiv_typed(substitute_typed(back, y.name, x), t) == EQUAL
