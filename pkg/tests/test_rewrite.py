import random

import pytest
from hypothesis import given, settings, strategies as st

from catterm.errors import TypeMismatch
from catterm.kernel import (Assoc, BasicType, Braid, BraidInv, Curry, Del, Dup, Ev, Gen, Id,
                            LeftU, Mode, Par, RightU, Seq, Tensor, Uncurry, infer_dom_cod,
                            tensor_all,
                            parse_signature)
from catterm.kernel.modes import is_cartesian, is_compact
from catterm.models import random_model, refute_eq
from catterm.rewrite import (AXIOMS, Block, PermLayer, beta_eta_normalize, canonical_iso,
                             coherence_axioms, eq_decide, parenthesizations, strict_to_term,
                             strictify, symmetric_normal_form)
from termgen import TermGen, signature_for, too_big, zigzag

X, Y, Z, W = (BasicType(n) for n in "XYZW")


def sym(extra: str = ""):
    return parse_signature("mode symmetric\nobj W X Y Z\ngen f : X -> Y\ngen g : Y -> Z\n" + extra)


def axiom(name):
    return next(a for a in AXIOMS if a.name == name)


def test_strictify_erases_structure():
    sig = sym()
    s = strictify(Assoc(X, Y, Z), sig)
    assert s.dom == s.cod == (X, Y, Z) and s.layers == ()
    s = strictify(LeftU(X), sig)
    assert s.dom == s.cod == (X,) and s.layers == ()


def test_strictify_two_blocks_on_disjoint_wires():
    sig = sym()
    s = strictify(Seq(Par(Gen("f"), Id(Y)), Par(Id(Y), Gen("g"))), sig)
    assert [(b.term, b.offset) for b in s.layers] == [(Gen("f"), 0), (Gen("g"), 1)]
    assert s.dom == (X, Y) and s.cod == (Y, Z)


def test_layer_interfaces_compose():
    sig = sym()
    s = strictify(Seq(Seq(Par(Gen("f"), Id(X)), Braid(Y, X)), Par(Gen("f"), Id(Y))), sig)
    faces = s.interfaces()
    assert faces[0] == s.dom and faces[-1] == s.cod


def test_symmetric_normal_form_examples():
    sig = sym()
    nf = symmetric_normal_form(strictify(Seq(Braid(X, Y), BraidInv(X, Y)), sig), sig)
    assert nf.layers == ()
    nf = symmetric_normal_form(strictify(Seq(Braid(X, Y), Braid(Y, X)), sig), sig)
    assert nf.layers == ()
    yb = axiom("yang-baxter")
    left = symmetric_normal_form(strictify(yb.lhs, sig), sig)
    right = symmetric_normal_form(strictify(yb.rhs, sig), sig)
    assert left == right
    (layer,) = left.layers
    assert isinstance(layer, PermLayer) and layer.one_line() == [3, 2, 1]


def test_normal_form_rejects_closed_content():
    sig = parse_signature("mode closed-symmetric\nobj X Y")
    with pytest.raises(ValueError):
        symmetric_normal_form(strictify(Ev(X, Y), sig), sig)


def test_beta_eta_examples():
    closed = parse_signature("mode closed-symmetric\nobj X Y Z\ngen f : X * Y -> Z")
    n = beta_eta_normalize(Uncurry(Curry(Gen("f"))), closed, 100)
    assert n.term == Gen("f") and n.normal
    compact = parse_signature("mode compact-symmetric\nobj X")
    assert beta_eta_normalize(zigzag(X), compact, 100).term == Id(X)
    cart = parse_signature("mode cartesian\nobj X")
    t = Seq(Seq(Dup(X), Par(Id(X), Del(X))), RightU(X))
    assert beta_eta_normalize(t, cart, 100).term == Id(X)


def test_fuel_exhaustion_is_tagged():
    closed = parse_signature("mode closed-symmetric\nobj X Y Z\ngen f : X * Y -> Z")
    n = beta_eta_normalize(Uncurry(Curry(Uncurry(Curry(Gen("f"))))), closed, 0)
    assert not n.normal


def test_eq_decide_examples():
    sig = sym()
    pent = axiom("pentagon")
    v = eq_decide(pent.lhs, pent.rhs, sig)
    assert v.kind == "equal" and v.by == "normal-form"
    v = eq_decide(Braid(X, X), Id(Tensor(X, X)), sig, seed=3)
    assert v.kind == "not-equal" and v.witness is not None
    m = v.witness.source
    assert refute_eq(m, Braid(X, X), Id(Tensor(X, X))) is not None
    assert eq_decide(Gen("f"), Gen("f"), sig).kind == "equal"


def test_eq_decide_requires_same_type():
    with pytest.raises(TypeMismatch):
        eq_decide(Gen("f"), Gen("g"), sym())


def test_eq_decide_no_strategy():
    with pytest.raises(ValueError):
        eq_decide(Gen("f"), Gen("f"), sym(), strategy=None)


def test_coherence_axiom_sets():
    names = lambda m: {a.name for a in coherence_axioms(m)}
    assert {"triangle", "pentagon"} <= names(Mode.MONOIDAL)
    assert "hexagon-1" not in names(Mode.MONOIDAL)
    assert {"hexagon-1", "hexagon-2"} <= names(Mode.BRAIDED)
    assert {"zigzag-1", "zigzag-2"} <= names(Mode.COMPACT_SYMMETRIC)
    assert "zigzag-1" not in names(Mode.CARTESIAN_CLOSED)


def test_yang_baxter_equal():
    yb = axiom("yang-baxter")
    assert eq_decide(yb.lhs, yb.rhs, sym()).kind == "equal"


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_mac_lane_small(n):
    atoms = [BasicType(f"A{i}") for i in range(n)]
    sig = parse_signature("mode monoidal\nobj " + " ".join(a.name for a in atoms))
    shapes = parenthesizations(atoms)
    for s in shapes:
        for t in shapes:
            a, b = canonical_iso(s, t), canonical_iso(s, t, via="left")
            assert eq_decide(a, b, sig, strategy="nf").kind == "equal"


@given(st.integers(0, 100_000), st.sampled_from(list(Mode)))
@settings(max_examples=150, deadline=None)
def test_normalize_preserves_types_and_is_idempotent(seed, mode):
    sig = signature_for(mode)
    t = TermGen(sig, random.Random(seed)).term()
    n = beta_eta_normalize(t, sig, 10_000)
    assert infer_dom_cod(n.term, sig) == infer_dom_cod(t, sig)
    if n.normal:
        assert beta_eta_normalize(n.term, sig, 10_000).term == n.term


@given(st.integers(0, 100_000), st.sampled_from([Mode.MONOIDAL, Mode.BRAIDED, Mode.SYMMETRIC]))
@settings(max_examples=150, deadline=None)
def test_strictify_round_trip_is_sound(seed, mode):
    sig = signature_for(mode)
    t = TermGen(sig, random.Random(seed)).term()
    s = strictify(t, sig)
    back = strict_to_term(s, sig)
    d, c = infer_dom_cod(t, sig)
    # the read-back runs between right-nested words; wrap it back to t's bracketing
    wrapped = Seq(Seq(canonical_iso(d, tensor_all(list(s.dom))), back),
                  canonical_iso(tensor_all(list(s.cod)), c))
    assert infer_dom_cod(wrapped, sig) == (d, c)
    m = random_model("matrix", sig, random.Random(seed), max_dim=2)
    assert m.eval(wrapped) == m.eval(t)


@given(st.integers(0, 100_000), st.sampled_from(list(Mode)))
@settings(max_examples=150, deadline=None)
def test_equal_verdicts_survive_models(seed, mode):
    sig = signature_for(mode)
    t1, t2 = TermGen(sig, random.Random(seed)).pair()
    v = eq_decide(t1, t2, sig, seed=seed)
    if v.kind != "equal":
        return
    rng = random.Random(seed + 1)
    kinds = [k for k in ("matrix", "finset") if not (k == "matrix" and is_cartesian(mode))
             and not (k == "finset" and is_compact(mode))]
    for kind in kinds:
        m = random_model(kind, sig, rng, max_dim=2)
        if not too_big(m, (t1, t2)):
            assert refute_eq(m, t1, t2) is None


@given(st.integers(0, 100_000), st.sampled_from([Mode.SYMMETRIC, Mode.BRAIDED]))
@settings(max_examples=100, deadline=None)
def test_not_equal_carries_witness(seed, mode):
    sig = signature_for(mode)
    t1, t2 = TermGen(sig, random.Random(seed)).pair()
    v = eq_decide(t1, t2, sig, seed=seed)
    if v.kind == "not-equal":
        assert v.witness is not None
        assert refute_eq(v.witness.source, t1, t2) is not None


def test_interchange_law():
    sig = sym()
    a = Seq(Par(Gen("f"), Id(X)), Par(Id(Y), Gen("f")))
    b = Par(Gen("f"), Gen("f"))
    assert eq_decide(a, b, sig, strategy="nf").kind == "equal"
    assert isinstance(strictify(b, sig).layers[0], Block)
