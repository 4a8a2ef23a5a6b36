import random

import pytest
from hypothesis import given, settings, strategies as st

from catterm.errors import ModeError, ParseError, TypeMismatch, UnknownName
from catterm.kernel import (UNIT, BasicType, Braid, Curry, Dual, Ev, Gen, Hom, Id, Mode, Par,
                            Seq, Tensor, infer_dom_cod, mode_allows, mode_leq, parse_mor,
                            parse_signature, parse_type, show_mor, show_type,
                            validate_signature)
from catterm.kernel.modes import CONSTRUCTOR_MODES
from termgen import TermGen, signature_for

CHEM = """
mode symmetric
obj H2 O2 H2O
gen burn : O2 * (H2 * H2) -> H2O * H2O
"""

H2, O2, H2O = BasicType("H2"), BasicType("O2"), BasicType("H2O")
X, Y = BasicType("X"), BasicType("Y")


@pytest.fixture
def chem():
    return parse_signature(CHEM)


def test_parse_type_examples(chem):
    assert parse_type("O2 * (H2 * H2)", chem) == Tensor(O2, Tensor(H2, H2))
    assert parse_type("I", chem) == UNIT


def test_hom_expands_in_compact_mode():
    sig = parse_signature("mode compact-symmetric\nobj X Y")
    assert parse_type("X -o Y", sig) == Tensor(Dual(X), Y)


def test_tensor_left_assoc_hom_right_assoc():
    sig = parse_signature("mode closed-symmetric\nobj X Y Z")
    assert parse_type("X * Y * Z", sig) == Tensor(Tensor(X, Y), BasicType("Z"))
    assert parse_type("X -o Y -o Z", sig) == Hom(X, Hom(Y, BasicType("Z")))
    assert parse_type("X * Y -o Z", sig) == Hom(Tensor(X, Y), BasicType("Z"))


def test_parse_type_errors(chem):
    with pytest.raises(ParseError):
        parse_type("H2 * ", chem)
    with pytest.raises(UnknownName):
        parse_type("CO2", chem)
    with pytest.raises(ModeError):
        parse_type("H2 -o O2", chem)


def test_parse_mor_examples(chem):
    t = parse_mor("burn ; (id[H2O] * id[H2O])", chem)
    assert t == Seq(Gen("burn"), Par(Id(H2O), Id(H2O)))
    mono = parse_signature("mode monoidal\nobj X Y")
    with pytest.raises(ModeError):
        parse_mor("braid[X,Y]", mono)
    closed = parse_signature("mode closed-symmetric\nobj X Y")
    assert parse_mor("curry(ev[X,Y])", closed) == Curry(Ev(X, Y))
    with pytest.raises(ModeError):
        parse_mor("dup[H2]", chem)


def test_infer_examples(chem):
    assert infer_dom_cod(Gen("burn"), chem) == (Tensor(O2, Tensor(H2, H2)), Tensor(H2O, H2O))
    closed = parse_signature("mode closed-symmetric\nobj X Y")
    assert infer_dom_cod(Curry(Ev(X, Y)), closed) == (Hom(X, Y), Hom(X, Y))
    with pytest.raises(TypeMismatch) as e:
        infer_dom_cod(Seq(Gen("burn"), Gen("burn")), chem)
    assert "H2O * H2O" in str(e.value) and "O2 * (H2 * H2)" in str(e.value)


def test_validate_signature(chem):
    assert validate_signature(chem) == []
    dup = parse_signature(CHEM + "gen burn : H2 -> H2\n")
    assert len(validate_signature(dup)) == 1
    undeclared = parse_signature(CHEM + "gen fizz : CO2 -> H2\n")
    assert len(validate_signature(undeclared)) == 1


def test_mode_allows_examples():
    assert mode_allows(Mode.SYMMETRIC, "braid")
    assert not mode_allows(Mode.MONOIDAL, "braid")
    assert mode_allows(Mode.CARTESIAN_CLOSED, "dup")
    assert not mode_allows(Mode.SYMMETRIC, "no-such-constructor")


def test_mode_chart():
    chain = [Mode.MONOIDAL, Mode.BRAIDED, Mode.SYMMETRIC, Mode.CARTESIAN, Mode.CARTESIAN_CLOSED]
    for a, b in zip(chain, chain[1:]):
        assert mode_leq(a, b) and not mode_leq(b, a)
    assert mode_leq(Mode.SYMMETRIC, Mode.COMPACT_SYMMETRIC)
    assert not mode_leq(Mode.CARTESIAN, Mode.COMPACT_SYMMETRIC)
    assert not mode_leq(Mode.COMPACT_SYMMETRIC, Mode.CARTESIAN_CLOSED)
    assert not mode_leq(Mode.CARTESIAN, Mode.CLOSED_SYMMETRIC)


@given(st.sampled_from(list(Mode)), st.sampled_from(list(Mode)), st.sampled_from(sorted(CONSTRUCTOR_MODES)))
def test_mode_allows_is_monotone(m1, m2, tag):
    if mode_leq(m1, m2) and mode_allows(m1, tag):
        assert mode_allows(m2, tag)


@given(st.integers(0, 10_000), st.sampled_from([m for m in Mode if m != Mode.COMPACT_SYMMETRIC]))
@settings(max_examples=200, deadline=None)
def test_print_parse_round_trip(seed, mode):
    sig = signature_for(mode)
    t = TermGen(sig, random.Random(seed)).term()
    cart = mode in (Mode.CARTESIAN, Mode.CARTESIAN_CLOSED)
    assert parse_mor(show_mor(t, cart), sig) == t
    d, c = infer_dom_cod(t, sig)
    assert parse_type(show_type(d, cart), sig) == d


@given(st.integers(0, 10_000), st.sampled_from(list(Mode)))
@settings(max_examples=200, deadline=None)
def test_mode_monotonicity(seed, mode):
    sig = signature_for(mode)
    t = TermGen(sig, random.Random(seed)).term()
    types = infer_dom_cod(t, sig)
    for up in Mode:
        if up != mode and mode_leq(mode, up) and not (up == Mode.COMPACT_SYMMETRIC):
            assert infer_dom_cod(t, signature_for(mode).with_mode(up)) == types


def test_structural_typing_table():
    sig = parse_signature("mode cartesian-closed\nobj X Y Z")
    table = {
        "assoc[X,Y,Z]": ("(X * Y) * Z", "X * (Y * Z)"),
        "unassoc[X,Y,Z]": ("X * (Y * Z)", "(X * Y) * Z"),
        "left[X]": ("1 * X", "X"),
        "unleft[X]": ("X", "1 * X"),
        "right[X]": ("X * 1", "X"),
        "unright[X]": ("X", "X * 1"),
        "braid[X,Y]": ("X * Y", "Y * X"),
        "braidinv[X,Y]": ("Y * X", "X * Y"),
        "ev[X,Y]": ("X * (X -o Y)", "Y"),
        "dup[X]": ("X", "X * X"),
        "del[X]": ("X", "1"),
        "p1[X,Y]": ("X * Y", "X"),
        "p2[X,Y]": ("X * Y", "Y"),
        "pair(id[X], id[X])": ("X", "X * X"),
        "curry(id[X * Y])": ("Y", "X -o X * Y"),
        "uncurry(curry(id[X * Y]))": ("X * Y", "X * Y"),
        "name(id[X])": ("1", "X -o X"),
    }
    for src, (d, c) in table.items():
        assert infer_dom_cod(parse_mor(src, sig), sig) == (parse_type(d, sig), parse_type(c, sig)), src
    compact = parse_signature("mode compact-symmetric\nobj X")
    assert infer_dom_cod(parse_mor("cup[X]", compact), compact) == (UNIT, Tensor(Dual(X), X))
    assert infer_dom_cod(parse_mor("cap[X]", compact), compact) == (Tensor(X, Dual(X)), UNIT)


def test_compact_curry_is_dual_tensor():
    sig = parse_signature("mode compact-symmetric\nobj X Y Z\ngen f : X * Y -> Z")
    d, c = infer_dom_cod(Curry(Gen("f")), sig)
    assert (d, c) == (Y, Tensor(Dual(X), BasicType("Z")))


def test_braid_dom_cod():
    sig = parse_signature("mode braided\nobj X Y")
    assert infer_dom_cod(Braid(X, Y), sig) == (Tensor(X, Y), Tensor(Y, X))
