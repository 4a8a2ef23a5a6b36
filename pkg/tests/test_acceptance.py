"""The ten acceptance criteria, each timed against its limit.

Every test records one PASS/FAIL line; the lines are printed together at the end
of the run, and directly when this file is run as a script.
"""

import itertools
import random
import time

import pytest

from catterm.errors import FuelExhausted
from catterm.kernel import (UNIT, BasicType, Del, Dup, Id, Mode, Par, RightU, Seq, Signature,
                            infer_dom_cod, parse_signature)
from catterm.kernel.modes import is_cartesian, is_compact
from catterm.lam import (App, I, K, SApp, SVar, TVar, PairT, Var, alpha_eq, church,
                         normalize_untyped, parse_untyped, ski_eliminate, ski_eval, ski_to_lambda,
                         theory_signature, times, typed_to_kernel)
from catterm.lam.typed import LambdaTheory
from catterm.lintype import (Apply, BasicC, LinearityError, cpvp, kernel_to_theory,
                             lin_equiv_combinators, lin_equiv_terms, lin_typecheck,
                             parse_lin_term, parse_lin_theory, show_comb, show_lin,
                             theory_to_kernel, to_mor)
from catterm.lintype.gen import SAMPLE_THEORY, random_lin_term, random_pair
from catterm.lintype.theory import STRUCTURAL
from catterm.mill import check_proof, default_signature, parse_proof, proof_to_mor
from catterm.models import MatrixModel, random_model, refute_eq
from catterm.models.io import random_bindings
from catterm.rewrite import (AXIOMS, beta_eta_normalize, canonical_iso, eq_decide,
                             parenthesizations)
from conftest import ACCEPTANCE_LINES
from lamgen import closed_term
from proofs import (ICOMP, MODUS_PONENS, TRIANGLE_VIA_ASSOC, TRIANGLE_VIA_RIGHT,
                    composition_oracle)
from termgen import TermGen, signature_for, too_big


def criterion(number: int, title: str, limit: float):
    """Time the wrapped check, record a PASS/FAIL line, and fail on overrun."""
    def wrap(fn):
        def test():
            start = time.perf_counter()
            detail, ok = "", False
            try:
                detail = fn() or ""
                ok = True
            except AssertionError as e:
                detail = str(e).splitlines()[0] if str(e) else "assertion failed"
                raise
            finally:
                took = time.perf_counter() - start
                ok = ok and took < limit
                mark = "PASS" if ok else "FAIL"
                ACCEPTANCE_LINES.append(
                    f"criterion {number}: {mark} {title} ({took:.2f}s, limit {limit:g}s) {detail}".rstrip())
            assert took < limit, f"took {took:.2f}s, limit {limit}s"
        test.__name__ = fn.__name__
        test.__doc__ = fn.__doc__
        return test
    return wrap


# -- 1 --------------------------------------------------------------------------------

COHERENCE = ("triangle", "pentagon", "hexagon-1", "hexagon-2", "symmetry", "yang-baxter",
             "zigzag-1", "zigzag-2")
NATURALITY = ("assoc-naturality", "braid-naturality")


@criterion(1, "coherence suite in the matrix model", 60)
def test_coherence_suite():
    checked = 0
    for ax in AXIOMS:
        if ax.name not in COHERENCE:
            continue
        sig = Signature(ax.mode, ax.objects, (), ax.generators)
        for dims in itertools.product(range(1, 5), repeat=len(ax.objects)):
            m = MatrixModel(sig, dict(zip(ax.objects, dims)))
            assert m.eval(ax.lhs) == m.eval(ax.rhs), f"{ax.name} fails at {dims}"
            checked += 1
    # laws with generators, under seeded random bindings
    for ax in AXIOMS:
        if ax.name not in NATURALITY:
            continue
        sig = Signature(ax.mode, ax.objects, (), ax.generators)
        for seed in range(100):
            rng = random.Random(seed)
            m = MatrixModel(sig, {o: rng.randint(1, 4) for o in ax.objects})
            random_bindings(m, rng)
            assert m.eval(ax.lhs) == m.eval(ax.rhs), f"{ax.name} fails for seed {seed}"
            checked += 1
    return f"[{checked} instances]"


# -- 2 --------------------------------------------------------------------------------


def _words(n):
    atoms = [BasicType(f"A{i}") for i in range(n)]
    for mask in range(1 << n):
        yield [UNIT if mask >> i & 1 else a for i, a in enumerate(atoms)]


@criterion(2, "Mac Lane coherence up to five objects", 30)
def test_mac_lane():
    sig = Signature(Mode.MONOIDAL, tuple(f"A{i}" for i in range(5)))
    pairs = 0
    for n in range(1, 6):
        for word in _words(n):
            shapes = parenthesizations(word)
            for s, t in itertools.product(shapes, repeat=2):
                a, b = canonical_iso(s, t), canonical_iso(s, t, via="left")
                assert infer_dom_cod(a, sig) == infer_dom_cod(b, sig) == (s, t)
                v = eq_decide(a, b, sig, strategy="nf")
                assert v.kind == "equal" and v.by == "normal-form", f"{s} -> {t}"
                pairs += 1
            if UNIT in word:
                continue
            # composites routed through every third bracketing
            for s, u, t in itertools.product(shapes, repeat=3):
                detour = Seq(canonical_iso(s, u), canonical_iso(u, t))
                v = eq_decide(detour, canonical_iso(s, t), sig, strategy="nf")
                assert v.kind == "equal" and v.by == "normal-form", f"{s} -> {u} -> {t}"
                pairs += 1
    return f"[{pairs} pairs]"


# -- 3 --------------------------------------------------------------------------------


@criterion(3, "Church arithmetic", 5)
def test_church_arithmetic():
    assert alpha_eq(normalize_untyped(times(church(3), church(2))), church(6))
    for n, m in itertools.product(range(6), repeat=2):
        got = normalize_untyped(times(church(n), church(m)))
        assert alpha_eq(got, normalize_untyped(church(n * m))), f"{n}*{m}"


# -- 4 --------------------------------------------------------------------------------


@criterion(4, "SKI elimination and extensional agreement", 60)
def test_ski():
    assert ski_eliminate(parse_untyped(r"\x. \y. y")) == SApp(K, I)
    assert ski_eval(SApp(SApp(SApp(K, I), SVar("x")), SVar("y"))) == SVar("y")
    failures = skipped = 0
    rng = random.Random(2024)
    for k in range(500):
        t = closed_term(rng, 12)
        args = [Var(f"fresh{k}_{j}") for j in range(rng.randint(1, 3))]
        lam, ski = t, ski_eliminate(t)
        for a in args:
            lam, ski = App(lam, a), SApp(ski, SVar(a.name))
        try:
            want = normalize_untyped(lam, 10_000)
            got = normalize_untyped(ski_to_lambda(ski_eval(ski, 10_000)), 10_000)
        except FuelExhausted:
            skipped += 1
            continue
        failures += not alpha_eq(want, got)
    assert failures == 0, f"{failures} disagreements"
    return f"[500 checks, {skipped} out of fuel]"


# -- 5 --------------------------------------------------------------------------------


@criterion(5, "MILL modus ponens and internal composition", 10)
def test_mill():
    sig = default_signature()
    for src in (MODUS_PONENS, ICOMP):
        p = parse_proof(src)
        assert check_proof(p).ok
        t = proof_to_mor(p)
        assert infer_dom_cod(t, sig) == (p.conclusion.lhs, p.conclusion.rhs)
    m = MatrixModel(sig, {"X": 2, "Y": 2, "Z": 2})
    assert m.eval(proof_to_mor(parse_proof(ICOMP))) == composition_oracle(2, 2, 2)


# -- 6 --------------------------------------------------------------------------------


@criterion(6, "the two triangle deductions agree", 1)
def test_triangle_deductions():
    sig = default_signature()
    a = proof_to_mor(parse_proof(TRIANGLE_VIA_ASSOC))
    b = proof_to_mor(parse_proof(TRIANGLE_VIA_RIGHT))
    assert eq_decide(a, b, sig).kind == "equal"


# -- 7 --------------------------------------------------------------------------------


@criterion(7, "linearity gate", 1)
def test_linearity_gate():
    th = parse_lin_theory("mode closed-symmetric\nobj X\n")
    with pytest.raises(LinearityError):
        lin_typecheck(parse_lin_term("(x:X (x) x:X)", th), th)
    integer = BasicType("integer")
    lth = LambdaTheory(("integer",))
    sig = theory_signature(lth)
    x = TVar("x", integer)
    dup = typed_to_kernel(x, PairT(x, x), sig)
    assert eq_decide(dup, Dup(integer), sig).kind == "equal"
    cart = Signature(Mode.CARTESIAN, ("X",))
    X = BasicType("X")
    n = beta_eta_normalize(Seq(Seq(Dup(X), Par(Id(X), Del(X))), RightU(X)), cart, 100)
    assert n.term == Id(X)


# -- 8 --------------------------------------------------------------------------------


@criterion(8, "cp/vp decomposition", 60)
def test_cpvp():
    th = parse_lin_theory("mode closed-symmetric\nobj W X Y Z\ngen f : Y * Z -> W\n")
    cp, vp = cpvp(parse_lin_term("braid(x:X (x) f(y:Y (x) z:Z))", th), th)
    assert show_comb(cp) == "braid o (id (x) (f o (id (x) id)))"
    assert show_lin(vp) == "x (x) (y (x) z)"
    rng = random.Random(8)
    for k in range(1000):
        t = random_lin_term(SAMPLE_THEORY, rng, 12)
        cp, vp = cpvp(t, SAMPLE_THEORY)
        v = lin_equiv_terms(Apply(cp, vp), t, SAMPLE_THEORY)
        assert v.kind == "equal", f"term {k}: {show_lin(t)}"
    return "[1000 terms]"


# -- 9 --------------------------------------------------------------------------------


@criterion(9, "no false Equal verdicts", 120)
def test_soundness():
    modes = list(Mode)
    equal = models = 0
    for seed in range(1000):
        mode = modes[seed % len(modes)]
        sig = signature_for(mode)
        t1, t2 = TermGen(sig, random.Random(seed)).pair()
        v = eq_decide(t1, t2, sig, seed=seed)
        if v.kind != "equal":
            continue
        equal += 1
        rng = random.Random(seed + 1)
        kinds = [k for k in ("matrix", "finset")
                 if not (k == "matrix" and is_cartesian(mode))
                 and not (k == "finset" and is_compact(mode))]
        for kind in kinds:
            m = random_model(kind, sig, rng, max_dim=2)
            if too_big(m, (t1, t2)):
                continue
            models += 1
            assert refute_eq(m, t1, t2) is None, f"seed {seed} in {mode}"
    return f"[{equal} equal pairs, {models} model checks]"


# -- 10 -------------------------------------------------------------------------------


@criterion(10, "theory/kernel round trip", 60)
def test_round_trip():
    sig = parse_signature("mode closed-symmetric\nobj X Y Z\n"
                          "gen f : Y * Z -> X\ngen g : X -> Y\ngen h : X * Y -> Z\n"
                          "gen k : Z -> X -o Y\ngen u : I -> X\n")
    th = kernel_to_theory(sig)
    back = theory_to_kernel(th).sig
    assert [(g.name, g.dom, g.cod) for g in back.generators] == \
        [(g.name, g.dom, g.cod) for g in sig.generators]
    X, Y, Z = (BasicType(n) for n in "XYZ")
    args = {"id": (X,), "assoc": (X, Y, Z), "unassoc": (X, Y, Z), "braid": (X, Y),
            "left": (X,), "unleft": (X,), "right": (X,), "unright": (X,), "eval": (X, Y)}
    for tag, name in th.identifications:
        assert to_mor(BasicC(tag, args[tag]), th) == STRUCTURAL[name](*args[tag])
    th2 = kernel_to_theory(back)
    rng = random.Random(10)
    for k in range(200):
        f, g = random_pair(SAMPLE_THEORY, rng)
        a = lin_equiv_combinators(f, g, SAMPLE_THEORY, seed=k)
        b = lin_equiv_combinators(f, g, kernel_to_theory(theory_to_kernel(SAMPLE_THEORY).sig),
                                  seed=k)
        assert a.kind == b.kind, f"pair {k}"
    assert th2.functions == th.functions
    return "[200 pairs]"


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                pass
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        print(line)
