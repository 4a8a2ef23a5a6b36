import json
import xml.etree.ElementTree as ET
from collections import Counter
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from catterm.cli import export_diagram, main, render, run_command
from catterm.kernel import (Assoc, BasicType, Braid, Curry, Gen, Id, Par, Seq, Tensor,
                            infer_dom_cod, parse_signature)
from catterm.kernel.types import flatten, show_type

SAMPLES = Path(__file__).resolve().parent.parent / "samples"
CHEM = str(SAMPLES / "chem.sig")
X, Y, Z = BasicType("X"), BasicType("Y"), BasicType("Z")


def run(*argv):
    report, out, err = run_command([str(a) for a in argv])
    return report.exit_code, out, err


@pytest.mark.parametrize("argv,code", [
    (["check", CHEM], 0),
    (["eq", CHEM, "--lhs", "burn", "--rhs", "burn"], 0),
    (["eq", CHEM, "--lhs", "braid[H,H]", "--rhs", "id[H*H]"], 1),
    (["eq", CHEM, "--lhs", "burn", "--rhs", "split"], 3),
    (["check", SAMPLES / "missing.sig"], 4),
    (["mill", "check", SAMPLES / "icomp.mill"], 0),
    (["lam", "run", SAMPLES / "church.lam", "--fuel", "10000"], 0),
    (["lam", "run", "--term", r"(\x. x x) (\x. x x)", "--fuel", "50"], 2),
    (["lin", "eq", SAMPLES / "lin.sig", "--lhs", "braid(x:X (x) y:X)", "--rhs", "(x:X (x) y:X)"], 1),
    (["eq", CHEM, "--lhs", "burn ;", "--rhs", "burn"], 3),
])
def test_exit_codes(argv, code):
    assert run(*argv)[0] == code


def test_church_run_prints_six():
    code, out, _ = run("lam", "run", SAMPLES / "church.lam", "--fuel", "10000")
    assert code == 0 and out[-1].endswith("= 6")


def test_lam_church_and_ski():
    code, out, _ = run("lam", "church", "3")
    assert code == 0 and out
    code, out, _ = run("lam", "ski", "--term", r"\x. \y. y")
    assert code == 0 and "K(I)" in out[0]


def test_mill_compile_prints_morphisms():
    code, out, _ = run("mill", "compile", SAMPLES / "icomp.mill")
    assert code == 0 and len(out) >= 2


def test_lin_cpvp_matches_printed_example(tmp_path):
    sig = tmp_path / "w.sig"
    sig.write_text("mode closed-symmetric\nobj W X Y Z\ngen f : Y * Z -> W\n")
    code, out, _ = run("lin", "cpvp", sig, "--term", "braid(x:X (x) f(y:Y (x) z:Z))")
    assert code == 0
    assert "cp = braid o (id (x) (f o (id (x) id)))" in out
    assert "vp = x (x) (y (x) z)" in out


def test_eval_and_coherence():
    model = SAMPLES / "chem-matrix.json"
    code, out, _ = run("eval", CHEM, "--model", model, "--term", "split")
    assert code == 0 and json.loads("\n".join(out))
    code, _, _ = run("coherence", "--mode", "symmetric", "--model", "matrix",
                     "--samples", "5", "--seed", "1")
    assert code == 0


def test_json_report_anywhere_in_argv():
    code, out, _ = run("eq", CHEM, "--lhs", "burn", "--rhs", "burn", "--json")
    doc = json.loads(out[0])
    assert code == 0 and doc["exit_code"] == 0
    _, out2, _ = run("--json", "eq", CHEM, "--lhs", "burn", "--rhs", "burn")
    assert json.loads(out2[0])["result"] == doc["result"]
    code, out, _ = run("--json", "check", SAMPLES / "missing.sig")
    assert code == 4 and not json.loads(out[0])["result"]["error"].startswith("error")


def test_reports_are_deterministic():
    argv = ["--json", "eq", CHEM, "--lhs", "braid[H,H]", "--rhs", "id[H*H]", "--seed", "7"]
    assert run(*argv) == run(*argv)


def test_main_returns_exit_code(capsys):
    assert main(["check", CHEM]) == 0
    assert main(["check", str(SAMPLES / "missing.sig")]) == 4
    assert "error" in capsys.readouterr().err


def test_diagram_output_file(tmp_path):
    target = tmp_path / "d.svg"
    code, _, _ = run("diagram", CHEM, "--term", "burn ; split", "--format", "svg", "-o", target)
    assert code == 0
    ET.fromstring(target.read_text())


# -- diagrams ------------------------------------------------------------------------

SYM = parse_signature("mode symmetric\nobj X Y Z\ngen f : X * Y -> Z\ngen g : Z -> X * Y\n")
CLOSED = parse_signature("mode closed-symmetric\nobj X Y Z\ngen f : X * Y -> Z\n")


def test_identity_wire():
    doc = export_diagram(Id(X), SYM).to_json()
    kinds = Counter(n["kind"] for n in doc["nodes"])
    assert kinds == {"input-port": 1, "output-port": 1}
    assert len(doc["edges"]) == 1 and doc["edges"][0]["type"] == "X"


def test_generator_box_and_braid():
    g = export_diagram(Gen("f"), SYM)
    assert len(g.of_kind("box")) == 1
    assert len(g.of_kind("input-port")) == 2 and len(g.of_kind("output-port")) == 1
    g = export_diagram(Braid(X, Y), SYM)
    assert len(g.of_kind("braid-crossing")) == 1


def test_curry_draws_bubble_and_clasp():
    g = export_diagram(Curry(Gen("f")), CLOSED)
    assert len(g.of_kind("bubble")) == 1 and len(g.of_kind("clasp")) == 1
    assert len(g.of_kind("box")) == 1


def test_dot_and_svg():
    g = export_diagram(Seq(Gen("f"), Gen("g")), SYM)
    dot = render(g, "dot")
    assert dot.startswith("digraph") and dot.count("shape=box") == 2
    svg = ET.fromstring(render(g, "svg"))
    assert svg.tag.endswith("svg")
    assert "X" in render(g, "svg")
    assert render(g, "json") == render(export_diagram(Seq(Gen("f"), Gen("g")), SYM), "json")
    with pytest.raises(ValueError):
        render(g, "png")


TERMS = [Gen("f"), Seq(Gen("f"), Gen("g")), Par(Gen("f"), Id(Z)), Braid(Tensor(X, Y), Z),
         Seq(Gen("g"), Braid(X, Y)),
         Seq(Seq(Par(Gen("g"), Id(X)), Assoc(X, Y, X)), Par(Id(X), Braid(Y, X)))]


@given(st.sampled_from(TERMS))
@settings(max_examples=20)
def test_ports_match_types(t):
    g = export_diagram(t, SYM)
    d, c = infer_dom_cod(t, SYM)
    ins = Counter(n.label for n in g.of_kind("input-port"))
    outs = Counter(n.label for n in g.of_kind("output-port"))
    assert ins == Counter(show_type(a) for a in flatten(d))
    assert outs == Counter(show_type(a) for a in flatten(c))
    ids = {n.id for n in g.nodes}
    assert all(e.src in ids and e.dst in ids for e in g.edges)
    assert sorted(i for layer in g.layers for i in layer) == sorted(ids)
