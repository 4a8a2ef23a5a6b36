"""The ``catterm`` command line.

Exit codes: 0 ok or equal, 1 not-equal / refuted / invalid, 2 unknown,
3 parse or type error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from ..errors import CatTermError, FuelExhausted, ModeError, ModelError, ParseError, \
    TypeMismatch, UnknownName

OK, NOT_EQUAL, UNKNOWN, BAD_INPUT, IO_ERROR = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: list[str]
    result: dict = field(default_factory=dict)
    exit_code: int = OK
    elapsed_ms: float | None = None

    def to_json(self) -> dict:
        out = {"command": self.command, "result": self.result, "exit_code": self.exit_code}
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = self.elapsed_ms
        return out


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        super().__init__(message)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise _Exit(IO_ERROR, f"cannot read {path}: {e.strerror or e}") from None


def _write(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as e:
        raise _Exit(IO_ERROR, f"cannot write {path}: {e.strerror or e}") from None


def _sig(path: str):
    from ..kernel.syntax import parse_signature
    return parse_signature(_read(path))


def _model(source: str, sig, name: str | None = None):
    from ..models.io import KINDS, load_model
    if source in KINDS and not Path(source).exists():
        return KINDS[source](sig, {}, {}, source)
    return load_model(_read(source), sig, name or Path(source).stem)


def _verdict_code(kind: str) -> int:
    return {"equal": OK, "not-equal": NOT_EQUAL}.get(kind, UNKNOWN)


# -- subcommands ---------------------------------------------------------------------------


def cmd_check(a, out: list[str]) -> tuple[dict, int]:
    from ..kernel.signature import validate_signature
    sig = _sig(a.sig)
    problems = validate_signature(sig)
    for v in problems:
        out.append(f"{v.where}: {v.message}")
    if not problems:
        out.append(f"ok: {len(sig.objects)} objects, {len(sig.generators)} generators, "
                   f"mode {sig.mode}")
    return ({"ok": not problems,
             "violations": [{"where": v.where, "message": v.message} for v in problems]},
            OK if not problems else NOT_EQUAL)


def cmd_eq(a, out):
    from ..kernel.syntax import parse_mor
    from ..rewrite.decide import eq_decide
    sig = _sig(a.sig)
    t1, t2 = parse_mor(a.lhs, sig), parse_mor(a.rhs, sig)
    models = [_model(m, sig) for m in a.model]
    v = eq_decide(t1, t2, sig, strategy=a.strategy, fuel=a.fuel, seed=a.seed, models=models)
    line = v.kind + (f" ({v.by})" if v.by else "")
    if v.witness:
        line += f"; witness: model {v.witness.model}, index {v.witness.index}"
    if v.reason:
        line += f"; {v.reason}"
    out.append(line)
    return v.to_json(), _verdict_code(v.kind)


def cmd_normalize(a, out):
    from ..kernel.syntax import parse_mor, show_mor
    from ..kernel.modes import is_cartesian
    from ..rewrite.betaeta import beta_eta_normalize
    sig = _sig(a.sig)
    n = beta_eta_normalize(parse_mor(a.term, sig), sig, a.fuel)
    shown = show_mor(n.term, is_cartesian(sig.mode))
    out.append(shown)
    if not n.normal:
        out.append(f"# fuel exhausted after {n.steps} steps")
    return {"term": shown, "normal": n.normal, "steps": n.steps}, OK if n.normal else UNKNOWN


def cmd_eval(a, out):
    from ..kernel.syntax import parse_mor
    sig = _sig(a.sig)
    m = _model(a.model, sig)
    value = m.eval(parse_mor(a.term, sig)).to_json()
    out.append(json.dumps(value))
    return {"model": m.name, "value": value}, OK


def cmd_coherence(a, out):
    from ..kernel.modes import Mode
    from ..kernel.signature import Signature
    from ..models.laws import check_model_laws
    try:
        mode = Mode.parse(a.mode)
    except ValueError as e:
        raise ParseError(str(e)) from None
    m = _model(a.model, Signature(mode, open_objects=True))
    report = check_model_laws(m, samples=a.samples, seed=a.seed, mode=mode)
    for law, (ok, total) in report.summary().items():
        out.append(f"{law}: {ok}/{total}")
    for r in report.failures()[:10]:
        out.append(f"  failed {r.law} sample {r.sample} dims {dict(r.dims)} index {r.witness}"
                   + (f" ({r.note})" if r.note else ""))
    return report.to_json(), OK if report.passed else NOT_EQUAL


def cmd_mill(a, out):
    from ..kernel.syntax import show_mor
    from ..mill import check_proof, parse_proof_file, proof_to_mor
    sig = _sig(a.sig) if a.sig else None
    proofs = parse_proof_file(_read(a.file), sig)
    result, code = {}, OK
    for name, p in proofs.items():
        rep = check_proof(p, sig)
        entry = rep.to_json()
        if not rep.ok:
            code = NOT_EQUAL
            out.append(f"{name}: invalid")
            out.extend(f"  {v}" for v in rep.violations)
        elif a.action == "compile":
            term = show_mor(proof_to_mor(p, sig))
            entry["term"] = term
            out.append(f"{name} = {term}")
        else:
            out.append(f"{name}: ok ({p.conclusion})")
        result[name] = entry
    return {"proofs": result}, code


def cmd_lam(a, out):
    from ..lam import (church, church_decode, normalize_typed, normalize_untyped,
                       parse_lambda_file, parse_untyped, show, show_ski, show_typed,
                       ski_eliminate, ski_eval, typecheck)
    from ..lam.untyped import NotANumeral
    from ..kernel.types import show_type
    if a.action == "church":
        if a.decode:
            n = church_decode(normalize_untyped(parse_untyped(a.decode), a.fuel), eta=True)
            out.append(str(n))
            return {"numeral": n}, OK
        t = church(int(a.n))
        out.append(show(t))
        return {"term": show(t)}, OK
    if a.term:
        lf, term = None, parse_untyped(a.term)
    else:
        if not a.file:
            raise ParseError("give a lambda file or --term")
        lf = parse_lambda_file(_read(a.file))
        if not lf.defs:
            raise ParseError("the file defines no terms")
        name = a.define or next(reversed(lf.defs))
        if name not in lf.defs:
            raise UnknownName(f"no definition named {name!r}")
        term = lf.defs[name]
    if a.action == "ski":
        if lf is not None and lf.typed:
            raise TypeMismatch("SKI compilation works on untyped terms")
        s = ski_eliminate(term)
        result = {"ski": show_ski(s)}
        out.append(show_ski(s))
        if a.eval:
            v = ski_eval(s, a.fuel)
            result["value"] = show_ski(v)
            out.append(f"=> {show_ski(v)}")
        return result, OK
    if lf is not None and lf.typed:
        nf = normalize_typed(term, lf.theory, a.fuel)
        ty = show_type(typecheck(term, lf.theory), True)
        out.append(f"{show_typed(nf)} : {ty}")
        return {"term": show_typed(nf), "type": ty}, OK
    nf = normalize_untyped(term, a.fuel)
    result = {"term": show(nf)}
    out.append(show(nf))
    try:
        n = church_decode(nf, eta=True)
        result["numeral"] = n
        out.append(f"= {n}")
    except NotANumeral:
        pass
    return result, OK


def cmd_lin(a, out):
    from ..lintype import (cpvp, lin_equiv_combinators, lin_equiv_terms, parse_combinator,
                           parse_lin_term, parse_lin_theory, show_comb, show_lin)
    th = parse_lin_theory(_read(a.file))
    if a.action == "cpvp":
        c, v = cpvp(parse_lin_term(a.term, th), th)
        out.append(f"cp = {show_comb(c)}")
        out.append(f"vp = {show_lin(v)}")
        return {"cp": show_comb(c), "vp": show_lin(v)}, OK
    if a.combinators:
        v = lin_equiv_combinators(parse_combinator(a.lhs, th), parse_combinator(a.rhs, th), th,
                                  fuel=a.fuel, seed=a.seed)
    else:
        v = lin_equiv_terms(parse_lin_term(a.lhs, th), parse_lin_term(a.rhs, th), th,
                            fuel=a.fuel, seed=a.seed)
    out.append(v.kind + (f" ({v.reason})" if v.reason else ""))
    return v.to_json(), _verdict_code(v.kind)


def cmd_diagram(a, out):
    from ..kernel.syntax import parse_mor
    from .diagram import export_diagram, render
    sig = _sig(a.sig)
    g = export_diagram(parse_mor(a.term, sig), sig)
    doc = render(g, a.format)
    if a.output and a.output != "-":
        _write(a.output, doc)
        out.append(f"wrote {a.output}")
    else:
        out.append(doc.rstrip("\n"))
    return {"nodes": len(g.nodes), "edges": len(g.edges), "format": a.format}, OK


# -- argument parsing ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catterm", description="categorical term engine")
    p.add_argument("--json", action="store_true", help="print a JSON run report")
    p.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("check", help="validate a signature file")
    s.add_argument("sig")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("eq", help="decide equality of two morphism terms")
    s.add_argument("sig")
    s.add_argument("--lhs", required=True)
    s.add_argument("--rhs", required=True)
    s.add_argument("--strategy", default="full", choices=["nf", "search", "model", "full"])
    s.add_argument("--fuel", type=int, default=10_000)
    s.add_argument("--model", action="append", default=[])
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_eq)

    s = sub.add_parser("normalize", help="rewrite a term to normal form")
    s.add_argument("sig")
    s.add_argument("--term", required=True)
    s.add_argument("--fuel", type=int, default=10_000)
    s.set_defaults(fn=cmd_normalize)

    s = sub.add_parser("eval", help="evaluate a term in a model")
    s.add_argument("sig")
    s.add_argument("--model", required=True)
    s.add_argument("--term", required=True)
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("coherence", help="check a model against the laws of a mode")
    s.add_argument("--mode", required=True)
    s.add_argument("--model", required=True, help="model file, or matrix/finset/perm")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_coherence)

    s = sub.add_parser("mill", help="check or compile MILL proofs")
    s.add_argument("action", choices=["check", "compile"])
    s.add_argument("file")
    s.add_argument("--sig")
    s.set_defaults(fn=cmd_mill)

    s = sub.add_parser("lam", help="lambda calculus: run, ski, church")
    s.add_argument("action", choices=["run", "ski", "church"])
    s.add_argument("file", nargs="?", help="lambda file (run, ski) or a number (church)")
    s.add_argument("--term", help="an untyped term given inline")
    s.add_argument("--def", dest="define", help="definition to use (default: the last)")
    s.add_argument("--fuel", type=int, default=10_000)
    s.add_argument("--eval", action="store_true", help="also evaluate the SKI term")
    s.add_argument("--decode", help="decode a term as a Church numeral")
    s.set_defaults(fn=cmd_lam)

    s = sub.add_parser("lin", help="linear type theories: cpvp, eq")
    s.add_argument("action", choices=["cpvp", "eq"])
    s.add_argument("file")
    s.add_argument("--term")
    s.add_argument("--lhs")
    s.add_argument("--rhs")
    s.add_argument("--combinators", action="store_true", help="compare combinators, not terms")
    s.add_argument("--fuel", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(fn=cmd_lin)

    s = sub.add_parser("diagram", help="export a string diagram")
    s.add_argument("sig")
    s.add_argument("--term", required=True)
    s.add_argument("--format", default="json", choices=["json", "dot", "svg"])
    s.add_argument("-o", "--output")
    s.set_defaults(fn=cmd_diagram)
    return p


def _check_args(a) -> None:
    if a.cmd == "lam" and a.action == "church":
        a.n = a.file
        if a.decode is None and (a.n is None or not a.n.isdigit()):
            raise ParseError("lam church needs a nonnegative number or --decode TERM")
    if a.cmd == "lin":
        need = ["term"] if a.action == "cpvp" else ["lhs", "rhs"]
        missing = [f"--{n}" for n in need if getattr(a, n) is None]
        if missing:
            raise ParseError(f"lin {a.action} needs {', '.join(missing)}")


def _hoist_flags(argv: list[str]) -> list[str]:
    # --json and --timing may appear anywhere on the line
    flags = [x for x in argv if x in ("--json", "--timing")]
    return flags + [x for x in argv if x not in ("--json", "--timing")]


def run_command(argv: list[str]) -> tuple[RunReport, list[str], list[str]]:
    """Run one command; returns the report, stdout lines and stderr lines."""
    parser = build_parser()
    try:
        a = parser.parse_args(_hoist_flags(argv))
    except SystemExit as e:
        code = OK if e.code in (0, None) else BAD_INPUT
        return RunReport(list(argv), {}, code), [], []
    report = RunReport(list(argv))
    out: list[str] = []
    err: list[str] = []
    start = time.perf_counter()
    try:
        _check_args(a)
        report.result, report.exit_code = a.fn(a, out)
    except _Exit as e:
        report.exit_code = e.code
        err.append(f"error: {e}")
    except FuelExhausted as e:
        report.exit_code = UNKNOWN
        err.append(f"unknown: {e}")
    except ModelError as e:
        report.exit_code = BAD_INPUT
        err.append(f"model error: {e}")
    except (ParseError, TypeMismatch, UnknownName, ModeError, CatTermError, ValueError) as e:
        report.exit_code = BAD_INPUT
        err.append(f"error: {e}")
    if a.timing:
        report.elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
    if report.exit_code and not report.result:
        report.result = {"error": err[-1].partition(": ")[2] if err else ""}
    if a.json:
        out = [json.dumps(report.to_json(), indent=2)]
    return report, out, err


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        build_parser().parse_args(_hoist_flags(argv))
    except SystemExit as e:
        return OK if e.code in (0, None) else BAD_INPUT
    report, out, err = run_command(argv)
    if out:
        sys.stdout.write("\n".join(out) + "\n")
    if err:
        sys.stderr.write("\n".join(err) + "\n")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
