"""Check a model against every law of its mode on random samples."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from ..errors import CatTermError, ModelError
from ..kernel.modes import Mode, mode_leq
from ..kernel.signature import GenDecl, Signature
from ..kernel.terms import Assoc, Gen, Id, Par, Seq
from ..kernel.types import BasicType, Tensor
from ..rewrite.axioms import coherence_axioms
from .base import Model
from .io import random_bindings
from .perm import PermModel


@dataclass(frozen=True)
class LawResult:
    law: str
    sample: int
    passed: bool
    dims: tuple = ()
    witness: int | None = None
    note: str = ""


@dataclass
class LawReport:
    model: str
    mode: Mode
    results: list[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def summary(self) -> dict[str, tuple[int, int]]:
        """law -> (passed, total)"""
        out: dict[str, list[int]] = {}
        for r in self.results:
            c = out.setdefault(r.law, [0, 0])
            c[0] += r.passed
            c[1] += 1
        return {k: (v[0], v[1]) for k, v in sorted(out.items())}

    def to_json(self) -> dict:
        laws = []
        for law, (ok, total) in self.summary().items():
            entry = {"law": law, "passed": ok, "samples": total}
            bad = next((r for r in self.results if r.law == law and not r.passed), None)
            if bad is not None:
                entry["witness"] = {"sample": bad.sample, "dims": dict(bad.dims),
                                    "index": bad.witness}
                if bad.note:
                    entry["note"] = bad.note
            laws.append(entry)
        return {"model": self.model, "mode": str(self.mode), "ok": self.passed, "laws": laws}


def model_mode(m: Model) -> Mode:
    return m.sig.mode if mode_leq(m.sig.mode, m.max_mode) else m.max_mode


def _fresh(m: Model, sig: Signature, dims: dict[str, int], name: str) -> Model:
    # same class as m, so overridden primitives (e.g. a corrupted cup) carry over
    return type(m)(sig, dict(dims), {}, name)


def _dims(objs, rng: random.Random, perm: bool, max_dim: int) -> dict[str, int]:
    dims: dict[str, int] = {}
    for o in objs:
        base = o.rstrip("'")
        if perm and base in dims:
            dims[o] = dims[base]  # f : X -> X' must keep the strand count
        else:
            dims[o] = rng.randint(1, max_dim)
    return dims


def _compare(a, b) -> int | None:
    return a.first_difference(b)


def check_model_laws(m: Model, samples: int = 100, seed: int = 0, mode: Mode | None = None,
                     max_dim: int = 4) -> LawReport:
    """Instantiate each law on ``samples`` random carrier assignments and bindings."""
    mode = mode or model_mode(m)
    perm = isinstance(m, PermModel)
    report = LawReport(m.name, mode)
    axioms = [a for a in coherence_axioms(mode) if mode_leq(a.mode, m.max_mode)]
    for s in range(samples):
        rng = random.Random(seed * 1_000_003 + s)
        for ax in axioms:
            objs = sorted(ax.objects, key=lambda o: (o.rstrip("'"), o))
            dims = _dims(objs, rng, perm, max_dim)
            sig = Signature(ax.mode, tuple(objs), (), ax.generators)
            try:
                inst = _fresh(m, sig, dims, f"{m.name}/{ax.name}/{s}")
                random_bindings(inst, rng)
                w = _compare(inst.eval(ax.lhs), inst.eval(ax.rhs))
            except (ModelError, CatTermError) as e:
                report.results.append(LawResult(ax.name, s, False, tuple(sorted(dims.items())),
                                                None, str(e)))
                continue
            report.results.append(LawResult(ax.name, s, w is None,
                                            tuple(sorted(dims.items())), w))
        report.results.extend(_structure_laws(m, s, rng, max_dim, perm))
    report.results.sort(key=lambda r: (r.law, r.sample))
    return report


def _structure_laws(m: Model, s: int, rng: random.Random, max_dim: int,
                    perm: bool) -> list[LawResult]:
    """Functoriality, monoidality, strictness and (where defined) the dagger laws."""
    A, B, C, D = (BasicType(n) for n in "ABCD")
    names = ["A", "B", "C", "D"]
    if perm:
        n = rng.randint(1, max_dim)
        dims = {k: n for k in names}
    else:
        dims = {k: rng.randint(1, max_dim) for k in names}
    gens = (GenDecl("f", A, B), GenDecl("g", B, C), GenDecl("h", C, D))
    sig = Signature(Mode.MONOIDAL, tuple(names), (), gens)
    out: list[LawResult] = []
    key = tuple(sorted(dims.items()))

    def record(law: str, w: int | None) -> None:
        out.append(LawResult(law, s, w is None, key, w))

    try:
        inst = _fresh(m, sig, dims, f"{m.name}/structure/{s}")
        random_bindings(inst, rng)
    except (ModelError, CatTermError) as e:
        return [LawResult("functoriality", s, False, key, None, str(e))]
    f, g, h = (inst.eval(Gen(n)) for n in "fgh")
    record("functoriality", _compare(inst.eval(Seq(Gen("f"), Gen("g"))), inst.compose(f, g)))
    record("identity-left", _compare(inst.eval(Seq(Id(A), Gen("f"))), f))
    record("identity-right", _compare(inst.eval(Seq(Gen("f"), Id(B))), f))
    record("monoidality", _compare(inst.eval(Par(Gen("f"), Gen("h"))), inst.tensor(f, h)))
    record("strictness", _compare(inst.eval(Assoc(A, B, C)),
                                  inst.identity(inst.size(Tensor(Tensor(A, B), C)))))
    try:
        fd = inst.dagger(f)
    except ModelError:
        return out
    record("dagger-involution", _compare(inst.dagger(fd), f))
    fg = inst.eval(Seq(Gen("f"), Gen("g")))
    record("dagger-contravariance",
           _compare(inst.dagger(fg), inst.compose(inst.dagger(g), fd)))
    return out


__all__ = ["LawResult", "LawReport", "check_model_laws", "model_mode"]
