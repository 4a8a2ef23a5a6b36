"""Equality of morphism terms: normal forms, rewriting, then countermodel search."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from ..errors import CatTermError, ModelError, ModeError, TypeMismatch
from ..kernel.infer import infer_dom_cod
from ..kernel.modes import Mode, is_cartesian, is_compact, is_symmetric, mode_allows
from ..kernel.signature import Signature
from ..kernel.terms import MorTerm, in_symmetric_fragment, subterms, tags_used
from ..kernel.types import basic_names, show_type
from .betaeta import beta_eta_normalize
from .graph import canonical, fully_reachable, graph_of
from .normal import normal_form_key, symmetric_normal_form
from .strict import strictify


class Strategy(str, enum.Enum):
    NF = "nf"          # normal forms only
    SEARCH = "search"  # normal forms, then rewriting
    MODEL = "model"    # countermodel search only
    FULL = "full"      # the whole ladder

    @classmethod
    def parse(cls, s: "str | Strategy") -> "Strategy":
        if isinstance(s, Strategy):
            return s
        try:
            return cls(s)
        except ValueError:
            raise ValueError(f"unknown strategy {s!r}; expected nf, search, model or full") from None


@dataclass(frozen=True)
class Witness:
    model: str
    index: int
    kind: str = ""
    source: object = field(default=None, compare=False, repr=False)


@dataclass(frozen=True)
class EqVerdict:
    kind: str                 # "equal" | "not-equal" | "unknown"
    by: str | None = None     # "normal-form" | "axiom-path" for equal
    witness: Witness | None = None
    reason: str = ""

    @property
    def equal(self) -> bool:
        return self.kind == "equal"

    def to_json(self) -> dict:
        out: dict = {"verdict": self.kind}
        if self.by:
            out["by"] = self.by
        if self.witness:
            out["witness"] = {"model": self.witness.model, "index": self.witness.index}
            if self.witness.kind:
                out["witness"]["kind"] = self.witness.kind
        if self.reason:
            out["reason"] = self.reason
        return out


def Equal(by: str) -> EqVerdict:
    return EqVerdict("equal", by=by)


def NotEqual(w: Witness, reason: str = "") -> EqVerdict:
    return EqVerdict("not-equal", witness=w, reason=reason)


def Unknown(reason: str) -> EqVerdict:
    return EqVerdict("unknown", reason=reason)


# -- rung 1: normal forms -----------------------------------------------------------------


class _NF(enum.Enum):
    SAME = 1
    DIFFERENT = 2     # the procedure is complete here and the normal forms differ
    INCONCLUSIVE = 3


def _normal_forms(t1: MorTerm, t2: MorTerm, sig: Signature, fuel: int) -> tuple[_NF, str]:
    mode = sig.mode
    if is_cartesian(mode):
        from ..lam.lambek import kernel_equiv
        r = kernel_equiv(t1, t2, sig, fuel)
        if r == "equal":
            return _NF.SAME, "lambda normal forms agree"
        if r == "not-equal":
            return _NF.DIFFERENT, "lambda normal forms differ"
        return _NF.INCONCLUSIVE, "lambda normalization ran out of fuel"
    sym_frag = in_symmetric_fragment(t1) and in_symmetric_fragment(t2)
    if is_symmetric(mode) and sym_frag and not is_compact(mode):
        k1 = normal_form_key(symmetric_normal_form(strictify(t1, sig), sig))
        k2 = normal_form_key(symmetric_normal_form(strictify(t2, sig), sig))
        return (_NF.SAME, "symmetric normal forms agree") if k1 == k2 else \
               (_NF.DIFFERENT, "symmetric normal forms differ")
    g1, g2 = graph_of(t1, sig), graph_of(t2, sig)
    same = canonical(g1) == canonical(g2)
    if is_compact(mode):
        # compact closed: string diagrams up to isomorphism are complete
        return (_NF.SAME, "diagrams agree") if same else (_NF.DIFFERENT, "diagrams differ")
    if is_symmetric(mode):
        return (_NF.SAME, "diagrams agree") if same else (_NF.INCONCLUSIVE, "diagrams differ")
    # planar and braided diagrams: only boundary-connected ones have a unique embedding
    if same and fully_reachable(g1) and fully_reachable(g2):
        return _NF.SAME, "diagrams agree"
    return _NF.INCONCLUSIVE, "no complete normal form in this mode"


# -- rung 2: rewriting ---------------------------------------------------------------------


def _rewrite(t1: MorTerm, t2: MorTerm, sig: Signature, fuel: int) -> tuple[bool, str]:
    n1 = beta_eta_normalize(t1, sig, fuel)
    n2 = beta_eta_normalize(t2, sig, fuel)
    if n1.term == n2.term:
        return True, f"rewrite normal forms coincide ({n1.steps}+{n2.steps} steps)"
    if n1.term == t1 and n2.term == t2:
        return False, "rewriting made no progress"
    nf, why = _normal_forms(n1.term, n2.term, sig, fuel)
    if nf is _NF.SAME:
        return True, f"after rewriting, {why}"
    budget = "" if n1.normal and n2.normal else " (fuel exhausted)"
    return False, "rewrite normal forms differ" + budget


# -- rung 3: countermodels -------------------------------------------------------------------


def _kinds_for(sig: Signature, t1: MorTerm, t2: MorTerm) -> list[str]:
    mode = sig.mode
    kinds = []
    if not is_cartesian(mode):
        kinds.append("matrix")
    if not is_compact(mode):
        kinds.append("finset")
    if is_symmetric(mode) and not is_cartesian(mode) and \
            all(mode_allows(Mode.SYMMETRIC, t) for t in tags_used(t1) | tags_used(t2)):
        kinds.append("perm")
    return kinds


def _too_big(m, terms, limit: int) -> bool:
    for t in terms:
        for u in subterms(t):
            try:
                d, c = infer_dom_cod(u, m.sig)
            except CatTermError:
                continue
            if m.size(d) * m.size(c) > limit:
                return True
    return False


def _refute(m, t1, t2, limit: int) -> Witness | None:
    from ..models.base import refute_eq
    try:
        m.check_mode(t1)
        m.check_mode(t2)
        if _too_big(m, (t1, t2), limit):
            return None
        r = refute_eq(m, t1, t2)
    except (ModelError, ModeError):
        return None
    if r is None:
        return None
    return Witness(r.model, r.index, m.kind, m)


def _search(t1, t2, sig: Signature, models, seed: int, tries: int = 6,
            limit: int = 1 << 14) -> Witness | None:
    from ..models.io import random_model
    for m in models:
        w = _refute(m, t1, t2, limit=1 << 62)
        if w is not None:
            return w
    names = set()
    for t in (t1, t2):
        for u in subterms(t):
            try:
                d, c = infer_dom_cod(u, sig)
            except CatTermError:
                continue
            names |= basic_names(d) | basic_names(c)
    wide = sig.extend(objects=sorted(names - set(sig.objects)))
    rng = random.Random(seed)
    for kind in _kinds_for(sig, t1, t2):
        for k in range(tries):
            try:
                m = random_model(kind, wide, rng, max_dim=3 if k % 2 else 2,
                                 name=f"random-{kind}-{seed}-{k}")
            except ModelError:
                continue
            w = _refute(m, t1, t2, limit)
            if w is not None:
                return w
    return None


# -- the ladder ------------------------------------------------------------------------------


def eq_decide(t1: MorTerm, t2: MorTerm, sig: Signature, strategy: "str | Strategy" = "full",
              fuel: int = 10_000, seed: int = 0, models=()) -> EqVerdict:
    """Decide ``t1 = t2`` in the free category of ``sig``'s mode.

    Equal verdicts come from normal forms (by="normal-form") or rewriting
    (by="axiom-path"); NotEqual always carries a countermodel; Unknown means
    the ladder ran out of methods or budget.
    """
    if strategy is None:
        raise ValueError("no strategy configured")
    strategy = Strategy.parse(strategy)
    d1, d2 = infer_dom_cod(t1, sig), infer_dom_cod(t2, sig)
    if d1 != d2:
        raise TypeMismatch(f"eq_decide: {show_type(d1[0])} -> {show_type(d1[1])} vs "
                           f"{show_type(d2[0])} -> {show_type(d2[1])}", d1, d2)
    models = tuple(models)

    def confirm(by: str) -> EqVerdict:
        # an attached model that separates the terms overrides any proof
        for m in models:
            w = _refute(m, t1, t2, limit=1 << 62)
            if w is not None:
                return NotEqual(w, f"model {w.model} is not a model of the {sig.mode} laws")
        return Equal(by)

    if t1 == t2:
        return confirm("normal-form")
    reasons = []
    if strategy in (Strategy.NF, Strategy.SEARCH, Strategy.FULL):
        nf, why = _normal_forms(t1, t2, sig, fuel)
        if nf is _NF.SAME:
            return confirm("normal-form")
        if nf is _NF.DIFFERENT:
            w = _search(t1, t2, sig, models, seed, tries=12)
            if w is not None:
                return NotEqual(w, why)
            return Unknown(why + ", but no countermodel was found")
        reasons.append(why)
    if strategy in (Strategy.SEARCH, Strategy.FULL):
        ok, why = _rewrite(t1, t2, sig, fuel)
        if ok:
            return confirm("axiom-path")
        reasons.append(why)
    if strategy in (Strategy.MODEL, Strategy.FULL):
        w = _search(t1, t2, sig, models, seed)
        if w is not None:
            return NotEqual(w, "countermodel found")
        reasons.append("no countermodel found")
    return Unknown("; ".join(reasons))


__all__ = ["Strategy", "Witness", "EqVerdict", "Equal", "NotEqual", "Unknown", "eq_decide"]
