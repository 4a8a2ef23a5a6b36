"""Loading, dumping and randomly generating models."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

from ..errors import ModelError, ShapeMismatch
from ..kernel.signature import Signature
from .base import Model
from .finset import FinSetModel, Table
from .matrix import Matrix, MatrixModel
from .numbers import QQi, parse_complex
from .perm import Perm, PermModel

KINDS = {"matrix": MatrixModel, "finset": FinSetModel, "perm": PermModel}


def _binding(kind: str, gname: str, obj) -> object:
    if not isinstance(obj, dict):
        raise ModelError(f"generator '{gname}': binding must be an object")
    if kind == "matrix":
        try:
            rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
        except KeyError as e:
            raise ModelError(f"generator '{gname}': missing field {e}") from None
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ShapeMismatch(
                f"generator '{gname}': declared {rows}x{cols} but entries are "
                f"{len(entries)}x{len(entries[0]) if entries else 0}")
        return Matrix.from_rows([[parse_complex(e) for e in row] for row in entries])
    if kind == "finset":
        if "table" not in obj:
            raise ModelError(f"generator '{gname}': missing field 'table'")
        return list(obj["table"])
    if "perm" not in obj:
        raise ModelError(f"generator '{gname}': missing field 'perm'")
    return Perm(tuple(obj["perm"]))


def load_model(doc, sig: Signature, name: str | None = None) -> Model:
    """Build and validate a model from a JSON document, path or parsed dict."""
    if isinstance(doc, (str, Path)) and not str(doc).lstrip().startswith("{"):
        p = Path(doc)
        name = name or p.stem
        doc = p.read_text(encoding="utf-8")
    if isinstance(doc, str):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise ModelError(f"model document is not valid JSON: {e}") from None
    kind = doc.get("kind")
    if kind not in KINDS:
        raise ModelError(f"unknown model kind {kind!r} (expected matrix, finset or perm)")
    objects = doc.get("objects", {})
    for o, n in objects.items():
        if not isinstance(n, int) or n < 0 or (n == 0 and kind != "perm"):
            raise ModelError(f"object '{o}': carrier size must be a positive integer, got {n!r}")
    cls = KINDS[kind]
    m = cls(sig, dict(objects), {}, name or doc.get("name", kind))
    for g in sig.generators:
        if g.name not in doc.get("generators", {}):
            raise ModelError(f"model {m.name}: missing binding for generator '{g.name}'")
    for gname, obj in doc.get("generators", {}).items():
        g = sig.generator(gname)
        if g is None:
            raise ModelError(f"model {m.name}: binding for undeclared generator '{gname}'")
        b = _binding(kind, gname, obj)
        if kind == "finset":
            dom, cod = m.size(g.dom), m.size(g.cod)
            if len(b) != dom:
                raise ShapeMismatch(
                    f"generator '{gname}': expected a table of {dom} entries, got {len(b)}")
            try:
                b = Table(dom, cod, tuple(b))
            except ModelError as e:
                raise ModelError(f"generator '{gname}': {e}") from None
        m.bindings[gname] = b
    m.validate_bindings()
    return m


def dump_model(m: Model) -> dict:
    return {"kind": m.kind, "objects": dict(m.objects),
            "generators": {k: v.to_json() for k, v in sorted(m.bindings.items())}}


def random_entry(rng: random.Random) -> QQi:
    re = Fraction(rng.randint(-2, 2), rng.randint(1, 3))
    im = Fraction(rng.randint(-2, 2), rng.randint(1, 3)) if rng.random() < 0.5 else Fraction(0)
    return QQi(re, im)


def random_matrix(rows: int, cols: int, rng: random.Random) -> Matrix:
    return Matrix.from_rows([[random_entry(rng) for _ in range(cols)] for _ in range(rows)])


def random_bindings(m: Model, rng: random.Random, max_carrier: int = 4096) -> None:
    for g in m.sig.generators:
        dom, cod = m.size(g.dom), m.size(g.cod)
        if isinstance(m, MatrixModel):
            if dom * cod > max_carrier:
                raise ModelError(f"generator '{g.name}' too large to sample ({cod}x{dom})")
            m.bindings[g.name] = random_matrix(cod, dom, rng)
        elif isinstance(m, FinSetModel):
            if dom > max_carrier or cod == 0:
                raise ModelError(f"generator '{g.name}' cannot be sampled")
            m.bindings[g.name] = Table(dom, cod, tuple(rng.randrange(cod) for _ in range(dom)))
        else:
            if dom != cod:
                raise ModelError(f"generator '{g.name}': {dom} strands in, {cod} out")
            p = list(range(dom))
            rng.shuffle(p)
            m.bindings[g.name] = Perm(tuple(p))


def random_model(kind: str, sig: Signature, rng: random.Random, max_dim: int = 3,
                 dims: dict[str, int] | None = None, name: str | None = None) -> Model:
    """A model with random carriers (unless ``dims`` is given) and random bindings."""
    cls = KINDS[kind]
    objs = sorted(set(sig.objects) | _mentioned_objects(sig))
    if dims is None:
        if kind == "perm":
            dims = {o: 1 for o in objs}
        else:
            dims = {o: rng.randint(1, max_dim) for o in objs}
    m = cls(sig, dict(dims), {}, name or f"random-{kind}")
    random_bindings(m, rng)
    return m


def _mentioned_objects(sig: Signature) -> set[str]:
    from ..kernel.types import basic_names
    out: set[str] = set()
    for g in sig.generators:
        out |= basic_names(g.dom) | basic_names(g.cod)
    return out
