"""Canonical layered form for the symmetric fragment."""

from __future__ import annotations

from ..kernel.signature import Signature
from ..kernel.terms import Gen
from ..kernel.types import atom_key
from .graph import BIN, IN, build_graph, canonical_order
from .strict import Block, PermLayer, StrictTerm


def symmetric_normal_form(s: StrictTerm, sig: Signature) -> StrictTerm:
    """Re-layer a strict symmetric term canonically.

    Each box goes into the earliest layer its inputs allow; boxes within a
    layer are ordered by their canonical number, and wires that pass a layer
    untouched stay in canonical order.  Two terms are equal in the free
    symmetric monoidal category iff their normal forms are identical.
    """
    for layer in s.layers:
        if isinstance(layer, Block) and not isinstance(layer.term, Gen):
            raise ValueError("symmetric_normal_form: term has closed or compact content "
                             f"({type(layer.term).__name__})")
    g = build_graph(s, sig)
    order = canonical_order(g)

    def src_key(p):
        # canonical name of the wire leaving port p
        return (0, p[2]) if p[0] == BIN else (1, order[p[0]], p[2])

    depth: dict[int, int] = {}

    def dep(n: int) -> int:
        if n not in depth:
            d = 0
            for k in range(len(g.nodes[n].ins)):
                q = g.link[(n, IN, k)]
                if q[0] >= 0:
                    d = max(d, dep(q[0]) + 1)
            depth[n] = d
        return depth[n]

    levels: dict[int, list[int]] = {}
    for n in g.nodes:
        levels.setdefault(dep(n), []).append(n)

    wires = [(src_key((BIN, 0, i)), s.dom[i]) for i in range(len(s.dom))]
    layers: list = []

    def permute_to(target_keys: list) -> None:
        nonlocal wires
        pos = {k: i for i, (k, _) in enumerate(wires)}
        perm = [0] * len(wires)
        for j, k in enumerate(target_keys):
            perm[pos[k]] = j
        p = PermLayer(tuple(perm))
        if not p.is_identity():
            layers.append(p)
        atoms = dict(wires)
        wires = [(k, atoms[k]) for k in target_keys]

    for lv in sorted(levels):
        boxes = sorted(levels[lv], key=order.get)
        front = []
        for n in boxes:
            front += [src_key(g.link[(n, IN, k)]) for k in range(len(g.nodes[n].ins))]
        chosen = set(front)
        rest = sorted(k for k, _ in wires if k not in chosen)
        permute_to(front + rest)
        off = 0
        produced = []
        for n in boxes:
            node = g.nodes[n]
            name = node.label.split(":", 1)[1]
            layers.append(Block(Gen(name), off, tuple(node.ins), tuple(node.outs)))
            off += len(node.outs)
            produced += [((1, order[n], k), node.outs[k]) for k in range(len(node.outs))]
        wires = produced + wires[len(front):]
    final = [src_key(g.link[(-2, 0, j)]) for j in range(len(s.cod))]
    permute_to(final)
    return StrictTerm(s.dom, s.cod, tuple(layers))


def normal_form_key(s: StrictTerm) -> tuple:
    return (tuple(map(atom_key, s.dom)), tuple(map(atom_key, s.cod)), s.layers)


__all__ = ["symmetric_normal_form", "normal_form_key"]
