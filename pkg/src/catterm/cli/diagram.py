"""String-diagram export: a layered port graph, rendered as JSON, DOT or SVG.

Time runs down the page.  Wires of dual type point up.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from ..kernel.infer import infer_dom_cod
from ..kernel.modes import is_compact
from ..kernel.signature import Signature
from ..kernel.syntax import show_mor
from ..kernel.terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Del, Dup, Ev, Gen, Id,
                            LeftU, MorTerm, Name, Pair, Par, Proj1, Proj2, RightU, Seq,
                            Unassoc, Uncurry, UnleftU, UnrightU)
from ..kernel.types import Dual, TypeExpr, flatten, show_type
from ..rewrite.strict import desugar

NODE_KINDS = ("box", "braid-crossing", "cup", "cap", "dup", "del", "input-port",
              "output-port", "clasp", "bubble")


@dataclass
class DNode:
    id: str
    kind: str
    label: str
    inputs: int = 0
    outputs: int = 0


@dataclass
class DEdge:
    src: str
    dst: str
    type: TypeExpr
    dir: str = "down"


@dataclass
class DiagramGraph:
    nodes: list[DNode] = field(default_factory=list)
    edges: list[DEdge] = field(default_factory=list)
    layers: list[list[str]] = field(default_factory=list)

    def node(self, nid: str) -> DNode:
        return next(n for n in self.nodes if n.id == nid)

    def of_kind(self, kind: str) -> list[DNode]:
        return [n for n in self.nodes if n.kind == kind]

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": n.id, "kind": n.kind, "label": n.label,
                       "in": n.inputs, "out": n.outputs} for n in self.nodes],
            "edges": [{"from": e.src, "to": e.dst, "type": show_type(e.type), "dir": e.dir}
                      for e in self.edges],
            "layers": self.layers,
        }


Strand = tuple[str, TypeExpr]  # (producing node, wire type)


class _Builder:
    def __init__(self, sig: Signature):
        self.sig = sig
        self.g = DiagramGraph()

    def add(self, kind: str, label: str, ins: list[Strand], out_types: list[TypeExpr]) -> list[Strand]:
        nid = f"n{len(self.g.nodes)}"
        self.g.nodes.append(DNode(nid, kind, label, len(ins), len(out_types)))
        for src, ty in ins:
            self.g.edges.append(DEdge(src, nid, ty, "up" if isinstance(ty, Dual) else "down"))
        return [(nid, ty) for ty in out_types]

    def dom_cod(self, t: MorTerm):
        return infer_dom_cod(t, self.sig)

    def build(self, t: MorTerm, ins: list[Strand]) -> list[Strand]:
        if isinstance(t, (Id, Assoc, Unassoc, LeftU, UnleftU, RightU, UnrightU)):
            return ins
        if isinstance(t, Seq):
            return self.build(t.then, self.build(t.first, ins))
        if isinstance(t, Par):
            n = len(flatten(self.dom_cod(t.left)[0]))
            return self.build(t.left, ins[:n]) + self.build(t.right, ins[n:])
        if isinstance(t, Gen):
            _, c = self.dom_cod(t)
            return self.add("box", t.name, ins, flatten(c))
        if isinstance(t, Ev):
            _, c = self.dom_cod(t)
            return self.add("box", "ev", ins, flatten(c))
        if isinstance(t, (Braid, BraidInv)):
            d, c = self.dom_cod(t)
            if not ins or len(flatten(c)) != len(ins):
                return ins
            n = len(flatten(t.x)) if isinstance(t, Braid) else len(flatten(t.y))
            if n in (0, len(ins)):
                return ins
            label = "braid" if isinstance(t, Braid) else "braidinv"
            return self.add("braid-crossing", label, ins, flatten(c))
        if isinstance(t, Cup):
            _, c = self.dom_cod(t)
            return self.add("cup", show_type(t.x), ins, flatten(c))
        if isinstance(t, Cap):
            return self.add("cap", show_type(t.x), ins, [])
        if isinstance(t, Dup):
            return self.add("dup", show_type(t.x), ins, [ty for _, ty in ins] * 2)
        if isinstance(t, Del):
            return self.add("del", show_type(t.x), ins, [])
        if isinstance(t, Pair):
            copies = self.add("dup", "pair", ins, [ty for _, ty in ins] * 2)
            n = len(ins)
            return self.build(t.first, copies[:n]) + self.build(t.second, copies[n:])
        if isinstance(t, (Proj1, Proj2)):
            n = len(flatten(t.x))
            keep, drop = (ins[:n], ins[n:]) if isinstance(t, Proj1) else (ins[n:], ins[:n])
            self.add("del", "proj", drop, [])
            return keep
        if isinstance(t, Uncurry):
            y, h = self.dom_cod(t.body)
            x = h.source
            return self.build(Seq(Par(Id(x), t.body), Ev(x, h.target)), ins)
        if isinstance(t, (Curry, Name)):
            d, c = self.dom_cod(t.body)
            x = d.left if isinstance(t, Curry) else d
            inner = self.add("bubble", show_mor(t.body), ins, flatten(x) + [ty for _, ty in ins])
            outs = self.build(t.body, inner)
            _, hom = self.dom_cod(t)
            return self.add("clasp", show_type(hom), outs, [hom])
        raise TypeError(f"cannot draw {type(t).__name__}")


def export_diagram(t: MorTerm, sig: Signature) -> DiagramGraph:
    dom, cod = infer_dom_cod(t, sig)
    b = _Builder(sig)
    if is_compact(sig.mode):
        t = desugar(t, sig)
    ins = []
    for ty in flatten(dom):
        ins += b.add("input-port", show_type(ty), [], [ty])
    outs = b.build(t, ins)
    for src, ty in outs:
        b.add("output-port", show_type(ty), [(src, ty)], [])
    b.g.layers = _layers(b.g)
    return b.g


def _layers(g: DiagramGraph) -> list[list[str]]:
    depth = {n.id: 0 for n in g.nodes}
    # nodes are created in topological order, so one pass over edges by target suffices
    order = {n.id: k for k, n in enumerate(g.nodes)}
    for e in sorted(g.edges, key=lambda e: order[e.dst]):
        depth[e.dst] = max(depth[e.dst], depth[e.src] + 1)
    last = max(depth.values(), default=0)
    for n in g.nodes:
        if n.kind == "output-port":
            depth[n.id] = last
    out: list[list[str]] = [[] for _ in range(last + 1)] if g.nodes else []
    for n in g.nodes:
        out[depth[n.id]].append(n.id)
    return out


# -- rendering ---------------------------------------------------------------------------

_DOT_SHAPES = {
    "box": "box", "braid-crossing": "circle", "cup": "ellipse", "cap": "ellipse",
    "dup": "point", "del": "point", "input-port": "plaintext", "output-port": "plaintext",
    "clasp": "diamond", "bubble": "box",
}


def _dot_str(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render(g: DiagramGraph, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(g.to_json(), indent=2, sort_keys=False) + "\n"
    if fmt == "dot":
        return _dot(g)
    if fmt == "svg":
        return _svg(g)
    raise ValueError(f"unsupported format {fmt!r}; expected json, dot or svg")


def _dot(g: DiagramGraph) -> str:
    lines = ["digraph diagram {", "  rankdir=TB;"]
    for n in g.nodes:
        extra = ', style="rounded,dashed"' if n.kind == "bubble" else ""
        lines.append(f"  {n.id} [label={_dot_str(n.label)}, shape={_DOT_SHAPES[n.kind]}{extra}];")
    for e in g.edges:
        back = ", dir=back" if e.dir == "up" else ""
        lines.append(f"  {e.src} -> {e.dst} [label={_dot_str(show_type(e.type))}{back}];")
    for layer in g.layers:
        lines.append("  { rank=same; " + " ".join(layer) + "; }")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _svg(g: DiagramGraph) -> str:
    dx, dy, margin = 120, 90, 60
    pos = {}
    for r, layer in enumerate(g.layers):
        for c, nid in enumerate(layer):
            pos[nid] = (margin + c * dx, margin + r * dy)
    width = margin * 2 + dx * max((len(l) for l in g.layers), default=1)
    height = margin * 2 + dy * max(len(g.layers) - 1, 0)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
           f'viewBox="0 0 {width} {height}">',
           '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="4" refY="4" '
           'orient="auto"><path d="M0,0 L8,4 L0,8 z"/></marker></defs>']
    for e in g.edges:
        (x1, y1), (x2, y2) = pos[e.src], pos[e.dst]
        if e.dir == "up":
            (x1, y1), (x2, y2) = (x2, y2), (x1, y1)
        out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" '
                   f'marker-end="url(#arrow)"/>')
        mx, my = (x1 + x2) // 2, (y1 + y2) // 2
        out.append(f'<text x="{mx + 4}" y="{my}" font-size="11" fill="#555">'
                   f'{escape(show_type(e.type))}</text>')
    for n in g.nodes:
        x, y = pos[n.id]
        label = escape(n.label)
        if n.kind in ("input-port", "output-port"):
            out.append(f'<text x="{x}" y="{y}" font-size="12" text-anchor="middle">{label}</text>')
        elif n.kind in ("dup", "del"):
            out.append(f'<circle cx="{x}" cy="{y}" r="4" fill="black"/>')
        else:
            dash = ' stroke-dasharray="4 2"' if n.kind == "bubble" else ""
            out.append(f'<rect x="{x - 40}" y="{y - 12}" width="80" height="24" rx="4" '
                       f'fill="white" stroke="black"{dash}/>')
            out.append(f'<text x="{x}" y="{y + 4}" font-size="12" text-anchor="middle">'
                       f'{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
