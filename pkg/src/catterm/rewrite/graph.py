"""Port graphs of strict terms and their canonical encodings.

Every box port is joined to exactly one other port (or to the boundary).
Two terms of the free symmetric (or compact) category are equal exactly
when their port graphs are isomorphic fixing the boundary, so a canonical
encoding of the graph decides equality.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field

from ..kernel.infer import infer_dom_cod
from ..kernel.signature import Signature
from ..kernel.terms import Braid, BraidInv, Cap, Cup, Curry, Ev, Gen, MorTerm
from ..kernel.types import atom_key, flatten
from ..kernel.syntax import show_mor
from .strict import Block, PermLayer, StrictTerm, strictify

BIN, BOUT, PSEUDO = -1, -2, -3
IN, OUT = 0, 1

Port = tuple[int, int, int]


@dataclass
class Node:
    label: str
    ins: tuple
    outs: tuple
    body: "PortGraph | None" = None
    meta: int = 0

    def ports(self, nid: int) -> list[Port]:
        return [(nid, IN, k) for k in range(len(self.ins))] + \
               [(nid, OUT, k) for k in range(len(self.outs))]


@dataclass
class PortGraph:
    dom: tuple
    cod: tuple
    nodes: dict[int, Node] = field(default_factory=dict)
    link: dict[Port, Port] = field(default_factory=dict)
    loops: Counter = field(default_factory=Counter)
    _next: int = 0

    def add(self, node: Node) -> int:
        nid = self._next
        self._next += 1
        self.nodes[nid] = node
        return nid

    def connect(self, p: Port, q: Port) -> None:
        self.link[p] = q
        self.link[q] = p

    def remove(self, nid: int) -> None:
        for p in self.nodes[nid].ports(nid):
            self.link.pop(p, None)
        del self.nodes[nid]

    def boundary(self) -> list[Port]:
        return [(BIN, 0, i) for i in range(len(self.dom))] + \
               [(BOUT, 0, j) for j in range(len(self.cod))]


class NotDecidable(Exception):
    """The graph method does not apply to this term."""


# -- construction -------------------------------------------------------------------


def _label(t: MorTerm) -> str:
    if isinstance(t, Gen):
        return "gen:" + t.name
    if isinstance(t, Braid):
        return f"braid:{atom_key(t.x)},{atom_key(t.y)}"
    if isinstance(t, BraidInv):
        return f"braidinv:{atom_key(t.x)},{atom_key(t.y)}"
    if isinstance(t, Ev):
        return "ev:" + show_mor(t)
    return "box:" + show_mor(t)


def build_graph(s: StrictTerm, sig: Signature) -> PortGraph:
    g = PortGraph(s.dom, s.cod)
    raw: dict[Port, Port] = {}
    twin: dict[Port, Port] = {}
    pkey: dict[Port, str] = {}
    uid = 0

    def join(p: Port, q: Port) -> None:
        raw[p] = q
        raw[q] = p

    ends: list[Port] = [(BIN, 0, i) for i in range(len(s.dom))]
    for layer in s.layers:
        if isinstance(layer, PermLayer):
            new = [None] * len(ends)
            for i, j in enumerate(layer.perm):
                new[j] = ends[i]
            ends = new
            continue
        t, k = layer.term, layer.offset
        consumed = ends[k:k + len(layer.ins)]
        if isinstance(t, (Cup, Cap)):
            uid += 1
            atoms = layer.outs if isinstance(t, Cup) else layer.ins
            a = len(atoms) // 2
            pe = [(PSEUDO, uid, i) for i in range(2 * a)]
            for i in range(a):
                twin[pe[i]], twin[pe[a + i]] = pe[a + i], pe[i]
                base = atom_key(atoms[a + i] if isinstance(t, Cup) else atoms[i]).rstrip("^")
                pkey[pe[i]] = pkey[pe[a + i]] = base
            if isinstance(t, Cup):
                produced = pe
            else:
                for p, q in zip(consumed, pe):
                    join(p, q)
                produced = []
        else:
            node = _make_node(t, layer, sig)
            nid = g.add(node)
            for i, p in enumerate(consumed):
                join(p, (nid, IN, i))
            produced = [(nid, OUT, i) for i in range(len(layer.outs))]
        ends = ends[:k] + produced + ends[k + len(layer.ins):]
    for j, p in enumerate(ends):
        join(p, (BOUT, 0, j))

    seen: set[Port] = set()
    for p in list(raw):
        if p[0] == PSEUDO or p in g.link:
            continue
        q = raw[p]
        while q[0] == PSEUDO:
            seen.add(q)
            q2 = twin[q]
            seen.add(q2)
            q = raw[q2]
        g.connect(p, q)
    for p in twin:
        if p in seen:
            continue
        q = p
        while True:
            seen.add(q)
            q2 = twin[q]
            seen.add(q2)
            q = raw[q2]
            if q == p:
                break
        g.loops[pkey[p]] += 1
    return g


def _make_node(t: MorTerm, layer: Block, sig: Signature) -> Node:
    if isinstance(t, Curry):
        d, _ = infer_dom_cod(t.body, sig)
        body = graph_of(t.body, sig)
        return Node("curry", layer.ins, layer.outs, body, len(flatten(d.left)))
    if isinstance(t, Ev):
        return Node(_label(t), layer.ins, layer.outs, None, len(flatten(t.x)))
    return Node(_label(t), layer.ins, layer.outs)


def graph_of(t: MorTerm, sig: Signature) -> PortGraph:
    """Strictify, build the port graph and apply the graph-level laws."""
    g = build_graph(strictify(t, sig), sig)
    simplify(g)
    return g


# -- graph-level laws -----------------------------------------------------------------


def simplify(g: PortGraph) -> None:
    """Cancel inverse crossings, and apply beta and eta for Curry/Ev, to a fixpoint."""
    changed = True
    while changed:
        changed = _cancel_crossings(g) or _beta(g) or _eta(g)


def _cancel_crossings(g: PortGraph) -> bool:
    for nid, n in list(g.nodes.items()):
        if not n.label.startswith(("braid:", "braidinv:")):
            continue
        p0, p1 = g.link[(nid, OUT, 0)], g.link[(nid, OUT, 1)]
        if p0[0] < 0 or p0[0] != p1[0] or p0[1:] != (IN, 0) or p1[1:] != (IN, 1):
            continue
        m = g.nodes[p0[0]]
        kind, _, types = n.label.partition(":")
        want = ("braidinv:" if kind == "braid" else "braid:") + types
        if m.label != want:
            continue
        mid = p0[0]
        a0, a1 = g.link[(nid, IN, 0)], g.link[(nid, IN, 1)]
        b0, b1 = g.link[(mid, OUT, 0)], g.link[(mid, OUT, 1)]
        g.remove(nid)
        g.remove(mid)
        _reconnect(g, a0, b0)
        _reconnect(g, a1, b1)
        return True
    return False


def _reconnect(g: PortGraph, p: Port, q: Port) -> None:
    g.connect(p, q)


def _beta(g: PortGraph) -> bool:
    for eid, e in list(g.nodes.items()):
        if not e.label.startswith("ev:"):
            continue
        a = e.meta
        src = g.link[(eid, IN, a)]
        if src[0] < 0 or src[1] != OUT or g.nodes[src[0]].label != "curry":
            continue
        cid = src[0]
        c = g.nodes[cid]
        x_src = [g.link[(eid, IN, k)] for k in range(a)]
        y_src = [g.link[(cid, IN, k)] for k in range(len(c.ins))]
        z_dst = [g.link[(eid, OUT, k)] for k in range(len(e.outs))]
        g.remove(eid)
        g.remove(cid)

        def outer(p: Port, idmap) -> Port:
            if p[0] == BIN:
                return x_src[p[2]] if p[2] < a else y_src[p[2] - a]
            if p[0] == BOUT:
                return z_dst[p[2]]
            return (idmap[p[0]], p[1], p[2])

        _splice(g, c.body, outer)
        return True
    return False


def _splice(g: PortGraph, body: PortGraph, outer, skip: int | None = None) -> dict:
    idmap = {}
    for bid, bn in body.nodes.items():
        if bid != skip:
            idmap[bid] = g.add(bn)
    done = set()
    pending = []
    for p, q in body.link.items():
        if (q, p) in done or p[0] == skip or q[0] == skip:
            continue
        done.add((p, q))
        pending.append((outer(p, idmap), outer(q, idmap)))
    for p, q in pending:
        g.connect(p, q)
    g.loops.update(body.loops)
    return idmap


def _eta(g: PortGraph) -> bool:
    for cid, c in list(g.nodes.items()):
        if c.label != "curry":
            continue
        b = c.body
        a = c.meta
        for eid, e in b.nodes.items():
            if not e.label.startswith("ev:") or e.meta != a:
                continue
            if any(b.link[(eid, IN, k)] != (BIN, 0, k) for k in range(a)):
                continue
            if len(b.cod) != len(e.outs) or any(
                    b.link[(BOUT, 0, j)] != (eid, OUT, j) for j in range(len(b.cod))):
                continue
            hp = b.link[(eid, IN, a)]
            y_src = [g.link[(cid, IN, k)] for k in range(len(c.ins))]
            out_dst = g.link[(cid, OUT, 0)]
            g.remove(cid)

            def outer(p: Port, idmap) -> Port:
                if p[0] == BIN:
                    return y_src[p[2] - a]
                return (idmap[p[0]], p[1], p[2])

            # the hom wire leaves the body where it used to enter Ev
            idmap = _splice(g, b, outer, skip=eid)
            g.connect(outer(hp, idmap), out_dst)
            return True
    return False


# -- canonical encoding -----------------------------------------------------------------


def _number(g: PortGraph, starts: list[Port], order: dict[int, int]) -> None:
    queue = deque(starts)
    while queue:
        p = queue.popleft()
        q = g.link[p]
        if q[0] >= 0 and q[0] not in order:
            order[q[0]] = len(order)
            queue.extend(g.nodes[q[0]].ports(q[0]))


def _ref(p: Port, order: dict[int, int]) -> tuple:
    if p[0] < 0:
        return p
    return (order[p[0]], p[1], p[2])


def _node_code(g: PortGraph, nid: int, order: dict[int, int]) -> tuple:
    n = g.nodes[nid]
    body = canonical(n.body) if n.body is not None else ()
    return (n.label, n.meta, body, tuple(_ref(g.link[p], order) for p in n.ports(nid)))


def _components(g: PortGraph, nids: list[int]) -> list[list[int]]:
    left = set(nids)
    comps = []
    for start in nids:
        if start not in left:
            continue
        comp, stack = [], [start]
        left.discard(start)
        while stack:
            n = stack.pop()
            comp.append(n)
            for p in g.nodes[n].ports(n):
                q = g.link[p]
                if q[0] >= 0 and q[0] in left:
                    left.discard(q[0])
                    stack.append(q[0])
        comps.append(comp)
    return comps


def canonical(g: PortGraph) -> tuple:
    """An encoding equal for two graphs iff they are isomorphic fixing the boundary."""
    order: dict[int, int] = {}
    _number(g, g.boundary(), order)
    reached = sorted(order, key=order.get)
    bcode = tuple(_ref(g.link[p], order) for p in g.boundary())
    ncode = tuple(_node_code(g, n, order) for n in reached)
    floating = []
    for comp in _components(g, [n for n in g.nodes if n not in order]):
        best = None
        for root in comp:
            local = {root: 0}
            _number(g, g.nodes[root].ports(root), local)
            code = tuple(_node_code(g, n, local) for n in sorted(local, key=local.get))
            if best is None or code < best:
                best = code
        floating.append(best)
    return (tuple(map(atom_key, g.dom)), tuple(map(atom_key, g.cod)), bcode, ncode,
            tuple(sorted(floating)), tuple(sorted(g.loops.items())))


def fully_reachable(g: PortGraph) -> bool:
    """Every box (also inside Curry bodies) is connected to the boundary."""
    order: dict[int, int] = {}
    _number(g, g.boundary(), order)
    if len(order) != len(g.nodes):
        return False
    return all(n.body is None or fully_reachable(n.body) for n in g.nodes.values())


def canonical_order(g: PortGraph) -> dict[int, int]:
    """Canonical node numbering (boundary-reachable first, then floating components)."""
    order: dict[int, int] = {}
    _number(g, g.boundary(), order)
    comps = _components(g, [n for n in g.nodes if n not in order])
    keyed = []
    for comp in comps:
        best = None
        for root in comp:
            local = {root: 0}
            _number(g, g.nodes[root].ports(root), local)
            code = tuple(_node_code(g, n, local) for n in sorted(local, key=local.get))
            if best is None or code < best[0]:
                best = (code, local)
        keyed.append(best)
    for _, local in sorted(keyed, key=lambda kv: kv[0]):
        base = len(order)
        for n, i in local.items():
            order[n] = base + i
    return order
