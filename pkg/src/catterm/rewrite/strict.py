"""Strictification: erase associators and unitors, flatten objects to words.

A strict term is a list of layers acting on a word of atoms.  A layer is
either a permutation of all wires or one opaque block applied to a run of
adjacent wires.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..kernel.infer import infer_dom_cod
from ..kernel.modes import Mode, is_compact, is_symmetric
from ..kernel.signature import Signature
from ..kernel.terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Ev, Id,
                            LeftU, MorTerm, Name, Par, RightU, Seq, Unassoc,
                            Uncurry, UnleftU, UnrightU, seq_all)
from ..kernel.types import (Tensor, TypeExpr, atom_key, dual, flatten,
                            normalize_type, tensor_all)


@dataclass(frozen=True)
class PermLayer:
    """``perm[i]`` is the output position of input wire ``i`` (0-based)."""

    perm: tuple[int, ...]

    def one_line(self) -> list[int]:
        """1-based one-line notation: position ``j`` holds the input that lands there."""
        inv = [0] * len(self.perm)
        for i, j in enumerate(self.perm):
            inv[j] = i + 1
        return inv

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm))


@dataclass(frozen=True)
class Block:
    term: MorTerm
    offset: int
    ins: tuple[TypeExpr, ...]
    outs: tuple[TypeExpr, ...]


Layer = PermLayer | Block


@dataclass(frozen=True)
class StrictTerm:
    dom: tuple[TypeExpr, ...]
    cod: tuple[TypeExpr, ...]
    layers: tuple[Layer, ...]

    def interfaces(self) -> list[tuple[TypeExpr, ...]]:
        """Wire words between layers, starting with ``dom`` and ending with ``cod``."""
        cur = self.dom
        out = [cur]
        for layer in self.layers:
            cur = apply_layer(layer, cur)
            out.append(cur)
        return out

    def keys(self) -> tuple:
        return (tuple(map(atom_key, self.dom)), tuple(map(atom_key, self.cod)), self.layers)


def apply_layer(layer: Layer, wires: tuple) -> tuple:
    if isinstance(layer, PermLayer):
        if len(layer.perm) != len(wires):
            raise ValueError("permutation layer has the wrong width")
        out = [None] * len(wires)
        for i, j in enumerate(layer.perm):
            out[j] = wires[i]
        return tuple(out)
    k = layer.offset
    if tuple(wires[k:k + len(layer.ins)]) != layer.ins:
        raise ValueError("block inputs do not match the wires it is applied to")
    return tuple(wires[:k]) + layer.outs + tuple(wires[k + len(layer.ins):])


def braid_perm(a: int, b: int) -> tuple[int, ...]:
    return tuple(b + i for i in range(a)) + tuple(range(b))


def desugar(t: MorTerm, sig: Signature) -> MorTerm:
    """Rewrite Name and Uncurry into Curry and Ev; in compact mode also
    rewrite Curry and Ev into cups and caps."""
    m = sig.mode
    compact = is_compact(m)

    def go(u: MorTerm) -> MorTerm:
        if isinstance(u, Seq):
            return Seq(go(u.first), go(u.then))
        if isinstance(u, Par):
            return Par(go(u.left), go(u.right))
        if isinstance(u, Name):
            x, _ = infer_dom_cod(u.body, sig)
            return go(Curry(Seq(RightU(x), u.body)))
        if isinstance(u, Uncurry):
            y, h = infer_dom_cod(u.body, sig)
            x, z = _hom_parts(h)
            return go(Seq(Par(Id(x), u.body), Ev(x, z)))
        if isinstance(u, Curry):
            body = go(u.body)
            if not compact:
                return Curry(body)
            d, _ = infer_dom_cod(u.body, sig)
            x, y = d.left, d.right
            return seq_all([UnleftU(y), Par(Cup(x), Id(y)), Assoc(dual(x), x, y),
                            Par(Id(dual(x)), body)])
        if isinstance(u, Ev) and compact:
            x, y = normalize_type(u.x, m), normalize_type(u.y, m)
            return seq_all([Unassoc(x, dual(x), y), Par(Cap(x), Id(y)), LeftU(y)])
        return u

    return go(t)


def _hom_parts(h: TypeExpr):
    from ..kernel.types import Hom
    if isinstance(h, Hom):
        return h.source, h.target
    if isinstance(h, Tensor):
        return dual(h.left), h.right
    raise ValueError(f"not an internal hom: {h!r}")


def strictify(t: MorTerm, sig: Signature, mode: Mode | None = None) -> StrictTerm:
    """Flatten ``t`` into layers.

    Braids become permutation layers when the mode is symmetric and chains
    of elementary crossing blocks otherwise.  Name and Uncurry are desugared
    first (and Curry/Ev too in compact mode).
    """
    mode = mode or sig.mode
    dom, cod = infer_dom_cod(t, sig)
    sym = is_symmetric(mode)
    t = desugar(t, sig)

    def go(u: MorTerm):
        if isinstance(u, Seq):
            d1, c1, l1 = go(u.first)
            _, c2, l2 = go(u.then)
            return d1, c2, l1 + l2
        if isinstance(u, Par):
            d1, c1, l1 = go(u.left)
            d2, c2, l2 = go(u.right)
            out = [_pad_right(layer, len(d2)) for layer in l1]
            out += [_shift(layer, len(c1)) for layer in l2]
            return d1 + d2, c1 + c2, out
        d, c = infer_dom_cod(u, sig)
        fd, fc = tuple(flatten(d)), tuple(flatten(c))
        if isinstance(u, (Id, Assoc, Unassoc, LeftU, UnleftU, RightU, UnrightU)):
            return fd, fc, []
        if isinstance(u, (Braid, BraidInv)):
            xs, ys = tuple(flatten(u.x)), tuple(flatten(u.y))
            if isinstance(u, Braid):
                perm_ab = (len(xs), len(ys))
            else:
                perm_ab = (len(ys), len(xs))
            if sym:
                p = braid_perm(*perm_ab)
                return fd, fc, ([] if all(i == j for i, j in enumerate(p)) else [PermLayer(p)])
            layers = _crossings(xs, ys)
            if isinstance(u, BraidInv):
                layers = [Block(BraidInv(b.term.x, b.term.y), b.offset, b.outs, b.ins)
                          for b in reversed(layers)]
            return fd, fc, layers
        return fd, fc, [Block(u, 0, fd, fc)]

    fd, fc, layers = go(t)
    assert fd == tuple(flatten(dom)) and fc == tuple(flatten(cod))
    return StrictTerm(fd, fc, tuple(layers))


def _crossings(xs: tuple, ys: tuple) -> list[Block]:
    """Elementary crossings that move every x strand right past every y strand."""
    a, b = len(xs), len(ys)
    out = []
    for i in range(a - 1, -1, -1):
        for j in range(b):
            pos = i + j
            out.append(Block(Braid(xs[i], ys[j]), pos, (xs[i], ys[j]), (ys[j], xs[i])))
    return out


def _pad_right(layer: Layer, extra: int) -> Layer:
    if isinstance(layer, PermLayer) and extra:
        n = len(layer.perm)
        return PermLayer(layer.perm + tuple(range(n, n + extra)))
    return layer


def _shift(layer: Layer, by: int) -> Layer:
    if not by:
        return layer
    if isinstance(layer, PermLayer):
        return PermLayer(tuple(range(by)) + tuple(v + by for v in layer.perm))
    return Block(layer.term, layer.offset + by, layer.ins, layer.outs)


def strict_to_term(s: StrictTerm, sig: Signature) -> MorTerm:
    """Read a strict term back as a term between right-nested words."""
    parts: list[MorTerm] = []
    wires = s.dom
    for layer in s.layers:
        nxt = apply_layer(layer, wires)
        if isinstance(layer, PermLayer):
            parts.extend(_perm_terms(list(wires), layer.perm))
        else:
            k = layer.offset
            d, c = infer_dom_cod(layer.term, sig)
            parts.append(whisker(list(wires[:k]), layer.term, d, c,
                                 list(wires[k + len(layer.ins):])))
        wires = nxt
    if not parts:
        return Id(tensor_all(list(s.dom)))
    return seq_all(parts)


def whisker(left: list, term: MorTerm, d: TypeExpr, c: TypeExpr, right: list) -> MorTerm:
    """``id(left) * term * id(right)`` as a map between right-nested words."""
    from .axioms import canonical_iso
    core = term
    if right:
        r = tensor_all(right)
        core, d, c = Par(core, Id(r)), Tensor(d, r), Tensor(c, r)
    if left:
        lt = tensor_all(left)
        core, d, c = Par(Id(lt), core), Tensor(lt, d), Tensor(lt, c)
    pre = canonical_iso(tensor_all(_words(d)), d)
    post = canonical_iso(c, tensor_all(_words(c)))
    return seq_all([m for m in (pre, core, post) if not isinstance(m, Id)] or [core])


def _words(t: TypeExpr) -> list[TypeExpr]:
    from ..kernel.types import Unit
    if isinstance(t, Unit):
        return []
    if isinstance(t, Tensor):
        return _words(t.left) + _words(t.right)
    return [t]


def _perm_terms(wires: list, perm: tuple) -> list[MorTerm]:
    """Adjacent braids (a bubble sort) realising ``perm``."""
    rank = {i: perm[i] for i in range(len(perm))}
    cur = list(range(len(perm)))
    ws = list(wires)
    out = []
    changed = True
    while changed:
        changed = False
        for p in range(len(cur) - 1):
            if rank[cur[p]] > rank[cur[p + 1]]:
                x, y = ws[p], ws[p + 1]
                out.append(whisker(ws[:p], Braid(x, y), Tensor(x, y), Tensor(y, x), ws[p + 2:]))
                cur[p], cur[p + 1] = cur[p + 1], cur[p]
                ws[p], ws[p + 1] = y, x
                changed = True
    return out
