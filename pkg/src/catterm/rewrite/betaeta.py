"""Oriented term rewriting for the closed, compact and cartesian laws."""

from __future__ import annotations

from dataclasses import dataclass

from ..kernel.infer import infer_dom_cod
from ..kernel.modes import is_cartesian, is_symmetric
from ..kernel.signature import Signature
from ..kernel.terms import (Assoc, Braid, BraidInv, Cap, Cup, Curry, Del, Dup,
                            Ev, Id, LeftU, MorTerm, Name, Pair, Par, Proj1,
                            Proj2, RightU, Seq, Unassoc, Uncurry, UnleftU,
                            UnrightU, seq_all)
from ..kernel.types import Tensor, dual, normalize_type

_INVERSES = {Assoc: Unassoc, Unassoc: Assoc, LeftU: UnleftU, UnleftU: LeftU,
             RightU: UnrightU, UnrightU: RightU}


@dataclass(frozen=True)
class Normalized:
    term: MorTerm
    normal: bool
    steps: int


def _chain(t: MorTerm) -> list[MorTerm]:
    if isinstance(t, Seq):
        return _chain(t.first) + _chain(t.then)
    return [t]


def _args(t) -> tuple:
    return tuple(getattr(t, f) for f in t.__dataclass_fields__)


class _Rewriter:
    def __init__(self, sig: Signature):
        self.sig = sig
        self.sym = is_symmetric(sig.mode)
        self.cart = is_cartesian(sig.mode)

    def ty(self, t: MorTerm):
        return infer_dom_cod(t, self.sig)

    def norm(self, x):
        return normalize_type(x, self.sig.mode)

    # one rewrite step, leftmost-outermost; None when t is normal
    def step(self, t: MorTerm) -> MorTerm | None:
        if isinstance(t, Seq):
            return self.step_chain(t)
        r = self.unit_rule(t)
        if r is not None:
            return r
        if isinstance(t, Par):
            a = self.step(t.left)
            if a is not None:
                return Par(a, t.right)
            b = self.step(t.right)
            return None if b is None else Par(t.left, b)
        if isinstance(t, Pair):
            a = self.step(t.first)
            if a is not None:
                return Pair(a, t.second)
            b = self.step(t.second)
            return None if b is None else Pair(t.first, b)
        if isinstance(t, (Curry, Uncurry, Name)):
            b = self.step(t.body)
            return None if b is None else type(t)(b)
        return None

    def unit_rule(self, t: MorTerm) -> MorTerm | None:
        if isinstance(t, Par) and isinstance(t.left, Id) and isinstance(t.right, Id):
            return Id(Tensor(t.left.at, t.right.at))
        if isinstance(t, Uncurry) and isinstance(t.body, Curry):
            return t.body.body
        if isinstance(t, Curry) and isinstance(t.body, Uncurry):
            return t.body.body
        if isinstance(t, Name):
            x, _ = self.ty(t.body)
            return Curry(Seq(RightU(x), t.body))
        if isinstance(t, Curry):
            ch = _chain(t.body)
            if (len(ch) >= 2 and isinstance(ch[-1], Ev) and isinstance(ch[-2], Par)
                    and isinstance(ch[-2].left, Id) and ch[-2].left.at == ch[-1].x):
                # curry((id * g) ; ev) = g, with any prefix absorbed into g
                head = ch[:-2]
                g = ch[-2].right
                if not head:
                    return g
                pre = seq_all(head)
                d, _ = self.ty(pre)
                if isinstance(d, Tensor) and _is_id_par(pre, d.left, self):
                    return Seq(_right_of(pre, self), g)
        if isinstance(t, Pair) and isinstance(t.first, Proj1) and isinstance(t.second, Proj2):
            if _args(t.first) == _args(t.second):
                return Id(Tensor(t.first.x, t.first.y))
        return None

    def step_chain(self, t: Seq) -> MorTerm | None:
        ch = _chain(t)
        dom, _ = self.ty(t)
        for i in range(len(ch)):
            for width in (3, 2, 1):
                if i + width > len(ch):
                    continue
                rep = self.window(ch[i:i + width], len(ch))
                if rep is not None:
                    new = ch[:i] + rep + ch[i + width:]
                    return seq_all(new) if new else Id(dom)
        for i, c in enumerate(ch):
            r = self.step(c)
            if r is not None:
                return seq_all(ch[:i] + [r] + ch[i + 1:])
        # reassociation only: keep the canonical left-nested shape
        canon = seq_all(ch)
        return canon if canon != t else None

    def window(self, w: list[MorTerm], total: int) -> list[MorTerm] | None:
        if len(w) == 1:
            if isinstance(w[0], Id) and total > 1:
                return []
            return None
        if len(w) == 2:
            return self.pair_rule(w[0], w[1])
        return self.triple_rule(*w)

    def pair_rule(self, a: MorTerm, b: MorTerm) -> list[MorTerm] | None:
        ta, tb = type(a), type(b)
        if _INVERSES.get(ta) is tb and _args(a) == _args(b):
            return []
        if ta in (Braid, BraidInv) and tb in (Braid, BraidInv):
            if ta is not tb and _args(a) == _args(b):
                return []
            if self.sym and ta is tb is Braid and (a.x, a.y) == (b.y, b.x):
                return []
        if isinstance(a, Par) and isinstance(b, Par):
            _, c1 = self.ty(a.left)
            d2, _ = self.ty(b.left)
            if c1 == d2:
                return [Par(Seq(a.left, b.left), Seq(a.right, b.right))]
        if isinstance(b, Ev) and isinstance(a, Par):
            r = a.right
            if isinstance(r, Curry):
                return [Par(a.left, Id(self.ty(r)[0])), r.body]
            if isinstance(r, Seq) and isinstance(r.then, Curry):
                return [Par(a.left, r.first), r.then.body]
        if self.cart:
            if isinstance(a, Dup) and isinstance(b, Par):
                if isinstance(b.left, Id) and isinstance(b.right, Del):
                    return [UnrightU(a.x)]
                if isinstance(b.left, Del) and isinstance(b.right, Id):
                    return [UnleftU(a.x)]
            if isinstance(a, Dup) and isinstance(b, (Proj1, Proj2)):
                return []
            if isinstance(a, Dup) and isinstance(b, Braid) and b.x == b.y == a.x:
                return [a]
            if isinstance(a, Pair) and isinstance(b, Proj1):
                return [a.first]
            if isinstance(a, Pair) and isinstance(b, Proj2):
                return [a.second]
            if isinstance(b, Del) and not isinstance(a, Del):
                d, _ = self.ty(a)
                return [Del(d)]
        return None

    def triple_rule(self, a, b, c) -> list[MorTerm] | None:
        # zig-zags, written with the associator between the cup and the cap
        if (isinstance(a, Par) and isinstance(a.left, Id) and isinstance(a.right, Cup)
                and isinstance(b, Unassoc) and isinstance(c, Par)
                and isinstance(c.left, Cap) and isinstance(c.right, Id)):
            x = a.left.at
            if a.right.x == x and c.left.x == x and c.right.at == x and \
                    _args(b) == (x, dual(x), x):
                return [RightU(x), UnleftU(x)]
        if (isinstance(a, Par) and isinstance(a.left, Cup) and isinstance(a.right, Id)
                and isinstance(b, Assoc) and isinstance(c, Par)
                and isinstance(c.left, Id) and isinstance(c.right, Cap)):
            x = a.left.x
            xd = dual(x)
            if a.right.at == xd and c.right.x == x and c.left.at == xd and \
                    _args(b) == (xd, x, xd):
                return [LeftU(xd), UnrightU(xd)]
        return None


def _is_id_par(pre: MorTerm, x, rw: _Rewriter) -> bool:
    return isinstance(pre, Par) and isinstance(pre.left, Id) and pre.left.at == x


def _right_of(pre: MorTerm, rw: _Rewriter) -> MorTerm:
    return pre.right


def beta_eta_normalize(t: MorTerm, sig: Signature, fuel: int = 10_000) -> Normalized:
    """Rewrite ``t`` with the oriented laws until normal or out of fuel."""
    rw = _Rewriter(sig)
    infer_dom_cod(t, sig)
    steps = 0
    cur = t
    while True:
        nxt = rw.step(cur)
        if nxt is None:
            return Normalized(cur, True, steps)
        if steps >= fuel:
            return Normalized(cur, False, steps)
        cur = nxt
        steps += 1
