"""Untyped lambda calculus: substitution, normal-order reduction, Church numerals."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import CatTermError, FuelExhausted


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True)
class App:
    fun: "Term"
    arg: "Term"

    def __str__(self) -> str:
        return show(self)


@dataclass(frozen=True)
class Lam:
    bound: str
    body: "Term"

    def __str__(self) -> str:
        return show(self)


Term = Union[Var, App, Lam]


class NotANumeral(CatTermError):
    pass


def app(f: Term, *args: Term) -> Term:
    for a in args:
        f = App(f, a)
    return f


def lams(names: str | list[str], body: Term) -> Term:
    for n in reversed(list(names)):
        body = Lam(n, body)
    return body


def free_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, App):
        return free_vars(t.fun) | free_vars(t.arg)
    return free_vars(t.body) - {t.bound}


def all_names(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, App):
        return all_names(t.fun) | all_names(t.arg)
    return all_names(t.body) | {t.bound}


def fresh(base: str, avoid: set[str]) -> str:
    base = base.rstrip("'") or "v"
    name = base + "'"
    while name in avoid:
        name += "'"
    return name


def substitute(t: Term, x: str, s: Term) -> Term:
    """Capture-avoiding ``t[s/x]``."""
    fs = free_vars(s)
    return _subst(t, x, s, fs)


def _subst(t: Term, x: str, s: Term, fs: set[str]) -> Term:
    if isinstance(t, Var):
        return s if t.name == x else t
    if isinstance(t, App):
        return App(_subst(t.fun, x, s, fs), _subst(t.arg, x, s, fs))
    if t.bound == x or x not in free_vars(t.body):
        return t
    if t.bound in fs:
        new = fresh(t.bound, fs | all_names(t.body) | {x})
        body = _subst(t.body, t.bound, Var(new), {new})
        return Lam(new, _subst(body, x, s, fs))
    return Lam(t.bound, _subst(t.body, x, s, fs))


# -- de Bruijn core -------------------------------------------------------------------
#
# ("v", i) bound index, ("f", name) free variable, ("a", f, x), ("l", body, hint)


def to_db(t: Term, env: tuple[str, ...] = ()) -> tuple:
    if isinstance(t, Var):
        for i in range(len(env) - 1, -1, -1):
            if env[i] == t.name:
                return ("v", len(env) - 1 - i)
        return ("f", t.name)
    if isinstance(t, App):
        return ("a", to_db(t.fun, env), to_db(t.arg, env))
    return ("l", to_db(t.body, env + (t.bound,)), t.bound)


def _shift(t: tuple, d: int, cut: int = 0) -> tuple:
    k = t[0]
    if k == "v":
        return ("v", t[1] + d) if t[1] >= cut else t
    if k == "f":
        return t
    if k == "a":
        return ("a", _shift(t[1], d, cut), _shift(t[2], d, cut))
    return ("l", _shift(t[1], d, cut + 1), t[2])


def _sub(t: tuple, j: int, s: tuple) -> tuple:
    k = t[0]
    if k == "v":
        return s if t[1] == j else t
    if k == "f":
        return t
    if k == "a":
        return ("a", _sub(t[1], j, s), _sub(t[2], j, s))
    return ("l", _sub(t[1], j + 1, _shift(s, 1)), t[2])


def _beta(body: tuple, arg: tuple) -> tuple:
    return _shift(_sub(body, 0, _shift(arg, 1)), -1)


def _occurs(t: tuple, j: int) -> bool:
    k = t[0]
    if k == "v":
        return t[1] == j
    if k == "f":
        return False
    if k == "a":
        return _occurs(t[1], j) or _occurs(t[2], j)
    return _occurs(t[1], j + 1)


def _beta_step(t: tuple):
    """One leftmost-outermost beta step, or None."""
    k = t[0]
    if k == "a":
        if t[1][0] == "l":
            return _beta(t[1][1], t[2])
        r = _beta_step(t[1])
        if r is not None:
            return ("a", r, t[2])
        r = _beta_step(t[2])
        return None if r is None else ("a", t[1], r)
    if k == "l":
        r = _beta_step(t[1])
        return None if r is None else ("l", r, t[2])
    return None


def _eta_step(t: tuple):
    k = t[0]
    if k == "l":
        b = t[1]
        if b[0] == "a" and b[2] == ("v", 0) and not _occurs(b[1], 0):
            return _shift(b[1], -1)
        r = _eta_step(b)
        return None if r is None else ("l", r, t[2])
    if k == "a":
        r = _eta_step(t[1])
        if r is not None:
            return ("a", r, t[2])
        r = _eta_step(t[2])
        return None if r is None else ("a", t[1], r)
    return None


def from_db(t: tuple, free: set[str] | None = None) -> Term:
    """Back to named syntax, naming binders canonically by depth."""
    free = set(free or ()) | _db_free(t)
    names: list[str] = []

    def name_for(depth: int) -> str:
        n = f"x{depth}"
        while n in free:
            n += "'"
        return n

    def go(u: tuple, env: list[str]) -> Term:
        k = u[0]
        if k == "v":
            return Var(env[len(env) - 1 - u[1]])
        if k == "f":
            return Var(u[1])
        if k == "a":
            return App(go(u[1], env), go(u[2], env))
        n = name_for(len(env))
        return Lam(n, go(u[1], env + [n]))

    return go(t, names)


def _db_free(t: tuple) -> set[str]:
    k = t[0]
    if k == "f":
        return {t[1]}
    if k == "v":
        return set()
    if k == "a":
        return _db_free(t[1]) | _db_free(t[2])
    return _db_free(t[1])


def _nameless(t: tuple) -> tuple:
    # drop the binder-name hints so only the binding structure is compared
    k = t[0]
    if k == "a":
        return ("a", _nameless(t[1]), _nameless(t[2]))
    if k == "l":
        return ("l", _nameless(t[1]))
    return t


def alpha_eq(a: Term, b: Term) -> bool:
    return _nameless(to_db(a)) == _nameless(to_db(b))


def canonical(t: Term) -> Term:
    return from_db(to_db(t))


def normalize_untyped(t: Term, fuel: int = 10_000, eta: bool = True) -> Term:
    """Normal-order beta reduction, then eta, with canonical binder names.

    Raises FuelExhausted (carrying the last term) after ``fuel`` steps.
    """
    cur = to_db(t)
    steps = 0
    try:
        for stepper in ((_beta_step, _eta_step) if eta else (_beta_step,)):
            while True:
                nxt = stepper(cur)
                if nxt is None:
                    break
                if steps >= fuel:
                    raise FuelExhausted(f"no normal form within {fuel} steps", from_db(cur))
                cur = nxt
                steps += 1
        return from_db(cur)
    except RecursionError:
        # terms this deep are out of reach for the same reason fuel is
        raise FuelExhausted(f"term grew too deep after {steps} steps") from None


# -- Church numerals ----------------------------------------------------------------


def church(n: int) -> Term:
    if n < 0:
        raise ValueError("Church numerals are nonnegative")
    body: Term = Var("x")
    for _ in range(n):
        body = App(Var("f"), body)
    return Lam("f", Lam("x", body))


church_encode = church


def church_decode(t: Term, eta: bool = False) -> int:
    """Inverse of ``church``.

    With ``eta`` the eta-normal form of 1, ``\\f. f``, also reads as 1; without it
    that term is not a numeral.
    """
    d = to_db(t)
    if d[0] != "l":
        raise NotANumeral(f"not a Church numeral: {show(t)}")
    inner = d[1]
    if inner == ("v", 0) and eta:
        return 1
    if inner[0] != "l":
        raise NotANumeral(f"not a Church numeral: {show(t)}")
    body = inner[1]
    n = 0
    while body[0] == "a" and body[1] == ("v", 1):
        n += 1
        body = body[2]
    if body != ("v", 0):
        raise NotANumeral(f"not a Church numeral: {show(t)}")
    return n


TIMES = lams(["a", "b", "x"], App(Var("a"), App(Var("b"), Var("x"))))


def times(m: Term, n: Term) -> Term:
    return app(TIMES, m, n)


# -- printing -------------------------------------------------------------------------


def show(t: Term) -> str:
    """``\\x. body`` with juxtaposition for application."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Lam):
        return f"\\{t.bound}. {show(t.body)}"
    f = show(t.fun) if not isinstance(t.fun, Lam) else f"({show(t.fun)})"
    a = show(t.arg) if isinstance(t.arg, Var) else f"({show(t.arg)})"
    return f"{f} {a}"
