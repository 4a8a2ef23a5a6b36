"""Structure modes and the order between them.

A mode names the kind of category a signature lives in.  Modes are
partially ordered by "has at least the structure of": a term that is
valid in one mode stays valid in every mode above it.
"""

from __future__ import annotations

import enum
from functools import lru_cache


class Mode(str, enum.Enum):
    MONOIDAL = "monoidal"
    BRAIDED = "braided"
    SYMMETRIC = "symmetric"
    CARTESIAN = "cartesian"
    CLOSED_MONOIDAL = "closed-monoidal"
    CLOSED_BRAIDED = "closed-braided"
    CLOSED_SYMMETRIC = "closed-symmetric"
    CARTESIAN_CLOSED = "cartesian-closed"
    COMPACT_SYMMETRIC = "compact-symmetric"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "Mode":
        try:
            return cls(name.strip())
        except ValueError:
            known = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown mode {name!r} (expected one of: {known})") from None


# covering relation of the chart: (lower, upper)
_COVERS = [
    (Mode.MONOIDAL, Mode.BRAIDED),
    (Mode.BRAIDED, Mode.SYMMETRIC),
    (Mode.SYMMETRIC, Mode.CARTESIAN),
    (Mode.CARTESIAN, Mode.CARTESIAN_CLOSED),
    (Mode.MONOIDAL, Mode.CLOSED_MONOIDAL),
    (Mode.CLOSED_MONOIDAL, Mode.CLOSED_BRAIDED),
    (Mode.CLOSED_BRAIDED, Mode.CLOSED_SYMMETRIC),
    (Mode.CLOSED_SYMMETRIC, Mode.CARTESIAN_CLOSED),
    (Mode.BRAIDED, Mode.CLOSED_BRAIDED),
    (Mode.SYMMETRIC, Mode.CLOSED_SYMMETRIC),
    (Mode.CLOSED_SYMMETRIC, Mode.COMPACT_SYMMETRIC),
]


@lru_cache(maxsize=None)
def _up_set(m: Mode) -> frozenset:
    out = {m}
    for lo, hi in _COVERS:
        if lo == m:
            out |= _up_set(hi)
    return frozenset(out)


def mode_leq(a: Mode, b: Mode) -> bool:
    """True when every structure of ``a`` is present in ``b``."""
    return b in _up_set(a)


# Minimal mode for every constructor tag (terms and types).
CONSTRUCTOR_MODES = {
    "gen": Mode.MONOIDAL,
    "id": Mode.MONOIDAL,
    "seq": Mode.MONOIDAL,
    "par": Mode.MONOIDAL,
    "assoc": Mode.MONOIDAL,
    "unassoc": Mode.MONOIDAL,
    "left": Mode.MONOIDAL,
    "unleft": Mode.MONOIDAL,
    "right": Mode.MONOIDAL,
    "unright": Mode.MONOIDAL,
    "braid": Mode.BRAIDED,
    "braidinv": Mode.BRAIDED,
    "dup": Mode.CARTESIAN,
    "del": Mode.CARTESIAN,
    "pair": Mode.CARTESIAN,
    "p1": Mode.CARTESIAN,
    "p2": Mode.CARTESIAN,
    "curry": Mode.CLOSED_MONOIDAL,
    "uncurry": Mode.CLOSED_MONOIDAL,
    "ev": Mode.CLOSED_MONOIDAL,
    "name": Mode.CLOSED_MONOIDAL,
    "cup": Mode.COMPACT_SYMMETRIC,
    "cap": Mode.COMPACT_SYMMETRIC,
    # type constructors
    "unit": Mode.MONOIDAL,
    "tensor": Mode.MONOIDAL,
    "hom": Mode.CLOSED_MONOIDAL,
    "dual": Mode.COMPACT_SYMMETRIC,
}


def mode_allows(m: Mode, tag: str) -> bool:
    """Whether constructor ``tag`` is admitted in mode ``m``.

    Unknown tags are never allowed, which keeps the function total.
    """
    need = CONSTRUCTOR_MODES.get(tag)
    if need is None:
        return False
    return mode_leq(need, m)


def is_cartesian(m: Mode) -> bool:
    return mode_leq(Mode.CARTESIAN, m)


def is_closed(m: Mode) -> bool:
    return mode_leq(Mode.CLOSED_MONOIDAL, m)


def is_symmetric(m: Mode) -> bool:
    return mode_leq(Mode.SYMMETRIC, m)


def is_compact(m: Mode) -> bool:
    return m == Mode.COMPACT_SYMMETRIC
