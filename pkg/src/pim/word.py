"""Words over the involution ``D`` and the idempotent ``B``.

A word is a plain ``str`` over ``{"D", "B"}``; the empty string is the
identity.  The base relations ``DD = Id`` and ``BB = B`` are confluent and
length-reducing, so every word has a unique quasi-reduced form: an
alternating word ``B^d (DB)^k D^f``.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

__all__ = [
    "Generator",
    "INV",
    "IDEM",
    "CanonicalShape",
    "check_word",
    "is_quasi_reduced",
    "quasi_reduce",
    "shape_of",
    "to_word",
    "alternating_words",
    "pretty",
]


class Generator(str, enum.Enum):
    INV = "D"
    IDEM = "B"


INV = Generator.INV.value
IDEM = Generator.IDEM.value
_LETTERS = frozenset((INV, IDEM))


class CanonicalShape(NamedTuple):
    """The word ``B^d (DB)^k D^f``."""

    d: int
    k: int
    f: int

    @property
    def pattern(self) -> tuple[int, int]:
        return (self.d, self.f)

    def __str__(self) -> str:
        return to_word(self) or "Id"


def check_word(w: str) -> str:
    bad = set(w) - _LETTERS
    if bad:
        raise ValueError(f"word {w!r} contains letters outside {{D,B}}: {sorted(bad)}")
    return w


def is_quasi_reduced(w: str) -> bool:
    return "DD" not in w and "BB" not in w


def quasi_reduce(w: str) -> str:
    # stack scan: DD cancels, BB collapses; cancellation can expose new pairs
    out: list[str] = []
    for ch in w:
        if out and out[-1] == ch:
            if ch == INV:
                out.pop()
            continue
        out.append(ch)
    return "".join(out)


def shape_of(w: str) -> CanonicalShape:
    r = quasi_reduce(w)
    d = 1 if r.startswith(IDEM) else 0
    f = 1 if r.endswith(INV) else 0
    core = len(r) - d - f
    return CanonicalShape(d, core // 2, f)


def to_word(s: CanonicalShape) -> str:
    d, k, f = s
    if d not in (0, 1) or f not in (0, 1) or k < 0:
        raise ValueError(f"invalid shape {tuple(s)}")
    return IDEM * d + "DB" * k + INV * f


def alternating_words(max_len: int) -> list[str]:
    """All quasi-reduced words of length <= max_len, shortest first, D-initial first."""
    words = [""]
    for n in range(1, max_len + 1):
        for first in (INV, IDEM):
            other = IDEM if first == INV else INV
            words.append("".join(first if i % 2 == 0 else other for i in range(n)))
    return words


_GLYPHS = {INV: "◇", IDEM: "□"}


def pretty(w: str) -> str:
    """Render with the diamond/box glyphs; the identity prints as ``Id``."""
    return "".join(_GLYPHS[c] for c in w) or "Id"
