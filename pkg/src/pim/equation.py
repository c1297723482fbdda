"""Single relations between two words, their degeneracy, and canonical parameters.

Every relation, once both sides are quasi-reduced, has the generic form
``B^d0 (DB)^k0 D^f0 = B^d1 (DB)^k1 D^f1``.  The bit pattern ``(d0, f0, d1, f1)``
picks one of ten rows ``Eq_0 .. Eq_9``.  Multiplying both sides by ``D``
moves a relation between rows without changing the presented monoid, so
every non-degenerate relation lands in ``Eq_0 .. Eq_3`` and from there in a
one-parameter family ``(family, parity, k[, ell])``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import DegenerateInput, EquationSyntaxError, TrivialEquation
from .word import INV, CanonicalShape, quasi_reduce, shape_of, to_word

__all__ = [
    "GenericEquation",
    "Verdict",
    "DegeneracyVerdict",
    "Parity",
    "ParamEq",
    "FAMILIES",
    "parse_equation",
    "detect_degenerate",
    "to_param",
]

# (lhs pattern, rhs pattern) -> row index, with pattern = (d, f)
_ROWS = {
    ((0, 0), (0, 0)): 0,
    ((0, 0), (0, 1)): 1,
    ((0, 0), (1, 0)): 2,
    ((0, 0), (1, 1)): 3,
    ((0, 1), (0, 1)): 4,
    ((0, 1), (1, 0)): 5,
    ((0, 1), (1, 1)): 6,
    ((1, 0), (1, 0)): 7,
    ((1, 0), (1, 1)): 8,
    ((1, 1), (1, 1)): 9,
}

FAMILIES = (0b00, 0b01, 0b10, 0b11)


def _side_key(s: CanonicalShape) -> tuple[int, int]:
    return (2 * s.d + s.f, s.k)


@dataclass(frozen=True)
class GenericEquation:
    lhs: CanonicalShape
    rhs: CanonicalShape

    def __post_init__(self):
        object.__setattr__(self, "lhs", CanonicalShape(*self.lhs))
        object.__setattr__(self, "rhs", CanonicalShape(*self.rhs))
        if self.lhs == self.rhs:
            raise TrivialEquation(f"both sides reduce to {to_word(self.lhs) or 'Id'}")
        if _side_key(self.lhs) > _side_key(self.rhs):
            raise ValueError("sides not in normalized order; use GenericEquation.from_words")

    @classmethod
    def from_words(cls, u: str, v: str) -> GenericEquation:
        a, b = sorted((shape_of(u), shape_of(v)), key=_side_key)
        return cls(a, b)

    @property
    def row(self) -> int:
        return _ROWS[(self.lhs.pattern, self.rhs.pattern)]

    @property
    def k0(self) -> int:
        return self.lhs.k

    @property
    def k1(self) -> int:
        return self.rhs.k

    def words(self) -> tuple[str, str]:
        return to_word(self.lhs), to_word(self.rhs)

    def times_inv(self, side: str) -> GenericEquation:
        """Multiply both sides by ``D`` on the given side ('left' or 'right')."""
        u, v = self.words()
        if side == "left":
            return GenericEquation.from_words(INV + u, INV + v)
        if side == "right":
            return GenericEquation.from_words(u + INV, v + INV)
        raise ValueError(side)

    def __str__(self) -> str:
        u, v = self.words()
        return f"{u}={v}"


_WORD_RE = re.compile(r"[DB]*")


def parse_equation(text: str) -> GenericEquation:
    """Parse ``"<word>=<word>"``; surrounding whitespace is ignored, an empty side is Id."""
    body = text.strip()
    parts = body.split("=")
    if len(parts) != 2:
        raise EquationSyntaxError(f"expected exactly one '=' in {text!r}")
    for side in parts:
        if not _WORD_RE.fullmatch(side):
            bad = sorted(set(side) - {"D", "B"})
            raise EquationSyntaxError(f"bad character(s) {bad} in {text!r}; words use D and B only")
    u, v = parts
    if quasi_reduce(u) == quasi_reduce(v):
        raise TrivialEquation(f"{text!r}: both sides reduce to {quasi_reduce(u) or 'Id'}")
    return GenericEquation.from_words(u, v)


class Verdict(enum.Enum):
    NONDEGENERATE = "nondegenerate"
    MONOGENIC = "monogenic"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class DegeneracyVerdict:
    verdict: Verdict
    case: int | None = None

    @property
    def degenerate(self) -> bool:
        return self.verdict is not Verdict.NONDEGENERATE


NONDEGENERATE = DegeneracyVerdict(Verdict.NONDEGENERATE)

# row -> (degenerate case, degenerate when k0 == 0, degenerate when k1 == 0)
_DEGENERATE_ROWS = {
    0: (1, True, False),
    1: (2, True, True),
    2: (3, True, False),
    3: (4, True, False),
    4: (5, True, True),
    5: (6, True, False),
    6: (7, True, False),
}


def detect_degenerate(e: GenericEquation) -> DegeneracyVerdict:
    """Flag the relations that collapse the monoid to a monogenic one."""
    rule = _DEGENERATE_ROWS.get(e.row)
    if rule is None:
        # rows 7-9 carry a B on both sides, neither side can reach Id
        return NONDEGENERATE
    case, on_k0, on_k1 = rule
    if (on_k0 and e.k0 == 0) or (on_k1 and e.k1 == 0):
        return DegeneracyVerdict(Verdict.MONOGENIC, case)
    return NONDEGENERATE


class Parity(enum.Enum):
    CIRC = "circ"
    BULLET = "bullet"

    @property
    def glyph(self) -> str:
        return "∘" if self is Parity.CIRC else "•"


@dataclass(frozen=True)
class ParamEq:
    """Canonical relation descriptor.

    ``family`` is a 2-bit int (0b00, 0b01, 0b10, 0b11).  Family 00 carries
    ``ell`` and its parity is derived from it; the others carry a parity
    and no ``ell``.
    """

    family: int
    parity: Parity
    k: int
    ell: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of 00, 01, 10, 11, got {self.family!r}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.family == 0b00:
            if self.ell is None or self.ell < 1:
                raise ValueError("family 00 needs ell >= 1")
            expected = Parity.CIRC if self.ell % 2 == 0 else Parity.BULLET
            if self.parity is not expected:
                raise ValueError(f"ell={self.ell} forces parity {expected.value}")
        elif self.ell is not None:
            raise ValueError("ell is only meaningful for family 00")

    @classmethod
    def e00(cls, k: int, ell: int) -> ParamEq:
        return cls(0b00, Parity.CIRC if ell % 2 == 0 else Parity.BULLET, k, ell)

    @property
    def family_tag(self) -> str:
        return f"{self.family:02b}"

    def words(self) -> tuple[str, str]:
        """The defining relation, left side always ``(DB)^k``."""
        k = self.k
        lhs = "DB" * k
        circ = self.parity is Parity.CIRC
        if self.family == 0b00:
            rhs = "DB" * (k + self.ell)
        elif self.family == 0b01:
            rhs = "DB" * (k + 1 if circ else k) + "D"
        elif self.family == 0b10:
            rhs = "BD" * (k if circ else k - 1) + "B"
        else:
            rhs = "BD" * (k if circ else k + 1)
        return lhs, rhs

    def equation(self) -> GenericEquation:
        return GenericEquation.from_words(*self.words())

    def __str__(self) -> str:
        if self.family == 0b00:
            return f"family=00 k={self.k} ell={self.ell}"
        return f"family={self.family_tag} parity={self.parity.value} k={self.k}"


# exchangeability moves into the representative rows 0..3
_MOVES = {
    4: ("right",),
    7: ("left",),
    9: ("right", "left"),
    8: ("left",),
    6: ("right",),
    5: ("right",),
}


def to_representative(e: GenericEquation) -> GenericEquation:
    for side in _MOVES.get(e.row, ()):
        e = e.times_inv(side)
    return e


def to_param(e: GenericEquation) -> ParamEq:
    if detect_degenerate(e).degenerate:
        raise DegenerateInput(f"{e} is degenerate (monogenic); no canonical parameters")
    e = to_representative(e)
    row = e.row
    if row == 0:
        return ParamEq.e00(e.k0, e.k1 - e.k0)
    if row == 1:
        if e.k0 > e.k1:
            e = e.times_inv("right")
        odd = (e.k1 - e.k0) % 2 == 1
        return ParamEq(0b01, Parity.CIRC if odd else Parity.BULLET, e.k0)
    if row == 2:
        if e.k0 > e.k1 + 1:
            e = e.times_inv("left")
        odd = (e.k1 - e.k0) % 2 == 1
        return ParamEq(0b10, Parity.BULLET if odd else Parity.CIRC, e.k0)
    if row == 3:
        if e.k0 > e.k1 + 1:
            e = e.times_inv("left").times_inv("right")
        odd = (e.k1 + 1 - e.k0) % 2 == 1
        return ParamEq(0b11, Parity.BULLET if odd else Parity.CIRC, e.k0)
    raise AssertionError(f"row {row} left after exchangeability moves")
