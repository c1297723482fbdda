"""2x2 integer matrix models that separate the classes of canonical relations.

Each case is a pair (involution, idempotent) together with the relation
classes it satisfies for every k and the ones it violates for every k.
"""

from __future__ import annotations

from typing import NamedTuple

from .equation import GenericEquation, Parity, ParamEq
from .errors import UnknownCase
from .monoid import FiniteMonoid, generate
from .word import INV

__all__ = ["Mat2", "IDENTITY", "CASES", "witness_for", "separation", "instances", "evaluate", "check_relation", "matrix_monoid"]


class Mat2(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, o: "Mat2") -> "Mat2":
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]


IDENTITY = Mat2(1, 0, 0, 1)

# free off-diagonal parameter of the models, fixed to 1
Y = 1

_P = Mat2(1, 0, 0, 0)
_Q = Mat2(0, 0, 0, 1)

# tag -> (inv, idem, classes that hold for all k, classes that fail for all k)
# "00" means every ell; "00-circ"/"00-bullet" restrict to even/odd ell.
CASES: dict[str, tuple[Mat2, Mat2, tuple[str, ...], tuple[str, ...]]] = {
    "ineq1-00": (Mat2(-1, Y, 0, 1), _P, ("00-circ",), ("00-bullet",)),
    "ineq1-01": (Mat2(1, Y, 0, -1), _Q, ("01-circ",), ("01-bullet",)),
    "ineq1-10": (Mat2(-1, Y, 0, 1), _P, ("10-circ",), ("10-bullet",)),
    "ineq1-11": (Mat2(-1, 0, 0, 1), _P, ("11-circ",), ("11-bullet",)),
    # ineq2 reuses the ineq5 pair
    "ineq2": (Mat2(1, 0, Y, -1), _P, ("01-circ", "01-bullet"), ("11-circ", "11-bullet")),
    "ineq3": (Mat2(-1, 0, Y, 1), _Q, ("10-circ", "10-bullet"), ("11-circ", "11-bullet")),
    # [[1,0],[y,1]] squares to [[1,0],[2y,1]]; the sign flip makes it an involution
    # while keeping every product with _Q used by this case unchanged
    "ineq4": (Mat2(-1, 0, Y, 1), _Q, ("00",), ("01-circ", "01-bullet")),
    "ineq5": (Mat2(1, 0, Y, -1), _P, ("00",), ("10-circ", "10-bullet")),
}


def _case_key(case) -> str:
    if isinstance(case, tuple):
        case = "-".join(case)
    if case not in CASES:
        raise UnknownCase(f"unknown witness case {case!r}; known: {', '.join(CASES)}")
    return case


def witness_for(case) -> tuple[Mat2, Mat2]:
    """Matrix pair for ``case``, e.g. ``"ineq4"`` or ``("ineq1", "01")``."""
    inv, idem, _, _ = CASES[_case_key(case)]
    return inv, idem


def separation(case) -> tuple[tuple[str, ...], tuple[str, ...]]:
    _, _, holds, fails = CASES[_case_key(case)]
    return holds, fails


def instances(cls: str, k: int, max_ell: int = 4) -> list[ParamEq]:
    """Concrete relations of a class tag at parameter ``k``."""
    fam, _, par = cls.partition("-")
    if fam == "00":
        ells = range(1, max_ell + 1)
        if par == "circ":
            ells = [l for l in ells if l % 2 == 0]
        elif par == "bullet":
            ells = [l for l in ells if l % 2 == 1]
        return [ParamEq.e00(k, l) for l in ells]
    return [ParamEq(int(fam, 2), Parity(par), k)]


def evaluate(pair: tuple[Mat2, Mat2], word: str) -> Mat2:
    inv, idem = pair
    m = IDENTITY
    for ch in word:
        m = m @ (inv if ch == INV else idem)
    return m


def check_relation(pair: tuple[Mat2, Mat2], e) -> bool:
    """Whether the model satisfies ``e`` (a GenericEquation, ParamEq or pair of words)."""
    if isinstance(e, (GenericEquation, ParamEq)):
        u, v = e.words()
    else:
        u, v = e
    return evaluate(pair, u) == evaluate(pair, v)


def matrix_monoid(pair: tuple[Mat2, Mat2], cap: int) -> FiniteMonoid:
    if cap < 1:
        raise ValueError("cap must be >= 1")
    inv, idem = pair
    return generate(IDENTITY, [lambda m: m @ inv, lambda m: m @ idem], cap=cap)
