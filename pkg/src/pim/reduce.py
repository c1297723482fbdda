"""Fold any finite set of relations into one canonical relation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce as _fold
from math import gcd
from typing import Iterable, Union

from .equation import GenericEquation, Parity, ParamEq, detect_degenerate, parse_equation, to_param

__all__ = [
    "Free",
    "Monogenic",
    "Classified",
    "CanonicalPresentation",
    "meet",
    "reduce_presentation",
    "classify",
]


@dataclass(frozen=True)
class Free:
    def __str__(self) -> str:
        return "Free (infinite)"


@dataclass(frozen=True)
class Monogenic:
    cases: tuple[int, ...]

    def __post_init__(self):
        if not self.cases:
            raise ValueError("Monogenic needs at least one triggering degenerate case")

    def __str__(self) -> str:
        return "Monogenic cases=" + ",".join(map(str, self.cases))


@dataclass(frozen=True)
class Classified:
    param: ParamEq

    def __post_init__(self):
        if not isinstance(self.param, ParamEq):
            raise TypeError("Classified wraps a ParamEq")

    def __str__(self) -> str:
        return f"Classified {self.param}"


CanonicalPresentation = Union[Free, Monogenic, Classified]


def meet(a: ParamEq, b: ParamEq) -> ParamEq:
    """The canonical relation equivalent to ``a`` and ``b`` holding together."""
    k = min(a.k, b.k)
    if a.family == 0b00 and b.family == 0b00:
        return ParamEq.e00(k, gcd(a.ell, b.ell))
    family = a.family | b.family
    bullet = a.parity is Parity.BULLET or b.parity is Parity.BULLET
    return ParamEq(family, Parity.BULLET if bullet else Parity.CIRC, k)


def reduce_presentation(relations: Iterable[GenericEquation]) -> CanonicalPresentation:
    relations = list(relations)
    if not relations:
        return Free()
    cases = []
    for e in relations:
        v = detect_degenerate(e)
        if v.degenerate:
            cases.append(v.case)
    if cases:
        return Monogenic(tuple(cases))
    return Classified(_fold(meet, (to_param(e) for e in relations)))


def classify(texts: Iterable[str]) -> CanonicalPresentation:
    """Parse textual relations and reduce them."""
    return reduce_presentation(parse_equation(t) for t in texts)
