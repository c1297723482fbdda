"""Strict 2-PIMs: monoids generated by one involution ``D`` and one idempotent ``B``.

Relations are classified into a handful of one- or two-parameter families,
each with an explicit finite monoid, Hilbert series and order.
"""

from .equation import GenericEquation, ParamEq, Parity, detect_degenerate, parse_equation, to_param
from .iso import brute_force_isomorphic, isomorphic
from .monoid import FiniteMonoid, build, hilbert, order
from .oracle import Undetermined, congruence_monoid
from .reduce import Classified, Free, Monogenic, classify, meet, reduce_presentation

__all__ = [
    "GenericEquation",
    "ParamEq",
    "Parity",
    "parse_equation",
    "detect_degenerate",
    "to_param",
    "Free",
    "Monogenic",
    "Classified",
    "classify",
    "meet",
    "reduce_presentation",
    "FiniteMonoid",
    "build",
    "hilbert",
    "order",
    "isomorphic",
    "brute_force_isomorphic",
    "congruence_monoid",
    "Undetermined",
]
