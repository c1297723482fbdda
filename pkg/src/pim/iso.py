"""Isomorphism of strict 2-PIMs, by descriptor and by brute force on tables."""

from __future__ import annotations

from itertools import product

from .errors import Unsupported
from .monoid import FiniteMonoid
from .reduce import CanonicalPresentation, Classified, Free, Monogenic

__all__ = [
    "isomorphic",
    "involutions",
    "idempotents",
    "extend_homomorphism",
    "find_isomorphism",
    "brute_force_isomorphic",
    "generator_preserving_isomorphic",
]


def isomorphic(p: CanonicalPresentation, q: CanonicalPresentation) -> bool:
    """Decide isomorphism from canonical descriptors alone."""
    if isinstance(p, Monogenic) or isinstance(q, Monogenic):
        raise Unsupported("monogenic presentations are not tracked up to isomorphism")
    if isinstance(p, Free) or isinstance(q, Free):
        return isinstance(p, Free) and isinstance(q, Free)
    if isinstance(p, Classified) and isinstance(q, Classified):
        return p.param == q.param
    raise TypeError(f"not canonical presentations: {p!r}, {q!r}")


def involutions(m: FiniteMonoid) -> list[int]:
    t, e = m.table, m.identity
    return [x for x in range(len(m)) if x != e and t[x][x] == e]


def idempotents(m: FiniteMonoid) -> list[int]:
    t = m.table
    return [x for x in range(len(m)) if t[x][x] == x]


def extend_homomorphism(m: FiniteMonoid, n: FiniteMonoid, images: tuple[int, ...]) -> list[int] | None:
    """Extend ``m.generators[j] -> images[j]`` along the table of ``m``.

    Returns the element map, or None if the assignment is inconsistent with
    right multiplication by the generators (so it is no homomorphism).
    """
    tm, tn = m.table, n.table
    phi = [-1] * len(m)
    phi[m.identity] = n.identity
    queue = [m.identity]
    for x in queue:
        for g, h in zip(m.generators, images):
            y, img = tm[x][g], tn[phi[x]][h]
            if phi[y] < 0:
                phi[y] = img
                queue.append(y)
            elif phi[y] != img:
                return None
    if min(phi) < 0:
        return None
    return phi


def _is_isomorphism(m: FiniteMonoid, n: FiniteMonoid, phi: list[int]) -> bool:
    if len(set(phi)) != len(n):
        return False
    tm, tn = m.table, n.table
    size = len(m)
    return all(phi[tm[a][b]] == tn[phi[a]][phi[b]] for a in range(size) for b in range(size))


def _candidates(m: FiniteMonoid, n: FiniteMonoid, g: int, prune: bool) -> list[int]:
    tm, tn = m.table, n.table
    e = m.identity
    if g == e:
        return [n.identity]
    if tm[g][g] == e:
        # a non-identity involution can only go to one
        return involutions(n) if prune else [x for x in range(len(n)) if tn[x][x] == n.identity]
    if tm[g][g] == g:
        return idempotents(n)
    return list(range(len(n)))


def find_isomorphism(m: FiniteMonoid, n: FiniteMonoid, prune: bool = True) -> list[int] | None:
    if len(m) != len(n):
        return None
    pools = [_candidates(m, n, g, prune) for g in m.generators]
    for images in product(*pools):
        phi = extend_homomorphism(m, n, images)
        if phi is not None and _is_isomorphism(m, n, phi):
            return phi
    return None


def brute_force_isomorphic(m: FiniteMonoid, n: FiniteMonoid, prune: bool = True) -> bool:
    """True iff some bijective homomorphism ``m -> n`` exists.

    With ``prune`` the involution generator only tries non-identity
    involutions of ``n`` as images; ``prune=False`` tries every ``x`` with
    ``x*x = identity``.
    """
    return find_isomorphism(m, n, prune) is not None


def generator_preserving_isomorphic(m: FiniteMonoid, n: FiniteMonoid) -> bool:
    """True iff the map sending each generator of ``m`` to the same-letter generator of ``n`` is an isomorphism."""
    if len(m) != len(n) or m.letters != n.letters:
        return False
    phi = extend_homomorphism(m, n, n.generators)
    return phi is not None and _is_isomorphism(m, n, phi)
