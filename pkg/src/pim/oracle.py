"""Bounded congruence closure: the monoid of an explicit presentation, by brute force.

This module deliberately knows nothing about canonical relations or normal
forms.  It merges words related by one application of a relation, keeps
every word inside the length bound, then checks that the resulting classes
really carry a monoid structure before returning it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BoundTooSmall
from .monoid import FiniteMonoid, generate
from .word import INV, IDEM, alternating_words, check_word, quasi_reduce

__all__ = ["Undetermined", "DisjointSet", "congruence_monoid", "default_bound", "is_monogenic"]

BASE_RELATIONS = ((INV + INV, ""), (IDEM + IDEM, IDEM))


@dataclass(frozen=True)
class Undetermined:
    """The closure did not stabilise within the bound (too small, or infinite monoid)."""

    reason: str

    def __bool__(self) -> bool:
        return False


class DisjointSet:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller root wins so that class ids stay stable
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


def _shortlex(w: str) -> tuple[int, str]:
    # D sorts before B
    return len(w), w.replace("D", "0").replace("B", "1")


def default_bound(relations: Sequence[tuple[str, str]]) -> int:
    longest = max((max(len(u), len(v)) for u, v in relations), default=0)
    return 2 + 2 * longest


def congruence_monoid(relations: Iterable[tuple[str, str]], bound: int) -> FiniteMonoid | Undetermined:
    """Monoid presented by ``DD=Id, BB=B`` and ``relations``, or ``Undetermined``.

    Words are handled modulo the two base relations (which only shorten), so
    the universe is the set of quasi-reduced words of length <= ``bound``.
    """
    rels = [(check_word(u), check_word(v)) for u, v in relations]
    longest = max((max(len(u), len(v)) for u, v in rels), default=0)
    if bound < 2 + 2 * longest:
        raise BoundTooSmall(f"bound {bound} < 2 + 2*{longest}")

    words = alternating_words(bound)
    index = {w: i for i, w in enumerate(words)}
    uf = DisjointSet(len(words))

    # x u y ~ x v y for every context that fits in the bound
    for u, v in rels:
        span = max(len(u), len(v))
        for x in words:
            if len(x) + span > bound:
                break
            for y in words:
                if len(x) + span + len(y) > bound:
                    break
                uf.union(index[quasi_reduce(x + u + y)], index[quasi_reduce(x + v + y)])

    members: dict[int, list[str]] = {}
    for w in words:
        members.setdefault(uf.find(index[w]), []).append(w)
    reps = {root: min(ws, key=_shortlex) for root, ws in members.items()}

    for root, r in reps.items():
        if len(r) > bound - longest:
            return Undetermined(f"class of {r or 'Id'} has no representative within bound - {longest}")
        for g in (INV, IDEM):
            if len(quasi_reduce(r + g)) > bound:
                return Undetermined(f"{r or 'Id'}·{g} leaves the bound {bound}")

    def act(root: int, g: str) -> int:
        return uf.find(index[quasi_reduce(reps[root] + g)])

    def run(root: int, word: str) -> int:
        for ch in word:
            root = act(root, ch)
        return root

    one = uf.find(index[""])
    for w in words:
        if run(one, w) != uf.find(index[w]):
            return Undetermined(f"right action disagrees with class of {w or 'Id'}")
    for root in reps:
        for u, v in list(BASE_RELATIONS) + rels:
            if run(root, u) != run(root, v):
                return Undetermined(f"relation {u or 'Id'}={v or 'Id'} fails on class of {reps[root] or 'Id'}")

    return generate(one, [lambda c: act(c, INV), lambda c: act(c, IDEM)], label=lambda c, _: reps[c])


def is_monogenic(m: FiniteMonoid) -> bool:
    """True when some single element generates all of ``m`` (identity included as its 0th power)."""
    n, t = len(m), m.table
    for x in range(n):
        seen = {m.identity}
        y = m.identity
        while True:
            y = t[y][x]
            if y in seen:
                break
            seen.add(y)
        if len(seen) == n:
            return True
    return False
