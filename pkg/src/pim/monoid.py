"""Finite strict 2-PIMs: construction from canonical relations, orders, Hilbert series."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

from .equation import Parity, ParamEq
from .errors import CapExceeded, NotFinite, Unsupported
from .reduce import CanonicalPresentation, Classified, Free, Monogenic
from .word import INV, IDEM, check_word, quasi_reduce

__all__ = [
    "FiniteMonoid",
    "HilbertSeries",
    "generate",
    "rewrite_rule",
    "rewrite_rules",
    "normal_form",
    "build",
    "order",
    "hilbert",
]


@dataclass(frozen=True)
class FiniteMonoid:
    """A finite monoid given by its multiplication table.

    ``elements[i]`` is a shortest word over ``letters`` naming element ``i``;
    ``generators[j]`` is the element of letter ``letters[j]``.
    """

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    generators: tuple[int, ...] = ()
    letters: str = INV + IDEM
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "table", tuple(tuple(r) for r in self.table))
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "_index", {w: i for i, w in enumerate(self.elements)})

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def _gen(self, letter: str) -> int | None:
        i = self.letters.find(letter)
        return self.generators[i] if 0 <= i < len(self.generators) else None

    @property
    def gen_inv(self) -> int | None:
        return self._gen(INV)

    @property
    def gen_idem(self) -> int | None:
        return self._gen(IDEM)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def evaluate(self, word: str, start: int | None = None) -> int:
        x = self.identity if start is None else start
        for ch in word:
            x = self.table[x][self.generators[self.letters.index(ch)]]
        return x

    def index(self, word: str) -> int:
        return self._index[word]

    def is_associative(self) -> bool:
        t = self.table
        n = len(t)
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))

    def problems(self) -> list[str]:
        """Violated structural invariants; empty when the table is a valid monoid."""
        out = []
        n, t, e = len(self), self.table, self.identity
        if any(len(row) != n for row in t) or len(t) != n:
            return ["table is not n x n"]
        if any(t[e][x] != x or t[x][e] != x for x in range(n)):
            out.append("identity row/column broken")
        if not self.is_associative():
            out.append("table not associative")
        if self.gen_inv is not None and t[self.gen_inv][self.gen_inv] != e:
            out.append("involution generator does not square to identity")
        if self.gen_idem is not None and t[self.gen_idem][self.gen_idem] != self.gen_idem:
            out.append("idempotent generator is not idempotent")
        seen, frontier = {e}, [e]
        while frontier:
            x = frontier.pop()
            for g in self.generators:
                y = t[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if len(seen) != n:
            out.append(f"{n - len(seen)} elements unreachable from the generators")
        return out

    def grading(self) -> list[int]:
        """Count of elements by length of their (shortest) naming word."""
        counts = Counter(len(w) for w in self.elements)
        return [counts.get(d, 0) for d in range(max(counts) + 1)]

    def graded_elements(self) -> list[list[str]]:
        cols: list[list[str]] = [[] for _ in range(max(len(w) for w in self.elements) + 1)]
        for w in self.elements:
            cols[len(w)].append(w)
        return cols

    def to_text(self) -> str:
        lines = [f"n={len(self)}", " ".join(w or "Id" for w in self.elements)]
        lines += [" ".join(map(str, row)) for row in self.table]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> FiniteMonoid:
        lines = text.strip("\n").split("\n")
        if not lines[0].startswith("n="):
            raise ValueError("first line must be n=<order>")
        n = int(lines[0][2:])
        words = ["" if w == "Id" else check_word(w) for w in lines[1].split()]
        table = [tuple(int(x) for x in line.split()) for line in lines[2:]]
        if len(words) != n or len(table) != n:
            raise ValueError(f"expected {n} elements and {n} table rows")
        identity = words.index("")
        gens = tuple(words.index(g) if g in words else identity for g in (INV, IDEM))
        return cls(tuple(words), tuple(table), identity, gens)


def generate(
    identity: Hashable,
    actions: Sequence[Callable[[Hashable], Hashable]],
    letters: str = INV + IDEM,
    cap: int | None = None,
    label: Callable[[Hashable, str], str] | None = None,
) -> FiniteMonoid:
    """Breadth-first closure of ``identity`` under right actions of the generators.

    ``actions[j](x)`` is ``x`` right-multiplied by generator ``letters[j]``; keys
    must be hashable and equal exactly when they denote the same element.
    Element ids follow discovery order, so ``elements`` are shortlex-least
    words in the order of ``letters``.
    """
    if len(actions) != len(letters):
        raise ValueError("one action per letter")
    keys = [identity]
    ids = {identity: 0}
    words = [""]
    parent: list[tuple[int, int]] = [(-1, -1)]
    step: list[list[int]] = []
    i = 0
    while i < len(keys):
        row = []
        for j, act in enumerate(actions):
            y = act(keys[i])
            if y not in ids:
                if cap is not None and len(keys) >= cap:
                    raise CapExceeded(f"more than {cap} elements")
                ids[y] = len(keys)
                keys.append(y)
                words.append(words[i] + letters[j])
                parent.append((i, j))
            row.append(ids[y])
        step.append(row)
        i += 1
    n = len(keys)
    # table[a][b] = table[a][parent(b)] * last letter of b
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        ta = table[a]
        ta[0] = a
        for b in range(1, n):
            p, j = parent[b]
            ta[b] = step[ta[p]][j]
    if label is not None:
        words = [label(k, w) for k, w in zip(keys, words)]
    generators = tuple(step[0])
    return FiniteMonoid(tuple(words), tuple(map(tuple, table)), 0, generators, letters)


def rewrite_rule(p: ParamEq) -> tuple[str, str]:
    """Directed rule ``(longer, shorter)`` equivalent to ``p`` under the base relations.

    For 11-circ and 11-bullet both sides have equal length; the rule then
    rewrites the B-initial word to the D-initial one.
    """
    k = p.k
    circ = p.parity is Parity.CIRC
    if p.family == 0b00:
        return "B" + "DB" * (k + p.ell - 1), "B" + "DB" * (k - 1)
    if p.family == 0b01:
        return ("BD" * k + "B", "BD" * k) if circ else ("BD" * k, "BD" * (k - 1) + "B")
    if p.family == 0b10:
        return ("BD" * k + "B", "DB" * k) if circ else ("DB" * k, "B" + "DB" * (k - 1))
    return ("BD" * k, "DB" * k) if circ else ("BD" * k + "B", "DB" * k + "D")


def rewrite_rules(p: ParamEq) -> tuple[tuple[str, str], ...]:
    """Complete rewriting system for ``p`` on alternating words.

    Every family needs one rule except 11-bullet.  There the single rule of
    ``rewrite_rule`` overlaps with itself (``B`` times its left side rewrites
    two ways) and completing it collapses both length-2k words onto
    ``(BD)^(k-1) B``.
    """
    if p.family == 0b11 and p.parity is Parity.BULLET:
        k = p.k
        target = "BD" * (k - 1) + "B"
        return (("DB" * k, target), ("BD" * k, target))
    return (rewrite_rule(p),)


def normal_form(word: str, rules) -> str:
    """Rewrite ``word`` to normal form; ``rules`` is one (lhs, rhs) pair or a sequence of them."""
    if isinstance(rules[0], str):
        rules = (rules,)
    w = quasi_reduce(word)
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            if lhs in w:
                w = quasi_reduce(w.replace(lhs, rhs, 1))
                changed = True
    return w


def _require_classified(c: CanonicalPresentation) -> ParamEq:
    if isinstance(c, Free):
        raise NotFinite("the free strict 2-PIM is infinite")
    if isinstance(c, Monogenic):
        raise Unsupported("monogenic presentation: no normal forms, use the congruence oracle")
    if not isinstance(c, Classified):
        raise TypeError(f"not a canonical presentation: {c!r}")
    return c.param


def build(c: CanonicalPresentation) -> FiniteMonoid:
    p = _require_classified(c)
    rules = rewrite_rules(p)
    return generate(
        "",
        [lambda w: normal_form(w + INV, rules), lambda w: normal_form(w + IDEM, rules)],
        label=lambda key, _: key,
    )


@dataclass(frozen=True)
class HilbertSeries:
    """Coefficients of the length-graded generating polynomial."""

    coeffs: tuple[int, ...]
    truncated: bool = False

    def __call__(self, t):
        return sum(c * t**n for n, c in enumerate(self.coeffs))

    @property
    def order(self) -> int:
        if self.truncated:
            raise NotFinite("truncated series of an infinite monoid")
        return sum(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            terms.append(str(c) if n == 0 else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(terms) + (" + ..." if self.truncated else "")


def top_degree(p: ParamEq) -> int:
    """Length of the longest normal form."""
    if p.family == 0b00:
        return 2 * (p.k + p.ell - 1) + 1
    if p.family == 0b11:
        # 11-bullet: 4k-1 elements, not 4k+2
        return 2 * p.k if p.parity is Parity.CIRC else 2 * p.k - 1
    # 01 and 10: circ has 4k+2 elements, bullet 4k
    return 2 * p.k + 1 if p.parity is Parity.CIRC else 2 * p.k


def hilbert(c: CanonicalPresentation, max_degree: int | None = None) -> HilbertSeries:
    if isinstance(c, Free):
        if max_degree is None:
            raise NotFinite("the free strict 2-PIM needs max_degree to truncate its series")
        return HilbertSeries(tuple([1] + [2] * max_degree), truncated=True)
    p = _require_classified(c)
    top = top_degree(p)
    coeffs = [1] + [2] * (top - 1) + [1]
    if p.family == 0b11 and p.parity is Parity.BULLET:
        # both alternating words of top length survive
        coeffs[-1] = 2
    if max_degree is not None:
        coeffs = coeffs[: max_degree + 1]
    return HilbertSeries(tuple(coeffs))


def order(c: CanonicalPresentation) -> int:
    _require_classified(c)
    return sum(hilbert(c).coeffs)
