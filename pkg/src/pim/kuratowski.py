"""Closure and complement on finite topological spaces.

Subsets of ``{0..n-1}`` are bitmasks.  An operation is the tuple of its
values on all ``2**n`` masks.  Operators compose left to right: the word
``DB`` means "complement, then close", with ``D`` the complement and ``B``
the closure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .equation import Parity, ParamEq
from .errors import InvalidTopology
from .iso import brute_force_isomorphic
from .monoid import FiniteMonoid, build, generate, order
from .reduce import CanonicalPresentation, Classified

__all__ = [
    "FiniteTopology",
    "SetOperation",
    "Violation",
    "OrbitReport",
    "CONVENTION",
    "validate_topology",
    "closure_op",
    "complement_op",
    "operation_monoid",
    "orbit",
    "classify_orbit",
    "max_point_orbit",
    "parse_topology",
    "format_topology",
    "read_topology",
    "all_topologies",
    "random_topology",
    "generate_topology",
    "find_fourteen",
    "mask_to_set",
]

MAX_N = 16
CONVENTION = "words act left to right: DB = complement, then closure"


def mask_to_set(mask: int) -> str:
    return "{" + ",".join(str(i) for i in range(mask.bit_length()) if mask >> i & 1) + "}"


@dataclass(frozen=True)
class FiniteTopology:
    n: int
    opens: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "opens", frozenset(self.opens))

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @classmethod
    def discrete(cls, n: int) -> FiniteTopology:
        return cls(n, frozenset(range(1 << n)))

    @classmethod
    def indiscrete(cls, n: int) -> FiniteTopology:
        return cls(n, frozenset({0, (1 << n) - 1}))


@dataclass(frozen=True)
class Violation:
    axiom: str
    subsets: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.axiom}: " + " ".join(mask_to_set(s) for s in self.subsets)


def validate_topology(t: FiniteTopology) -> Violation | None:
    """None when ``t`` is a topology, else the first failed axiom."""
    if not 1 <= t.n <= MAX_N:
        return Violation(f"ground-set size {t.n} outside 1..{MAX_N}", ())
    outside = sorted(s for s in t.opens if s < 0 or s > t.full)
    if outside:
        return Violation("open set not a subset of the ground set", tuple(outside))
    if 0 not in t.opens:
        return Violation("empty set missing", ())
    if t.full not in t.opens:
        return Violation("full set missing", ())
    opens = sorted(t.opens)
    for a, b in combinations(opens, 2):
        if a | b not in t.opens:
            return Violation("not closed under union", (a, b))
    for a, b in combinations(opens, 2):
        if a & b not in t.opens:
            return Violation("not closed under intersection", (a, b))
    return None


def _require_valid(t: FiniteTopology) -> None:
    v = validate_topology(t)
    if v is not None:
        raise InvalidTopology(str(v))


@dataclass(frozen=True)
class SetOperation:
    n: int
    table: tuple[int, ...]

    def __call__(self, mask: int) -> int:
        return self.table[mask]

    def then(self, other: SetOperation) -> SetOperation:
        """Apply ``self`` first, then ``other``."""
        return SetOperation(self.n, tuple(other.table[x] for x in self.table))

    @classmethod
    def identity(cls, n: int) -> SetOperation:
        return cls(n, tuple(range(1 << n)))


def closure_op(t: FiniteTopology) -> SetOperation:
    _require_valid(t)
    full = t.full
    closed = [full ^ u for u in t.opens]
    table = []
    for a in range(1 << t.n):
        c = full
        for s in closed:
            if a & ~s == 0:
                c &= s
        table.append(c)
    return SetOperation(t.n, tuple(table))


def complement_op(n: int) -> SetOperation:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be in 1..{MAX_N}")
    full = (1 << n) - 1
    return SetOperation(n, tuple(full ^ a for a in range(1 << n)))


def operation_monoid(gens: Sequence[SetOperation], cap: int | None = None, letters: str | None = None) -> FiniteMonoid:
    """Monoid of all composites of ``gens``; element words read left to right."""
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators act on different ground sets")
    if letters is None:
        letters = "abcdefghijklmnopqrstuvwxyz"[: len(gens)]
    actions = [lambda x, g=g: tuple(g.table[v] for v in x) for g in gens]
    return generate(SetOperation.identity(n).table, actions, letters=letters, cap=cap)


def _kuratowski_monoid(t: FiniteTopology) -> FiniteMonoid:
    return operation_monoid([complement_op(t.n), closure_op(t)], letters="DB")


def orbit(t: FiniteTopology, a: int, ops: tuple[SetOperation, SetOperation] | None = None) -> set[int]:
    comp, clo = ops or (complement_op(t.n), closure_op(t))
    seen, todo = {a}, [a]
    while todo:
        x = todo.pop()
        for y in (comp.table[x], clo.table[x]):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def max_point_orbit(t: FiniteTopology) -> tuple[int, int]:
    """First subset (in mask order) whose orbit is largest, with that orbit's size."""
    _require_valid(t)
    ops = (complement_op(t.n), closure_op(t))
    best, best_size = 0, 0
    for a in range(1 << t.n):
        size = len(orbit(t, a, ops))
        if size > best_size:
            best, best_size = a, size
    return best, best_size


def _candidates(n_elements: int) -> list[ParamEq]:
    out = []
    for k in range(1, n_elements):
        for ell in range(1, n_elements):
            if 4 * (k + ell) - 2 == n_elements:
                out.append(ParamEq.e00(k, ell))
        for fam in (0b01, 0b10, 0b11):
            for par in Parity:
                p = ParamEq(fam, par, k)
                if order(Classified(p)) == n_elements:
                    out.append(p)
    return out


@dataclass(frozen=True)
class OrbitReport:
    order: int
    presentation: CanonicalPresentation | None
    description: str
    subset: int
    orbit_size: int

    def to_text(self) -> str:
        return "\n".join(
            [
                f"convention: {CONVENTION}",
                f"order={self.order}",
                f"class={self.description}",
                f"max_orbit={self.orbit_size} subset={mask_to_set(self.subset)}",
            ]
        ) + "\n"


def classify_orbit(t: FiniteTopology) -> OrbitReport:
    _require_valid(t)
    m = _kuratowski_monoid(t)
    subset, size = max_point_orbit(t)
    if m.gen_idem == m.identity:
        return OrbitReport(len(m), None, "generated by involution alone", subset, size)
    for p in _candidates(len(m)):
        if brute_force_isomorphic(m, build(Classified(p))):
            c = Classified(p)
            return OrbitReport(len(m), c, str(c), subset, size)
    return OrbitReport(len(m), None, "monogenic/other", subset, size)


def parse_topology(text: str) -> FiniteTopology:
    """Parse ``n=<int>`` then one open set per line (``0,2`` or ``{0,2}``; ``{}`` is empty)."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise InvalidTopology("first line must be n=<int>")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise InvalidTopology(f"bad size line {lines[0]!r}") from None
    opens = set()
    for ln in lines[1:]:
        body = ln.strip("{}").strip()
        mask = 0
        if body:
            for tok in body.split(","):
                try:
                    i = int(tok)
                except ValueError:
                    raise InvalidTopology(f"bad element {tok!r} in line {ln!r}") from None
                if not 0 <= i < n:
                    raise InvalidTopology(f"element {i} outside 0..{n - 1}")
                mask |= 1 << i
        opens.add(mask)
    return FiniteTopology(n, frozenset(opens))


def format_topology(t: FiniteTopology) -> str:
    lines = [f"n={t.n}"]
    for s in sorted(t.opens, key=lambda m: (bin(m).count("1"), m)):
        lines.append(mask_to_set(s) if s == 0 else ",".join(str(i) for i in range(t.n) if s >> i & 1))
    return "\n".join(lines) + "\n"


def read_topology(path: str | Path) -> FiniteTopology:
    return parse_topology(Path(path).read_text())


def generate_topology(n: int, subbase: Iterable[int]) -> FiniteTopology:
    """Smallest topology containing ``subbase``: close under pairwise union and intersection."""
    full = (1 << n) - 1
    opens = {0, full} | set(subbase)
    while True:
        new = {a | b for a in opens for b in opens} | {a & b for a in opens for b in opens}
        if new <= opens:
            return FiniteTopology(n, frozenset(opens))
        opens |= new


def random_topology(n: int, rng: random.Random, max_generators: int = 4) -> FiniteTopology:
    full = (1 << n) - 1
    k = rng.randint(0, max_generators)
    return generate_topology(n, [rng.randint(0, full) for _ in range(k)])


def all_topologies(n: int) -> list[FiniteTopology]:
    full = (1 << n) - 1
    middle = list(range(1, full))
    out = []
    for bits in range(1 << len(middle)):
        opens = {0, full} | {m for i, m in enumerate(middle) if bits >> i & 1}
        t = FiniteTopology(n, frozenset(opens))
        if validate_topology(t) is None:
            out.append(t)
    return out


def find_fourteen(max_n: int = 7, seed: int = 0, attempts: int = 20000) -> tuple[FiniteTopology, int] | None:
    """Deterministic random search for a topology with a 14-element orbit."""
    rng = random.Random(seed)
    for _ in range(attempts):
        n = rng.randint(1, max_n)
        t = random_topology(n, rng, max_generators=5)
        subset, size = max_point_orbit(t)
        if size == 14:
            return t, subset
    return None
