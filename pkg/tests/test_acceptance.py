"""End-to-end acceptance checks, one test per criterion.

Each test prints a ``criterion N PASS`` or ``criterion N FAIL`` line
(visible with ``pytest -s`` or ``-v``) and enforces its time limit.
"""

import itertools
import random
import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from pim.equation import ParamEq, Parity
from pim.iso import brute_force_isomorphic, generator_preserving_isomorphic, involutions
from pim.kuratowski import (
    all_topologies,
    closure_op,
    complement_op,
    find_fourteen,
    max_point_orbit,
    operation_monoid,
    random_topology,
    read_topology,
)
from pim.monoid import build, hilbert, order
from pim.oracle import congruence_monoid, is_monogenic
from pim.reduce import Classified, classify, meet
from pim.witness import CASES, check_relation, instances, matrix_monoid, separation, witness_for

from cases import DEGENERATE_MIN_K, bound_for, degenerate_words, params

CIRC, BULLET = Parity.CIRC, Parity.BULLET
FIXTURE = Path(__file__).parent / "data" / "kuratowski14.top"


@contextmanager
def criterion(capsys, number: int, title: str, limit: float):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\ncriterion {number} {'PASS' if ok else 'FAIL'}: {title} ({elapsed:.2f}s)")


def note(capsys, text: str) -> None:
    with capsys.disabled():
        print(f"  note: {text}")


def test_criterion_1_kuratowski_order(capsys):
    with criterion(capsys, 1, "(DB)^2=(DB)^4 gives 00(2,2) of order 14", 1.0):
        c = classify(["DBDB=DBDBDBDB"])
        assert c == Classified(ParamEq.e00(2, 2))
        assert order(c) == 14
        m = congruence_monoid([("DBDB", "DBDBDBDB")], 20)
        assert m and len(m) == 14


def test_criterion_2_hilbert_fixture(capsys):
    expected = [
        [""],
        ["D", "B"],
        ["DB", "BD"],
        ["DBD", "BDB"],
        ["DBDB", "BDBD"],
        ["DBDBD", "BDBDB"],
        ["DBDBDB", "BDBDBD"],
        ["DBDBDBD"],
    ]
    with criterion(capsys, 2, "Hilbert series and graded elements of 00(2,2)", 1.0):
        c = Classified(ParamEq.e00(2, 2))
        assert list(hilbert(c).coeffs) == [1, 2, 2, 2, 2, 2, 2, 1]
        assert build(c).graded_elements() == expected


def test_criterion_3_construction_matches_oracle(capsys):
    ps = params(3)
    # parity is fixed by ell in family 00, so k, ell in 1..3 give 9 instances
    assert sum(p.family == 0b00 for p in ps) == 9 and len(ps) == 27
    with criterion(capsys, 3, f"build == congruence oracle for all {len(ps)} classes with parameters <= 3", 60.0):
        for p in ps:
            c = Classified(p)
            m = build(c)
            o = congruence_monoid([p.words()], bound_for(p))
            assert o, f"{p}: {o}"
            assert generator_preserving_isomorphic(m, o), str(p)
            assert len(m) == hilbert(c)(1) == order(c), str(p)


def _table_order(p: ParamEq) -> int:
    """Orders as listed in the reference order table (00 row corrected, see note)."""
    k = p.k
    if p.family == 0b00:
        return 4 * (k + p.ell) - 2
    return {
        (0b01, CIRC): 4 * k + 2,
        (0b01, BULLET): 4 * k,
        (0b10, CIRC): 4 * k + 2,
        (0b10, BULLET): 4 * k,
        (0b11, CIRC): 4 * k,
        (0b11, BULLET): 4 * k + 2,
    }[p.family, p.parity]


@pytest.mark.xfail(
    strict=True,
    reason="the table lists 4k+2 for the 11-bullet family; its relation only presents 4k-1 elements",
)
def test_criterion_4_order_table(capsys):
    with criterion(capsys, 4, "orders agree with the reference order table", 10.0):
        mismatches = []
        for k in (1, 2, 3):
            ps = [ParamEq.e00(k, r) for r in (1, 2, 3)]
            ps += [ParamEq(f, s, k) for f in (0b01, 0b10, 0b11) for s in Parity]
            for p in ps:
                o = congruence_monoid([p.words()], bound_for(p))
                assert o, str(p)
                assert order(Classified(p)) == len(o), str(p)
                if p.family == 0b00:
                    literal = 2 * k + 2 * p.ell - 2
                    assert len(o) == 4 * (k + p.ell) - 2
                    if literal != len(o):
                        note(capsys, f"00 k={k} r={p.ell}: oracle {len(o)}, table formula 2k+2r-2 gives {literal}")
                if len(o) != _table_order(p):
                    mismatches.append(f"{p}: oracle {len(o)}, table {_table_order(p)}")
        for m in mismatches:
            note(capsys, m)
        assert not mismatches


def test_criterion_5_meet_soundness(capsys):
    ps = params(2)
    with criterion(capsys, 5, f"meet agrees with the oracle on all {len(ps) ** 2} ordered pairs", 120.0):
        pairs = list(itertools.product(ps, repeat=2))
        pairs.append((ParamEq.e00(2, 4), ParamEq.e00(3, 6)))
        assert meet(ParamEq.e00(2, 4), ParamEq.e00(3, 6)) == ParamEq.e00(2, 2)
        for a, b in pairs:
            m = meet(a, b)
            L = bound_for(a, b)
            joint = congruence_monoid([a.words(), b.words()], L)
            single = congruence_monoid([m.words()], L)
            assert joint and single, (str(a), str(b))
            assert generator_preserving_isomorphic(joint, single), (str(a), str(b), str(m))


def test_criterion_6_degenerate_cases(capsys):
    with criterion(capsys, 6, "every degenerate relation presents a monogenic monoid", 10.0):
        for case in range(1, 8):
            for k in range(DEGENERATE_MIN_K[case], 3):
                u, v = degenerate_words(case, k)
                m = congruence_monoid([(u, v)], max(12, 2 * max(len(u), len(v)) + 4))
                assert m, (case, k)
                assert is_monogenic(m), (case, k)


def test_criterion_7_classification(capsys):
    ps = params(2)
    with criterion(capsys, 7, "monoids isomorphic exactly when descriptors agree (parameters <= 2)", 60.0):
        built = {p: build(Classified(p)) for p in ps}
        for p, q in itertools.product(ps, repeat=2):
            assert brute_force_isomorphic(built[p], built[q]) == (p == q), (str(p), str(q))
        for k in (1, 2):
            trio = [built[ParamEq(0b01, CIRC, k)], built[ParamEq(0b10, CIRC, k)], built[ParamEq(0b11, BULLET, k)]]
            for m, n in itertools.combinations(trio, 2):
                assert not brute_force_isomorphic(m, n)


def test_criterion_8_unique_involution(capsys):
    with criterion(capsys, 8, "D is the only involution in every class with parameters <= 3", 5.0):
        for p in params(3):
            m = build(Classified(p))
            assert len(involutions(m)) == 1, str(p)


def test_criterion_9_matrix_witnesses(capsys):
    with criterion(capsys, 9, "matrix witnesses satisfy and violate the expected classes", 5.0):
        for tag in CASES:
            pair = witness_for(tag)
            holds, fails = separation(tag)
            for k in range(1, 5):
                for c in holds:
                    assert all(check_relation(pair, p) for p in instances(c, k)), (tag, c, k)
                for c in fails:
                    assert not any(check_relation(pair, p) for p in instances(c, k)), (tag, c, k)
            assert len(matrix_monoid(pair, 64)) <= 64


def test_criterion_10_kuratowski_bound(capsys):
    with criterion(capsys, 10, "closure/complement orbits never exceed 14 and 14 is reached", 120.0):
        rng = random.Random(20240501)
        tops = [random_topology(rng.randint(1, 5), rng) for _ in range(100)]
        tops += [t for n in (1, 2, 3) for t in all_topologies(n)]
        for t in tops:
            assert len(operation_monoid([complement_op(t.n), closure_op(t)])) <= 14
            assert max_point_orbit(t)[1] <= 14
        found = find_fourteen()
        assert found is not None
        t, subset = found
        assert max_point_orbit(t) == (subset, 14)
        assert read_topology(FIXTURE) == t
