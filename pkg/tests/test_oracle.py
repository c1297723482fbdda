import pytest

from pim.errors import BoundTooSmall
from pim.monoid import build, hilbert
from pim.oracle import DisjointSet, Undetermined, congruence_monoid, default_bound, is_monogenic
from pim.iso import generator_preserving_isomorphic
from pim.reduce import classify

from cases import DEGENERATE_MIN_K, degenerate_words


def test_disjoint_set():
    uf = DisjointSet(5)
    uf.union(3, 1)
    uf.union(4, 3)
    assert uf.find(4) == 1
    assert uf.find(0) == 0


def test_kuratowski_relation():
    m = congruence_monoid([("DBDB", "DBDBDBDB")], 20)
    assert len(m) == 14
    assert generator_preserving_isomorphic(m, build(classify(["DBDB=DBDBDBDB"])))


def test_small_relation():
    m = congruence_monoid([("DB", "B")], 10)
    assert sorted(m.elements) == sorted(["", "D", "B", "BD"])


def test_free_is_undetermined():
    r = congruence_monoid([], 6)
    assert isinstance(r, Undetermined)
    assert not r


def test_bound_too_small():
    with pytest.raises(BoundTooSmall):
        congruence_monoid([("DBDB", "DBDBDBDB")], 12)


def test_default_bound():
    assert default_bound([("DB", "BDB")]) == 8


def test_independent_of_bound():
    a = congruence_monoid([("DB", "BDB")], 10)
    b = congruence_monoid([("DB", "BDB")], 16)
    assert a.elements == b.elements and a.table == b.table


def test_oracle_grading_matches_hilbert():
    for text in ["DB=DBDBD", "DBDB=BD", "DB=BDBD"]:
        m = congruence_monoid([tuple(text.split("="))], 16)
        assert m.grading() == list(hilbert(classify([text])).coeffs)


@pytest.mark.parametrize("case", range(1, 8))
def test_degenerate_items_are_monogenic(case):
    for k in range(DEGENERATE_MIN_K[case], 3):
        u, v = degenerate_words(case, k)
        m = congruence_monoid([(u, v)], max(12, 2 * max(len(u), len(v)) + 4))
        assert m and is_monogenic(m), (case, k)


def test_is_monogenic_negative():
    assert not is_monogenic(build(classify(["DB=BD"])))
