import itertools

import pytest

from pim.equation import ParamEq, Parity, parse_equation
from pim.iso import generator_preserving_isomorphic
from pim.oracle import congruence_monoid
from pim.reduce import Classified, Free, Monogenic, classify, meet, reduce_presentation

from cases import bound_for, params

CIRC, BULLET = Parity.CIRC, Parity.BULLET
SMALL = params(2)


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (ParamEq(0b01, CIRC, 2), ParamEq(0b10, CIRC, 3), ParamEq(0b11, CIRC, 2)),
        (ParamEq(0b01, CIRC, 2), ParamEq(0b01, BULLET, 3), ParamEq(0b01, BULLET, 2)),
        (ParamEq.e00(2, 4), ParamEq.e00(3, 6), ParamEq.e00(2, 2)),
        (ParamEq.e00(1, 3), ParamEq(0b10, CIRC, 2), ParamEq(0b10, BULLET, 1)),
        (ParamEq.e00(3, 2), ParamEq(0b01, CIRC, 1), ParamEq(0b01, CIRC, 1)),
    ],
)
def test_meet_examples(a, b, expected):
    assert meet(a, b) == expected
    assert meet(b, a) == expected


def test_meet_lattice_laws():
    ps = params(3)
    for a in ps:
        assert meet(a, a) == a
    for a, b in itertools.product(ps, repeat=2):
        assert meet(a, b) == meet(b, a)
    for a, b, c in itertools.product(params(2), repeat=3):
        assert meet(meet(a, b), c) == meet(a, meet(b, c))


def test_meet_absorbs_lower_class():
    for k in (1, 2, 3):
        assert meet(ParamEq.e00(k, 2), ParamEq(0b11, CIRC, k)) == ParamEq(0b11, CIRC, k)
        for fam in (0b01, 0b10, 0b11):
            assert meet(ParamEq(fam, CIRC, k), ParamEq(fam, BULLET, k)) == ParamEq(fam, BULLET, k)


def test_meet_is_monotone_in_k():
    for a, b in itertools.product(params(3), repeat=2):
        m = meet(a, b)
        assert m.k == min(a.k, b.k)
        assert m.family == a.family | b.family


def test_meet_matches_oracle_on_sample():
    for a, b in [(ParamEq(0b01, CIRC, 1), ParamEq(0b10, BULLET, 2)), (ParamEq.e00(1, 2), ParamEq.e00(2, 3))]:
        L = bound_for(a, b)
        joint = congruence_monoid([a.words(), b.words()], L)
        single = congruence_monoid([meet(a, b).words()], L)
        assert generator_preserving_isomorphic(joint, single)


def test_reduce_empty_is_free():
    assert reduce_presentation([]) == Free()
    assert str(Free()) == "Free (infinite)"


def test_reduce_degenerate_is_monogenic():
    r = classify(["D=B", "DB=BDB", "D=BD"])
    assert r == Monogenic((6, 7))
    assert str(r) == "Monogenic cases=6,7"


def test_classify_examples():
    assert classify(["DBDB=DBDBDBDB"]) == Classified(ParamEq.e00(2, 2))
    assert classify(["DB=DBDBD", "DB=BDB"]) == Classified(ParamEq(0b11, CIRC, 1))
    assert str(classify(["DB=BD"])) == "Classified family=11 parity=circ k=1"


def test_joint_presentation_has_four_elements():
    m = congruence_monoid([("DB", "DBDBD"), ("DB", "BDB")], 12)
    assert len(m) == 4


def test_reduce_accepts_generic_equations():
    eqs = [parse_equation("DB=DBD"), parse_equation("DBDB=BDB")]
    assert reduce_presentation(eqs) == Classified(ParamEq(0b11, BULLET, 1))


def test_monogenic_needs_cases():
    with pytest.raises(ValueError):
        Monogenic(())
