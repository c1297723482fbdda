import pytest
from hypothesis import given, strategies as st

from pim.word import (
    CanonicalShape,
    alternating_words,
    check_word,
    is_quasi_reduced,
    pretty,
    quasi_reduce,
    shape_of,
    to_word,
)

words = st.text(alphabet="DB", max_size=30)


@pytest.mark.parametrize(
    "w, expected",
    [
        ("", ""),
        ("DD", ""),
        ("BB", "B"),
        ("DBBD", "DBD"),
        ("DDBDD", "B"),
        ("BDDB", "B"),
        ("DBDBDB", "DBDBDB"),
    ],
)
def test_quasi_reduce_examples(w, expected):
    assert quasi_reduce(w) == expected


@pytest.mark.parametrize(
    "w, shape",
    [
        ("", (0, 0, 0)),
        ("D", (0, 0, 1)),
        ("B", (1, 0, 0)),
        ("DB", (0, 1, 0)),
        ("BD", (1, 0, 1)),
        ("BDB", (1, 1, 0)),
        ("DBDBD", (0, 2, 1)),
    ],
)
def test_shape_of(w, shape):
    assert shape_of(w) == CanonicalShape(*shape)
    assert to_word(shape_of(w)) == w


def test_check_word_rejects_other_letters():
    with pytest.raises(ValueError):
        check_word("DXB")


def test_to_word_rejects_bad_shape():
    with pytest.raises(ValueError):
        to_word(CanonicalShape(2, 0, 0))


def test_pretty():
    assert pretty("") == "Id"
    assert pretty("DB") == "◇□"


@given(words)
def test_quasi_reduce_idempotent(w):
    r = quasi_reduce(w)
    assert quasi_reduce(r) == r
    assert is_quasi_reduced(r)
    assert len(r) <= len(w)


@given(words, words)
def test_quasi_reduce_is_a_congruence(u, v):
    assert quasi_reduce(u + v) == quasi_reduce(quasi_reduce(u) + quasi_reduce(v))


@given(words)
def test_base_relations_preserve_form(w):
    assert quasi_reduce(w + "DD") == quasi_reduce(w)
    assert quasi_reduce(w + "BB") == quasi_reduce(w + "B")


def test_shapes_biject_with_alternating_words():
    ws = alternating_words(12)
    assert len(ws) == 1 + 2 * 12
    assert len(set(ws)) == len(ws)
    assert all(is_quasi_reduced(w) for w in ws)
    shapes = {shape_of(w) for w in ws}
    assert len(shapes) == len(ws)
    assert all(to_word(s) in ws for s in shapes)


def test_alternating_words_order():
    assert alternating_words(2) == ["", "D", "B", "DB", "BD"]
