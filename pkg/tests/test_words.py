import pytest
from hypothesis import given, strategies as st

from avoidwords.words import (
    all_embeddings,
    alphabet_span,
    embed,
    format_word,
    is_reduced,
    order_isomorphic,
    parse_word,
    reduce_word,
    shift_up,
)

words_st = st.lists(st.integers(1, 6), max_size=10).map(tuple)


def test_parse_digit_form():
    assert parse_word("12132") == (1, 2, 1, 3, 2)
    assert parse_word("311472511") == (3, 1, 1, 4, 7, 2, 5, 1, 1)


def test_parse_comma_form():
    assert parse_word("10,2,3") == (10, 2, 3)
    assert parse_word("1,2") == (1, 2)


def test_parse_empty():
    assert parse_word("") == ()
    assert parse_word("  ") == ()


@pytest.mark.parametrize("bad", ["0", "102", "1,0", "a1", "1 2", "-1", "1,,2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_format_word():
    assert format_word((1, 2, 1, 3, 2)) == "12132"
    assert format_word((10, 2, 3)) == "10,2,3"
    assert format_word(()) == ""


@given(words_st)
def test_parse_format_roundtrip(word):
    assert parse_word(format_word(word)) == word


def test_reduce_examples():
    assert reduce_word((4, 1, 7, 7, 6)) == (2, 1, 4, 4, 3)
    assert reduce_word((3, 2, 2, 1, 2)) == (3, 2, 2, 1, 2)
    assert reduce_word(()) == ()


def test_is_reduced_examples():
    assert is_reduced((3, 2, 2, 1, 2))
    assert not is_reduced((4, 1, 7, 7, 6))
    assert is_reduced((1,))
    assert is_reduced(())


@given(words_st)
def test_reduce_idempotent(word):
    assert reduce_word(reduce_word(word)) == reduce_word(word)


@given(words_st)
def test_reduce_is_order_isomorphic(word):
    reduced = reduce_word(word)
    assert is_reduced(reduced)
    assert order_isomorphic(word, reduced)


def test_order_isomorphic_examples():
    assert order_isomorphic((1, 4, 1), (1, 2, 1))
    assert not order_isomorphic((1, 3, 2), (2, 3, 1))
    assert not order_isomorphic((1, 1), (1, 2))
    assert not order_isomorphic((1, 2), (1, 2, 3))
    assert order_isomorphic((), ())


def test_embed_examples():
    assert embed((1, 2, 1, 3), (1, 3, 4)) == (1, 3, 1, 4)
    assert embed((1, 2, 1, 3), (2, 4, 5)) == (2, 4, 2, 5)
    assert embed((1,), (5,)) == (5,)


def test_embed_rejects_bad_subsets():
    with pytest.raises(ValueError):
        embed((1, 2, 1, 3), (1, 3))
    with pytest.raises(ValueError):
        embed((1, 2, 1, 3), (1, 4, 3))
    with pytest.raises(ValueError):
        embed((2, 3), (1, 2))


def test_all_embeddings_listed():
    got = [format_word(w) for w in all_embeddings((1, 2, 1, 3), 5)]
    assert got == [
        "1213", "1214", "1215", "1314", "1315",
        "1415", "2324", "2325", "2425", "3435",
    ]


def test_all_embeddings_trivial():
    assert [format_word(w) for w in all_embeddings((1,), 3)] == ["1", "2", "3"]
    assert all_embeddings((1, 2), 2) == [(1, 2)]
    assert all_embeddings((), 4) == [()]
    with pytest.raises(ValueError):
        all_embeddings((1, 2, 3), 2)


@given(words_st, st.integers(1, 7))
def test_all_embeddings_properties(word, m):
    from math import comb

    reduced = reduce_word(word)
    k = alphabet_span(reduced)
    if k > m:
        return
    out = all_embeddings(reduced, m)
    assert len(out) == comb(m, k)
    assert len(set(out)) == len(out)
    assert all(reduce_word(w) == reduced for w in out)


def test_shift_up():
    assert shift_up((1, 2, 1, 3, 2), 1) == (2, 3, 2, 4, 3)
    assert shift_up((1, 2, 1, 3, 2), 2) == (1, 3, 1, 4, 3)
    assert shift_up((1, 2, 1, 3, 2), 4) == (1, 2, 1, 3, 2)
