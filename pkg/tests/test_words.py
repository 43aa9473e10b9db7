import pytest
from hypothesis import given, strategies as st

from submon.errors import LetterOutOfRange, ParseError, RankMismatch, ResourceLimit
from submon.words import (
    FreeWord, alphabet, as_word, ball, ball_size, dist, format_word, inv, letter_key, mul, parse_word, reduce,
)

import oracles

letters2 = st.sampled_from([1, -1, 2, -2])
raw_words = st.lists(letters2, max_size=12)


def w(s):
    return parse_word(s)


@pytest.mark.parametrize("raw,out", [("aAb", "b"), ("ab", "ab"), ("abBA", "")])
def test_reduce_examples(raw, out):
    assert format_word(w(raw)) == out


def test_mul_examples():
    assert mul(w("ab"), w("BA")) == ()
    assert format_word(mul(w("ab"), w("ba"))) == "abba"
    # k = 0 instance of the spelling a^-1 = (ba)^k c (c^-1 a^-1) (b^-1 a^-1)^k
    assert format_word(mul(w("c"), w("CA"))) == "A"
    assert format_word(mul(w("ba"), w("c"), w("CA"), w("BA"))) == "A"


@pytest.mark.parametrize("s,out", [("ab", "BA"), ("", ""), ("ABab", "BAba")])
def test_inv_examples(s, out):
    assert format_word(inv(w(s))) == out


def test_dist_examples():
    assert dist(w("a"), w("b")) == 2
    assert dist(w("abA"), w("abA")) == 0
    assert dist((), w("ABab")) == 4


def test_ball_examples():
    assert sorted(map(format_word, ball(2, 1))) == sorted(["", "a", "A", "b", "B"])
    assert len(ball(2, 2)) == 17 == len(oracles.ball(2, 2))
    assert {format_word(x) for x in ball(1, 3)} == {"", "a", "aa", "aaa", "A", "AA", "AAA"}


@pytest.mark.parametrize("rank", [1, 2, 3])
@pytest.mark.parametrize("radius", range(0, 7))
def test_ball_size_closed_form(rank, radius):
    b = ball(rank, radius)
    assert len(b) == ball_size(rank, radius) == len(set(b))
    if rank * radius <= 10:
        assert {format_word(x) for x in b} == oracles.ball(rank, radius)


def test_ball_is_shortlex_and_budgeted():
    b = ball(2, 3)
    keys = [(len(x), [letter_key(c) for c in x]) for x in b]
    assert keys == sorted(keys)
    with pytest.raises(ResourceLimit):
        ball(2, 5, budget=100)


def test_letter_range_and_parsing():
    with pytest.raises(LetterOutOfRange):
        reduce([3], rank=2)
    with pytest.raises(ParseError):
        parse_word("a1")
    with pytest.raises(LetterOutOfRange):
        as_word("c", 2)
    assert alphabet(2) == [1, -1, 2, -2]
    assert parse_word("1") == ()


def test_freeword_rank_checks():
    x = FreeWord.parse("ab", 2)
    assert str(x * ~x) == ""
    with pytest.raises(RankMismatch):
        x * FreeWord.parse("a", 1)


@given(raw_words)
def test_reduce_idempotent_and_matches_oracle(raw):
    r = reduce(raw)
    assert reduce(r) == r
    assert format_word(r) == oracles.free_reduce(format_word(raw))


@given(raw_words, raw_words, raw_words)
def test_group_axioms(a, b, c):
    a, b, c = reduce(a), reduce(b), reduce(c)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, inv(a)) == ()
    assert inv(inv(a)) == a


@given(raw_words, raw_words, raw_words)
def test_dist_is_a_metric(a, b, c):
    a, b, c = reduce(a), reduce(b), reduce(c)
    assert dist(a, b) == dist(b, a) == len(mul(inv(a), b))
    assert (dist(a, b) == 0) == (a == b)
    assert dist(a, c) <= dist(a, b) + dist(b, c)
    assert dist(a, b) == oracles.dist(format_word(a), format_word(b))
