import random

import pytest

from garside.errors import ParseError
from garside.words import BraidWord, parse_word, permutation_of, random_word


def test_parse_header():
    w = parse_word("B5: 1 2 1 2 1 2 1 2 4 4 4 4 4")
    assert w.n == 5
    assert w.letters == (1, 2, 1, 2, 1, 2, 1, 2, 4, 4, 4, 4, 4)


def test_parse_explicit_strands_and_commas():
    assert parse_word("1, -2", n=3) == BraidWord(3, (1, -2))
    assert parse_word("", n=4) == BraidWord(4)


@pytest.mark.parametrize("text,n", [
    ("1 2", None),          # strand count missing
    ("B3: 1 3", None),      # letter out of range
    ("B3: 1 x", None),      # not an integer
    ("B3: 1", 4),           # header disagrees with n
    ("B3: 0", None),        # zero is not a generator
])
def test_parse_errors(text, n):
    with pytest.raises(ParseError):
        parse_word(text, n)


def test_str_round_trip():
    w = BraidWord(4, (1, -3, 2))
    assert parse_word(str(w)) == w


def test_permutation_of():
    # 0-based images: p[i] is where the strand starting at i ends
    assert permutation_of(BraidWord(4, (2, 1, 3, 2))) == (2, 3, 0, 1)
    assert permutation_of(BraidWord(3)) == (0, 1, 2)
    assert permutation_of(BraidWord(3, (1, 2))) == (2, 0, 1)
    assert permutation_of(BraidWord(3, (1, -2))) == permutation_of(BraidWord(3, (1, 2)))


def test_inverse_and_power():
    w = BraidWord(3, (1, -2))
    assert w.inverse() == BraidWord(3, (2, -1))
    assert w ** 2 == BraidWord(3, (1, -2, 1, -2))
    assert w ** -1 == w.inverse()


def test_embed_shift():
    assert BraidWord(3, (1, -2)).embed(5, shift=2) == BraidWord(5, (3, -4))


def test_mismatched_strands():
    with pytest.raises(ValueError):
        BraidWord(3, (1,)) * BraidWord(4, (1,))


def test_random_word_positive():
    w = random_word(5, 30, random.Random(0), positive=True)
    assert len(w) == 30 and all(x > 0 for x in w.letters)
