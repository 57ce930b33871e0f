import itertools
import random

import pytest

from garside.curves import (
    CONVENTION,
    CurveCoordinates,
    RoundFamily,
    act,
    coords_from_json,
    coords_of,
    detect_round,
    image_family,
    invariant_round_families,
    is_invariant_family,
    laminar_families,
    minimal_standardizer,
    multicurve,
    parse_family,
)
from garside.errors import ParseError, ResourceCapError
from garside.normal_form import delta, from_letters, is_prefix, normal_form
from garside.words import BraidWord, random_word

from oracles import oracle_detect_round


def test_laminar_counts():
    assert [len(laminar_families(n)) for n in range(3, 8)] == [3, 11, 45, 197, 903]


def test_round_family_validation():
    with pytest.raises(ValueError):
        RoundFamily(4, ((1, 4),))
    with pytest.raises(ValueError):
        RoundFamily(5, ((1, 3), (2, 4)))
    f = RoundFamily(6, ((3, 4), (1, 2), (1, 4)))
    assert f.curves == ((1, 2), (1, 4), (3, 4))
    assert f.children(None) == [(1, 4)]
    assert f.children((1, 4)) == [(1, 2), (3, 4)]
    assert f.parent((3, 4)) == (1, 4)


def test_parse_family():
    assert parse_family("[(1,2), (3,4)]", 5).curves == ((1, 2), (3, 4))
    assert parse_family("[]", 3).curves == ()
    for bad in ["(1,2)", "[(1,2) x]", "[(1,5)]"]:
        with pytest.raises(ParseError):
            parse_family(bad, 5)


def test_coords_json_round_trip():
    c = coords_of(RoundFamily(5, ((1, 3),)))
    data = c.to_json()
    assert data["convention"] == CONVENTION
    assert coords_from_json(data) == c
    with pytest.raises(ParseError):
        coords_from_json({"convention": "other", "n": 5, "coords": list(c.coords)})
    with pytest.raises(ParseError):
        coords_from_json({"convention": CONVENTION, "n": 5, "coords": [0, 1]})


@pytest.mark.parametrize("n", range(3, 8))
def test_detect_inverts_coords(n):
    for f in laminar_families(n):
        assert detect_round(coords_of(f)) == f


def test_action_examples():
    c12 = RoundFamily(3, ((1, 2),))
    assert image_family(c12, delta(3)) == RoundFamily(3, ((2, 3),))
    c23 = RoundFamily(3, ((2, 3),))
    assert image_family(c23, from_letters(3, [1])) is None
    assert image_family(c12, from_letters(3, [1])) == c12
    assert is_invariant_family(RoundFamily(4, ((1, 2), (3, 4))), from_letters(4, [1, 3, -2, 2]))


def test_action_is_a_right_action_and_respects_relations():
    rng = random.Random(1)
    for _ in range(40):
        n = rng.randint(3, 6)
        f = rng.choice(laminar_families(n))
        u, v = random_word(n, rng.randint(0, 8), rng), random_word(n, rng.randint(0, 8), rng)
        c = coords_of(f)
        assert act(act(c, u), v) == act(c, u * v)
        assert act(c, u) == act(c, normal_form(u))
        assert act(act(c, u), u.inverse()) == c


def test_detect_round_agrees_with_free_group_model():
    rng = random.Random(7)
    hits = misses = 0
    for _ in range(600):
        n = rng.randint(3, 6)
        f = rng.choice(laminar_families(n))
        w = random_word(n, rng.randint(0, 6), rng)
        got = image_family(f, w)
        assert got == oracle_detect_round(n, f.curves, w.letters)
        hits += got is not None
        misses += got is None
    assert hits > 100 and misses > 100


def test_invariant_families():
    x = from_letters(6, [1, 2, 3, 4, 5] * 2)
    assert [f.curves for f in invariant_round_families(x, nonempty=True)] == [((1, 2), (3, 4), (5, 6))]
    assert RoundFamily(6) in invariant_round_families(x)
    with pytest.raises(ResourceCapError):
        invariant_round_families(x, max_strands=5)


def test_invariant_families_against_oracle():
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(3, 5)
        x = normal_form(random_word(n, rng.randint(0, 8), rng))
        expected = [f for f in laminar_families(n)
                    if oracle_detect_round(n, f.curves, x.word().letters) == f]
        assert invariant_round_families(x) == expected


def test_minimal_standardizer_examples():
    m = minimal_standardizer(coords_of(RoundFamily(4, ((1, 2),))))
    assert m.word.letters == () and m.image == RoundFamily(4, ((1, 2),))
    c = multicurve(RoundFamily(4, ((1, 2), (3, 4))), from_letters(4, [-2]))
    m = minimal_standardizer(c)
    assert m.word.letters == (2,)
    assert detect_round(act(c, m.word)) == m.image == RoundFamily(4, ((1, 2), (3, 4)))


def test_standardizer_state_cap():
    c = multicurve(RoundFamily(6, ((1, 2),)), BraidWord(6, (-2, -3, 4, -1, -5, 2, -3, 4)))
    with pytest.raises(ResourceCapError):
        minimal_standardizer(c, max_states=3)


def _positive_words(n, length):
    return itertools.product(range(1, n), repeat=length)


def _oracle_standardizer_length(n, curves, letters, limit):
    for k in range(limit + 1):
        for p in _positive_words(n, k):
            if oracle_detect_round(n, curves, letters + p) is not None:
                return k
    return None


@pytest.mark.parametrize("n", [3, 4])
def test_standardizer_is_shortest_and_a_prefix_of_all_standardizers(n):
    """Against brute force over positive words in the free-group model."""
    rng = random.Random(n)
    checked = 0
    for f in laminar_families(n):
        if not f.curves:
            continue
        for _ in range(6):
            w = random_word(n, rng.randint(1, 4), rng)
            m = minimal_standardizer(multicurve(f, w))
            k = len(m.word)
            assert _oracle_standardizer_length(n, f.curves, w.letters, k) == k
            assert oracle_detect_round(n, f.curves, w.letters + m.word.letters) == m.image
            for extra in range(k, k + 3):
                for p in _positive_words(n, extra):
                    if oracle_detect_round(n, f.curves, w.letters + p) is not None:
                        assert is_prefix(m.braid, from_letters(n, p))
            checked += 1
    assert checked > 0


def test_minimal_standardizer_of_empty_multicurve():
    c = CurveCoordinates(3, (0, 0, 0, 0, 0, 0))
    m = minimal_standardizer(c)
    assert m.image == RoundFamily(3) and m.word.letters == ()
