import itertools

import pytest

from garside import simple
from garside.simple import atom, complement, delta, identity, meet, join, tau


def perm1(*images):
    """1-based permutation literal."""
    return tuple(i - 1 for i in images)


def test_delta_permutation():
    assert delta(3) == perm1(3, 2, 1)
    assert delta(4) == perm1(4, 3, 2, 1)
    assert simple.length(delta(4)) == 6
    assert simple.word(delta(3)) == (1, 2, 1)


def test_atom_and_word_round_trip():
    for n in range(1, 6):
        for s in simple.all_simples(n):
            assert simple.from_word(simple.word(s), n) == s


def test_from_word_rejects_repeated_crossing():
    with pytest.raises(ValueError):
        simple.from_word((1, 1), 3)
    with pytest.raises(ValueError):
        simple.from_word((1, 2, 1, 2), 3)


def test_complement_endpoints_and_example():
    assert complement(delta(3)) == identity(3)
    assert complement(identity(3)) == delta(3)
    # d(sigma_1) = sigma_2 sigma_1 in B_3
    assert complement(atom(1, 3)) == simple.from_word((2, 1), 3)


def test_complement_squared_is_tau_exhaustive_b4():
    for s in simple.all_simples(4):
        assert complement(complement(s)) == tau(s)
        assert simple.compose(s, complement(s)) == delta(4)
        assert simple.compose(simple.left_complement(s), s) == delta(4)


def test_tau_on_atoms():
    for n in range(2, 7):
        for i in range(1, n):
            assert tau(atom(i, n)) == atom(n - i, n)


def test_starting_finishing_sets_example():
    s = simple.from_word((1, 3, 2), 4)
    assert simple.starting_set(s) == {1, 3}
    assert simple.finishing_set(s) == {2}
    assert simple.starting_set(delta(4)) == {1, 2, 3}


def test_starting_set_matches_divisibility():
    for s in simple.all_simples(4):
        divides = {i for i in range(1, 4) if simple.is_prefix(atom(i, 4), s)}
        assert simple.starting_set(s) == divides


def test_meet_examples():
    assert meet(atom(1, 3), atom(2, 3)) == identity(3)
    a = simple.from_word((1, 2), 4)
    b = simple.from_word((1, 3), 4)
    assert meet(a, b) == atom(1, 4)
    for s in simple.all_simples(4):
        assert meet(s, delta(4)) == s


@pytest.mark.parametrize("n", [3, 4])
def test_meet_universal_property_brute_force(n):
    simples = simple.all_simples(n)
    for a, b in itertools.product(simples, repeat=2):
        m = meet(a, b)
        lower = [t for t in simples if simple.is_prefix(t, a) and simple.is_prefix(t, b)]
        assert all(simple.is_prefix(t, m) for t in lower)
        assert m in lower


def test_join_is_least_common_multiple_b4():
    simples = simple.all_simples(4)
    for a, b in itertools.product(simples, repeat=2):
        j = join(a, b)
        upper = [t for t in simples if simple.is_prefix(a, t) and simple.is_prefix(b, t)]
        assert j in upper and all(simple.is_prefix(j, t) for t in upper)


def test_left_weight_pair():
    # sigma_1 . sigma_1 is left-weighted; sigma_1 . sigma_2 sigma_1 is not
    s1 = atom(1, 3)
    assert simple.left_weight_pair(s1, s1) is None
    a, b = simple.left_weight_pair(s1, simple.from_word((2, 1), 3))
    assert a == delta(3) and b == identity(3)


def test_block_swap():
    s = simple.block_swap((2, 1), 0, 3)
    assert s == perm1(2, 3, 1)
    assert simple.word(s) == (2, 1)
