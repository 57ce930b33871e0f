"""Permutation braids (simple elements) of the braid group B_n.

A simple element is stored as a tuple ``p`` of 0-based images where ``p[i]`` is
the final position of the strand that starts at position ``i``.  Products are
read in word order: the strand starting at ``i`` in ``a * b`` ends at
``b[a[i]]``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def delta(n: int) -> Perm:
    """The half twist: the order-reversing permutation."""
    return tuple(range(n - 1, -1, -1))


def atom(i: int, n: int) -> Perm:
    """Permutation of the generator sigma_i (1-based ``i``)."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    p = list(range(n))
    p[i - 1], p[i] = i, i - 1
    return tuple(p)


def compose(a: Perm, b: Perm) -> Perm:
    """Permutation of the product ``a * b`` (a first)."""
    return tuple(b[x] for x in a)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def complement(s: Perm) -> Perm:
    """Right complement: the simple element ``s^-1 * Delta``."""
    n = len(s)
    inv = inverse(s)
    return tuple(n - 1 - inv[i] for i in range(n))


@lru_cache(maxsize=None)
def left_complement(s: Perm) -> Perm:
    """Left complement: the simple element ``Delta * s^-1``."""
    n = len(s)
    inv = inverse(s)
    return tuple(inv[n - 1 - i] for i in range(n))


def tau(s: Perm, k: int = 1) -> Perm:
    """Conjugate by Delta^k; only the parity of k matters."""
    if k % 2 == 0:
        return s
    n = len(s)
    return tuple(n - 1 - s[n - 1 - i] for i in range(n))


def length(s: Perm) -> int:
    """Number of crossings (inversions)."""
    return sum(1 for i, j in itertools.combinations(range(len(s)), 2) if s[i] > s[j])


@lru_cache(maxsize=1 << 16)
def starting_set(s: Perm) -> frozenset[int]:
    """Generators sigma_i that are prefixes of ``s``: the descents of ``s``."""
    return frozenset(i + 1 for i in range(len(s) - 1) if s[i] > s[i + 1])


@lru_cache(maxsize=1 << 16)
def finishing_set(s: Perm) -> frozenset[int]:
    """Generators sigma_i that are suffixes of ``s``."""
    return starting_set(inverse(s))


def is_prefix(a: Perm, b: Perm) -> bool:
    """Whether ``a`` left-divides ``b``: every crossing of ``a`` is a crossing of ``b``."""
    n = len(a)
    return all(
        b[i] > b[j] for i in range(n) for j in range(i + 1, n) if a[i] > a[j]
    )


def _peel(s: Perm, i: int) -> Perm:
    # sigma_i^-1 * s, assuming sigma_i is a prefix of s
    p = list(s)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


@lru_cache(maxsize=None)
def meet(a: Perm, b: Perm) -> Perm:
    """Greatest common prefix of two simple elements (atom-peeling recursion)."""
    common = starting_set(a) & starting_set(b)
    if not common:
        return identity(len(a))
    i = min(common)
    return compose(atom(i, len(a)), meet(_peel(a, i), _peel(b, i)))


@lru_cache(maxsize=None)
def join(a: Perm, b: Perm) -> Perm:
    """Least common multiple for the prefix order.

    Complements reverse the prefix order into the suffix order, and suffixes
    of s are prefixes of its reverse (the inverse permutation).
    """
    suffix_meet = inverse(meet(inverse(complement(a)), inverse(complement(b))))
    return left_complement(suffix_meet)


@lru_cache(maxsize=None)
def left_weight_pair(a: Perm, b: Perm) -> tuple[Perm, Perm] | None:
    """One step of the local rule ``ab -> (as)(s^-1 b)`` with ``s = complement(a) ^ b``.

    Returns None when the pair is already left-weighted.
    """
    s = meet(complement(a), b)
    if s == identity(len(a)):
        return None
    return compose(a, s), compose(inverse(s), b)


def word(s: Perm) -> tuple[int, ...]:
    """A positive word for ``s`` (greedy on the smallest starting generator)."""
    letters = []
    while True:
        ss = starting_set(s)
        if not ss:
            return tuple(letters)
        i = min(ss)
        letters.append(i)
        s = _peel(s, i)


def from_word(letters, n: int) -> Perm:
    """Permutation of a positive word; raises if the word is not a permutation braid."""
    s = identity(n)
    for i in letters:
        inv = inverse(s)
        if inv[i - 1] > inv[i]:
            raise ValueError("word is not a permutation braid")
        s = compose(s, atom(i, n))
    return s


@lru_cache(maxsize=None)
def all_simples(n: int) -> tuple[Perm, ...]:
    """Every simple element of B_n, in lexicographic order of images."""
    return tuple(itertools.permutations(range(n)))


def block_swap(widths: tuple[int, int], offset: int, n: int) -> Perm:
    """Positive permutation braid carrying a block of ``widths[0]`` strands across
    the adjacent block of ``widths[1]`` strands, starting at position ``offset``."""
    w1, w2 = widths
    p = list(range(n))
    for i in range(offset, offset + w1):
        p[i] = i + w2
    for i in range(offset + w1, offset + w1 + w2):
        p[i] = i - w1
    return tuple(p)
