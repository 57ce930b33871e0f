"""Braid words in signed Artin generators and their text format."""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from . import simple
from .errors import ParseError


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_1..sigma_{n-1}; letter ``i > 0`` is sigma_i, ``-i`` its inverse."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if not 1 <= abs(x) <= self.n - 1:
                raise ValueError(f"letter {x} out of range for B_{self.n}")

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        _check_same(self, other)
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        if k < 0:
            return self.inverse() ** (-k)
        return BraidWord(self.n, self.letters * k)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def embed(self, n: int, shift: int = 0) -> BraidWord:
        """The same word on ``n`` strands, with every index shifted by ``shift``."""
        return BraidWord(n, tuple(x + shift if x > 0 else x - shift for x in self.letters))

    def permutation(self) -> simple.Perm:
        return permutation_of(self)

    def __str__(self):
        return f"B{self.n}: " + " ".join(str(x) for x in self.letters)


def _check_same(a, b):
    if a.n != b.n:
        raise ValueError(f"strand count mismatch: {a.n} vs {b.n}")


def permutation_of(w: BraidWord) -> simple.Perm:
    """Strand permutation of a word (signs ignored), 0-based images."""
    pos = list(range(w.n))  # pos[strand] = current position
    at = list(range(w.n))  # at[position] = strand
    for x in w.letters:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return tuple(pos)


_HEADER = re.compile(r"^\s*B\s*(\d+)\s*:(.*)$", re.S)


def parse_word(text: str, n: int | None = None) -> BraidWord:
    """Parse ``"B5: 1 2 -1"``; without a header the strand count must be given."""
    m = _HEADER.match(text)
    if m:
        header_n = int(m.group(1))
        if n is not None and n != header_n:
            raise ParseError(f"header says B{header_n} but {n} strands were requested")
        n, body = header_n, m.group(2)
    else:
        body = text
    if n is None:
        raise ParseError("strand count missing: use a 'Bn:' header or pass it explicitly")
    body = body.replace(",", " ")
    try:
        letters = tuple(int(tok) for tok in body.split())
    except ValueError as exc:
        raise ParseError(f"bad braid word {text!r}: {exc}") from None
    try:
        return BraidWord(n, letters)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def random_word(n: int, length: int, rng: random.Random, positive: bool = False) -> BraidWord:
    letters = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        letters.append(i if positive or rng.random() < 0.5 else -i)
    return BraidWord(n, tuple(letters))
