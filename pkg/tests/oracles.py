"""Independent reference implementations used to cross-check the library.

* Free-group model: B_n acts on the free group F_n = <x_1..x_n> (Artin's
  faithful action).  Braids are equal iff the images of the generators agree,
  and a round curve C_{i,j} is the conjugacy class of x_i...x_j, so curve
  images can be tracked without any coordinate system.
* Brute-force prefix enumeration for positive braids.
* Random rewriting of words by braid relations.
* A closure-free description of SC(x) by conjugating with all short positive braids.
"""

from __future__ import annotations

import random
from functools import lru_cache

from garside import simple
from garside.curves import laminar_families
from garside.normal_form import NormalForm, from_simple, invert, multiply
from garside.sliding import in_sliding_circuit, slide_to_circuit
from garside.words import BraidWord

# ---------------------------------------------------------------- free group


def free_reduce(w) -> tuple[int, ...]:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _substitute(w, i: int, sign: int) -> tuple[int, ...]:
    """Image of a free-group word under sigma_i^sign."""
    out = []
    for x in w:
        g, s = abs(x), (1 if x > 0 else -1)
        if sign > 0:
            img = [i, i + 1, -i] if g == i else [i] if g == i + 1 else [g]
        else:
            img = [i + 1] if g == i else [-(i + 1), i, i + 1] if g == i + 1 else [g]
        if s < 0:
            img = [-y for y in reversed(img)]
        out.extend(img)
    return free_reduce(out)


def act_word(fw, letters) -> tuple[int, ...]:
    for x in letters:
        fw = _substitute(fw, abs(x), 1 if x > 0 else -1)
    return fw


def artin_images(w: BraidWord | NormalForm) -> tuple[tuple[int, ...], ...]:
    """Images of x_1..x_n; a complete invariant of the braid."""
    if isinstance(w, NormalForm):
        w = w.word()
    return tuple(act_word((k,), w.letters) for k in range(1, w.n + 1))


def same_braid(u, v) -> bool:
    return artin_images(u) == artin_images(v)


def conjugacy_class(w) -> tuple[int, ...]:
    """Canonical representative of an unoriented free homotopy class."""
    w = list(free_reduce(w))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    inv = [-x for x in reversed(w)]
    cands = [tuple(v[k:] + v[:k]) for v in (w, inv) for k in range(len(v))]
    return min(cands) if cands else ()


def curve_word(i: int, j: int) -> tuple[int, ...]:
    return tuple(range(i, j + 1))


def family_classes(curves, letters=()) -> frozenset:
    """Classes of the images of round curves under a word."""
    return frozenset(conjugacy_class(act_word(curve_word(i, j), letters)) for i, j in curves)


@lru_cache(maxsize=None)
def round_class_table(n: int) -> dict:
    return {family_classes(f.curves): f for f in laminar_families(n)}


def oracle_detect_round(n: int, curves, letters):
    """The round family [F]^w (as a RoundFamily) or None, by the free-group model."""
    return round_class_table(n).get(family_classes(curves, letters))


# ---------------------------------------------------------------- positive braids


@lru_cache(maxsize=None)
def positive_levels(n: int, length: int) -> tuple[dict, ...]:
    """levels[k] maps Artin images to one positive word of length k, for k <= length."""
    levels = [{artin_images(BraidWord(n)): ()}]
    for _ in range(length):
        nxt = {}
        for word in levels[-1].values():
            for i in range(1, n):
                w = word + (i,)
                key = artin_images(BraidWord(n, w))
                nxt.setdefault(key, w)
        levels.append(nxt)
    return tuple(levels)


def positive_prefixes(n: int, letters) -> dict:
    """All prefixes of a positive word, as {images: word}, by brute force."""
    total = len(letters)
    levels = positive_levels(n, total)
    target = artin_images(BraidWord(n, tuple(letters)))
    out = {}
    for k in range(total + 1):
        for key, p in levels[k].items():
            rest = levels[total - k]
            if any(artin_images(BraidWord(n, p + q)) == target for q in rest.values()):
                out[key] = p
    return out


# ---------------------------------------------------------------- rewriting


def random_rewrite(w: BraidWord, rng: random.Random, steps: int = 10) -> BraidWord:
    """Apply random braid relations (and free insertions) to a word."""
    letters = list(w.letters)
    n = w.n
    for _ in range(steps):
        move = rng.randrange(4)
        if move == 0 and n > 1:
            k = rng.randint(0, len(letters))
            i = rng.randint(1, n - 1)
            s = rng.choice((1, -1))
            letters[k:k] = [s * i, -s * i]
            continue
        for k in rng.sample(range(max(len(letters) - 1, 0)), max(len(letters) - 1, 0)):
            a, b = letters[k], letters[k + 1]
            if move == 1 and a == -b:
                del letters[k:k + 2]
                break
            if move == 2 and abs(abs(a) - abs(b)) >= 2:
                letters[k], letters[k + 1] = b, a
                break
            if move == 3 and k + 2 < len(letters):
                c = letters[k + 2]
                if a == c and a * b > 0 and abs(abs(a) - abs(b)) == 1:
                    letters[k:k + 3] = [b, a, b]
                    break
    return BraidWord(n, tuple(letters))


# ---------------------------------------------------------------- sliding circuits


def sc_by_positive_conjugation(x: NormalForm, c: int) -> set[NormalForm]:
    """Members of sliding circuits among p^-1 s p, where s is the circuit seed of x
    and p runs over positive braids that are products of at most c simple elements."""
    n = x.n
    seed = slide_to_circuit(x).circuit[0]
    conj = [(from_simple(s), invert(from_simple(s))) for s in simple.all_simples(n)
            if s != simple.identity(n)]
    seen = {seed}
    frontier = [seed]
    for _ in range(c):
        nxt = []
        for z in frontier:
            for s, si in conj:
                y = multiply(multiply(si, z), s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return {y for y in seen if in_sliding_circuit(y)}
