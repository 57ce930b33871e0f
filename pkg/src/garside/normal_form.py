"""Left normal forms Delta^p x_1 ... x_r and the lattice operations on B_n."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import simple
from .errors import ParseError, PreconditionError
from .simple import Perm
from .words import BraidWord


@dataclass(frozen=True, order=True)
class NormalForm:
    """Left normal form: ``inf`` powers of Delta followed by proper simple factors.

    Adjacent factors are left-weighted, so two elements are equal iff their
    normal forms are equal.
    """

    n: int
    inf: int = 0
    factors: tuple[Perm, ...] = ()

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def length(self) -> int:
        """Canonical length."""
        return len(self.factors)

    def __mul__(self, other: NormalForm) -> NormalForm:
        return multiply(self, other)

    def __pow__(self, k: int) -> NormalForm:
        base = self if k >= 0 else invert(self)
        result = identity(self.n)
        for _ in range(abs(k)):
            result = multiply(result, base)
        return result

    def inverse(self) -> NormalForm:
        return invert(self)

    def conjugate(self, by: NormalForm) -> NormalForm:
        """``by^-1 * self * by``."""
        return multiply(multiply(invert(by), self), by)

    def is_positive(self) -> bool:
        return self.inf >= 0

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def is_delta_power(self) -> bool:
        return not self.factors

    def word(self) -> BraidWord:
        return to_word(self)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "inf": self.inf,
            "factors": [[x + 1 for x in f] for f in self.factors],
        }

    def key(self) -> str:
        """Deterministic serialization used for deduplication and ordering."""
        return json.dumps(self.to_json(), separators=(",", ":"))

    def __str__(self):
        parts = []
        if self.inf:
            parts.append(f"D^{self.inf}")
        parts.extend("(" + " ".join(map(str, simple.word(f))) + ")" for f in self.factors)
        return f"B{self.n}[" + " ".join(parts) + "]"


def from_json(data: dict) -> NormalForm:
    try:
        n = int(data["n"])
        p = int(data["inf"])
        factors = tuple(tuple(int(x) - 1 for x in f) for f in data["factors"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad normal form object: {exc}") from None
    for f in factors:
        if sorted(f) != list(range(n)):
            raise ParseError(f"factor {f} is not a permutation of {n} points")
    nf = _from_factors(n, p, factors)
    if nf != NormalForm(n, p, factors):
        raise ParseError("factor list is not in left normal form")
    return nf


def identity(n: int) -> NormalForm:
    return NormalForm(n, 0, ())


def delta(n: int, power: int = 1) -> NormalForm:
    """Delta_n^power; for n <= 1 this is the identity."""
    if n <= 1:
        return identity(n)
    return NormalForm(n, power, ())


def delta_word(n: int) -> BraidWord:
    """sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1)."""
    letters = []
    for k in range(1, n):
        letters.extend(range(k, 0, -1))
    return BraidWord(n, tuple(letters))


def from_simple(s: Perm) -> NormalForm:
    n = len(s)
    if s == simple.identity(n):
        return identity(n)
    if s == simple.delta(n):
        return delta(n)
    return NormalForm(n, 0, (s,))


def generator(i: int, n: int) -> NormalForm:
    """sigma_i, or its inverse for negative ``i``."""
    if i > 0:
        return from_simple(simple.atom(i, n))
    return NormalForm(n, -1, (simple.left_complement(simple.atom(-i, n)),)) if n > 2 else delta(n, -1)


def _push(factors: list[Perm], b: Perm) -> None:
    """Append simple ``b`` to a left-weighted list, restoring left-weightedness."""
    factors.append(b)
    j = len(factors) - 2
    while j >= 0:
        step = simple.left_weight_pair(factors[j], factors[j + 1])
        if step is None:
            break
        factors[j], factors[j + 1] = step
        j -= 1


def _from_factors(n: int, p: int, factors) -> NormalForm:
    """Normal form of ``Delta^p f_1 ... f_k`` for arbitrary simple ``f_i``."""
    if n <= 1:
        return identity(n)
    out: list[Perm] = []
    for f in factors:
        _push(out, f)
    return _finish(n, p, out)


def _finish(n: int, p: int, out: list[Perm]) -> NormalForm:
    d, e = simple.delta(n), simple.identity(n)
    lo, hi = 0, len(out)
    while lo < hi and out[lo] == d:
        lo += 1
    while hi > lo and out[hi - 1] == e:
        hi -= 1
    return NormalForm(n, p + lo, tuple(out[lo:hi]))


def normal_form(w: BraidWord) -> NormalForm:
    """Left normal form of the element represented by ``w``.

    Each sigma_i^-1 is rewritten as Delta^-1 (Delta sigma_i^-1); the Delta^-1
    factors are moved to the front, twisting every factor they pass by tau.
    """
    n = w.n
    if n <= 1:
        return identity(n)
    negatives_after = 0
    pieces = []
    for x in reversed(w.letters):
        if x > 0:
            s = simple.atom(x, n)
        else:
            s = simple.left_complement(simple.atom(-x, n))
        pieces.append(simple.tau(s, negatives_after))
        if x < 0:
            negatives_after += 1
    pieces.reverse()
    return _from_factors(n, -negatives_after, pieces)


def multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    if x.n != y.n:
        raise ValueError(f"strand count mismatch: {x.n} vs {y.n}")
    if x.n <= 1:
        return x
    out = [simple.tau(f, y.inf) for f in x.factors]
    for f in y.factors:
        _push(out, f)
    return _finish(x.n, x.inf + y.inf, out)


def invert(x: NormalForm) -> NormalForm:
    """(Delta^p x_1..x_r)^-1 = Delta^(-p-r) tau^(p+r)(d x_r) ... tau^(p+1)(d x_1)."""
    p, r = x.inf, len(x.factors)
    pieces = [simple.tau(simple.complement(x.factors[i - 1]), p + i) for i in range(r, 0, -1)]
    return _from_factors(x.n, -p - r, pieces)


def equals(x: NormalForm, y: NormalForm) -> bool:
    if x.n != y.n:
        raise ValueError(f"strand count mismatch: {x.n} vs {y.n}")
    return x == y


def tau(x: NormalForm, k: int = 1) -> NormalForm:
    """Conjugation by Delta^k."""
    return NormalForm(x.n, x.inf, tuple(simple.tau(f, k) for f in x.factors))


def to_word(x: NormalForm) -> BraidWord:
    n = x.n
    dw = delta_word(n).letters
    letters: list[int] = []
    if x.inf >= 0:
        letters.extend(dw * x.inf)
    else:
        letters.extend(tuple(-i for i in reversed(dw)) * (-x.inf))
    for f in x.factors:
        letters.extend(simple.word(f))
    return BraidWord(n, tuple(letters))


def complement(s: NormalForm) -> NormalForm:
    """d(s) = s^-1 Delta for a simple element given as a normal form."""
    return from_simple(simple.complement(as_simple(s)))


def as_simple(x: NormalForm) -> Perm:
    """The permutation of a simple element (identity, Delta or one proper factor)."""
    if x.inf == 0 and not x.factors:
        return simple.identity(x.n)
    if x.inf == 1 and not x.factors:
        return simple.delta(x.n)
    if x.inf == 0 and len(x.factors) == 1:
        return x.factors[0]
    raise PreconditionError(f"{x} is not a simple element")


def first_simple(x: NormalForm) -> Perm:
    """x ^ Delta for positive x."""
    if x.inf >= 1:
        return simple.delta(x.n)
    if x.factors:
        return x.factors[0]
    return simple.identity(x.n)


def left_divide(s: Perm, x: NormalForm) -> NormalForm:
    """s^-1 x."""
    return multiply(invert(from_simple(s)), x)


def gcd_positive(x: NormalForm, y: NormalForm) -> NormalForm:
    """Greatest common prefix of two positive braids.

    gcd(x, y) = s gcd(s^-1 x, s^-1 y) with s = (x ^ Delta) ^ (y ^ Delta).
    """
    if x.n != y.n:
        raise ValueError(f"strand count mismatch: {x.n} vs {y.n}")
    if x.inf < 0 or y.inf < 0:
        raise PreconditionError("gcd_positive needs positive braids")
    n = x.n
    if n <= 1:
        return x
    e = simple.identity(n)
    pieces: list[Perm] = []
    while True:
        s = simple.meet(first_simple(x), first_simple(y))
        if s == e:
            return _from_factors(n, 0, pieces)
        pieces.append(s)
        x, y = left_divide(s, x), left_divide(s, y)


def meet(x: NormalForm, y: NormalForm) -> NormalForm:
    """Greatest common prefix of arbitrary braids (shifted into the positive monoid)."""
    m = max(0, -x.inf, -y.inf)
    shift = delta(x.n, m)
    g = gcd_positive(multiply(shift, x), multiply(shift, y))
    return multiply(delta(x.n, -m), g)


def is_prefix(x: NormalForm, y: NormalForm) -> bool:
    """x left-divides y: x^-1 y is positive."""
    return multiply(invert(x), y).inf >= 0


def starting_set(x: NormalForm) -> frozenset[int]:
    """Atoms sigma_i with sigma_i a prefix of the positive braid x."""
    if x.inf < 0:
        raise PreconditionError("starting set is defined for positive braids only")
    if x.inf >= 1:
        return frozenset(range(1, x.n))
    return simple.starting_set(first_simple(x))


def reverse(x: NormalForm) -> NormalForm:
    """Image of a positive braid under the anti-automorphism fixing each sigma_i."""
    if x.inf < 0:
        raise PreconditionError("reversal is applied to positive braids only")
    letters = to_word(x).letters
    return normal_form(BraidWord(x.n, tuple(reversed(letters))))


def finishing_set(x: NormalForm) -> frozenset[int]:
    """Atoms sigma_i with sigma_i a suffix of the positive braid x."""
    return starting_set(reverse(x))


def is_left_weighted(a: Perm, b: Perm) -> bool:
    return simple.left_weight_pair(a, b) is None


def embed(x: NormalForm, n: int, shift: int = 0) -> NormalForm:
    """Image of x under sigma_i -> sigma_{i+shift} in B_n."""
    return normal_form(to_word(x).embed(n, shift))


def from_letters(n: int, letters) -> NormalForm:
    return normal_form(BraidWord(n, tuple(letters)))
