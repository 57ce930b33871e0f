"""Cyclic sliding, sliding circuits and the sets SC(x)."""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass, field

from . import simple
from .errors import ResourceCapError
from .normal_form import (
    NormalForm,
    from_simple,
    identity,
    invert,
    multiply,
)
from .simple import Perm

DEFAULT_MEMBER_CAP = 10**6


def initial_factor(x: NormalForm) -> Perm:
    """iota(x) = tau^-p(x_1), or 1 when the canonical length is zero."""
    if not x.factors:
        return simple.identity(x.n)
    return simple.tau(x.factors[0], -x.inf)


def final_factor(x: NormalForm) -> Perm:
    """phi(x) = x_r, or Delta when the canonical length is zero."""
    if not x.factors:
        return simple.delta(x.n)
    return x.factors[-1]


def preferred_prefix(x: NormalForm) -> Perm:
    """p(x) = iota(x) ^ iota(x^-1), using iota(x^-1) = d(phi(x))."""
    if not x.factors:
        return simple.identity(x.n)
    return simple.meet(initial_factor(x), simple.complement(final_factor(x)))


def conjugate_by_simple(x: NormalForm, s: Perm) -> NormalForm:
    """s^-1 x s."""
    c = from_simple(s)
    return multiply(multiply(invert(c), x), c)


def cyclic_sliding(x: NormalForm) -> NormalForm:
    """s(x) = p(x)^-1 x p(x)."""
    p = preferred_prefix(x)
    if p == simple.identity(x.n):
        return x
    return conjugate_by_simple(x, p)


@dataclass(frozen=True)
class SlidingTrajectory:
    """Orbit of x under cyclic sliding: a pre-periodic tail, then the circuit."""

    tail: tuple[NormalForm, ...]
    circuit: tuple[NormalForm, ...]
    prefixes: tuple[Perm, ...] = field(default=(), repr=False, compare=False)

    @property
    def period(self) -> int:
        return len(self.circuit)

    def elements(self) -> tuple[NormalForm, ...]:
        return self.tail + self.circuit

    def conjugator_to(self, index: int) -> NormalForm:
        """c with c^-1 x c equal to the ``index``-th element of the trajectory."""
        n = self.circuit[0].n
        c = identity(n)
        for s in self.prefixes[:index]:
            c = multiply(c, from_simple(s))
        return c


def slide_to_circuit(x: NormalForm) -> SlidingTrajectory:
    """Iterate cyclic sliding until an element repeats."""
    seen: dict[NormalForm, int] = {}
    orbit: list[NormalForm] = []
    prefixes: list[Perm] = []
    y = x
    while y not in seen:
        seen[y] = len(orbit)
        orbit.append(y)
        p = preferred_prefix(y)
        prefixes.append(p)
        y = y if p == simple.identity(y.n) else conjugate_by_simple(y, p)
    start = seen[y]
    return SlidingTrajectory(tuple(orbit[:start]), tuple(orbit[start:]), tuple(prefixes))


def in_sliding_circuit(x: NormalForm) -> bool:
    """Whether s^m(x) = x for some m > 0."""
    return not slide_to_circuit(x).tail


@dataclass
class SlidingCircuitSet:
    """SC(x): all conjugates of x lying in sliding circuits.

    ``conjugators[y]`` is a braid c with c^-1 x c = y, where x is the braid the
    set was computed from.
    """

    n: int
    members: tuple[NormalForm, ...]
    conjugators: dict[NormalForm, NormalForm] = field(repr=False, compare=False)
    source: NormalForm | None = field(default=None, repr=False, compare=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, y: NormalForm) -> bool:
        return y in self.conjugators

    def __iter__(self):
        return iter(self.members)

    @property
    def inf(self) -> int:
        return self.members[0].inf

    @property
    def sup(self) -> int:
        return self.members[0].sup

    def period_histogram(self) -> dict[int, int]:
        periods = Counter()
        done: set[NormalForm] = set()
        for y in self.members:
            if y in done:
                continue
            circuit = slide_to_circuit(y).circuit
            done.update(circuit)
            periods[len(circuit)] += 1
        return dict(sorted(periods.items()))

    def summary(self) -> dict:
        return {
            "size": len(self.members),
            "inf": self.inf,
            "sup": self.sup,
            "period_histogram": {str(k): v for k, v in self.period_histogram().items()},
        }

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "members": [y.to_json() for y in self.members],
            "summary": self.summary(),
        }


def _compose(a: NormalForm, b: NormalForm) -> NormalForm:
    return multiply(a, b)


def sliding_circuit_set(
    x: NormalForm, member_cap: int = DEFAULT_MEMBER_CAP, conjugators: bool = True
) -> SlidingCircuitSet:
    """Close the circuit of x under conjugation by every nontrivial simple element.

    Each conjugate is slid into its own circuit and that whole circuit is added.
    Members come back sorted by their serialized normal form.
    """
    n = x.n
    e = simple.identity(n)
    simples = [s for s in simple.all_simples(n) if s != e]
    traj = slide_to_circuit(x)
    found: dict[NormalForm, NormalForm | None] = {}

    def add_circuit(t: SlidingTrajectory, base: NormalForm | None) -> list[NormalForm]:
        # base conjugates the braid x into the first element of t
        new = []
        offset = len(t.tail)
        for j, y in enumerate(t.circuit):
            if y in found:
                continue
            c = None
            if conjugators:
                c = _compose(base, t.conjugator_to(offset + j))
            found[y] = c
            new.append(y)
        if len(found) > member_cap:
            raise ResourceCapError(f"sliding circuit set exceeds {member_cap} members")
        return new

    queue = deque(add_circuit(traj, identity(n) if conjugators else None))
    while queue:
        y = queue.popleft()
        cy = found[y]
        for s in simples:
            z = conjugate_by_simple(y, s)
            if z in found:
                continue
            t = slide_to_circuit(z)
            if t.circuit[0] in found and all(w in found for w in t.circuit):
                continue
            base = _compose(cy, from_simple(s)) if conjugators else None
            queue.extend(add_circuit(t, base))

    members = tuple(sorted(found, key=lambda y: y.key()))
    conj = {y: found[y] for y in members} if conjugators else {y: None for y in members}
    return SlidingCircuitSet(n, members, conj, source=x)


def conjugacy_test(
    x: NormalForm, y: NormalForm, member_cap: int = DEFAULT_MEMBER_CAP
) -> tuple[bool, NormalForm | None]:
    """Decide whether x and y are conjugate; on success return c with c^-1 x c = y."""
    if x.n != y.n:
        raise ValueError(f"strand count mismatch: {x.n} vs {y.n}")
    ty = slide_to_circuit(y)
    target = ty.circuit[0]
    if (target.inf, target.sup) != _circuit_bounds(x):
        return False, None
    sc = sliding_circuit_set(x, member_cap=member_cap)
    if target not in sc:
        return False, None
    # c^-1 x c = target and q^-1 y q = target with q from y's trajectory
    q = ty.conjugator_to(len(ty.tail))
    c = multiply(sc.conjugators[target], invert(q))
    return True, c


def _circuit_bounds(x: NormalForm) -> tuple[int, int]:
    z = slide_to_circuit(x).circuit[0]
    return z.inf, z.sup


def sc_json(sc: SlidingCircuitSet) -> str:
    return json.dumps(sc.to_json(), separators=(",", ":"))
