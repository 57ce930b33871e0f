"""Simple conjugates of delta, the witnesses x and y, and the SC-size experiment."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass

from . import simple
from .errors import PreconditionError
from .normal_form import (
    NormalForm,
    embed,
    from_letters,
    from_simple,
    invert,
    multiply,
    normal_form,
)
from .sliding import (
    cyclic_sliding,
    in_sliding_circuit,
    preferred_prefix,
    sliding_circuit_set,
    conjugacy_test,
)
from .simple import Perm
from .words import BraidWord


@dataclass(frozen=True)
class DeltaConjugateSpec:
    """A subset D of {2, ..., n-1}; U is its complement there."""

    n: int
    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(sorted(set(self.d)))
        object.__setattr__(self, "d", d)
        if self.n < 3:
            raise PreconditionError("delta conjugates need n >= 3")
        if any(not 2 <= x <= self.n - 1 for x in d):
            raise PreconditionError(f"D must lie in {{2..{self.n - 1}}}: {d}")

    @property
    def u(self) -> tuple[int, ...]:
        return tuple(x for x in range(2, self.n) if x not in self.d)


def delta_conjugate_word(spec: DeltaConjugateSpec) -> BraidWord:
    """(s_{d1-1}..s_1)(s_{d2-1}..s_{d1}) ... (s_{n-1}..s_{dm})."""
    bounds = (1,) + spec.d + (spec.n,)
    letters = []
    for lo, hi in zip(bounds, bounds[1:]):
        letters.extend(range(hi - 1, lo - 1, -1))
    return BraidWord(spec.n, tuple(letters))


def delta_conjugate(spec: DeltaConjugateSpec) -> NormalForm:
    return normal_form(delta_conjugate_word(spec))


def delta_conjugate_cycle(spec: DeltaConjugateSpec) -> tuple[int, ...]:
    """The cycle (1 u_1 ... u_k n d_m ... d_1) of its permutation."""
    return (1,) + spec.u + (spec.n,) + tuple(reversed(spec.d))


def all_delta_specs(n: int) -> list[DeltaConjugateSpec]:
    inner = range(2, n)
    return [
        DeltaConjugateSpec(n, d)
        for r in range(len(inner) + 1)
        for d in itertools.combinations(inner, r)
    ]


def enumerate_delta_conjugates(n: int) -> list[NormalForm]:
    """The 2^(n-2) simple conjugates of sigma_1 ... sigma_{n-1}."""
    return [delta_conjugate(s) for s in all_delta_specs(n)]


def sf_of_delta_conjugate(spec: DeltaConjugateSpec) -> tuple[frozenset[int], frozenset[int]]:
    """Closed-form starting and finishing sets.

    S = {u_i : u_i + 1 != u_{i+1}} and F = {d_i : d_i + 1 != d_{i+1}} with
    u_0 = d_0 = 1; the last entry of each list is always included.
    """

    def gaps(seq):
        seq = (1,) + seq
        return frozenset(
            x for i, x in enumerate(seq) if i == len(seq) - 1 or x + 1 != seq[i + 1]
        )

    return gaps(spec.u), gaps(spec.d)


def alpha_band(i: int, j: int, n: int) -> Perm:
    """Simple element with starting set {i} and finishing set {j}."""
    if not (1 <= i <= n - 1 and 1 <= j <= n - 1):
        raise PreconditionError(f"indices {i}, {j} out of range for B_{n}")
    step = 1 if i <= j else -1
    s = simple.identity(n)
    for k in range(i, j + step, step):
        s = simple.compose(s, simple.atom(k, n))
    return s


@dataclass(frozen=True)
class WitnessSpec:
    """eta (a simple conjugate of delta in B_n) and indices i_1..i_m."""

    eta: DeltaConjugateSpec
    indices: tuple[int, ...]

    def __post_init__(self):
        n = self.eta.n
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise PreconditionError("at least one index is required")
        if any(not 1 <= i <= n - 1 for i in self.indices):
            raise PreconditionError(f"indices must lie in 1..{n - 1}")
        _, fin = sf_of_delta_conjugate(self.eta)
        if self.indices[0] not in fin:
            raise PreconditionError(
                f"sigma_{self.indices[0]} is not in the finishing set {sorted(fin)} of eta"
            )

    @property
    def n(self) -> int:
        return self.eta.n


def preferred_index(eta: DeltaConjugateSpec) -> int:
    """The smallest i with sigma_i in F(eta)."""
    return min(sf_of_delta_conjugate(eta)[1])


def _alphas(spec: WitnessSpec) -> list[Perm]:
    idx = spec.indices
    return [alpha_band(a, b, spec.n) for a, b in zip(idx, idx[1:])]


def x_word(spec: WitnessSpec) -> NormalForm:
    """x = A^-1 eta A with A the product of the alpha bands, computed by the engine."""
    a = from_letters(spec.n, ())
    for s in _alphas(spec):
        a = multiply(a, from_simple(s))
    return multiply(multiply(invert(a), delta_conjugate(spec.eta)), a)


def build_x(spec: WitnessSpec) -> NormalForm:
    """Closed-form left normal form of x.

    Delta^-k d^(-2k+1)(a_k) ... d^-3(a_2) d^-1(a_1) eta a_1 ... a_k.
    """
    alphas = _alphas(spec)
    k = len(alphas)
    eta = delta_conjugate(spec.eta).factors[0]
    # d^(-2m+1)(a) = tau^m(d(a))
    head = [simple.tau(simple.complement(alphas[m - 1]), m) for m in range(k, 0, -1)]
    return NormalForm(spec.n, -k, tuple(head) + (eta,) + tuple(alphas))


def build_shifted_x(spec: WitnessSpec) -> NormalForm:
    """Delta^(2k) x for a spec with 2k indices."""
    if len(spec.indices) % 2:
        raise PreconditionError("the shifted witness needs an even number of indices")
    k = len(spec.indices) // 2
    x = build_x(spec)
    return NormalForm(x.n, x.inf + 2 * k, x.factors)


def build_beta(n: int, k: int) -> NormalForm:
    """(sigma_1...sigma_{n-1})^(nk+1) sigma_{n+1}^(4k+1) in B_{n+2}."""
    if n < 3 or k < 1:
        raise PreconditionError("build_beta needs n >= 3 and k >= 1")
    letters = list(range(1, n)) * (n * k + 1) + [n + 1] * (4 * k + 1)
    return from_letters(n + 2, letters)


def witness_spec(eta: DeltaConjugateSpec, free: tuple[int, ...]) -> WitnessSpec:
    """Spec with i_1 = i_eta followed by the freely chosen i_2..i_2k."""
    return WitnessSpec(eta, (preferred_index(eta),) + tuple(free))


def build_witness_y(spec: WitnessSpec) -> NormalForm:
    """y = Delta_n^(2k) x sigma_{n+1}^(4k+1) in B_{n+2}."""
    n = spec.n
    k = len(spec.indices) // 2
    x = embed(build_shifted_x(spec), n + 2)
    tail = from_letters(n + 2, [n + 1] * (4 * k + 1))
    return multiply(x, tail)


def witness_conjugator(spec: WitnessSpec) -> NormalForm:
    """g in B_n (embedded in B_{n+2}) with g^-1 beta g = y.

    With c^-1 delta c = eta and A the alpha product, g = c A.
    """
    n = spec.n
    ok, c = conjugacy_test(delta_conjugate(DeltaConjugateSpec(n, tuple(range(2, n)))),
                           delta_conjugate(spec.eta))
    if not ok:
        raise AssertionError("eta is not conjugate to delta")
    a = c
    for s in _alphas(spec):
        a = multiply(a, from_simple(s))
    return embed(a, n + 2)


def all_witness_specs(n: int, k: int) -> list[WitnessSpec]:
    return [
        witness_spec(eta, free)
        for eta in all_delta_specs(n)
        for free in itertools.product(range(1, n), repeat=2 * k - 1)
    ]


def lower_bound(n: int, k: int) -> int:
    return 2 ** (n - 2) * (n - 1) ** (2 * k - 1)


@dataclass
class ExperimentRow:
    n: int
    k: int
    length: int
    lower_bound: int
    witnesses: int
    distinct: int
    in_circuit: int
    conjugate: int
    sc_size: int | None
    witnesses_in_sc: int | None
    seconds: float

    def to_json(self) -> dict:
        return dict(self.__dict__)


def sc_experiment(n: int, k: int, full_sc: bool = False, member_cap: int = 10**6) -> ExperimentRow:
    """Build every witness y for (n, k) and check it lies in SC(beta)."""
    start = time.perf_counter()
    beta = build_beta(n, k)
    specs = all_witness_specs(n, k)
    ys = [build_witness_y(s) for s in specs]
    distinct = len(set(ys))
    in_circuit = 0
    conjugate = 0
    for spec, y in zip(specs, ys):
        if in_sliding_circuit(y) and cyclic_sliding(cyclic_sliding(y)) == y:
            in_circuit += 1
        g = witness_conjugator(spec)
        if multiply(multiply(invert(g), beta), g) == y:
            conjugate += 1
    sc_size = inside = None
    if full_sc:
        sc = sliding_circuit_set(beta, member_cap=member_cap)
        sc_size = len(sc)
        inside = sum(1 for y in ys if y in sc)
    return ExperimentRow(
        n=n,
        k=k,
        length=beta.length,
        lower_bound=lower_bound(n, k),
        witnesses=len(ys),
        distinct=distinct,
        in_circuit=in_circuit,
        conjugate=conjugate,
        sc_size=sc_size,
        witnesses_in_sc=inside,
        seconds=round(time.perf_counter() - start, 3),
    )


def format_table(rows: list[ExperimentRow]) -> str:
    cols = ["n", "k", "length", "lower_bound", "witnesses", "distinct", "in_circuit",
            "conjugate", "sc_size", "witnesses_in_sc", "seconds"]
    data = [[("-" if getattr(r, c) is None else str(getattr(r, c))) for c in cols] for r in rows]
    widths = [max(len(c), *(len(d[i]) for d in data)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(d, widths)) for d in data]
    return "\n".join(lines)


def embedded_delta(n: int, total: int) -> Perm:
    """Permutation of Delta_n inside B_total (acting on the first n strands)."""
    return simple.delta(n) + tuple(range(n, total))
