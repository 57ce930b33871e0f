"""Property suites shared by ``garside verify`` and the acceptance tests.

Each suite returns a SuiteResult counting individual checks; a suite passes
when no check failed.  Sample sizes are parameters so the CLI can run a quick
pass while the test-suite runs the full one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from . import simple
from .curves import (
    CurveCoordinates,
    RoundFamily,
    act,
    coords_of,
    detect_round,
    image_family,
    laminar_families,
)
from .decompose import (
    all_components,
    component,
    compose_components,
    curve_map,
    random_tube_braid,
)
from .families import (
    all_delta_specs,
    all_witness_specs,
    build_beta,
    build_witness_y,
    build_x,
    delta_conjugate,
    delta_conjugate_cycle,
    embedded_delta,
    sf_of_delta_conjugate,
    witness_spec,
    x_word,
    WitnessSpec,
)
from .normal_form import (
    NormalForm,
    as_simple,
    delta,
    from_simple,
    identity,
    invert,
    meet,
    multiply,
    normal_form,
    tau,
)
from .simple import Perm
from .sliding import (
    conjugacy_test,
    cyclic_sliding,
    final_factor,
    initial_factor,
    preferred_prefix,
    slide_to_circuit,
)
from .words import BraidWord, random_word

MAX_REPORTED = 10


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    failed: int = 0
    counts: dict[str, int] = field(default_factory=dict)

    def check(self, ok: bool, message: Callable[[], str] | str = "") -> bool:
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < MAX_REPORTED:
                self.failures.append(message() if callable(message) else message)
        return ok

    def count(self, key: str, k: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + k

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = ""
        if self.counts:
            extra = " " + " ".join(f"{k}={v}" for k, v in sorted(self.counts.items()))
        return f"{status} {self.name}: {self.checks} checks, {self.failed} failed{extra}"


# ---------------------------------------------------------------- core algebra


def normal_form_suite(samples: int = 500, seed: int = 1) -> SuiteResult:
    """Idempotence, group laws, left-weightedness and the tau automorphism."""
    res = SuiteResult("normal-form")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(2, 7)
        u, v, w = (random_word(n, rng.randint(0, 12), rng) for _ in range(3))
        x, y, z = normal_form(u), normal_form(v), normal_form(w)
        res.check(normal_form(x.word()) == x, lambda: f"not idempotent: {u}")
        res.check(normal_form(u * v) == multiply(x, y), lambda: f"product mismatch: {u} | {v}")
        res.check(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)),
                  lambda: f"not associative: {u} | {v} | {w}")
        res.check(multiply(x, invert(x)) == identity(n), lambda: f"x x^-1 != 1: {u}")
        res.check(invert(x) == normal_form(u.inverse()), lambda: f"inverse mismatch: {u}")
        res.check(tau(x) == multiply(multiply(delta(n, -1), x), delta(n)),
                  lambda: f"tau is not Delta-conjugation: {u}")
        res.check(tau(x, 2) == x, lambda: f"tau^2 != id: {u}")
        for a, b in zip(x.factors, x.factors[1:]):
            res.check(simple.starting_set(b) <= simple.finishing_set(a),
                      lambda: f"factors not left-weighted in {x}")
        res.check(all(f not in (simple.identity(n), simple.delta(n)) for f in x.factors),
                  lambda: f"improper factor in {x}")
    return res


def lattice_suite(max_n: int = 5) -> SuiteResult:
    """Meet and join of simple elements, exhaustively, against inversion sets."""
    res = SuiteResult("lattice")
    for n in range(1, max_n + 1):
        simples = simple.all_simples(n)
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

        def inv_mask(s: Perm) -> int:
            return sum(1 << k for k, (i, j) in enumerate(pairs) if s[i] > s[j])

        masks = {s: inv_mask(s) for s in simples}
        for a in simples:
            ma = masks[a]
            res.check(simple.meet(a, a) == a and simple.join(a, a) == a, f"idempotence at {a}")
            for b in simples:
                mb = masks[b]
                m, j = simple.meet(a, b), simple.join(a, b)
                res.check(simple.is_prefix(a, b) == (ma & ~mb == 0), f"prefix order at {a},{b}")
                res.check(m == simple.meet(b, a) and j == simple.join(b, a), f"commutativity at {a},{b}")
                res.check(simple.meet(a, j) == a and simple.join(a, m) == a, f"absorption at {a},{b}")
                mm, mj = masks[m], masks[j]
                below = all(
                    ((mt & ~ma == 0) and (mt & ~mb == 0)) == (mt & ~mm == 0)
                    for mt in masks.values()
                )
                above = all(
                    ((ma & ~mt == 0) and (mb & ~mt == 0)) == (mj & ~mt == 0)
                    for mt in masks.values()
                )
                res.check(below, f"meet is not the greatest lower bound at {a},{b}")
                res.check(above, f"join is not the least upper bound at {a},{b}")
        meet = simple.meet
        for a in simples:
            for b in simples:
                ab = meet(a, b)
                bad = [c for c in simples if meet(ab, c) != meet(a, meet(b, c))]
                res.check(not bad, f"meet not associative at {a},{b}")
        res.count(f"B{n}", len(simples))
    return res


def _relation_words(n: int) -> list[BraidWord]:
    out = []
    for i in range(1, n):
        out.append(BraidWord(n, (i, -i)))
        out.append(BraidWord(n, (-i, i)))
        if i + 1 < n:
            out.append(BraidWord(n, (i, i + 1, i, -(i + 1), -i, -(i + 1))))
        for j in range(i + 2, n):
            out.append(BraidWord(n, (i, j, -i, -j)))
    return out


def random_coordinates(n: int, rng: random.Random, length: int = 8) -> CurveCoordinates:
    fams = [f for f in laminar_families(n) if f.curves]
    return act(coords_of(rng.choice(fams)), random_word(n, rng.randint(0, length), rng))


def action_suite(samples: int = 10_000, seed: int = 2) -> SuiteResult:
    """Relation words act trivially on curve coordinates."""
    res = SuiteResult("curve-action")
    rng = random.Random(seed)
    relations = {n: _relation_words(n) for n in range(3, 8)}
    for _ in range(samples):
        n = rng.randint(3, 7)
        c = random_coordinates(n, rng)
        r = rng.choice(relations[n])
        res.check(act(c, r) == c, lambda: f"relation {r} moves {c.coords}")
    return res


def sliding_suite(samples: int = 300, seed: int = 3) -> SuiteResult:
    """Cyclic sliding is a conjugation that never increases canonical length."""
    res = SuiteResult("sliding")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(3, 6)
        w = random_word(n, rng.randint(1, 14), rng)
        x = normal_form(w)
        s = cyclic_sliding(x)
        p = from_simple(preferred_prefix(x))
        res.check(s == multiply(multiply(invert(p), x), p), lambda: f"slide is not conjugation: {w}")
        res.check(s.inf >= x.inf and s.sup <= x.sup, lambda: f"slide widened [inf, sup]: {w}")
        res.check(initial_factor(invert(x)) == simple.complement(final_factor(x)),
                  lambda: f"iota(x^-1) != d(phi(x)): {w}")
        traj = slide_to_circuit(x)
        y = traj.circuit[0]
        res.check(all(cyclic_sliding(a) == b for a, b in zip(traj.circuit, traj.circuit[1:] + traj.circuit[:1])),
                  lambda: f"circuit is not closed: {w}")
        res.check(x.conjugate(traj.conjugator_to(len(traj.tail))) == y,
                  lambda: f"trajectory conjugator is wrong: {w}")
    return res


# ---------------------------------------------------------------- components


def positive_lnf(z: NormalForm, length: int) -> list[Perm]:
    """Positive left normal form of a positive braid, padded with trivial factors."""
    n = z.n
    out = [simple.delta(n)] * z.inf + list(z.factors)
    return out + [simple.identity(n)] * (length - len(out))


def _factor_components(y: NormalForm, family: RoundFamily, c, res: SuiteResult, positive: bool):
    """Components (y_i)_[C_i in F_i] along the factors of y, tracking C_i and F_i.

    With ``positive`` the Delta factors are treated as ordinary factors;
    otherwise the walk starts from the image of F under Delta^p.
    """
    n = y.n
    if positive:
        factors = [simple.delta(n)] * y.inf + list(y.factors)
        fam, cur = family, c
    else:
        factors = list(y.factors)
        shift = delta(n, y.inf)
        fam = image_family(family, shift)
        cur = curve_map(shift, family)[c]
    comps, frames = [], []
    for f in factors:
        frames.append((fam, cur))
        s = from_simple(f)
        nxt = image_family(fam, s)
        res.check(nxt is not None, lambda: f"image of {fam} under {list(f)} not round inside {y}")
        if nxt is None:
            return None, frames
        comps.append(as_simple(component(s, fam, cur, check=False)))
        cur = curve_map(s, fam)[cur]
        fam = nxt
    return comps, frames


def check_component_laws(y: NormalForm, family: RoundFamily, res: SuiteResult) -> None:
    """Normal-form law, inf/sup bounds and the iota/phi cases for every curve of F."""
    n = y.n
    r = y.length
    for c in [None, *family.curves]:
        yc = component(y, family, c, check=False)
        k = yc.n
        # non-positive form
        comps, frames = _factor_components(y, family, c, res, positive=False)
        if comps is None:
            continue
        z = multiply(delta(k, -y.inf), yc)
        res.check(z.inf >= 0, lambda: f"Delta^-p y_C not positive: {y} at {c}")
        res.check(z.sup <= r and comps == positive_lnf(z, r),
                  lambda: f"component normal-form law (general) fails: {y} at {c}")
        res.count("law-general")
        # positive form, after multiplying by a central power making y positive
        m = max(0, -((y.inf) // 2))
        yp = multiply(delta(n, 2 * m), y)
        pcomps, _ = _factor_components(yp, family, c, res, positive=True)
        if pcomps is not None:
            zp = component(yp, family, c, check=False)
            res.check(zp.inf >= 0 and pcomps == positive_lnf(zp, yp.sup),
                      lambda: f"component normal-form law (positive) fails: {yp} at {c}")
            res.count("law-positive")
        # inf/sup comparison
        res.check(y.inf <= yc.inf and y.sup >= yc.sup, lambda: f"inf/sup bounds fail: {y} at {c}")
        # iota cases
        iota = from_simple(initial_factor(y))
        if image_family(family, iota) is None:
            res.check(False, lambda: f"[F]^iota(y) not round: {y}")
            continue
        ic = as_simple(component(iota, family, c, check=False))
        if y.inf < yc.inf:
            res.check(ic == simple.delta(k), lambda: f"iota case (inf <): {y} at {c}")
            res.count("iota-strict")
        else:
            res.check(ic == initial_factor(yc), lambda: f"iota case (inf =): {y} at {c}")
            res.count("iota-equal")
        # phi cases
        if r == 0:
            continue
        fam_r, c_r = frames[-1]
        phic = as_simple(component(from_simple(final_factor(y)), fam_r, c_r, check=False))
        if y.sup > yc.sup:
            res.check(phic == simple.identity(k), lambda: f"phi case (sup >): {y} at {c}")
            res.count("phi-strict")
        else:
            res.check(phic == final_factor(yc), lambda: f"phi case (sup =): {y} at {c}")
            res.count("phi-equal")


def prefix_case(y: NormalForm, yc: NormalForm, yc_src: NormalForm) -> int:
    """Which preferred-prefix case applies, from inf(y_C) and sup(y_C')."""
    inf_eq = yc.inf == y.inf
    sup_eq = yc_src.sup == y.sup
    return {(True, True): 1, (False, True): 2, (True, False): 3, (False, False): 4}[(inf_eq, sup_eq)]


def check_preferred_prefix(y: NormalForm, family: RoundFamily, res: SuiteResult) -> None:
    """Components of p(y) along an invariant round family, case by case."""
    cmap = curve_map(y, family)
    back = {d: c for c, d in cmap.items()}
    p = from_simple(preferred_prefix(y))
    img = image_family(family, p)
    res.check(img is not None, lambda: f"[F]^p(y) not round: {y}")
    if img is None:
        return
    yinv = invert(y)
    for c in [None, *family.curves]:
        yc = component(y, family, c, check=False)
        yc_src = component(y, family, back[c], check=False)
        k = yc.n
        res.check(component(yinv, family, c, check=False) == invert(yc_src),
                  lambda: f"(y^-1)_C != (y_C')^-1: {y} at {c}")
        case = prefix_case(y, yc, yc_src)
        i_y = initial_factor(yc)
        i_inv = initial_factor(invert(yc_src))
        expected = {
            1: simple.meet(i_y, i_inv),
            2: i_inv,
            3: i_y,
            4: simple.delta(k),
        }[case]
        got = as_simple(component(p, family, c, check=False))
        res.check(got == expected, lambda: f"preferred-prefix case {case} fails: {y} at {c}")
        res.count(f"prefix-case-{case}")


def check_gcd_restriction(x: NormalForm, y: NormalForm, family: RoundFamily, res: SuiteResult) -> None:
    m = meet(x, y)
    res.check(image_family(family, m) is not None, lambda: f"[F]^(x^y) not round: {x} {y}")
    for c in [None, *family.curves]:
        left = component(m, family, c, check=False)
        right = meet(component(x, family, c, check=False), component(y, family, c, check=False))
        res.check(left == right, lambda: f"gcd restriction fails at {c}: {x} {y}")
    res.count("gcd-pairs")


def check_roundness(y: NormalForm, family: RoundFamily, res: SuiteResult) -> None:
    """Prefix images of F stay round; so does [F]^p(y) when F is invariant."""
    n = y.n
    prefix = delta(n, y.inf)
    res.check(image_family(family, prefix) is not None, "Delta power broke roundness")
    for f in y.factors:
        prefix = multiply(prefix, from_simple(f))
        res.check(image_family(family, prefix) is not None,
                  lambda: f"prefix image not round: {y} on {family}")
    m = max(0, -(y.inf // 2))
    yp = multiply(delta(n, 2 * m), y)
    prefix = identity(n)
    for f in [simple.delta(n)] * yp.inf + list(yp.factors):
        prefix = multiply(prefix, from_simple(f))
        res.check(image_family(family, prefix) is not None,
                  lambda: f"positive prefix image not round: {yp} on {family}")
    if image_family(family, y) == family:
        p = from_simple(preferred_prefix(y))
        g = image_family(family, p)
        res.check(g is not None, lambda: f"[F]^p(y) not round: {y} on {family}")
        if g is not None:
            res.check(image_family(g, cyclic_sliding(y)) == g,
                      lambda: f"slide does not preserve [F]^p: {y}")
    res.count("braids")


def random_family(n: int, rng: random.Random) -> RoundFamily:
    return rng.choice([f for f in laminar_families(n) if f.curves])


def tube_corpus(count: int, seed: int = 5, max_n: int = 7):
    """Random tube braids (y, F): each y is composed from random components and preserves F."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(3, max_n)
        fam = random_family(n, rng)
        y, _, _ = random_tube_braid(fam, rng, max_length=rng.choice((2, 4, 8)), max_shift=rng.choice((0, 1, 2)))
        yield y, fam


def case_instances(per_case: int = 25, seed: int = 11):
    """Tube braids built so that a chosen curve falls in each preferred-prefix case.

    A component with a wide [inf, sup] range elsewhere in the family forces the
    strict inequalities; the chosen tube gets either a matching or a narrow range.
    """
    rng = random.Random(seed)
    out = []
    for case in (1, 2, 3, 4):
        made = 0
        while made < per_case:
            n = rng.randint(4, 7)
            fam = RoundFamily(n, ((1, 2),)) if rng.random() < 0.5 else random_family(n, rng)
            c = rng.choice(fam.curves)
            y, cmap, comps = random_tube_braid(fam, rng, max_length=3, max_shift=0)
            back = {d: e for e, d in cmap.items()}
            src = back[c]
            if src != c:
                continue
            k = comps[c].n
            # the boundary component drives inf(y) and sup(y)
            outer = comps[None]
            big_inf, big_sup = outer.inf - 2, outer.sup + 2
            width = big_sup - big_inf
            outer = _with_range(outer, big_inf, big_sup, rng)
            lo = big_inf if case in (1, 3) else big_inf + 1
            hi = big_sup if case in (1, 2) else big_sup - 1
            inner = _with_range(comps[c], lo, hi, rng)
            if outer is None or inner is None or width < 3:
                continue
            comps = dict(comps)
            comps[None] = outer
            comps[c] = inner
            y = compose_components(fam, cmap, comps)
            if y.inf != big_inf or y.sup != big_sup:
                continue
            out.append((case, y, fam, c))
            made += 1
    return out


@lru_cache(maxsize=None)
def _successors(n: int, prev: Perm | None) -> tuple[Perm, ...]:
    """Proper simples that may follow ``prev`` in a left normal form."""
    proper = [s for s in simple.all_simples(n) if s not in (simple.identity(n), simple.delta(n))]
    if prev is None:
        return tuple(proper)
    fin = simple.finishing_set(prev)
    return tuple(s for s in proper if simple.starting_set(s) <= fin)


def _with_range(x: NormalForm, lo: int, hi: int, rng: random.Random) -> NormalForm | None:
    """A braid with the same permutation as x, infimum lo and supremum hi (or None).

    The factors are drawn as a random left-weighted walk; the last factor is
    forced by the permutation and the attempt is kept when it is proper and
    left-weighted after its predecessor.
    """
    n = x.n
    need = hi - lo
    if n < 3 or need < 1:
        return None
    target = x.word().permutation()
    head = simple.delta(n) if lo % 2 else simple.identity(n)
    for _ in range(500):
        factors: list[Perm] = []
        for _ in range(need - 1):
            factors.append(rng.choice(_successors(n, factors[-1] if factors else None)))
        reached = head
        for f in factors:
            reached = simple.compose(reached, f)
        last = simple.compose(simple.inverse(reached), target)
        if last in (simple.identity(n), simple.delta(n)):
            continue
        if factors and not simple.starting_set(last) <= simple.finishing_set(factors[-1]):
            continue
        return NormalForm(n, lo, tuple(factors) + (last,))
    return None


def component_suite(samples: int = 200, per_case: int = 25, seed: int = 5) -> SuiteResult:
    res = SuiteResult("components")
    rng = random.Random(seed + 1)
    corpus = list(tube_corpus(samples, seed))
    for y, fam in corpus:
        d = all_components(y, fam)
        res.check(compose_components(fam, d.curve_map, d.components) == y,
                  lambda: f"recomposition fails: {y} on {fam}")
        check_component_laws(y, fam, res)
        check_preferred_prefix(y, fam, res)
    for y, fam in corpus[: max(1, samples // 2)]:
        x, _, _ = random_tube_braid(fam, rng, max_length=6, max_shift=1)
        check_gcd_restriction(x, y, fam, res)
    for case, y, fam, c in case_instances(per_case, seed + 2):
        d = all_components(y, fam)
        yc = d.components[c]
        got = prefix_case(y, yc, yc)
        res.check(got == case, lambda: f"constructed instance for case {case} landed in case {got}")
        res.count(f"constructed-case-{case}")
        check_preferred_prefix(y, fam, res)
    return res


def roundness_suite(samples: int = 200, seed: int = 5) -> SuiteResult:
    res = SuiteResult("roundness")
    for y, fam in tube_corpus(samples, seed):
        check_roundness(y, fam, res)
    return res


# ---------------------------------------------------------------- families


def families_suite(max_n: int = 6, x_samples: int = 100, seed: int = 7) -> SuiteResult:
    res = SuiteResult("families")
    rng = random.Random(seed)
    for n in range(3, max_n + 1):
        specs = all_delta_specs(n)
        elems = [delta_conjugate(s) for s in specs]
        res.check(len(set(elems)) == 2 ** (n - 2), f"census size wrong for n={n}")
        delta_n = normal_form(BraidWord(n, tuple(range(1, n))))
        for s, e in zip(specs, elems):
            res.check(e.inf == 0 and e.length == 1, f"{s} is not a proper simple")
            sf = sf_of_delta_conjugate(s)
            got = (simple.starting_set(e.factors[0]), simple.finishing_set(e.factors[0]))
            res.check(sf == got, f"closed-form S/F wrong for {s}")
            res.check(not (sf[0] & sf[1]), f"S and F meet for {s}")
            res.check(_cycle_of(e.factors[0]) == delta_conjugate_cycle(s), f"cycle wrong for {s}")
            if n <= 5:
                res.check(conjugacy_test(e, delta_n)[0], f"{s} not conjugate to delta")
        res.count(f"census-{n}", len(elems))
    for _ in range(x_samples):
        n = rng.randint(3, max_n)
        k = rng.randint(0, 3)
        spec = random_witness_spec(n, k, rng)
        res.check(build_x(spec) == x_word(spec), lambda: f"closed form differs for {spec}")
    for spec in all_witness_specs(3, 1):
        y = build_witness_y(spec)
        res.check(y.inf == 0 and y.sup == 5, f"witness bounds wrong for {spec}")
        res.check(preferred_prefix(y) == embedded_delta(3, 5), f"p(y) != Delta_3 for {spec}")
        res.check(cyclic_sliding(cyclic_sliding(y)) == y, f"s^2(y) != y for {spec}")
    return res


def random_witness_spec(n: int, k: int, rng: random.Random) -> WitnessSpec:
    eta = rng.choice(all_delta_specs(n))
    free = tuple(rng.randint(1, n - 1) for _ in range(k))
    return witness_spec(eta, free)


def _cycle_of(p: Perm) -> tuple[int, ...]:
    """The cycle of a cyclic permutation starting at 1, 1-based."""
    out = [1]
    while True:
        nxt = p[out[-1] - 1] + 1
        if nxt == 1:
            return tuple(out)
        out.append(nxt)


# ---------------------------------------------------------------- driver

SUITES: dict[str, Callable[..., SuiteResult]] = {
    "normal-form": normal_form_suite,
    "lattice": lattice_suite,
    "curve-action": action_suite,
    "sliding": sliding_suite,
    "components": component_suite,
    "roundness": roundness_suite,
    "families": families_suite,
}

QUICK = {
    "normal-form": dict(samples=200),
    "lattice": dict(max_n=4),
    "curve-action": dict(samples=2000),
    "sliding": dict(samples=100),
    "components": dict(samples=100, per_case=10),
    "roundness": dict(samples=100),
    "families": dict(max_n=5, x_samples=50),
}

FULL = {
    "normal-form": dict(samples=1000),
    "lattice": dict(max_n=5),
    "curve-action": dict(samples=10_000),
    "sliding": dict(samples=300),
    "components": dict(samples=1000, per_case=25),
    "roundness": dict(samples=1000),
    "families": dict(max_n=6, x_samples=500),
}


def run_suites(names: list[str] | None = None, quick: bool = True) -> list[SuiteResult]:
    sizes = QUICK if quick else FULL
    return [SUITES[name](**sizes[name]) for name in (names or list(SUITES))]
