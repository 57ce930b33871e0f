"""Subbraids, components of braids along round families, and recomposition."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import simple
from .curves import (
    CurveCoordinates,
    RoundFamily,
    curve_images,
    detect_round,
    image_family,
    minimal_standardizer,
)
from .errors import PreconditionError
from .normal_form import NormalForm, delta, identity, invert, multiply, normal_form
from .words import BraidWord

Curve = Optional[tuple[int, int]]  # None stands for the boundary of the disc


def subbraid(w: BraidWord | NormalForm, strands) -> BraidWord:
    """Keep only the strands starting at the given 1-based positions.

    A crossing survives when both of its strands are selected; positions are
    renumbered by order among the selected strands.
    """
    if isinstance(w, NormalForm):
        w = w.word()
    chosen = {int(s) - 1 for s in strands}
    if not chosen:
        raise ValueError("select at least one strand")
    if min(chosen) < 0 or max(chosen) >= w.n:
        raise ValueError(f"strand selection {sorted(strands)} out of range for B_{w.n}")
    at = list(range(w.n))
    letters = []
    for x in w.letters:
        i = abs(x) - 1
        a, b = at[i], at[i + 1]
        if a in chosen and b in chosen:
            k = sum(1 for p in range(i) if at[p] in chosen) + 1
            letters.append(k if x > 0 else -k)
        at[i], at[i + 1] = b, a
    return BraidWord(len(chosen), tuple(letters))


def _span(family: RoundFamily, c: Curve) -> tuple[int, int]:
    return (1, family.n) if c is None else c


def items(family: RoundFamily, c: Curve) -> list[tuple[int, int]]:
    """Punctures directly inside c, as (p, p), and its outermost sub-curves, in order."""
    lo, hi = _span(family, c)
    kids = family.children(c)
    covered = {p for i, j in kids for p in range(i, j + 1)}
    out = [(p, p) for p in range(lo, hi + 1) if p not in covered] + list(kids)
    return sorted(out)


def selection(family: RoundFamily, c: Curve) -> list[int]:
    """Strands defining the component at c: direct punctures plus the leftmost
    puncture of each outermost sub-curve."""
    return [i for i, _ in items(family, c)]


def _require_round_image(x: NormalForm, family: RoundFamily) -> RoundFamily:
    img = image_family(family, x)
    if img is None:
        raise PreconditionError(f"the image of {family} under x is not round")
    return img


def component(x: NormalForm, family: RoundFamily, c: Curve = None, check: bool = True) -> NormalForm:
    """x_[C in F] for a round family F whose image under x is round."""
    if c is not None and tuple(c) not in family:
        raise PreconditionError(f"{c} is not a curve of {family}")
    if check:
        _require_round_image(x, family)
    return normal_form(subbraid(x, selection(family, c)))


@dataclass
class Decomposition:
    """Components of a braid along an invariant round family."""

    family: RoundFamily
    curve_map: dict[Curve, Curve]
    components: dict[Curve, NormalForm] = field(default_factory=dict)

    def to_json(self) -> dict:
        def name(c):
            return "boundary" if c is None else [c[0], c[1]]

        return {
            "family": [list(c) for c in self.family.curves],
            "n": self.family.n,
            "curve_map": [[name(c), name(d)] for c, d in self.curve_map.items()],
            "components": [
                {"curve": name(c), "strands": comp.n, "normal_form": comp.to_json()}
                for c, comp in self.components.items()
            ],
        }


def curve_map(x: NormalForm, family: RoundFamily) -> dict[Curve, Curve]:
    """Where x sends each curve of F (F and its image round)."""
    perm = x.word().permutation()
    out: dict[Curve, Curve] = {None: None}
    out.update(curve_images(family, perm))
    return out


def all_components(x: NormalForm, family: RoundFamily) -> Decomposition:
    if image_family(family, x) != family:
        raise PreconditionError(f"x does not preserve {family}")
    cmap = curve_map(x, family)
    comps = {c: component(x, family, c, check=False) for c in [None, *family.curves]}
    return Decomposition(family, cmap, comps)


def interior_braid(x: NormalForm, family: RoundFamily, c: Curve = None) -> NormalForm:
    """(x^m)_C where m is the length of the orbit of C under x."""
    if image_family(family, x) != family:
        raise PreconditionError(f"x does not preserve {family}")
    cmap = curve_map(x, family)
    m, d = 1, cmap[c]
    while d != c:
        d = cmap[d]
        m += 1
    return component(x ** m, family, c, check=False)


def orbit(x: NormalForm, family: RoundFamily, c: Curve) -> list[Curve]:
    cmap = curve_map(x, family)
    out = [c]
    while cmap[out[-1]] != c:
        out.append(cmap[out[-1]])
    return out


def _shape(family: RoundFamily, c: Curve) -> tuple:
    lo, hi = _span(family, c)
    inside = [d for d in family.curves if d != c and (c is None or (c[0] <= d[0] and d[1] <= c[1]))]
    return (hi - lo, tuple((i - lo, j - lo) for i, j in inside))


def _block_letters(w1: int, w2: int, offset: int, n: int, positive: bool) -> list[int]:
    if positive:
        return list(simple.word(simple.block_swap((w1, w2), offset, n)))
    return [-i for i in reversed(simple.word(simple.block_swap((w2, w1), offset, n)))]


def compose_components(
    family: RoundFamily,
    cmap: dict[Curve, Curve],
    components: dict[Curve, NormalForm],
) -> NormalForm:
    """The braid with the given components and curve map (inverse of all_components).

    Every sub-curve's braid is placed on its own block first; then each
    component is cabled, with crossings of tubes realized as positive block
    transpositions.
    """
    n = family.n
    cmap = dict(cmap)
    cmap.setdefault(None, None)
    if set(cmap) != {None, *family.curves} or set(cmap.values()) != set(cmap):
        raise PreconditionError("curve map must be a permutation of the family's curves")
    letters: list[int] = []

    def build(node: Curve) -> None:
        target = cmap[node]
        if _shape(family, node) != _shape(family, target):
            raise PreconditionError(f"curve map sends {node} to a curve with different nesting")
        its = items(family, node)
        goal = items(family, target)
        comp = components.get(node)
        if comp is None:
            comp = identity(len(its))
        if comp.n != len(its):
            raise PreconditionError(
                f"component at {node} has {comp.n} strands, expected {len(its)}"
            )
        for it in its:
            if it[0] != it[1]:
                build(it)
        lo = _span(family, node)[0]
        order = list(its)  # current left-to-right arrangement of the items
        for x in comp.word().letters:
            k = abs(x) - 1
            left, right = order[k], order[k + 1]
            w1, w2 = left[1] - left[0] + 1, right[1] - right[0] + 1
            offset = lo - 1 + sum(it[1] - it[0] + 1 for it in order[:k])
            letters.extend(_block_letters(w1, w2, offset, n, x > 0))
            order[k], order[k + 1] = right, left
        for moved, slot in zip(order, goal):
            width_m, width_s = moved[1] - moved[0] + 1, slot[1] - slot[0] + 1
            if width_m != width_s:
                raise PreconditionError(f"component at {node} does not respect tube sizes")
            if moved[0] != moved[1] and cmap[moved] != slot:
                raise PreconditionError(
                    f"component at {node} sends {moved} to {slot}, curve map says {cmap[moved]}"
                )

    build(None)
    return normal_form(BraidWord(n, tuple(letters)))


def standardized_decomposition(
    x: NormalForm, multicurve: CurveCoordinates
) -> tuple[NormalForm, Decomposition]:
    """Decompose x along an invariant, possibly non-round multicurve.

    The multicurve is first made round by its minimal standardizer a; the
    components are those of a^-1 x a along the round image.
    """
    std = minimal_standardizer(multicurve)
    a = std.braid
    xhat = multiply(multiply(invert(a), x), a)
    return a, all_components(xhat, std.image)


def is_periodic(x: NormalForm) -> bool:
    """Whether some nontrivial power of x is central (a power of Delta^2).

    Uses the classical fact that periodic braids are conjugate to powers of
    sigma_1...sigma_{n-1} or of sigma_1(sigma_1...sigma_{n-1}), so that x^n or
    x^(n-1) is already a power of Delta^2.
    """
    n = x.n
    if n <= 2:
        return True
    for m in (n - 1, n):
        y = x ** m
        if not y.factors and y.inf % 2 == 0:
            return True
    return False


def is_round_family(c: CurveCoordinates) -> bool:
    return detect_round(c) is not None


def _signature(family: RoundFamily, item: tuple[int, int]) -> tuple:
    return ("p",) if item[0] == item[1] else _shape(family, item)


def random_curve_map(family: RoundFamily, rng) -> tuple[dict[Curve, Curve], dict[Curve, tuple[int, ...]]]:
    """A random nesting-preserving permutation of F, plus for every node the
    permutation its component must induce on the node's items."""
    cmap: dict[Curve, Curve] = {None: None}
    slot_perms: dict[Curve, tuple[int, ...]] = {}

    def assign(node: Curve) -> None:
        its = items(family, node)
        goal = items(family, cmap[node])
        classes: dict[tuple, list[int]] = {}
        for t, it in enumerate(goal):
            classes.setdefault(_signature(family, it), []).append(t)
        perm = [0] * len(its)
        for sig, slots in classes.items():
            sources = [t for t, it in enumerate(its) if _signature(family, it) == sig]
            targets = list(slots)
            rng.shuffle(targets)
            for s, t in zip(sources, targets):
                perm[s] = t
        slot_perms[node] = tuple(perm)
        for t, it in enumerate(its):
            if it[0] != it[1]:
                cmap[it] = goal[perm[t]]
                assign(it)

    assign(None)
    return cmap, slot_perms


def random_braid_with_permutation(k: int, perm: tuple[int, ...], rng, length: int,
                                  delta_shift: int = 0) -> NormalForm:
    """Random braid on k strands whose strand permutation is ``perm``."""
    if k <= 1:
        return identity(max(k, 1))
    letters = [rng.choice((1, -1)) * rng.randint(1, k - 1) for _ in range(length)]
    w = BraidWord(k, tuple(letters))
    fix = simple.compose(simple.inverse(w.permutation()), perm)
    x = normal_form(BraidWord(k, w.letters + simple.word(fix)))
    if delta_shift:
        x = multiply(delta(k, 2 * delta_shift), x)
    return x


def random_tube_braid(family: RoundFamily, rng, max_length: int = 6,
                      max_shift: int = 1) -> tuple[NormalForm, dict[Curve, Curve], dict[Curve, NormalForm]]:
    """A random braid preserving F, assembled from random components."""
    cmap, perms = random_curve_map(family, rng)
    comps = {}
    for node, perm in perms.items():
        k = len(perm)
        comps[node] = random_braid_with_permutation(
            k, perm, rng, rng.randint(0, max_length), rng.randint(-max_shift, max_shift)
        )
    return compose_components(family, cmap, comps), cmap, comps
