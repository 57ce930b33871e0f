"""Multicurves in the n-punctured disc and the braid action on them.

Curves are encoded by extended Dynnikov coordinates.  The disc D_n is placed
inside D_{n+2} by adding one puncture at each end of the row of punctures; a
multicurve in D_n then has coordinates ``(a_1, b_1, ..., a_n, b_n)`` where,
with punctures 0..n+1 on the real axis,

* ``a_k`` is half the difference between the intersection numbers of the curve
  with the vertical arcs below and above puncture ``k``;
* ``b_k`` is half the difference between the intersection numbers with the
  vertical lines just left and just right of puncture ``k``.

A round curve ``C_{i,j}`` therefore has ``a = 0``, ``b_i = -1`` and ``b_j = +1``,
and coordinates of disjoint curves add.  The generator sigma_i changes only the
pairs ``i`` and ``i+1`` through piecewise-linear formulas, so every generator
(including sigma_1 and sigma_{n-1}) uses the same update.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .errors import ParseError, PreconditionError, ResourceCapError
from .normal_form import NormalForm, normal_form
from .words import BraidWord

CONVENTION = "dynnikov-ext/1"
MAX_TABLE_STRANDS = 8


@dataclass(frozen=True, order=True)
class RoundFamily:
    """A laminar family of round curves; ``(i, j)`` encloses punctures i..j (1-based)."""

    n: int
    curves: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        curves = tuple(sorted(set((int(i), int(j)) for i, j in self.curves)))
        object.__setattr__(self, "curves", curves)
        for i, j in curves:
            if not (1 <= i < j <= self.n and j - i + 1 <= self.n - 1):
                raise ValueError(f"C_{{{i},{j}}} is not a non-degenerate round curve in D_{self.n}")
        for a in curves:
            for b in curves:
                if a < b and not _compatible(a, b):
                    raise ValueError(f"curves {a} and {b} intersect")

    def __iter__(self):
        return iter(self.curves)

    def __len__(self):
        return len(self.curves)

    def __contains__(self, c):
        return tuple(c) in self.curves

    def __str__(self):
        return "[" + ",".join(f"({i},{j})" for i, j in self.curves) + "]"

    def children(self, c: tuple[int, int] | None) -> list[tuple[int, int]]:
        """Outermost curves strictly inside ``c`` (``None`` is the boundary)."""
        inside = [d for d in self.curves if d != c and (c is None or _nested(d, c))]
        return [d for d in inside if not any(e != d and _nested(d, e) for e in inside)]

    def parent(self, c: tuple[int, int]) -> tuple[int, int] | None:
        around = [d for d in self.curves if d != c and _nested(c, d)]
        return min(around, key=lambda d: d[1] - d[0]) if around else None


def _nested(a, b) -> bool:
    """Interval a lies inside interval b."""
    return b[0] <= a[0] and a[1] <= b[1]


def _compatible(a, b) -> bool:
    return a[1] < b[0] or b[1] < a[0] or _nested(a, b) or _nested(b, a)


_PAIR = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_family(text: str, n: int) -> RoundFamily:
    """Parse ``[(1,2),(3,4)]``."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(f"round family must look like [(i,j),...]: {text!r}")
    inner = body[1:-1]
    pairs = _PAIR.findall(inner)
    if _PAIR.sub("", inner).replace(",", "").strip():
        raise ParseError(f"unexpected text in round family {text!r}")
    try:
        return RoundFamily(n, tuple((int(i), int(j)) for i, j in pairs))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class CurveCoordinates:
    n: int
    coords: tuple[int, ...]

    def to_json(self) -> dict:
        return {"convention": CONVENTION, "n": self.n, "coords": list(self.coords)}

    def is_empty(self) -> bool:
        return not any(self.coords)


def coords_from_json(data: dict) -> CurveCoordinates:
    if data.get("convention") != CONVENTION:
        raise ParseError(f"unknown curve convention {data.get('convention')!r}")
    n = int(data["n"])
    coords = tuple(int(v) for v in data["coords"])
    if len(coords) != 2 * n:
        raise ParseError(f"expected {2 * n} coordinates, got {len(coords)}")
    return CurveCoordinates(n, coords)


def coords_of(family: RoundFamily) -> CurveCoordinates:
    c = [0] * (2 * family.n)
    for i, j in family.curves:
        c[2 * i - 1] -= 1
        c[2 * j - 1] += 1
    return CurveCoordinates(family.n, tuple(c))


def _pos(v: int) -> int:
    return v if v > 0 else 0


def _neg(v: int) -> int:
    return v if v < 0 else 0


def _apply(c: list[int], letter: int) -> None:
    """In-place action of sigma_|letter|^(sign) on extended Dynnikov coordinates."""
    k = 2 * (abs(letter) - 1)
    a, b, cc, d = c[k], c[k + 1], c[k + 2], c[k + 3]
    if letter > 0:
        e = a - _neg(b) - cc + _pos(d)
        c[k] = a + _pos(b) + _pos(_pos(d) - e)
        c[k + 1] = d - _pos(e)
        c[k + 2] = cc + _neg(d) + _neg(_neg(b) + e)
        c[k + 3] = b + _pos(e)
    else:
        f = a + _neg(b) - cc - _pos(d)
        c[k] = a - _pos(b) - _pos(_pos(d) + f)
        c[k + 1] = d + _neg(f)
        c[k + 2] = cc - _neg(d) - _neg(_neg(b) - f)
        c[k + 3] = b - _neg(f)


# Orientation of the half twists relative to the Garside structure: the
# update for sigma_i is the Dynnikov formula for sigma_i^CHIRALITY.
CHIRALITY = 1


def act(c: CurveCoordinates, w: BraidWord | NormalForm) -> CurveCoordinates:
    """[c]^w: apply the letters of w in order (a right action)."""
    if isinstance(w, NormalForm):
        w = w.word()
    if w.n != c.n:
        raise ValueError(f"strand count mismatch: {c.n} vs {w.n}")
    v = list(c.coords)
    for x in w.letters:
        _apply(v, x * CHIRALITY)
    return CurveCoordinates(c.n, tuple(v))


def _laminar(n: int) -> list[tuple[tuple[int, int], ...]]:
    cands = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if j - i + 1 <= n - 1]
    out: list[tuple[tuple[int, int], ...]] = []

    def extend(start: int, chosen: list[tuple[int, int]]):
        out.append(tuple(chosen))
        for idx in range(start, len(cands)):
            c = cands[idx]
            if all(_compatible(c, d) for d in chosen):
                chosen.append(c)
                extend(idx + 1, chosen)
                chosen.pop()

    extend(0, [])
    return out


@lru_cache(maxsize=None)
def laminar_families(n: int) -> tuple[RoundFamily, ...]:
    """All round families in D_n (including the empty one)."""
    if n > MAX_TABLE_STRANDS:
        raise ResourceCapError(f"laminar table limited to {MAX_TABLE_STRANDS} strands")
    return tuple(sorted(RoundFamily(n, f) for f in _laminar(n)))


@lru_cache(maxsize=None)
def _round_table(n: int) -> dict[tuple[int, ...], RoundFamily]:
    table = {}
    for fam in laminar_families(n):
        key = coords_of(fam).coords
        if key in table:
            raise AssertionError("round family coordinates are not injective")
        table[key] = fam
    return table


def detect_round(c: CurveCoordinates) -> RoundFamily | None:
    """The round family with these coordinates, or None when the multicurve is not round."""
    if any(c.coords[0::2]):
        return None
    return _round_table(c.n).get(c.coords)


def image_family(family: RoundFamily, x: NormalForm | BraidWord) -> RoundFamily | None:
    """[F]^x when it is round, else None."""
    return detect_round(act(coords_of(family), x))


def is_invariant_family(family: RoundFamily, x: NormalForm | BraidWord) -> bool:
    return image_family(family, x) == family


def invariant_round_families(
    x: NormalForm, max_strands: int = MAX_TABLE_STRANDS, nonempty: bool = False
) -> list[RoundFamily]:
    """Every round family F with [F]^x = [F], by exhaustive enumeration."""
    if x.n > max_strands:
        raise ResourceCapError(f"invariant family search limited to {max_strands} strands")
    w = x.word()
    return [
        f for f in laminar_families(x.n)
        if (f.curves or not nonempty) and act(coords_of(f), w) == coords_of(f)
    ]


@dataclass(frozen=True)
class MinimalStandardizer:
    braid: NormalForm
    word: BraidWord
    image: RoundFamily


def minimal_standardizer(c: CurveCoordinates, max_states: int = 200_000) -> MinimalStandardizer:
    """Shortest positive braid sending the multicurve c to a round family.

    Breadth-first search over the orbit of c under positive generators; the
    first round state reached gives a geodesic positive word.
    """
    n = c.n
    start = c.coords
    hit = detect_round(c)
    if hit is not None:
        return MinimalStandardizer(normal_form(BraidWord(n)), BraidWord(n), hit)
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for i in range(1, n):
            v = list(state)
            _apply(v, i * CHIRALITY)
            t = tuple(v)
            if t in parent:
                continue
            parent[t] = (state, i)
            fam = detect_round(CurveCoordinates(n, t))
            if fam is not None:
                letters = []
                node = t
                while parent[node] is not None:
                    node, letter = parent[node]
                    letters.append(letter)
                w = BraidWord(n, tuple(reversed(letters)))
                return MinimalStandardizer(normal_form(w), w, fam)
            if len(parent) > max_states:
                raise ResourceCapError(f"standardizer search exceeded {max_states} states")
            queue.append(t)
    raise PreconditionError("no positive braid makes this multicurve round")


def multicurve(family: RoundFamily, w: BraidWord | NormalForm) -> CurveCoordinates:
    """Coordinates of [F]^w, a convenient way to build non-round multicurves."""
    return act(coords_of(family), w)


def curve_images(family: RoundFamily, perm: Iterable[int]) -> dict:
    """Image of each curve of a round family under a braid with strand permutation
    ``perm``, assuming the image family is round."""
    perm = tuple(perm)
    out = {}
    for i, j in family.curves:
        ends = sorted(perm[k - 1] + 1 for k in range(i, j + 1))
        out[(i, j)] = (ends[0], ends[-1])
    return out
