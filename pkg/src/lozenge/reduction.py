"""Dynamics over a tiling: descent to the center, tower classification,
shortest-word search, the zigzag closed forms and the negative census.

Every triple belongs to exactly one tiling, and every tiling is a
translate of one of four germs: (0, 0, 0), (0, 1, 1), (1, 0, 1) or
(1, 1, 0).  The classifier walks from a triple down to the center of its
tiling (the unique minimal triple, of shape (m, m, m) or a permutation
of (m, m+1, m+1)) and reads the germ and translation offset off it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, pi, sqrt

import numpy as np

from .errors import InputError, InternalCheckError, ResourceLimitError
from .lattice import minimum_weight
from .ops import H1, H2, H3, Triple, Word, apply_operator

GERM_TRIPLES = {
    "G000": (0, 0, 0),
    "G011": (0, 1, 1),
    "G101": (1, 0, 1),
    "G110": (1, 1, 0),
}
_PATTERN_TO_GERM = {v: k for k, v in GERM_TRIPLES.items()}

# H1 H2 H1 H3 as a composition chain; rightmost runs first
ZIGZAG_WORD: Word = (H3, H1, H2, H1)

DEFAULT_DEPTH_CAP = 256
DEFAULT_STEP_BUDGET = 10**6
DEFAULT_CENSUS_CAP = 10_000


@dataclass
class TowerClassification:
    """Result of descending a triple to the center of its tiling."""

    germ: str
    offset: int
    witness: Word
    center_triple: Triple

    def as_dict(self) -> dict:
        return {
            "germ": self.germ,
            "offset": self.offset,
            "witness": list(self.witness),
            "center_triple": list(self.center_triple),
        }


@dataclass
class CensusReport:
    """Count of negative weights in the tiling of (0, 0, c)."""

    c: int
    min_weight: int
    negative_count: int
    asymptote: float  # 2*pi/(3*sqrt(3)) * c^2
    ratio: float

    def as_dict(self) -> dict:
        return {
            "c": self.c,
            "min_weight": self.min_weight,
            "negative_count": self.negative_count,
            "asymptote": self.asymptote,
            "ratio": self.ratio,
        }


def classify(t: Triple, step_budget: int = DEFAULT_STEP_BUDGET) -> TowerClassification:
    """Descend t to the center of its tiling and name its tower.

    Strategy: replace the largest component (lowest operator index on
    ties) while that strictly lowers the component sum.  Replacing
    component value v changes the sum by s + 1 - 3v, so the walk stalls
    exactly on triples shaped (m, m, m) or a permutation of
    (m, m+1, m+1), which are the centers.  The sum is bounded below
    within a tiling, hence termination; step_budget is a safety guard
    that must never fire on valid input.
    """
    cur = t
    word: list[int] = []
    for _ in range(step_budget):
        s = cur[0] + cur[1] + cur[2]
        top = max(cur)
        if 3 * top <= s + 1:
            break
        op = cur.index(top) + 1
        cur = apply_operator(op, cur)
        word.append(op)
    else:
        raise InternalCheckError(f"descent from {t} exceeded {step_budget} steps")

    offset = min(cur)
    pattern = (cur[0] - offset, cur[1] - offset, cur[2] - offset)
    germ = _PATTERN_TO_GERM.get(pattern)
    if germ is None:
        raise InternalCheckError(f"descent from {t} stalled at non-center {cur}")

    lattice_min, _ = minimum_weight(t)
    if lattice_min != offset:
        raise InternalCheckError(
            f"descent minimum {offset} disagrees with lattice minimum {lattice_min}"
        )
    if germ != "G000":
        # weights of the three (0,1,1)-like towers avoid residue 2 mod 3
        for v in t:
            if (v - offset) % 3 == 2:
                raise InternalCheckError(
                    f"component {v} of {t} contradicts germ {germ} at offset {offset}"
                )
    return TowerClassification(germ, offset, tuple(word), cur)


def length_of(
    t0: Triple,
    value: int,
    depth_cap: int = DEFAULT_DEPTH_CAP,
    max_states: int = 5_000_000,
) -> int | None:
    """Smallest number of operator applications from t0 to a triple
    containing value, or None if not reachable within depth_cap.

    Plain breadth-first search over triples with the three operators as
    moves.  States are deduplicated by triple value: equal triples have
    equal futures, so the first depth at which value appears is minimal.
    """
    if depth_cap < 0:
        raise InputError(f"depth_cap must be >= 0, got {depth_cap!r}")
    seen = {t0}
    level = [t0]
    for depth in range(depth_cap + 1):
        for t in level:
            if value in t:
                return depth
        if depth == depth_cap:
            break
        nxt = []
        for t in level:
            x, y, z = t
            for child in (
                (y + z + 1 - x, y, z),
                (x, x + z + 1 - y, z),
                (x, y, x + y + 1 - z),
            ):
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        if len(seen) > max_states:
            raise ResourceLimitError(
                f"search exceeded {max_states} states at depth {depth + 1}"
            )
        if not nxt:
            break
        level = nxt
    return None


def zigzag_apply(a: int, c: int, n: int) -> Triple:
    """n-fold zigzag step applied to (a, a, c), in closed form.

    One zigzag step is the word H3, H1, H2, H1 (execution order) and
    maps (a, a, c) to (3a - 2c + 4, 3a - 2c + 4, 2a - c + 1).  Iterating
    n times gives
        ((2n+1)a - 2nc + n(3n+1),
         (2n+1)a - 2nc + n(3n+1),
         2na - (2n-1)c + n(3n-2)).
    For a = c = 0 the pair component runs through n(3n+1) = 0, 4, 14,
    30, 52, 80, ... and the third through n(3n-2) = 0, 1, 8, 21, 40,
    65, ... (the star numbers).
    """
    if n < 0:
        raise InputError(f"n must be >= 0, got {n!r}")
    pair = (2 * n + 1) * a - 2 * n * c + n * (3 * n + 1)
    third = 2 * n * a - (2 * n - 1) * c + n * (3 * n - 2)
    return (pair, pair, third)


def center_path(c: int) -> tuple[int, Triple, str]:
    """Steps, final triple and germ for the descent of (0, 0, c).

    The zigzag word is iterated n times with n determined by c mod 3
    (n = c/3, (c-1)/3 or (c-2)/3); for c = 1 or 2 mod 3 one extra H3
    lands on the center.  Centers: all components -(c^2 - c)/3 when
    c = 0, 1 mod 3 (germ G000); (-(c^2-c-2)/3, same, -(c^2-c+1)/3) when
    c = 2 mod 3 (germ G110).  The outcome is cross-checked against
    classify((0, 0, c)).
    """
    if c < 0:
        raise InputError(f"c must be >= 0, got {c!r}")
    r = c % 3
    if r == 0:
        n = c // 3
        final = zigzag_apply(0, c, n)
        steps = 4 * n
        germ = "G000"
    elif r == 1:
        n = (c - 1) // 3
        final = apply_operator(H3, zigzag_apply(0, c, n))
        steps = 4 * n + 1
        germ = "G000"
    else:
        n = (c - 2) // 3
        final = apply_operator(H3, zigzag_apply(0, c, n))
        steps = 4 * n + 1
        germ = "G110"

    check = classify((0, 0, c))
    if check.germ != germ or check.center_triple != final:
        raise InternalCheckError(
            f"center path for c={c} reached {final} ({germ}) but classify "
            f"found {check.center_triple} ({check.germ})"
        )
    return steps, final, germ


def negative_census(c: int, cap: int = DEFAULT_CENSUS_CAP) -> CensusReport:
    """Count the nodes with negative weight in the tiling of (0, 0, c).

    The count is an exact integer obtained by scanning the bounding box
    of the ellipse weight < 0; only the final ratio against the area
    asymptote 2*pi/(3*sqrt(3)) * c^2 uses floating point.  The minimum
    weight always equals -floor((c^2 - c + 1)/3).
    """
    if c < 1:
        raise InputError(f"c must be >= 1, got {c!r}")
    if c > cap:
        raise ResourceLimitError(f"c={c} exceeds census cap {cap}")
    base = (0, 0, c)
    wmin, _ = minimum_weight(base)
    expected_min = -((c * c - c + 1) // 3)
    if wmin != expected_min:
        raise InternalCheckError(
            f"census minimum {wmin} != -floor((c^2-c+1)/3) = {expected_min}"
        )
    count = 0
    if wmin < 0:
        radius = isqrt(4 * (0 - wmin + 1)) + 1
        mf = (c + 1) // 3  # floor of the real minimizer for base (0, 0, c)
        nf = (1 - 2 * c) // 3
        ms = np.arange(mf - radius, mf + radius + 2, dtype=np.int64)[:, None]
        ns = np.arange(nf - radius, nf + radius + 2, dtype=np.int64)[None, :]
        w = ns * c + (ms * ms + ns * ns + ms * ns - ms - ns)
        count = int(np.count_nonzero(w < 0))
    asymptote = 2 * pi / (3 * sqrt(3)) * c * c
    ratio = count / asymptote
    return CensusReport(c, wmin, count, asymptote, ratio)
