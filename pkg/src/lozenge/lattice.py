"""Geometric realization of the triple dynamics on the triangular lattice.

Nodes are addressed by integer pairs (m, n), standing for the point
m + n*rho in the plane, where rho = 1/2 + sqrt(3)/2 i is a primitive
sixth root of unity.  The generating triple (a, b, c) is anchored on the
unit triangle with a at (0, 0), b at (1, 0) and c at (0, 1); that choice
makes the closed form below agree with plain substitution at the anchor.

The weight of node (m, n) in the tiling generated by (a, b, c) is

    closed_weight(a, b, c | m, n)
        = -(m + n - 1)a + m*b + n*c + (m^2 + n^2 + mn - m - n)

and the quadratic part q(m, n) = m^2 + n^2 + mn is positive definite,
which is what makes every "weights below M" query finite.

Every unit triangle of the lattice carries the components of a triple in
a fixed arrangement: node (m, n) always holds component ((m - n) mod 3)
+ 1.  The dynamics preserve this three-coloring (a reflection replaces a
vertex by one of the same color class), so ordered-triple occurrence
counts read each triangle through the coloring.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .errors import InputError, InternalCheckError, ResourceLimitError
from .ops import Triple

NodeCoord = tuple[int, int]
Bounds = tuple[int, int, int, int]  # (m_min, m_max, n_min, n_max), inclusive

ANCHOR_NODES: tuple[NodeCoord, NodeCoord, NodeCoord] = ((0, 0), (1, 0), (0, 1))


def line_weight(x: int, y: int, k: int) -> int:
    """Weight of the k-th node on the lattice line through adjacent
    nodes carrying x (at k=0) and y (at k=1).  Valid for every integer k;
    three consecutive collinear weights satisfy z = -x + 2y + 2.
    """
    return -(k - 1) * x + k * y + k * (k - 1)


def closed_weight(base: Triple, m: int, n: int) -> int:
    """Exact weight of node (m, n) in the tiling generated by base."""
    a, b, c = base
    return -(m + n - 1) * a + m * b + n * c + (m * m + n * n + m * n - m - n)


def node_role(m: int, n: int) -> int:
    """Which triple component (0-based) node (m, n) carries.

    The three-coloring (m - n) mod 3 is invariant under the lozenge
    reflection v -> vj + vk - vi, so component positions never migrate
    between color classes.
    """
    return (m - n) % 3


def hex_distance(m: int, n: int) -> int:
    """Graph distance from (m, n) to the origin (six unit directions)."""
    return (abs(m) + abs(n) + abs(m + n)) // 2


def hex_patch(radius: int, centers=ANCHOR_NODES) -> list[NodeCoord]:
    """Nodes within graph distance radius of any of the given centers,
    sorted by (n, m).  The default centers are the anchor triangle, which
    gives the hexagon-like crops used by the figure renders.
    """
    if radius < 0:
        raise InputError(f"radius must be >= 0, got {radius!r}")
    nodes = set()
    for cm, cn in centers:
        for m in range(cm - radius, cm + radius + 1):
            for n in range(cn - radius, cn + radius + 1):
                if hex_distance(m - cm, n - cn) <= radius:
                    nodes.add((m, n))
    return sorted(nodes, key=lambda v: (v[1], v[0]))


@dataclass(frozen=True)
class TrianglePlacement:
    """Three pairwise adjacent nodes forming a unit lattice triangle."""

    v1: NodeCoord
    v2: NodeCoord
    v3: NodeCoord

    def __post_init__(self):
        for p, q in ((self.v1, self.v2), (self.v1, self.v3), (self.v2, self.v3)):
            if hex_distance(p[0] - q[0], p[1] - q[1]) != 1:
                raise InputError(f"vertices {p} and {q} are not adjacent")

    @property
    def orientation(self) -> str:
        """'up' if the triangle is a translate of the anchor triangle."""
        ms = sorted(v[0] for v in (self.v1, self.v2, self.v3))
        ns = sorted(v[1] for v in (self.v1, self.v2, self.v3))
        # up triangles have two vertices on the lower n row, down triangles one
        return "up" if ns[0] == ns[1] and ms[0] == ms[1] else "down"


def unit_triangles(bounds: Bounds):
    """Yield (vertices, orientation) for every unit triangle whose three
    vertices lie inside bounds.  Up triangles are (v, v+e1, v+e2), down
    triangles (v+e1, v+e2, v+e1+e2)."""
    m0, m1, n0, n1 = bounds
    for m in range(m0, m1):
        for n in range(n0, n1):
            yield ((m, n), (m + 1, n), (m, n + 1)), "up"
            yield ((m + 1, n), (m, n + 1), (m + 1, n + 1)), "down"


@dataclass
class WeightGrid:
    """Finite patch of a tiling: base triple, inclusive bounds, weights."""

    base: Triple
    bounds: Bounds
    weights: dict[NodeCoord, int] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.weights)

    def sorted_items(self) -> list[tuple[NodeCoord, int]]:
        return sorted(self.weights.items(), key=lambda kv: (kv[0][1], kv[0][0]))


def closed_region(base: Triple, bounds: Bounds) -> WeightGrid:
    """Fill a rectangular patch directly from the closed form."""
    m0, m1, n0, n1 = bounds
    if m0 > m1 or n0 > n1:
        raise InputError(f"empty bounds {bounds!r}")
    weights = {
        (m, n): closed_weight(base, m, n)
        for n in range(n0, n1 + 1)
        for m in range(m0, m1 + 1)
    }
    return WeightGrid(base, bounds, weights)


def generate_region(base: Triple, bounds: Bounds) -> WeightGrid:
    """Fill a rectangular patch by breadth-first lozenge expansion.

    Starting from the anchor triangle, each step reflects one vertex of a
    known triangle across the opposite edge: the new node is vj + vk - vi
    and its weight is wj + wk + 1 - wi.  Whenever a node reached through
    a new path already holds a weight the two values are compared; any
    disagreement raises InternalCheckError (the construction is
    consistent, so this must never fire).

    The bounds must contain the anchor triangle.  The result matches
    closed_weight pointwise.
    """
    m0, m1, n0, n1 = bounds
    if not (m0 <= 0 and m1 >= 1 and n0 <= 0 and n1 >= 1):
        raise InputError(f"bounds {bounds!r} must contain the anchor triangle")
    a, b, c = base
    # expand by one node so corner nodes of the requested box get covered
    em0, em1, en0, en1 = m0 - 1, m1 + 1, n0 - 1, n1 + 1

    weights: dict[NodeCoord, int] = {(0, 0): a, (1, 0): b, (0, 1): c}
    start = (0, 0, 0)  # (corner m, corner n, 0 = up / 1 = down)
    seen = {start}
    queue = deque((start,))
    while queue:
        m, n, down = queue.popleft()
        if down:
            verts = ((m + 1, n), (m, n + 1), (m + 1, n + 1))
            moves = (
                ((m, n + 1, 0), (m, n + 2), 0),
                ((m + 1, n, 0), (m + 2, n), 1),
                ((m, n, 0), (m, n), 2),
            )
        else:
            verts = ((m, n), (m + 1, n), (m, n + 1))
            moves = (
                ((m, n, 1), (m + 1, n + 1), 0),
                ((m - 1, n, 1), (m - 1, n + 1), 1),
                ((m, n - 1, 1), (m + 1, n - 1), 2),
            )
        w = (weights[verts[0]], weights[verts[1]], weights[verts[2]])
        for nbr, new_node, replaced in moves:
            if nbr in seen:
                continue
            tm, tn, _ = nbr
            if not (em0 <= tm and tm + 1 <= em1 and en0 <= tn and tn + 1 <= en1):
                continue
            new_w = w[0] + w[1] + w[2] + 1 - 2 * w[replaced]
            old = weights.get(new_node)
            if old is None:
                weights[new_node] = new_w
            elif old != new_w:
                raise InternalCheckError(
                    f"inconsistent weight at {new_node}: {old} vs {new_w}"
                )
            seen.add(nbr)
            queue.append(nbr)

    kept = {
        (m, n): weights[(m, n)]
        for n in range(n0, n1 + 1)
        for m in range(m0, m1 + 1)
    }
    return WeightGrid(base, bounds, kept)


def real_minimizer(base: Triple) -> tuple[float, float]:
    """Real-valued minimizer of the weight function (thirds of integers)."""
    a, b, c = base
    return ((a - 2 * b + c + 1) / 3.0, (a + b - 2 * c + 1) / 3.0)


def minimum_weight(base: Triple) -> tuple[int, list[NodeCoord]]:
    """Exact minimum weight of a tiling and every node attaining it.

    The real minimizer is ((a - 2b + c + 1)/3, (a + b - 2c + 1)/3); the
    integer minimum is found by checking all lattice points within
    Chebyshev distance 2 of its floor (the quadratic part has Hessian
    [[2, 1], [1, 2]], so the integer argmin cannot be farther away).
    """
    a, b, c = base
    mf = (a - 2 * b + c + 1) // 3
    nf = (a + b - 2 * c + 1) // 3
    best = None
    argmin: list[NodeCoord] = []
    for n in range(nf - 2, nf + 3):
        for m in range(mf - 2, mf + 3):
            w = closed_weight(base, m, n)
            if best is None or w < best:
                best = w
                argmin = [(m, n)]
            elif w == best:
                argmin.append((m, n))
    return best, sorted(argmin, key=lambda v: (v[1], v[0]))


def _scan_box(base: Triple, limit: int):
    """Yield (weight, (m, n)) for all nodes with weight <= limit.

    The search box is centered on the real minimizer with radius
    isqrt(4 * (limit - min + 1)) + 1, which dominates the exact ellipse
    half-axes of the positive definite quadratic part.
    """
    wmin, _ = minimum_weight(base)
    if limit < wmin:
        return
    a, b, c = base
    radius = isqrt(4 * (limit - wmin + 1)) + 1
    mf = (a - 2 * b + c + 1) // 3
    nf = (a + b - 2 * c + 1) // 3
    for n in range(nf - radius, nf + radius + 2):
        for m in range(mf - radius, mf + radius + 2):
            w = closed_weight(base, m, n)
            if w <= limit:
                yield w, (m, n)


def represented_below(base: Triple, limit: int) -> list[tuple[int, NodeCoord]]:
    """All (weight, node) pairs with weight <= limit, sorted by weight
    then node.  Finite for every limit since the form is positive
    definite; distinct nodes may repeat a weight and are all returned.
    """
    hits = list(_scan_box(base, limit))
    hits.sort(key=lambda wn: (wn[0], wn[1][0], wn[1][1]))
    return hits


def is_represented(base: Triple, value: int) -> tuple[bool, list[NodeCoord]]:
    """Whether some node of the tiling carries value, with all witnesses."""
    witnesses = [node for w, node in _scan_box(base, value) if w == value]
    witnesses.sort(key=lambda v: (v[1], v[0]))
    return bool(witnesses), witnesses


def is_loeschian(v: int) -> bool:
    """Whether v = x^2 + xy + y^2 for some integers x, y >= 0.

    Uses the multiplicative criterion: v >= 0 and every prime congruent
    to 2 mod 3 divides v to an even power.
    """
    if v < 0:
        return False
    if v == 0:
        return True
    n = v
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if d % 3 == 2 and e % 2 == 1:
                return False
        d += 1 if d == 2 else 2
    if n > 1 and n % 3 == 2:
        return False
    return True


def is_loeschian_by_form(v: int) -> bool:
    """Form-search route: v is a weight of the (0, 1, 1) tiling."""
    return is_represented((0, 1, 1), v)[0]


def loeschian_flags_by_form(limit: int) -> np.ndarray:
    """Boolean table of x^2 + xy + y^2 values up to limit, by generation."""
    if limit < 0:
        raise InputError("limit must be >= 0")
    flags = np.zeros(limit + 1, dtype=bool)
    flags[0] = True
    for x in range(0, isqrt(limit) + 1):
        ymax = (isqrt(4 * limit - 3 * x * x) - x) // 2
        y = np.arange(0, ymax + 1, dtype=np.int64)
        vals = x * x + x * y + y * y
        flags[vals[vals <= limit]] = True
    return flags


def loeschian_flags_by_factorization(limit: int) -> np.ndarray:
    """Boolean table of Loeschian numbers up to limit via the prime
    criterion: exclude v exactly divisible by an odd power of a prime
    q with q = 2 mod 3."""
    if limit < 0:
        raise InputError("limit must be >= 0")
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    primes = np.flatnonzero(sieve)
    bad = np.zeros(limit + 1, dtype=bool)
    for q in primes[primes % 3 == 2]:
        q = int(q)
        qe = q  # odd exponents only: q, q^3, q^5, ...
        step_up = q * q
        while qe <= limit:
            mult = np.arange(qe, limit + 1, qe, dtype=np.int64)
            next_pow = qe * q
            bad[mult[mult % next_pow != 0]] = True
            qe *= step_up
    flags = ~bad
    flags[0] = True
    return flags


def count_occurrences(base: Triple, target: Triple, bounds: Bounds | None = None,
                      max_cells: int = 200_000_000) -> int:
    """How many unit triangles of the tiling read exactly the ordered
    triple target through the component coloring.

    Reading a triangle assigns the weight at each vertex to the component
    slot given by node_role; that is the arrangement the dynamics
    produce, so each reachable ordered triple is counted at its actual
    placements.  When bounds is omitted a box is used that provably
    contains every node whose weight is at most max(target).
    """
    wmin, argmin = minimum_weight(base)
    if min(target) < wmin:
        return 0
    if bounds is None:
        spread = max(target) - min(target)
        reach = isqrt(4 * (max(target) - wmin + 1) // 3) + 1
        radius = 10 + spread + reach
        cm, cn = argmin[0]
        bounds = (cm - radius, cm + radius, cn - radius, cn + radius)
    m0, m1, n0, n1 = bounds
    if (m1 - m0 + 1) * (n1 - n0 + 1) > max_cells:
        raise ResourceLimitError(
            f"occurrence scan over {bounds} exceeds {max_cells} cells"
        )

    # plain integer rows keep the arithmetic exact for any magnitude
    w = [
        [closed_weight(base, m, n) for n in range(n0, n1 + 1)]
        for m in range(m0, m1 + 1)
    ]
    count = 0
    read = [0, 0, 0]
    t = tuple(target)
    for i in range(m1 - m0):
        row, row_right = w[i], w[i + 1]
        r0 = (m0 + i - n0) % 3
        for j in range(n1 - n0):
            r = (r0 - j) % 3
            # up triangle (m, n), (m+1, n), (m, n+1)
            read[r] = row[j]
            read[(r + 1) % 3] = row_right[j]
            read[(r + 2) % 3] = row[j + 1]
            if (read[0], read[1], read[2]) == t:
                count += 1
            # down triangle (m+1, n), (m, n+1), (m+1, n+1)
            read[r] = row_right[j + 1]
            if (read[0], read[1], read[2]) == t:
                count += 1
    return count
