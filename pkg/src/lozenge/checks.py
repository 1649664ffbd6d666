"""Named self-checks behind the CLI verify subcommand.

Each check exercises one contract of the library against an independent
route (closed form vs breadth-first construction, sweep vs table, walk
vs formula) and reports a single pass/fail line.  The heavyweight
acceptance suite lives in tests/; these checks are sized to run in a few
seconds at default settings.
"""

from __future__ import annotations

import random

from . import lattice, modular, reduction
from .ops import (
    H1,
    H2,
    H3,
    apply_operator,
    apply_word,
    iterate_word_component,
    verify_identities,
)

SCOPES = ("identities", "densities", "closed-form", "census", "all")


class Check:
    def __init__(self, name, ok, detail=""):
        self.name = name
        self.ok = bool(ok)
        self.detail = detail

    def line(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        suffix = f"  ({self.detail})" if self.detail else ""
        return f"{mark} {self.name}{suffix}"


def _random_triples(rng, n, lo=-10**6, hi=10**6):
    return [(rng.randint(lo, hi), rng.randint(lo, hi), rng.randint(lo, hi))
            for _ in range(n)]


def check_identities(seed=0, samples=10_000):
    rng = random.Random(seed)
    triples = _random_triples(rng, samples)
    rep = verify_identities(triples)
    yield Check("involutions", rep.involution, f"{samples} samples")
    yield Check("braid relations", rep.braid, f"{samples} samples")
    yield Check("order-six relations", rep.order_six, f"{samples} samples")
    yield Check(
        "non-commutation witness",
        rep.noncommuting_witness is not None,
        str(rep.noncommuting_witness),
    )
    commuting_point = apply_operator(H2, apply_operator(H1, (2, 2, 1))) == \
        apply_operator(H1, apply_operator(H2, (2, 2, 1)))
    differing_point = apply_operator(H2, apply_operator(H1, (0, 0, 0))) != \
        apply_operator(H1, apply_operator(H2, (0, 0, 0)))
    yield Check("commutation only on y=x, z=x-1",
                commuting_point and differing_point)


def _represented_values_by_walk(base, limit, depth):
    """Collect represented values <= limit by direct operator search."""
    seen = {base}
    level = [base]
    values = {v for v in base if v <= limit}
    for _ in range(depth):
        nxt = []
        for t in level:
            x, y, z = t
            for child in ((y + z + 1 - x, y, z),
                          (x, x + z + 1 - y, z),
                          (x, y, x + y + 1 - z)):
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
                    values.update(v for v in child if v <= limit)
        level = nxt
    return values


def check_closed_form(seed=0, bases=12, span=25):
    rng = random.Random(seed)

    chain = [(1, 2, 3)]
    for op in (H1, H3, H2, H1, H1):
        chain.append(apply_operator(op, chain[-1]))
    yield Check(
        "worked chain (1,2,3) to (5,9,5)",
        chain == [(1, 2, 3), (5, 2, 3), (5, 2, 5), (5, 9, 5), (10, 9, 5), (5, 9, 5)],
    )
    yield Check(
        "coincidence chains share the third component",
        apply_word((H1, H3, H2, H3), (1, 3, 6)) == (9, 14, 17)
        and apply_word((H1, H3, H2, H3), (6, 7, 9)) == (11, 15, 17),
    )
    seq_a = iterate_word_component((9, 14, 17), (H2, H3, H1, H3), 3, 10)
    seq_b = iterate_word_component((11, 15, 17), (H2, H3, H1, H3), 3, 10)
    quad = [3 * k * k - k + 17 for k in range(11)]
    yield Check("coincidence sequence is 3k^2 - k + 17", seq_a == quad == seq_b)

    ok = True
    for _ in range(bases):
        base = _random_triples(rng, 1, -span, span)[0]
        grid = lattice.generate_region(base, (-8, 8, -8, 8))
        for (m, n), w in grid.weights.items():
            if w != lattice.closed_weight(base, m, n):
                ok = False
    yield Check("region construction matches closed form", ok,
                f"{bases} bases, 17x17 patches")

    base = _random_triples(rng, 1, -span, span)[0]
    grid = lattice.generate_region(base, (-6, 6, -6, 6))
    rule = True
    for m in range(-6, 6):
        for n in range(-6, 6):
            w = grid.weights
            long_sum = w[(m, n)] + w[(m + 1, n + 1)]
            short_sum = w[(m + 1, n)] + w[(m, n + 1)]
            if long_sum != short_sum + 1:
                rule = False
    yield Check("lozenge diagonal rule (+1)", rule)

    ok = True
    for _ in range(200):
        a = rng.randint(-20, 20)
        c = rng.randint(-20, 20)
        n = rng.randint(0, 12)
        brute = (a, a, c)
        for _ in range(n):
            brute = apply_word(reduction.ZIGZAG_WORD, brute)
        if brute != reduction.zigzag_apply(a, c, n):
            ok = False
    yield Check("zigzag closed form matches word application", ok, "200 cases")

    ok = True
    for _ in range(40):
        base = _random_triples(rng, 1, -20, 20)[0]
        wmin, _ = lattice.minimum_weight(base)
        brute = min(
            lattice.closed_weight(base, m, n)
            for m in range(-60, 61)
            for n in range(-60, 61)
        )
        if wmin != brute:
            ok = False
    yield Check("minimum formula matches brute force", ok, "40 bases")

    loeschian_prefix = [0, 1, 3, 4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28, 31, 36, 37]
    got = sorted({w for w, _ in lattice.represented_below((0, 1, 1), 37)})
    yield Check("weights of (0,1,1) up to 37", got == loeschian_prefix)

    walk = _represented_values_by_walk((0, 0, 0), 36, depth=20)
    scan = {w for w, _ in lattice.represented_below((0, 0, 0), 36)}
    yield Check("weights of (0,0,0) up to 36 match operator search",
                scan == walk, f"{len(scan)} values")

    yield Check(
        "2023 is a (0,1,1) weight, 2024 is not",
        lattice.is_represented((0, 1, 1), 2023)[0]
        and not lattice.is_represented((0, 1, 1), 2024)[0],
    )
    limit = 100_000
    bulk = bool(
        (lattice.loeschian_flags_by_form(limit)
         == lattice.loeschian_flags_by_factorization(limit)).all()
    )
    scalars = all(
        lattice.is_loeschian(v) == lattice.is_loeschian_by_form(v)
        for v in range(0, 300)
    )
    yield Check("membership criteria agree (factorization vs form)",
                bulk and scalars, f"tables to {limit}, scalars to 300")


def check_densities(pmax=97):
    primes = modular.primes_upto(pmax)
    mismatch = []
    for p in primes:
        for germ in modular.GERM_FORMS:
            sweep = modular.count_form_residues(germ, p)
            table = modular.theoretical_density(germ, p)
            if sweep.counts != table.counts:
                mismatch.append((germ, p))
    yield Check("sweep counts equal closed-form tables",
                not mismatch, f"p <= {pmax}, both germs" if not mismatch
                else f"mismatch at {mismatch[:3]}")

    bad = []
    for p in primes:
        if p < 5:
            continue
        for germ in modular.GERM_FORMS:
            sweep = modular.count_form_residues(germ, p)
            special = modular.special_index(germ, p)
            if sweep.counts[special] not in (1, 2 * p - 1):
                bad.append((germ, p))
            shifted = [sweep.counts[l] for l in range(p) if l != special]
            if len(set(shifted)) != 1:
                bad.append((germ, p, "nonuniform"))
    yield Check("special class holds 1 or 2p-1 solutions, rest uniform",
                not bad, f"p <= {pmax}")

    ok = True
    for p in primes:
        for germ, base in (("G000", (0, 0, 0)), ("G011", (0, 1, 1))):
            if modular.empirical_tiling_density(base, p).counts != \
                    modular.count_form_residues(germ, p).counts:
                ok = False
    yield Check("tiling sweep equals form sweep on the germs", ok,
                f"p <= {pmax}")

    sq = [modular.legendre(-3, p) for p in primes if p >= 5]
    expect = [1 if p % 6 == 1 else -1 for p in primes if p >= 5]
    yield Check("(-3 | p) follows p mod 6", sq == expect)


def check_census():
    r100 = reduction.negative_census(100)
    yield Check(
        "census at c=100",
        r100.min_weight == -3300
        and r100.negative_count == 11946
        and abs(r100.ratio - 0.98793) < 1e-5,
        f"count {r100.negative_count}, ratio {r100.ratio:.5f}",
    )
    minima = [abs(reduction.classify((0, 0, c)).offset) for c in range(11)]
    yield Check("minimum sequence for c = 0..10",
                minima == [0, 0, 1, 2, 4, 7, 10, 14, 19, 24, 30])
    ratios = {c: reduction.negative_census(c).ratio for c in (50, 100, 200)}
    in_band = all(0.9 <= r <= 1.1 for r in ratios.values())
    trend = abs(ratios[50] - 1) >= abs(ratios[100] - 1) >= abs(ratios[200] - 1)
    yield Check("census ratio near 1 and tightening", in_band and trend,
                ", ".join(f"c={c}: {r:.5f}" for c, r in ratios.items()))
    germs = {c: reduction.classify((0, 0, c)).germ for c in range(1, 31)}
    ok = all(
        (g == "G110") == (c % 3 == 2) and g in ("G000", "G110")
        for c, g in germs.items()
    )
    yield Check("tower of (0,0,c) follows c mod 3", ok, "c = 1..30")


def run_checks(scope="all", seed=0, samples=10_000, pmax=97):
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}, got {scope!r}")
    checks = []
    if scope in ("identities", "all"):
        checks.extend(check_identities(seed=seed, samples=samples))
    if scope in ("closed-form", "all"):
        checks.extend(check_closed_form(seed=seed))
    if scope in ("densities", "all"):
        checks.extend(check_densities(pmax=pmax))
    if scope in ("census", "all"):
        checks.extend(check_census())
    return checks
