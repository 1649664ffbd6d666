"""Residue-class densities of tiling weights modulo a prime.

The weights of the (0, 1, 1) tiling are the values of x^2 + xy + y^2 and
the weights of the (0, 0, 0) tiling are the values of
x^2 + y^2 + xy - x - y; both forms are p-periodic in each variable, so
one (x, y) period modulo p carries the exact limit densities.  Counts
are exact integers over the p x p period and densities are exact
rationals with denominator p^2.

Closed-form tables (theoretical_density) exist for both germ forms and
must agree count-for-count with the brute-force sweep for every prime.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

import numpy as np

from .errors import InputError, ResourceLimitError
from .ops import Triple

GERM_FORMS = ("G000", "G011")

SWEEP_CAP_ENV = "LOZENGE_SWEEP_CAP"
DEFAULT_SWEEP_CAP = 20_000

_ROW_BLOCK = 2_000_000  # elements per numpy block in the O(p^2) sweeps


def sweep_cap() -> int:
    """Largest prime accepted by the O(p^2) sweeps, env-overridable."""
    raw = os.environ.get(SWEEP_CAP_ENV)
    if raw is None:
        return DEFAULT_SWEEP_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"bad {SWEEP_CAP_ENV} value {raw!r}") from None


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


def primes_upto(n: int) -> list[int]:
    """All primes <= n by sieve."""
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return [int(p) for p in np.flatnonzero(sieve)]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a | p) by Euler's criterion, in {-1, 0, 1}."""
    if p == 2 or not is_prime(p):
        raise InputError(f"p must be an odd prime, got {p!r}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


@dataclass
class DensityTable:
    """Per-residue-class solution counts for one prime.

    counts[l] is the number of (x, y) in [0, p-1]^2 hitting class l; the
    densities are counts[l] / p^2 as exact Fractions.  germ is set for
    the two canonical forms and None for sweeps over an arbitrary base.
    """

    p: int
    germ: str | None
    counts: list[int]
    base: Triple | None = None

    def __post_init__(self):
        if len(self.counts) != self.p:
            raise InputError(f"expected {self.p} counts, got {len(self.counts)}")
        if sum(self.counts) != self.p * self.p:
            raise InputError(
                f"counts sum to {sum(self.counts)}, expected p^2 = {self.p * self.p}"
            )

    @property
    def densities(self) -> list[Fraction]:
        sq = self.p * self.p
        return [Fraction(cnt, sq) for cnt in self.counts]

    def rows(self) -> list[tuple[int, int, int, int]]:
        """(l, count, density numerator, density denominator) per class."""
        out = []
        for l, (cnt, d) in enumerate(zip(self.counts, self.densities)):
            out.append((l, cnt, d.numerator, d.denominator))
        return out

    def as_dict(self) -> dict:
        return {
            "p": self.p,
            "germ": self.germ,
            "base": list(self.base) if self.base is not None else None,
            "counts": self.counts,
            "densities": [f"{d.numerator}/{d.denominator}" for d in self.densities],
        }


def _check_sweep_prime(p: int, cap: int | None) -> None:
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p!r}")
    limit = sweep_cap() if cap is None else cap
    if p > limit:
        raise ResourceLimitError(f"p={p} exceeds sweep cap {limit}")


def form_value(germ: str, x: int, y: int) -> int:
    """The quadratic form attached to a germ, evaluated at (x, y)."""
    if germ == "G011":
        return x * x + x * y + y * y
    if germ == "G000":
        return x * x + y * y + x * y - x - y
    raise InputError(f"germ must be one of {GERM_FORMS}, got {germ!r}")


def count_form_residues(germ: str, p: int, cap: int | None = None) -> DensityTable:
    """Exact residue-class counts of a germ form by full O(p^2) sweep."""
    if germ not in GERM_FORMS:
        raise InputError(f"germ must be one of {GERM_FORMS}, got {germ!r}")
    _check_sweep_prime(p, cap)
    counts = np.zeros(p, dtype=np.int64)
    y = np.arange(p, dtype=np.int64)[None, :]
    block = max(1, _ROW_BLOCK // p)
    for x0 in range(0, p, block):
        x = np.arange(x0, min(x0 + block, p), dtype=np.int64)[:, None]
        if germ == "G011":
            vals = (x * x + x * y + y * y) % p
        else:
            vals = (x * x + y * y + x * y - x - y) % p
        counts += np.bincount(vals.ravel(), minlength=p)
    return DensityTable(p, germ, [int(v) for v in counts])


def theoretical_density(germ: str, p: int) -> DensityTable:
    """Closed-form residue-class counts for a germ form.

    For the (0, 1, 1) form the heavy or light class sits at l = 0; for
    the (0, 0, 0) form it sits at l = (p-1)/3 when p = 1 mod 6 and at
    l = (2p-1)/3 when p = 5 mod 6.  Classes are heavy (2p-1 solutions)
    when -3 is a quadratic residue (p = 1 mod 6) and light (1 solution)
    otherwise; all remaining classes share p-1 or p+1 solutions.
    """
    if germ not in GERM_FORMS:
        raise InputError(f"germ must be one of {GERM_FORMS}, got {germ!r}")
    if not is_prime(p):
        raise InputError(f"p must be prime, got {p!r}")
    if p == 2:
        counts = [1, 3] if germ == "G011" else [3, 1]
    elif p == 3:
        counts = [3, 6, 0] if germ == "G011" else [3, 3, 3]
    else:
        special = special_index(germ, p)
        if p % 6 == 1:
            counts = [p - 1] * p
            counts[special] = 2 * p - 1
        else:
            counts = [p + 1] * p
            counts[special] = 1
    return DensityTable(p, germ, counts)


def special_index(germ: str, p: int) -> int:
    """Residue class holding the exceptional count for p >= 5.

    This is the class l with 3l + 1 = 0 mod p for the (0, 0, 0) form and
    l = 0 for the (0, 1, 1) form.
    """
    if germ not in GERM_FORMS:
        raise InputError(f"germ must be one of {GERM_FORMS}, got {germ!r}")
    if p < 5 or not is_prime(p):
        raise InputError(f"special index needs a prime p >= 5, got {p!r}")
    if germ == "G011":
        return 0
    return (p - 1) // 3 if p % 6 == 1 else (2 * p - 1) // 3


def empirical_tiling_density(base: Triple, p: int, cap: int | None = None) -> DensityTable:
    """Residue-class counts of tiling weights over one (m, n) period.

    The weight function is p-periodic in m and n modulo p, so the sweep
    over [0, p-1]^2 is exact.  For the anchored germ triples this equals
    count_form_residues of the matching form, count for count.
    """
    _check_sweep_prime(p, cap)
    a, b, c = (v % p for v in base)
    counts = np.zeros(p, dtype=np.int64)
    n = np.arange(p, dtype=np.int64)[None, :]
    block = max(1, _ROW_BLOCK // p)
    for m0 in range(0, p, block):
        m = np.arange(m0, min(m0 + block, p), dtype=np.int64)[:, None]
        vals = (
            -(m + n - 1) * a + m * b + n * c + (m * m + n * n + m * n - m - n)
        ) % p
        counts += np.bincount(vals.ravel(), minlength=p)
    tb = tuple(base)
    germ = {(0, 0, 0): "G000", (0, 1, 1): "G011"}.get(tb)
    return DensityTable(p, germ, [int(v) for v in counts], base=tb)
