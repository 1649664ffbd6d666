"""Operator algebra on ordered integer triples.

Three operators H1, H2, H3 act on a triple (x, y, z).  Each replaces one
component by one plus the sum of the other two and keeps those two:

    H1(x, y, z) = (y + z + 1 - x, y, z)
    H2(x, y, z) = (x, x + z + 1 - y, z)
    H3(x, y, z) = (x, y, x + y + 1 - z)

All arithmetic is exact; Python integers never overflow.

A word is a sequence of operator ids stored in execution order: ops[0] is
applied first.  Composition notation runs the other way, so an operator
written F = A o B o C (meaning C is applied first) is stored as the word
(C, B, A).  parse_word accepts both conventions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError

H1, H2, H3 = 1, 2, 3
OPERATORS = (H1, H2, H3)

Triple = tuple[int, int, int]
Word = tuple[int, ...]

_UNORDERED_PAIRS = ((H1, H2), (H1, H3), (H2, H3))
_ORDERED_PAIRS = tuple((i, j) for i in OPERATORS for j in OPERATORS if i != j)


def apply_operator(op: int, t: Triple) -> Triple:
    """Apply a single operator to a triple."""
    x, y, z = t
    if op == 1:
        return (y + z + 1 - x, y, z)
    if op == 2:
        return (x, x + z + 1 - y, z)
    if op == 3:
        return (x, y, x + y + 1 - z)
    raise InputError(f"unknown operator id {op!r}; expected 1, 2 or 3")


def apply_word(word: Sequence[int], t: Triple) -> Triple:
    """Apply a word left to right; the empty word is the identity."""
    for op in word:
        t = apply_operator(op, t)
    return t


def expand_step(t: Triple) -> tuple[Triple, Triple, Triple]:
    """All three one-step images of a triple.

    Duplicates are kept: the k-step image set has 3**k members counted
    with multiplicity, and fixed points (for instance H3 fixes (a, b, c)
    whenever a + b is odd and c = (a + b + 1) // 2) do repeat.
    """
    x, y, z = t
    return (
        (y + z + 1 - x, y, z),
        (x, x + z + 1 - y, z),
        (x, y, x + y + 1 - z),
    )


def iterate_word_component(
    t: Triple, word: Sequence[int], component: int, k_max: int
) -> list[int]:
    """Track one component of t, word(t), word(word(t)), ...

    Returns k_max + 1 values, one per iterate starting at k = 0.
    component is 1-based (1 = x, 2 = y, 3 = z).
    """
    if component not in (1, 2, 3):
        raise InputError(f"component must be 1, 2 or 3, got {component!r}")
    if k_max < 0:
        raise InputError(f"k_max must be >= 0, got {k_max!r}")
    idx = component - 1
    out = [t[idx]]
    for _ in range(k_max):
        t = apply_word(word, t)
        out.append(t[idx])
    return out


@dataclass
class IdentityReport:
    """Pointwise verdict for the operator identities over a sample set."""

    involution: bool = True
    braid: bool = True
    order_six: bool = True
    noncommuting_witness: tuple | None = None
    samples_checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.involution
            and self.braid
            and self.order_six
            and self.noncommuting_witness is not None
        )

    def as_dict(self) -> dict:
        return {
            "involution": self.involution,
            "braid": self.braid,
            "order_six": self.order_six,
            "noncommuting_witness": self.noncommuting_witness,
            "samples_checked": self.samples_checked,
            "failures": self.failures,
        }


def verify_identities(samples: Iterable[Triple]) -> IdentityReport:
    """Check the defining identities of the operator system on samples.

    For every sample triple t this checks, exactly:
      * each operator is an involution, Hk(Hk(t)) = t;
      * the braid relation Hi(Hj(Hi(t))) = Hj(Hi(Hj(t))) for every pair;
      * (Hi o Hj) applied three times is the identity for every ordered
        pair i != j.
    It also records one witness showing that two distinct operators do
    not commute (they only commute on the line y = x, z = x - 1).
    """
    ap = apply_operator
    report = IdentityReport()
    witness = None
    count = 0
    for t in samples:
        count += 1
        for k in OPERATORS:
            if ap(k, ap(k, t)) != t:
                report.involution = False
                report.failures.append(f"involution H{k} fails at {t}")
        for i, j in _UNORDERED_PAIRS:
            left = ap(i, ap(j, ap(i, t)))
            right = ap(j, ap(i, ap(j, t)))
            if left != right:
                report.braid = False
                report.failures.append(f"braid (H{i}, H{j}) fails at {t}")
            if witness is None and ap(i, ap(j, t)) != ap(j, ap(i, t)):
                witness = (i, j, t)
        for i, j in _ORDERED_PAIRS:
            cur = t
            for _ in range(3):
                cur = ap(i, ap(j, cur))
            if cur != t:
                report.order_six = False
                report.failures.append(f"(H{i} o H{j})^3 != Id at {t}")
    report.noncommuting_witness = witness
    report.samples_checked = count
    return report


def parse_triple(text: str) -> Triple:
    """Parse 'a,b,c' into an integer triple."""
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"expected three comma-separated integers, got {text!r}")
    try:
        x, y, z = (int(p.strip()) for p in parts)
    except ValueError as exc:
        raise InputError(f"bad triple {text!r}: {exc}") from None
    return (x, y, z)


def parse_word(text: str, composition_order: bool = False) -> Word:
    """Parse a word over the operator ids.

    Accepts digit strings like '1323', tokens like 'H1H3' and optional
    comma separators, case-insensitive.  By default the string is read in
    execution order (leftmost applied first).  With composition_order=True the
    string is read as a composition chain (rightmost applied first) and
    reversed into execution order.
    """
    cleaned = text.replace(",", "").replace(" ", "").upper().replace("H", "")
    ops = []
    for ch in cleaned:
        if ch not in "123":
            raise InputError(f"bad operator symbol {ch!r} in word {text!r}")
        ops.append(int(ch))
    if composition_order:
        ops.reverse()
    return tuple(ops)
