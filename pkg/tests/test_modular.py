"""Residue-class density tables: sweeps, closed forms, cross checks."""

from fractions import Fraction

import pytest

from lozenge import (
    DensityTable,
    InputError,
    ResourceLimitError,
    count_form_residues,
    empirical_tiling_density,
    form_value,
    is_prime,
    legendre,
    primes_upto,
    special_index,
    theoretical_density,
)
from lozenge.modular import SWEEP_CAP_ENV, sweep_cap


def brute_counts(germ, p):
    """Independent pure-python oracle for the form sweeps."""
    counts = [0] * p
    for x in range(p):
        for y in range(p):
            counts[form_value(germ, x, y) % p] += 1
    return counts


def test_small_prime_tables():
    assert count_form_residues("G011", 2).counts == [1, 3]
    assert count_form_residues("G011", 3).counts == [3, 6, 0]
    assert count_form_residues("G000", 2).counts == [3, 1]
    assert count_form_residues("G000", 3).counts == [3, 3, 3]


def test_sweep_against_pure_python_oracle():
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23):
        for germ in ("G000", "G011"):
            assert count_form_residues(germ, p).counts == brute_counts(germ, p)


def test_theoretical_examples():
    t = theoretical_density("G011", 7)
    assert t.densities[0] == Fraction(13, 49)
    assert all(d == Fraction(6, 49) for d in t.densities[1:])
    t = theoretical_density("G011", 5)
    assert t.densities[0] == Fraction(1, 25)
    assert all(d == Fraction(6, 25) for d in t.densities[1:])
    t = theoretical_density("G000", 5)
    assert t.densities[3] == Fraction(1, 25)
    assert all(d == Fraction(6, 25) for i, d in enumerate(t.densities) if i != 3)
    assert theoretical_density("G000", 3).densities == [Fraction(1, 3)] * 3


def test_sweep_equals_theory_up_to_97():
    for p in primes_upto(97):
        for germ in ("G000", "G011"):
            assert count_form_residues(germ, p).counts == \
                theoretical_density(germ, p).counts, (germ, p)


def test_special_class_and_uniformity():
    for p in primes_upto(60):
        if p < 5:
            continue
        for germ in ("G000", "G011"):
            counts = count_form_residues(germ, p).counts
            s = special_index(germ, p)
            assert counts[s] == (2 * p - 1 if p % 6 == 1 else 1)
            rest = {counts[l] for l in range(p) if l != s}
            assert rest == {p - 1 if p % 6 == 1 else p + 1}


def test_residue_and_nonresidue_classes_match():
    # nonzero classes split by quadratic character carry equal counts
    for p in (5, 7, 11, 13, 31, 37):
        for germ in ("G000", "G011"):
            counts = count_form_residues(germ, p).counts
            s = special_index(germ, p)
            # the character is taken of the class index mapped back to the
            # diagonal form: l itself for G011, 3l + 1 for G000
            def key(l):
                return l if germ == "G011" else (3 * l + 1) % p
            qr = {counts[l] for l in range(p) if l != s and legendre(key(l), p) == 1}
            nqr = {counts[l] for l in range(p) if l != s and legendre(key(l), p) == -1}
            assert len(qr) == 1 and qr == nqr


def test_row_sums():
    for p in (2, 3, 5, 29, 97):
        for germ in ("G000", "G011"):
            assert sum(count_form_residues(germ, p).counts) == p * p
            assert sum(theoretical_density(germ, p).counts) == p * p


def test_empirical_matches_form_on_germs():
    for p in primes_upto(97):
        assert empirical_tiling_density((0, 1, 1), p).counts == \
            count_form_residues("G011", p).counts
        assert empirical_tiling_density((0, 0, 0), p).counts == \
            count_form_residues("G000", p).counts
    assert empirical_tiling_density((0, 0, 0), 3).counts == [3, 3, 3]


def test_empirical_translation_shifts_classes():
    base = (2, 7, 4)
    for p, h in ((7, 3), (11, 5), (13, 12)):
        plain = empirical_tiling_density(base, p).counts
        shifted = empirical_tiling_density(tuple(v + h for v in base), p).counts
        assert shifted == [plain[(l - h) % p] for l in range(p)]


def test_empirical_arbitrary_bases_sum():
    t = empirical_tiling_density((9, 2, 6), 23)
    assert sum(t.counts) == 23 * 23
    assert t.germ is None and t.base == (9, 2, 6)
    t = empirical_tiling_density((1, 8, 3), 37)
    assert sum(t.counts) == 37 * 37


def test_legendre():
    for p in (7, 13, 19, 31):
        assert legendre(-3, p) == 1
    for p in (5, 11, 17, 23, 29):
        assert legendre(-3, p) == -1
    assert legendre(0, 7) == 0
    assert legendre(4, 11) == 1
    with pytest.raises(InputError):
        legendre(3, 2)
    with pytest.raises(InputError):
        legendre(3, 9)


def test_primality_helpers():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert primes_upto(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert primes_upto(1) == []


def test_input_validation():
    with pytest.raises(InputError):
        count_form_residues("G011", 10)
    with pytest.raises(InputError):
        count_form_residues("G012", 7)
    with pytest.raises(InputError):
        theoretical_density("G011", 15)
    with pytest.raises(ResourceLimitError):
        count_form_residues("G011", 101, cap=97)
    with pytest.raises(ResourceLimitError):
        empirical_tiling_density((0, 1, 1), 101, cap=97)


def test_sweep_cap_env_override(monkeypatch):
    monkeypatch.setenv(SWEEP_CAP_ENV, "50")
    assert sweep_cap() == 50
    with pytest.raises(ResourceLimitError):
        count_form_residues("G011", 53)
    monkeypatch.setenv(SWEEP_CAP_ENV, "not-a-number")
    with pytest.raises(InputError):
        sweep_cap()


def test_density_table_contract():
    t = count_form_residues("G011", 7)
    assert t.rows()[0] == (0, 13, 13, 49)
    assert t.as_dict()["densities"][1] == "6/49"
    with pytest.raises(InputError):
        DensityTable(5, "G011", [25, 0, 0, 0])  # wrong length
    with pytest.raises(InputError):
        DensityTable(2, "G011", [1, 2])  # wrong total
