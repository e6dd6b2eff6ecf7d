from fractions import Fraction
from math import comb, factorial

import pytest

from permfact.characters import build_character_table, mn_character
from permfact.counting import (count_spectral, count_matrix_method,
                               count_goulden, count_two_cycle,
                               two_cycle_terms, series_prefix)
from permfact.oracle import count_brute, count_tuples
from permfact.partitions import enumerate_partitions, class_size, rho


def test_spectral_examples():
    assert count_spectral((3, 1), 4) == 108
    assert count_spectral((1, 1, 1, 1), 4) == 120
    assert count_spectral((2, 2), 4) == 104
    for n in range(2, 9):
        assert count_spectral((2,) + (1,) * (n - 2), 1) == 1


def test_matrix_method_examples():
    index = enumerate_partitions(4)
    vec = [count_matrix_method(mu, 4) for mu in index]
    assert vec == [120, 0, 104, 108, 0]
    for mu in index:
        assert count_matrix_method(mu, 0) == (1 if mu == (1, 1, 1, 1) else 0)


def test_three_way_agreement_small():
    for n in range(2, 8):
        table = build_character_table(n)
        index = enumerate_partitions(n)
        for mu in index:
            for k in range(7):
                s = count_spectral(mu, k, table=table)
                assert s == count_matrix_method(mu, k)
                assert s == count_brute(mu, k)


def test_tuple_enumeration_spot_check():
    for n in range(2, 5):
        index = enumerate_partitions(n)
        for mu in index:
            for k in range(5):
                assert count_tuples(mu, k) == count_brute(mu, k)


def test_goulden_examples():
    assert count_goulden(3, 2) == 3
    for n in range(2, 9):
        for k in range(13):
            if (k - (n - 1)) % 2 == 1:
                assert count_goulden(n, k) == 0


def test_goulden_matches_spectral():
    for n in range(1, 11):
        table = build_character_table(n)
        for k in range(21):
            assert count_goulden(n, k) == count_spectral((n,), k, table=table)


def test_two_cycle_shape_values_match_recursion():
    """The closed-form terms carry the exact character data per shape."""
    for n in range(2, 11):
        table = build_character_table(n)
        for k_small in range(1, n // 2 + 1):
            m = n - k_small
            mu = (m, k_small)
            seen = set()
            for lam, chi_mu, chi_one, r in two_cycle_terms(m, k_small):
                assert lam not in seen, f"duplicate term for {lam}"
                seen.add(lam)
                assert chi_mu == mn_character(lam, mu)
                assert chi_one == table.dimension(lam)
                assert r == rho(lam)
            # coverage: every shape with nonzero character appears
            for lam in enumerate_partitions(n):
                if mn_character(lam, mu) != 0:
                    assert lam in seen, f"{lam} missing from closed form"


def test_two_cycle_counts():
    assert count_two_cycle(1, 1, 1) == 0
    assert count_two_cycle(1, 1, 2) == 1
    for n in range(2, 11):
        table = build_character_table(n)
        for k_small in range(1, n // 2 + 1):
            m = n - k_small
            for k in range(13):
                assert count_two_cycle(m, k_small, k) == \
                    count_spectral((m, k_small), k, table=table)


def test_two_cycle_validation():
    with pytest.raises(ValueError):
        count_two_cycle(1, 2, 3)
    with pytest.raises(ValueError):
        count_two_cycle(3, 1, -1)


def test_series_prefix_examples():
    p = series_prefix((3,), 4)
    assert p.coefficients == (Fraction(0), Fraction(0), Fraction(3, 2),
                              Fraction(0))
    assert p.nonzero_parity == 0
    for n in range(2, 7):
        p = series_prefix((1,) * n, 6)
        assert p.coefficients[0] == 1  # empty product gives the identity
        assert p.coefficients[1] == 0


def test_series_parity_collapse():
    for n in range(2, 9):
        table = build_character_table(n)
        for mu in enumerate_partitions(n):
            p = series_prefix(mu, 16, table=table)
            live = (n - len(mu)) % 2
            assert p.nonzero_parity == live
            for j, c in enumerate(p.coefficients):
                if j % 2 != live:
                    assert c == 0


def test_count_vanishing_pattern():
    for n in range(2, 9):
        table = build_character_table(n)
        for mu in enumerate_partitions(n):
            dist = n - len(mu)
            for k in range(17):
                c = count_spectral(mu, k, table=table)
                if k < dist or (k - dist) % 2:
                    assert c == 0, (mu, k)
                else:
                    assert c > 0, (mu, k)


def test_mass_conservation():
    for n in range(2, 8):
        table = build_character_table(n)
        index = enumerate_partitions(n)
        for k in range(11):
            total = sum(class_size(mu) * count_spectral(mu, k, table=table)
                        for mu in index)
            assert total == comb(n, 2) ** k


def test_validation_errors():
    with pytest.raises(ValueError):
        count_spectral((3, 1), -1)
    with pytest.raises(ValueError):
        count_spectral((1, 2), 3)
    with pytest.raises(ValueError):
        series_prefix((2, 1), 0)
    with pytest.raises(ValueError):
        count_goulden(0, 1)
