from itertools import product
from math import comb

import pytest

from permfact.oracle import transpositions, compose, identity
from permfact.partitions import enumerate_partitions, conjugate, rho
from permfact.transition import (build_transition_matrix, build_raw_counts,
                                 verify_matrix_equality,
                                 matrix_equality_offenders,
                                 matrix_power_apply, row_sums,
                                 bipartite_offenders,
                                 zero_multiplicity_lower_bound,
                                 eigen_mismatches, dual_eigen_mismatches)

A4 = [[0, 6, 0, 0, 0],
      [1, 0, 1, 4, 0],
      [0, 2, 0, 0, 4],
      [0, 3, 0, 0, 3],
      [0, 0, 2, 4, 0]]


def test_a4_matrix():
    assert build_transition_matrix(4) == A4


def test_a2_matrix():
    assert build_transition_matrix(2) == [[0, 1], [1, 0]]


def test_single_entries_by_case():
    # split a 2 of (2,1,1) into 1+1: source multiplicity of 1 is 2
    index = enumerate_partitions(4)
    m = build_transition_matrix(4)
    assert m[index.rank[(1, 1, 1, 1)]][index.rank[(2, 1, 1)]] == 6
    # glue 2+2 of (2,2) into 4: source multiplicity of 4 is 0
    assert m[index.rank[(4,)]][index.rank[(2, 2)]] == 2


def test_raw_counts_211_row():
    index = enumerate_partitions(4)
    raw = build_raw_counts(4)
    row = raw[index.rank[(2, 1, 1)]]
    assert row[index.rank[(1, 1, 1, 1)]] == 1
    assert row[index.rank[(3, 1)]] == 4
    assert row[index.rank[(2, 2)]] == 1
    assert row[index.rank[(4,)]] == 0
    col = index.rank[(2, 1, 1)]
    assert raw[index.rank[(1, 1, 1, 1)]][col] == 6
    assert raw[index.rank[(3, 1)]][col] == 3
    assert raw[index.rank[(2, 2)]][col] == 2
    assert raw[index.rank[(4,)]][col] == 0


def test_formula_equals_raw_counts():
    for n in range(2, 11):
        assert verify_matrix_equality(n)
    assert matrix_equality_offenders(6) == []


def test_raw_count_rows_sum_to_transposition_count():
    for n in range(2, 9):
        raw = build_raw_counts(n)
        assert row_sums(raw) == [comb(n, 2)] * len(raw)


def test_row_sums_and_bipartite():
    for n in range(2, 16):
        m = build_transition_matrix(n)
        assert row_sums(m) == [comb(n, 2)] * len(m)
        assert bipartite_offenders(n, m) == []


def test_matrix_power_apply():
    m = build_transition_matrix(4)
    e = [1, 0, 0, 0, 0]
    assert matrix_power_apply(m, 4, e) == [120, 0, 104, 108, 0]
    assert matrix_power_apply(m, 0, [5, 4, 3, 2, 1]) == [5, 4, 3, 2, 1]


def test_matrix_power_matches_pair_enumeration_s3():
    # count ordered pairs of transpositions in S_3 by hand
    taus = transpositions(3)
    tally = {}
    for t1, t2 in product(taus, repeat=2):
        g = compose(t1, t2)
        tally[g] = tally.get(g, 0) + 1
    assert tally[identity(3)] == 3
    assert tally[(1, 2, 0)] == 3  # a 3-cycle
    m = build_transition_matrix(3)
    assert matrix_power_apply(m, 2, [1, 0, 0]) == [3, 0, 3]


def test_zero_multiplicity_lower_bound():
    assert zero_multiplicity_lower_bound(3) == 1
    assert zero_multiplicity_lower_bound(4) == 1
    for n in range(2, 13):
        expect = sum(1 for lam in enumerate_partitions(n)
                     if lam == conjugate(lam))
        assert zero_multiplicity_lower_bound(n) == expect
        zeros = sum(1 for lam in enumerate_partitions(n) if rho(lam) == 0)
        assert zeros >= expect


def test_eigen_relations_small():
    for n in range(2, 9):
        assert eigen_mismatches(n) == []
        assert dual_eigen_mismatches(n) == []


def test_fault_injection_is_detected():
    n = 5
    m = build_transition_matrix(n)
    m[0][1] += 1  # flip one entry
    bad = eigen_mismatches(n, matrix=m)
    assert bad, "a corrupted matrix must fail the eigen relations"
    # the offending row is the one that was corrupted
    index = enumerate_partitions(n)
    lam, nu = bad[0]
    assert nu in index.ordered and lam in index.ordered
    assert any(pair[1] == (1,) * n for pair in bad)


def test_needs_n_at_least_2():
    with pytest.raises(ValueError):
        build_transition_matrix(1)
    with pytest.raises(ValueError):
        matrix_power_apply([[0]], -1, [1])
    with pytest.raises(ValueError):
        matrix_power_apply([[0, 0], [0, 0]], 1, [1])
