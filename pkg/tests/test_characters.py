import json
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from permfact.characters import (mn_character, enumerate_bst,
                                 bst_signed_count, dimension_hook_formula,
                                 build_character_table,
                                 character_table_cached, save_table,
                                 load_table)
from permfact.partitions import enumerate_partitions, conjugate, z_value


def test_trivial_and_sign_rows():
    for n in range(1, 9):
        index = enumerate_partitions(n)
        for mu in index:
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** (n - len(mu))


def test_single_cycle_column_hooks_only():
    for n in range(2, 10):
        for lam in enumerate_partitions(n):
            chi = mn_character(lam, (n,))
            if len(lam) == 1 or lam[1] == 1:  # hook
                assert chi == (-1) ** (len(lam) - 1)
            else:
                assert chi == 0


def test_character_table_n3():
    table = build_character_table(3)
    assert table.values == ((1, -1, 1), (2, 0, -1), (1, 1, 1))


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2, 1), (2, 2))
    with pytest.raises(ValueError):
        enumerate_bst((2, 1), (4,))


def test_bst_examples():
    assert enumerate_bst((2, 2), (4,)) == []
    tabs = enumerate_bst((2, 1), (1, 1, 1))
    assert len(tabs) == 2
    assert all(t.height + t.width + len(t.content) == 3 for t in tabs)
    assert bst_signed_count((2, 1), (1, 1, 1)) == 2


def test_bst_cells_identity_and_match_recursion():
    for n in range(1, 8):
        index = enumerate_partitions(n)
        for lam in index:
            for mu in index:
                tabs = enumerate_bst(lam, mu)
                for t in tabs:
                    assert t.height + t.width + len(mu) == n
                    # content counts respected
                    flat = [v for row in t.filling for v in row]
                    assert sorted(flat) == [i + 1 for i, p in enumerate(mu)
                                            for _ in range(p)]
                assert sum(t.sign() for t in tabs) == mn_character(lam, mu)


def test_bst_ceiling():
    with pytest.raises(ValueError):
        enumerate_bst((9,), (9,))


def test_dimension_examples():
    assert dimension_hook_formula((2, 1)) == 2
    for n in range(1, 11):
        for b in range(n):
            a = n - b
            assert dimension_hook_formula((a,) + (1,) * b) == comb(n - 1, b)


def test_dimension_two_hook_shapes():
    # shapes (a, c+1, 2^d, 1^(b-d-1)): multinomial closed form
    for a, b, c, d in [(2, 1, 1, 0), (3, 2, 1, 0), (3, 2, 2, 1), (4, 3, 2, 1),
                       (5, 2, 1, 1), (4, 4, 3, 2)]:
        n = a + b + c + d
        lam = tuple(sorted((a, c + 1) + (2,) * d + (1,) * (b - d - 1),
                           reverse=True))
        expect = (factorial(n) // (factorial(a) * factorial(b)
                                   * factorial(c) * factorial(d))
                  * a * c * (a - c) * (b - d)
                  // ((a + b) * (a + d) * (b + c) * (c + d)))
        assert dimension_hook_formula(lam) == expect


def test_first_column_and_burnside():
    for n in range(1, 13):
        table = build_character_table(n)
        index = enumerate_partitions(n)
        for pos, lam in enumerate(index):
            assert table.values[pos][0] == dimension_hook_formula(lam)
        assert sum(row[0] ** 2 for row in table.values) == factorial(n)


def test_orthogonality_exact():
    for n in range(1, 10):
        table = build_character_table(n)
        index = enumerate_partitions(n)
        nfact = factorial(n)
        weights = [nfact // z_value(nu) for nu in index]
        size = len(index)
        for a in range(size):
            for b in range(a, size):
                dot = sum(weights[i] * table.values[a][i] * table.values[b][i]
                          for i in range(size))
                assert dot == (nfact if a == b else 0)


def test_conjugation_symmetry():
    for n in range(1, 11):
        table = build_character_table(n)
        index = enumerate_partitions(n)
        for lam in index:
            row = table.row(lam)
            conj_row = table.row(conjugate(lam))
            for pos, nu in enumerate(index):
                assert conj_row[pos] == (-1) ** (n - len(nu)) * row[pos]


@settings(max_examples=60)
@given(st.data())
def test_mn_order_invariance(data):
    n = data.draw(st.integers(min_value=2, max_value=8))
    index = enumerate_partitions(n)
    lam = data.draw(st.sampled_from(index.ordered))
    mu = data.draw(st.sampled_from(index.ordered))
    shuffled = data.draw(st.permutations(mu))
    assert mn_character(lam, tuple(shuffled)) == mn_character(lam, mu)


def test_parallel_build_matches_serial():
    serial = build_character_table(7)
    parallel = build_character_table(7, jobs=2)
    assert serial.values == parallel.values


def test_cache_roundtrip(tmp_path):
    table = build_character_table(6)
    path = tmp_path / "chartable_n6.json"
    save_table(table, str(path))
    loaded = load_table(str(path), 6)
    assert loaded.values == table.values
    assert loaded.n == 6


def test_cache_corruption_recovers(tmp_path, capsys):
    t1 = character_table_cached(5, cache_dir=str(tmp_path))
    cache_file = tmp_path / "chartable_n5.json"
    assert cache_file.exists()
    cache_file.write_text("{not json")
    t2 = character_table_cached(5, cache_dir=str(tmp_path))
    assert t2.values == t1.values
    assert "corrupt" in capsys.readouterr().err
    # cache was rewritten and is valid again
    payload = json.loads(cache_file.read_text())
    assert payload["schema_version"] == 1


def test_cache_wrong_n_rejected(tmp_path):
    table = build_character_table(4)
    path = tmp_path / "t.json"
    save_table(table, str(path))
    with pytest.raises(ValueError):
        load_table(str(path), 5)


def test_dual_basis_pairing():
    for n in range(1, 9):
        table = build_character_table(n)
        index = enumerate_partitions(n)
        for lam in index:
            for mu in index:
                dot = sum(Fraction(table.value(lam, nu) * table.value(mu, nu),
                                   z_value(nu)) for nu in index)
                assert dot == (1 if lam == mu else 0)
