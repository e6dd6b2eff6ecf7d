"""Counting factorizations into k transpositions, four ways.

count_spectral evaluates the eigenvalue expansion
    c_k(mu) = (1/n!) * sum_lam chi^lam(1^n) chi^lam(mu) rho_lam^k
exactly over the integers. count_matrix_method powers the transition
matrix instead, count_goulden is the single-cycle closed form, and
count_two_cycle is the closed form for two-part cycle types. All four
agree; the test suite holds them to that.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .partitions import check_partition, enumerate_partitions, rho, DEFAULT_MAX_N
from .transition import build_transition_matrix, matrix_power_apply
from .characters import build_character_table


def count_spectral(mu, k, table=None, max_n=DEFAULT_MAX_N):
    """c_k(mu) from character values and content-sum eigenvalues."""
    mu = check_partition(mu)
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = sum(mu)
    index = enumerate_partitions(n, max_n=max_n)
    if table is None:
        table = build_character_table(n, max_n=max_n)
    col = index.rank[mu]
    total = 0
    for pos, lam in enumerate(index):
        row = table.values[pos]
        total += row[0] * row[col] * rho(lam) ** k
    nfact = factorial(n)
    if total % nfact != 0 or total < 0:
        raise RuntimeError(f"spectral sum {total} is not a nonnegative "
                           f"multiple of {n}! for mu={mu}, k={k}")
    return total // nfact


def count_matrix_method(mu, k, matrix=None, max_n=DEFAULT_MAX_N):
    """c_k(mu) as the mu entry of A^k applied to the unit vector at 1^n."""
    mu = check_partition(mu)
    n = sum(mu)
    index = enumerate_partitions(n, max_n=max_n)
    if matrix is None:
        matrix = build_transition_matrix(n, max_n=max_n)
    e = [0] * len(index)
    e[0] = 1  # canonical order starts at 1^n
    return matrix_power_apply(matrix, k, e)[index.rank[mu]]


def count_goulden(n, k):
    """Single-cycle closed form:
    (1/n!) * sum_i C(n-1,i) (-1)^i (C(n,2) - n i)^k."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    total = sum(comb(n - 1, i) * (-1) ** i * (comb(n, 2) - n * i) ** k
                for i in range(n))
    if total % factorial(n) != 0:
        raise RuntimeError(f"closed form not divisible by n! at n={n}, k={k}")
    return total // factorial(n)


# ---------------------------------------------------------------------------
# two-cycle closed form


def _abcd_partition(a, b, c, d):
    # first row a, second row c+1, then d rows of 2 and b-d-1 rows of 1
    assert 1 <= c < a and 0 <= d < b
    return tuple(sorted((a, c + 1) + (2,) * d + (1,) * (b - d - 1),
                        reverse=True))


def _abcd_dimension(n, a, b, c, d):
    num = factorial(n) // (factorial(a) * factorial(b) * factorial(c) * factorial(d))
    num *= a * c * (a - c) * (b - d)
    den = (a + b) * (a + d) * (b + c) * (c + d)
    if num % den != 0:
        raise RuntimeError(f"non-integer dimension for abcd={a, b, c, d}")
    return num // den


def _abcd_rho(a, b, c, d):
    return comb(a, 2) - comb(b + 1, 2) + comb(c, 2) - comb(d + 1, 2)


def two_cycle_terms(m, k_small):
    """Spectral terms for mu = (m, k_small) as (partition, chi_mu,
    chi_one, rho) tuples, from closed formulas only.

    Contributing shapes fit inside two hooks: hooks themselves and
    shapes with a 2x2 but no 3x3 square, the latter parametrized by
    arm/leg pairs (a, b, c, d). A hook with arm length in (k_small, m]
    carries two tableaux of opposite sign and so drops out; an arm of
    length at most k_small forces a single tableau of sign (-1)^(b+1),
    and an arm longer than m a single tableau of sign (-1)^b.
    """
    if not (1 <= k_small <= m):
        raise ValueError("need m >= k_small >= 1")
    n = m + k_small
    terms = []
    for j in range(1, k_small + 1):
        for i in range(j + 1, m - k_small + j):
            a, b, c, d = i, m - i, j, k_small - j
            terms.append((_abcd_partition(a, b, c, d), (-1) ** (b + d),
                          _abcd_dimension(n, a, b, c, d), _abcd_rho(a, b, c, d)))
    doubled = 2 if m == k_small else 1
    for j in range(1, k_small + 1):
        for i in range(m - k_small + j + 1, m + 1):
            a, b, c, d = i, k_small - j, j, m - i
            terms.append((_abcd_partition(a, b, c, d),
                          doubled * (-1) ** (b + d + 1),
                          _abcd_dimension(n, a, b, c, d), _abcd_rho(a, b, c, d)))
    if m > k_small:
        for j in range(1, k_small + 1):
            for i in range(j + 1, k_small + 1):
                a, b, c, d = i, m - j, j, k_small - i
                terms.append((_abcd_partition(a, b, c, d), (-1) ** (b + d + 1),
                              _abcd_dimension(n, a, b, c, d),
                              _abcd_rho(a, b, c, d)))
    for a in range(1, n + 1):
        b = n - a
        if a > m:
            chi = (-1) ** b
        elif a <= k_small:
            chi = (-1) ** (b + 1)
        else:
            continue  # two tableaux of opposite sign cancel
        hook = (a,) + (1,) * b
        terms.append((hook, chi, comb(n - 1, b), comb(a, 2) - comb(b + 1, 2)))
    return terms


def count_two_cycle(m, k_small, k, max_n=DEFAULT_MAX_N):
    """c_k((m, k_small)) from the two-cycle closed form."""
    n = m + k_small
    if n > max_n:
        raise ValueError(f"n={n} above ceiling {max_n}")
    if k < 0:
        raise ValueError("k must be nonnegative")
    total = sum(chi * dim * r ** k for _, chi, dim, r in two_cycle_terms(m, k_small))
    nfact = factorial(n)
    if total % nfact != 0 or total < 0:
        raise RuntimeError(f"two-cycle sum not a nonnegative multiple of "
                           f"{n}! at mu=({m},{k_small}), k={k}")
    return total // nfact


# ---------------------------------------------------------------------------
# generating-function prefix


@dataclass(frozen=True)
class SeriesPrefix:
    mu: tuple
    coefficients: tuple  # Fraction c_j(mu)/j! for j = 0 .. terms-1

    @property
    def nonzero_parity(self):
        """Residue r mod 2 such that coefficients vanish off j = r (mod 2)."""
        return (sum(self.mu) - len(self.mu)) % 2


def series_prefix(mu, terms, table=None, max_n=DEFAULT_MAX_N):
    """Exponential generating coefficients c_j(mu)/j! for j < terms.

    Only one parity of j can be nonzero (the partition graph is
    bipartite); that collapse is verified on the computed prefix.
    """
    mu = check_partition(mu)
    if terms < 1:
        raise ValueError("terms must be positive")
    n = sum(mu)
    if table is None:
        table = build_character_table(n, max_n=max_n)
    coeffs = tuple(Fraction(count_spectral(mu, j, table=table), factorial(j))
                   for j in range(terms))
    live = (n - len(mu)) % 2
    for j, c in enumerate(coeffs):
        if j % 2 != live and c != 0:
            raise RuntimeError(f"parity collapse violated at j={j} for mu={mu}")
    return SeriesPrefix(mu, coeffs)
