"""The transposition transition matrix on partitions of n.

Convention: entry A[t][s] (row t, column s, canonical partition order)
is the number of transpositions tau such that tau * alpha has cycle
type s, for any fixed alpha of cycle type t. Every row sums to
n(n-1)/2, and iterating v -> A v from the unit vector at 1^n yields
the factorization counts: (A^k e_{1^n})_mu counts ordered k-tuples of
transpositions with product of type mu.

The same entry is produced by closed formulas for the reverse move
s -> t, with cycle multiplicities k_i read off the column partition s:

    split m -> i + j, i != j :  i*j*(k_i+1)*(k_j+1)
    split m -> i + i         :  i^2*(k_i+1)*(k_i+2)/2
    glue  i + i -> m         :  i*(k_m+1)
    glue  i + j -> m, i != j :  (i+j)*(k_m+1)

build_raw_counts constructs the matrix the literal way instead and is
the oracle for these formulas.
"""

from math import factorial

from .partitions import (enumerate_partitions, multiplicities, conjugate,
                         class_size, z_value, rho, DEFAULT_MAX_N)
from .oracle import class_representative, transpositions, compose, cycle_type


def build_transition_matrix(n, max_n=DEFAULT_MAX_N):
    """Construct A_n from the four closed move formulas."""
    if n < 2:
        raise ValueError("transition matrix needs n >= 2")
    index = enumerate_partitions(n, max_n=max_n)
    size = len(index)
    mat = [[0] * size for _ in range(size)]
    for col, source in enumerate(index):
        k = multiplicities(source)
        base = list(source)
        # splits of one source part m into i + (m - i)
        for m in set(source):
            removed = _remove_one(base, m)
            for i in range(1, m // 2 + 1):
                j = m - i
                target = _canon(removed + [i, j])
                if i == j:
                    w = i * i * (k[i] + 1) * (k[i] + 2) // 2
                else:
                    w = i * j * (k[i] + 1) * (k[j] + 1)
                mat[index.rank[target]][col] += w
        # glues of two source parts i, j into m = i + j
        values = sorted(set(source))
        for a, i in enumerate(values):
            for j in values[a:]:
                if i == j and k[i] < 2:
                    continue
                m = i + j
                target = _canon(_remove_one(_remove_one(base, i), j) + [m])
                w = i * (k[m] + 1) if i == j else (i + j) * (k[m] + 1)
                mat[index.rank[target]][col] += w
    return mat


def _remove_one(parts, value):
    out = list(parts)
    out.remove(value)
    return out


def _canon(parts):
    return tuple(sorted(parts, reverse=True))


def build_raw_counts(n, max_n=DEFAULT_MAX_N):
    """Transition counts tallied by acting with every transposition on a
    fixed representative of each class. Row t, column s: moves t -> s."""
    if n < 2:
        raise ValueError("raw counts need n >= 2")
    index = enumerate_partitions(n, max_n=max_n)
    size = len(index)
    taus = transpositions(n)
    mat = [[0] * size for _ in range(size)]
    for row, t in enumerate(index):
        alpha = class_representative(t)
        for tau in taus:
            mat[row][index.rank[cycle_type(compose(tau, alpha))]] += 1
    return mat


def matrix_equality_offenders(n):
    """Entries where the formula matrix and the raw tally disagree, plus
    violations of the double-counting identity t_{ls}*|C_l| = t_{sl}*|C_s|."""
    index = enumerate_partitions(n)
    formula = build_transition_matrix(n)
    raw = build_raw_counts(n)
    sizes = [class_size(lam) for lam in index]
    bad = []
    for a in range(len(index)):
        for b in range(len(index)):
            if formula[a][b] != raw[a][b]:
                bad.append(("entry", index.ordered[a], index.ordered[b],
                            formula[a][b], raw[a][b]))
            if raw[a][b] * sizes[a] != raw[b][a] * sizes[b]:
                bad.append(("double-count", index.ordered[a], index.ordered[b],
                            raw[a][b] * sizes[a], raw[b][a] * sizes[b]))
    return bad


def verify_matrix_equality(n):
    return not matrix_equality_offenders(n)


def sparse_rows(matrix):
    """Rows as (column, value) lists of the nonzero entries."""
    return [[(j, v) for j, v in enumerate(row) if v] for row in matrix]


def matrix_power_apply(matrix, k, vec):
    """Exact A^k v by repeated sparse matrix-vector products."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if len(vec) != len(matrix):
        raise ValueError("dimension mismatch")
    rows = sparse_rows(matrix)
    v = list(vec)
    for _ in range(k):
        v = [sum(val * v[j] for j, val in row) for row in rows]
    return v


def row_sums(matrix):
    return [sum(row) for row in matrix]


def bipartite_offenders(n, matrix=None):
    """Nonzero entries between partitions whose lengths do not differ by 1."""
    index = enumerate_partitions(n)
    if matrix is None:
        matrix = build_transition_matrix(n)
    bad = []
    for a, t in enumerate(index):
        for b, s in enumerate(index):
            if matrix[a][b] and abs(len(t) - len(s)) != 1:
                bad.append((t, s, matrix[a][b]))
    return bad


def zero_multiplicity_lower_bound(n):
    """Number of self-conjugate partitions of n, each contributing a zero
    eigenvalue. Cross-checked: every self-conjugate partition has rho = 0."""
    index = enumerate_partitions(n)
    self_conj = [lam for lam in index if lam == conjugate(lam)]
    for lam in self_conj:
        if rho(lam) != 0:
            raise RuntimeError(f"self-conjugate {lam} has nonzero content sum")
    return len(self_conj)


def eigen_mismatches(n, matrix=None, table=None):
    """Locations (lam, nu) where A u_lam = rho_lam u_lam fails, with
    u_lam(nu) the irreducible character values along row lam."""
    from .characters import build_character_table
    index = enumerate_partitions(n)
    if matrix is None:
        matrix = build_transition_matrix(n)
    if table is None:
        table = build_character_table(n)
    rows = sparse_rows(matrix)
    bad = []
    for lam in index:
        u = table.row(lam)
        r = rho(lam)
        for t_pos, nu in enumerate(index):
            lhs = sum(val * u[j] for j, val in rows[t_pos])
            if lhs != r * u[t_pos]:
                bad.append((lam, nu))
                break
    return bad


def dual_eigen_mismatches(n, matrix=None, table=None):
    """Same for the transpose: A^T w = rho w with w_nu = chi(nu)/z_nu.

    Checked in integers after clearing denominators by n!.
    """
    from .characters import build_character_table
    index = enumerate_partitions(n)
    if matrix is None:
        matrix = build_transition_matrix(n)
    if table is None:
        table = build_character_table(n)
    nfact = factorial(n)
    weights = [nfact // z_value(nu) for nu in index]
    bad = []
    for lam in index:
        u = table.row(lam)
        w = [u[i] * weights[i] for i in range(len(index))]
        r = rho(lam)
        for t_pos, nu in enumerate(index):
            lhs = sum(matrix[s_pos][t_pos] * w[s_pos] for s_pos in range(len(index)))
            if lhs != r * w[t_pos]:
                bad.append((lam, nu))
                break
    return bad
