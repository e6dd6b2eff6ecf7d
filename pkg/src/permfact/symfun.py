"""Exact symmetric polynomials and the squared-degree differential operator.

Polynomials live in a fixed number of variables N with Fraction
coefficients, stored as exponent-tuple -> coefficient maps. The
operator

    D f = sum_i x_i^2 d^2f/dx_i^2
        + sum_{i != j} (x_i^2 df/dx_i - x_j^2 df/dx_j) / (x_i - x_j)

acts on symmetric polynomials; on a Schur polynomial of degree n it
multiplies by 2n(N-1) + 2 rho, and its matrix on the power-sum basis of
degree n is twice the transposed transition matrix shifted by n(N-1).
The divided differences are computed by exact polynomial division.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .partitions import enumerate_partitions, check_partition, z_value
from .characters import build_character_table


class Poly:
    """Multivariate polynomial over the rationals in N variables."""

    __slots__ = ("N", "terms")

    def __init__(self, N, terms=None):
        self.N = N
        self.terms = {}
        if terms:
            for exps, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    self.terms[tuple(exps)] = c

    @classmethod
    def constant(cls, N, value):
        return cls(N, {(0,) * N: Fraction(value)})

    @classmethod
    def variable(cls, N, i, power=1):
        exps = [0] * N
        exps[i] = power
        return cls(N, {tuple(exps): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.N == other.N \
            and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Poly(self.N, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.N, out)

    def scale(self, value):
        value = Fraction(value)
        return Poly(self.N, {e: c * value for e, c in self.terms.items()})

    def diff(self, i):
        out = {}
        for exps, c in self.terms.items():
            if exps[i]:
                e = list(exps)
                e[i] -= 1
                out[tuple(e)] = c * exps[i]
        return Poly(self.N, out)

    def swap(self, i, j):
        out = {}
        for exps, c in self.terms.items():
            e = list(exps)
            e[i], e[j] = e[j], e[i]
            out[tuple(e)] = c
        return Poly(self.N, out)

    def evaluate(self, point):
        total = Fraction(0)
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                v *= Fraction(x) ** e
            total += v
        return total

    def __repr__(self):
        return f"Poly(N={self.N}, {len(self.terms)} terms)"


def is_symmetric(f):
    """Invariance under all adjacent transpositions of the variables."""
    return all(f.swap(i, i + 1) == f for i in range(f.N - 1))


def power_sum(k, N):
    """p_k = x_1^k + ... + x_N^k."""
    if N < 1 or k < 1:
        raise ValueError("need N >= 1 and k >= 1")
    out = Poly(N)
    for i in range(N):
        out = out + Poly.variable(N, i, k)
    return out


def expand_p(lam, N):
    """p_lam as the product of the power sums of its parts."""
    lam = check_partition(lam)
    out = Poly.constant(N, 1)
    for part in lam:
        out = out * power_sum(part, N)
    return out


def complete_homogeneous(n, N):
    """h_n: every degree-n monomial once."""
    out = {}
    for combo in combinations_with_replacement(range(N), n):
        e = [0] * N
        for i in combo:
            e[i] += 1
        out[tuple(e)] = Fraction(1)
    return Poly(N, out)


def elementary(n, N):
    """e_n: every squarefree degree-n monomial once."""
    out = {}
    for combo in combinations(range(N), n):
        e = [0] * N
        for i in combo:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return Poly(N, out)


def schur_from_characters(lam, N, table=None):
    """s_lam = sum_nu chi^lam(nu) p_nu / z_nu. Coefficients must come out
    as nonnegative integers; anything else flags a broken table."""
    lam = check_partition(lam)
    n = sum(lam)
    index = enumerate_partitions(n)
    if table is None:
        table = build_character_table(n)
    out = Poly(N)
    for nu in index:
        chi = table.value(lam, nu)
        if chi:
            out = out + expand_p(nu, N).scale(Fraction(chi, z_value(nu)))
    for exps, c in out.terms.items():
        if c.denominator != 1 or c < 0:
            raise RuntimeError(f"non-integer or negative Schur coefficient "
                               f"{c} at {exps} for {lam}")
    return out


def _divide_by_difference(g, i, j):
    """Exact quotient g / (x_i - x_j); raises if the division leaves a
    remainder (i.e. g does not vanish at x_i = x_j)."""
    out = {}
    for exps, c in g.terms.items():
        e_i = exps[i]
        base = list(exps)
        for d in range(e_i):
            base[i] = d
            base[j] = exps[j] + e_i - 1 - d
            key = tuple(base)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    q = Poly(g.N, out)
    if (Poly.variable(g.N, i) - Poly.variable(g.N, j)) * q != g:
        raise RuntimeError("division by variable difference left a remainder")
    return q


def apply_dstar(f):
    """Apply the operator to a symmetric polynomial."""
    if not is_symmetric(f):
        raise ValueError("operator input must be symmetric")
    # x_i^2 d2/dx_i^2 fixes each monomial, scaling by e_i (e_i - 1)
    out = Poly(f.N, {exps: c * sum(e * (e - 1) for e in exps)
                     for exps, c in f.terms.items()})
    for i in range(f.N):
        for j in range(i + 1, f.N):
            g = Poly.variable(f.N, i, 2) * f.diff(i) \
                - Poly.variable(f.N, j, 2) * f.diff(j)
            # the (j, i) summand equals the (i, j) one, hence the factor 2
            out = out + _divide_by_difference(g, i, j).scale(2)
    return out


def p_basis_coords(f, n, N):
    """Coordinates of a degree-n symmetric polynomial in the basis
    {p_lam : lam in P(n)}. Requires N > n for the basis to be free."""
    if N <= n:
        raise ValueError(f"need N > n to invert the power-sum basis "
                         f"(got N={N}, n={n})")
    index = enumerate_partitions(n)
    expansions = [expand_p(lam, N) for lam in index]
    monomials = sorted(set().union(*(p.terms for p in expansions),
                                   f.terms))
    rows = [[p.terms.get(mono, Fraction(0)) for p in expansions]
            for mono in monomials]
    rhs = [f.terms.get(mono, Fraction(0)) for mono in monomials]
    coords = _solve_exact(rows, rhs)
    # exactness check: the coordinates must reproduce f on the nose
    recon = Poly(N)
    for c, p in zip(coords, expansions):
        if c:
            recon = recon + p.scale(c)
    if recon != f:
        raise RuntimeError("power-sum re-expression failed to reproduce input")
    return {lam: coords[i] for i, lam in enumerate(index)}


def _solve_exact(rows, rhs):
    """Solve an overdetermined consistent rational system by elimination."""
    m, k = len(rows), len(rows[0])
    aug = [list(rows[r]) + [rhs[r]] for r in range(m)]
    piv_rows = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, m) if aug[i][col]), None)
        if piv is None:
            raise RuntimeError("singular system: power sums not independent")
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = Fraction(1) / aug[r][col]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                factor = aug[i][col]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        piv_rows.append((r, col))
        r += 1
    # every column got a pivot, so the remaining rows must be fully zero
    for i in range(r, m):
        if aug[i][k]:
            raise RuntimeError("inconsistent system")
    sol = [Fraction(0)] * k
    for row, col in piv_rows:
        sol[col] = aug[row][k]
    return sol


def matrix_of_dstar(n, N):
    """Matrix of the operator on the power-sum basis of degree n,
    columns indexed by the source partition in canonical order."""
    index = enumerate_partitions(n)
    size = len(index)
    mat = [[Fraction(0)] * size for _ in range(size)]
    for col, lam in enumerate(index):
        image = apply_dstar(expand_p(lam, N))
        coords = p_basis_coords(image, n, N)
        for row, target in enumerate(index):
            mat[row][col] = coords[target]
    return mat


def omega_on_p(coords, n):
    """Basis involution on power-sum coordinates: the coordinate at lam
    picks up (-1)^(n - len(lam)). Sends Schur coordinates of lam to
    those of the conjugate shape."""
    out = {}
    for lam, c in coords.items():
        out[lam] = c if (n - len(lam)) % 2 == 0 else -c
    return out


def schur_p_coords(lam, table=None):
    """Power-sum coordinates of s_lam: chi^lam(nu)/z_nu per nu."""
    lam = check_partition(lam)
    n = sum(lam)
    index = enumerate_partitions(n)
    if table is None:
        table = build_character_table(n)
    return {nu: Fraction(table.value(lam, nu), z_value(nu)) for nu in index}
