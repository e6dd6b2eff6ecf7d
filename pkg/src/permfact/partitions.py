"""Integer partition arithmetic.

Partitions are immutable tuples of weakly decreasing positive integers.
The canonical ordering of P(n) is ascending lexicographic on the part
tuples, so 1^n comes first and (n) last.
"""

from functools import lru_cache
from math import factorial
from collections import Counter

DEFAULT_MAX_N = 20


def check_partition(lam):
    """Validate that lam is a weakly decreasing tuple of positive integers."""
    lam = tuple(lam)
    if not lam:
        raise ValueError("partition must be nonempty")
    for p in lam:
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"invalid part {p!r} in {lam}")
    for a, b in zip(lam, lam[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing: {lam}")
    return lam


def _gen(n, cap):
    if n == 0:
        yield ()
        return
    for a in range(1, min(n, cap) + 1):
        for rest in _gen(n - a, a):
            yield (a,) + rest


class PartitionIndex:
    """All partitions of n in canonical order with O(1) rank lookup."""

    def __init__(self, n, max_n=DEFAULT_MAX_N):
        if not isinstance(n, int) or n < 1 or n > max_n:
            raise ValueError(f"n must be an integer in 1..{max_n}, got {n}")
        self.n = n
        self.ordered = tuple(_gen(n, n))
        self.rank = {lam: i for i, lam in enumerate(self.ordered)}

    def __len__(self):
        return len(self.ordered)

    def __iter__(self):
        return iter(self.ordered)

    def position(self, lam):
        lam = check_partition(lam)
        if sum(lam) != self.n:
            raise ValueError(f"{lam} is not a partition of {self.n}")
        return self.rank[lam]


@lru_cache(maxsize=64)
def enumerate_partitions(n, max_n=DEFAULT_MAX_N):
    """Return the PartitionIndex for n (cached; indexes are immutable)."""
    return PartitionIndex(n, max_n=max_n)


def conjugate(lam):
    """Transpose the Young diagram: lam'_j = #{i : lam_i >= j}."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def multiplicities(lam):
    """Part multiplicities k_i = #{parts equal to i} as a Counter."""
    return Counter(lam)


def z_value(lam):
    """prod_i i^{k_i} k_i! for the multiplicities k_i of lam."""
    z = 1
    for i, k in multiplicities(lam).items():
        z *= i ** k * factorial(k)
    return z


def class_size(lam):
    """Number of permutations with cycle type lam: n! / z_lam."""
    n = sum(lam)
    z = z_value(lam)
    assert factorial(n) % z == 0
    return factorial(n) // z


def rho(lam):
    """Sum of contents (column - row) over the cells of lam.

    Computed two ways, from the part lengths and cell by cell; the two
    must agree or the implementation is broken.
    """
    twice = sum(p * (p - 2 * i - 1) for i, p in enumerate(lam))
    if twice % 2 != 0:
        raise RuntimeError(f"odd doubled content sum for {lam}")
    by_parts = twice // 2
    by_cells = sum(c - r for r, p in enumerate(lam) for c in range(p))
    if by_parts != by_cells:
        raise RuntimeError(f"content formulas disagree on {lam}: "
                           f"{by_parts} vs {by_cells}")
    return by_parts


def hook_lengths(lam):
    """Hook length of every cell, row-major order."""
    conj = conjugate(lam)
    return [lam[r] - c + conj[c] - r - 1
            for r, p in enumerate(lam) for c in range(p)]


def parity_census(n, max_n=DEFAULT_MAX_N):
    """Counts of (even-length, odd-length, self-conjugate) partitions of n.

    For n > 2 the even/odd counts differ by exactly the number of
    self-conjugate partitions; this is checked here.
    """
    index = enumerate_partitions(n, max_n=max_n)
    evens = sum(1 for lam in index if len(lam) % 2 == 0)
    odds = len(index) - evens
    self_conj = sum(1 for lam in index if lam == conjugate(lam))
    if n > 2 and abs(evens - odds) != self_conj:
        raise RuntimeError(f"parity census identity fails at n={n}")
    return evens, odds, self_conj
