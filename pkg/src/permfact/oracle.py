"""Ground-truth counting by direct work in the symmetric group.

Nothing here touches characters or the partition-graph matrix: counts
come from dynamic programming over all n! group elements, or from
literal enumeration of transposition tuples. Permutations are tuples
of images in one-line notation on {0, ..., n-1}, composed as
(p * q)(x) = p(q(x)).
"""

from itertools import permutations as _all_perms, product as _product

BRUTE_MAX_N = 7
BRUTE_MAX_K = 16
TUPLE_MAX_N = 4
TUPLE_MAX_K = 5


def identity(n):
    return tuple(range(n))


def compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))


def transpositions(n):
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            t = list(range(n))
            t[i], t[j] = t[j], t[i]
            out.append(tuple(t))
    return out


def cycle_type(p):
    """Cycle lengths of p, sorted descending."""
    seen = [False] * len(p)
    lens = []
    for i in range(len(p)):
        if not seen[i]:
            c = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
                c += 1
            lens.append(c)
    return tuple(sorted(lens, reverse=True))


def class_representative(mu):
    """Permutation of cycle type mu: cycles on consecutive integers, largest first."""
    n = sum(mu)
    img = list(range(n))
    start = 0
    for part in mu:
        for t in range(part):
            img[start + t] = start + (t + 1) % part
        start += part
    return tuple(img)


def walk_distributions(n, kmax):
    """Factorization counts over the whole group.

    Returns (elements, index, vecs) where vecs[k][index[g]] is the number
    of ordered k-tuples of transpositions multiplying to g.
    """
    elements = list(_all_perms(range(n)))
    index = {g: i for i, g in enumerate(elements)}
    # tau_rows[t][i] = index of tau_t composed with element i
    tau_rows = [[index[compose(tau, g)] for g in elements]
                for tau in transpositions(n)]
    v = [0] * len(elements)
    v[index[identity(n)]] = 1
    vecs = [list(v)]
    for _ in range(kmax):
        nxt = [0] * len(elements)
        for row in tau_rows:
            for gi, ti in enumerate(row):
                nxt[gi] += v[ti]
        v = nxt
        vecs.append(list(v))
    return elements, index, vecs


def count_brute(mu, k, max_n=BRUTE_MAX_N, max_k=BRUTE_MAX_K):
    """Count factorizations of a type-mu permutation into k transpositions
    by group-algebra dynamic programming."""
    n = sum(mu)
    if n > max_n:
        raise ValueError(f"brute-force ceiling is n <= {max_n}, got n={n}")
    if k > max_k:
        raise ValueError(f"brute-force ceiling is k <= {max_k}, got k={k}")
    _, index, vecs = walk_distributions(n, k)
    return vecs[k][index[class_representative(mu)]]


def count_tuples(mu, k, max_n=TUPLE_MAX_N, max_k=TUPLE_MAX_K):
    """Same count by literally enumerating k-tuples of transpositions."""
    n = sum(mu)
    if n > max_n or k > max_k:
        raise ValueError(f"tuple enumeration capped at n <= {max_n}, k <= {max_k}")
    target = class_representative(mu)
    total = 0
    for tup in _product(transpositions(n), repeat=k):
        g = identity(n)
        for tau in tup:
            g = compose(g, tau)
        if g == target:
            total += 1
    return total


def verify_cut_glue(n, max_n=8):
    """Exhaustively check that a transposition (i j) cuts a cycle of alpha
    when i and j share a cycle, and glues two cycles otherwise."""
    if n > max_n:
        raise ValueError(f"cut/glue check capped at n <= {max_n}")
    taus = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for alpha in _all_perms(range(n)):
        ct = cycle_type(alpha)
        for i, j in taus:
            same = _same_cycle(alpha, i, j)
            t = list(range(n))
            t[i], t[j] = t[j], t[i]
            after = len(cycle_type(compose(tuple(t), alpha)))
            if same and after != len(ct) + 1:
                return False
            if not same and after != len(ct) - 1:
                return False
    return True


def _same_cycle(p, i, j):
    x = p[i]
    while x != i:
        if x == j:
            return True
        x = p[x]
    return False


def verify_class_invariance(n, k, max_n=6, max_k=8):
    """Check that factorization counts are constant on conjugacy classes."""
    if n > max_n or k > max_k:
        raise ValueError(f"class invariance check capped at n <= {max_n}, k <= {max_k}")
    elements, index, vecs = walk_distributions(n, k)
    per_class = {}
    for g in elements:
        per_class.setdefault(cycle_type(g), set()).add(vecs[k][index[g]])
    return all(len(vals) == 1 for vals in per_class.values())
