"""Irreducible character values of S_n, combinatorially.

mn_character peels border strips recursively; enumerate_bst generates
the signed tableaux one by one from the raw definition and exists to
keep the recursion honest. Dimensions come from hook lengths as a third
route.
"""

import json
import os
import sys
from dataclasses import dataclass
from math import factorial

from .partitions import (enumerate_partitions, check_partition, conjugate,
                         hook_lengths, DEFAULT_MAX_N)

BST_MAX_N = 8

_mn_memo = {}


def _strip_removals(shape, r):
    """Yield (smaller shape, strip height) for every removable border
    strip of size r. Shapes are encoded as first-column hook lengths
    (beta numbers): removing a strip subtracts r from one beta number."""
    L = len(shape)
    beta = [shape[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    for b in beta:
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        nbeta = sorted((bset - {b}) | {nb}, reverse=True)
        nshape = tuple(nbeta[i] - (L - 1 - i) for i in range(L))
        yield tuple(p for p in nshape if p > 0), height


def mn_character(lam, mu):
    """chi^lam(mu) by recursive border-strip removal.

    Parts of mu are consumed left to right as given; the value does not
    depend on that order (tested, not assumed).
    """
    lam = check_partition(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def _mn(shape, mu):
    if not mu:
        return 1 if not shape else 0
    key = (shape, mu)
    cached = _mn_memo.get(key)
    if cached is not None:
        return cached
    rest = mu[1:]
    total = 0
    for nshape, height in _strip_removals(shape, mu[0]):
        total += -_mn(nshape, rest) if height % 2 else _mn(nshape, rest)
    _mn_memo[key] = total
    return total


@dataclass(frozen=True)
class BorderStripTableau:
    shape: tuple
    content: tuple
    filling: tuple  # rows of labels, 1-based
    height: int
    width: int

    def sign(self):
        return -1 if self.height % 2 else 1


def enumerate_bst(lam, mu, max_n=BST_MAX_N):
    """All border strip tableaux of shape lam and content mu, generated
    from the definition: weakly increasing rows and columns, each label
    edge-connected, no 2x2 block of a single label."""
    lam = check_partition(lam)
    mu = tuple(mu)
    n = sum(lam)
    if sum(mu) != n:
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    if n > max_n:
        raise ValueError(f"tableau enumeration capped at n <= {max_n}")

    cells = [(r, c) for r, p in enumerate(lam) for c in range(p)]
    fill = {}
    remaining = list(mu)
    found = []

    def place(pos):
        if pos == len(cells):
            tab = tuple(tuple(fill[(r, c)] for c in range(p))
                        for r, p in enumerate(lam))
            t = _validate_bst(lam, mu, tab)
            if t is not None:
                found.append(t)
            return
        r, c = cells[pos]
        lo = 1
        if c > 0:
            lo = max(lo, fill[(r, c - 1)])
        if r > 0:
            lo = max(lo, fill[(r - 1, c)])
        for label in range(lo, len(mu) + 1):
            if remaining[label - 1] == 0:
                continue
            remaining[label - 1] -= 1
            fill[(r, c)] = label
            place(pos + 1)
            del fill[(r, c)]
            remaining[label - 1] += 1

    place(0)
    return found


def _validate_bst(lam, mu, tab):
    n = sum(lam)
    height = 0
    width = 0
    for label in range(1, len(mu) + 1):
        cells = {(r, c) for r, row in enumerate(tab)
                 for c, v in enumerate(row) if v == label}
        rows = {r for r, _ in cells}
        cols = {c for _, c in cells}
        # edge-connectivity of the strip
        stack = [next(iter(cells))]
        seen = {stack[0]}
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        if seen != cells:
            return None
        # no 2x2 block of one label
        for r, c in cells:
            if {(r + 1, c), (r, c + 1), (r + 1, c + 1)} <= cells:
                return None
        height += len(rows) - 1
        width += len(cols) - 1
    return BorderStripTableau(lam, mu, tab, height, width)


def bst_signed_count(lam, mu, max_n=BST_MAX_N):
    return sum(t.sign() for t in enumerate_bst(lam, mu, max_n=max_n))


def dimension_hook_formula(lam):
    """Number of standard Young tableaux of shape lam: n! over the
    product of all hook lengths."""
    lam = check_partition(lam)
    n = sum(lam)
    prod = 1
    for h in hook_lengths(lam):
        prod *= h
    if factorial(n) % prod != 0:
        raise RuntimeError(f"hook product {prod} does not divide {n}!")
    return factorial(n) // prod


class CharacterTable:
    """chi^lam(nu) for all lam, nu in P(n), canonical order both ways."""

    SCHEMA_VERSION = 1

    def __init__(self, n, values, max_n=DEFAULT_MAX_N):
        self.n = n
        self.index = enumerate_partitions(n, max_n=max_n)
        self.values = tuple(tuple(row) for row in values)

    def row(self, lam):
        return self.values[self.index.position(lam)]

    def value(self, lam, nu):
        return self.values[self.index.position(lam)][self.index.position(nu)]

    def dimension(self, lam):
        return self.values[self.index.position(lam)][0]


def _table_rows(n, lams):
    index = enumerate_partitions(n)
    return [[_mn(lam, nu) for nu in index] for lam in lams]


def build_character_table(n, max_n=DEFAULT_MAX_N, jobs=1):
    """Full character table via the strip recursion. The first column is
    cross-checked against the hook length formula for every row."""
    index = enumerate_partitions(n, max_n=max_n)
    lams = list(index)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor
        chunks = [lams[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_table_rows, [n] * len(chunks), chunks)
        by_lam = {}
        for chunk, rows in zip(chunks, parts):
            by_lam.update(zip(chunk, rows))
        values = [by_lam[lam] for lam in lams]
    else:
        values = _table_rows(n, lams)
    table = CharacterTable(n, values, max_n=max_n)
    for pos, lam in enumerate(index):
        if table.values[pos][0] != dimension_hook_formula(lam):
            raise RuntimeError(f"strip recursion and hook formula disagree "
                               f"on the dimension of {lam}")
    return table


# ---------------------------------------------------------------------------
# on-disk cache


def cache_path(cache_dir, n):
    return f"{cache_dir}/chartable_n{n}.json"


def save_table(table, path):
    payload = {
        "schema_version": CharacterTable.SCHEMA_VERSION,
        "n": table.n,
        "partitions": [list(lam) for lam in table.index],
        "values": [[str(v) for v in row] for row in table.values],
    }
    with open(path, "w") as fh:
        json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        fh.write("\n")


def load_table(path, n, max_n=DEFAULT_MAX_N):
    with open(path) as fh:
        payload = json.load(fh)
    if payload.get("schema_version") != CharacterTable.SCHEMA_VERSION:
        raise ValueError("unsupported cache schema")
    if payload.get("n") != n:
        raise ValueError("cache is for a different n")
    index = enumerate_partitions(n, max_n=max_n)
    if [list(lam) for lam in index] != payload["partitions"]:
        raise ValueError("cache partition order mismatch")
    values = [[int(v) for v in row] for row in payload["values"]]
    if len(values) != len(index) or any(len(r) != len(index) for r in values):
        raise ValueError("cache shape mismatch")
    return CharacterTable(n, values, max_n=max_n)


def character_table_cached(n, cache_dir=None, jobs=1, max_n=DEFAULT_MAX_N):
    """Build the table, reading/writing the versioned cache when a
    directory is given. A corrupt cache is ignored and rebuilt."""
    if cache_dir is None:
        return build_character_table(n, max_n=max_n, jobs=jobs)
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, n)
    if os.path.exists(path):
        try:
            return load_table(path, n, max_n=max_n)
        except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
            print(f"warning: ignoring corrupt cache {path}: {exc}",
                  file=sys.stderr)
    table = build_character_table(n, max_n=max_n, jobs=jobs)
    save_table(table, path)
    return table
