"""Irreducible characters of symmetric groups.

Characters are computed by the Murnaghan-Nakayama border-strip recursion,
implemented on first-column hook lengths (beta-numbers): removing a border
strip of size t from the shape corresponds to replacing a beta-number b by
b - t, with sign (-1)^(number of beta-numbers strictly between them).

Full tables per degree are cached on disk as JSON; the cache directory is
`.diagram-ops-cache/` or the DIAGRAM_OPS_CACHE_DIR environment variable.
"""

from __future__ import annotations

import functools
import json
import math
import os
import random
from fractions import Fraction

from .errors import BoundError, ConsistencyError
from .partitions import (
    Partition,
    aut_order,
    class_size,
    degree,
    format_partition,
    kappa,
    pad,
    parse_partition,
    partitions_of,
)

#: Largest degree for which full tables are built (p(12) = 77 rows).
MAX_TABLE_DEGREE = 12

DEFAULT_CACHE_DIR = ".diagram-ops-cache"


def _beta_numbers(shape: Partition):
    l = len(shape)
    return tuple(shape[i] + (l - 1 - i) for i in range(l))


def _shape_from_betas(betas):
    """Inverse of _beta_numbers; betas sorted decreasing, zero rows dropped."""
    l = len(betas)
    parts = tuple(b - (l - 1 - i) for i, b in enumerate(betas))
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def _strip_removals(shape: Partition, t: int):
    """Yield (smaller shape, sign) for each border strip of size t."""
    betas = _beta_numbers(shape)
    beta_set = set(betas)
    for b in betas:
        c = b - t
        if c < 0 or c in beta_set:
            continue
        height = sum(1 for x in betas if c < x < b)
        new = tuple(sorted((beta_set - {b}) | {c}, reverse=True))
        yield _shape_from_betas(new), -1 if height % 2 else 1


@functools.lru_cache(maxsize=None)
def _mn(shape: Partition, cls: Partition) -> int:
    if not cls:
        return 1 if not shape else 0
    t, rest = cls[0], cls[1:]
    total = 0
    for smaller, sign in _strip_removals(shape, t):
        total += sign * _mn(smaller, rest)
    return total


def character(r: Partition, delta: Partition) -> int:
    """chi_R on the class of cycle type delta; degrees must match."""
    if degree(r) != degree(delta):
        raise ValueError(
            "degree mismatch: |R|=%d, |Delta|=%d" % (degree(r), degree(delta))
        )
    return _mn(tuple(r), tuple(delta))


def dimension(r: Partition) -> int:
    """Dimension of the irreducible labelled by r, via hook lengths."""
    n = degree(r)
    if n == 0:
        return 1
    from .partitions import conjugate

    t = conjugate(r)
    dim = math.factorial(n)
    for i, row in enumerate(r):
        for j in range(row):
            dim //= row - j + t[j] - i - 1
    return dim


@functools.lru_cache(maxsize=None)
def d_r(r: Partition) -> Fraction:
    """dim(r) / |r|!, the Plancherel weight of the irreducible r."""
    n = degree(r)
    return Fraction(dimension(r), math.factorial(n))


def d_r_product(r: Partition) -> Fraction:
    """Same quantity by the determinant-free product formula:
    prod_{i<j<=n} (mu_i - mu_j - i + j) / prod_{i<=n} (mu_i + n - i)!
    with the part list padded by zeros to length n = |r|."""
    n = degree(r)
    if n == 0:
        return Fraction(1)
    mu = list(r) + [0] * (n - len(r))
    num = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= mu[i] - mu[j] - (i + 1) + (j + 1)
    den = 1
    for i in range(n):
        den *= math.factorial(mu[i] + n - (i + 1))
    return Fraction(num, den)


@functools.lru_cache(maxsize=None)
def phi(r: Partition, delta: Partition) -> Fraction:
    """Normalized character: the eigenvalue of the diagram operator of
    delta on the Schur function of r.

    phi_R(delta) = kappa(delta) * chi_R(delta padded to degree |R|)
                   / (d_R * (|R|-|delta|)!)
    and 0 when |R| < |delta|.
    """
    k = degree(r) - degree(delta)
    if k < 0:
        return Fraction(0)
    chi = character(r, pad(delta, k))
    return kappa(delta) * chi / (d_r(r) * math.factorial(k))


class CharacterTable:
    """Complete character table of S_n.

    Rows are irreducible labels, columns are classes, both in canonical
    (reverse-lexicographic) order; entries are exact integers.
    """

    def __init__(self, n: int, order, rows):
        self.n = n
        self.order = list(order)
        self.rows = rows
        self._col = {p: i for i, p in enumerate(self.order)}

    def entry(self, r: Partition, delta: Partition) -> int:
        return self.rows[tuple(r)][self._col[tuple(delta)]]

    def row(self, r: Partition):
        return list(self.rows[tuple(r)])

    def check_orthogonality(self):
        """Raise ConsistencyError unless row orthogonality holds exactly."""
        sizes = [class_size(p) for p in self.order]
        n_fact = math.factorial(self.n)
        labels = self.order
        for a in labels:
            for b in labels:
                s = sum(
                    sz * x * y
                    for sz, x, y in zip(sizes, self.rows[a], self.rows[b])
                )
                if s != (n_fact if a == b else 0):
                    raise ConsistencyError(
                        "orthogonality failure for rows %s, %s" % (a, b)
                    )

    def to_json_obj(self):
        return {
            "n": self.n,
            "order": [list(p) for p in self.order],
            "rows": {
                format_partition(r): [str(x) for x in row]
                for r, row in sorted(self.rows.items(), key=lambda kv: self.order.index(kv[0]))
            },
        }

    @classmethod
    def from_json_obj(cls, obj):
        n = obj["n"]
        order = [tuple(p) for p in obj["order"]]
        rows = {
            parse_partition(key): [int(x) for x in row]
            for key, row in obj["rows"].items()
        }
        return cls(n, order, rows)


def cache_dir() -> str:
    return os.environ.get("DIAGRAM_OPS_CACHE_DIR", DEFAULT_CACHE_DIR)


def _cache_path(n: int) -> str:
    return os.path.join(cache_dir(), "chartab_%d.json" % n)


def _build_table(n: int) -> CharacterTable:
    order = partitions_of(n)
    rows = {r: [character(r, d) for d in order] for r in order}
    return CharacterTable(n, order, rows)


def _validate_cached(table: CharacterTable, rng=None) -> bool:
    """Spot-check one random row of a freshly loaded table against MN."""
    rng = rng or random
    expected_order = partitions_of(table.n)
    if table.order != expected_order:
        return False
    r = rng.choice(table.order)
    if tuple(r) not in table.rows:
        return False
    return table.rows[r] == [character(r, d) for d in table.order]


def char_table(n: int, max_degree: int = MAX_TABLE_DEGREE, use_cache: bool = True) -> CharacterTable:
    """Character table of S_n, served from the on-disk cache when valid."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > max_degree:
        raise BoundError("char_table(%d) exceeds bound %d" % (n, max_degree))
    path = _cache_path(n)
    if use_cache and os.path.exists(path):
        try:
            with open(path) as f:
                table = CharacterTable.from_json_obj(json.load(f))
            if table.n == n and _validate_cached(table):
                return table
        except (ValueError, KeyError, OSError):
            pass
        # fall through: corrupt cache is recomputed and overwritten
    table = _build_table(n)
    if use_cache:
        os.makedirs(cache_dir(), exist_ok=True)
        tmp = path + ".tmp.%d" % os.getpid()
        with open(tmp, "w") as f:
            json.dump(table.to_json_obj(), f)
        os.replace(tmp, path)
    return table
