"""Center of the group algebra of S_n and the graded product of diagrams.

structure_constant uses the Frobenius character sum; the literal
pair-counting definition is kept alongside as a brute-force oracle
(oracle_structure_constant) for validation at small n.

mult_infinity implements the graded product on diagrams of arbitrary
degree: pad both factors to a common degree n with the unit-row embedding,
multiply inside the degree-n class algebra, and subtract the embeddings of
the lower graded pieces.
"""

from __future__ import annotations

import functools
import itertools
import math
from fractions import Fraction

from .errors import BoundError, ConsistencyError
from .partitions import (
    DiagramSum,
    Partition,
    as_partition,
    class_size,
    degree,
    partitions_of,
    rho_sum,
)
from .characters import char_table, MAX_TABLE_DEGREE

#: Largest total degree |D1|+|D2| handled by mult_infinity.
MAX_PRODUCT_DEGREE = MAX_TABLE_DEGREE

#: Largest n for which brute-force S_n enumeration is allowed.
MAX_ORACLE_DEGREE = 6


def structure_constant(d1: Partition, d2: Partition, d: Partition) -> int:
    """C^d_{d1,d2}: multiplicity of the class sum of d in the product of the
    class sums of d1 and d2 inside the center of the group algebra."""
    return _structure_constant(as_partition(d1), as_partition(d2), as_partition(d))


@functools.lru_cache(maxsize=None)
def _structure_constant(d1: Partition, d2: Partition, d: Partition) -> int:
    n = degree(d1)
    if degree(d2) != n or degree(d) != n:
        raise ValueError("structure_constant requires equal degrees")
    table = char_table(n)
    total = Fraction(0)
    for r in table.order:
        total += Fraction(
            table.entry(r, d1) * table.entry(r, d2) * table.entry(r, d),
            table.entry(r, (1,) * n),
        )
    value = Fraction(class_size(d1) * class_size(d2), math.factorial(n)) * total
    if value.denominator != 1 or value < 0:
        raise ConsistencyError(
            "non-integral structure constant %s for (%s, %s, %s)" % (value, d1, d2, d)
        )
    return int(value)


def mult_same_degree(d1: Partition, d2: Partition) -> DiagramSum:
    """Product of two same-degree diagrams inside the degree-n class algebra."""
    d1, d2 = as_partition(d1), as_partition(d2)
    n = degree(d1)
    if degree(d2) != n:
        raise ValueError("mult_same_degree requires equal degrees")
    return DiagramSum(
        {d: structure_constant(d1, d2, d) for d in partitions_of(n)}
    )


def _mult_same_degree_sum(a: DiagramSum, b: DiagramSum) -> DiagramSum:
    out = DiagramSum.zero()
    for p, cp in a.items():
        for q, cq in b.items():
            out = out + mult_same_degree(p, q) * (cp * cq)
    return out


@functools.lru_cache(maxsize=None)
def _graded_pieces(d1: Partition, d2: Partition):
    """All graded pieces {d1 d2}_n, keyed by n, per the defining recursion."""
    lo = max(degree(d1), degree(d2))
    hi = degree(d1) + degree(d2)
    pieces = {}
    for n in range(lo, hi + 1):
        prod = _mult_same_degree_sum(
            rho_sum(DiagramSum.single(d1), n - degree(d1)),
            rho_sum(DiagramSum.single(d2), n - degree(d2)),
        )
        for k in range(lo, n):
            prod = prod - rho_sum(pieces[k], n - k)
        pieces[n] = prod
    return pieces


def mult_infinity(d1: Partition, d2: Partition,
                  max_degree: int = MAX_PRODUCT_DEGREE) -> DiagramSum:
    """Full product d1 * d2 in the algebra of diagrams of arbitrary degree."""
    d1, d2 = as_partition(d1), as_partition(d2)
    if degree(d1) + degree(d2) > max_degree:
        raise BoundError(
            "mult_infinity total degree %d exceeds bound %d"
            % (degree(d1) + degree(d2), max_degree)
        )
    total = DiagramSum.zero()
    for piece in _graded_pieces(d1, d2).values():
        total = total + piece
    return total


def graded_piece(d1: Partition, d2: Partition, n: int) -> DiagramSum:
    """Single graded piece {d1 d2}_n of the product."""
    pieces = _graded_pieces(as_partition(d1), as_partition(d2))
    return pieces.get(n, DiagramSum.zero())


def mult_sum(a: DiagramSum, b: DiagramSum) -> DiagramSum:
    """Bilinear extension of mult_infinity to diagram sums."""
    out = DiagramSum.zero()
    for p, cp in a.items():
        for q, cq in b.items():
            out = out + mult_infinity(p, q) * (cp * cq)
    return out


# ---------------------------------------------------------------------------
# Brute-force oracle over explicit permutations

def cycle_type(perm) -> Partition:
    """Cycle type of a permutation given as a tuple of images of 0..n-1."""
    n = len(perm)
    seen = [False] * n
    lens = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lens.append(length)
    return tuple(sorted(lens, reverse=True))


def compose(p, q):
    """(p after q): i -> p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def invert(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


@functools.lru_cache(maxsize=32)
def permutations_of_type(delta: Partition):
    """All permutations of S_n with cycle type delta, n = degree(delta)."""
    n = degree(delta)
    if n > MAX_ORACLE_DEGREE:
        raise BoundError("oracle enumeration beyond S_%d" % MAX_ORACLE_DEGREE)
    return tuple(
        p for p in itertools.permutations(range(n)) if cycle_type(p) == delta
    )


def oracle_structure_constant(d1: Partition, d2: Partition, d: Partition) -> int:
    """Literal count: fix one permutation g of type d, count pairs (g1, g2)
    of types (d1, d2) with g1 g2 = g."""
    d1, d2, d = as_partition(d1), as_partition(d2), as_partition(d)
    n = degree(d1)
    if degree(d2) != n or degree(d) != n:
        raise ValueError("oracle requires equal degrees")
    if n > MAX_ORACLE_DEGREE:
        raise BoundError("oracle enumeration beyond S_%d" % MAX_ORACLE_DEGREE)
    g = permutations_of_type(d)[0]
    count = 0
    for g1 in permutations_of_type(d1):
        g2 = compose(invert(g1), g)
        if cycle_type(g2) == d2:
            count += 1
    return count
