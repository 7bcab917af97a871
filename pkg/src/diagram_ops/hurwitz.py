"""Genus-0 disconnected Hurwitz numbers and their generating function.

Brackets <D1,...,Dk> are computed from class-algebra data: the three-point
bracket is a structure constant divided by the centralizer order of the
last class, and longer chains contract through intermediate classes
weighted by their centralizer orders.  Every value is cross-checked (in
tests) against the literal permutation-tuple count, which is also exposed
here as oracle_tuple_count.

The generating function Z collects the padded brackets against the plain
power-sum monomials p_delta; its Taylor coefficient at a beta multi-index
(n_1, ..., n_k) carries the usual 1/(n_1! ... n_k!) factor.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BoundError
from .partitions import (
    Partition,
    as_partition,
    aut_order,
    degree,
    format_partition,
    multiplicity,
    pad,
    partition_sort_key,
    partitions_of,
)
from .characters import d_r, phi
from .class_algebra import (
    MAX_ORACLE_DEGREE,
    compose,
    cycle_type,
    permutations_of_type,
    structure_constant,
)
from .psym import PPoly, schur
from .w_ops import apply_spectral


def hurwitz3(d1: Partition, d2: Partition, d3: Partition) -> Fraction:
    """Three-point bracket: C^{d3}_{d1,d2} / z_{d3}."""
    d1, d2, d3 = as_partition(d1), as_partition(d2), as_partition(d3)
    return Fraction(structure_constant(d1, d2, d3), aut_order(d3))


def hurwitz_chain(deltas) -> Fraction:
    """Bracket <D1,...,Dk> of equal-degree diagrams by chain contraction.

    k = 1 and k = 2 are the degenerate covers with at most that many
    marked points: <D> is 1/n! for the identity class and 0 otherwise,
    and <D1,D2> = [D1 = D2]/z.
    """
    deltas = [as_partition(d) for d in deltas]
    if not deltas:
        raise ValueError("hurwitz_chain requires at least one diagram")
    n = degree(deltas[0])
    if any(degree(d) != n for d in deltas):
        raise ValueError("hurwitz_chain requires equal degrees")
    if len(deltas) == 1:
        return Fraction(1, math.factorial(n)) if deltas[0] == (1,) * n else Fraction(0)
    if len(deltas) == 2:
        return Fraction(1, aut_order(deltas[0])) if deltas[0] == deltas[1] else Fraction(0)
    if len(deltas) == 3:
        return hurwitz3(*deltas)
    total = Fraction(0)
    for y in partitions_of(n):
        head = hurwitz3(deltas[0], deltas[1], y)
        if head:
            total += head * aut_order(y) * hurwitz_chain([y] + deltas[2:])
    return total


def oracle_tuple_count(classes, n: int) -> Fraction:
    """(1/n!) * number of tuples (g_1, ..., g_k) with g_i of type classes_i
    and g_1 ... g_k = identity, by direct enumeration over S_n."""
    classes = [as_partition(d) for d in classes]
    if n > MAX_ORACLE_DEGREE:
        raise BoundError("tuple oracle beyond S_%d" % MAX_ORACLE_DEGREE)
    if any(degree(d) != n for d in classes):
        raise ValueError("oracle classes must all have degree %d" % n)
    identity = (1,) * n if n else ()
    if not classes:
        return Fraction(1, math.factorial(n))
    if len(classes) == 1:
        count = 1 if classes[0] == identity else 0
        return Fraction(count, math.factorial(n))
    count = 0
    pools = [permutations_of_type(d) for d in classes[:-1]]
    last_type = classes[-1]
    ident_perm = tuple(range(n))
    for tup in itertools.product(*pools):
        g = ident_perm
        for x in tup:
            g = compose(g, x)
        # need g * g_k = id, i.e. g_k = g^{-1}, whose type equals type(g)
        if cycle_type(g) == last_type:
            count += 1
    return Fraction(count, math.factorial(n))


@dataclass(frozen=True)
class BranchSpec:
    """Marked branch data <(D1,n1),...,(Dk,nk)|D>."""

    branches: tuple          # ((partition, multiplicity), ...)
    delta: tuple             # final diagram; fixes the common degree

    def __post_init__(self):
        object.__setattr__(self, "branches",
                           tuple((as_partition(p), int(m)) for p, m in self.branches))
        object.__setattr__(self, "delta", as_partition(self.delta))
        if any(m < 1 for _, m in self.branches):
            raise ValueError("branch multiplicities must be >= 1")

    @property
    def n(self) -> int:
        return degree(self.delta)


def hurwitz_padded(spec: BranchSpec) -> Fraction:
    """Padded bracket: each marked diagram is raised to the degree of the
    final one by the unit-row embedding, whose binomial coefficient enters
    once per repetition; zero when some marked diagram is too large."""
    n = spec.n
    factor = Fraction(1)
    chain = []
    for part, mult in spec.branches:
        k = n - degree(part)
        if k < 0:
            return Fraction(0)
        r = multiplicity(part, 1)
        factor *= Fraction(math.comb(r + k, k)) ** mult
        chain.extend([pad(part, k)] * mult)
    chain.append(spec.delta)
    return factor * hurwitz_chain(chain)


def _beta_key(counts: dict) -> tuple:
    """Canonical key for a beta multi-index: sorted (partition, power)."""
    return tuple(sorted(
        ((p, k) for p, k in counts.items() if k),
        key=lambda pk: partition_sort_key(pk[0]),
    ))


@dataclass
class HurwitzSeries:
    """Truncated expansion of the generating function Z.

    terms maps (beta_key, monomial partition) -> Fraction, where the
    coefficient is the raw Taylor coefficient against the plain monomial
    p_delta (the 1/k! factors of the beta powers are included).
    """

    active: tuple            # directions, canonical order
    p_bound: int
    order: int
    terms: dict = field(default_factory=dict)

    def coefficient(self, counts: dict, mono) -> Fraction:
        key = _beta_key({as_partition(p): k for p, k in counts.items()})
        return self.terms.get((key, tuple(sorted(mono, reverse=True))), Fraction(0))

    def bracket(self, counts: dict, mono) -> Fraction:
        """Taylor coefficient times prod n_i!: the padded Hurwitz bracket."""
        fact = 1
        for k in counts.values():
            fact *= math.factorial(k)
        return self.coefficient(counts, mono) * fact

    def beta_keys(self):
        return sorted({key for key, _ in self.terms},
                      key=lambda key: (sum(k for _, k in key), key))

    def ppoly_at(self, key) -> PPoly:
        """Coefficient of the beta monomial indexed by key, as a PPoly."""
        return PPoly(
            {mono: c for (k, mono), c in self.terms.items() if k == key},
            bound=self.p_bound,
        )

    def to_json_obj(self):
        items = sorted(
            self.terms.items(),
            key=lambda kv: (sum(k for _, k in kv[0][0]), kv[0][0],
                            degree(kv[0][1]), kv[0][1]),
        )
        return {
            "p_bound": self.p_bound,
            "order": self.order,
            "terms": [
                {
                    "beta": {format_partition(p): k for p, k in key},
                    "mono": list(mono),
                    "coef": "%s" % c,
                }
                for (key, mono), c in items
            ],
        }


def generating_function(active, p_bound: int, order: int) -> HurwitzSeries:
    """Z = sum_{|R| <= p_bound} d_R exp(sum_Y beta_Y phi_R(Y)) schur(R),
    expanded to total beta-order <= order.

    The beta-degree-0 term is the truncation of e^{p_1}, i.e. the
    unbranched covers, including the empty one for the empty diagram.
    """
    active = sorted({as_partition(p) for p in active}, key=partition_sort_key)
    series = HurwitzSeries(active=tuple(active), p_bound=p_bound, order=order)
    multi_indices = [
        counts
        for counts in itertools.product(range(order + 1), repeat=len(active))
        if sum(counts) <= order
    ]
    for n in range(p_bound + 1):
        for r in partitions_of(n):
            weight = d_r(r)
            eigs = [phi(r, y) for y in active]
            sr = schur(r)
            for counts in multi_indices:
                c = weight
                for e, k in zip(eigs, counts):
                    c *= e ** k / math.factorial(k)
                if not c:
                    continue
                key = _beta_key(dict(zip(active, counts)))
                for mono, mc in sr.terms.items():
                    slot = (key, mono)
                    v = series.terms.get(slot, Fraction(0)) + c * mc
                    if v:
                        series.terms[slot] = v
                    else:
                        series.terms.pop(slot, None)
    return series


def pde_residual(upsilon: Partition, series: HurwitzSeries) -> Fraction:
    """Largest absolute coefficient of dZ/dbeta_Y - W(Y) Z, compared on the
    beta orders where both truncations are complete (total order < order)."""
    upsilon = as_partition(upsilon)
    if upsilon not in series.active:
        raise ValueError("%s is not an active direction" % (upsilon,))
    worst = Fraction(0)
    all_indices = [
        dict(zip(series.active, counts))
        for counts in itertools.product(range(series.order), repeat=len(series.active))
        if sum(counts) < series.order
    ]
    for counts in all_indices:
        key = _beta_key(counts)
        # d/dbeta_Y picks the coefficient one order up, times its power
        up = {p: k for p, k in counts.items()}
        up[upsilon] = up.get(upsilon, 0) + 1
        deriv = series.ppoly_at(_beta_key(up)) * up[upsilon]
        applied = apply_spectral(upsilon, series.ppoly_at(key))
        diff = deriv - applied
        for c in diff.terms.values():
            worst = max(worst, abs(c))
    return worst


def simple_hurwitz(n: int, m: int) -> dict:
    """Disconnected m-transposition Hurwitz numbers of degree n: for each
    diagram of degree n, the bracket <([2], m) | delta>."""
    series = generating_function([(2,)], p_bound=n, order=m)
    counts = {(2,): m} if m else {}
    fact = math.factorial(m)
    return {
        delta: series.coefficient(counts, delta) * fact
        for delta in partitions_of(n)
    }
