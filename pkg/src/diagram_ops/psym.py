"""Symmetric functions as exact sparse polynomials in the power sums p_k.

A monomial p_{l1} p_{l2} ... (l1 >= l2 >= ...) is keyed by its exponent
partition (l1, l2, ...); its graded degree is l1 + l2 + ... (deg p_k = k).
Coefficients are Fractions; zero terms are never stored.

A PPoly may carry a truncation bound N: monomials of graded degree above N
are dropped by every operation, and the bound is contagious (the minimum
of the operand bounds).
"""

from __future__ import annotations

import functools
import itertools
import math
from fractions import Fraction

from .partitions import (
    Partition,
    degree,
    format_fraction,
    kappa,
    multiplicity,
)
from .characters import char_table


def _merge_bounds(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _monomial_sort_key(mono: Partition):
    """Canonical monomial order: by graded degree, then lexicographically
    ascending on the exponent partition (so p1^3 precedes p3)."""
    return (degree(mono), mono)


class PPoly:
    """Sparse exact polynomial in the variables p_1, p_2, ..."""

    __slots__ = ("terms", "bound")

    def __init__(self, terms=None, bound=None):
        self.bound = bound
        d = {}
        if terms:
            for mono, coef in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(coef)
                key = tuple(sorted(mono, reverse=True))
                if c and (bound is None or degree(key) <= bound):
                    d[key] = d.get(key, Fraction(0)) + c
        self.terms = {m: c for m, c in d.items() if c}

    @classmethod
    def zero(cls, bound=None):
        return cls(bound=bound)

    @classmethod
    def one(cls, bound=None):
        return cls({(): Fraction(1)}, bound=bound)

    @classmethod
    def variable(cls, k: int, bound=None):
        """The single power sum p_k."""
        if k < 1:
            raise ValueError("power-sum index must be >= 1")
        return cls({(k,): Fraction(1)}, bound=bound)

    def is_zero(self) -> bool:
        return not self.terms

    def max_degree(self) -> int:
        """Graded degree of the highest stored monomial (0 for the zero poly)."""
        return max((degree(m) for m in self.terms), default=0)

    def coefficient(self, mono) -> Fraction:
        return self.terms.get(tuple(sorted(mono, reverse=True)), Fraction(0))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _monomial_sort_key(kv[0]))

    def truncate(self, bound) -> "PPoly":
        return PPoly(self.terms, bound=_merge_bounds(self.bound, bound))

    def graded_piece(self, n: int) -> "PPoly":
        return PPoly({m: c for m, c in self.terms.items() if degree(m) == n},
                     bound=self.bound)

    def homogeneous_degrees(self):
        return sorted({degree(m) for m in self.terms})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PPoly({(): Fraction(other)})
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return PPoly(out, bound=_merge_bounds(self.bound, other.bound))

    __radd__ = __add__

    def __neg__(self):
        return PPoly({m: -c for m, c in self.terms.items()}, bound=self.bound)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PPoly({(): Fraction(other)})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return PPoly({m: c * v for m, v in self.terms.items()}, bound=self.bound)
        bound = _merge_bounds(self.bound, other.bound)
        out = {}
        for m1, c1 in self.terms.items():
            d1 = degree(m1)
            for m2, c2 in other.terms.items():
                if bound is not None and d1 + degree(m2) > bound:
                    continue
                key = tuple(sorted(m1 + m2, reverse=True))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return PPoly(out, bound=bound)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, PPoly) and self.terms == other.terms

    def __repr__(self):
        return "PPoly(%s)" % self.to_text()

    def diff(self, k: int) -> "PPoly":
        """Partial derivative with respect to p_k."""
        out = {}
        for mono, coef in self.terms.items():
            m = multiplicity(mono, k)
            if not m:
                continue
            reduced = list(mono)
            reduced.remove(k)
            key = tuple(reduced)
            out[key] = out.get(key, Fraction(0)) + m * coef
        return PPoly(out, bound=self.bound)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for mono, coef in self.items():
            factors = []
            for k in sorted(set(mono)):
                m = multiplicity(mono, k)
                factors.append("p%d" % k if m == 1 else "p%d^%d" % (k, m))
            body = "*".join(factors)
            chunks.append(format_fraction(coef) + ("*" + body if body else ""))
        return " + ".join(chunks)

    def to_json_obj(self):
        return {
            "bound": self.bound,
            "terms": [
                {"mono": list(m), "coef": format_fraction(c)} for m, c in self.items()
            ],
        }


def parse_ppoly(text: str) -> PPoly:
    """Parse the textual form produced by PPoly.to_text, e.g.
    '1/3*p1^3 + -1/3*p3' or '2' or 'p2*p1^2'."""
    from .errors import ParseError
    from .partitions import parse_fraction

    s = text.strip()
    if not s:
        raise ParseError("empty polynomial", 0)
    if s == "0":
        return PPoly.zero()
    terms = []
    for chunk in s.split(" + "):
        factors = chunk.strip().split("*")
        coef = Fraction(1)
        mono = []
        for i, factor in enumerate(factors):
            if factor.startswith("p"):
                body, _, exp = factor[1:].partition("^")
                if not body.isdigit() or (exp and not exp.isdigit()):
                    raise ParseError("malformed power-sum factor %r" % factor, 0)
                mono.extend([int(body)] * (int(exp) if exp else 1))
            elif i == 0:
                coef = parse_fraction(factor)
            else:
                raise ParseError("coefficient %r must come first" % factor, 0)
        terms.append((tuple(mono), coef))
    return PPoly(terms)


def p_monomial(delta: Partition) -> PPoly:
    """kappa(delta) * p_delta, the class monomial attached to a diagram."""
    return PPoly({tuple(delta): kappa(delta)})


@functools.lru_cache(maxsize=None)
def complete_homogeneous(i: int) -> PPoly:
    """P_i with exp(sum_k p_k x^k / k) = sum_i P_i x^i; P_0 = 1, P_{<0} = 0.

    Results are cached; PPoly values are treated as immutable everywhere.
    """
    if i < 0:
        return PPoly.zero()
    if i == 0:
        return PPoly.one()
    # Newton recurrence: i*P_i = sum_{k=1..i} p_k P_{i-k}
    acc = PPoly.zero()
    for k in range(1, i + 1):
        acc = acc + PPoly.variable(k) * complete_homogeneous(i - k)
    return acc * Fraction(1, i)


@functools.lru_cache(maxsize=None)
def schur(r: Partition) -> PPoly:
    """Schur function of r in power sums, by the Jacobi-Trudi determinant
    det[P_{r_i + j - i}] of complete homogeneous functions."""
    r = tuple(r)
    l = len(r)
    if l == 0:
        return PPoly.one()
    entries = [[complete_homogeneous(r[i] + (j + 1) - (i + 1)) for j in range(l)]
               for i in range(l)]
    total = PPoly.zero()
    for perm in itertools.permutations(range(l)):
        sign = _perm_sign(perm)
        prod = PPoly.one()
        for i in range(l):
            prod = prod * entries[i][perm[i]]
            if prod.is_zero():
                break
        total = total + prod * sign
    return total


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def schur_expand(f: PPoly) -> dict:
    """Coefficients c_R with f = sum_R c_R * schur(R), computed gradewise
    from p_delta = sum_R chi_R(delta) schur(R)."""
    out = {}
    for n in f.homogeneous_degrees():
        piece = f.graded_piece(n)
        table = char_table(n)
        for r in table.order:
            c = Fraction(0)
            for mono, coef in piece.terms.items():
                c += coef * table.entry(r, mono)
            if c:
                out[r] = c
    return out


def from_schur(coeffs: dict, bound=None) -> PPoly:
    """sum_R c_R * schur(R); inverse of schur_expand."""
    total = PPoly.zero(bound=bound)
    for r, c in coeffs.items():
        total = total + schur(tuple(r)) * c
    return total


def exp_p1(n: int) -> PPoly:
    """Truncation of e^{p_1} to graded degree n."""
    if n < 0:
        raise ValueError("truncation bound must be nonnegative")
    terms = {(1,) * k: Fraction(1, math.factorial(k)) for k in range(n + 1)}
    return PPoly(terms, bound=n)


def _det(matrix):
    """Exact determinant by fraction-free forward elimination on Fractions."""
    n = len(matrix)
    m = [[Fraction(x) for x in row] for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def bialternant_eval(r: Partition, xs) -> Fraction:
    """Schur polynomial of r at the points xs, as the ratio of the
    bialternant determinant to the Vandermonde determinant."""
    xs = [Fraction(x) for x in xs]
    n = len(xs)
    if len(set(xs)) != n:
        raise ValueError("bialternant evaluation requires distinct points")
    if n < len(r):
        raise ValueError("need at least %d points for %s" % (len(r), r))
    rr = list(r) + [0] * (n - len(r))
    num = _det([[x ** (rr[j] + n - (j + 1)) for j in range(n)] for x in xs])
    den = _det([[x ** (n - (j + 1)) for j in range(n)] for x in xs])
    return num / den


def eval_at_power_sums(f: PPoly, xs) -> Fraction:
    """Evaluate f after substituting p_k <- sum_j xs_j^k."""
    xs = [Fraction(x) for x in xs]
    power_sums = {}

    def psum(k):
        if k not in power_sums:
            power_sums[k] = sum((x ** k for x in xs), Fraction(0))
        return power_sums[k]

    total = Fraction(0)
    for mono, coef in f.terms.items():
        val = coef
        for k in mono:
            val *= psum(k)
        total += val
    return total
