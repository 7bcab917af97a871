import pytest
from fractions import Fraction

from diagram_ops.psym import PPoly, exp_p1, p_monomial, schur
from diagram_ops.partitions import DiagramSum, degree, partitions_of
from diagram_ops.w_ops import (
    EXPLICIT_OPS,
    apply_explicit,
    apply_spectral,
    compose_check,
    eigenvalue,
)

SIX = sorted(EXPLICIT_OPS, key=lambda d: (degree(d), d))


def test_eigenvalue_examples():
    assert eigenvalue((2,), (3,)) == 3
    assert eigenvalue((2,), (1, 1, 1)) == -3
    assert eigenvalue((2,), (2, 1)) == 0
    for n in range(1, 6):
        for r in partitions_of(n):
            assert eigenvalue((1,), r) == n


def test_eigenvalue_cutoff():
    for nd in range(3, 6):
        for delta in partitions_of(nd):
            for r in partitions_of(2):
                assert eigenvalue(delta, r) == 0


def test_spectral_on_schur():
    assert apply_spectral((2,), schur((2,))) == schur((2,))
    f = PPoly({(1, 1, 1): 1})
    assert apply_spectral((1,), f) == f * 3


def test_spectral_on_truncated_exponential():
    # W([2]) e^{p1} = p([2]) e^{p1} within the truncation window
    n = 4
    lhs = apply_spectral((2,), exp_p1(n))
    rhs = (p_monomial((2,)) * exp_p1(n)).truncate(n)
    assert lhs == rhs


def test_explicit_hand_values():
    assert apply_explicit((2,), PPoly.variable(2)) == PPoly({(1, 1): 1})
    assert apply_explicit((1, 1), PPoly.variable(2)) == PPoly.variable(2)


def test_explicit_rejects_unknown():
    with pytest.raises(ValueError):
        apply_explicit((4,), PPoly.variable(2))


def test_explicit_matches_spectral_on_monomials():
    for delta in SIX:
        for n in range(7):
            for mono in partitions_of(n):
                f = PPoly({mono: 1})
                assert apply_explicit(delta, f) == apply_spectral(delta, f), (delta, mono)


def test_explicit_eigenvector_property():
    for delta in SIX:
        for n in range(7):
            for r in partitions_of(n):
                sr = schur(r)
                assert apply_explicit(delta, sr) == sr * eigenvalue(delta, r), (delta, r)


def test_compose_check_examples():
    a, b = compose_check((2,), (2,), exp_p1(4))
    assert a == b
    s3 = schur((3,))
    a, b = compose_check((1,), (2,), s3)
    assert a == b == s3 * 9
    s2 = schur((2,))
    a, b = compose_check((1,), (1,), s2)
    assert a == b == s2 * 4


def test_homomorphism_property():
    diagrams = [p for n in range(1, 4) for p in partitions_of(n)]
    basis = [PPoly({mono: 1}) for n in range(7) for mono in partitions_of(n)]
    for d1 in diagrams:
        for d2 in diagrams:
            for f in basis:
                a, b = compose_check(d1, d2, f)
                assert a == b, (d1, d2, f)


def test_spectral_preserves_degree():
    for delta in SIX:
        for n in range(6):
            for mono in partitions_of(n):
                out = apply_spectral(delta, PPoly({mono: 1}))
                assert out.homogeneous_degrees() in ([], [n])


def test_spectral_linear_over_diagram_sums():
    f = PPoly({(2, 1): 1, (1, 1, 1): Fraction(1, 3)})
    s = DiagramSum([((2,), Fraction(1, 2)), ((1,), 3)])
    combined = apply_spectral(s, f)
    split = apply_spectral((2,), f) * Fraction(1, 2) + apply_spectral((1,), f) * 3
    assert combined == split
