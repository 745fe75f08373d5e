import random

import pytest

from fano72 import (ANY_DEGREE, ArityError, Polynomial, WeightSystem,
                    enumerate_monomials, generators, hilbert_count,
                    is_homogeneous, weighted_degree)
from fano72.poly import grlex_key

from oracles import brute_force_monomials, hilbert_consistency_failures

W1146 = (1, 1, 4, 6)


def test_weight_system_validation():
    assert WeightSystem((1, 1, 4, 6)).weights == (1, 1, 4, 6)
    with pytest.raises(ValueError):
        WeightSystem(())
    with pytest.raises(ValueError):
        WeightSystem((1, 0, 2))


def test_weighted_degree_of_top_monomials():
    assert weighted_degree((0, 0, 0, 2), W1146) == 12
    assert weighted_degree((0, 0, 0, 0), W1146) == 0
    assert weighted_degree((0, 0, 1, 1), W1146) == 10


def test_weighted_degree_arity_mismatch():
    with pytest.raises(ArityError):
        weighted_degree((1, 2), W1146)


def test_weighted_degree_is_additive():
    rng = random.Random(5)
    for _ in range(300):
        weights = tuple(rng.randint(1, 9) for _ in range(4))
        e1 = tuple(rng.randint(0, 6) for _ in range(4))
        e2 = tuple(rng.randint(0, 6) for _ in range(4))
        merged = tuple(a + b for a, b in zip(e1, e2))
        assert weighted_degree(merged, weights) == \
            weighted_degree(e1, weights) + weighted_degree(e2, weights)


def test_sextic_member_is_homogeneous_of_degree_six():
    # all parameters set to 1 under unit weights
    x1, x2, x3, x4 = generators(("x1", "x2", "x3", "x4"))
    xi = (x2 - x1) * (x2 - 2 * x1) * (x2 - 3 * x1)
    phi2 = x1 ** 2 + x1 * x2 + x2 ** 2
    phi6 = sum((x1 ** i * x2 ** (6 - i) for i in range(7)), Polynomial.zero(x1.ring))
    member = x1 * x2 * x4 * xi + x3 * xi * phi2 + phi6
    assert is_homogeneous(member, (1, 1, 1, 1)) == 6


def test_mixed_degrees_are_not_homogeneous():
    x1, _, x3, _ = generators(("x1", "x2", "x3", "x4"))
    assert is_homogeneous(x1 + x3, W1146) is None


def test_zero_is_homogeneous_of_any_degree():
    zero = Polynomial.zero(("x1", "x2", "x3", "x4"))
    assert is_homogeneous(zero, W1146) is ANY_DEGREE


def test_enumeration_sizes_for_the_two_extremal_spaces():
    assert len(enumerate_monomials(W1146, 12)) == 39
    assert len(enumerate_monomials((1, 1, 1, 3), 6)) == 39
    assert enumerate_monomials(W1146, 0) == [(0, 0, 0, 0)]
    assert len(enumerate_monomials((1, 1), 6)) == 7


def test_enumeration_matches_brute_force_products():
    for weights, degree in (((1, 1, 4, 6), 12), ((1, 1, 1, 3), 6), ((2, 3), 12), ((1, 2, 5), 11)):
        listed = enumerate_monomials(weights, degree)
        assert set(listed) == brute_force_monomials(weights, degree)
        assert len(set(listed)) == len(listed)


def test_enumeration_is_in_canonical_order():
    listed = enumerate_monomials(W1146, 12)
    keys = [grlex_key(e) for e in listed]
    assert keys == sorted(keys, reverse=True)


def test_hilbert_count_examples():
    assert hilbert_count(W1146, 12) == 39
    assert hilbert_count((1, 1), 6) == 7
    # oracle: weighted degree 3 forces x3, x4 exponents to 0, leaving a + b = 3
    assert len(brute_force_monomials(W1146, 3)) == 4
    assert hilbert_count(W1146, 3) == 4


def test_hilbert_count_against_enumeration_and_series():
    assert hilbert_consistency_failures(seed=33, cases=200) == []
