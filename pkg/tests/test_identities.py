"""Exact combinatorial identity checks and their mutation sensitivity."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heunic import (
    DomainError,
    IDENTITY_A_SITES,
    IDENTITY_B_SITES,
    Mutation,
    binomial_exact,
    check_identity_A,
    check_identity_B,
)


class TestBinomial:
    def test_empty_product(self):
        assert binomial_exact(0, 0) == 1

    def test_small_value(self):
        assert binomial_exact(4, 2) == 6

    def test_out_of_range_is_zero(self):
        assert binomial_exact(3, -1) == 0
        assert binomial_exact(3, 4) == 0

    def test_against_factorial_ratio(self):
        n, k = 50, 25
        expected = math.factorial(n) // (math.factorial(k) * math.factorial(n - k))
        assert binomial_exact(n, k) == expected

    @given(n=st.integers(1, 40), k=st.integers(0, 40))
    @settings(max_examples=60, deadline=None)
    def test_pascal_rule(self, n, k):
        assert binomial_exact(n, k) == (binomial_exact(n - 1, k - 1)
                                        + binomial_exact(n - 1, k))

    def test_rejects_negative_upper(self):
        with pytest.raises(DomainError):
            binomial_exact(-1, 0)


class TestIdentityA:
    def test_diagonal_single_term(self):
        for n in (0, 1, 5, 12):
            result = check_identity_A(n, n)
            assert result.passed
            assert result.lhs == math.comb(2 * n, n)

    def test_first_nontrivial_pair(self):
        result = check_identity_A(1, 0)
        assert result.passed
        assert result.lhs == 4
        assert result.rhs == 4

    def test_exhaustive_small(self):
        assert all(check_identity_A(n, k).passed
                   for n in range(26) for k in range(n + 1))

    def test_results_are_exact_integers(self):
        result = check_identity_A(7, 3)
        assert isinstance(result.lhs, int)
        assert isinstance(result.rhs, int)

    def test_index_validation(self):
        with pytest.raises(DomainError):
            check_identity_A(3, 4)


class TestIdentityB:
    def test_diagonal_single_term(self):
        for n in (0, 1, 5, 12):
            result = check_identity_B(n, n)
            assert result.passed
            assert result.lhs == math.comb(2 * n, n)

    def test_first_nontrivial_pair(self):
        result = check_identity_B(1, 0)
        assert result.passed
        assert result.lhs == Fraction(1, 2)
        assert result.rhs == Fraction(1, 2)

    def test_exhaustive_small(self):
        assert all(check_identity_B(n, j).passed
                   for n in range(26) for j in range(n + 1))

    def test_results_are_exact_rationals(self):
        result = check_identity_B(6, 2)
        assert isinstance(result.lhs, Fraction)
        assert isinstance(result.rhs, Fraction)


class TestMutationSensitivity:
    @pytest.mark.parametrize("site", range(len(IDENTITY_A_SITES)))
    def test_every_site_of_A_breaks_somewhere(self, site):
        mutation = Mutation(site, 1)
        assert any(not check_identity_A(n, k, mutation).passed
                   for n in range(11) for k in range(n + 1)), \
            IDENTITY_A_SITES[site]

    @pytest.mark.parametrize("site", range(len(IDENTITY_B_SITES)))
    def test_every_site_of_B_breaks_somewhere(self, site):
        mutation = Mutation(site, 1)
        assert any(not check_identity_B(n, j, mutation).passed
                   for n in range(11) for j in range(n + 1)), \
            IDENTITY_B_SITES[site]

    def test_unknown_site_rejected(self):
        with pytest.raises(DomainError):
            check_identity_A(3, 1, Mutation(10, 1))
        with pytest.raises(DomainError):
            check_identity_B(3, 1, Mutation(-1, 1))
