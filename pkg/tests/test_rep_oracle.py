"""Tests for the rep_oracle module."""

from __future__ import annotations

from itertools import product
from math import factorial, prod

import pytest

from heisenberg.combinat import Permutation, compositions, enumerate_margin_matrices, heisenberg_range
from heisenberg.config import Limits
from heisenberg.errors import EmptyDomainError, InvalidIndexError, SizeGuardError
from heisenberg.rep_oracle import (
    SubgroupSpec,
    check_cosets,
    coset_failures,
    coset_matrix,
    dimension_identity,
    double_cosets,
    intersection_order,
)


class TestSubgroups:
    """Tests for SubgroupSpec."""

    @pytest.mark.parametrize(
        "p, q, n, size",
        [(2, 2, 2, 2), (2, 2, 3, 1), (2, 2, 4, 4), (3, 2, 3, 2), (3, 3, 3, 6), (3, 3, 4, 2), (4, 4, 6, 8)],
    )
    def test_interpolating_order(self, p, q, n, size):
        """Test |S_p ×_n S_q| = (n−q)!(p+q−n)!(n−p)!."""
        assert len(SubgroupSpec.interpolating(p, q, n)) == size

    def test_interpolating_range(self):
        """Test that n outside [max(p,q), p+q] is rejected."""
        with pytest.raises(EmptyDomainError):
            SubgroupSpec.interpolating(2, 2, 5)

    def test_full_and_parabolic(self):
        """Test the orders of S_p × S_q and S_α × S_β."""
        assert len(SubgroupSpec.full(2, 3)) == 12
        assert len(SubgroupSpec.parabolic((2, 1), (1, 1))) == 2

    def test_not_a_group(self):
        """Test that a set missing products is refused."""
        pairs = frozenset({(Permutation((1, 2, 3)), Permutation()), (Permutation((2, 3, 1)), Permutation())})
        with pytest.raises(InvalidIndexError):
            SubgroupSpec("bad", 3, 0, pairs)


class TestDoubleCosets:
    """Tests for the double cosets and their margin matrices."""

    def test_single_coset(self):
        """Test p=q=2, α=(1,1), β=(2), n=2."""
        assert len(double_cosets(2, 2, 2, (1, 1), (2,))) == 1

    @pytest.mark.parametrize("alpha, beta", [((2, 1), (1, 1)), ((1, 2), (3,)), ((1, 1), (1, 1))])
    def test_count_matches_matrices(self, alpha, beta):
        """Test that the number of cosets equals |M^n_{α,β}|."""
        p, q = sum(alpha), sum(beta)
        for n in heisenberg_range(p, q):
            assert len(double_cosets(p, q, n, alpha, beta)) == len(enumerate_margin_matrices(alpha, beta, n))

    def test_coset_matrices_and_orders(self):
        """Test that the coset matrices are M^n_{α,β} with the right stabilizers."""
        alpha, beta, n = (1, 1), (2, 1), 4
        matrices = set()
        for rep in double_cosets(2, 3, n, alpha, beta):
            matrix = coset_matrix(rep, alpha, beta, n)
            matrices.add(matrix)
            expected = prod(factorial(m) for row in matrix.rows for m in row)
            assert intersection_order(rep, alpha, beta, n) == expected
        assert matrices == set(enumerate_margin_matrices(alpha, beta, n))

    def test_weights_must_match(self):
        """Test that α and β must have weights p and q."""
        with pytest.raises(InvalidIndexError):
            double_cosets(2, 2, 2, (1, 2), (2,))

    def test_size_guard(self):
        """Test that the sweep refuses p+q above the limit."""
        with pytest.raises(SizeGuardError):
            double_cosets(4, 4, 4, (4,), (4,), Limits(max_coset_degree=7))
        with pytest.raises(SizeGuardError):
            check_cosets(4)

    @pytest.mark.parametrize("alpha, beta, n", [((1,), (1,), 2), ((2, 1), (3,), 4), ((1, 1, 1), (1, 2), 4)])
    def test_dimension_identity(self, alpha, beta, n):
        """Test the dimension count on a few cases."""
        assert dimension_identity(alpha, beta, n)


class TestSweep:
    """Tests for check_cosets."""

    def test_sweep_up_to_two(self):
        """Test the full sweep for p, q ≤ 2."""
        report = check_cosets(2)
        assert report.ok
        assert report.cases == 29
        assert report.to_dict()["failures"] == []

    def test_no_failures_at_three(self):
        """Test every case with p = q = 3 individually."""
        for alpha, beta in product(compositions(3), repeat=2):
            for n in heisenberg_range(3, 3):
                assert list(coset_failures(alpha, beta, n)) == []
