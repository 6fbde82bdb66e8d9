"""Constrained power sums over adjacency-constrained subsets."""

from fractions import Fraction

import pytest

from cycstat.poly import N, ONE, Poly, xvar
from cycstat.sums import binomial_poly, constrained_subsets, constrained_sum


class TestConstrainedSubsets:
    def test_unconstrained_pairs(self):
        assert len(list(constrained_subsets(5, 2, frozenset()))) == 10

    def test_adjacent_pairs(self):
        got = list(constrained_subsets(5, 2, frozenset({1})))
        assert got == [(1, 2), (2, 3), (3, 4), (4, 5)]

    def test_empty_tuple_for_k0(self):
        assert list(constrained_subsets(5, 0, frozenset())) == [()]

    def test_run_of_three(self):
        got = list(constrained_subsets(5, 3, frozenset({1, 2})))
        assert got == [(1, 2, 3), (2, 3, 4), (3, 4, 5)]


class TestConstrainedSum:
    def test_unweighted_pairs(self):
        S, fbar = constrained_sum(ONE, 2, frozenset())
        assert S == Fraction(1, 2) * (N**2 - N)
        assert fbar == ONE

    def test_adjacent_pairs(self):
        S, fbar = constrained_sum(ONE, 2, frozenset({1}))
        assert S == N - ONE
        assert fbar == ONE

    def test_linear_weight(self):
        S, fbar = constrained_sum(xvar(1), 1, frozenset())
        assert S == Fraction(1, 2) * (N**2 + N)
        assert fbar == Fraction(1, 2) * (N + ONE)

    def test_matches_direct_summation(self):
        cases = [
            (ONE, 3, frozenset({2})),
            (xvar(1) + xvar(3), 3, frozenset({1})),
            (xvar(2) ** 2, 2, frozenset({1})),
            (xvar(1) * xvar(2), 2, frozenset()),
        ]
        # the polynomial extension agrees with the combinatorial sum for
        # every n >= q = |C| (below that the vanishing binomial factor of
        # the closed form is replaced by a nonzero polynomial value)
        for f, k, C in cases:
            S, _ = constrained_sum(f, k, C)
            for n in range(len(C), k + 5):
                direct = sum(
                    (f.evaluate(combo) for combo in constrained_subsets(n, k, C)),
                    Fraction(0),
                )
                assert S.evaluate((n,)) == direct, (f, k, C, n)

    def test_binomial_certificate(self):
        # S = fbar * binom(n-q, k-q) exactly
        f = xvar(1) ** 2 + xvar(4)
        k, C = 4, frozenset({1, 3})
        S, fbar = constrained_sum(f, k, C)
        assert S == fbar * binomial_poly(len(C), k - len(C))

    def test_degree_bound(self):
        f = xvar(1) ** 3
        for C in (frozenset(), frozenset({1}), frozenset({1, 2})):
            S, fbar = constrained_sum(f, 3, C)
            assert S.total_degree() == 3 + 3 - len(C)
            assert fbar.total_degree() == 3

    def test_bad_constraints_rejected(self):
        with pytest.raises(ValueError):
            constrained_sum(ONE, 2, frozenset({5}))

    def test_zero_weight(self):
        S, fbar = constrained_sum(Poly(), 2, frozenset())
        assert S.is_zero


def test_binomial_poly_values():
    for n in range(8):
        assert binomial_poly(1, 1).evaluate((n,)) == n - 1
        assert binomial_poly(0, 2).evaluate((n,)) == n * (n - 1) // 2
