"""Indicator moment polynomials f_(mu,nu) and their oracle certification."""

from fractions import Fraction

import pytest

from cycstat.errors import MalformedInputError, ResourceLimitError
from cycstat.indicator import (
    c_poly,
    indicator_expectation,
    indicator_moment,
    unrestricted_count_poly,
)
from cycstat.oracle import injection_count, compatible_function_count, partitions
from cycstat.partial import CyclePathType, PartialPermutation
from cycstat.poly import N, ONE, mvar

from conftest import all_cycle_path_types


class TestCPoly:
    def test_one_cycle(self):
        assert c_poly(CyclePathType((1,), ())) == mvar(1)

    def test_two_cycle(self):
        assert c_poly(CyclePathType((2,), ())) == 2 * mvar(2)

    def test_two_edge_path(self):
        assert c_poly(CyclePathType((), (2,))) == N - mvar(1) - 2 * mvar(2)

    def test_product_structure(self):
        t = CyclePathType((2, 1), (1,))
        assert c_poly(t) == 2 * mvar(2) * mvar(1) * (N - mvar(1))


class TestUnrestrictedCount:
    def test_path_factor_is_n(self):
        assert unrestricted_count_poly(CyclePathType((), (3,))) == N

    def test_cycle_factor_sums_divisors(self):
        # a 4-cycle closes on points of period dividing 4
        expected = mvar(1) + 2 * mvar(2) + 4 * mvar(4)
        assert unrestricted_count_poly(CyclePathType((4,), ())) == expected

    def test_matches_direct_count(self):
        # arbitrary edge-respecting functions, counted by brute force
        from cycstat.oracle import representative

        t = CyclePathType((2,), (1,))
        rep = t.representative()
        edges = rep.edges()
        m = len(rep.support)
        for lam in [(3,), (2, 2), (2, 1, 1), (4, 1)]:
            n = sum(lam)
            pi = representative(lam)
            count = 0
            from itertools import product

            for psi in product(range(1, n + 1), repeat=m):
                if all(pi[psi[u - 1] - 1] == psi[v - 1] for u, v in edges.items()):
                    count += 1
            from cycstat.expectation import evaluation_point

            assert unrestricted_count_poly(t).evaluate(evaluation_point(lam)) == count


class TestIndicatorMoment:
    def test_fixed_point(self):
        assert indicator_moment(CyclePathType((1,), ())).poly == mvar(1)

    def test_single_edge(self):
        assert indicator_moment(CyclePathType((), (1,))).poly == N - mvar(1)

    def test_two_edge_path(self):
        # injective walks of length 2: total walks n minus those starting on
        # a fixed point (m1) or on a 2-cycle (2*m2, which close up)
        assert indicator_moment(CyclePathType((), (2,))).poly == (
            N - mvar(1) - 2 * mvar(2)
        )

    def test_two_disjoint_edges(self):
        # hand count: ordered pairs of disjoint injective 1-walks
        expected = (N - mvar(1)) * (N - mvar(1) - 3 * ONE) + 2 * mvar(2)
        assert indicator_moment(CyclePathType((), (1, 1))).poly == expected

    def test_graded_degree_is_k(self):
        for t in all_cycle_path_types(3):
            assert indicator_moment(t).poly.graded_degree() == t.size

    def test_oracle_grid_small(self):
        # exact match with brute-force injection counts for k <= 2, n <= 5
        from cycstat.expectation import evaluation_point

        for t in all_cycle_path_types(2):
            poly = indicator_moment(t).poly
            rep = t.representative()
            for n in range(1, 6):
                for lam in partitions(n):
                    assert poly.evaluate(evaluation_point(lam)) == \
                        injection_count(rep, lam), (t.key, lam)

    def test_bell_cap(self):
        big = CyclePathType((), tuple([1] * 7))  # support size 14
        with pytest.raises(ResourceLimitError) as err:
            indicator_moment(big, bell_cap=12)
        assert "Bell(14)" in str(err.value)

    def test_cache_returns_identical_object(self):
        t = CyclePathType((2,), (1,))
        assert indicator_moment(t) is indicator_moment(t)


class TestIndicatorExpectation:
    def test_fixed_point_probability(self):
        p = PartialPermutation((1,), (1,))
        assert indicator_expectation(p, (2, 1)) == Fraction(1, 3)

    def test_two_cycle_probability(self):
        # over the 3 permutations of type (2,2): 2*m2/(n)_2 = 4/12
        p = PartialPermutation((1, 2), (2, 1))
        assert indicator_expectation(p, (2, 2)) == Fraction(1, 3)

    def test_three_cycle_edge(self):
        p = PartialPermutation((1,), (2,))
        assert indicator_expectation(p, (3,)) == Fraction(1, 2)

    def test_support_exceeding_n_rejected(self):
        p = PartialPermutation((1,), (5,))
        with pytest.raises(MalformedInputError):
            indicator_expectation(p, (2, 1))


def test_compatible_function_polynomial_matches_oracle():
    from cycstat.expectation import evaluation_point

    for t in all_cycle_path_types(2):
        rep = t.representative()
        for n in range(1, 6):
            for lam in partitions(n):
                assert c_poly(t).evaluate(evaluation_point(lam)) == \
                    compatible_function_count(rep, lam), (t.key, lam)


def test_size_one_normalization():
    # summing E_lambda over the n^2 single-edge indicators gives n exactly:
    # every position maps somewhere
    from cycstat.expectation import evaluation_point

    f_fix = indicator_moment(CyclePathType((1,), ())).poly
    f_edge = indicator_moment(CyclePathType((), (1,))).poly
    for n in range(1, 7):
        for lam in partitions(n):
            pt = evaluation_point(lam)
            # n diagonal indicators (expectation f_fix/n each) plus
            # n(n-1) off-diagonal ones (expectation f_edge/(n)_2 each)
            total = n * f_fix.evaluate(pt) / Fraction(n)
            if n > 1:
                total += n * (n - 1) * f_edge.evaluate(pt) / Fraction(n * (n - 1))
            assert total == n
