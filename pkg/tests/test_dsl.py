"""Statistic expression grammar."""

from fractions import Fraction
from itertools import permutations

import pytest

from cycstat.dsl import parse_statistic
from cycstat.errors import ParseError
from cycstat.oracle import descent_count, excedance_count, major_index
from cycstat.patterns import des, exc, maj


class TestBuiltins:
    def test_names(self):
        for name, evaluator in [
            ("exc", excedance_count),
            ("des", descent_count),
            ("maj", major_index),
        ]:
            s = parse_statistic(name)
            for w in permutations(range(1, 5)):
                assert s.evaluate(w) == evaluator(w)

    def test_patterns(self):
        s = parse_statistic("N(21;A={1})")
        t = des()
        for w in permutations(range(1, 5)):
            assert s.evaluate(w) == t.evaluate(w)

    def test_classical_pattern(self):
        s = parse_statistic("N(12)")
        for w in permutations(range(1, 5)):
            assert s.evaluate(w) == sum(
                1
                for i in range(len(w))
                for j in range(i + 1, len(w))
                if w[i] < w[j]
            )

    def test_bivincular(self):
        s = parse_statistic("biv(21;A={1};B={};f=x1;g=1)")
        t = maj()
        for w in permutations(range(1, 5)):
            assert s.evaluate(w) == t.evaluate(w)


class TestTranslates:
    def test_explicit_translate(self):
        s = parse_statistic("T(U=(1);V=(2);C={};f=1)")
        t = exc()
        for w in permutations(range(1, 5)):
            assert s.evaluate(w) == t.evaluate(w)

    def test_weight_polynomial(self):
        s = parse_statistic("T(U=(1,2);V=(2,1);C={1};f=x1^2 - 1/2*x2 + 3)")
        # pi = (2,1): single constrained subset {1,2}, weight 1 - 1 + 3
        assert s.evaluate((2, 1)) == Fraction(3)

    def test_unary_minus_in_weight(self):
        s = parse_statistic("T(U=(1);V=(1);C={};f=-x1)")
        assert s.evaluate((1, 2, 3)) == -6


class TestArithmetic:
    def test_sum_and_scalar(self):
        s = parse_statistic("2*exc + 1/2*des")
        e, d = exc(), des()
        for w in permutations(range(1, 5)):
            assert s.evaluate(w) == 2 * e.evaluate(w) + Fraction(1, 2) * d.evaluate(w)

    def test_difference(self):
        s = parse_statistic("maj - des")
        for w in permutations(range(1, 5)):
            assert s.evaluate(w) == major_index(w) - descent_count(w)

    def test_power(self):
        s = parse_statistic("exc^2")
        for w in permutations(range(1, 5)):
            assert s.evaluate(w) == excedance_count(w) ** 2

    def test_constant_statistic(self):
        assert parse_statistic("3").evaluate((2, 1)) == 3
        assert parse_statistic("1/3").evaluate((1,)) == Fraction(1, 3)


class TestErrors:
    def test_unknown_name(self):
        with pytest.raises(ParseError) as err:
            parse_statistic("bogus")
        assert err.value.pos == 0

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_statistic("exc )")

    def test_bad_exponent(self):
        with pytest.raises(ParseError):
            parse_statistic("exc^0")

    def test_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_statistic("1/0")

    def test_error_reports_position_and_expectation(self):
        with pytest.raises(ParseError) as err:
            parse_statistic("T(U=(1);V=(2);C={};g=1)")
        assert "f=" in str(err.value)
