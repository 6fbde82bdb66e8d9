"""Exact class expectations: a graded numerator over falling factorials.

A RationalExpectation stores E as num / prod_j (n)_{den[j]} with num an
engine polynomial in n, m_1, m_2, ...  All arithmetic is exact; the
denominator never involves the m-variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateEvaluationError, InternalConsistencyError
from .poly import (
    Poly,
    N,
    divide_exact_in_n,
    falling_factorial_poly,
    falling_factorial_value,
    integerize,
    to_json_dict,
    to_text,
)


def cycle_counts(lam) -> dict[int, int]:
    counts: dict[int, int] = {}
    for part in lam:
        counts[part] = counts.get(part, 0) + 1
    return counts


def evaluation_point(lam) -> list[int]:
    """Engine-variable values (n, m_1, m_2, ...) for a partition lambda."""
    n = sum(lam)
    counts = cycle_counts(lam)
    return [n] + [counts.get(i, 0) for i in range(1, n + 1)]


@dataclass(frozen=True)
class RationalExpectation:
    num: Poly
    den: tuple[int, ...] = ()

    def __post_init__(self):
        den = tuple(sorted((int(a) for a in self.den if a), reverse=True))
        object.__setattr__(self, "den", den if not self.num.is_zero else ())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "RationalExpectation") -> "RationalExpectation":
        other = _coerce(other)
        target = _common_den(self.den, other.den)
        num = self.num * _cofactor(self.den, target) + other.num * _cofactor(
            other.den, target
        )
        return RationalExpectation(num, target).normalized()

    __radd__ = __add__

    def __neg__(self) -> "RationalExpectation":
        return RationalExpectation(-self.num, self.den)

    def __sub__(self, other) -> "RationalExpectation":
        return self + (-_coerce(other))

    def __mul__(self, other) -> "RationalExpectation":
        if isinstance(other, RationalExpectation):
            return RationalExpectation(
                self.num * other.num, self.den + other.den
            ).normalized()
        return RationalExpectation(self.num * other, self.den).normalized()

    __rmul__ = __mul__

    # -- normalization ------------------------------------------------

    def normalized(self) -> "RationalExpectation":
        """Divide out every falling-factorial factor that divides the
        numerator exactly."""
        num = self.num
        if num.is_zero:
            return RationalExpectation(num, ())
        remaining = list(self.den)
        changed = True
        while changed:
            changed = False
            for i, a in enumerate(remaining):
                quo = divide_exact_in_n(num, falling_factorial_poly(a))
                if quo is not None:
                    num = quo
                    del remaining[i]
                    changed = True
                    break
        return RationalExpectation(num, tuple(remaining))

    def times_falling(self, a: int) -> "RationalExpectation":
        """Multiply by (n)_a."""
        return RationalExpectation(
            self.num * falling_factorial_poly(a), self.den
        ).normalized()

    def clear_falling(self, a: int) -> Poly:
        """Return (n)_a * self as a polynomial; raises if the product is not
        polynomial (which would falsify the moment theorems)."""
        cleared = self.times_falling(a)
        if cleared.den:
            raise InternalConsistencyError(
                f"(n)_{a} * expectation is not polynomial; residual "
                f"denominator {cleared.den}"
            )
        return cleared.num

    # -- evaluation ---------------------------------------------------

    def evaluate_at(self, lam) -> Fraction:
        lam = tuple(lam)
        n = sum(lam)
        den_val = Fraction(1)
        for a in self.den:
            den_val *= falling_factorial_value(n, a)
        if den_val == 0:
            raise DegenerateEvaluationError(
                f"denominator {self.den} vanishes at n={n}; the statistic "
                "needs a larger ground set"
            )
        return self.num.evaluate(evaluation_point(lam)) / den_val

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        norm = self.normalized()
        p, d = integerize(norm.num)
        parts = [f"(n)_{a}" for a in norm.den]
        if d != 1:
            parts.append(str(d))
        body = to_text(p)
        if not parts:
            return body
        den_text = "*".join(parts) if len(parts) == 1 else "(" + " * ".join(parts) + ")"
        if len(p.terms) > 1:
            body = f"({body})"
        return f"{body} / {den_text}"

    def to_json_dict(self) -> dict:
        norm = self.normalized()
        return {
            "numerator": to_json_dict(norm.num),
            "denominator": {"falling": list(norm.den)},
            "text": str(norm),
        }


ZERO_EXPECTATION = RationalExpectation(Poly(), ())

LIMIT_VARS = ("alpha", "beta")


def limit_ratio(E: RationalExpectation, scale_power: int) -> Poly:
    """Limit of E / n^scale_power as n -> infinity along sequences with
    m_1 = alpha*n, m_2 = beta*n and m_{i>=3} = o(n^i) (set to 0).

    Returns a polynomial in alpha (variable 0) and beta (variable 1); the
    limit is the leading-coefficient ratio, exact by degree comparison.
    Raises DivergenceError when the numerator's n-degree exceeds the
    denominator's, i.e. the scale power is too small.
    """
    from .errors import DivergenceError

    den_degree = sum(E.den) + scale_power
    # substitute: each term c * n^a0 * m1^a1 * m2^a2 becomes
    # c * alpha^a1 * beta^a2 * n^(a0 + a1 + a2)
    by_ndeg: dict[int, dict] = {}
    for exps, coef in E.num.terms.items():
        a0 = exps[0] if exps else 0
        a1 = exps[1] if len(exps) > 1 else 0
        a2 = exps[2] if len(exps) > 2 else 0
        if any(exps[3:]):
            continue
        ndeg = a0 + a1 + a2
        bucket = by_ndeg.setdefault(ndeg, {})
        key = (a1, a2)
        bucket[key] = bucket.get(key, Fraction(0)) + coef
    top = -1
    for ndeg, bucket in by_ndeg.items():
        if any(bucket.values()) and ndeg > top:
            top = ndeg
    if top > den_degree:
        raise DivergenceError(
            f"numerator grows like n^{top} against denominator n^{den_degree}; "
            "the scale power is too small"
        )
    if top < den_degree or top < 0:
        return Poly()
    return Poly(by_ndeg[top])


def _coerce(x) -> RationalExpectation:
    if isinstance(x, RationalExpectation):
        return x
    if isinstance(x, Poly):
        return RationalExpectation(x, ())
    return RationalExpectation(Poly.const(x), ())


def _common_den(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    width = max(len(a), len(b))
    a = a + (0,) * (width - len(a))
    b = b + (0,) * (width - len(b))
    return tuple(max(x, y) for x, y in zip(a, b))


def _cofactor(den: tuple[int, ...], target: tuple[int, ...]) -> Poly:
    """Polynomial with den * cofactor = target, componentwise on the sorted
    falling-factorial lists."""
    out = Poly.const(1)
    den = den + (0,) * (len(target) - len(den))
    for have, want in zip(den, target):
        for i in range(have, want):
            out = out * (N - Poly.const(i))
    return out
