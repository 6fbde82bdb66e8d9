"""Sparse multivariate polynomials over exact rationals.

One representation serves three variable universes:

* engine polynomials in n, m_1, m_2, ... (variable 0 is n, variable i is m_i),
  graded so that deg n = 1 and deg m_i = i;
* weight polynomials in x_1, ..., x_m (variable i is x_{i+1});
* limit polynomials in alpha, beta.

Exponent keys are tuples with trailing zeros stripped, so the variable
universe can grow lazily without rewriting existing terms.  No floating
point anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, inf

Exponents = tuple[int, ...]

NEG_INF = -inf  # degree of the zero polynomial


def _strip(exps) -> Exponents:
    exps = tuple(int(e) for e in exps)
    while exps and exps[-1] == 0:
        exps = exps[:-1]
    return exps


class Poly:
    """Immutable sparse polynomial; terms maps exponent tuples to nonzero
    Fractions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            for exps, coef in terms.items():
                coef = Fraction(coef)
                if coef:
                    key = _strip(exps)
                    val = clean.get(key, Fraction(0)) + coef
                    if val:
                        clean[key] = val
                    else:
                        clean.pop(key, None)
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, c) -> "Poly":
        return cls({(): Fraction(c)})

    @classmethod
    def variable(cls, index: int, power: int = 1) -> "Poly":
        exps = [0] * (index + 1)
        exps[index] = power
        return cls({tuple(exps): Fraction(1)})

    # -- predicates and metrics ---------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not e for e in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    @property
    def num_vars(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def total_degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def graded_degree(self):
        """Degree under deg(var 0) = 1 and deg(var i) = i for i >= 1."""
        if not self.terms:
            return NEG_INF
        return max(_graded(e) for e in self.terms)

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(_strip(exps), Fraction(0))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        out = dict(self.terms)
        for exps, coef in other.terms.items():
            val = out.get(exps, Fraction(0)) + coef
            if val:
                out[exps] = val
            else:
                out.pop(exps, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return _raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = _mul_exps(e1, e2)
                val = out.get(key, Fraction(0)) + c1 * c2
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        return _raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative powers not supported")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation and substitution ----------------------------------

    def evaluate(self, values) -> Fraction:
        """Evaluate at values[i] for variable i (missing trailing values are 0)."""
        total = Fraction(0)
        for exps, coef in self.terms.items():
            term = coef
            for i, e in enumerate(exps):
                if e:
                    v = Fraction(values[i]) if i < len(values) else Fraction(0)
                    term *= v**e
            total += term
        return total

    def substitute(self, mapping: dict[int, "Poly"]) -> "Poly":
        """Replace variable i by mapping[i] (a Poly); unmapped variables stay."""
        out = Poly()
        for exps, coef in self.terms.items():
            term = Poly.const(coef)
            for i, e in enumerate(exps):
                if not e:
                    continue
                base = mapping.get(i)
                if base is None:
                    base = Poly.variable(i)
                term = term * base**e
            out = out + term
        return out

    def __repr__(self):
        return f"Poly({to_text(self)})"


def _graded(exps: Exponents) -> int:
    return sum(e * max(i, 1) for i, e in enumerate(exps))


def _mul_exps(e1: Exponents, e2: Exponents) -> Exponents:
    if len(e1) < len(e2):
        e1, e2 = e2, e1
    return tuple(a + b for a, b in zip(e1, e2)) + e1[len(e2):]


def _raw(terms: dict[Exponents, Fraction]) -> Poly:
    p = Poly()
    object.__setattr__(p, "terms", terms)
    return p


def _coerce(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x)


ZERO = Poly()
ONE = Poly.const(1)
N = Poly.variable(0)


def mvar(i: int) -> Poly:
    """The variable m_i of the engine ring."""
    if i < 1:
        raise ValueError("m-variables are indexed from 1")
    return Poly.variable(i)


def xvar(i: int) -> Poly:
    """The variable x_i of a weight polynomial."""
    if i < 1:
        raise ValueError("x-variables are indexed from 1")
    return Poly.variable(i - 1)


def falling_factorial_poly(a: int) -> Poly:
    """(n)_a = n(n-1)...(n-a+1) as an engine polynomial."""
    out = ONE
    for i in range(a):
        out = out * (N - Poly.const(i))
    return out


def falling_factorial_value(n, a: int) -> Fraction:
    out = Fraction(1)
    for i in range(a):
        out *= n - i
    return out


def divide_exact_in_n(num: Poly, div: Poly) -> Poly | None:
    """Exact division by a polynomial in variable 0 only; None if it leaves a
    remainder."""
    dcoeffs: dict[int, Fraction] = {}
    for exps, coef in div.terms.items():
        if any(e for e in exps[1:]):
            raise ValueError("divisor must be univariate in n")
        dcoeffs[exps[0] if exps else 0] = coef
    ddeg = max(dcoeffs)
    lead = dcoeffs[ddeg]

    rem = dict(num.terms)
    quo: dict[Exponents, Fraction] = {}
    while rem:
        top = max(e[0] if e else 0 for e in rem)
        if top < ddeg:
            return None
        for exps in [e for e in rem if (e[0] if e else 0) == top]:
            coef = rem.pop(exps)
            qexp = _strip((top - ddeg,) + exps[1:])
            qcoef = coef / lead
            quo[qexp] = quo.get(qexp, Fraction(0)) + qcoef
            for d, dc in dcoeffs.items():
                if d == ddeg:
                    continue
                key = _strip((top - ddeg + d,) + exps[1:])
                val = rem.get(key, Fraction(0)) - qcoef * dc
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
    return _raw({e: c for e, c in quo.items() if c})


# -- rendering ---------------------------------------------------------

ENGINE_VARS = "engine"
WEIGHT_VARS = "weight"


def _var_name(index: int, universe) -> str:
    if isinstance(universe, (list, tuple)):
        return universe[index]
    if universe == ENGINE_VARS:
        return "n" if index == 0 else f"m{index}"
    return f"x{index + 1}"


def _sort_key(exps: Exponents, universe):
    if universe == ENGINE_VARS:
        deg = _graded(exps)
    else:
        deg = sum(exps)
    return (deg, tuple(-e for e in exps))


def _monomial_text(exps: Exponents, universe) -> str:
    parts = []
    for i, e in enumerate(exps):
        if not e:
            continue
        name = _var_name(i, universe)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def to_text(p: Poly, universe=ENGINE_VARS) -> str:
    """Canonical text form: monomials sorted by (graded) degree then by
    exponent vector, e.g. '1/12*n - 1/12*m1 - 1/6*m2'."""
    if p.is_zero:
        return "0"
    chunks = []
    for exps in sorted(p.terms, key=lambda e: _sort_key(e, universe)):
        coef = p.terms[exps]
        mono = _monomial_text(exps, universe)
        mag = abs(coef)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        if not chunks:
            chunks.append(body if coef > 0 else f"-{body}")
        else:
            chunks.append(("+ " if coef > 0 else "- ") + body)
    return " ".join(chunks)


def to_json_dict(p: Poly, universe=ENGINE_VARS) -> dict:
    terms = []
    for exps in sorted(p.terms, key=lambda e: _sort_key(e, universe)):
        coef = p.terms[exps]
        exp_map = {
            _var_name(i, universe): e for i, e in enumerate(exps) if e
        }
        terms.append({"coef": str(coef), "exps": exp_map})
    return {"terms": terms}


def from_json_dict(data: dict, universe=ENGINE_VARS) -> Poly:
    terms: dict[Exponents, Fraction] = {}
    for item in data["terms"]:
        coef = Fraction(item["coef"])
        exps: dict[int, int] = {}
        for name, e in item["exps"].items():
            if universe == ENGINE_VARS:
                idx = 0 if name == "n" else int(name[1:])
            else:
                idx = int(name[1:]) - 1
            exps[idx] = int(e)
        width = max(exps, default=-1) + 1
        key = tuple(exps.get(i, 0) for i in range(width))
        terms[key] = terms.get(key, Fraction(0)) + coef
    return Poly(terms)


def integerize(p: Poly) -> tuple[Poly, int]:
    """Write p = P / d with P having coprime integer coefficients and d a
    positive integer; returns (P, d)."""
    if p.is_zero:
        return p, 1
    q = 1
    for coef in p.terms.values():
        q = q * coef.denominator // gcd(q, coef.denominator)
    scaled = {e: c * q for e, c in p.terms.items()}
    g = 0
    for c in scaled.values():
        g = gcd(g, int(c))
    g = gcd(g, q) if g else q
    if g > 1:
        scaled = {e: c / g for e, c in scaled.items()}
        q //= g
    return _raw({e: Fraction(c) for e, c in scaled.items()}), q


def interpolate(points: list[tuple[int, Fraction]]) -> Poly:
    """Exact univariate interpolation in n through the given (x, y) points,
    via Newton divided differences."""
    xs = [Fraction(x) for x, _ in points]
    coeffs = [Fraction(y) for _, y in points]
    for j in range(1, len(points)):
        for i in range(len(points) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = ZERO
    basis = ONE
    for j, c in enumerate(coeffs):
        poly = poly + Poly.const(c) * basis
        basis = basis * (N - Poly.const(xs[j]))
    return poly


def poly_to_json_text(p: Poly, universe=ENGINE_VARS) -> str:
    return json.dumps(to_json_dict(p, universe))
