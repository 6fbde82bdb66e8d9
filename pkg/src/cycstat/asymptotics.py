"""Graded asymptotic decomposition, fixed-point-density limits and the
variance limit.

For a statistic of power p and shift q, the cleared expectation
(n)_q * E[Psi] is a polynomial whose monomials split by graded degree; in
the scaled variables y_i = m_i / n^i the degree-l layer contributes at order
n^{-(p+q-l)} to E[Psi]/n^p.  The top layer evaluated at (alpha, 0, ...)
gives the limit along sequences with m_1/n -> alpha, and the variance scaled
by n^{2p-1} converges to V1(alpha) + beta*V2(alpha).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalConsistencyError
from .expectation import RationalExpectation, limit_ratio
from .indicator import DEFAULT_BELL_CAP
from .poly import Poly, _graded
from .translates import RegularStatistic


@dataclass(frozen=True)
class GradedDecomposition:
    """Layers l -> g_l in the scaled variables y_1, y_2, ... (variable i-1
    is y_i = m_i/n^i), for 0 <= l <= p + q."""

    p: int
    q: int
    layers: dict[int, Poly]

    def layer(self, ell: int) -> Poly:
        return self.layers.get(ell, Poly())

    @property
    def leading(self) -> Poly:
        """g_{p+q}, the layer controlling the scaled limit."""
        return self.layer(self.p + self.q)


def decompose(E: RationalExpectation, p: int, q: int) -> GradedDecomposition:
    """Split the cleared numerator (n)_q * E by graded monomial degree.

    A monomial c * n^{a0} * m1^{a1} * ... of graded degree l maps to the
    layer term c * y1^{a1} * ... in g_l; the n-exponent is implied by
    homogeneity, so the layers drop it.
    """
    cleared = E.clear_falling(q)
    layers: dict[int, dict] = {}
    for exps, coef in cleared.terms.items():
        ell = _graded(exps)
        if ell > p + q:
            raise InternalConsistencyError(
                f"graded degree {ell} exceeds p + q = {p + q}"
            )
        bucket = layers.setdefault(ell, {})
        key = exps[1:]
        bucket[key] = bucket.get(key, 0) + coef
    return GradedDecomposition(p, q, {ell: Poly(b) for ell, b in layers.items()})


def alpha_limit(stat: RegularStatistic, bell_cap: int = DEFAULT_BELL_CAP) -> Poly:
    """f(alpha) = lim E_lambda[Psi]/n^p along m_1/n -> alpha: the leading
    layer with y_1 = alpha and y_{i>=2} = 0.  Polynomial in one variable."""
    dec = decompose(stat.moment(1, bell_cap), stat.power, stat.shift)
    top = dec.leading
    return Poly({exps: c for exps, c in top.terms.items() if not any(exps[1:])})


def variance_limit(
    stat: RegularStatistic, bell_cap: int = DEFAULT_BELL_CAP
) -> tuple[Poly, Poly]:
    """(V1, V2) with Var_lambda[Psi]/n^{2p-1} -> V1(alpha) + beta*V2(alpha).

    Certifies the structural fact making the n^{2p} term drop: the cleared
    variance has no n^{2q}*m1^{2p} monomial; and the limit is exactly linear
    in beta.
    """
    p, q = stat.power, stat.shift
    V = stat.variance(bell_cap).normalized()
    # top graded layer of the numerator sits at degree sum(den) + 2p; its
    # pure-y1 monomial n^sum(den) * m1^(2p) must cancel for the n^(2p-1)
    # scaling to converge
    den_degree = sum(V.den)
    if V.num.coefficient((den_degree, 2 * p)) != 0:
        raise InternalConsistencyError(
            f"variance retains the monomial n^{den_degree}*m1^{2 * p}, "
            "which would make the scaled variance diverge"
        )
    limit = limit_ratio(V, 2 * p - 1)
    v1_terms, v2_terms = {}, {}
    for exps, coef in limit.terms.items():
        beta_exp = exps[1] if len(exps) > 1 else 0
        alpha_exp = exps[0] if exps else 0
        if beta_exp == 0:
            v1_terms[(alpha_exp,)] = coef
        elif beta_exp == 1:
            v2_terms[(alpha_exp,)] = coef
        else:
            raise InternalConsistencyError(
                "variance limit is not linear in beta"
            )
    return Poly(v1_terms), Poly(v2_terms)
