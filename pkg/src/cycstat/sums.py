"""Constrained power sums over adjacency-constrained subsets of [n].

For a weight f(x_1..x_k) and C a set of forced adjacencies (i in C means
the i-th and (i+1)-st chosen elements are consecutive integers), the sum of
f over all C-constrained k-subsets of [n] is a polynomial S(n) of degree
deg f + k - |C|, and S(n) = fbar(n) * binom(n - q, k - q) exactly with
deg fbar = deg f.  We obtain S by evaluating at enough integer points and
interpolating, then certify the factorization by exact division.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .errors import InternalConsistencyError
from .poly import N, Poly, divide_exact_in_n, interpolate


def constrained_subsets(n: int, k: int, C: frozenset[int]):
    """Yield increasing k-tuples from [n] with s[i+1] = s[i] + 1 for i in C
    (1-based positions within the tuple)."""
    if k == 0:
        if not C:
            yield ()
        return
    for combo in combinations(range(1, n + 1), k):
        if all(combo[i] == combo[i - 1] + 1 for i in C):
            yield combo


def binomial_poly(q: int, r: int) -> Poly:
    """binom(n - q, r) as a polynomial in n."""
    out = Poly.const(Fraction(1, factorial(r)))
    for j in range(r):
        out = out * (N - Poly.const(q + j))
    return out


@lru_cache(maxsize=4096)
def constrained_sum(f: Poly, k: int, C: frozenset[int]) -> tuple[Poly, Poly]:
    """Return (S, fbar) with S(n) the exact constrained sum of f and
    S = fbar * binom(n-q, k-q) as polynomials in n."""
    C = frozenset(int(c) for c in C)
    if not C <= set(range(1, k)):
        raise ValueError(f"constraints {sorted(C)} not inside [{k - 1}]")
    q = len(C)
    deg_f = f.total_degree()
    if deg_f == -float("inf"):
        deg_f = 0  # zero weight: S is identically zero, handled below
    npoints = int(deg_f) + (k - q) + 1
    # contracting each forced adjacency run turns the index set into a
    # (k-q)-subset of [n-q], so the sum agrees with its polynomial extension
    # exactly when n >= q; sample there
    points = []
    for n in range(q, q + npoints):
        total = Fraction(0)
        for combo in constrained_subsets(n, k, C):
            total += f.evaluate(combo)
        points.append((n, total))
    S = interpolate(points)
    fbar = divide_exact_in_n(S, binomial_poly(q, k - q))
    if fbar is None:
        raise InternalConsistencyError(
            "constrained sum is not divisible by binom(n-q, k-q); "
            f"k={k}, C={sorted(C)}"
        )
    return S, fbar
