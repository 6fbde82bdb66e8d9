"""The moment polynomial of a partial-permutation indicator.

For (I,J) of cycle-path type (mu, nu) with support size m, the number of
injections of [m] into [n] compatible with a permutation of cycle type
lambda equals a polynomial f_{(mu,nu)}(n, m_1, ..., m_k) of graded degree
exactly k = |mu| + |nu|.  It is computed by Moebius inversion over the set
partition lattice: classifying arbitrary edge-respecting functions by their
coincidence partition, the injective ones are recovered as the alternating
sum of the unrestricted counts of the contraction quotients.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from fractions import Fraction

from .contraction import contract
from .errors import InternalConsistencyError, MalformedInputError, ResourceLimitError
from .expectation import RationalExpectation
from .partial import CyclePathType, PartialPermutation
from .poly import N, Poly, from_json_dict, mvar, to_json_dict
from .setpartitions import bell_number, set_partitions

DEFAULT_BELL_CAP = 12


def c_poly(t: CyclePathType) -> Poly:
    """Closed-form count of compatible functions (injective on each
    component): each i-cycle contributes a factor i*m_i, each length-l path
    a factor n - sum_{i<=l} i*m_i."""
    out = Poly.const(1)
    for c in t.cycles:
        out = out * (Fraction(c) * mvar(c))
    for length in t.paths:
        factor = N
        for i in range(1, length + 1):
            factor = factor - Fraction(i) * mvar(i)
        out = out * factor
    return out


def unrestricted_count_poly(t: CyclePathType) -> Poly:
    """Count of arbitrary edge-respecting functions (no injectivity at all):
    a path is determined by any starting point (factor n), and a c-cycle
    needs a point with pi^c(x) = x (factor sum over i dividing c of i*m_i)."""
    out = Poly.const(1)
    for c in t.cycles:
        factor = Poly()
        for i in range(1, c + 1):
            if c % i == 0:
                factor = factor + Fraction(i) * mvar(i)
        out = out * factor
    for _ in t.paths:
        out = out * N
    return out


@dataclass(frozen=True)
class IndicatorMomentResult:
    type: CyclePathType
    m: int
    poly: Poly
    expectation: RationalExpectation


class _MomentCache:
    """In-process cache with single-flight computation and an optional
    on-disk JSON mirror."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: dict[CyclePathType, IndicatorMomentResult] = {}
        self._disk_path: str | None = None

    def configure_disk(self, path: str | None) -> None:
        with self._lock:
            self._disk_path = path
            if path is None:
                return
            try:
                with open(path) as fh:
                    raw = json.load(fh)
            except (OSError, json.JSONDecodeError):
                raw = {}
            for key, poly_data in raw.items():
                t = _type_from_key(key)
                poly = from_json_dict(poly_data)
                self._data.setdefault(t, _make_result(t, poly))
            if self._data:
                self._flush_locked()

    def get_or_compute(self, t: CyclePathType, bell_cap: int) -> IndicatorMomentResult:
        with self._lock:
            hit = self._data.get(t)
            if hit is not None:
                return hit
            result = _compute(t, bell_cap)
            self._data[t] = result
            if self._disk_path is not None:
                self._flush_locked()
            return result

    def _flush_locked(self) -> None:
        payload = {r.type.key: to_json_dict(r.poly) for r in self._data.values()}
        try:
            with open(self._disk_path, "w") as fh:
                json.dump(payload, fh)
        except OSError:
            pass

    def clear(self) -> None:
        with self._lock:
            self._data.clear()


_CACHE = _MomentCache()


def configure_disk_cache(path: str | None) -> None:
    _CACHE.configure_disk(path)


def indicator_moment(t: CyclePathType, bell_cap: int = DEFAULT_BELL_CAP) -> IndicatorMomentResult:
    """f_{(mu,nu)} together with the expectation f / (n)_m; cached by type."""
    return _CACHE.get_or_compute(t, bell_cap)


def _compute(t: CyclePathType, bell_cap: int) -> IndicatorMomentResult:
    m = t.support_size
    if m > bell_cap:
        raise ResourceLimitError(
            f"support size {m} exceeds the Bell cap {bell_cap} "
            f"(Bell({m}) = {bell_number(m)} set partitions)"
        )
    rep = t.representative()
    poly = Poly()
    # g(identity) = sum over rho of mu(0,rho) * F(rho), where F(rho) counts
    # edge-respecting functions constant on the blocks of rho, i.e. the
    # unrestricted count of the closure quotient
    for rho in set_partitions(m):
        poly = poly + Fraction(rho.mobius_lower()) * unrestricted_count_poly(
            contract(rep, rho)
        )
    k = t.size
    if m and poly.graded_degree() != k:
        raise InternalConsistencyError(
            f"indicator polynomial for {t.key} has graded degree "
            f"{poly.graded_degree()}, expected {k}"
        )
    return _make_result(t, poly)


def _make_result(t: CyclePathType, poly: Poly) -> IndicatorMomentResult:
    m = t.support_size
    return IndicatorMomentResult(
        type=t,
        m=m,
        poly=poly,
        expectation=RationalExpectation(poly, (m,) if m else ()),
    )


def indicator_expectation(p: PartialPermutation, lam, bell_cap: int = DEFAULT_BELL_CAP) -> Fraction:
    """P[pi(i_t) = j_t for all t] for pi uniform on the class of lambda."""
    lam = tuple(lam)
    n = sum(lam)
    if p.support and max(p.support) > n:
        raise MalformedInputError(
            f"support {p.support} exceeds the ground set [{n}]"
        )
    result = indicator_moment(p.cycle_path_type(), bell_cap)
    return result.expectation.evaluate_at(lam)


def _type_from_key(key: str) -> CyclePathType:
    mu_part, nu_part = key.split(";")
    def parse(chunk: str) -> tuple[int, ...]:
        inner = chunk.split("[", 1)[1].rstrip("]")
        return tuple(int(x) for x in inner.split(",") if x)
    return CyclePathType(parse(mu_part), parse(nu_part))
