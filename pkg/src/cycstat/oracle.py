"""Brute-force ground truth over small symmetric groups.

Everything here works by direct enumeration: conjugacy classes are built by
bucketing all of S_n by cycle type, statistics are evaluated from their
definitions, and compatible functions/injections are counted by backtracking.
The engine is certified against these counts; nothing here touches the
symbolic machinery.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iter_permutations
from math import factorial

from .errors import ResourceLimitError
from .partial import PartialPermutation

DEFAULT_N_CAP = 8


def partitions(n: int):
    """Yield the partitions of n as weakly decreasing tuples."""
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest
    yield from rec(n, n)


def cycle_type(w: tuple[int, ...]) -> tuple[int, ...]:
    """Cycle type of a permutation in one-line notation (w[i-1] = w(i))."""
    n = len(w)
    seen = [False] * (n + 1)
    parts = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = w[x - 1]
            length += 1
        parts.append(length)
    return tuple(sorted(parts, reverse=True))


def class_size(lam) -> int:
    """n! / prod_i i^{m_i} m_i!"""
    n = sum(lam)
    denom = 1
    counts: dict[int, int] = {}
    for part in lam:
        counts[part] = counts.get(part, 0) + 1
    for i, mi in counts.items():
        denom *= i**mi * factorial(mi)
    return factorial(n) // denom


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise ResourceLimitError(f"oracle enumeration capped at n <= {cap}, got {n}")


@lru_cache(maxsize=8)
def class_table(n: int, cap: int = DEFAULT_N_CAP) -> dict[tuple[int, ...], list]:
    """All of S_n bucketed by cycle type, with the class-size formula as a
    self-check."""
    _check_cap(n, cap)
    table: dict[tuple[int, ...], list] = {lam: [] for lam in partitions(n)}
    for w in iter_permutations(range(1, n + 1)):
        table[cycle_type(w)].append(w)
    for lam, members in table.items():
        assert len(members) == class_size(lam), (lam, len(members))
    return table


def conjugacy_class(lam, cap: int = DEFAULT_N_CAP) -> list:
    lam = tuple(sorted((int(x) for x in lam), reverse=True))
    n = sum(lam)
    _check_cap(n, cap)
    return class_table(n, cap)[lam]


def class_moment(evaluator, lam, d: int = 1, cap: int = DEFAULT_N_CAP) -> Fraction:
    """Exact average of evaluator(w)^d over the class of cycle type lam."""
    members = conjugacy_class(lam, cap)
    total = sum(Fraction(evaluator(w)) ** d for w in members)
    return total / len(members)


def representative(lam) -> tuple[int, ...]:
    """One permutation of cycle type lam: consecutive cycles."""
    n = sum(lam)
    w = [0] * n
    start = 1
    for part in lam:
        for off in range(part):
            w[start + off - 1] = start + (off + 1) % part
        start += part
    return tuple(w)


# -- compatible functions and injections -------------------------------


def _ordered_components(p: PartialPermutation):
    """Components as vertex lists where each later vertex is the successor
    of the previous one (cycles close back to their first vertex)."""
    return p.components()


def _component_images(kind, verts, pi, injective_within=True):
    """All ways to map one component into the permutation pi's ground set,
    following pi along the edges; yields tuples aligned with verts."""
    n = len(pi)
    out = []
    for x in range(1, n + 1):
        image = [x]
        ok = True
        for _ in range(len(verts) - 1):
            image.append(pi[image[-1] - 1])
        if injective_within and len(set(image)) != len(image):
            continue
        if kind == "cycle" and pi[image[-1] - 1] != image[0]:
            ok = False
        if ok:
            out.append(tuple(image))
    return out


def compatible_function_count(p: PartialPermutation, lam, cap: int = DEFAULT_N_CAP) -> int:
    """Functions psi from the support of p to [n] with pi(psi(i)) = psi(j)
    on every edge and psi injective on each component separately."""
    n = sum(lam)
    _check_cap(n, cap)
    pi = representative(tuple(sorted((int(x) for x in lam), reverse=True)))
    total = 1
    for kind, verts in _ordered_components(p):
        total *= len(_component_images(kind, verts, pi))
    return total


def injection_count(p: PartialPermutation, lam, pi=None, cap: int = DEFAULT_N_CAP) -> int:
    """Injections phi of the support of p into [n] with pi(phi(i)) = phi(j)
    on every edge; this is (n)_m * E_lambda[indicator]."""
    n = sum(lam)
    _check_cap(n, cap)
    if pi is None:
        pi = representative(tuple(sorted((int(x) for x in lam), reverse=True)))
    comps = _ordered_components(p)
    options = [_component_images(kind, verts, pi) for kind, verts in comps]

    def rec(idx: int, used: frozenset) -> int:
        if idx == len(options):
            return 1
        total = 0
        for image in options[idx]:
            if used.isdisjoint(image):
                total += rec(idx + 1, used | set(image))
        return total

    return rec(0, frozenset())


# -- definitional statistic evaluators ---------------------------------


def descent_count(w) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def major_index(w) -> int:
    return sum(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def excedance_count(w) -> int:
    return sum(1 for i, v in enumerate(w, start=1) if v > i)


def inversion_count(w) -> int:
    return sum(
        1
        for i in range(len(w))
        for j in range(i + 1, len(w))
        if w[i] > w[j]
    )


def fixed_point_count(w) -> int:
    return sum(1 for i, v in enumerate(w, start=1) if v == i)


def two_cycle_count(w) -> int:
    return sum(1 for part in cycle_type(w) if part == 2)


def bivincular_count(sigma, A, B, w, f=None, g=None) -> Fraction:
    """Weighted occurrences of the bivincular pattern straight from the
    definition: choose positions, check relative order and adjacencies."""
    from itertools import combinations

    k = len(sigma)
    n = len(w)
    total = Fraction(0)
    for pos in combinations(range(1, n + 1), k):
        vals = tuple(w[i - 1] for i in pos)
        rank = {v: r + 1 for r, v in enumerate(sorted(vals))}
        if tuple(rank[v] for v in vals) != tuple(sigma):
            continue
        if any(pos[a] != pos[a - 1] + 1 for a in A):
            continue
        svals = sorted(vals)
        if any(svals[b] != svals[b - 1] + 1 for b in B):
            continue
        term = Fraction(1)
        if f is not None:
            term *= f.evaluate(pos)
        if g is not None:
            term *= g.evaluate(vals)
        total += term
    return total
