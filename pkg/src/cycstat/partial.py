"""Partial permutations and their cycle-path types.

A partial permutation is an injection recorded as aligned position/value
tuples (I, J) with i_t mapping to j_t.  Its functional digraph on I union J
decomposes into directed cycles and directed paths; the sorted multisets of
cycle lengths and path edge-lengths form the cycle-path type, which is the
invariant under simultaneous relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedInputError, SizeMismatchError


@dataclass(frozen=True)
class PartialPermutation:
    """Aligned tuples (positions, values); canonical form has positions increasing."""

    positions: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        pos = tuple(int(v) for v in self.positions)
        val = tuple(int(v) for v in self.values)
        if len(pos) != len(val):
            raise MalformedInputError("positions and values must have equal length")
        if len(set(pos)) != len(pos):
            raise MalformedInputError(f"duplicate positions in {pos}")
        if len(set(val)) != len(val):
            raise MalformedInputError(f"duplicate values in {val}")
        if any(v < 1 for v in pos + val):
            raise MalformedInputError("entries must be positive integers")
        # simultaneous reordering so positions increase is the identity on the object
        order = sorted(range(len(pos)), key=lambda t: pos[t])
        object.__setattr__(self, "positions", tuple(pos[t] for t in order))
        object.__setattr__(self, "values", tuple(val[t] for t in order))

    @property
    def size(self) -> int:
        return len(self.positions)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.positions) | set(self.values)))

    @property
    def is_packed(self) -> bool:
        sup = self.support
        return sup == tuple(range(1, len(sup) + 1))

    def edges(self) -> dict[int, int]:
        return dict(zip(self.positions, self.values))

    def components(self) -> list[tuple[str, list[int]]]:
        """Decompose the functional digraph into ('cycle'|'path', vertex list).

        For a cycle the list holds the vertices in cyclic order (no repeat);
        for a path it runs from source to sink, so the edge count is
        len(list) - 1.
        """
        return graph_components(self.edges(), set(self.support))

    def cycle_path_type(self) -> "CyclePathType":
        mu, nu = [], []
        for kind, verts in self.components():
            if kind == "cycle":
                mu.append(len(verts))
            else:
                nu.append(len(verts) - 1)
        return CyclePathType(tuple(sorted(mu, reverse=True)), tuple(sorted(nu, reverse=True)))

    def canonicalize(self) -> tuple["PartialPermutation", tuple[int, ...]]:
        """Return (packed representative on [m], support) for m = |I union J|."""
        sup = self.support
        rank = {s: r + 1 for r, s in enumerate(sup)}
        packed = PartialPermutation(
            tuple(rank[i] for i in self.positions),
            tuple(rank[j] for j in self.values),
        )
        return packed, sup

    def __str__(self) -> str:
        return f"({','.join(map(str, self.positions))})({','.join(map(str, self.values))})"


@dataclass(frozen=True)
class CyclePathType:
    """Pair of partitions: cycle lengths mu, path edge-lengths nu."""

    cycles: tuple[int, ...]
    paths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(sorted((int(c) for c in self.cycles), reverse=True)))
        object.__setattr__(self, "paths", tuple(sorted((int(p) for p in self.paths), reverse=True)))
        if any(c < 1 for c in self.cycles) or any(p < 1 for p in self.paths):
            raise MalformedInputError("cycle and path lengths must be >= 1")

    @property
    def size(self) -> int:
        """Number of edges k = |mu| + |nu|."""
        return sum(self.cycles) + sum(self.paths)

    @property
    def support_size(self) -> int:
        """Number of vertices m; each length-l path carries l + 1 vertices."""
        return sum(self.cycles) + sum(self.paths) + len(self.paths)

    @property
    def key(self) -> str:
        mu = ",".join(map(str, self.cycles))
        nu = ",".join(map(str, self.paths))
        return f"mu=[{mu}];nu=[{nu}]"

    def representative(self) -> PartialPermutation:
        """Canonical packed partial permutation of this type: cycles laid out
        first over consecutive integers (decreasing length), then paths."""
        pos, val = [], []
        nxt = 1
        for c in self.cycles:
            verts = list(range(nxt, nxt + c))
            for t in range(c):
                pos.append(verts[t])
                val.append(verts[(t + 1) % c])
            nxt += c
        for p in self.paths:
            verts = list(range(nxt, nxt + p + 1))
            for t in range(p):
                pos.append(verts[t])
                val.append(verts[t + 1])
            nxt += p + 1
        return PartialPermutation(tuple(pos), tuple(val))


def graph_components(edges: dict[int, int], vertices: set[int]) -> list[tuple[str, list[int]]]:
    """Split a functional digraph with in/out degree <= 1 into cycles and paths."""
    preds = {v: u for u, v in edges.items()}
    seen: set[int] = set()
    out: list[tuple[str, list[int]]] = []
    # paths start at vertices with no incoming edge
    for v in sorted(vertices):
        if v in seen or v in preds:
            continue
        walk = [v]
        seen.add(v)
        while walk[-1] in edges:
            walk.append(edges[walk[-1]])
            seen.add(walk[-1])
        out.append(("path", walk))
    # anything left lies on a cycle
    for v in sorted(vertices):
        if v in seen:
            continue
        walk = [v]
        seen.add(v)
        w = edges[v]
        while w != v:
            walk.append(w)
            seen.add(w)
            w = edges[w]
        out.append(("cycle", walk))
    return out


def relabel(support: tuple[int, ...] | list[int], packed: PartialPermutation) -> PartialPermutation:
    """Apply the order-preserving substitution u -> support[u-1] to a packed
    partial permutation; inverse of canonicalize on its image."""
    sup = sorted(support)
    if len(set(sup)) != len(sup):
        raise MalformedInputError("relabeling set has repeated entries")
    m = len(packed.support)
    if len(sup) != m:
        raise SizeMismatchError(f"relabeling set has {len(sup)} entries, need {m}")
    return PartialPermutation(
        tuple(sup[i - 1] for i in packed.positions),
        tuple(sup[j - 1] for j in packed.values),
    )
