"""Linear-optimization oracles over independence systems.

An oracle answers a single query: given integer weights w over the ground
set, return a member s of the system maximizing w . s.  For downward
monotone systems the optimum is always >= 0 and never selects an element
with strictly negative weight; every implementation here honors that.

The ground set is indexed 0..d-1.  Members are 0/1 tuples of length d.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment

from .core import Matrix, Vector, dims


class IndependenceOracle:
    """Behavioral contract: maximize(w) returns s in S with w . s maximal."""

    def ground_size(self) -> int:
        raise NotImplementedError

    def maximize(self, w: Sequence[int]) -> Vector:
        raise NotImplementedError

    def contains(self, v: Sequence[int]) -> bool:
        raise NotImplementedError

    def _check_weights(self, w: Sequence[int]) -> None:
        if len(w) != self.ground_size():
            raise ValueError(
                f"weight vector length {len(w)} != ground size {self.ground_size()}"
            )


def down_close(vectors: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    """Downward closure of a set of 0/1 vectors, sorted by (popcount, bits)."""
    seen = {tuple(int(b) for b in v) for v in vectors}
    stack = list(seen)
    while stack:
        v = stack.pop()
        for i, bit in enumerate(v):
            if bit:
                u = v[:i] + (0,) + v[i + 1:]
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return tuple(sorted(seen, key=lambda v: (sum(v), v)))


def is_downward_closed(vectors: Iterable[Sequence[int]]) -> bool:
    """True iff removing any single 1 from a member yields a member."""
    members = {tuple(v) for v in vectors}
    for v in members:
        for i, bit in enumerate(v):
            if bit and v[:i] + (0,) + v[i + 1:] not in members:
                return False
    return True


@dataclass(frozen=True)
class ExplicitSystem(IndependenceOracle):
    """A system given as an explicit list of distinct 0/1 vectors.

    With downward_closed=True the constructor verifies closure (hence the
    zero vector is present).  Ties in maximize break by list order, so the
    stored order is significant and preserved by serialization.
    """

    vectors: tuple[Vector, ...]
    downward_closed: bool = False
    _member_set: frozenset[Vector] = field(
        init=False, repr=False, compare=False, hash=False, default=frozenset()
    )

    def __post_init__(self) -> None:
        vecs = tuple(tuple(int(b) for b in v) for v in self.vectors)
        if not vecs:
            raise ValueError("explicit system must list at least one vector")
        d = len(vecs[0])
        for v in vecs:
            if len(v) != d:
                raise ValueError("explicit system vectors of unequal length")
            if any(b not in (0, 1) for b in v):
                raise ValueError("explicit system vectors must be 0/1")
        if len(set(vecs)) != len(vecs):
            raise ValueError("explicit system vectors must be distinct")
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "_member_set", frozenset(vecs))
        if self.downward_closed and not is_downward_closed(vecs):
            raise ValueError("system flagged downward_closed is not closed")

    @classmethod
    def closed(cls, vectors: Iterable[Sequence[int]]) -> "ExplicitSystem":
        """Build the downward closure of the given vectors."""
        return cls(down_close(vectors), downward_closed=True)

    def ground_size(self) -> int:
        return len(self.vectors[0])

    def contains(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._member_set

    def maximize(self, w: Sequence[int]) -> Vector:
        self._check_weights(w)
        best = self.vectors[0]
        best_val = sum(wi * bi for wi, bi in zip(w, best))
        for v in self.vectors[1:]:
            val = sum(wi * bi for wi, bi in zip(w, v))
            if val > best_val:
                best, best_val = v, val
        return best


@dataclass(frozen=True)
class UniformMatroid(IndependenceOracle):
    """All subsets of [d] with at most `rank` elements."""

    d: int
    rank: int

    def __post_init__(self) -> None:
        if self.d < 0 or self.rank < 0:
            raise ValueError("d and rank must be nonnegative")

    def ground_size(self) -> int:
        return self.d

    def contains(self, v: Sequence[int]) -> bool:
        return (
            len(v) == self.d
            and all(b in (0, 1) for b in v)
            and sum(v) <= self.rank
        )

    def maximize(self, w: Sequence[int]) -> Vector:
        self._check_weights(w)
        order = sorted(range(self.d), key=lambda i: (-w[i], i))
        s = [0] * self.d
        for i in order[: self.rank]:
            if w[i] > 0:
                s[i] = 1
        return tuple(s)


@dataclass(frozen=True)
class PartitionMatroid(IndependenceOracle):
    """Blocks of ground elements, each with a selection capacity.

    blocks: ((elements, capacity), ...) with pairwise disjoint element
    tuples.  Elements not covered by any block can never be selected.
    """

    d: int
    blocks: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self) -> None:
        blocks = tuple(
            (tuple(sorted(int(e) for e in elems)), int(cap))
            for elems, cap in self.blocks
        )
        object.__setattr__(self, "blocks", blocks)
        seen: set[int] = set()
        for elems, cap in blocks:
            if cap < 0:
                raise ValueError("block capacity must be nonnegative")
            for e in elems:
                if not 0 <= e < self.d:
                    raise ValueError(f"block element {e} outside ground set")
                if e in seen:
                    raise ValueError(f"element {e} appears in two blocks")
                seen.add(e)

    def ground_size(self) -> int:
        return self.d

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.d or any(b not in (0, 1) for b in v):
            return False
        covered = set()
        for elems, cap in self.blocks:
            covered.update(elems)
            if sum(v[e] for e in elems) > cap:
                return False
        return all(v[i] == 0 for i in range(self.d) if i not in covered)

    def maximize(self, w: Sequence[int]) -> Vector:
        self._check_weights(w)
        s = [0] * self.d
        for elems, cap in self.blocks:
            order = sorted(elems, key=lambda i: (-w[i], i))
            for i in order[:cap]:
                if w[i] > 0:
                    s[i] = 1
        return tuple(s)


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


@dataclass(frozen=True)
class GraphicMatroid(IndependenceOracle):
    """Forests of a multigraph; ground element i is the i-th edge.

    Parallel edges are allowed; self-loops are never independent.
    """

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for u, v in edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u},{v}) references missing vertex")

    def ground_size(self) -> int:
        return len(self.edges)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != len(self.edges) or any(b not in (0, 1) for b in v):
            return False
        uf = _UnionFind(self.num_vertices)
        for bit, (a, b) in zip(v, self.edges):
            if bit and not uf.union(a, b):
                return False
        return True

    def maximize(self, w: Sequence[int]) -> Vector:
        self._check_weights(w)
        order = sorted(range(len(self.edges)), key=lambda i: (-w[i], i))
        uf = _UnionFind(self.num_vertices)
        s = [0] * len(self.edges)
        for i in order:
            if w[i] <= 0:
                break
            u, v = self.edges[i]
            if uf.union(u, v):
                s[i] = 1
        return tuple(s)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph whose edges form the ground set, in list order.

    Edges are (left_vertex, right_vertex) pairs, 0-based within each side.
    """

    left: int
    right: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.left < 0 or self.right < 0:
            raise ValueError("vertex counts must be nonnegative")
        edges = tuple((int(l), int(r)) for l, r in self.edges)
        object.__setattr__(self, "edges", edges)
        for l, r in edges:
            if not (0 <= l < self.left and 0 <= r < self.right):
                raise ValueError(f"edge ({l},{r}) outside vertex ranges")


@dataclass(frozen=True)
class BipartiteMatchings(IndependenceOracle):
    """Matchings of a bipartite graph.

    maximize runs a Hungarian-style assignment (scipy linear_sum_assignment)
    on the subgraph of strictly positive edges; zero and negative edges are
    excluded, which is optimal because matchings are downward monotone.
    """

    graph: BipartiteGraph

    def ground_size(self) -> int:
        return len(self.graph.edges)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != len(self.graph.edges) or any(b not in (0, 1) for b in v):
            return False
        used_l: set[int] = set()
        used_r: set[int] = set()
        for bit, (l, r) in zip(v, self.graph.edges):
            if bit:
                if l in used_l or r in used_r:
                    return False
                used_l.add(l)
                used_r.add(r)
        return True

    def maximize(self, w: Sequence[int]) -> Vector:
        self._check_weights(w)
        g = self.graph
        d = len(g.edges)
        # Best strictly-positive parallel edge per (left, right) pair.
        best: dict[tuple[int, int], tuple[int, int]] = {}
        for idx, (l, r) in enumerate(g.edges):
            if w[idx] > 0:
                cur = best.get((l, r))
                if cur is None or w[idx] > cur[0]:
                    best[(l, r)] = (w[idx], idx)
        s = [0] * d
        if not best:
            return tuple(s)
        weights = np.zeros((g.left, g.right), dtype=np.int64)
        for (l, r), (wt, _) in best.items():
            weights[l, r] = wt
        rows, cols = linear_sum_assignment(weights, maximize=True)
        for l, r in zip(rows, cols):
            if weights[l, r] > 0:
                s[best[(l, r)][1]] = 1
        return tuple(s)


def lift_maximize(oracle: IndependenceOracle, n: int, c: Matrix) -> Matrix:
    """Maximize frobenius(c, x) over d x n matrices whose column sum lies in S.

    Realized with exactly one oracle query: each row contributes through its
    best column j(i) (ties to the lowest column index), so querying the base
    oracle on w_i = c[i][j(i)] and routing the returned ones to column j(i)
    is optimal.
    """
    d, nc = dims(c)
    if n < 1:
        raise ValueError("n must be >= 1")
    if nc != n and d > 0:
        raise ValueError(f"cost matrix has {nc} columns, expected {n}")
    if d != oracle.ground_size():
        raise ValueError(
            f"cost matrix has {d} rows, oracle ground size {oracle.ground_size()}"
        )
    picks: list[int] = []
    w: list[int] = []
    for row in c:
        jbest = 0
        for j in range(1, n):
            if row[j] > row[jbest]:
                jbest = j
        picks.append(jbest)
        w.append(row[jbest])
    s = oracle.maximize(w)
    return tuple(
        tuple(s[i] if j == picks[i] else 0 for j in range(n)) for i in range(d)
    )


@dataclass(frozen=True)
class LiftedOracle(IndependenceOracle):
    """Oracle for the n-lift of a base system.

    Ground set is [d] x [n] flattened row-major (element (i, j) at i*n + j);
    members are the flattened d x n matrices whose column-sum vector lies in
    the base system.
    """

    base: IndependenceOracle
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")

    def ground_size(self) -> int:
        return self.base.ground_size() * self.n

    def _unflatten(self, w: Sequence[int]) -> Matrix:
        d = self.base.ground_size()
        return tuple(tuple(w[i * self.n + j] for j in range(self.n)) for i in range(d))

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ground_size() or any(b not in (0, 1) for b in v):
            return False
        x = self._unflatten(v)
        col_sum = tuple(sum(row) for row in x)
        if any(m > 1 for m in col_sum):
            return False
        return self.base.contains(col_sum)

    def maximize(self, w: Sequence[int]) -> Vector:
        self._check_weights(w)
        x = lift_maximize(self.base, self.n, self._unflatten(w))
        return tuple(v for row in x for v in row)
