"""Exact baselines, reduction gadgets, random instances, and the file format.

Brute-force optimizers enumerate multisets of system members (the shifted
objective is invariant under column permutation, so multisets suffice) and
are guarded by an explicit candidate budget: exceeding it raises, never
truncates silently.

The instance file format is UTF-8 JSON with 1-based element and vertex
indices, mirroring the usual [d] convention; vector strings put element 1
at the leftmost character.  In-memory indices are 0-based throughout.
"""

from __future__ import annotations

import json
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import product
from math import comb

from .core import Matrix, Vector, congestion, dims, from_columns, matrix
from .dup import OrthogonalSelection
from .oracles import (
    BipartiteGraph,
    BipartiteMatchings,
    ExplicitSystem,
    GraphicMatroid,
    PartitionMatroid,
    UniformMatroid,
    down_close,
)

DEFAULT_BUDGET = 10**7

SystemSpec = (
    ExplicitSystem | UniformMatroid | PartitionMatroid | GraphicMatroid | BipartiteMatchings
)


class EnumerationBudgetExceeded(RuntimeError):
    """An exact enumeration would evaluate more candidates than allowed."""


class InstanceFormatError(ValueError):
    """Malformed instance document; the message carries position or key path."""


@dataclass(frozen=True)
class Meta:
    """Optional instance annotations."""

    target: int | None = None
    optimum: int | None = None
    description: str | None = None


@dataclass(frozen=True)
class Instance:
    """A serializable problem: a system, a column count n, costs, and metadata."""

    system: SystemSpec
    n: int
    c: Matrix
    meta: Meta | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        c = matrix(self.c)
        object.__setattr__(self, "c", c)
        d, nc = dims(c)
        if d != self.system.ground_size():
            raise ValueError(
                f"cost matrix has {d} rows, system ground size {self.system.ground_size()}"
            )
        if d > 0 and nc != self.n:
            raise ValueError(f"cost matrix has {nc} columns, expected n={self.n}")


@dataclass(frozen=True)
class PrescribedCongestion:
    """Per-element admissible congestion sets C_i, each a subset of {0..n}."""

    n: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be >= 1")
        sets = tuple(frozenset(int(v) for v in s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        for i, s in enumerate(sets):
            if not s:
                raise ValueError(f"congestion set for element {i + 1} is empty")
            if any(v < 0 or v > self.n for v in s):
                raise ValueError(
                    f"congestion set for element {i + 1} must lie in 0..{self.n}"
                )


CostTables = tuple[tuple[int, ...], ...]


def _check_budget(candidates: int, budget: int, what: str) -> None:
    if candidates > budget:
        raise EnumerationBudgetExceeded(
            f"{what}: {candidates} candidates exceed budget {budget}"
        )


def _supports(vectors: Sequence[Vector]) -> list[tuple[int, ...]]:
    return [tuple(i for i, b in enumerate(v) if b) for v in vectors]


def brute_force_sco(
    system: ExplicitSystem, c: Matrix, n: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, Matrix]:
    """Exact shifted optimum over multisets of n members, with a witness.

    The witness is the first optimum in the enumeration order (members in
    list order, nondecreasing indices), so results are reproducible.
    """
    d = system.ground_size()
    dc, nc = dims(c)
    if dc != d or (d > 0 and nc != n):
        raise ValueError(f"cost matrix {dims(c)} does not match d={d}, n={n}")
    members = system.vectors
    _check_budget(comb(len(members) + n - 1, n), budget, "shifted brute force")
    supports = _supports(members)
    cong = [0] * d
    best_val: int | None = None
    best_pick: tuple[int, ...] = ()
    pick: list[int] = []

    def rec(start: int, value: int) -> None:
        nonlocal best_val, best_pick
        if len(pick) == n:
            if best_val is None or value > best_val:
                best_val = value
                best_pick = tuple(pick)
            return
        for idx in range(start, len(members)):
            delta = sum(c[i][cong[i]] for i in supports[idx])
            for i in supports[idx]:
                cong[i] += 1
            pick.append(idx)
            rec(idx, value + delta)
            pick.pop()
            for i in supports[idx]:
                cong[i] -= 1

    rec(0, 0)
    assert best_val is not None
    witness = from_columns([members[i] for i in best_pick])
    return best_val, witness


def brute_force_dup(
    system: ExplicitSystem, k: int, w: Sequence[int], budget: int = DEFAULT_BUDGET
) -> tuple[int, OrthogonalSelection]:
    """Exact disjoint union optimum over k-multisets of members."""
    d = system.ground_size()
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(w) != d:
        raise ValueError(f"weight vector length {len(w)} != ground size {d}")
    members = system.vectors
    _check_budget(comb(len(members) + k - 1, k), budget, "disjoint union brute force")
    masks = [sum(1 << i for i, b in enumerate(v) if b) for v in members]
    dots = [sum(w[i] for i, b in enumerate(v) if b) for v in members]
    best_val: int | None = None
    best_pick: tuple[int, ...] = ()
    pick: list[int] = []

    def rec(start: int, used: int, value: int) -> None:
        nonlocal best_val, best_pick
        if len(pick) == k:
            if best_val is None or value > best_val:
                best_val = value
                best_pick = tuple(pick)
            return
        for idx in range(start, len(members)):
            if masks[idx] & used:
                continue
            pick.append(idx)
            rec(idx, used | masks[idx], value + dots[idx])
            pick.pop()

    rec(0, 0, 0)
    if best_val is None:
        raise ValueError("no selection of k pairwise disjoint members exists")
    cols = tuple(members[i] for i in best_pick)
    return best_val, OrthogonalSelection(cols, best_val)


def brute_force_generalized(
    system: ExplicitSystem, tables: CostTables, n: int, budget: int = DEFAULT_BUDGET
) -> int:
    """Exact optimum of sum_i f_i(congestion_i) over multisets of n members."""
    d = system.ground_size()
    if len(tables) != d:
        raise ValueError(f"{len(tables)} value tables for ground size {d}")
    for i, t in enumerate(tables):
        if len(t) != n + 1:
            raise ValueError(f"value table for element {i + 1} must have {n + 1} entries")
    members = system.vectors
    _check_budget(comb(len(members) + n - 1, n), budget, "generalized brute force")
    supports = _supports(members)
    base = sum(t[0] for t in tables)
    cong = [0] * d
    best: int | None = None
    depth = 0

    def rec(start: int, value: int) -> None:
        nonlocal best, depth
        if depth == n:
            if best is None or value > best:
                best = value
            return
        for idx in range(start, len(members)):
            delta = sum(tables[i][cong[i] + 1] - tables[i][cong[i]] for i in supports[idx])
            for i in supports[idx]:
                cong[i] += 1
            depth += 1
            rec(idx, value + delta)
            depth -= 1
            for i in supports[idx]:
                cong[i] -= 1

    rec(0, base)
    assert best is not None
    return best


def congestion_feasible(
    vectors: Sequence[Vector], pc: PrescribedCongestion, budget: int = DEFAULT_BUDGET
) -> bool:
    """Decide by enumeration whether some n-multiset of the given vectors hits
    every prescribed congestion set."""
    d = len(pc.sets)
    for v in vectors:
        if len(v) != d:
            raise ValueError("vector length does not match congestion sets")
    _check_budget(comb(len(vectors) + pc.n - 1, pc.n), budget, "congestion feasibility")
    supports = _supports(list(vectors))
    cong = [0] * d
    found = False

    def rec(start: int, depth: int) -> None:
        nonlocal found
        if found:
            return
        if depth == pc.n:
            if all(cong[i] in pc.sets[i] for i in range(d)):
                found = True
            return
        for idx in range(start, len(vectors)):
            for i in supports[idx]:
                cong[i] += 1
            rec(idx, depth + 1)
            for i in supports[idx]:
                cong[i] -= 1
            if found:
                return

    rec(0, 0)
    return found


def congestion_to_cost(pc: PrescribedCongestion) -> tuple[Matrix, int]:
    """Encode a prescribed congestion instance as costs in {-1, 0, 1}.

    With f_i(j) = 0 for admissible congestions and -1 otherwise, the cost
    row is the forward difference of f_i; the shifted optimum is at most
    the returned target and reaches it exactly when the prescription is
    feasible.
    """
    rows = []
    missing_zero = 0
    for cs in pc.sets:
        f = [0 if j in cs else -1 for j in range(pc.n + 1)]
        rows.append(tuple(f[j] - f[j - 1] for j in range(1, pc.n + 1)))
        if 0 not in cs:
            missing_zero += 1
    return tuple(rows), missing_zero


def game_to_cost(tables: CostTables) -> Matrix:
    """Costs for which the shifted value equals sum_i f_i(0) minus the social
    cost, turning social-cost minimization into shifted maximization.

    Convex (nondecreasing-difference) tables yield nonincreasing rows.
    """
    if not tables:
        return ()
    n = len(tables[0]) - 1
    if n < 1 or any(len(t) != n + 1 for t in tables):
        raise ValueError("value tables must share a common length n+1 with n >= 1")
    return tuple(tuple(t[j - 1] - t[j] for j in range(1, n + 1)) for t in tables)


def social_cost(tables: CostTables, x: Matrix) -> int:
    """Sum of per-element costs evaluated at the congestion of x."""
    if len(tables) != len(x):
        raise ValueError("value tables do not match matrix rows")
    m = congestion(x)
    return sum(t[mi] for t, mi in zip(tables, m))


def body_to_system(T: ExplicitSystem, c: Matrix) -> tuple[ExplicitSystem, Matrix]:
    """Lift costs from a uniform-cardinality body to its downward closure.

    Adding 2|c| + 1 to every entry makes every optimizer over the closure
    use only maximum-cardinality columns, i.e. members of the body, and
    preserves the ranking of body solutions.
    """
    cards = {sum(v) for v in T.vectors}
    if len(cards) != 1:
        raise ValueError("body vectors must all have the same number of ones")
    dc, _ = dims(c)
    if dc != T.ground_size():
        raise ValueError(f"cost matrix has {dc} rows, body ground size {T.ground_size()}")
    bump = 2 * sum(abs(v) for row in c for v in row) + 1
    b = tuple(tuple(v + bump for v in row) for row in c)
    return ExplicitSystem.closed(T.vectors), b


# ---------------------------------------------------------------------------
# graphs and hardness gadgets


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; edge order is significant (edge = ground element)."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        edges = tuple((min(int(u), int(v)), max(int(u), int(v))) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        seen = set()
        for u, v in edges:
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise ValueError(f"edge ({u},{v}) references missing vertex")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.num_vertices
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)


def independent_set_gadget(graph: Graph, n: int) -> Instance:
    """Vertex-star system whose shifted optimum is 0 iff the graph has an
    independent set of size n.

    Columns are indicators of the edges incident on a vertex; the first
    chosen column per edge is free, every further one costs 1.  Duplicate
    star vectors (e.g. both endpoints of an isolated edge) are listed once.
    The zero-target equivalence assumes no isolated vertices, whose empty
    stars could be repeated for free.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    d = len(graph.edges)
    stars: list[Vector] = []
    seen: set[Vector] = set()
    for v in range(graph.num_vertices):
        star = tuple(1 if v in e else 0 for e in graph.edges)
        if star not in seen:
            seen.add(star)
            stars.append(star)
    system = ExplicitSystem(tuple(stars), downward_closed=False)
    c = tuple((0,) + (-1,) * (n - 1) for _ in range(d))
    meta = Meta(
        target=0,
        description=f"star system of a graph; optimum 0 iff an independent set of size {n} exists",
    )
    return Instance(system, n, c, meta)


def hexagon_gadget(
    sets: Sequence[Iterable[int]], k: int
) -> tuple[BipartiteGraph, PrescribedCongestion]:
    """Exact-cover-by-3-sets gadget over two perfect matchings.

    For m given 3-subsets of {0..k-1}, builds a bipartite graph with 12m
    edges and 6m + 2k vertices: one hexagon (6-cycle) per subset plus
    connector vertices a_j, b_j per universe element.  Hexagon edges may be
    used by at most one of the two matchings ({0,1}); connector edges by
    none or both ({0,2}).  Two perfect matchings meeting the prescription
    exist iff some subfamily partitions the universe.

    Vertex ids: side order is u(i,r) blocks then b_j on the left, v(i,r)
    blocks then a_j on the right, lexicographic in (i, r) and in j.
    """
    m = len(sets)
    if m < 1:
        raise ValueError("at least one subset required")
    triples = []
    for pos, f in enumerate(sets):
        t = tuple(sorted(int(e) for e in f))
        if len(t) != 3 or len(set(t)) != 3:
            raise ValueError(f"subset {pos + 1} must have exactly 3 distinct elements")
        if t[0] < 0 or t[-1] >= k:
            raise ValueError(f"subset {pos + 1} has elements outside 0..{k - 1}")
        triples.append(t)

    def u(i: int, r: int) -> int:
        return 3 * i + r

    def v(i: int, r: int) -> int:
        return 3 * i + r

    def b(j: int) -> int:
        return 3 * m + j

    def a(j: int) -> int:
        return 3 * m + j

    edges: list[tuple[int, int]] = []
    for i in range(m):
        edges.extend(
            [
                (u(i, 0), v(i, 0)),
                (u(i, 1), v(i, 0)),
                (u(i, 1), v(i, 1)),
                (u(i, 2), v(i, 1)),
                (u(i, 2), v(i, 2)),
                (u(i, 0), v(i, 2)),
            ]
        )
    for i, (r, s, t) in enumerate(triples):
        edges.extend(
            [
                (u(i, 0), a(r)),
                (u(i, 1), a(s)),
                (u(i, 2), a(t)),
                (b(r), v(i, 0)),
                (b(s), v(i, 1)),
                (b(t), v(i, 2)),
            ]
        )
    graph = BipartiteGraph(3 * m + k, 3 * m + k, tuple(edges))
    csets = tuple([frozenset({0, 1})] * (6 * m) + [frozenset({0, 2})] * (6 * m))
    return graph, PrescribedCongestion(2, csets)


def coloring_gadget(graph: Graph) -> PrescribedCongestion:
    """Prescription over two perfect matchings of a cubic graph; feasible iff
    two edge-disjoint perfect matchings exist (iff 3-edge-colorable)."""
    if any(deg != 3 for deg in graph.degrees()):
        raise ValueError("graph must be 3-regular")
    return PrescribedCongestion(2, tuple(frozenset({0, 1}) for _ in graph.edges))


def bipartite_to_graph(g: BipartiteGraph) -> Graph:
    """View a bipartite graph as a plain graph (right ids shifted by `left`)."""
    return Graph(g.left + g.right, tuple((l, g.left + r) for l, r in g.edges))


def perfect_matchings(graph: Graph, budget: int = 10**6) -> tuple[Vector, ...]:
    """All perfect matchings as edge indicator vectors, by backtracking.

    At each step the unmatched vertex with fewest available partners is
    matched (fail-first), so infeasible graphs die quickly.
    """
    nv = graph.num_vertices
    d = len(graph.edges)
    if nv % 2:
        return ()
    incident: list[list[tuple[int, int]]] = [[] for _ in range(nv)]
    for idx, (x, y) in enumerate(graph.edges):
        incident[x].append((idx, y))
        incident[y].append((idx, x))
    matched = [False] * nv
    chosen: list[int] = []
    out: list[Vector] = []
    nodes = 0

    def rec() -> None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise EnumerationBudgetExceeded(
                f"perfect matching enumeration exceeded budget {budget}"
            )
        pick = -1
        pick_opts: list[tuple[int, int]] | None = None
        for vx in range(nv):
            if matched[vx]:
                continue
            opts = [(e, o) for e, o in incident[vx] if not matched[o]]
            if not opts:
                return
            if pick_opts is None or len(opts) < len(pick_opts):
                pick, pick_opts = vx, opts
        if pick == -1:
            ind = [0] * d
            for e in chosen:
                ind[e] = 1
            out.append(tuple(ind))
            return
        matched[pick] = True
        for e, o in pick_opts:
            matched[o] = True
            chosen.append(e)
            rec()
            chosen.pop()
            matched[o] = False
        matched[pick] = False

    rec()
    return tuple(out)


def all_matchings(graph: Graph, budget: int = DEFAULT_BUDGET) -> tuple[Vector, ...]:
    """All matchings (including empty) as edge indicator vectors."""
    d = len(graph.edges)
    used = [False] * graph.num_vertices
    sel = [0] * d
    out: list[Vector] = []

    def rec(i: int) -> None:
        if i == d:
            if len(out) >= budget:
                raise EnumerationBudgetExceeded(
                    f"matching enumeration exceeded budget {budget}"
                )
            out.append(tuple(sel))
            return
        rec(i + 1)
        x, y = graph.edges[i]
        if not used[x] and not used[y]:
            used[x] = used[y] = True
            sel[i] = 1
            rec(i + 1)
            sel[i] = 0
            used[x] = used[y] = False

    rec(0)
    return tuple(out)


def exact_cover_exists(sets: Sequence[Iterable[int]], k: int) -> bool:
    """Decide by subfamily enumeration whether some pairwise disjoint
    subfamily covers {0..k-1} exactly."""
    masks = []
    for f in sets:
        mask = 0
        for e in f:
            if not 0 <= e < k:
                raise ValueError(f"element {e} outside 0..{k - 1}")
            mask |= 1 << e
        masks.append(mask)
    full = (1 << k) - 1
    for sub in range(1 << len(masks)):
        union = 0
        ok = True
        for i, mask in enumerate(masks):
            if sub >> i & 1:
                if union & mask:
                    ok = False
                    break
                union |= mask
        if ok and union == full:
            return True
    return False


# ---------------------------------------------------------------------------
# random instances and serialization


def random_instance(
    seed: int,
    *,
    d: int,
    n: int,
    set_size: int,
    cost_range: int,
    shifted: bool,
) -> Instance:
    """Reproducible random instance over a downward-closed explicit system.

    Draws a few random generator vectors, takes the downward closure, and
    trims random maximal members until at most set_size remain (trimming a
    maximal member preserves closure).  Costs are uniform integers in
    [-cost_range, cost_range]; with shifted=True each row is sorted
    nonincreasing.
    """
    if d < 1 or n < 1 or set_size < 1 or cost_range < 0:
        raise ValueError("d, n, set_size must be >= 1 and cost_range >= 0")
    rng = random.Random(seed)
    gens: set[Vector] = set()
    for _ in range(rng.randint(1, 3)):
        support = rng.sample(range(d), rng.randint(1, min(4, d)))
        vec = [0] * d
        for i in support:
            vec[i] = 1
        gens.add(tuple(vec))
    members = set(down_close(gens))
    while len(members) > set_size:
        maximal = sorted(
            v
            for v in members
            if not any(w != v and all(a <= b for a, b in zip(v, w)) for w in members)
        )
        members.remove(rng.choice(maximal))
    system = ExplicitSystem(
        tuple(sorted(members, key=lambda v: (sum(v), v))), downward_closed=True
    )
    rows = []
    for _ in range(d):
        row = [rng.randint(-cost_range, cost_range) for _ in range(n)]
        if shifted:
            row.sort(reverse=True)
        rows.append(tuple(row))
    return Instance(system, n, tuple(rows), None)


def explicit_members(system: SystemSpec, budget: int = DEFAULT_BUDGET) -> ExplicitSystem:
    """Materialize any supported system as an explicit member list."""
    if isinstance(system, ExplicitSystem):
        return system
    if isinstance(system, BipartiteMatchings):
        vecs = all_matchings(bipartite_to_graph(system.graph), budget)
        return ExplicitSystem(
            tuple(sorted(vecs, key=lambda v: (sum(v), v))), downward_closed=True
        )
    d = system.ground_size()
    _check_budget(2**d, budget, "membership enumeration")
    vecs = tuple(v for v in product((0, 1), repeat=d) if system.contains(v))
    return ExplicitSystem(
        tuple(sorted(vecs, key=lambda v: (sum(v), v))), downward_closed=True
    )


def serialize(instance: Instance) -> bytes:
    """Instance to canonical JSON bytes (sorted keys, two-space indent)."""
    system = instance.system
    obj: dict = {"version": 1, "n": instance.n, "c": [list(row) for row in instance.c]}
    if isinstance(system, ExplicitSystem):
        obj["system"] = {
            "kind": "explicit",
            "vectors": ["".join(str(b) for b in v) for v in system.vectors],
            "downward_closed": system.downward_closed,
        }
    elif isinstance(system, UniformMatroid):
        obj["system"] = {"kind": "uniform", "d": system.d, "rank": system.rank}
    elif isinstance(system, PartitionMatroid):
        obj["system"] = {
            "kind": "partition",
            "d": system.d,
            "blocks": [
                {"elements": [e + 1 for e in elems], "capacity": cap}
                for elems, cap in system.blocks
            ],
        }
    elif isinstance(system, GraphicMatroid):
        obj["system"] = {
            "kind": "graphic",
            "vertices": system.num_vertices,
            "edges": [[u + 1, v + 1] for u, v in system.edges],
        }
    elif isinstance(system, BipartiteMatchings):
        g = system.graph
        obj["system"] = {
            "kind": "bipartite",
            "left": g.left,
            "right": g.right,
            "edges": [[l + 1, r + 1] for l, r in g.edges],
        }
    else:
        raise TypeError(f"unsupported system type {type(system).__name__}")
    if instance.meta is not None:
        meta: dict = {}
        if instance.meta.target is not None:
            meta["target"] = instance.meta.target
        if instance.meta.optimum is not None:
            meta["optimum"] = instance.meta.optimum
        if instance.meta.description is not None:
            meta["description"] = instance.meta.description
        if meta:
            obj["meta"] = meta
    return (json.dumps(obj, indent=2, sort_keys=True) + "\n").encode("utf-8")


def _want(obj: dict, path: str, key: str, kinds: tuple[type, ...], required: bool = True):
    if key not in obj:
        if required:
            raise InstanceFormatError(f"{path}: missing key {key!r}")
        return None
    val = obj[key]
    if isinstance(val, bool) and bool not in kinds:
        raise InstanceFormatError(f"{path}.{key}: expected {kinds[0].__name__}, got bool")
    if not isinstance(val, kinds):
        raise InstanceFormatError(
            f"{path}.{key}: expected {kinds[0].__name__}, got {type(val).__name__}"
        )
    return val


def _parse_int_pairs(raw, path: str, what: str) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise InstanceFormatError(f"{path}: expected a list of {what}")
    out = []
    for i, item in enumerate(raw):
        if (
            not isinstance(item, list)
            or len(item) != 2
            or any(isinstance(v, bool) or not isinstance(v, int) for v in item)
        ):
            raise InstanceFormatError(f"{path}[{i}]: expected a pair of integers")
        out.append((item[0], item[1]))
    return out


def _parse_system(obj, path: str) -> SystemSpec:
    if not isinstance(obj, dict):
        raise InstanceFormatError(f"{path}: expected an object")
    kind = _want(obj, path, "kind", (str,))
    try:
        if kind == "explicit":
            raw = _want(obj, path, "vectors", (list,))
            vectors = []
            for i, s in enumerate(raw):
                if not isinstance(s, str) or any(ch not in "01" for ch in s):
                    raise InstanceFormatError(
                        f"{path}.vectors[{i}]: expected a string of 0/1 characters"
                    )
                vectors.append(tuple(int(ch) for ch in s))
            closed = _want(obj, path, "downward_closed", (bool,), required=False)
            return ExplicitSystem(tuple(vectors), bool(closed))
        if kind == "uniform":
            return UniformMatroid(_want(obj, path, "d", (int,)), _want(obj, path, "rank", (int,)))
        if kind == "partition":
            d = _want(obj, path, "d", (int,))
            raw = _want(obj, path, "blocks", (list,))
            blocks = []
            for i, blk in enumerate(raw):
                if not isinstance(blk, dict):
                    raise InstanceFormatError(f"{path}.blocks[{i}]: expected an object")
                elems = _want(blk, f"{path}.blocks[{i}]", "elements", (list,))
                cap = _want(blk, f"{path}.blocks[{i}]", "capacity", (int,))
                if any(isinstance(e, bool) or not isinstance(e, int) for e in elems):
                    raise InstanceFormatError(
                        f"{path}.blocks[{i}].elements: expected integers"
                    )
                blocks.append((tuple(e - 1 for e in elems), cap))
            return PartitionMatroid(d, tuple(blocks))
        if kind == "graphic":
            nv = _want(obj, path, "vertices", (int,))
            pairs = _parse_int_pairs(obj.get("edges"), f"{path}.edges", "edges")
            return GraphicMatroid(nv, tuple((u - 1, v - 1) for u, v in pairs))
        if kind == "bipartite":
            left = _want(obj, path, "left", (int,))
            right = _want(obj, path, "right", (int,))
            pairs = _parse_int_pairs(obj.get("edges"), f"{path}.edges", "edges")
            return BipartiteMatchings(
                BipartiteGraph(left, right, tuple((l - 1, r - 1) for l, r in pairs))
            )
    except ValueError as exc:
        if isinstance(exc, InstanceFormatError):
            raise
        raise InstanceFormatError(f"{path}: {exc}") from exc
    raise InstanceFormatError(f"{path}.kind: unknown system kind {kind!r}")


def parse(data: bytes | str) -> Instance:
    """Parse instance bytes; malformed input raises InstanceFormatError with
    a line/column position (syntax) or key path (schema)."""
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(
            f"line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(obj, dict):
        raise InstanceFormatError("top level: expected an object")
    version = _want(obj, "top level", "version", (int,))
    if version != 1:
        raise InstanceFormatError(f"version: unsupported value {version}")
    system = _parse_system(obj.get("system"), "system")
    n = _want(obj, "top level", "n", (int,))
    raw_c = _want(obj, "top level", "c", (list,))
    rows = []
    for i, row in enumerate(raw_c):
        if not isinstance(row, list) or any(
            isinstance(v, bool) or not isinstance(v, int) for v in row
        ):
            raise InstanceFormatError(f"c[{i}]: expected a list of integers")
        rows.append(tuple(row))
    meta = None
    if "meta" in obj:
        raw_meta = obj["meta"]
        if not isinstance(raw_meta, dict):
            raise InstanceFormatError("meta: expected an object")
        meta = Meta(
            target=_want(raw_meta, "meta", "target", (int,), required=False),
            optimum=_want(raw_meta, "meta", "optimum", (int,), required=False),
            description=_want(raw_meta, "meta", "description", (str,), required=False),
        )
    try:
        return Instance(system, n, tuple(rows), meta)
    except ValueError as exc:
        raise InstanceFormatError(str(exc)) from exc
