"""Shared random generators and independent baselines for the test suite."""

from __future__ import annotations

import random
from itertools import product

from shiftopt import ExplicitSystem, down_close


def rand_closed_system(rng: random.Random, d: int, max_size: int) -> ExplicitSystem:
    """Random downward-closed explicit system with at most max_size members."""
    gens: set[tuple[int, ...]] = set()
    for _ in range(rng.randint(1, 3)):
        support = rng.sample(range(d), rng.randint(1, min(4, d)))
        vec = [0] * d
        for i in support:
            vec[i] = 1
        gens.add(tuple(vec))
    members = set(down_close(gens))
    while len(members) > max_size:
        maximal = sorted(
            v
            for v in members
            if not any(w != v and all(a <= b for a, b in zip(v, w)) for w in members)
        )
        members.remove(rng.choice(maximal))
    return ExplicitSystem(
        tuple(sorted(members, key=lambda v: (sum(v), v))), downward_closed=True
    )


def rand_arbitrary_system(rng: random.Random, d: int, max_size: int) -> ExplicitSystem:
    """Random explicit system, not necessarily closed, possibly without zero."""
    universe = list(product((0, 1), repeat=d))
    size = rng.randint(1, min(max_size, len(universe)))
    vectors = rng.sample(universe, size)
    return ExplicitSystem(tuple(vectors), downward_closed=False)


def rand_cost(rng: random.Random, d: int, n: int, lo: int = -9, hi: int = 9,
              shifted: bool = False):
    rows = []
    for _ in range(d):
        row = [rng.randint(lo, hi) for _ in range(n)]
        if shifted:
            row.sort(reverse=True)
        rows.append(tuple(row))
    return tuple(rows)


def rand_binary(rng: random.Random, d: int, n: int):
    return tuple(tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(d))


def rand_convex_tables(rng: random.Random, d: int, n: int):
    """Per-element tables with nondecreasing increments (discretely convex)."""
    tables = []
    for _ in range(d):
        increments = sorted(rng.randint(-4, 4) for _ in range(n))
        t = [rng.randint(-5, 5)]
        for inc in increments:
            t.append(t[-1] + inc)
        tables.append(tuple(t))
    return tuple(tables)


def lift_value_by_scan(system: ExplicitSystem, c) -> int:
    """Independent lift-problem optimum: each member scores its rows' best columns."""
    best = None
    for s in system.vectors:
        val = sum(max(c[i]) for i, bit in enumerate(s) if bit)
        if best is None or val > best:
            best = val
    return best


def lift_value_full_enum(system: ExplicitSystem, c, n: int) -> int:
    """Exhaustive lift-problem optimum over all (n+1)^d row placements.

    A matrix with column-sum vector in {0,1}^d has at most one 1 per row, so
    each row independently is empty or places its 1 in one of n columns.
    """
    d = system.ground_size()
    best = None
    for choice in product(range(-1, n), repeat=d):
        s = tuple(1 if ch >= 0 else 0 for ch in choice)
        if not system.contains(s):
            continue
        val = sum(c[i][ch] for i, ch in enumerate(choice) if ch >= 0)
        if best is None or val > best:
            best = val
    assert best is not None
    return best


def sco_value_full_tuple_enum(system: ExplicitSystem, c, n: int) -> int:
    """SCO optimum by enumerating ordered n-tuples (independent of the
    multiset-based brute force)."""
    from shiftopt import from_columns, shifted_value

    best = None
    for combo in product(system.vectors, repeat=n):
        val = shifted_value(c, from_columns(combo))
        if best is None or val > best:
            best = val
    assert best is not None
    return best


def equivalents_of_power(system: ExplicitSystem, n: int) -> set:
    """All 0/1 matrices row-equivalent to some matrix with every column in
    the system, by full enumeration (use only for tiny d and n)."""
    from shiftopt import shift

    keys = set()
    for combo in product(system.vectors, repeat=n):
        x = tuple(tuple(col[i] for col in combo) for i in range(len(combo[0])))
        keys.add(shift(x))
    d = system.ground_size()
    out = set()
    for flat in product((0, 1), repeat=d * n):
        x = tuple(tuple(flat[i * n + j] for j in range(n)) for i in range(d))
        if shift(x) in keys:
            out.add(x)
    return out


def disjoint_union_of_lift(system: ExplicitSystem, n: int) -> set:
    """All sums of n support-disjoint lift-feasible matrices, by full
    enumeration (use only for tiny d and n)."""
    from shiftopt import LiftedOracle

    d = system.ground_size()
    lifted = LiftedOracle(system, n)
    members = [flat for flat in product((0, 1), repeat=d * n) if lifted.contains(flat)]
    out = set()

    def rec(start, acc, count):
        if count == n:
            x = tuple(tuple(acc[i * n + j] for j in range(n)) for i in range(d))
            out.add(x)
            return
        for idx in range(start, len(members)):
            m = members[idx]
            if all(a + b <= 1 for a, b in zip(acc, m)):
                rec(idx, tuple(a + b for a, b in zip(acc, m)), count + 1)

    rec(0, (0,) * (d * n), 0)
    return out
