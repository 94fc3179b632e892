"""Approximation algorithms for shifted combinatorial optimization.

Given an independence system S presented by a linear-optimization oracle
and a d x n integer cost matrix c, the task is to maximize c . shift(x)
over matrices x with all columns in S.

Three algorithms are provided, all deterministic:

* constant_shifted -- for costs with nonincreasing rows; one greedy DUP run
  over the n-lift of S gives ratio 1 - (1 - 1/n)^n >= 1 - 1/e.
* log_approx -- for arbitrary costs; one duplication level per power of two
  up to n, each level solving a DUP instance, expanding, and cleaning; the
  best level is within ratio beta / (4 ceil(log2 n) + 8) of the optimum.
* small_n_approx -- sharper level sets for n in {2, 3, 4} with proven
  ratios 3/5, 19/42 and 2625/6692.

convex_identical handles the separable-convex generalization, where one
oracle call is exact because some optimal solution repeats a single column.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    Matrix,
    Vector,
    congestion,
    dims,
    first_unshifted_row,
    from_columns,
    shifted_value,
)
from .dup import GREEDY_DUP, DupSolver, greedy_dup, greedy_ratio
from .oracles import IndependenceOracle, LiftedOracle


class NotShiftedError(ValueError):
    """Raised when an algorithm requiring nonincreasing cost rows gets other input."""

    def __init__(self, row: int) -> None:
        self.row = row
        super().__init__(f"cost matrix is not shifted: row {row + 1} increases")


@dataclass(frozen=True)
class PotentialProfile:
    """Per element: best prefix profit reachable within the current congestion.

    profits[i] is the maximum over lengths 0..m(i, x) of the sum of the
    first entries of cost row i (the empty prefix counts as 0, so profits
    are never negative).  retained[i] is the smallest maximizing length.
    """

    profits: tuple[int, ...]
    retained: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.profits)


@dataclass(frozen=True)
class ApproxResult:
    """A feasible solution, its exact objective value, the level (duplication
    round) that produced it when applicable, and the proven ratio bound."""

    solution: Matrix
    value: int
    level: int | None
    bound: Fraction


def ceil_log2(n: int) -> int:
    """Exact ceiling of log2(n) for n >= 1 (no floating point)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (n - 1).bit_length()


def potential_profit(c: Matrix, x: Matrix) -> PotentialProfile:
    """Best prefix profit and its smallest realizing congestion, per row."""
    if dims(c) != dims(x):
        raise ValueError(f"dimension mismatch: {dims(c)} vs {dims(x)}")
    m = congestion(x)
    profits = []
    retained = []
    for i, row in enumerate(c):
        best, arg, run = 0, 0, 0
        for length in range(1, m[i] + 1):
            run += row[length - 1]
            if run > best:
                best, arg = run, length
        profits.append(best)
        retained.append(arg)
    return PotentialProfile(tuple(profits), tuple(retained))


def clean(c: Matrix, x: Matrix) -> Matrix:
    """Drop surplus ones so each row's congestion hits its best prefix length.

    Removes exactly m(i, x) - p(i) ones from row i, zeroing the ones in the
    highest-index columns first.  The result is entrywise <= x (so columns
    stay feasible over a downward monotone system) and its objective equals
    the total potential profit of x.
    """
    prof = potential_profit(c, x)
    out = []
    for i, row in enumerate(x):
        remove = sum(row) - prof.retained[i]
        if remove == 0:
            out.append(row)
            continue
        new = list(row)
        for j in reversed(range(len(new))):
            if remove == 0:
                break
            if new[j]:
                new[j] = 0
                remove -= 1
        out.append(tuple(new))
    return tuple(out)


def _level_weights(c: Matrix, copies: int) -> list[int]:
    # Best profit from an element covered at most `copies` times (>= 0:
    # zero coverage is allowed, so the greedy never sees negative weights).
    w = []
    for row in c:
        best, run = 0, 0
        for q in range(copies):
            run += row[q]
            if run > best:
                best = run
        w.append(best)
    return w


def level_candidate(
    oracle: IndependenceOracle,
    c: Matrix,
    n: int,
    k: int,
    copies: int,
    solver: DupSolver = GREEDY_DUP,
) -> tuple[Matrix, int]:
    """One duplication level: solve DUP with k columns, expand each returned
    column into `copies` duplicates, pad with zero columns to width n, then
    clean.  Returns the cleaned solution and its objective value.

    Levels with k = 1 are solved exactly with a single oracle call (the
    greedy with one round is exact), regardless of the configured solver.
    """
    d = oracle.ground_size()
    if not (k >= 1 and copies >= 1 and k * copies <= n):
        raise ValueError(f"invalid level: k={k}, copies={copies}, n={n}")
    w = _level_weights(c, copies)
    sel = greedy_dup(oracle, 1, w) if k == 1 else solver.solve(oracle, k, w)
    cols: list[Vector] = []
    for col in sel.columns:
        cols.extend([col] * copies)
    zero = (0,) * d
    cols.extend([zero] * (n - len(cols)))
    cleaned = clean(c, from_columns(cols))
    return cleaned, shifted_value(c, cleaned)


def constant_shifted(
    oracle: IndependenceOracle,
    c: Matrix,
    n: int,
    solver: DupSolver = GREEDY_DUP,
) -> ApproxResult:
    """Constant-ratio algorithm for shifted (nonincreasing-row) costs.

    Runs the DUP greedy over the n-lift of S on the ground set [d] x [n]
    with the flattened costs as weights; the k-th selected lift matrix is
    collapsed into the k-th output column by summing its columns.  The
    value is at least 1 - (1 - 1/n)^n times the optimum.
    """
    d, nc = dims(c)
    if n < 1:
        raise ValueError("n must be >= 1")
    if d > 0 and nc != n:
        raise ValueError(f"cost matrix has {nc} columns, expected {n}")
    if d != oracle.ground_size():
        raise ValueError(
            f"cost matrix has {d} rows, oracle ground size {oracle.ground_size()}"
        )
    bad = first_unshifted_row(c)
    if bad is not None:
        raise NotShiftedError(bad)
    lifted = LiftedOracle(oracle, n)
    flat = [c[i][j] for i in range(d) for j in range(n)]
    sel = solver.solve(lifted, n, flat)
    out_cols = []
    for col in sel.columns:
        out_cols.append(tuple(sum(col[i * n + j] for j in range(n)) for i in range(d)))
    y = from_columns(out_cols)
    return ApproxResult(y, shifted_value(c, y), None, solver.ratio(n))


def log_approx(
    oracle: IndependenceOracle,
    c: Matrix,
    n: int,
    solver: DupSolver = GREEDY_DUP,
) -> ApproxResult:
    """Logarithmic-ratio algorithm for arbitrary costs.

    Level l (0 <= l <= ceil(log2 n)) solves DUP with k = floor(n / 2^l)
    columns (k = 1 past log2 n) and expands each into min(2^l, n) copies;
    weights give each element its best profit from at most that many
    copies.  The best cleaned level is returned with ratio
    solver.ratio(n) / (4 ceil(log2 n) + 8).
    """
    d, nc = dims(c)
    if n < 1:
        raise ValueError("n must be >= 1")
    if d > 0 and nc != n:
        raise ValueError(f"cost matrix has {nc} columns, expected {n}")
    if d != oracle.ground_size():
        raise ValueError(
            f"cost matrix has {d} rows, oracle ground size {oracle.ground_size()}"
        )
    top = ceil_log2(n)
    best: tuple[Matrix, int, int] | None = None
    for level in range(top + 1):
        pow2 = 1 << level
        k = n // pow2 if pow2 <= n else 1
        sol, val = level_candidate(oracle, c, n, k, min(pow2, n), solver)
        if best is None or val > best[1]:
            best = (sol, val, level)
    assert best is not None
    bound = solver.ratio(n) / (4 * top + 8)
    return ApproxResult(best[0], best[1], best[2], bound)


_SMALL_N_LEVELS: dict[int, tuple[tuple[int, int], ...]] = {
    2: ((2, 1), (1, 2)),
    3: ((3, 1), (1, 3)),
    4: ((4, 1), (2, 2), (1, 4)),
}


def _small_n_bound(n: int, solver: DupSolver) -> Fraction:
    # Combination multipliers of the per-level guarantees; with the greedy
    # ratios these evaluate to 3/5, 19/42 and 2625/6692.
    if n == 2:
        b = solver.ratio(2)
        return 2 * b / (2 * b + 1)
    if n == 3:
        b = solver.ratio(3)
        return 2 * b / (3 * b + 1)
    b2, b4 = solver.ratio(2), solver.ratio(4)
    return 1 / (Fraction(4, 3) + Fraction(2, 5) / b2 + Fraction(7, 15) / b4)


def small_n_approx(
    oracle: IndependenceOracle,
    c: Matrix,
    n: int,
    solver: DupSolver = GREEDY_DUP,
) -> ApproxResult:
    """Sharper level sets for n in {2, 3, 4}.

    n=2 runs levels (k=2, 1 copy) and (k=1, 2 copies); n=3 runs (3, 1) and
    (1, 3), duplicating the single column three times; n=4 runs (4, 1),
    (2, 2) and (1, 4).  k=1 levels are exact single oracle calls.
    """
    if n not in _SMALL_N_LEVELS:
        raise ValueError(f"small-n algorithm supports n in {{2,3,4}}, got {n}")
    d, nc = dims(c)
    if d > 0 and nc != n:
        raise ValueError(f"cost matrix has {nc} columns, expected {n}")
    if d != oracle.ground_size():
        raise ValueError(
            f"cost matrix has {d} rows, oracle ground size {oracle.ground_size()}"
        )
    best: tuple[Matrix, int, int] | None = None
    for level, (k, copies) in enumerate(_SMALL_N_LEVELS[n]):
        sol, val = level_candidate(oracle, c, n, k, copies, solver)
        if best is None or val > best[1]:
            best = (sol, val, level)
    assert best is not None
    return ApproxResult(best[0], best[1], best[2], _small_n_bound(n, solver))


def ratio_bound(variant: str, n: int) -> Fraction:
    """Proven approximation ratio of the shipped algorithms, as an exact rational.

    variant is one of "shifted_constant", "general_log", "small_n"
    (the latter only for n in {2, 3, 4}).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if variant == "shifted_constant":
        return greedy_ratio(n)
    if variant == "general_log":
        return greedy_ratio(n) / (4 * ceil_log2(n) + 8)
    if variant == "small_n":
        table = {2: Fraction(3, 5), 3: Fraction(19, 42), 4: Fraction(2625, 6692)}
        if n not in table:
            raise ValueError(f"small_n bound defined only for n in {{2,3,4}}, got {n}")
        return table[n]
    raise ValueError(f"unknown variant {variant!r}")


def convex_identical(
    oracle: IndependenceOracle,
    tables: Sequence[Sequence[int]],
    n: int,
) -> tuple[Vector, int]:
    """Exact maximizer of a separable convex congestion objective.

    tables[i] lists f_i(0), ..., f_i(n); each f_i must be discretely convex
    (nondecreasing second differences).  Convexity guarantees an optimal
    solution with n identical columns, so sum_i f_i(n * s_i) is linear in s
    and a single oracle call with weights f_i(n) - f_i(0) is exact.
    Returns the repeated column s and the objective value.
    """
    d = oracle.ground_size()
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(tables) != d:
        raise ValueError(f"{len(tables)} value tables for ground size {d}")
    for i, t in enumerate(tables):
        if len(t) != n + 1:
            raise ValueError(f"value table for element {i + 1} must have {n + 1} entries")
        for q in range(n - 1):
            if t[q + 2] - 2 * t[q + 1] + t[q] < 0:
                raise ValueError(f"value table for element {i + 1} is not convex")
    w = [t[n] - t[0] for t in tables]
    s = oracle.maximize(w)
    value = sum(t[n] if bit else t[0] for t, bit in zip(tables, s))
    return s, value
