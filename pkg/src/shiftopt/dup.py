"""Greedy approximation for the disjoint union problem (DUP).

DUP asks for k members of an independence system with pairwise disjoint
supports maximizing the weight of their union.  The coverage-style greedy
below achieves the classical ratio 1 - (1 - 1/k)^k >= 1 - 1/e.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .core import Matrix, Vector, from_columns, columns
from .oracles import IndependenceOracle


@dataclass(frozen=True)
class OrthogonalSelection:
    """k system members with pairwise disjoint supports and their DUP value."""

    columns: tuple[Vector, ...]
    value: int


def orthogonalize(x: Matrix) -> Matrix:
    """Zero all but the leftmost 1 in every row.

    The covered-element set is unchanged and, over a downward monotone
    system, every column stays feasible.
    """
    out = []
    for row in x:
        seen = False
        new = []
        for v in row:
            if v and not seen:
                new.append(1)
                seen = True
            else:
                new.append(0)
        out.append(tuple(new))
    return tuple(out)


def greedy_ratio(k: int) -> Fraction:
    """Exact greedy coverage ratio 1 - (1 - 1/k)^k for k rounds."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return Fraction(k**k - (k - 1) ** k, k**k)


def greedy_dup(oracle: IndependenceOracle, k: int, w: Sequence[int]) -> OrthogonalSelection:
    """Greedy k-round DUP approximation over an independence system.

    Each round zeroes the weights of already covered elements and queries
    the oracle; the stacked answers are then orthogonalized (leftmost 1 per
    row wins).  Rounds stop early once a query returns the zero vector,
    since no further coverage is possible.  The value is guaranteed to be
    at least greedy_ratio(k) times the DUP optimum; elements with negative
    weight are never covered because the oracles clamp them out.
    """
    d = oracle.ground_size()
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(w) != d:
        raise ValueError(f"weight vector length {len(w)} != ground size {d}")
    remaining = list(w)
    picks: list[Vector] = []
    for _ in range(k):
        s = oracle.maximize(remaining)
        if not any(s):
            break
        picks.append(s)
        for i, bit in enumerate(s):
            if bit:
                remaining[i] = 0
    if picks:
        cols = list(columns(orthogonalize(from_columns(picks))))
    else:
        cols = []
    zero = (0,) * d
    cols.extend([zero] * (k - len(cols)))
    covered = [any(col[i] for col in cols) for i in range(d)]
    value = sum(wi for wi, hit in zip(w, covered) if hit)
    return OrthogonalSelection(tuple(cols), value)


@dataclass(frozen=True)
class DupSolver:
    """A DUP algorithm paired with its proven ratio as a function of k.

    The shipped solver is the greedy above; an exact plug-in (ratio
    constantly 1) can be substituted where available.
    """

    solve: Callable[[IndependenceOracle, int, Sequence[int]], OrthogonalSelection]
    ratio: Callable[[int], Fraction]


GREEDY_DUP = DupSolver(solve=greedy_dup, ratio=greedy_ratio)
