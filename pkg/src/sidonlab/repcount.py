"""Exact representation counting for finite sets of naturals.

The representation function r_{A,h}(x) counts multisets of size h drawn from A
(repetition allowed) that sum to x, i.e. non-decreasing h-tuples. Three engines
compute it:

  * rep_count / rep_table_oracle -- brute-force enumeration, the reference;
  * rep_table_dp                 -- dynamic programming over (element, parts, sum);
  * rep_table_convolution        -- h-fold convolution of the indicator polynomial,
                                    symmetrized by the cycle index of S_h.

All arithmetic is arbitrary-precision integer; the engines agree exactly.
partitions_at_most(n, h) counts partitions of n into at most h parts, which by
the interval identity equals r over an integer interval:
r_{{x,...,t},h}(t) = partitions_at_most(t - h*x, h) whenever 0 <= h*x <= t.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import (
    DEFAULT_BUDGET,
    Budget,
    NaturalSet,
    ResourceBudgetError,
    UnsupportedArityError,
)

ENGINES = ("oracle", "dp", "convolution")


@dataclass(frozen=True)
class RepTable:
    """Counts r_{A,h}(x) for x in [0, x_max], tagged with the producing engine."""

    h: int
    x_max: int
    counts: tuple[int, ...]
    engine: str

    def __post_init__(self):
        if len(self.counts) != self.x_max + 1:
            raise ValueError("counts must cover [0, x_max]")

    def __getitem__(self, x: int) -> int:
        return self.counts[x]

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "x_max": self.x_max,
            "engine": self.engine,
            "counts": [str(c) for c in self.counts],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RepTable":
        return cls(
            h=int(obj["h"]),
            x_max=int(obj["x_max"]),
            counts=tuple(int(c) for c in obj["counts"]),
            engine=obj["engine"],
        )


def rep_count(A: NaturalSet, h: int, x: int) -> int:
    """Number of non-decreasing h-tuples from A summing to x.

    Brute force with pruning: enumerate the first h-1 parts in non-decreasing
    order, close each prefix with a membership test. Counts are local, so only
    elements <= x participate.
    """
    if h < 1:
        raise ValueError("h must be >= 1")
    if x < 0:
        raise ValueError("x must be >= 0")
    elems = A.elements
    index_of = A._index

    def count(i: int, parts: int, target: int) -> int:
        if parts == 1:
            j = index_of.get(target)
            return 1 if j is not None and j >= i else 0
        total = 0
        for j in range(i, len(elems)):
            a = elems[j]
            if a * parts > target:
                break
            total += count(j, parts - 1, target - a)
        return total

    if not elems:
        return 0
    return count(0, h, x)


def enumerate_representations(
    A: NaturalSet, h: int, x: int, budget: Budget = DEFAULT_BUDGET
) -> list[tuple[int, ...]]:
    """All non-decreasing h-tuples from A summing to x, in lexicographic order."""
    if h < 1:
        raise ValueError("h must be >= 1")
    elems = A.elements
    index_of = A._index
    out: list[tuple[int, ...]] = []
    cap = budget.max_witnesses

    def extend(i: int, parts: int, target: int, prefix: tuple[int, ...]):
        if parts == 1:
            j = index_of.get(target)
            if j is not None and j >= i:
                if len(out) >= cap:
                    raise ResourceBudgetError(
                        f"more than {cap} representations", needed=cap + 1, allowed=cap
                    )
                out.append(prefix + (target,))
            return
        for j in range(i, len(elems)):
            a = elems[j]
            if a * parts > target:
                break
            extend(j, parts - 1, target - a, prefix + (a,))

    if elems and x >= 0:
        extend(0, h, x, ())
    return out


def rep_table_oracle(
    A: NaturalSet, h: int, x_max: int, budget: Budget = DEFAULT_BUDGET
) -> RepTable:
    """Reference table: enumerate every size-h multiset of A and histogram sums.

    Work is C(|A|+h-1, h) regardless of x_max; meant for small sets.
    """
    _check_table_args(h, x_max)
    n_multisets = math.comb(len(A) + h - 1, h) if A else 0
    if n_multisets > budget.dp_cells:
        raise ResourceBudgetError(
            f"{n_multisets} multisets exceed budget", needed=n_multisets, allowed=budget.dp_cells
        )
    counts = [0] * (x_max + 1)
    for combo in itertools.combinations_with_replacement(A.elements, h):
        s = sum(combo)
        if s <= x_max:
            counts[s] += 1
    return RepTable(h=h, x_max=x_max, counts=tuple(counts), engine="oracle")


def rep_table_dp(
    A: NaturalSet, h: int, x_max: int, budget: Budget = DEFAULT_BUDGET
) -> RepTable:
    """DP table: process elements in sorted order, tracking (parts used, sum).

    dp[j][s] counts size-j multisets with sum s over the elements processed so
    far; admitting a new element a adds dp[j-1][s-a] (one more copy of a) in a
    single ascending pass. Exact big-int arithmetic throughout.
    """
    _check_table_args(h, x_max)
    cells = h * (x_max + 1) * max(1, len(A))
    if cells > budget.dp_cells:
        raise ResourceBudgetError(
            f"table of {cells} cells exceeds budget", needed=cells, allowed=budget.dp_cells
        )
    width = x_max + 1
    dp = [[0] * width for _ in range(h + 1)]
    dp[0][0] = 1
    for a in A.elements:
        if a > x_max:
            break
        for j in range(1, h + 1):
            row = dp[j]
            prev = dp[j - 1]
            if a == 0:
                row[:] = [u + v for u, v in zip(row, prev)]
            else:
                row[a:] = [u + v for u, v in zip(row[a:], prev[: width - a])]
    return RepTable(h=h, x_max=x_max, counts=tuple(dp[h]), engine="dp")


# Cycle types of S_h for h = 1..4 as (weight, {cycle_length: multiplicity}).
# Weight is h! / z_lambda, the number of permutations of that type; dividing the
# weighted sum by h! recovers the multiset count.
_CYCLE_TYPES: dict[int, list[tuple[int, dict[int, int]]]] = {
    1: [(1, {1: 1})],
    2: [(1, {1: 2}), (1, {2: 1})],
    3: [(1, {1: 3}), (3, {1: 1, 2: 1}), (2, {3: 1})],
    4: [
        (1, {1: 4}),
        (6, {1: 2, 2: 1}),
        (3, {2: 2}),
        (8, {1: 1, 3: 1}),
        (6, {4: 1}),
    ],
}

CONVOLUTION_MAX_H = max(_CYCLE_TYPES)


def _poly_mul(p: list[int], q: list[int], x_max: int) -> list[int]:
    """Exact product of nonnegative-coefficient polynomials, truncated at x_max.

    Kronecker substitution: pack coefficients into one big integer with enough
    bits per slot that no carries collide, multiply, unpack.
    """
    if not p or not q:
        return []
    bound = min(sum(p) * max(q), sum(q) * max(p))
    bits = max(1, bound.bit_length()) + 1
    mask = (1 << bits) - 1
    pn = sum(c << (i * bits) for i, c in enumerate(p))
    qn = sum(c << (i * bits) for i, c in enumerate(q))
    prod = pn * qn
    out_len = min(len(p) + len(q) - 1, x_max + 1)
    out = [0] * out_len
    for i in range(out_len):
        out[i] = (prod >> (i * bits)) & mask
    return out


def rep_table_convolution(
    A: NaturalSet, h: int, x_max: int, budget: Budget = DEFAULT_BUDGET
) -> RepTable:
    """Fast table for h <= 4: indicator convolution symmetrized by cycle index.

    Ordered h-tuples summing to x are the h-fold convolution of the indicator
    of A. Unordered counts come from the cycle index of S_h, substituting the
    indicator of j*A for each length-j cycle:

        h=2:  (p1^2 + p2) / 2
        h=3:  (p1^3 + 3 p1 p2 + 2 p3) / 6
        h=4:  (p1^4 + 6 p1^2 p2 + 3 p2^2 + 8 p1 p3 + 6 p4) / 24

    where pj is the indicator polynomial of {j*a : a in A}. Everything is
    exact integer arithmetic; the final division by h! is exact.
    """
    _check_table_args(h, x_max)
    types = _CYCLE_TYPES.get(h)
    if types is None:
        raise UnsupportedArityError(
            f"convolution engine supports h <= {CONVOLUTION_MAX_H}, got {h}"
        )
    cells = (x_max + 1) * (h + len(types))
    if cells > budget.dp_cells:
        raise ResourceBudgetError(
            f"table of {cells} cells exceeds budget", needed=cells, allowed=budget.dp_cells
        )

    def indicator_scaled(j: int) -> list[int]:
        poly = [0] * (x_max + 1)
        for a in A.elements:
            ja = j * a
            if ja > x_max:
                break
            poly[ja] = 1
        return poly

    width = x_max + 1
    total = [0] * width
    for weight, cycle in types:
        term = [1]
        for length, mult in sorted(cycle.items()):
            base = indicator_scaled(length)
            for _ in range(mult):
                term = _poly_mul(term, base, x_max)
        for i, c in enumerate(term):
            total[i] += weight * c
    factorial = math.factorial(h)
    counts = []
    for c in total:
        q, r = divmod(c, factorial)
        if r:
            raise AssertionError("cycle-index sum not divisible by h!; engine defect")
        counts.append(q)
    counts.extend([0] * (width - len(counts)))
    return RepTable(h=h, x_max=x_max, counts=tuple(counts), engine="convolution")


def rep_table(
    A: NaturalSet,
    h: int,
    x_max: int,
    engine: str = "auto",
    budget: Budget = DEFAULT_BUDGET,
) -> RepTable:
    """Dispatch: explicit engine name, or auto (convolution for h <= 4, else DP)."""
    if engine == "auto":
        engine = "convolution" if h <= CONVOLUTION_MAX_H else "dp"
    if engine == "oracle":
        return rep_table_oracle(A, h, x_max, budget)
    if engine == "dp":
        return rep_table_dp(A, h, x_max, budget)
    if engine == "convolution":
        return rep_table_convolution(A, h, x_max, budget)
    raise ValueError(f"unknown engine {engine!r}")


def _check_table_args(h: int, x_max: int):
    if h < 1:
        raise ValueError("h must be >= 1")
    if x_max < 0:
        raise ValueError("x_max must be >= 0")


# Partition rows: _rows[h] is a list with _rows[h][n] = partitions_at_most(n, h),
# grown on demand. Recurrence: p_{<=h}(n) = p_{<=h-1}(n) + p_{<=h}(n-h).
_rows: dict[int, list[int]] = {}


def partitions_at_most(n: int, h: int) -> int:
    """Partitions of n into at most h positive parts; 1 at n=0, 0 for n<0."""
    if h < 1:
        raise ValueError("h must be >= 1")
    if n < 0:
        return 0
    row = _rows.get(h)
    if row is None or len(row) <= n:
        row = _extend_rows(h, n)
    return row[n]


def _extend_rows(h: int, n: int) -> list[int]:
    # Rebuild rows 1..h out to n, reusing cached prefixes. Row replacement is a
    # single dict assignment, so concurrent callers at worst duplicate work.
    target = max(n, 255)
    prev = [1] + [0] * target
    for j in range(1, h + 1):
        cached = _rows.get(j)
        if cached is not None and len(cached) > target:
            prev = cached
            continue
        row = [0] * (target + 1)
        for i in range(target + 1):
            row[i] = prev[i] + (row[i - j] if i >= j else 0)
        _rows[j] = row
        prev = row
    return prev
