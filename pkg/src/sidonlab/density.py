"""Prefix densities and the counting-bound certificate.

Density here is always a finite-horizon quantity: exact rational values of
|A intersect [0,n)| / n at sampled n, plus the minimum over a tail window.
That minimum is a proxy for the lower asymptotic density of an infinite set,
never claimed to equal the liminf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import NaturalSet, Params

SAMPLE_POINTS = 32


@dataclass(frozen=True)
class PrefixDensityReport:
    N: int
    tail_start: int
    ratios: tuple[tuple[int, Fraction], ...]
    min_tail: Fraction

    def __post_init__(self):
        for n, r in self.ratios:
            if not (0 <= r <= 1):
                raise ValueError(f"ratio at n={n} outside [0,1]")
            if n >= self.tail_start and r < self.min_tail:
                raise ValueError("min_tail exceeds a sampled tail ratio")

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "tail_start": self.tail_start,
            "ratios": [[n, f"{r.numerator}/{r.denominator}"] for n, r in self.ratios],
            "min_tail": f"{self.min_tail.numerator}/{self.min_tail.denominator}",
        }


def _sample_grid(N: int) -> list[int]:
    grid = {max(1, N * i // SAMPLE_POINTS) for i in range(1, SAMPLE_POINTS + 1)}
    grid.add(N)
    return sorted(grid)


def prefix_density(A: NaturalSet, N: int, tail_start: int) -> PrefixDensityReport:
    """Exact ratios on a sample grid; min_tail scans every n in [tail_start, N]."""
    if not (N >= tail_start >= 1):
        raise ValueError("need N >= tail_start >= 1")
    grid = _sample_grid(N)
    ratios = []
    min_tail: Optional[Fraction] = None
    inside = 0
    it = iter(A)
    nxt = next(it, None)
    gi = 0
    for n in range(1, N + 1):
        # inside counts elements < n; advance past n-1 before evaluating at n.
        while nxt is not None and nxt < n:
            inside += 1
            nxt = next(it, None)
        if n >= tail_start:
            r = Fraction(inside, n)
            if min_tail is None or r < min_tail:
                min_tail = r
        if gi < len(grid) and grid[gi] == n:
            ratios.append((n, Fraction(inside, n)))
            gi += 1
    assert min_tail is not None
    return PrefixDensityReport(
        N=N, tail_start=tail_start, ratios=tuple(ratios), min_tail=min_tail
    )


def symdiff_density(A: NaturalSet, B: NaturalSet, N: int, tail_start: int) -> PrefixDensityReport:
    """prefix_density of the symmetric difference A triangle B."""
    diff = NaturalSet(set(A) ^ set(B))
    return prefix_density(diff, N, tail_start)


@dataclass(frozen=True)
class CountingBoundCertificate:
    """Proof that a set is not B_h[g] from one dense window (k, y].

    With s = |B intersect (k, y]|, the C(s, h) h-element subsets of the window
    are pairwise distinct unordered representations of sums in (h*k, h*y], a
    range of at most h*y values each allowed multiplicity at most g. So
    C(s, h) > h*g*y rules the property out.
    """

    k: int
    y: int
    h: int
    g: int
    s: int
    subsets: int
    cap: int

    def __post_init__(self):
        if self.subsets != math.comb(self.s, self.h):
            raise ValueError("subsets != C(s, h)")
        if self.cap != self.h * self.g * self.y:
            raise ValueError("cap != h*g*y")
        if self.subsets <= self.cap:
            raise ValueError("not a certificate: C(s,h) <= h*g*y")

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "y": self.y,
            "h": self.h,
            "g": self.g,
            "s": self.s,
            "subsets": str(self.subsets),
            "cap": str(self.cap),
        }


def counting_bound_certificate(
    B: NaturalSet, k: int, y: int, p: Params
) -> Optional[CountingBoundCertificate]:
    """Certificate that B is not B_h[g], or None when the count is inconclusive."""
    if not (0 <= k < y):
        raise ValueError("need 0 <= k < y")
    s = B.count_in(k + 1, y)
    subsets = math.comb(s, p.h)
    cap = p.h * p.g * y
    if subsets > cap:
        return CountingBoundCertificate(k=k, y=y, h=p.h, g=p.g, s=s, subsets=subsets, cap=cap)
    return None
