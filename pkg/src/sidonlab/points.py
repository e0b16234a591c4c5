"""Finite point configurations over Q^d and their B_h[g] status.

A configuration (a_1, ..., a_n) fails the property exactly when g+1 distinct
exponent vectors alpha (nonnegative, summing to h) share the same weighted sum
Sigma alpha_i a_i, or when two points coincide outright. Either failure pins
the configuration to a hyperplane Sigma gamma_i a_i = 0 with gamma = alpha -
beta nonzero and entries in [-h, h]; random configurations miss every such
hyperplane essentially always, which the sampling experiment makes tangible.

All coordinates are exact rationals. Equality of weighted sums is decided by
exact comparison, never by closeness: the whole subject is measure-zero
collisions, and a tolerance would invent or erase them.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import DEFAULT_BUDGET, Budget, Params, ResourceBudgetError

Vector = tuple[Fraction, ...]


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class PointConfig:
    dim: int
    points: tuple[Vector, ...]

    def __init__(self, dim: int, points: Sequence[Sequence]):
        if dim < 1:
            raise ValueError("dim must be >= 1")
        coerced = tuple(
            tuple(Fraction(c) for c in vector) for vector in points
        )
        if len(coerced) < 2:
            raise ValueError("need at least two points")
        for vector in coerced:
            if len(vector) != dim:
                raise ValueError(f"point {vector} does not have {dim} coordinates")
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "points", coerced)

    @property
    def n(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "points": [[_frac_str(c) for c in vector] for vector in self.points],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PointConfig":
        return cls(
            dim=int(obj["dim"]),
            points=[[Fraction(c) for c in vector] for vector in obj["points"]],
        )


@dataclass(frozen=True)
class ExponentVector:
    alpha: tuple[int, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.alpha):
            raise ValueError("exponents must be nonnegative")

    @property
    def h(self) -> int:
        return sum(self.alpha)

    def __iter__(self):
        return iter(self.alpha)

    def __lt__(self, other: "ExponentVector") -> bool:
        return self.alpha < other.alpha


def multiset_sums(
    config: PointConfig, h: int, budget: Budget = DEFAULT_BUDGET
) -> dict[Vector, list[ExponentVector]]:
    """Group all C(n+h-1, h) exponent vectors by exact weighted sum."""
    if h < 2:
        raise ValueError("h must be >= 2")
    n = config.n
    count = math.comb(n + h - 1, h)
    if count > budget.max_exponent_vectors:
        raise ResourceBudgetError(
            f"{count} exponent vectors exceed budget",
            needed=count,
            allowed=budget.max_exponent_vectors,
        )
    zero = (Fraction(0),) * config.dim
    groups: dict[Vector, list[ExponentVector]] = {}
    for chosen in itertools.combinations_with_replacement(range(n), h):
        alpha = [0] * n
        total = list(zero)
        for i in chosen:
            alpha[i] += 1
            point = config.points[i]
            for c in range(config.dim):
                total[c] += point[c]
        groups.setdefault(tuple(total), []).append(ExponentVector(tuple(alpha)))
    for group in groups.values():
        group.sort()
    return groups


@dataclass(frozen=True)
class ConfigVerdict:
    """Verdict for a configuration, with the failure evidence when negative.

    duplicate is a 1-based index pair (i, j) of coinciding points; collision
    is a sum vector plus the full >= g+1 group of exponent vectors achieving
    it. Exactly one of them accompanies a negative verdict, and gamma is the
    corresponding violating hyperplane.
    """

    is_bhg: bool
    duplicate: Optional[tuple[int, int]] = None
    collision_sum: Optional[Vector] = None
    collision_group: Optional[tuple[ExponentVector, ...]] = None
    gamma: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.is_bhg:
            if self.gamma is not None or self.duplicate is not None:
                raise ValueError("positive verdict carries no evidence")
        else:
            if self.gamma is None:
                raise ValueError("negative verdict requires a hyperplane")
            if (self.duplicate is None) == (self.collision_group is None):
                raise ValueError("negative verdict needs exactly one failure kind")

    def to_json(self) -> dict:
        return {
            "is_bhg": self.is_bhg,
            "duplicate": None if self.duplicate is None else list(self.duplicate),
            "collision_sum": None
            if self.collision_sum is None
            else [_frac_str(c) for c in self.collision_sum],
            "collision_group": None
            if self.collision_group is None
            else [list(v.alpha) for v in self.collision_group],
            "gamma": None if self.gamma is None else list(self.gamma),
        }


def is_bhg_config(config: PointConfig, p: Params, budget: Budget = DEFAULT_BUDGET) -> ConfigVerdict:
    """Distinctness first, then the smallest colliding sum group of size > g."""
    n = config.n
    for i in range(n):
        for j in range(i + 1, n):
            if config.points[i] == config.points[j]:
                gamma = [0] * n
                gamma[i], gamma[j] = 1, -1
                return ConfigVerdict(
                    is_bhg=False, duplicate=(i + 1, j + 1), gamma=tuple(gamma)
                )
    groups = multiset_sums(config, p.h, budget)
    offending = [(s, g) for s, g in groups.items() if len(g) > p.g]
    if not offending:
        return ConfigVerdict(is_bhg=True)
    total, group = min(offending, key=lambda item: item[0])
    return ConfigVerdict(
        is_bhg=False,
        collision_sum=total,
        collision_group=tuple(group),
        gamma=violating_hyperplane(config, (group[0], group[1])),
    )


def violating_hyperplane(
    config: PointConfig, collision: tuple[ExponentVector, ExponentVector]
) -> tuple[int, ...]:
    """gamma = alpha - beta for a verified collision, first nonzero entry positive.

    Exact preconditions are re-checked: the vectors must be distinct, of equal
    arity, and have equal weighted sums under the configuration.
    """
    alpha, beta = collision
    if alpha.alpha == beta.alpha:
        raise ValueError("exponent vectors must be distinct")
    if len(alpha.alpha) != config.n or len(beta.alpha) != config.n:
        raise ValueError("exponent vectors must have one entry per point")
    if alpha.h != beta.h:
        raise ValueError("exponent vectors must have equal total degree")
    for c in range(config.dim):
        left = sum(a * config.points[i][c] for i, a in enumerate(alpha.alpha))
        right = sum(b * config.points[i][c] for i, b in enumerate(beta.alpha))
        if left != right:
            raise ValueError("exponent vectors do not collide under this configuration")
    gamma = tuple(a - b for a, b in zip(alpha.alpha, beta.alpha))
    first = next(g for g in gamma if g != 0)
    if first < 0:
        gamma = tuple(-g for g in gamma)
    return gamma


@dataclass(frozen=True)
class TrialFailure:
    trial: int
    config: PointConfig
    verdict: ConfigVerdict

    def to_json(self) -> dict:
        return {
            "trial": self.trial,
            "config": self.config.to_json(),
            "verdict": self.verdict.to_json(),
        }


@dataclass(frozen=True)
class GenericityReport:
    n: int
    dim: int
    params: Params
    trials: int
    coord_bound: int
    seed: int
    failures: tuple[TrialFailure, ...]

    @property
    def failure_count(self) -> int:
        return len(self.failures)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "dim": self.dim,
            "params": self.params.to_json(),
            "trials": self.trials,
            "coord_bound": self.coord_bound,
            "seed": self.seed,
            "failure_count": self.failure_count,
            "failures": [f.to_json() for f in self.failures],
        }


def genericity_experiment(
    n: int,
    d: int,
    p: Params,
    trials: int,
    coord_bound: int,
    seed: int,
    budget: Budget = DEFAULT_BUDGET,
) -> GenericityReport:
    """Sample random rational configurations and tally B_h[g] failures.

    Coordinates are numerator/coord_bound with the numerator uniform in
    [-coord_bound, coord_bound]. Each trial draws from its own generator
    seeded by (seed, trial), so any failing trial can be re-run alone.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if coord_bound < 1:
        raise ValueError("coord_bound must be >= 1")
    failures = []
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        config = PointConfig(
            dim=d,
            points=[
                [
                    Fraction(rng.randint(-coord_bound, coord_bound), coord_bound)
                    for _ in range(d)
                ]
                for _ in range(n)
            ],
        )
        verdict = is_bhg_config(config, p, budget)
        if not verdict.is_bhg:
            failures.append(TrialFailure(trial=trial, config=config, verdict=verdict))
    return GenericityReport(
        n=n,
        dim=d,
        params=p,
        trials=trials,
        coord_bound=coord_bound,
        seed=seed,
        failures=tuple(failures),
    )
