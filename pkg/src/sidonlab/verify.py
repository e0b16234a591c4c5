"""B_h[g] decision, violation witnesses, the interval gadget, greedy corpora.

A set A is B_h[g] when r_{A,h}(x) <= g for every x. For finite A it suffices
to examine x in [h*min(A), h*max(A)]: counts are zero outside that range.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import DEFAULT_BUDGET, BoundExhaustedError, Budget, NaturalSet, Params
from .repcount import enumerate_representations, rep_table


@dataclass(frozen=True)
class Witness:
    """A violating sum and every representation of it, lexicographic order."""

    x: int
    representations: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"x": self.x, "representations": [list(r) for r in self.representations]}

    @classmethod
    def from_json(cls, obj: dict) -> "Witness":
        return cls(
            x=int(obj["x"]),
            representations=tuple(tuple(int(v) for v in r) for r in obj["representations"]),
        )


@dataclass(frozen=True)
class Verdict:
    is_bhg: bool
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.is_bhg and self.witness is not None:
            raise ValueError("positive verdict carries no witness")
        if not self.is_bhg and self.witness is None:
            raise ValueError("negative verdict requires a witness")

    def to_json(self) -> dict:
        return {
            "is_bhg": self.is_bhg,
            "witness": None if self.witness is None else self.witness.to_json(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Verdict":
        w = obj.get("witness")
        return cls(is_bhg=obj["is_bhg"], witness=None if w is None else Witness.from_json(w))


def is_bhg(A: NaturalSet, p: Params, budget: Budget = DEFAULT_BUDGET) -> Verdict:
    """Decide the property; on failure report the smallest violating x.

    Empty and singleton sets pass vacuously (every count is 0 or 1 <= g).
    """
    if len(A) <= 1:
        return Verdict(is_bhg=True)
    table = rep_table(A, p.h, p.h * A.max, budget=budget)
    for x in range(p.h * A.min, p.h * A.max + 1):
        if table[x] > p.g:
            reps = tuple(enumerate_representations(A, p.h, x, budget=budget))
            return Verdict(is_bhg=False, witness=Witness(x=x, representations=reps))
    return Verdict(is_bhg=True)


def violation_gadget(F0: NaturalSet, p: Params) -> NaturalSet:
    """Extend F0 with the interval [x_0, h*(x_0+g)], x_0 = 1 + max(F0).

    The result is never B_h[g]: the target x = h*(x_0+g) has the g+1
    representations (h-2 copies of x_0+g) + (x_0+g+i) + (x_0+g-i), i = 0..g,
    all drawn from the appended interval.
    """
    if not F0:
        raise ValueError("F0 must be nonempty")
    x0 = 1 + F0.max
    return F0.union(NaturalSet(range(x0, p.h * (x0 + p.g) + 1)))


def gadget_target(F0: NaturalSet, p: Params) -> int:
    """The designed violating sum h*(x_0+g) of violation_gadget(F0, p)."""
    if not F0:
        raise ValueError("F0 must be nonempty")
    return p.h * (1 + F0.max + p.g)


def greedy_bhg(
    seed: NaturalSet, p: Params, count: int, bound: int, budget: Budget = DEFAULT_BUDGET
) -> NaturalSet:
    """Grow seed by always admitting the smallest next integer that keeps B_h[g].

    Stops at size count. Candidates run upward from max(seed)+1; if they pass
    bound first, raises a bound-exhausted error carrying the partial set.
    Not a construction from the underlying theory, just a corpus generator
    (for h=2, g=1, seed {1} it reproduces the Mian-Chowla sequence).
    """
    if count < len(seed):
        raise ValueError("count must be at least |seed|")
    if not is_bhg(seed, p, budget).is_bhg:
        raise ValueError("seed is not B_h[g]")
    current = seed
    candidate = (current.max + 1) if current else 0
    while len(current) < count:
        if candidate > bound:
            raise BoundExhaustedError(
                f"no B_h[g] extension of size {count} within bound {bound}", partial=current
            )
        extended = current.union(NaturalSet([candidate]))
        if is_bhg(extended, p, budget).is_bhg:
            current = extended
        candidate += 1
    return current
