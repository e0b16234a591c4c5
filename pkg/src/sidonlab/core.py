"""Shared ground types: finite sets of naturals, B_h[g] parameters, budgets, errors."""

from __future__ import annotations

import bisect
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class SidonlabError(Exception):
    """Base class for all library errors."""


class ResourceBudgetError(SidonlabError):
    """A computation would exceed the configured resource budget."""

    def __init__(self, message: str, *, needed: int | None = None, allowed: int | None = None):
        super().__init__(message)
        self.needed = needed
        self.allowed = allowed


class UnsupportedArityError(SidonlabError):
    """The convolution engine only supports small sum arities."""


class BoundExhaustedError(SidonlabError):
    """Greedy extension ran past its candidate bound; carries the partial set."""

    def __init__(self, message: str, partial):
        super().__init__(message)
        self.partial = partial


class InvalidCylinderError(SidonlabError):
    """A cylinder pattern mentions a position above its horizon."""


class MoveError(SidonlabError):
    """Base class for rejected Player I moves."""


class HorizonRegressionError(MoveError):
    """A move shrank the horizon below the previous cylinder's."""

    def __init__(self, message: str, *, horizon: int, previous: int):
        super().__init__(message)
        self.horizon = horizon
        self.previous = previous


class RefinementViolationError(MoveError):
    """A move disagrees with the locked pattern; carries the first bad position."""

    def __init__(self, message: str, *, position: int):
        super().__init__(message)
        self.position = position


class OutOfTurnError(SidonlabError):
    """A session received a request for a turn that is not the current one."""


class SessionStateError(SidonlabError):
    """The session is not in a state where the requested operation applies."""


@dataclass(frozen=True)
class Budget:
    """Resource ceilings for the counting engines and searches.

    dp_cells bounds h * x_max * |A| for table construction, max_witnesses the
    number of explicit representations enumerated, t_search_cap the linear
    search for a block endpoint in strategy A, and max_exponent_vectors the
    multiset enumeration size C(n+h-1, h) for point configurations.
    """

    dp_cells: int = 50_000_000
    max_witnesses: int = 200_000
    t_search_cap: int = 10_000_000
    max_exponent_vectors: int = 2_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class NaturalSet:
    """A finite set of nonnegative integers, stored strictly increasing.

    The constructor accepts any iterable of ints and normalizes (sorts,
    deduplicates); negatives and non-integers are rejected.
    """

    elements: tuple[int, ...] = ()

    def __init__(self, elements: Iterable[int] = ()):
        elems = sorted(set(elements))
        for e in elems:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError(f"set elements must be ints, got {e!r}")
            if e < 0:
                raise ValueError(f"set elements must be nonnegative, got {e}")
        object.__setattr__(self, "elements", tuple(elems))

    @classmethod
    def _from_sorted(cls, elements: tuple[int, ...]) -> "NaturalSet":
        """Wrap an already strictly-increasing tuple without re-validating."""
        self = object.__new__(cls)
        object.__setattr__(self, "elements", elements)
        return self

    @cached_property
    def _index(self) -> dict[int, int]:
        return {a: i for i, a in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self._index

    def __bool__(self) -> bool:
        return bool(self.elements)

    @property
    def min(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no min")
        return self.elements[0]

    @property
    def max(self) -> int:
        if not self.elements:
            raise ValueError("empty set has no max")
        return self.elements[-1]

    def index_of(self, x: int) -> int | None:
        """Position of x in the sorted element tuple, or None."""
        return self._index.get(x)

    def restrict(self, lo: int, hi: int) -> "NaturalSet":
        """Elements a with lo <= a <= hi."""
        elems = tuple(a for a in self.elements if lo <= a <= hi)
        return NaturalSet._from_sorted(elems)

    def union(self, other: Iterable[int]) -> "NaturalSet":
        return NaturalSet([*self.elements, *other])

    def count_in(self, lo: int, hi: int) -> int:
        """|A intersect [lo, hi]| by bisection."""
        left = bisect.bisect_left(self.elements, lo)
        right = bisect.bisect_right(self.elements, hi)
        return right - left

    def to_json(self) -> dict:
        return {"elements": list(self.elements)}

    @classmethod
    def from_json(cls, obj: dict) -> "NaturalSet":
        elems = obj["elements"]
        ns = cls(elems)
        if list(ns.elements) != list(elems):
            raise ValueError("JSON elements must be strictly increasing")
        return ns

    def __repr__(self) -> str:
        return f"NaturalSet({list(self.elements)!r})"


@dataclass(frozen=True)
class Params:
    """Sum arity h >= 2 and multiplicity bound g >= 1 of the B_h[g] condition."""

    h: int
    g: int

    def __post_init__(self):
        if self.h < 2:
            raise ValueError(f"h must be >= 2, got {self.h}")
        if self.g < 1:
            raise ValueError(f"g must be >= 1, got {self.g}")

    def to_json(self) -> dict:
        return {"h": self.h, "g": self.g}

    @classmethod
    def from_json(cls, obj: dict) -> "Params":
        return cls(h=int(obj["h"]), g=int(obj["g"]))


def canonical_json(obj) -> str:
    """Deterministic JSON encoding (sorted keys, compact separators).

    Journals and replay comparisons rely on this byte-for-byte.
    """
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)
