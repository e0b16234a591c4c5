"""The Banach-Mazur game on subsets of N, with Player II's winning strategies.

Positions are basic cylinders: a horizon k plus the exact membership pattern
on [0, k]. Player I opens and may play any refinement of the last position;
Player II answers with one of two strategies.

Strategy A forces, in round m with Player I at (k_m, F_m):

    x_m = h*(1+k_m) + 1,
    t_m = the least t >= x_m+1 with partitions_at_most(t - h*x_m, h) >= w_m*f(t),

responding with the pattern F_m on [0,k_m], nothing in (k_m, x_m), everything
in [x_m, t_m]. The weight is w_m = m+1, so every round constrains t (with
weight m, round 0 would accept any t). Consequences, stable under all later
legal play because counts at x <= t_m only involve positions <= t_m:

    r_{A,h}(h*(1+k_m)) = 0          (elements <= k_m sum short, the gap is
                                     empty, elements >= x_m overshoot)
    r_{A,h}(t_m) >= w_m * f(t_m)    (the block [x_m,t_m] alone contributes
                                     partitions_at_most(t_m - h*x_m, h))

Playing forever against strategy A with divergent f = o(n^(h-1)) therefore
yields a set whose representation function is zero infinitely often yet beats
any prescribed growth f infinitely often.

Strategy B forces y_m = (m+1)*k_m + 1 and fills all of (k_m, y_m], making the
window density |A cap (k_m, y_m]| / y_m at least 1 - 1/(m+1). Dense windows
feed the counting-bound certificate: the limit set is far from every B_h[g]
set in density.

audit_transcript recomputes every guarantee from the limit prefix with the
point-count oracle and reports exact quantities per round.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .core import (
    DEFAULT_BUDGET,
    Budget,
    HorizonRegressionError,
    InvalidCylinderError,
    NaturalSet,
    OutOfTurnError,
    Params,
    RefinementViolationError,
    ResourceBudgetError,
    SessionStateError,
)
from .density import CountingBoundCertificate, counting_bound_certificate
from .repcount import partitions_at_most, rep_count


@dataclass(frozen=True)
class Cylinder:
    """The set of all A with A intersect [0, k] equal to members."""

    k: int
    members: NaturalSet

    def __post_init__(self):
        if self.k < 0:
            raise InvalidCylinderError(f"horizon {self.k} is negative")
        if self.members and self.members.max > self.k:
            raise InvalidCylinderError(
                f"member {self.members.max} lies above horizon {self.k}"
            )

    def to_json(self) -> dict:
        return {"k": self.k, "members": list(self.members)}

    @classmethod
    def from_json(cls, obj: dict) -> "Cylinder":
        return cls(k=int(obj["k"]), members=NaturalSet.from_json({"elements": obj["members"]}))


def check_refinement(earlier: Cylinder, later: Cylinder):
    """Raise unless later refines earlier: horizon grew, patterns agree on [0, earlier.k]."""
    if later.k < earlier.k:
        raise HorizonRegressionError(
            f"horizon {later.k} regressed below {earlier.k}",
            horizon=later.k,
            previous=earlier.k,
        )
    old = list(earlier.members)
    new = list(itertools.takewhile(lambda v: v <= earlier.k, later.members))
    for a, b in zip(old, new):
        if a != b:
            raise RefinementViolationError(
                f"patterns disagree at position {min(a, b)}", position=min(a, b)
            )
    if len(old) != len(new):
        pos = old[len(new)] if len(old) > len(new) else new[len(old)]
        raise RefinementViolationError(
            f"patterns disagree at position {pos}", position=pos
        )


@dataclass(frozen=True)
class GrowthFunction:
    """A target growth map f: N -> N.

    Presets sqrt (ceil of the square root), log (binary length), and
    power(e) (ceil of n^e for rational 0 < e < h-1) are divergent and
    o(n^(h-1)) by construction; the power bound is checked against h when a
    session opens. An explicit table is accepted only with acknowledged=True,
    recording that the caller vouches for divergence; beyond its last entry
    it extends as a constant.
    """

    kind: str
    exponent: Optional[Fraction] = None
    values: Optional[tuple[int, ...]] = None
    acknowledged: bool = False

    def __post_init__(self):
        if self.kind in ("sqrt", "log"):
            if self.exponent is not None or self.values is not None:
                raise ValueError(f"{self.kind} takes no parameters")
        elif self.kind == "power":
            if self.exponent is None or self.exponent <= 0:
                raise ValueError("power needs a positive rational exponent")
            if self.values is not None:
                raise ValueError("power takes no table")
        elif self.kind == "table":
            if not self.values:
                raise ValueError("table needs at least one value")
            if any(v < 0 for v in self.values):
                raise ValueError("table values must be nonnegative")
            if not self.acknowledged:
                raise ValueError(
                    "table growth functions require acknowledged=True "
                    "(divergence cannot be checked from a finite table)"
                )
        else:
            raise ValueError(f"unknown growth kind {self.kind!r}")

    def validate_for(self, h: int):
        if self.kind == "power" and self.exponent >= h - 1:
            raise ValueError(f"power exponent {self.exponent} not below h-1 = {h - 1}")

    @property
    def always_positive(self) -> bool:
        # Presets are >= 1 from n = 1 on; a table may dip to 0 anywhere.
        if self.kind == "table":
            return all(v >= 1 for v in self.values)
        return True

    def __call__(self, n: int) -> int:
        if n < 0:
            raise ValueError("growth functions are defined on N")
        if self.kind == "sqrt":
            return _isqrt_ceil(n)
        if self.kind == "log":
            return n.bit_length()
        if self.kind == "power":
            return _pow_ceil(n, self.exponent)
        return self.values[n] if n < len(self.values) else self.values[-1]

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "power":
            out["e"] = f"{self.exponent.numerator}/{self.exponent.denominator}"
        if self.kind == "table":
            out["values"] = list(self.values)
            out["acknowledged"] = True
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "GrowthFunction":
        kind = obj["kind"]
        if kind == "power":
            return cls(kind="power", exponent=Fraction(obj["e"]))
        if kind == "table":
            return cls(
                kind="table",
                values=tuple(int(v) for v in obj["values"]),
                acknowledged=bool(obj.get("acknowledged", False)),
            )
        return cls(kind=kind)


def _isqrt_ceil(n: int) -> int:
    if n == 0:
        return 0
    return 1 + math.isqrt(n - 1)


def _nth_root_floor(x: int, q: int) -> int:
    """Largest r with r**q <= x, Newton iteration on integers."""
    if x < 0 or q < 1:
        raise ValueError("nonnegative radicand and positive index required")
    if x == 0:
        return 0
    r = 1 << ((x.bit_length() + q - 1) // q)
    while True:
        nxt = ((q - 1) * r + x // r ** (q - 1)) // q
        if nxt >= r:
            break
        r = nxt
    while r**q > x:
        r -= 1
    while (r + 1) ** q <= x:
        r += 1
    return r


def _pow_ceil(n: int, e: Fraction) -> int:
    """ceil(n**e) exactly: least m with m**q >= n**p for e = p/q."""
    if n == 0:
        return 0
    p, q = e.numerator, e.denominator
    target = n**p
    r = _nth_root_floor(target, q)
    return r if r**q == target else r + 1


@dataclass(frozen=True)
class Round:
    player1: Cylinder
    player2: Cylinder
    data: dict

    def to_json(self) -> dict:
        return {
            "player1": self.player1.to_json(),
            "player2": self.player2.to_json(),
            "round_data": dict(self.data),
        }


class GameSession:
    """Alternating-move state machine; Player I moves first, no retraction.

    One session must be driven from one thread at a time (the service layer
    holds a per-session lock); the strategy computations themselves are pure.
    """

    def __init__(
        self,
        params: Params,
        strategy: str,
        f: Optional[GrowthFunction],
        opening: Cylinder,
        budget: Budget = DEFAULT_BUDGET,
    ):
        if strategy not in ("A", "B"):
            raise ValueError(f"strategy must be 'A' or 'B', got {strategy!r}")
        if strategy == "A":
            if f is None:
                raise ValueError("strategy A needs a growth function")
            f.validate_for(params.h)
        elif f is not None:
            raise ValueError("strategy B takes no growth function")
        self.params = params
        self.strategy = strategy
        self.f = f
        self.budget = budget
        self.rounds: list[Round] = []
        self._pending: Optional[Cylinder] = opening

    @property
    def awaiting(self) -> str:
        return "player2" if self._pending is not None else "player1"

    def last_response(self) -> Cylinder:
        if not self.rounds:
            raise SessionStateError("no Player II response yet")
        return self.rounds[-1].player2

    def player1_move(self, move: Cylinder) -> "GameSession":
        if self._pending is not None:
            raise OutOfTurnError("awaiting Player II's response, not a move")
        check_refinement(self.rounds[-1].player2, move)
        self._pending = move
        return self

    def respond(self) -> Cylinder:
        if self._pending is None:
            raise OutOfTurnError("awaiting a Player I move, not a response")
        if self.strategy == "A":
            response, data = self._respond_a(self._pending)
        else:
            response, data = self._respond_b(self._pending)
        self.rounds.append(Round(player1=self._pending, player2=response, data=data))
        self._pending = None
        return response

    def _respond_a(self, move: Cylinder) -> tuple[Cylinder, dict]:
        h = self.params.h
        m = len(self.rounds)
        k_m = move.k
        x_m = h * (1 + k_m) + 1
        w_m = m + 1
        t_m = self._find_t(x_m, w_m)
        members = NaturalSet._from_sorted(
            tuple(move.members) + tuple(range(x_m, t_m + 1))
        )
        return Cylinder(k=t_m, members=members), {"x": x_m, "t": t_m}

    def _find_t(self, x_m: int, w_m: int) -> int:
        h = self.params.h
        f = self.f
        cap = self.budget.t_search_cap
        t = x_m + 1
        while True:
            if t > cap:
                raise ResourceBudgetError(
                    f"block endpoint search passed {cap}", needed=t, allowed=cap
                )
            threshold = w_m * f(t)
            if partitions_at_most(t - h * x_m, h) >= threshold:
                return t
            # Below h*x_m the partition count is 0; when f stays positive no
            # t there can qualify, so jump the dead stretch.
            if threshold >= 1 and t < h * x_m and f.always_positive:
                t = h * x_m
            else:
                t += 1

    def _respond_b(self, move: Cylinder) -> tuple[Cylinder, dict]:
        m = len(self.rounds)
        k_m = move.k
        y_m = (m + 1) * k_m + 1
        members = NaturalSet._from_sorted(
            tuple(move.members) + tuple(range(k_m + 1, y_m + 1))
        )
        return Cylinder(k=y_m, members=members), {"y": y_m}

    def limit_prefix(self) -> tuple[NaturalSet, int]:
        last = self.last_response()
        return last.members, last.k

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "strategy": self.strategy,
            "f": None if self.f is None else self.f.to_json(),
            "awaiting": self.awaiting,
            "rounds": [r.to_json() for r in self.rounds],
            "pending": None if self._pending is None else self._pending.to_json(),
        }


def open_session(
    p: Params,
    strategy: str,
    f: Optional[GrowthFunction] = None,
    opening: Cylinder = None,
    budget: Budget = DEFAULT_BUDGET,
) -> GameSession:
    """Start a session with Player I's opening cylinder on the table."""
    if opening is None:
        raise ValueError("opening cylinder required")
    return GameSession(params=p, strategy=strategy, f=f, opening=opening, budget=budget)


def respond_strategy_a(session: GameSession) -> Cylinder:
    if session.strategy != "A":
        raise SessionStateError("session is not using strategy A")
    return session.respond()


def respond_strategy_b(session: GameSession) -> Cylinder:
    if session.strategy != "B":
        raise SessionStateError("session is not using strategy B")
    return session.respond()


def player1_move(session: GameSession, move: Cylinder) -> GameSession:
    return session.player1_move(move)


def limit_prefix(session: GameSession) -> tuple[NaturalSet, int]:
    return session.limit_prefix()


@dataclass(frozen=True)
class AuditCheckA:
    m: int
    k_m: int
    x_m: int
    t_m: int
    zero_target: int
    zero_count: int
    zero_ok: bool
    threshold: int
    count_at_t: int
    growth_ok: bool

    @property
    def ok(self) -> bool:
        return self.zero_ok and self.growth_ok

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k_m,
            "x": self.x_m,
            "t": self.t_m,
            "zero_target": self.zero_target,
            "zero_count": str(self.zero_count),
            "zero_ok": self.zero_ok,
            "threshold": str(self.threshold),
            "count_at_t": str(self.count_at_t),
            "growth_ok": self.growth_ok,
        }


@dataclass(frozen=True)
class AuditCheckB:
    m: int
    k_m: int
    y_m: int
    window: int
    ratio: Fraction
    required: Fraction
    ratio_ok: bool
    certificate: Optional[CountingBoundCertificate]

    @property
    def ok(self) -> bool:
        return self.ratio_ok

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "k": self.k_m,
            "y": self.y_m,
            "window": self.window,
            "ratio": f"{self.ratio.numerator}/{self.ratio.denominator}",
            "required": f"{self.required.numerator}/{self.required.denominator}",
            "ratio_ok": self.ratio_ok,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
        }


@dataclass(frozen=True)
class AuditReport:
    strategy: str
    checks: tuple

    @property
    def all_pass(self) -> bool:
        return all(c.ok for c in self.checks)

    def certificates(self) -> list[CountingBoundCertificate]:
        if self.strategy != "B":
            return []
        return [c.certificate for c in self.checks if c.certificate is not None]

    def to_json(self) -> dict:
        return {
            "strategy": self.strategy,
            "all_pass": self.all_pass,
            "checks": [c.to_json() for c in self.checks],
        }


def audit_transcript(session: GameSession) -> AuditReport:
    """Recompute every round guarantee from the limit prefix.

    Valid on the final prefix for all rounds at once: each audited quantity
    at a target <= t_m (resp. y_m) depends only on positions below the round's
    locked horizon, which later legal moves cannot touch.
    """
    if not session.rounds:
        return AuditReport(strategy=session.strategy, checks=())
    A, _ = session.limit_prefix()
    h = session.params.h
    checks: list = []
    if session.strategy == "A":
        for m, rnd in enumerate(session.rounds):
            k_m = rnd.player1.k
            x_m, t_m = rnd.data["x"], rnd.data["t"]
            zero_target = h * (1 + k_m)
            zero_count = rep_count(A, h, zero_target)
            threshold = (m + 1) * session.f(t_m)
            count_at_t = rep_count(A, h, t_m)
            checks.append(
                AuditCheckA(
                    m=m,
                    k_m=k_m,
                    x_m=x_m,
                    t_m=t_m,
                    zero_target=zero_target,
                    zero_count=zero_count,
                    zero_ok=zero_count == 0,
                    threshold=threshold,
                    count_at_t=count_at_t,
                    growth_ok=count_at_t >= threshold,
                )
            )
    else:
        for m, rnd in enumerate(session.rounds):
            k_m = rnd.player1.k
            y_m = rnd.data["y"]
            window = A.count_in(k_m + 1, y_m)
            ratio = Fraction(window, y_m)
            required = 1 - Fraction(1, m + 1)
            cert = counting_bound_certificate(A, k_m, y_m, session.params)
            checks.append(
                AuditCheckB(
                    m=m,
                    k_m=k_m,
                    y_m=y_m,
                    window=window,
                    ratio=ratio,
                    required=required,
                    ratio_ok=ratio >= required,
                    certificate=cert,
                )
            )
    return AuditReport(strategy=session.strategy, checks=tuple(checks))
