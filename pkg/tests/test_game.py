"""Game engine: strategies, move validation, audits."""

import math
import random
from fractions import Fraction

import pytest

from helpers import play_rounds, random_legal_move
from oracles import msum_count
from sidonlab import (
    Budget,
    Cylinder,
    GrowthFunction,
    HorizonRegressionError,
    InvalidCylinderError,
    NaturalSet,
    OutOfTurnError,
    Params,
    RefinementViolationError,
    ResourceBudgetError,
    SessionStateError,
    audit_transcript,
    canonical_json,
    check_refinement,
    is_bhg,
    limit_prefix,
    open_session,
    partitions_at_most,
    player1_move,
    rep_count,
    respond_strategy_a,
    respond_strategy_b,
)


def test_growth_presets():
    sqrt = GrowthFunction(kind="sqrt")
    assert [sqrt(n) for n in (0, 1, 2, 4, 15, 16, 17)] == [0, 1, 2, 2, 4, 4, 5]
    log = GrowthFunction(kind="log")
    assert [log(n) for n in (0, 1, 2, 3, 4, 255, 256)] == [0, 1, 2, 2, 3, 8, 9]
    half = GrowthFunction(kind="power", exponent=Fraction(1, 2))
    assert all(half(n) == sqrt(n) for n in range(200))
    two_thirds = GrowthFunction(kind="power", exponent=Fraction(2, 3))
    for n in (1, 8, 27, 64, 100):
        assert two_thirds(n) == math.ceil(n ** (2 / 3) - 1e-9)


def test_growth_validation():
    with pytest.raises(ValueError):
        GrowthFunction(kind="table", values=(1, 2, 3))  # not acknowledged
    with pytest.raises(ValueError):
        GrowthFunction(kind="power")
    with pytest.raises(ValueError):
        GrowthFunction(kind="zeta")
    with pytest.raises(ValueError):
        GrowthFunction(kind="sqrt", values=(1,))
    tab = GrowthFunction(kind="table", values=(2, 3), acknowledged=True)
    assert [tab(0), tab(1), tab(9)] == [2, 3, 3]


def test_growth_json_roundtrip():
    for f in (
        GrowthFunction(kind="sqrt"),
        GrowthFunction(kind="log"),
        GrowthFunction(kind="power", exponent=Fraction(3, 7)),
        GrowthFunction(kind="table", values=(1, 1, 2), acknowledged=True),
    ):
        assert GrowthFunction.from_json(f.to_json()) == f


def test_cylinder_validation():
    with pytest.raises(InvalidCylinderError):
        Cylinder(k=1, members=NaturalSet([0, 3]))
    with pytest.raises(InvalidCylinderError):
        Cylinder(k=-1, members=NaturalSet([]))
    c = Cylinder(k=4, members=NaturalSet([0, 4]))
    assert Cylinder.from_json(c.to_json()) == c


def test_refinement_rules():
    prev = Cylinder(k=16, members=NaturalSet([0] + list(range(5, 17))))
    good = Cylinder(k=20, members=NaturalSet([0] + list(range(5, 17)) + [18]))
    check_refinement(prev, good)

    bad = Cylinder(k=20, members=NaturalSet([0, 2] + list(range(5, 17))))
    with pytest.raises(RefinementViolationError) as info:
        check_refinement(prev, bad)
    assert info.value.position == 2

    dropped = Cylinder(k=20, members=NaturalSet([0] + list(range(6, 17))))
    with pytest.raises(RefinementViolationError) as info:
        check_refinement(prev, dropped)
    assert info.value.position == 5

    with pytest.raises(HorizonRegressionError) as info:
        check_refinement(prev, Cylinder(k=10, members=NaturalSet([0])))
    assert (info.value.horizon, info.value.previous) == (10, 16)


def test_open_session_contracts():
    p = Params(2, 1)
    opening = Cylinder(k=1, members=NaturalSet([0]))
    with pytest.raises(ValueError):
        open_session(p, "A", f=None, opening=opening)
    with pytest.raises(ValueError):
        open_session(p, "B", f=GrowthFunction(kind="sqrt"), opening=opening)
    with pytest.raises(ValueError):
        open_session(p, "C", opening=opening)
    with pytest.raises(ValueError):
        open_session(p, "A", f=GrowthFunction(kind="power", exponent=Fraction(3, 2)), opening=opening)
    s = open_session(p, "A", f=GrowthFunction(kind="sqrt"), opening=opening)
    assert s.awaiting == "player2"


def test_strategy_a_worked_example():
    s = open_session(
        Params(2, 1), "A", f=GrowthFunction(kind="sqrt"), opening=Cylinder(k=1, members=NaturalSet([0]))
    )
    response = respond_strategy_a(s)
    assert s.rounds[0].data == {"x": 5, "t": 16}
    assert response.k == 16
    assert list(response.members) == [0] + list(range(5, 17))

    A, valid_up_to = limit_prefix(s)
    assert valid_up_to == 16
    assert rep_count(A, 2, 4) == 0
    assert rep_count(A, 2, 16) == 5  # interval gives 4, plus 0+16
    assert msum_count(list(A), 2, 16) == 5

    report = audit_transcript(s)
    assert report.all_pass
    check = report.checks[0]
    assert (check.zero_target, check.zero_count) == (4, 0)
    assert (check.count_at_t, check.threshold) == (5, 4)


def test_strategy_a_smallest_t():
    # t_15 fails the threshold, so 16 really is minimal.
    assert partitions_at_most(15 - 10, 2) == 3 < 4
    assert partitions_at_most(16 - 10, 2) == 4


def test_strategy_a_constant_table():
    s = open_session(
        Params(2, 1),
        "A",
        f=GrowthFunction(kind="table", values=(1,), acknowledged=True),
        opening=Cylinder(k=1, members=NaturalSet([0])),
    )
    respond_strategy_a(s)
    assert s.rounds[0].data == {"x": 5, "t": 10}


def test_strategy_a_zero_table():
    # Threshold 0 is met instantly, exercising the no-jump search path.
    s = open_session(
        Params(2, 1),
        "A",
        f=GrowthFunction(kind="table", values=(0,), acknowledged=True),
        opening=Cylinder(k=1, members=NaturalSet([0])),
    )
    respond_strategy_a(s)
    assert s.rounds[0].data == {"x": 5, "t": 6}


def test_gap_exclusion():
    rng = random.Random(3)
    s = open_session(
        Params(3, 1), "A", f=GrowthFunction(kind="log"), opening=Cylinder(k=2, members=NaturalSet([1]))
    )
    play_rounds(s, rng, 3, max_extension=12)
    for rnd in s.rounds:
        k_m, x_m = rnd.player1.k, rnd.data["x"]
        assert x_m == 3 * (1 + k_m) + 1
        assert rnd.player2.members.count_in(k_m + 1, x_m - 1) == 0
        assert rnd.player2.members.count_in(x_m, rnd.data["t"]) == rnd.data["t"] - x_m + 1


def test_strategy_b_frozen():
    s = open_session(Params(2, 1), "B", opening=Cylinder(k=1, members=NaturalSet([0])))
    first = respond_strategy_b(s)
    assert s.rounds[0].data == {"y": 2}
    assert list(first.members) == [0, 2]

    player1_move(s, Cylinder(k=5, members=NaturalSet([0, 2])))
    second = respond_strategy_b(s)
    assert s.rounds[1].data == {"y": 11}
    assert list(second.members) == [0, 2] + list(range(6, 12))

    report = audit_transcript(s)
    assert report.all_pass
    assert report.checks[1].ratio == Fraction(6, 11)
    assert report.checks[1].required == Fraction(1, 2)


def test_strategy_b_empty_opening():
    s = open_session(Params(2, 1), "B", opening=Cylinder(k=0, members=NaturalSet([])))
    response = respond_strategy_b(s)
    assert response.k == 1
    assert list(response.members) == [1]


def test_turn_order_enforced():
    s = open_session(Params(2, 1), "B", opening=Cylinder(k=0, members=NaturalSet([])))
    with pytest.raises(OutOfTurnError):
        player1_move(s, Cylinder(k=1, members=NaturalSet([])))
    respond_strategy_b(s)
    with pytest.raises(OutOfTurnError):
        respond_strategy_b(s)
    with pytest.raises(SessionStateError):
        respond_strategy_a(s)


def test_limit_prefix_requires_response():
    s = open_session(Params(2, 1), "B", opening=Cylinder(k=0, members=NaturalSet([])))
    with pytest.raises(SessionStateError):
        limit_prefix(s)
    assert audit_transcript(s).checks == ()


def test_budget_caps_t_search():
    s = open_session(
        Params(2, 1),
        "A",
        f=GrowthFunction(kind="sqrt"),
        opening=Cylinder(k=1, members=NaturalSet([0])),
        budget=Budget(t_search_cap=12),
    )
    with pytest.raises(ResourceBudgetError):
        respond_strategy_a(s)


def test_strategy_a_random_adversaries():
    for seed in range(6):
        rng = random.Random(seed)
        s = open_session(
            Params(2, 1),
            "A",
            f=GrowthFunction(kind="sqrt"),
            opening=Cylinder(k=rng.randint(0, 4), members=NaturalSet([])),
        )
        play_rounds(s, rng, 4, max_extension=15)
        report = audit_transcript(s)
        assert report.all_pass, canonical_json(report.to_json())
        cylinders = [c for r in s.rounds for c in (r.player1, r.player2)]
        for earlier, later in zip(cylinders, cylinders[1:]):
            check_refinement(earlier, later)


def test_strategy_b_random_adversaries_and_certificate():
    for seed in range(6):
        rng = random.Random(100 + seed)
        s = open_session(Params(2, 1), "B", opening=Cylinder(k=0, members=NaturalSet([])))
        play_rounds(s, rng, 6, max_extension=15)
        report = audit_transcript(s)
        assert report.all_pass
        certs = report.certificates()
        assert certs, "certificate should fire within 6 rounds"
        A, _ = limit_prefix(s)
        assert not is_bhg(A, Params(2, 1)).is_bhg


def test_determinism():
    def run(seed):
        rng = random.Random(seed)
        s = open_session(
            Params(2, 1),
            "A",
            f=GrowthFunction(kind="sqrt"),
            opening=Cylinder(k=1, members=NaturalSet([0])),
        )
        play_rounds(s, rng, 3, max_extension=10)
        return canonical_json(s.to_json()) + canonical_json(audit_transcript(s).to_json())

    assert run(42) == run(42)
    assert run(42) != run(43)
