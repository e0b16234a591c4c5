"""Point configurations, collisions, hyperplanes, genericity sampling."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import config_sum_groups, exponent_vectors
from sidonlab import (
    Budget,
    NaturalSet,
    Params,
    ResourceBudgetError,
    canonical_json,
    is_bhg,
)
from sidonlab.points import (
    ConfigVerdict,
    ExponentVector,
    PointConfig,
    genericity_experiment,
    is_bhg_config,
    multiset_sums,
    violating_hyperplane,
)


def line(*values) -> PointConfig:
    return PointConfig(dim=1, points=[[v] for v in values])


def test_config_validation():
    with pytest.raises(ValueError):
        PointConfig(dim=1, points=[[1]])
    with pytest.raises(ValueError):
        PointConfig(dim=0, points=[[], []])
    with pytest.raises(ValueError):
        PointConfig(dim=2, points=[[1, 2], [3]])
    cfg = PointConfig(dim=2, points=[[1, Fraction(1, 3)], [0, 2]])
    assert cfg.n == 2
    blob = cfg.to_json()
    assert blob["points"][0] == ["1/1", "1/3"]
    assert PointConfig.from_json(blob) == cfg


def test_multiset_sums_frozen():
    groups = multiset_sums(line(0, 1, 3), 2)
    assert sorted(s[0] for s in groups) == [0, 1, 2, 3, 4, 6]
    assert all(len(g) == 1 for g in groups.values())

    groups = multiset_sums(line(0, 1, 2), 2)
    collided = groups[(Fraction(2),)]
    assert [v.alpha for v in collided] == [(0, 2, 0), (1, 0, 1)]

    pair = multiset_sums(line(5, 9), 2)
    assert sum(len(g) for g in pair.values()) == 3


def test_multiset_sums_pre_and_budget():
    with pytest.raises(ValueError):
        multiset_sums(line(0, 1), 1)
    with pytest.raises(ResourceBudgetError):
        multiset_sums(line(*range(10)), 4, budget=Budget(max_exponent_vectors=50))


@given(
    st.lists(st.integers(min_value=-9, max_value=9), min_size=2, max_size=5),
    st.integers(min_value=2, max_value=4),
)
@settings(max_examples=50, deadline=None)
def test_multiset_sums_match_oracle(values, h):
    config = line(*values)
    groups = multiset_sums(config, h)
    expected = config_sum_groups(exponent_vectors(len(values), h), values)
    assert {s[0]: [v.alpha for v in g] for s, g in groups.items()} == expected
    assert sum(len(g) for g in groups.values()) == math.comb(len(values) + h - 1, h)


def test_verdict_frozen():
    assert is_bhg_config(line(0, 1, 3), Params(2, 1)).is_bhg

    v = is_bhg_config(line(0, 1, 2), Params(2, 1))
    assert not v.is_bhg
    assert v.collision_sum == (Fraction(2),)
    assert [a.alpha for a in v.collision_group] == [(0, 2, 0), (1, 0, 1)]
    assert v.gamma == (1, -2, 1)

    dup = is_bhg_config(line(7, 7), Params(3, 2))
    assert not dup.is_bhg
    assert dup.duplicate == (1, 2)
    assert dup.gamma == (1, -1)


def test_hyperplane_frozen():
    config = line(0, 1, 2)
    gamma = violating_hyperplane(
        config, (ExponentVector((1, 0, 1)), ExponentVector((0, 2, 0)))
    )
    assert gamma == (1, -2, 1)
    assert sum(g * p[0] for g, p in zip(gamma, config.points)) == 0


def test_hyperplane_preconditions():
    config = line(0, 1, 2)
    with pytest.raises(ValueError):
        violating_hyperplane(config, (ExponentVector((1, 0, 1)), ExponentVector((1, 0, 1))))
    with pytest.raises(ValueError):
        violating_hyperplane(config, (ExponentVector((2, 0, 0)), ExponentVector((0, 2, 0))))
    with pytest.raises(ValueError):
        violating_hyperplane(config, (ExponentVector((1, 1)), ExponentVector((0, 2))))


@given(
    st.sets(st.integers(min_value=0, max_value=25), min_size=2, max_size=6),
    st.integers(min_value=2, max_value=3),
    st.integers(min_value=1, max_value=2),
)
@settings(max_examples=50, deadline=None)
def test_integer_line_agrees_with_verifier(values, h, g):
    p = Params(h, g)
    got = is_bhg_config(line(*sorted(values)), p)
    want = is_bhg(NaturalSet(values), p)
    assert got.is_bhg == want.is_bhg


@given(
    st.lists(st.integers(min_value=-8, max_value=8), min_size=2, max_size=4),
    st.fractions(min_value=Fraction(-3), max_value=Fraction(3)).filter(lambda q: q != 0),
    st.fractions(min_value=Fraction(-3), max_value=Fraction(3)),
)
@settings(max_examples=40, deadline=None)
def test_affine_invariance(values, scale, shift):
    p = Params(2, 1)
    base = line(*values)
    moved = PointConfig(dim=1, points=[[scale * v + shift] for v in values])
    assert is_bhg_config(base, p).is_bhg == is_bhg_config(moved, p).is_bhg


def test_hyperplane_entries_bounded():
    for p in (Params(2, 1), Params(3, 1)):
        v = is_bhg_config(line(0, 1, 2, 3), p)
        if not v.is_bhg:
            assert all(abs(g) <= p.h for g in v.gamma)
            assert any(g != 0 for g in v.gamma)
            first = next(g for g in v.gamma if g != 0)
            assert first > 0


def test_experiment_clean_run():
    report = genericity_experiment(
        n=4, d=1, p=Params(2, 1), trials=60, coord_bound=10**6, seed=5
    )
    assert report.failure_count == 0
    again = genericity_experiment(
        n=4, d=1, p=Params(2, 1), trials=60, coord_bound=10**6, seed=5
    )
    assert canonical_json(report.to_json()) == canonical_json(again.to_json())


def test_experiment_validation():
    with pytest.raises(ValueError):
        genericity_experiment(n=3, d=1, p=Params(2, 1), trials=0, coord_bound=10, seed=1)
    with pytest.raises(ValueError):
        genericity_experiment(n=3, d=1, p=Params(2, 1), trials=1, coord_bound=0, seed=1)


def test_verdict_shape_enforced():
    with pytest.raises(ValueError):
        ConfigVerdict(is_bhg=True, gamma=(1, -1))
    with pytest.raises(ValueError):
        ConfigVerdict(is_bhg=False, gamma=None)
