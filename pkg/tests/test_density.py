"""Density reports and the counting-bound certificate."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import prefix_density_naive
from sidonlab import (
    NaturalSet,
    Params,
    counting_bound_certificate,
    is_bhg,
    prefix_density,
    symdiff_density,
)

small_sets = st.frozensets(st.integers(min_value=0, max_value=120), max_size=40)


def test_evens_frozen():
    evens = NaturalSet(range(0, 1000, 2))
    report = prefix_density(evens, 1000, 100)
    assert report.min_tail == Fraction(1, 2)
    assert report.ratios[-1] == (1000, Fraction(1, 2))


def test_full_and_empty():
    full = prefix_density(NaturalSet(range(500)), 500, 10)
    assert all(r == 1 for _, r in full.ratios)
    assert full.min_tail == 1
    empty = prefix_density(NaturalSet([]), 500, 10)
    assert all(r == 0 for _, r in empty.ratios)
    assert empty.min_tail == 0


def test_pre_validated():
    with pytest.raises(ValueError):
        prefix_density(NaturalSet([0]), 10, 0)
    with pytest.raises(ValueError):
        prefix_density(NaturalSet([0]), 5, 6)


@given(small_sets, st.integers(min_value=1, max_value=100))
@settings(max_examples=50, deadline=None)
def test_ratios_match_oracle(elements, tail_start):
    N = 150
    report = prefix_density(NaturalSet(elements), N, tail_start)
    for n, r in report.ratios:
        # The oracle intersects [0, n]; the report ratio counts [0, n).
        assert r == prefix_density_naive([e for e in elements if e < n], n - 1)
    tail_mins = [
        Fraction(sum(1 for e in elements if e < n), n) for n in range(tail_start, N + 1)
    ]
    assert report.min_tail == min(tail_mins)


def test_symdiff_frozen():
    A = NaturalSet(range(0, 400, 2))
    B = NaturalSet(range(1, 400, 2))
    report = symdiff_density(A, B, 400, 50)
    assert report.min_tail == 1
    same = symdiff_density(A, A, 400, 50)
    assert same.min_tail == 0 and all(r == 0 for _, r in same.ratios)
    versus_empty = symdiff_density(NaturalSet(range(400)), NaturalSet([]), 400, 50)
    assert all(r == 1 for _, r in versus_empty.ratios)


@given(small_sets, small_sets)
@settings(max_examples=30, deadline=None)
def test_symdiff_symmetric(a, b):
    A, B = NaturalSet(a), NaturalSet(b)
    left = symdiff_density(A, B, 200, 20)
    right = symdiff_density(B, A, 200, 20)
    assert left == right


def test_certificate_frozen():
    p = Params(2, 1)
    cert = counting_bound_certificate(NaturalSet(range(0, 101)), 0, 100, p)
    assert cert is not None
    assert (cert.s, cert.subsets, cert.cap) == (100, 4950, 200)

    assert counting_bound_certificate(NaturalSet([0, 1, 3, 7]), 0, 7, p) is None

    # s < h forces C(s, h) = 0, never a certificate.
    assert counting_bound_certificate(NaturalSet([5]), 0, 9, Params(3, 1)) is None


def test_certificate_pre():
    with pytest.raises(ValueError):
        counting_bound_certificate(NaturalSet([1]), 3, 3, Params(2, 1))
    with pytest.raises(ValueError):
        counting_bound_certificate(NaturalSet([1]), -1, 3, Params(2, 1))


def test_certificate_sound_sampled():
    # Every fired certificate must be confirmed by the exhaustive verifier.
    rng = random.Random(11)
    fired = 0
    for _ in range(60):
        y = rng.randint(4, 40)
        k = rng.randint(0, y - 1)
        p = Params(rng.randint(2, 3), rng.randint(1, 2))
        size = rng.randint(0, y)
        B = NaturalSet(rng.sample(range(y + 1), size))
        cert = counting_bound_certificate(B, k, y, p)
        if cert is not None:
            fired += 1
            assert math.comb(cert.s, p.h) > p.h * p.g * y
            v = is_bhg(B.restrict(0, y), p)
            assert not v.is_bhg
            assert len(v.witness.representations) >= p.g + 1
    assert fired > 0


def test_certificate_json_strings():
    cert = counting_bound_certificate(NaturalSet(range(200)), 0, 150, Params(2, 1))
    blob = cert.to_json()
    assert blob["subsets"] == str(math.comb(cert.s, 2))
    assert isinstance(blob["cap"], str)
