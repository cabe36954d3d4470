"""Sparse measure construction, arithmetic, and serialization."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyplab.errors import CarrierError, DomainError
from hyplab.measures import (
    SparseMeasure,
    add,
    measure_from_json,
    measure_to_json,
    pushforward,
    scale,
    total_mass,
    weighted_mass,
)

pairs_strategy = st.lists(
    st.tuples(st.integers(0, 6),
              st.fractions(min_value=Fraction(-5), max_value=Fraction(5), max_denominator=40)),
    max_size=12,
)


def test_point_mass():
    mu = SparseMeasure.point("c", 3)
    assert total_mass(mu) == 1
    assert mu.coefficient(3) == 1
    assert mu.coefficient(0) == 0
    assert mu.is_exact


def test_construction_canonicalizes():
    mu = SparseMeasure.from_pairs("c", [(2, Fraction(1, 3)), (0, Fraction(1, 2)),
                                        (2, Fraction(-1, 3)), (1, Fraction(1, 2))])
    assert mu.support() == (0, 1)
    assert total_mass(mu) == 1


@given(pairs_strategy)
@settings(max_examples=150, deadline=None)
def test_permutation_invariance(pairs):
    mu = SparseMeasure.from_pairs("c", pairs)
    nu = SparseMeasure.from_pairs("c", list(reversed(pairs)))
    assert mu == nu
    assert hash(mu) == hash(nu)
    assert total_mass(mu) == sum((c for _, c in pairs), Fraction(0))


@given(pairs_strategy, pairs_strategy)
@settings(max_examples=100, deadline=None)
def test_mass_additivity(p1, p2):
    mu = SparseMeasure.from_pairs("c", p1)
    nu = SparseMeasure.from_pairs("c", p2)
    assert total_mass(add(mu, nu)) == total_mass(mu) + total_mass(nu)


@given(pairs_strategy)
@settings(max_examples=100, deadline=None)
def test_pushforward_preserves_mass(pairs):
    mu = SparseMeasure.from_pairs("c", pairs)
    nu = pushforward(mu, lambda e: e // 2)
    assert total_mass(nu) == total_mass(mu)


def test_weighted_mass_examples():
    # (1/3) d_Ce + (2/3) d_R with the (1, 2, 5) weight -> 11/3
    mu = SparseMeasure.from_pairs("conj", [(0, Fraction(1, 3)), (2, Fraction(2, 3))])
    w = {0: Fraction(1), 1: Fraction(2), 2: Fraction(5)}
    assert weighted_mass(mu, lambda e: w[e]) == Fraction(11, 3)
    # (1/4) d_pi0 + (3/4) d_pi2 with dimension weight -> 5/2
    nu = SparseMeasure.from_pairs("su2", [(0, Fraction(1, 4)), (2, Fraction(3, 4))])
    assert weighted_mass(nu, lambda l: Fraction(l + 1)) == Fraction(5, 2)
    assert weighted_mass(nu, lambda l: Fraction(1)) == 1


def test_weighted_mass_float_coercion():
    mu = SparseMeasure.from_pairs("c", [(0, Fraction(1, 2)), (1, Fraction(1, 2))])
    out = weighted_mass(mu, lambda e: 1.5)
    assert isinstance(out, float) and out == pytest.approx(1.5)


def test_scale_and_errors():
    mu = SparseMeasure.point("c", 0)
    assert scale(mu, Fraction(1)) == mu
    assert total_mass(scale(mu, Fraction(2, 3))) == Fraction(2, 3)
    with pytest.raises(DomainError):
        scale(mu, Fraction(-1))
    with pytest.raises(DomainError):
        scale(mu, 0)
    nu = SparseMeasure.point("other", 0)
    with pytest.raises(CarrierError):
        add(mu, nu)


def test_add_merges_coefficients():
    half = SparseMeasure.from_pairs("c", [(0, Fraction(1, 2))])
    assert add(half, half) == SparseMeasure.point("c", 0)


def test_float_mode_tagging_and_threshold():
    mu = SparseMeasure.from_pairs("c", [(0, 0.5), (1, Fraction(1, 2)), (2, 1e-17)])
    assert not mu.is_exact
    assert mu.support() == (0, 1)
    assert total_mass(mu) == pytest.approx(1.0)
    with pytest.raises(DomainError):
        measure_to_json(mu)
    with pytest.raises(DomainError):
        mu.raw_terms()


def test_pushforward_partial_map_raises():
    mu = SparseMeasure.from_pairs("c", [(0, 1), (1, 1)])
    with pytest.raises(DomainError):
        pushforward(mu, {0: 5}.__getitem__)


def test_json_round_trip():
    mu = SparseMeasure.from_pairs("su2", [(0, Fraction(1, 4)), (2, Fraction(3, 4))])
    data = measure_to_json(mu)
    assert data["terms"][0] == {"elem": 0, "num": "1", "den": "4"}
    assert measure_from_json(data) == mu
    # tuple ids survive
    nu = SparseMeasure.from_pairs("rdp", [(((0, 1), (2, 2)), Fraction(1))])
    assert measure_from_json(measure_to_json(nu)) == nu


def test_json_big_integers():
    mu = SparseMeasure.from_pairs("c", [(0, Fraction(10 ** 40, 3))])
    data = measure_to_json(mu)
    assert data["terms"][0]["num"] == str(10 ** 40)
    assert measure_from_json(data) == mu
