"""Pair-weight semiring laws and the generic distance solver."""

import math

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from artifact.core import EPSILON
from artifact.errors import EpsilonCycleInput, NonConvergent
from artifact.fixtures import EX_GEO, EX_UNIF
from artifact.semiring import (
    PairWeight,
    entropy_semiring,
    map_entropy,
    map_expectation,
    shortest_distance,
)
from artifact.weighted import validate_weighted

import pytest

PROPERTY_SETTINGS = settings(
    max_examples=300,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

_SPEC = entropy_semiring()

_COORD = st.floats(min_value=1e-3, max_value=10.0, allow_nan=False, allow_infinity=False)
_PAIR = st.builds(PairWeight, _COORD, _COORD)


def _close(x: PairWeight, y: PairWeight, tol: float = 1e-9) -> bool:
    return math.isclose(x.first, y.first, rel_tol=tol, abs_tol=tol) and math.isclose(
        x.second, y.second, rel_tol=tol, abs_tol=tol
    )


class TestSemiringLaws:
    @PROPERTY_SETTINGS
    @given(x=_PAIR, y=_PAIR, z=_PAIR)
    def test_plus_is_associative_and_commutative(self, x, y, z):
        assert _close(_SPEC.plus(_SPEC.plus(x, y), z), _SPEC.plus(x, _SPEC.plus(y, z)))
        assert _SPEC.plus(x, y) == _SPEC.plus(y, x)

    @PROPERTY_SETTINGS
    @given(x=_PAIR)
    def test_zero_and_one_are_identities(self, x):
        assert _SPEC.plus(x, _SPEC.zero) == x
        assert _close(_SPEC.times(x, _SPEC.one), x)
        assert _close(_SPEC.times(_SPEC.one, x), x)
        assert _SPEC.times(x, _SPEC.zero) == _SPEC.zero

    @PROPERTY_SETTINGS
    @given(x=_PAIR, y=_PAIR, z=_PAIR)
    def test_times_is_associative(self, x, y, z):
        assert _close(_SPEC.times(_SPEC.times(x, y), z), _SPEC.times(x, _SPEC.times(y, z)))

    @PROPERTY_SETTINGS
    @given(x=_PAIR, y=_PAIR, z=_PAIR)
    def test_times_distributes_over_plus(self, x, y, z):
        assert _close(_SPEC.times(x, _SPEC.plus(y, z)), _SPEC.plus(_SPEC.times(x, y), _SPEC.times(x, z)))
        assert _close(_SPEC.times(_SPEC.plus(y, z), x), _SPEC.plus(_SPEC.times(y, x), _SPEC.times(z, x)))

    @PROPERTY_SETTINGS
    @given(x=_PAIR, y=_PAIR)
    def test_times_tracks_the_product_rule(self, x, y):
        # second coordinate behaves like a derivative of the first
        out = _SPEC.times(x, y)
        assert math.isclose(out.first, x.first * y.first, rel_tol=1e-12)
        assert math.isclose(out.second, x.first * y.second + y.first * x.second, rel_tol=1e-9, abs_tol=1e-12)


def test_map_entropy_sends_weights_to_w_minus_w_log_w():
    mapped = map_entropy(EX_GEO)
    (w,) = mapped.weights
    assert w.first == 0.5
    assert math.isclose(w.second, -0.5 * math.log(0.5), rel_tol=1e-12)


def test_map_expectation_counts_symbols_not_epsilons():
    wa = validate_weighted(
        ("a",), 3, {0: 1.0}, {2: 1.0},
        [(0, "a", 1, 0.5), (0, EPSILON, 1, 0.5), (1, "a", 2, 1.0)],
    )
    mapped = map_expectation(wa)
    by_label = {wa.skeleton.transitions[i].label: w for i, w in enumerate(mapped.weights)}
    assert by_label["a"].second == by_label["a"].first  # symbol step counts 1
    assert by_label[EPSILON].second == 0.0  # ε contributes no length


def test_distance_on_the_geometric_fixture_matches_the_series():
    # Σ (n+1)·ln2 · 2^-(n+1) over path lengths n sums to 2·ln2
    d = shortest_distance(map_entropy(EX_GEO), _SPEC)
    assert math.isclose(d.first, 1.0, abs_tol=1e-9)
    assert math.isclose(d.second, 2 * math.log(2), abs_tol=1e-9)
    series = sum((n + 1) * math.log(2) * 2 ** -(n + 1) for n in range(60))
    assert math.isclose(d.second, series, abs_tol=1e-9)


def test_acyclic_inputs_agree_between_exact_and_iterative_modes():
    for wa in (EX_UNIF,):
        mapped = map_entropy(wa)
        exact = shortest_distance(mapped, _SPEC)
        iterative = shortest_distance(mapped, _SPEC, force_iterative=True)
        assert _close(exact, iterative, tol=1e-9)


def test_weighted_epsilon_cycles_are_rejected():
    wa = validate_weighted(
        ("a",), 2, {0: 1.0}, {1: 1.0},
        [(0, EPSILON, 1, 0.5), (1, EPSILON, 0, 1.0), (0, "a", 1, 0.5)],
    )
    with pytest.raises(EpsilonCycleInput):
        shortest_distance(map_entropy(wa), _SPEC)


def test_divergent_mass_reports_nonconvergence():
    # a weight-1 loop never drains; the solver must give up, not hang
    div = validate_weighted(("a",), 1, {0: 1.0}, {0: 1.0}, [(0, "a", 0, 1.0)])
    with pytest.raises(NonConvergent):
        shortest_distance(map_entropy(div), _SPEC, max_iter=50)
