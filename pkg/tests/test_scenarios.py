import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BITCOIN, ETHEREUM
from oceanic import (
    McConfig, compute_values, crystallization_sweep, default_grid, entry_sweep, new_game,
    normalize, snapshot_analysis, snapshot_game, theorem1b_check,
)
from oceanic.errors import (
    EmptySnapshot, GridOutOfRange, HypothesisViolated, NonPositiveMajorWeight, SharesExceedTotal,
)

CASE1 = new_game(0.5, [6, 4], 90)
CASE2 = new_game(0.5, [55, 5], 90)
POOLS40 = new_game(0.5, [40, 9], 51)
CASE1_V_OC = 0.994238683127572  # ocean ratio of the base game


# crystallization

def test_default_grid():
    assert default_grid(0.5, 4) == pytest.approx([0.1, 0.2, 0.3, 0.4], abs=1e-15)
    with pytest.raises(GridOutOfRange):
        default_grid(0.5, 0)


def test_crystal_at_one_fifth():
    (row,) = crystallization_sweep(100, [0.2]).rows
    assert row.ratios["v1"] == pytest.approx(1.25, abs=1e-12)
    assert row.ratios["v_oc"] == pytest.approx(0.9375, abs=1e-12)
    assert row.values["phi1"] + row.values["Phi"] == pytest.approx(1.0, abs=1e-12)
    assert row.method == "interior"


def test_crystal_dominates_with_growing_gap():
    res = crystallization_sweep(100, default_grid(0.5, 99))
    gaps = [a - b for a, b in zip(res.column("v1"), res.column("v_oc"))]
    assert all(g > 0 for g in gaps)
    assert all(b > a for a, b in zip(gaps, gaps[1:]))


def test_crystal_single_major_closed_form():
    # one major in a half-quota interior game: phi1 = r1 / alpha
    for r1 in (0.01, 0.13, 0.37, 0.49):
        (row,) = crystallization_sweep(1.0, [r1]).rows
        assert row.values["phi1"] == pytest.approx(r1 / (1 - r1), abs=1e-12)


def test_crystal_grid_errors():
    with pytest.raises(GridOutOfRange):
        crystallization_sweep(100, [0.2, 0.1])
    with pytest.raises(GridOutOfRange):
        crystallization_sweep(100, [0.5])
    with pytest.raises(GridOutOfRange):
        crystallization_sweep(0, [0.2])
    with pytest.raises(GridOutOfRange):
        crystallization_sweep(100, [])


# entry

def test_entry_case1_constant_and_above_dissolving():
    res = entry_sweep(CASE1, np.linspace(0.5, 40, 80))
    assert res.metadata["v_oc_base"] == pytest.approx(CASE1_V_OC, abs=1e-12)
    assert res.metadata["sign_changes"] == []
    for row in res.rows:
        assert row.flags == ()
        assert row.ratios["v_plus"] == pytest.approx(CASE1_V_OC, abs=1e-9)
        assert row.ratios["v_plus"] > row.ratios["v_oc_o"]
        assert row.ratios["sign"] == 1.0


# regression pins: (w, v_plus, v_oc_o), computed by this implementation
CASE2_PINS = [
    (1.0, 0.6687242798353908, 0.6710051209507796),
    (10.0, 0.668724279835391, 0.6825000000000001),
    (20.0, 0.6687242798353908, 0.6818181818181819),
    (30.0, 0.6687242798353906, 0.6727430555555555),
    (40.0, 0.66829561042524, 0.6588529813381884),
]


def test_entry_case2_below_dissolving_while_interior():
    res = entry_sweep(CASE2, [w for w, _, _ in CASE2_PINS])
    for row, (w, v_plus, v_oc_o) in zip(res.rows, CASE2_PINS):
        assert row.parameter == w
        assert row.ratios["v_plus"] == pytest.approx(v_plus, abs=1e-9)
        assert row.ratios["v_oc_o"] == pytest.approx(v_oc_o, abs=1e-9)
    interior = [r for r in res.rows if not r.flags]
    assert [r.parameter for r in interior] == [1.0, 10.0, 20.0]
    assert all(r.ratios["v_plus"] < r.ratios["v_oc_o"] for r in interior)
    assert res.metadata["sign_changes"] == [40.0]
    assert res.rows[3].flags == ("plus-not-interior",)
    assert res.rows[3].method == "exact/interior"


def test_entry_grid_errors():
    with pytest.raises(GridOutOfRange):
        entry_sweep(CASE1, [0, 1])
    with pytest.raises(GridOutOfRange):
        entry_sweep(CASE1, [2, 1])


def test_entry_error_rows_are_kept(monkeypatch):
    # the grown game exceeds a lowered major limit: the row is flagged, not dropped
    monkeypatch.setattr("oceanic.exact.MAX_EXACT_MAJORS", 2)
    (row,) = entry_sweep(new_game(0.5, [35, 20], 45), [1]).rows
    assert row.method == "error"
    assert row.flags == ("error:TooManyMajors",)


# entrant identity

def test_entrant_identity_holds_while_grown_game_interior():
    res = theorem1b_check(POOLS40, 1)
    assert res.plus_interior
    assert res.gap < 1e-9
    assert res.v_oc_base == pytest.approx(0.619671167198136, abs=1e-12)


def test_entrant_identity_breaks_when_grown_game_leaves_interior():
    res = theorem1b_check(POOLS40, 5)
    assert not res.plus_interior
    assert res.gap == pytest.approx(3.392360404370631e-4, rel=1e-6)


def test_entrant_identity_pure_ocean_base():
    res = theorem1b_check(new_game(0.5, [], 100), 20)
    assert res.v_plus == pytest.approx(1.0, abs=1e-12)
    assert res.v_oc_base == 1.0 and res.gap < 1e-9


def test_entrant_identity_errors():
    with pytest.raises(HypothesisViolated):
        theorem1b_check(new_game(0.5, [35, 20], 45), 1)
    with pytest.raises(NonPositiveMajorWeight):
        theorem1b_check(CASE1, 0)


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.floats(0.001, 1.0), min_size=1, max_size=6),
    st.floats(0.01, 0.99),
    st.floats(0.02, 0.98),
)
def test_entrant_identity_property(raw, mass, frac):
    # majors scaled to total mass below one half; entrant keeps the grown game interior
    mass *= 0.5
    majors = [mass * x / math.fsum(raw) for x in raw]
    base = new_game(0.5, majors, 1 - math.fsum(majors))
    w = frac * (1 - 2 * normalize(base).major_mass)
    res = theorem1b_check(base, w)
    assert res.plus_interior
    assert res.gap < 1e-9


# snapshots

def test_snapshot_game_orders_and_fills_ocean():
    g = snapshot_game([("b", 10), ("a", 30)])
    assert g.labels == ("a", "b") and g.majors == (30, 10) and g.ocean == 60
    g = snapshot_game([("a", 60), ("b", 40)])
    assert g.ocean == 0
    g = snapshot_game([("a", 10)], ocean=50)
    assert g.total == 60


def test_snapshot_errors():
    with pytest.raises(SharesExceedTotal):
        snapshot_game([("a", 60), ("b", 41)])
    with pytest.raises(EmptySnapshot):
        snapshot_game([])
    with pytest.raises(NonPositiveMajorWeight):
        snapshot_game([("a", 0)])


def test_snapshot_dictator_without_ocean():
    res = snapshot_analysis([("a", 60), ("b", 40)])
    assert [r.label for r in res.rows] == ["a", "b"]
    assert [r.values["value"] for r in res.rows] == [1.0, 0.0]
    assert res.metadata["inversions"] == []


def test_bitcoin_snapshot_has_no_inversions():
    res = snapshot_analysis(BITCOIN)
    assert res.rows[-1].label == "OCEAN"
    assert res.rows[-1].values["share"] == pytest.approx(0.189, abs=1e-12)
    assert res.metadata["inversions"] == []
    ratios = [r.ratios["ratio"] for r in res.rows]
    assert all(b <= a for a, b in zip(ratios, ratios[1:]))


def test_ethereum_snapshot_single_knick():
    res = snapshot_analysis(ETHEREUM)
    assert len(res.metadata["inversions"]) <= 1
    assert math.fsum(r.values["value"] for r in res.rows) == pytest.approx(1.0, abs=1e-12)


def test_snapshot_inversion_flagged():
    # two equal pools above an ocean-majority remainder: ties are not inversions
    res = snapshot_analysis([("a", 10), ("b", 10)])
    assert res.metadata["inversions"] == []
    # a small pool between two rivals and the ocean can swing either way
    res = snapshot_analysis([("a", 40), ("b", 40), ("c", 1)])
    assert res.metadata["inversions"] == [3]
    assert [r.label for r in res.rows if "inversion" in r.flags] == ["c"]


# methods agree

@pytest.mark.parametrize("game", [CASE1, CASE2, POOLS40, new_game(0.5, [35, 20], 45)], ids=str)
def test_methods_agree(game):
    exact = compute_values(game, "exact")
    mc = compute_values(game, "mc", McConfig(samples=200_000, seed=11))
    for a, b, se in zip(exact.as_list(), mc.as_list(), mc.stderr):
        assert abs(a - b) <= 4 * se + 1e-12
    if normalize(game).m == 2:
        closed = compute_values(game, "closed")
        assert closed.as_list() == pytest.approx(exact.as_list(), abs=1e-9)
