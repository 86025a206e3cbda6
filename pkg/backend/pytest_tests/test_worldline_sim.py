import math

import numpy as np
import pytest

from backend.app.models.accel_plan import WorldlineSegment
from backend.app.models.computation import ComputationSpec
from backend.app.models.errors import SimulationConfigError
from backend.app.services.worldline_service import WorldlineSimulator
from backend.app.utils.stable_math import cosh_minus_one


simulator = WorldlineSimulator()


def _assert_physical(trace):
    assert np.all(np.abs(trace.beta) < 1.0)
    assert np.all(np.diff(trace.tau) > 0.0)
    assert np.all(np.diff(trace.t) > 0.0)


def test_zero_acceleration_segment_is_exact():
    trace = simulator.integrate_worldline([WorldlineSegment(proper_accel=0.0, proper_duration=3.0)], step=0.1)
    assert trace.t[-1] == pytest.approx(3.0, rel=1e-15)
    assert np.all(trace.x == 0.0)
    assert np.all(trace.beta == 0.0)


def test_single_burn_matches_hyperbola():
    a, tau = 1.0, 2.0
    trace = simulator.integrate_worldline([WorldlineSegment(proper_accel=a, proper_duration=tau)], step=1e-3)
    _assert_physical(trace)
    assert trace.t[-1] == pytest.approx(math.sinh(a * tau) / a, rel=1e-12)
    assert trace.x[-1] == pytest.approx(cosh_minus_one(a * tau) / a, rel=1e-12)
    assert trace.beta[-1] == pytest.approx(math.tanh(a * tau), rel=1e-15)
    assert trace.final_rapidity == pytest.approx(a * tau)


def test_fourth_order_convergence():
    a, tau = 1.0, 1.0
    errors = []
    for step in (0.1, 0.05):
        trace = simulator.integrate_worldline([WorldlineSegment(proper_accel=a, proper_duration=tau)], step=step)
        errors.append(abs(trace.t[-1] - math.sinh(1.0)))
    ratio = errors[0] / errors[1]
    assert 12.0 <= ratio <= 20.0


def test_rapidity_jump_applies_impulsive_boost():
    segments = [
        WorldlineSegment(proper_accel=0.0, proper_duration=1.0, rapidity_jump=math.atanh(0.6)),
    ]
    trace = simulator.integrate_worldline(segments, step=0.5)
    # gamma = 1.25, gamma * beta = 0.75
    assert trace.t[-1] == pytest.approx(1.25, rel=1e-14)
    assert trace.x[-1] == pytest.approx(0.75, rel=1e-14)
    assert trace.beta[0] == 0.0
    assert trace.beta[-1] == pytest.approx(0.6, rel=1e-14)


def test_invalid_step_rejected():
    segments = [WorldlineSegment(proper_accel=1.0, proper_duration=1.0)]
    for step in (0.0, -1.0, math.nan):
        with pytest.raises(SimulationConfigError):
            simulator.integrate_worldline(segments, step=step)


def test_step_budget_enforced():
    segments = [WorldlineSegment(proper_accel=1.0, proper_duration=1e3)]
    with pytest.raises(SimulationConfigError, match="step budget exceeded"):
        simulator.integrate_worldline(segments, step=1e-6)


def test_negative_duration_rejected_by_segment_model():
    with pytest.raises(ValueError, match="proper_duration must be ≥ 0"):
        WorldlineSegment(proper_accel=1.0, proper_duration=-1.0)


def test_closed_forms_verified_on_acceleration_grid():
    a_grid = (0.1, 1.0, 10.0)
    report = simulator.verify_closed_forms(a_grid, np.linspace(0.0, 1.0, 10))
    assert report.max_rel_error <= 1e-8
    # tau grid scaled per acceleration (up to 10 c/a)
    for a in a_grid:
        scaled = simulator.verify_closed_forms([a], np.linspace(0.0, 10.0 / a, 10))
        assert scaled.max_rel_error <= 1e-8


def test_closed_forms_with_zero_acceleration():
    report = simulator.verify_closed_forms([0.0], [0.0, 1.0, 5.0])
    assert report.max_rel_error == 0.0


def test_path1_twin_asymmetry():
    trace, report = simulator.simulate_path1(ComputationSpec(queries=100, order=2))
    _assert_physical(trace)
    tau, t, x, beta = trace.terminal
    assert tau == pytest.approx(10.0, rel=1e-9)
    assert t == pytest.approx(100.0, rel=1e-9)
    assert beta == 0.0
    assert abs(x) <= 1e-9 * np.max(trace.x)
    assert report.max_rel_error_t <= 1e-9
    assert report.max_rel_error_x <= 1e-9


def test_path1_classical_limit_is_stationary():
    trace, report = simulator.simulate_path1(ComputationSpec(queries=100, order=1))
    assert np.all(trace.x == 0.0)
    assert trace.t[-1] == pytest.approx(trace.tau[-1], rel=1e-15)
    assert report.max_rel_error <= 1e-12


def test_path2_closes_and_flags_single_burn_formula():
    trace, report = simulator.simulate_path2(1.0, 4.0, step=4e-5)
    _assert_physical(trace)
    x_max = float(np.max(trace.x))
    assert abs(report.terminal_beta) <= 1e-9
    assert abs(report.terminal_x) <= 1e-6 * x_max
    assert x_max == pytest.approx(2.0 * (math.cosh(1.0) - 1.0), rel=1e-6)
    assert x_max != pytest.approx(math.cosh(2.0) - 1.0, rel=1e-2)
    assert report.max_rel_error_x <= 1e-6
    assert report.max_rel_error_beta <= 1e-8
    assert report.max_rel_error_t <= 1e-6
    assert any("single-burn" in note for note in report.notes)


def test_path2_default_step():
    trace, report = simulator.simulate_path2(2.0, 3.0)
    assert trace.step == pytest.approx(3.0 / 1e5)
    assert report.max_rel_error <= 1e-6


def test_trace_frame_columns_and_order():
    trace, _ = simulator.simulate_path2(1.0, 4.0, step=0.01)
    frame = trace.to_frame()
    assert list(frame.columns) == ["tau", "t", "x", "beta"]
    assert frame["tau"].is_monotonic_increasing
    assert len(frame) == len(trace)


def test_integration_is_deterministic():
    segments = [
        WorldlineSegment(proper_accel=0.7, proper_duration=1.3),
        WorldlineSegment(proper_accel=-0.7, proper_duration=1.3),
    ]
    first = simulator.integrate_worldline(segments, step=0.01)
    second = simulator.integrate_worldline(list(segments), step=0.01)
    assert np.array_equal(first.t, second.t)
    assert np.array_equal(first.x, second.x)
