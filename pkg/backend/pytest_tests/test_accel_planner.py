import math

import numpy as np
import pytest

from backend.app.models.computation import ComputationSpec
from backend.app.models.errors import DomainError, WeakFieldError
from backend.app.services.accel_service import AccelPlanner
from backend.app.utils.kinematics import gamma_of_beta


planner = AccelPlanner()


def _bisect_acceleration(coordinate_time: float, proper_time: float) -> float:
    """Independent oracle: plain bisection on asinh(a t) / a - tau."""
    lo, hi = 1e-12, 1.0
    while math.asinh(hi * coordinate_time) / hi > proper_time:
        hi *= 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if math.asinh(mid * coordinate_time) / mid > proper_time:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_worldline_point_matches_hyperbola():
    a, tau = 2.0, 0.7
    t, x = planner.worldline_point(a, tau)
    assert t == pytest.approx(math.sinh(a * tau) / a, rel=1e-14)
    assert x == pytest.approx((math.cosh(a * tau) - 1.0) / a, rel=1e-13)
    # absolute position c^2/a + x lies on the hyperbola X^2 - t^2 = (c^2/a)^2
    X = 1.0 / a + x
    assert X * X - t * t == pytest.approx(1.0 / (a * a), rel=1e-12)


def test_velocity_and_gamma_forms_agree():
    a = 0.3
    for tau in (0.0, 0.5, 3.0, 20.0):
        t, x = planner.worldline_point(a, tau)
        beta = planner.velocity_at(a, tau)
        assert planner.velocity_at_coordinate_time(a, t).value == pytest.approx(beta.value, rel=1e-12)
        gamma = planner.gamma_at(a, tau)
        assert gamma_of_beta(beta) == pytest.approx(gamma, rel=1e-12)
        assert planner.gamma_at_coordinate_time(a, t) == pytest.approx(gamma, rel=1e-12)
        assert planner.gamma_at_displacement(a, x) == pytest.approx(gamma, rel=1e-12)
        assert planner.gamma_at_position(a, 1.0 / a + x) == pytest.approx(gamma, rel=1e-12)


def test_velocity_near_light_keeps_precision():
    beta = planner.velocity_at_coordinate_time(1.0, 1e6)
    assert beta.deficit == pytest.approx(5e-13, rel=1e-6)
    assert gamma_of_beta(beta) == pytest.approx(math.hypot(1.0, 1e6), rel=1e-12)


@pytest.mark.parametrize("a", [0.1, 1.0, 10.0])
def test_time_maps_are_mutually_consistent(a):
    for tau in np.linspace(0.0, 5.0 / a, 6):
        from_tau = planner.time_maps(a, tau=float(tau))
        from_t = planner.time_maps(a, t=from_tau.t)
        from_d = planner.time_maps(a, d=from_tau.d)
        assert from_t.tau == pytest.approx(tau, rel=1e-12, abs=1e-15)
        assert from_t.d == pytest.approx(from_tau.d, rel=1e-12, abs=1e-15)
        assert from_d.tau == pytest.approx(tau, rel=1e-10, abs=1e-15)
        assert from_d.t == pytest.approx(from_tau.t, rel=1e-10, abs=1e-15)


def test_time_maps_need_exactly_one_quantity():
    with pytest.raises(DomainError):
        planner.time_maps(1.0)
    with pytest.raises(DomainError):
        planner.time_maps(1.0, t=1.0, tau=1.0)


def test_zero_or_negative_acceleration_rejected():
    with pytest.raises(DomainError, match="proper acceleration must be > 0"):
        planner.worldline_point(0.0, 1.0)
    with pytest.raises(DomainError):
        planner.velocity_at(-1.0, 1.0)


def test_solve_acceleration_for_hundred_queries():
    spec = ComputationSpec(queries=100, order=2)
    a = planner.solve_acceleration(spec)
    residual = math.asinh(a * 100.0) / a - 10.0
    assert abs(residual) / 10.0 <= 1e-11
    assert a == pytest.approx(0.449987, abs=1e-5)
    assert a == pytest.approx(_bisect_acceleration(100.0, 10.0), rel=1e-9)


@pytest.mark.parametrize("queries,n", [(10, 1.5), (1000, 2.0), (10**6, 3.0), (10**9, 1.1), (10**4, 6.0)])
def test_solve_acceleration_across_regimes(queries, n):
    spec = ComputationSpec(queries=queries, order=n)
    a = planner.solve_acceleration(spec)
    assert a > 0.0
    assert math.asinh(a * spec.coordinate_time) / a == pytest.approx(spec.proper_time, rel=1e-11)
    assert planner.implied_order(a, spec.coordinate_time) == pytest.approx(n, rel=1e-9)


def test_solve_acceleration_degenerates_to_zero_for_order_one():
    assert planner.solve_acceleration(ComputationSpec(queries=100, order=1)) == 0.0


def test_path2_closed_forms():
    plan = planner.path2_itinerary(1.0, 4.0)
    assert plan.max_beta == pytest.approx(math.tanh(1.0), rel=1e-15)
    assert plan.coordinate_time == pytest.approx(4.0 * math.sinh(1.0), rel=1e-15)
    assert plan.max_distance == pytest.approx(2.0 * (math.cosh(1.0) - 1.0), rel=1e-14)
    assert plan.max_distance_single_burn == pytest.approx(math.cosh(2.0) - 1.0, rel=1e-14)
    assert [leg.proper_accel for leg in plan.legs] == [1.0, -1.0, -1.0, 1.0]
    assert list(plan.burn_pattern) == [1.0, -1.0, 1.0, -1.0]
    assert sum(leg.proper_duration for leg in plan.legs) == pytest.approx(4.0)


def test_plan_accel_reproduces_workload():
    spec = ComputationSpec(queries=100, order=2)
    plan = planner.plan_accel(spec)
    assert plan.accel == pytest.approx(4.0 * planner.solve_acceleration(spec), rel=1e-15)
    assert plan.coupling_accel == pytest.approx(plan.accel / 4.0)
    assert plan.proper_time == pytest.approx(10.0, rel=1e-12)
    assert plan.coordinate_time == pytest.approx(100.0, rel=1e-11)
    assert plan.to_dict()["spec"]["queries"] == 100
    with pytest.raises(DomainError):
        planner.plan_accel(ComputationSpec(queries=100, order=1))


def test_photon_rocket_conservation():
    for a, tau in ((1.0, 0.5), (0.2, 30.0), (3.0, 2.0)):
        fuel = planner.fuel_single_leg(a, tau=tau, m0=2.0)
        assert fuel.initial_fuel_mass == pytest.approx(2.0 * math.expm1(a * tau), rel=1e-12)
        assert fuel.energy_residual() <= 1e-12
        assert fuel.momentum_residual() <= 1e-12


def test_fuel_scales_linearly_with_query_count():
    ratios = []
    for exponent in (3, 4, 5, 6):
        N = 10.0 ** exponent
        ratios.append(planner.fuel_single_leg(1.0, t=N).initial_fuel_mass / (2.0 * N))
    assert 0.9999 <= ratios[-1] <= 1.0001
    assert all(b > a for a, b in zip(ratios, ratios[1:]))
    assert all(r < 1.0 for r in ratios)


def test_huge_coordinate_time_stays_finite():
    maps = planner.time_maps(1.0, t=1e160)
    assert math.isfinite(maps.d)
    assert maps.d == pytest.approx(1e160, rel=1e-12)
    assert maps.tau == pytest.approx(math.log(2e160), rel=1e-12)
    fuel = planner.fuel_single_leg(1.0, t=1e160)
    assert math.isfinite(fuel.initial_fuel_mass)
    assert fuel.initial_fuel_mass == pytest.approx(2e160, rel=1e-12)


def test_fuel_needs_exactly_one_duration():
    with pytest.raises(DomainError):
        planner.fuel_single_leg(1.0)
    with pytest.raises(DomainError):
        planner.fuel_single_leg(1.0, tau=1.0, t=1.0)


def test_full_path_fuel_compounds_over_legs():
    g, T = 1.0, 4.0
    plan = planner.path2_itinerary(g, T)
    assert plan.fuel_full_path == pytest.approx(math.expm1(4.0), rel=1e-14)
    # compounding: (1 + M_leg)^4 - 1 for unit payload
    assert plan.fuel_full_path == pytest.approx((1.0 + plan.fuel_single_leg) ** 4 - 1.0, rel=1e-12)
    assert plan.fuel_per_leg_sum == pytest.approx(4.0 * plan.fuel_single_leg)
    assert plan.fuel_full_path > plan.fuel_per_leg_sum


def test_fuel_displacement_form():
    a, tau = 1.0, 2.0
    d = planner.time_maps(a, tau=tau).d
    forms = planner.fuel_d_form_erratum(a, d)
    assert forms["consistent"] == pytest.approx(math.expm1(a * tau), rel=1e-12)
    assert forms["printed"] != pytest.approx(forms["consistent"], rel=1e-3)
    assert math.isnan(planner.fuel_d_form_erratum(1.0, 0.5)["printed"])


def test_gravitational_rate_in_weak_field():
    rate = planner.gravitational_rate(9.81, 1000.0)
    shift = planner.gravitational_shift(9.81, 1000.0)
    assert shift == pytest.approx(9.81 * 1000.0 / 299792458.0 ** 2, rel=1e-14)
    assert shift == pytest.approx(1.0916e-13, rel=1e-3)
    assert rate == 1.0 - shift
    with pytest.raises(WeakFieldError, match="outside weak-field regime"):
        planner.gravitational_rate(1e15, 1e3)
