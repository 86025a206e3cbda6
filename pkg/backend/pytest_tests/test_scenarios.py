import math

import pytest

from backend.app.models.errors import DomainError
from backend.app.models.scenario import Winner
from backend.app.services.scenario_service import ScenarioService


service = ScenarioService()


def test_race_third_order_beats_grover():
    report = service.race_grover(10**6, 3.0)
    assert report.classical_proper_runtime == pytest.approx(100.0, rel=1e-12)
    assert report.quantum_runtime == 1000
    assert report.classical_energy == pytest.approx(1e4, rel=1e-12)
    assert report.grover_equivalent_energy == 1000.0
    assert report.winner is Winner.RELATIVISTIC_CLASSICAL
    assert report.to_dict()["winner"] == "relativistic_classical"


def test_race_second_order_ties_with_equal_energy():
    report = service.race_grover(10**6, 2.0)
    assert report.winner is Winner.TIE
    assert report.classical_proper_runtime == 1000.0
    assert report.classical_energy == report.grover_equivalent_energy == 1000.0


def test_race_classical_limit_loses():
    report = service.race_grover(10**6, 1.0)
    assert report.classical_proper_runtime == pytest.approx(1e6, rel=1e-12)
    assert report.winner is Winner.QUANTUM


@pytest.mark.parametrize("queries", [4, 9, 100, 10**4, 10**6, 49 * 10**6])
@pytest.mark.parametrize("n", [1.0, 1.5, 1.99, 2.0, 2.01, 3.0, 10.0])
def test_race_verdict_follows_order_threshold(queries, n):
    winner = service.race_grover(queries, n).winner
    if n > 2.0:
        assert winner is Winner.RELATIVISTIC_CLASSICAL
    elif n == 2.0:
        assert winner is Winner.TIE
    else:
        assert winner is Winner.QUANTUM


def test_race_energy_increases_with_order():
    energies = [service.race_grover(10**4, n).classical_energy for n in (1.0, 1.5, 2.0, 3.0, 8.0)]
    assert all(b > a for a, b in zip(energies, energies[1:]))


def test_race_smoothing_splits_time_and_energy_over_two_legs():
    report = service.race_grover(10**6, 3.0, m0=5.0)
    assert sum(report.leg_proper_durations) == pytest.approx(report.classical_proper_runtime)
    assert report.leg_energy == pytest.approx(report.classical_energy / 2.0)
    assert report.rest_mass == 5.0


def test_race_quantum_runtime_rounds_up():
    assert service.race_grover(10, 1.0).quantum_runtime == 4
    assert service.race_grover(1, 1.0).quantum_runtime == 1


def test_race_rejects_invalid_inputs():
    with pytest.raises(DomainError, match="order must be ≥ 1"):
        service.race_grover(100, 0.5)
    with pytest.raises(DomainError, match="queries must be ≥ 1"):
        service.race_grover(0, 2.0)


def test_lhc_scenario_constants():
    lhc = service.lhc_scenario()
    exact_gamma = 1.0 / math.sqrt(9e-9 * (2.0 - 9e-9))
    assert lhc.gamma == pytest.approx(exact_gamma, rel=1e-12)
    assert lhc.gamma == pytest.approx(7453.56, rel=1e-3)
    assert lhc.lab_time_per_lap == pytest.approx(8.89246e-5, rel=1e-4)
    assert lhc.proper_time_per_lap == pytest.approx(1.19305e-8, rel=1e-4)
    assert lhc.proper_centripetal_accel == pytest.approx(1.177e21, rel=1e-3)
    assert lhc.proper_centripetal_accel == pytest.approx(lhc.gamma ** 2 * lhc.classical_centripetal_accel)
    assert lhc.radius == pytest.approx(26659.0 / (2 * math.pi))


def test_lhc_quoted_order_reported_not_reproduced():
    lhc = service.lhc_scenario()
    assert lhc.quoted_order == 2.99
    assert lhc.order_reproduced is False
    assert lhc.computed_order == pytest.approx(2.0632, abs=1e-3)
    assert lhc.runtime_order == pytest.approx(2.0619, abs=1e-3)
    data = lhc.to_dict()
    assert data["quoted_order"] == 2.99
    assert any("not reproduced" in note for note in data["notes"])


def test_sweep_row_for_hundred_queries_second_order():
    rows = service.sweep_table([100], [2.0])
    assert len(rows) == 1
    row = rows[0]
    assert row.error is None
    assert row.proper_time == pytest.approx(10.0, rel=1e-12)
    assert row.beta == pytest.approx(0.9949874, rel=1e-7)
    assert row.energy_ratio == pytest.approx(10.0, rel=1e-12)
    assert row.distance == pytest.approx(99.49874, rel=1e-6)
    assert row.a_solved == pytest.approx(0.449987, abs=1e-5)


def test_sweep_boundary_rows_carry_flags_without_aborting():
    rows = service.sweep_table([1, 100], [1.0, 2.0])
    assert [(r.queries, r.order) for r in rows] == [(1, 1.0), (1, 2.0), (100, 1.0), (100, 2.0)]
    assert rows[0].error is None and rows[0].beta == 0.0 and rows[0].a_solved is None
    assert "sub-unit time budget" in rows[1].error
    assert rows[2].a_solved is None
    assert rows[3].error is None


def test_sweep_keeps_log_space_energy_when_velocity_saturates():
    rows = service.sweep_table([10**12], [4.0, 2.0])
    # gamma = 10^9 needs 1 - beta below the cap; energy is still reported
    assert rows[0].energy_ratio == pytest.approx(1e9, rel=1e-12)
    assert rows[0].beta is None
    assert "exceeds cap" in rows[0].error
    assert rows[1].error is None


def test_sweep_frame_matches_table():
    frame = service.sweep_frame([10, 100], [1.0, 2.0, 3.0], m0=2.0)
    assert list(frame.columns[:3]) == ["queries", "order", "proper_time"]
    assert len(frame) == 6
    assert frame["energy"].iloc[-1] == pytest.approx(2.0 * frame["energy_ratio"].iloc[-1])


def test_race_beyond_float_range_uses_log_space():
    report = service.race_grover(10**400, 3.0)
    assert report.quantum_runtime == 10**200
    assert report.classical_proper_runtime == pytest.approx(10.0 ** (400 / 3), rel=1e-10)
    assert report.classical_energy == pytest.approx(10.0 ** (800 / 3), rel=1e-10)
    assert report.grover_equivalent_energy == pytest.approx(1e200, rel=1e-12)
    assert report.winner is Winner.RELATIVISTIC_CLASSICAL


def test_race_overflowing_runtime_is_a_domain_error():
    with pytest.raises(DomainError, match="float range"):
        service.race_grover(10**800, 1.0)


@pytest.mark.parametrize(
    "n,expected",
    [(1.0, Winner.QUANTUM), (1.9, Winner.RELATIVISTIC_CLASSICAL), (2.0, Winner.RELATIVISTIC_CLASSICAL), (3.0, Winner.RELATIVISTIC_CLASSICAL)],
)
def test_race_non_square_queries_compare_against_rounded_up_quantum_runtime(n, expected):
    # ceil(sqrt(5)) = 3 query times; 5^(1/1.9) = 2.33 and sqrt(5) = 2.24 both finish first
    report = service.race_grover(5, n)
    assert report.quantum_runtime == 3
    assert report.winner is expected


def test_sweep_row_flags_workload_beyond_float_range():
    row = service.sweep_table([10**400], [2.0])[0]
    assert "float range" in row.error
    assert row.beta is None
