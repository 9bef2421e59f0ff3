import math

import numpy as np
import pytest

from plants import (MotivatingPlant, RevisitedPlant, RhoSchedule, check_assumptions, default_sigma_grid,
                    default_t_grid, make_plant, motivating_H)
from plants.disturbance import DisturbanceParams
from plants.motivating import motivating_f


def test_rho_schedule_left_closed_segments():
    schedule = RhoSchedule.parse("0:80,0.2:50,0.4:10")
    assert schedule(0.0) == 80.0
    assert schedule(0.19999) == 80.0
    assert schedule(0.2) == 50.0
    assert schedule(0.4) == 10.0
    assert schedule(100.0) == 10.0
    assert schedule.segment_index(0.3) == 1


def test_rho_schedule_format_parse_identity():
    schedule = RhoSchedule((0.0, 3.0, 6.0), (10.0, 100.0, 200.0))
    assert RhoSchedule.parse(schedule.format()) == schedule


@pytest.mark.parametrize("text", ["0.1:5", "0:1,0:2", "0:1,0.5:-3", "0:1,x"])
def test_rho_schedule_rejects_invalid(text):
    with pytest.raises(ValueError):
        RhoSchedule.parse(text)


def test_disturbance_rejects_negative_rho():
    with pytest.raises(ValueError):
        DisturbanceParams(rho=-1.0)


def test_disturbance_vanishes_with_rho_zero():
    sigma = np.array([0.3, -0.7])
    f = motivating_f(0.37, sigma, DisturbanceParams(rho=0.0))
    np.testing.assert_array_equal(f, np.zeros(2))


def test_disturbance_linear_in_rho():
    sigma = np.array([0.3, -0.7])
    f1 = motivating_f(0.37, sigma, DisturbanceParams(rho=1.0))
    f5 = motivating_f(0.37, sigma, DisturbanceParams(rho=5.0))
    np.testing.assert_allclose(f5, 5.0 * f1, rtol=1e-14)


def test_offsets_per_rho_keeps_constant_terms():
    sigma = np.array([0.0, 0.0])
    p = DisturbanceParams(a1=1.0, b1=1.2, rho_schedule=RhoSchedule((0.0,), (80.0,)), offsets_per_rho=True)
    f = motivating_f(0.0, sigma, p)
    # En t=0: osc1 = 0.01, osc2 = 0.02.
    np.testing.assert_allclose(f, [1.0 + 80.0 * 0.01, 1.2 + 80.0 * 0.02])


def test_motivating_H_lower_left_is_zero():
    H = motivating_H(1.3, np.array([0.4, -2.0]))
    assert H[1, 0] == 0.0


def test_motivating_plant_closed_loop_is_H():
    plant = MotivatingPlant()
    sigma = np.array([0.4, -2.0])
    np.testing.assert_allclose(plant.eval_G(0.5, sigma) @ (np.eye(2) + plant.eval_dg(0.5, sigma)),
                               motivating_H(0.5, sigma))


def test_revisited_delta_G_structure():
    plant = RevisitedPlant()
    sigma = np.array([0.0, 0.0])
    t = 0.0
    G = plant.eval_G(t, sigma)
    delta_G = G @ plant.eval_dg(t, sigma) @ np.linalg.inv(G)
    a = 0.5
    c = 0.2
    np.testing.assert_allclose(delta_G, [[a, a - c / 3.0], [0.0, c]], atol=1e-15)


def test_make_plant():
    assert make_plant("revisited").name == "revisited"
    with pytest.raises(ValueError):
        make_plant("pendulum")


@pytest.mark.parametrize("plant", [MotivatingPlant(), RevisitedPlant()])
def test_assumptions_hold_on_grid(plant):
    report = check_assumptions(plant, DisturbanceParams(rho=100.0), default_t_grid(points=11),
                               default_sigma_grid(points=9))
    assert report.rank_ok
    assert report.q_est < 1.0
    assert report.q1_est > -1.0
    assert report.passed


def test_revisited_worst_case_constants():
    report = check_assumptions(RevisitedPlant(), DisturbanceParams(rho=0.0), default_t_grid(points=41),
                               default_sigma_grid(points=41))
    assert report.q_est == pytest.approx(0.9667, abs=5e-3)
    assert report.q1_est == pytest.approx(-0.6236, abs=1e-2)
    assert report.d_est == 0.0


def test_disturbance_bound_is_conservative():
    rho = 1000.0
    report = check_assumptions(RevisitedPlant(), DisturbanceParams(rho=rho), default_t_grid(points=21),
                               default_sigma_grid(points=11))
    assert 1.5 * rho <= report.d_est <= 2.63 * rho


def test_assumptions_reject_empty_grid():
    with pytest.raises(ValueError):
        check_assumptions(RevisitedPlant(), DisturbanceParams(), [], default_sigma_grid())


class _RankDeficientPlant:
    name = "degenerate"
    m = 2

    def eval_G(self, t, sigma):
        return np.array([[1.0, 1.0], [1.0, 1.0]])

    def eval_dg(self, t, sigma):
        return np.zeros((2, 2))

    def eval_f(self, t, sigma, p):
        return np.zeros(2)


def test_rank_deficient_G_is_reported():
    report = check_assumptions(_RankDeficientPlant(), DisturbanceParams(), [0.0], [0.0, 1.0])
    assert not report.rank_ok
    assert not report.passed
    assert report.grid_size == 4
    assert math.isfinite(report.d_est)


def test_rank_deficient_everywhere_reports_nan_bounds():
    report = check_assumptions(_RankDeficientPlant(), DisturbanceParams(), [0.0, 1.0], [0.0, 1.0])
    assert math.isnan(report.q_est)
    assert math.isnan(report.q1_est)
    assert not report.passed


class _NominalPlant:
    """G de rango completo y Δg ≡ 0."""
    name = "nominal"
    m = 2

    def eval_G(self, t, sigma):
        return np.array([[2.0, -3.0], [0.0, 3.0]]) * (1.0 + 0.5 * math.cos(t))

    def eval_dg(self, t, sigma):
        return np.zeros((2, 2))

    def eval_f(self, t, sigma, p):
        return np.array([p.rho_at(t), 0.0])


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_zero_uncertainty_gives_zero_bounds(seed):
    rng = np.random.default_rng(seed)
    t_grid = np.sort(rng.uniform(0.0, 10.0, size=5))
    report = check_assumptions(_NominalPlant(), DisturbanceParams(rho=2.0), t_grid, default_sigma_grid(5))
    assert report.rank_ok
    assert report.q_est == 0.0
    assert report.q1_est == 0.0
    assert report.d_est == pytest.approx(2.0)
    assert report.passed
