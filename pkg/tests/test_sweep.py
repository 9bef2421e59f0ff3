import numpy as np
import pytest

from experiments.sweep import (ARPS_SWEEP_DT, BASELINE_SWEEP_DT, ControllerKind, PointStatus, SweepGrid,
                               SweepSettings, ci_grid, dense_grid, run_point, run_sweep, sigma0_from)


def test_sigma0_direction_and_norm():
    sigma0 = sigma0_from(2, 3.0)
    assert np.linalg.norm(sigma0) == pytest.approx(300.0)
    assert sigma0[0] == pytest.approx(-sigma0[1])


def test_grid_sizes_and_order():
    assert len(ci_grid()) == 60
    assert len(dense_grid()) == 11 * 4 * 9
    grid = SweepGrid((0.0, 500.0), (1, 2), (1.0,))
    assert grid.points() == [(0.0, 1, 1.0), (0.0, 2, 1.0), (500.0, 1, 1.0), (500.0, 2, 1.0)]


@pytest.mark.parametrize("kwargs", [
    dict(rho_values=(), n_values=(1,), b_values=(1.0,)),
    dict(rho_values=(-1.0,), n_values=(1,), b_values=(1.0,)),
    dict(rho_values=(0.0,), n_values=(5,), b_values=(1.0,)),
    dict(rho_values=(0.0,), n_values=(1,), b_values=(10.0,)),
])
def test_grid_validation(kwargs):
    with pytest.raises(ValueError):
        SweepGrid(**kwargs)


def test_wide_grid_allows_out_of_range_values():
    grid = SweepGrid((0.0,), (0,), (0.5,), allow_wide=True)
    assert len(grid) == 1


def test_easiest_arps_point_is_reached():
    entry = run_point(ControllerKind.ARPS, 0.0, 1, 1.0, SweepSettings(dt=1e-5))
    assert entry.status is PointStatus.REACHED
    assert entry.t_bar < 0.1


def test_arps_sweep_uniform_bound_on_small_grid():
    grid = SweepGrid((0.0, 100.0), (1, 4), (1.0, 9.0))
    result = run_sweep(ControllerKind.ARPS, grid, SweepSettings(dt=1e-5))
    assert len(result) == 8
    assert result.all_reached
    assert result.max_t_bar < 0.1
    assert [(e.rho, e.n, e.b) for e in result.entries] == grid.points()


def test_baseline_sweep_reaches_without_disturbance():
    grid = SweepGrid((0.0,), (1,), (1.0, 5.0))
    result = run_sweep(ControllerKind.BASELINE, grid, SweepSettings(dt=1e-5))
    assert result.all_reached
    assert all(0.0 < e.t_bar < 2.0 for e in result.entries)


def test_sweep_is_deterministic_and_order_independent_of_workers():
    grid = SweepGrid((0.0, 100.0), (1,), (1.0,))
    settings = SweepSettings(dt=1e-5)
    serial = run_sweep(ControllerKind.ARPS, grid, settings, workers=1)
    again = run_sweep(ControllerKind.ARPS, grid, settings, workers=1)
    parallel = run_sweep(ControllerKind.ARPS, grid, settings, workers=2)
    assert serial == again
    assert serial == parallel


def test_sweep_lookup():
    grid = SweepGrid((0.0,), (1,), (1.0,))
    result = run_sweep(ControllerKind.ARPS, grid, SweepSettings(dt=1e-5))
    assert result.lookup(0.0, 1, 1.0) is result.entries[0]
    with pytest.raises(KeyError):
        result.lookup(1.0, 1, 1.0)


@pytest.mark.slow
def test_arps_uniformity_full_grid_reference_step():
    result = run_sweep(ControllerKind.ARPS, ci_grid(), SweepSettings(dt=1e-6), workers=4)
    assert len(result) == 60
    assert result.all_reached
    assert result.max_t_bar < 0.1


def test_default_step_depends_on_controller():
    assert SweepSettings().step_for(ControllerKind.ARPS) == ARPS_SWEEP_DT
    assert SweepSettings().step_for(ControllerKind.BASELINE) == BASELINE_SWEEP_DT
    assert SweepSettings(dt=2e-5).step_for(ControllerKind.BASELINE) == 2e-5


def test_baseline_farthest_point_reached_with_default_step():
    entry = run_point(ControllerKind.BASELINE, 1000.0, 4, 9.0, SweepSettings())
    assert entry.status is PointStatus.REACHED
    assert 0.0 < entry.t_bar < 2.0


def test_step_robustness_disturbed_arps_point():
    coarse = run_point(ControllerKind.ARPS, 1000.0, 4, 9.0, SweepSettings(dt=1e-5))
    fine = run_point(ControllerKind.ARPS, 1000.0, 4, 9.0, SweepSettings(dt=5e-6))
    assert coarse.status is PointStatus.REACHED
    assert fine.status is PointStatus.REACHED
    assert abs(coarse.t_bar - fine.t_bar) < 2.0 * 1e-5


@pytest.mark.slow
def test_baseline_non_uniformity_default_step():
    result = run_sweep(ControllerKind.BASELINE, ci_grid(), SweepSettings(), workers=4)
    assert result.all_reached
    for rho in (250.0, 500.0, 750.0, 1000.0):
        for b in (1.0, 5.0, 9.0):
            times = [result.lookup(rho, n, b).t_bar for n in (1, 2, 3, 4)]
            assert max(times) > min(times)
    assert result.max_t_bar >= 2.0 * result.min_t_bar
