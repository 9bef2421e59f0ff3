from .sweep import (ControllerKind, PointStatus, SweepEntry, SweepGrid, SweepResult, SweepSettings, ci_grid,
                    dense_grid, run_point, run_sweep, sigma0_from)
from .scenarios import (ScenarioReport, ScenarioSettings, SegmentStats, disturbance_envelope, run_scenario,
                        run_scenario1, run_scenario2)
from .export import RunManifest, export_csv, load_manifest, write_manifest
from .plots import PlotKind, export_svg

__all__ = [
    "ControllerKind",
    "PointStatus",
    "SweepEntry",
    "SweepGrid",
    "SweepResult",
    "SweepSettings",
    "ci_grid",
    "dense_grid",
    "run_point",
    "run_sweep",
    "sigma0_from",
    "ScenarioReport",
    "ScenarioSettings",
    "SegmentStats",
    "disturbance_envelope",
    "run_scenario",
    "run_scenario1",
    "run_scenario2",
    "RunManifest",
    "export_csv",
    "load_manifest",
    "write_manifest",
    "PlotKind",
    "export_svg",
]
