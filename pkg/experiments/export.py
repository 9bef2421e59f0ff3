import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path

import pandas as pd

from experiments.scenarios import ScenarioReport, disturbance_envelope
from experiments.sweep import SweepResult
from integrator.series import TimeSeries
from timescale_oracle.scaled_sim import ScaledSeries

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
SWEEP_COLUMNS = ["rho", "n", "b", "t_bar", "status"]


def sweep_frame(result: SweepResult) -> pd.DataFrame:
    rows = [
        {"rho": e.rho, "n": e.n, "b": e.b, "t_bar": e.t_bar, "status": e.status.value}
        for e in result.entries
    ]
    frame = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    return frame.astype({"rho": float, "n": int, "b": float, "t_bar": float})


def envelope_frame(report: ScenarioReport) -> pd.DataFrame:
    series = report.series
    return pd.DataFrame({
        "t": series.t,
        "norm_f": series.norm_f,
        "envelope": disturbance_envelope(series, report.schedule),
    })


def _to_frame(result) -> pd.DataFrame:
    if isinstance(result, SweepResult):
        return sweep_frame(result)
    if isinstance(result, ScenarioReport):
        return result.series.to_frame()
    if isinstance(result, (TimeSeries, ScaledSeries)):
        return result.to_frame()
    if isinstance(result, pd.DataFrame):
        return result
    raise TypeError(f"No se sabe exportar a CSV un {type(result).__name__}")


def write_frame(frame: pd.DataFrame, path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    except OSError as e:
        raise OSError(f"No se pudo escribir '{path}': {e}") from e
    logger.info(f"CSV escrito en {path} ({len(frame)} filas)")
    return path


def export_csv(result, path) -> Path:
    """
    Serializa un barrido, una serie temporal, una serie escalada o un escenario.
    Los reales se escriben con 17 cifras significativas y t_bar ausente queda vacío.
    """
    return write_frame(_to_frame(result), path)


@dataclass
class RunManifest:
    command: str
    argv: list[str]
    tool_version: str
    config_path: str | None
    resolved_config: dict
    outputs: list[str] = field(default_factory=list)


def write_manifest(manifest: RunManifest, path) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(asdict(manifest), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    except OSError as e:
        raise OSError(f"No se pudo escribir '{path}': {e}") from e
    return path


def load_manifest(path) -> RunManifest:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise OSError(f"No se pudo leer '{path}': {e}") from e
    return RunManifest(**data)
