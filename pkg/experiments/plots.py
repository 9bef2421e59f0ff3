import enum
import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from experiments.scenarios import ScenarioReport, disturbance_envelope  # noqa: E402
from experiments.sweep import SweepResult  # noqa: E402
from integrator.series import TimeSeries  # noqa: E402

logger = logging.getLogger(__name__)

# Texto como <text> y ids estables: el mismo resultado produce el mismo SVG.
plt.rcParams["svg.fonttype"] = "none"
plt.rcParams["svg.hashsalt"] = "arps-smc"


class PlotKind(enum.Enum):
    RT_SURFACE = "RTSurface"
    NORM_TRACE = "NormTrace"
    GAIN_TRACE = "GainTrace"
    INPUT_TRACE = "InputTrace"


def _series_context(result, epsilon, T_c, t_bar):
    if isinstance(result, ScenarioReport):
        return result.series, result.epsilon, result.T_c, result.t_bar, result
    if isinstance(result, TimeSeries):
        return result, epsilon, T_c, t_bar, None
    raise TypeError(f"Se esperaba una serie temporal o un escenario, recibido {type(result).__name__}")


def _plot_rt_surface(ax, result: SweepResult, T_c):
    norms = [e.b * 10.0 ** e.n for e in result.entries if e.t_bar is not None]
    times = [e.t_bar for e in result.entries if e.t_bar is not None]
    rhos = [e.rho for e in result.entries if e.t_bar is not None]
    points = ax.scatter(norms, times, c=rhos, cmap="viridis", s=14, label="t_bar")
    if norms:
        plt.colorbar(points, ax=ax, label="rho")
    ax.set_xscale("log")
    ax.set_xlabel("‖σ0‖")
    ax.set_ylabel("t_bar [s]")
    ax.set_title(f"Tiempo de alcance ({result.controller_kind.value})")
    if T_c is not None:
        ax.axhline(T_c, color="black", linestyle="--", linewidth=1.0, label="T_c")


def _plot_trace(ax, kind: PlotKind, series: TimeSeries, epsilon, T_c, t_bar, report):
    if kind is PlotKind.NORM_TRACE:
        ax.plot(series.t, series.norm_sigma, linewidth=1.0, label="‖σ‖")
        ax.set_yscale("log")
        ax.set_ylabel("‖σ‖")
        if epsilon is not None:
            ax.axhline(epsilon, color="red", linestyle="--", linewidth=1.0, label="ε")
            ax.axhline(0.5 * epsilon, color="orange", linestyle=":", linewidth=1.0, label="ε/2")
    elif kind is PlotKind.GAIN_TRACE:
        ax.plot(series.t, series.Lambda, linewidth=1.0, label="Λ")
        ax.plot(series.t, series.norm_f, linestyle="--", linewidth=0.8, label="‖f‖")
        if report is not None and report.schedule is not None:
            ax.plot(series.t, disturbance_envelope(series, report.schedule), linestyle=":", linewidth=0.8,
                    label="cota ‖f‖")
        ax.set_yscale("symlog")
        ax.set_ylabel("Λ")
    else:
        ax.plot(series.t, series.norm_nu, linewidth=1.0, label="‖ν‖")
        ax.set_ylabel("‖ν‖")
    if T_c is not None:
        ax.axvline(T_c, color="black", linestyle="--", linewidth=1.0, label="T_c")
    if t_bar is not None:
        ax.axvline(t_bar, color="gray", linestyle=":", linewidth=1.0, label="t_bar")
    ax.set_xlabel("t [s]")


def export_svg(result, kind: PlotKind, path, epsilon: float | None = None, T_c: float | None = None,
               t_bar: float | None = None) -> Path:
    """
    RTSurface dibuja un barrido (t_bar frente a ‖σ0‖); los demás tipos una
    trayectoria. ε, ε/2 y T_c se dibujan como rectas de referencia.
    """
    kind = PlotKind(kind)
    path = Path(path)
    fig, ax = plt.subplots(figsize=(8, 5))
    try:
        if kind is PlotKind.RT_SURFACE:
            if not isinstance(result, SweepResult):
                raise TypeError(f"RTSurface necesita un barrido, recibido {type(result).__name__}")
            _plot_rt_surface(ax, result, T_c)
        else:
            series, epsilon, T_c, t_bar, report = _series_context(result, epsilon, T_c, t_bar)
            _plot_trace(ax, kind, series, epsilon, T_c, t_bar, report)
        ax.grid(True, linewidth=0.3)
        ax.legend(loc="best")
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, format="svg", metadata={"Date": None})
    except OSError as e:
        raise OSError(f"No se pudo escribir '{path}': {e}") from e
    finally:
        plt.close(fig)
    logger.info(f"SVG {kind.value} escrito en {path}")
    return path
