import argparse
import logging
import os
import sys
from pathlib import Path

# Añadir la raíz del proyecto al PYTHONPATH
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from config import SCHEMA, TOOL_VERSION, load_config_file, resolve_config
from core.errors import ConfigError
from core.types import StateVector
from controllers.params import BarrierKind, BarrierSpec
from experiments.export import RunManifest, export_csv, load_manifest, write_frame, write_manifest, envelope_frame
from experiments.factory import (build_arps_params, build_controller, build_disturbance, build_plant,
                                 build_sigma0, build_sim_config)
from experiments.plots import PlotKind, export_svg
from experiments.scenarios import ScenarioSettings, run_scenario1, run_scenario2
from experiments.store import create_schema, make_engine, make_session_factory, save_scenario, save_sweep
from experiments.sweep import SWEEP_ARPS, ControllerKind, SweepGrid, SweepSettings, ci_grid, dense_grid, run_sweep
from integrator.euler import simulate
from plants.assumptions import check_assumptions, default_sigma_grid, default_t_grid
from timescale_oracle.equivalence import run_oracle
from timescale_oracle.scaling import ScaleMap, tau_of_t

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_SIMULATION = 3
EXIT_IO = 4
EXIT_VERIFICATION = 5

REFERENCE_DT = 1e-6
SAMPLE_PERIOD = 1e-4

GLOBAL_KEYS = ("sim.dt", "sim.stride", "store.url")
SIMULATE_KEYS = tuple(k for k in SCHEMA if k not in GLOBAL_KEYS and k != "sim.dtau")
VERIFY_KEYS = ("plant.name", "disturbance.rho", "sim.sigma0_n", "sim.sigma0_b", "controller.alpha",
               "controller.T_c", "controller.beta0", "sim.dtau")


def configure_logging(verbose: bool = False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s [%(levelname)s] %(message)s",
        handlers=[
            logging.FileHandler("experiments.log"),  # Log a archivo
            logging.StreamHandler()  # Log a consola
        ]
    )


def fmt(value) -> str:
    """17 cifras significativas; '-' si no hay valor."""
    return "-" if value is None else f"{value:.17g}"


def _add_schema_flags(parser: argparse.ArgumentParser, keys):
    for key in keys:
        spec = SCHEMA[key]
        parser.add_argument(spec.flag, dest=key, default=None, metavar="VALUE",
                            help=f"{spec.help} [{key}]")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=None, help="documento key=value con la configuración")
    common.add_argument("--out", default=None, help="directorio de salida (por defecto out/<comando>)")
    _add_schema_flags(common, GLOBAL_KEYS)
    common.add_argument("--dense", action="store_true", help="malla completa de barrido / ejecución completa")
    common.add_argument("--paper-step", action="store_true", help=f"dt = {REFERENCE_DT:g} en lugar del paso de escritorio")
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1, help="procesos para el barrido")
    common.add_argument("--verbose", action="store_true", help="log en nivel DEBUG")
    return common


def _float_list(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip()]


def _int_list(text: str) -> list[int]:
    return [int(v) for v in text.split(",") if v.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="run_experiments",
        description="Simulación de control por modos deslizantes con fase de alcance uniforme y barrera.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", parents=[common], help="una simulación o un escenario de referencia")
    sim.add_argument("--scenario", type=int, choices=[1, 2], default=None,
                     help="escenario 1 (perturbación decreciente) o 2 (creciente)")
    _add_schema_flags(sim, SIMULATE_KEYS)

    sweep = sub.add_parser("sweep", parents=[common], help="barrido de tiempos de alcance sobre (ρ, n, b)")
    sweep.add_argument("--controller", choices=[k.value for k in ControllerKind], default="arps",
                       help="ley de control del barrido")
    sweep.add_argument("--rho-values", type=_float_list, default=None, help="lista ρ separada por comas")
    sweep.add_argument("--n-values", type=_int_list, default=None, help="lista n separada por comas")
    sweep.add_argument("--b-values", type=_float_list, default=None, help="lista b separada por comas")
    sweep.add_argument("--wide", action="store_true", help="permite valores fuera de los rangos de referencia")

    verify = sub.add_parser("verify", parents=[common], help="comprueba las hipótesis y el oráculo de escala")
    verify.add_argument("--oracle", action="store_true", help="compara la corrida directa con la escalada")
    _add_schema_flags(verify, VERIFY_KEYS)

    replay = sub.add_parser("replay", help="repite una ejecución a partir de su manifest.json")
    replay.add_argument("manifest", help="ruta del manifest.json")
    return parser


def resolve_from_args(args: argparse.Namespace) -> tuple[dict, set]:
    """Devuelve la configuración resuelta y las claves fijadas explícitamente (archivo o flags)."""
    file_values = load_config_file(args.config) if args.config else {}
    overrides = {k: v for k, v in vars(args).items() if k in SCHEMA and v is not None}
    if args.paper_step and "sim.dt" not in overrides and "sim.dt" not in file_values:
        overrides["sim.dt"] = REFERENCE_DT
    return resolve_config(file_values, overrides), set(file_values) | set(overrides)


def _out_dir(args) -> Path:
    return Path(args.out) if args.out else Path("out") / args.command


def _write_manifest(args, argv, cfg, outputs) -> Path:
    out = _out_dir(args)
    manifest = RunManifest(
        command=args.command,
        argv=list(argv),
        tool_version=TOOL_VERSION,
        config_path=args.config,
        resolved_config=cfg,
        outputs=sorted(str(Path(p).relative_to(out)) for p in outputs),
    )
    return write_manifest(manifest, out / "manifest.json")


def _open_store(cfg: dict):
    url = cfg["store.url"]
    if not url:
        return None
    engine = make_engine(url)
    create_schema(engine)
    return make_session_factory(engine)()


def _series_plots(result, out: Path, stem: str, **context) -> list[Path]:
    return [
        export_svg(result, PlotKind.NORM_TRACE, out / f"{stem}_norm.svg", **context),
        export_svg(result, PlotKind.GAIN_TRACE, out / f"{stem}_gain.svg", **context),
        export_svg(result, PlotKind.INPUT_TRACE, out / f"{stem}_input.svg", **context),
    ]


def cmd_simulate(args, argv) -> int:
    cfg, explicit = resolve_from_args(args)
    out = _out_dir(args)
    if args.scenario is not None:
        return _simulate_scenario(args, argv, cfg, explicit, out)

    plant = build_plant(cfg)
    controller = build_controller(cfg)
    disturbance = build_disturbance(cfg)
    sim_cfg = build_sim_config(cfg)
    result = simulate(plant, controller, StateVector(build_sigma0(cfg)), sim_cfg, disturbance)

    outputs = [export_csv(result.series, out / "series.csv")]
    T_c = cfg["controller.T_c"] if cfg["controller.kind"] in ("arps", "hybrid") else None
    outputs += _series_plots(result.series, out, "series", epsilon=cfg["controller.epsilon"], T_c=T_c,
                             t_bar=result.t_bar)
    _write_manifest(args, argv, cfg, outputs)

    print(f"status={result.status.value} t_bar={fmt(result.t_bar)} samples={len(result.series)}")
    if result.status.is_fault:
        print(f"fallo: {result.message}", file=sys.stderr)
        return EXIT_SIMULATION
    return EXIT_OK


def _simulate_scenario(args, argv, cfg, explicit, out) -> int:
    dt = cfg["sim.dt"]
    stride = cfg["sim.stride"] if "sim.stride" in explicit else max(1, int(round(SAMPLE_PERIOD / dt)))
    t_end = cfg["sim.t_end"] if "sim.t_end" in explicit else None
    settings = ScenarioSettings(dt=dt, record_stride=stride, t_end=t_end)
    if "controller.barrier" in explicit or "controller.epsilon" in explicit:
        settings = ScenarioSettings(dt=dt, record_stride=stride, t_end=t_end, barrier=BarrierSpec(
            kind=BarrierKind(cfg["controller.barrier"]), epsilon=cfg["controller.epsilon"],
            beta_bar=cfg["controller.beta_bar"]))

    reports = run_scenario1(settings) if args.scenario == 1 else [run_scenario2(settings)]
    outputs = []
    for report in reports:
        stem = f"scenario{report.label}"
        outputs.append(export_csv(report, out / f"{stem}.csv"))
        outputs.append(write_frame(envelope_frame(report), out / f"{stem}_envelope.csv"))
        outputs += _series_plots(report, out, stem)
    cfg = dict(cfg, **{"sim.dt": dt, "sim.stride": stride})
    _write_manifest(args, argv, cfg, outputs)

    session = _open_store(cfg)
    if session is not None:
        try:
            for report in reports:
                save_scenario(session, report, dt, TOOL_VERSION)
        finally:
            session.close()

    ok = True
    for report in reports:
        print(f"scenario={report.label} sigma0_norm={fmt(report.sigma0_norm)} status={report.result.status.value} "
              f"t_bar={fmt(report.t_bar)} max_norm_after_switch={fmt(report.max_norm_after_switch)} "
              f"passed={report.passed}")
        ok = ok and report.passed
    return EXIT_OK if ok else EXIT_SIMULATION


def _sweep_grid(args) -> SweepGrid:
    base = dense_grid() if args.dense else ci_grid()
    if args.rho_values is None and args.n_values is None and args.b_values is None:
        return base
    return SweepGrid(
        rho_values=tuple(base.rho_values if args.rho_values is None else args.rho_values),
        n_values=tuple(base.n_values if args.n_values is None else args.n_values),
        b_values=tuple(base.b_values if args.b_values is None else args.b_values),
        allow_wide=args.wide,
    )


def cmd_sweep(args, argv) -> int:
    cfg, explicit = resolve_from_args(args)
    out = _out_dir(args)
    kind = ControllerKind(args.controller)
    settings = SweepSettings(dt=cfg["sim.dt"] if "sim.dt" in explicit else None)
    dt = settings.step_for(kind)
    grid = _sweep_grid(args)
    result = run_sweep(kind, grid, settings, workers=args.workers)

    T_c = SWEEP_ARPS.T_c if kind is ControllerKind.ARPS else None
    outputs = [
        export_csv(result, out / f"sweep_{kind.value}.csv"),
        export_svg(result, PlotKind.RT_SURFACE, out / f"rt_surface_{kind.value}.svg", T_c=T_c),
    ]
    cfg = dict(cfg, **{"sim.dt": dt})
    _write_manifest(args, argv, cfg, outputs)

    session = _open_store(cfg)
    if session is not None:
        try:
            run_id = save_sweep(session, result, dt, TOOL_VERSION)
            print(f"sweep_run_id={run_id}")
        finally:
            session.close()

    print(f"controller={kind.value} points={len(result)} all_reached={result.all_reached} "
          f"min_t_bar={fmt(result.min_t_bar)} max_t_bar={fmt(result.max_t_bar)}")
    return EXIT_OK if result.all_reached else EXIT_SIMULATION


def cmd_verify(args, argv) -> int:
    cfg, explicit = resolve_from_args(args)
    out = _out_dir(args)
    plant = build_plant(cfg)
    disturbance = build_disturbance(cfg)
    report = check_assumptions(plant, disturbance, default_t_grid(), default_sigma_grid())
    print(f"plant={plant.name} rank_ok={report.rank_ok} q={fmt(report.q_est)} q1={fmt(report.q1_est)} "
          f"d={fmt(report.d_est)} grid={report.grid_size} passed={report.passed}")
    ok = report.passed
    outputs = []

    if args.oracle:
        arps = build_arps_params(cfg)
        direct_dt = cfg["sim.dt"] if "sim.dt" in explicit else REFERENCE_DT
        scale = ScaleMap(arps.alpha, arps.T_c)
        tau_max = None if args.dense else tau_of_t(0.9 * arps.T_c, scale)
        oracle = run_oracle(plant, arps, build_sigma0(cfg), disturbance, direct_dt=direct_dt,
                            dtau=cfg["sim.dtau"], tau_max=tau_max)
        outputs.append(export_csv(oracle.scaled, out / "scaled.csv"))
        outputs.append(export_csv(oracle.direct.series, out / "direct.csv"))
        lyapunov_ok = oracle.lyapunov is None or oracle.lyapunov.nonincreasing()
        print(f"oracle_deviation={fmt(oracle.deviation)} compared={oracle.compared_points} "
              f"equivalent={oracle.equivalent} lyapunov_nonincreasing={lyapunov_ok} "
              f"vanishing_ok={oracle.vanishing_ok}")
        ok = ok and oracle.equivalent and lyapunov_ok

    _write_manifest(args, argv, cfg, outputs)
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_replay(args, argv) -> int:
    manifest = load_manifest(args.manifest)
    if manifest.tool_version != TOOL_VERSION:
        logger.warning(f"El manifiesto es de la versión {manifest.tool_version}, esta es {TOOL_VERSION}")
    logger.info(f"Repitiendo '{manifest.command}' con argumentos {manifest.argv}")
    return main(manifest.argv)


COMMANDS = {
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "replay": cmd_replay,
}


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    configure_logging(getattr(args, "verbose", False))
    logger.info(f"========= run_experiments {TOOL_VERSION}: {args.command} =========")
    try:
        return COMMANDS[args.command](args, argv)
    except (ConfigError, ValueError) as e:
        logger.error(f"Configuración inválida: {e}")
        print(f"error de configuración: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as e:
        logger.critical(f"Error de E/S: {e}", exc_info=True)
        print(f"error de E/S: {e}", file=sys.stderr)
        return EXIT_IO
    except Exception as e:
        logger.critical(f"Error CRÍTICO durante la ejecución: {e}", exc_info=True)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
