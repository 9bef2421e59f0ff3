import logging

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.exc import IntegrityError
from sqlalchemy.orm import Session, selectinload, sessionmaker

from experiments.scenarios import ScenarioReport
from experiments.sweep import ControllerKind, PointStatus, SweepEntry, SweepResult
from models_results import ControllerKindEnum, PointStatusEnum, ResultsBase, ScenarioRun, SweepPoint, SweepRun

logger = logging.getLogger(__name__)

BATCH_SIZE = 500


def make_engine(url: str) -> Engine:
    return create_engine(url, echo=False)


def create_schema(engine: Engine):
    """Crea las tablas del catálogo si no existen (alternativa a `alembic upgrade head`)."""
    ResultsBase.metadata.create_all(engine)
    logger.info(f"Esquema del catálogo listo en {engine.url}")


def make_session_factory(engine: Engine) -> sessionmaker:
    return sessionmaker(autocommit=False, autoflush=False, bind=engine)


def save_sweep(db: Session, result: SweepResult, dt: float, tool_version: str) -> int:
    """Guarda el barrido y sus puntos en una sola transacción; devuelve el id del SweepRun."""
    reached = sum(1 for e in result.entries if e.status is PointStatus.REACHED)
    run = SweepRun(
        controller_kind=ControllerKindEnum(result.controller_kind.value),
        dt=dt,
        tool_version=tool_version,
        grid_size=len(result),
        reached_count=reached,
        max_t_bar=result.max_t_bar,
    )
    try:
        db.add(run)
        db.flush()
        for position, entry in enumerate(result.entries):
            db.add(SweepPoint(
                run_id=run.id,
                position=position,
                rho=entry.rho,
                n=entry.n,
                b=entry.b,
                t_bar=entry.t_bar,
                status=PointStatusEnum(entry.status.value),
            ))
            if (position + 1) % BATCH_SIZE == 0:
                db.flush()
                logger.info(f"Lote de puntos enviado ({position + 1}/{len(result)})")
        db.commit()
    except IntegrityError as e:
        db.rollback()
        logger.error(f"Error de integridad al guardar el barrido: {e}")
        raise
    except Exception as e:
        db.rollback()
        logger.error(f"Error al guardar el barrido: {e}")
        raise
    logger.info(f"Barrido guardado con id {run.id} ({len(result)} puntos, {reached} alcanzados)")
    return run.id


def load_sweep(db: Session, run_id: int) -> SweepResult:
    run = db.query(SweepRun).options(selectinload(SweepRun.points)).filter(SweepRun.id == run_id).first()
    if run is None:
        raise KeyError(f"No existe el barrido con id {run_id}")
    entries = [
        SweepEntry(rho=p.rho, n=p.n, b=p.b, t_bar=p.t_bar, status=PointStatus(p.status.value))
        for p in run.points
    ]
    return SweepResult(controller_kind=ControllerKind(run.controller_kind.value), entries=entries)


def save_scenario(db: Session, report: ScenarioReport, dt: float, tool_version: str) -> int:
    series = report.series
    row = ScenarioRun(
        label=report.label,
        sigma0_norm=report.sigma0_norm,
        dt=dt,
        tool_version=tool_version,
        status=report.result.status.value,
        t_bar=report.t_bar,
        max_norm_after_switch=report.max_norm_after_switch,
        max_lambda=float(series.Lambda.max()) if len(series) else None,
        passed=report.passed,
    )
    try:
        db.add(row)
        db.commit()
    except IntegrityError as e:
        db.rollback()
        logger.error(f"Error de integridad al guardar el escenario {report.label}: {e}")
        raise
    except Exception as e:
        db.rollback()
        logger.error(f"Error al guardar el escenario {report.label}: {e}")
        raise
    logger.info(f"Escenario {report.label} guardado con id {row.id}")
    return row.id
