import enum

from sqlalchemy import Column, Float, ForeignKey, Integer, String, UniqueConstraint, Enum as SQLAlchemyEnum
from sqlalchemy.orm import relationship

from .base import ResultsBase


class ControllerKindEnum(enum.Enum):
    BASELINE = "baseline"
    ARPS = "arps"


class PointStatusEnum(enum.Enum):
    REACHED = "Reached"
    HORIZON_EXCEEDED = "HorizonExceeded"
    FAULT = "Fault"


class SweepRun(ResultsBase):
    """Un barrido completo sobre la malla (ρ, n, b)."""
    __tablename__ = "sweep_runs"

    controller_kind = Column(SQLAlchemyEnum(ControllerKindEnum), nullable=False, index=True)
    dt = Column(Float, nullable=False)
    tool_version = Column(String(32), nullable=False)
    grid_size = Column(Integer, nullable=False)
    reached_count = Column(Integer, nullable=False)
    max_t_bar = Column(Float, nullable=True)

    points = relationship("SweepPoint", back_populates="run", cascade="all, delete-orphan",
                          order_by="SweepPoint.position")

    def __repr__(self):
        return f"<SweepRun(id={self.id}, controller='{self.controller_kind.value}', points={self.grid_size})>"


class SweepPoint(ResultsBase):
    __tablename__ = "sweep_points"
    __table_args__ = (UniqueConstraint("run_id", "rho", "n", "b", name="uq_sweep_point"),)

    run_id = Column(Integer, ForeignKey("sweep_runs.id", ondelete="CASCADE"), nullable=False, index=True)
    # Posición en la malla; load_sweep devuelve las entradas en este orden.
    position = Column(Integer, nullable=False)
    rho = Column(Float, nullable=False)
    n = Column(Integer, nullable=False)
    b = Column(Float, nullable=False)
    t_bar = Column(Float, nullable=True)
    status = Column(SQLAlchemyEnum(PointStatusEnum), nullable=False)

    run = relationship("SweepRun", back_populates="points")

    def __repr__(self):
        return f"<SweepPoint(rho={self.rho}, n={self.n}, b={self.b}, status='{self.status.value}')>"
