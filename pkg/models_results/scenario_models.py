from sqlalchemy import Boolean, Column, Float, String

from .base import ResultsBase


class ScenarioRun(ResultsBase):
    """Resumen de una simulación de escenario (una por condición inicial)."""
    __tablename__ = "scenario_runs"

    label = Column(String(16), nullable=False, index=True)
    sigma0_norm = Column(Float, nullable=False)
    dt = Column(Float, nullable=False)
    tool_version = Column(String(32), nullable=False)
    status = Column(String(32), nullable=False)
    t_bar = Column(Float, nullable=True)
    max_norm_after_switch = Column(Float, nullable=True)
    max_lambda = Column(Float, nullable=True)
    passed = Column(Boolean, nullable=False)

    def __repr__(self):
        return f"<ScenarioRun(id={self.id}, label='{self.label}', t_bar={self.t_bar})>"
