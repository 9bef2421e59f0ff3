from .base import ResultsBase
from .sweep_models import ControllerKindEnum, PointStatusEnum, SweepPoint, SweepRun
from .scenario_models import ScenarioRun

__all__ = [
    "ResultsBase",
    "ControllerKindEnum",
    "PointStatusEnum",
    "SweepRun",
    "SweepPoint",
    "ScenarioRun",
]
