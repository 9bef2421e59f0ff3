from .assumptions import AssumptionReport, check_assumptions, default_sigma_grid, default_t_grid
from .base import PlantSpec
from .disturbance import DisturbanceParams, RhoSchedule
from .motivating import MotivatingPlant, motivating_f, motivating_H
from .revisited import RevisitedPlant, revisited_dg, revisited_G

PLANTS = {
    "motivating": MotivatingPlant,
    "revisited": RevisitedPlant,
}


def make_plant(name: str) -> PlantSpec:
    try:
        return PLANTS[name]()
    except KeyError:
        raise ValueError(f"Planta desconocida '{name}', opciones: {sorted(PLANTS)}") from None


__all__ = [
    "AssumptionReport",
    "check_assumptions",
    "default_sigma_grid",
    "default_t_grid",
    "PlantSpec",
    "DisturbanceParams",
    "RhoSchedule",
    "MotivatingPlant",
    "motivating_f",
    "motivating_H",
    "RevisitedPlant",
    "revisited_dg",
    "revisited_G",
    "PLANTS",
    "make_plant",
]
