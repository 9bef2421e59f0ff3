import logging
import math
from dataclasses import dataclass
from pathlib import Path

from dotenv import dotenv_values
from sqlalchemy import create_engine

from core.errors import ConfigError

logger = logging.getLogger(__name__)

TOOL_VERSION = "1.0.0"

DEFAULT_RESULTS_URL = "sqlite:///results.db"


def _parse_bool(text: str) -> bool:
    value = text.strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"booleano no reconocido: '{text}'")


def _parse_float(text) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"valor no finito: '{text}'")
    return value


def _choice(*options):
    def parse(text: str) -> str:
        value = str(text).strip()
        if value not in options:
            raise ValueError(f"'{value}' no está entre {list(options)}")
        return value
    return parse


def _text(text) -> str:
    return str(text).strip()


@dataclass(frozen=True)
class ConfigKey:
    parse: object
    flag: str
    help: str


SCHEMA: dict[str, ConfigKey] = {
    "plant.name": ConfigKey(_choice("motivating", "revisited"), "--plant", "planta"),
    "disturbance.rho": ConfigKey(_parse_float, "--rho", "magnitud ρ de la perturbación"),
    "disturbance.a1": ConfigKey(_parse_float, "--a1", "término constante de f₁"),
    "disturbance.b1": ConfigKey(_parse_float, "--b1", "término constante de f₂"),
    "disturbance.omega1": ConfigKey(_parse_float, "--omega1", "frecuencia ω₁"),
    "disturbance.omega2": ConfigKey(_parse_float, "--omega2", "frecuencia ω₂"),
    "disturbance.rho_schedule": ConfigKey(_text, "--rho-schedule", "ρ a trozos 't0:rho0,t1:rho1,...'"),
    "disturbance.offsets_per_rho": ConfigKey(_parse_bool, "--offsets-per-rho", "a₁, b₁ no escalan con ρ"),
    "controller.kind": ConfigKey(_choice("baseline", "arps", "hybrid", "fixed"), "--controller", "ley de control"),
    "controller.alpha": ConfigKey(_parse_float, "--alpha", "α ∈ (0,1)"),
    "controller.T_c": ConfigKey(_parse_float, "--T-c", "cota de tiempo de alcance T_c"),
    "controller.beta0": ConfigKey(_parse_float, "--beta0", "β̂(0)"),
    "controller.epsilon": ConfigKey(_parse_float, "--epsilon", "ancho ε de la barrera"),
    "controller.barrier": ConfigKey(_choice("psd", "pd"), "--barrier", "tipo de barrera"),
    "controller.beta_bar": ConfigKey(_parse_float, "--beta-bar", "β̄ de la barrera definida positiva"),
    "controller.K_bar": ConfigKey(_parse_float, "--K-bar", "K̄ de la ley de referencia"),
    "controller.k0": ConfigKey(_parse_float, "--k0", "k̂(0) de la ley de referencia"),
    "controller.gain": ConfigKey(_parse_float, "--gain", "ganancia fija Λ"),
    "sim.dt": ConfigKey(_parse_float, "--dt", "paso de integración [s]"),
    "sim.dtau": ConfigKey(_parse_float, "--dtau", "paso en la escala τ del oráculo"),
    "sim.t_end": ConfigKey(_parse_float, "--t-end", "horizonte [s]"),
    "sim.stride": ConfigKey(int, "--stride", "una muestra cada stride pasos"),
    "sim.deadzone": ConfigKey(_parse_float, "--deadzone", "zona muerta de ‖σ‖"),
    "sim.sigma0_n": ConfigKey(int, "--sigma0-n", "‖σ0‖ = b·10ⁿ, exponente n"),
    "sim.sigma0_b": ConfigKey(_parse_float, "--sigma0-b", "‖σ0‖ = b·10ⁿ, factor b"),
    "sim.stop_on_reach": ConfigKey(_parse_bool, "--stop-on-reach", "detener al alcanzar"),
    "store.url": ConfigKey(_text, "--store", "URL SQLAlchemy del catálogo de resultados"),
}

BUILTIN_DEFAULTS: dict[str, object] = {
    "plant.name": "revisited",
    "disturbance.rho": 1000.0,
    "disturbance.a1": 1.0,
    "disturbance.b1": 1.2,
    "disturbance.omega1": 3.0,
    "disturbance.omega2": 2.0,
    "disturbance.rho_schedule": "",
    "disturbance.offsets_per_rho": False,
    "controller.kind": "arps",
    "controller.alpha": 0.4,
    "controller.T_c": 0.1,
    "controller.beta0": 0.0,
    "controller.epsilon": 0.05,
    "controller.barrier": "psd",
    "controller.beta_bar": 0.0,
    "controller.K_bar": 100.0,
    "controller.k0": 0.0,
    "controller.gain": 1.0,
    "sim.dt": 1e-5,
    "sim.dtau": 1e-5,
    "sim.t_end": 0.1,
    "sim.stride": 100,
    "sim.deadzone": 1e-12,
    "sim.sigma0_n": 1,
    "sim.sigma0_b": 1.0,
    "sim.stop_on_reach": False,
    "store.url": "",
}


def parse_value(key: str, raw) -> object:
    if key not in SCHEMA:
        raise ConfigError(f"Clave de configuración desconocida: '{key}'")
    try:
        return SCHEMA[key].parse(raw)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Valor inválido para '{key}': {raw!r} ({e})") from e


def load_config_file(path) -> dict[str, object]:
    """Lee un documento plano key=value (sintaxis dotenv) y tipa cada valor."""
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"No existe el archivo de configuración '{path}'")
    raw = dotenv_values(path, interpolate=False)
    values = {}
    for key, text in raw.items():
        if text is None:
            raise ConfigError(f"La clave '{key}' no tiene valor en '{path}'")
        values[key] = parse_value(key, text)
    logger.info(f"Configuración leída de {path}: {len(values)} claves")
    return values


def resolve_config(file_values: dict | None = None, overrides: dict | None = None) -> dict[str, object]:
    """Precedencia: flags de CLI > archivo > BUILTIN_DEFAULTS. Las variables de entorno no se consultan."""
    resolved = dict(BUILTIN_DEFAULTS)
    for layer in (file_values or {}, overrides or {}):
        for key, value in layer.items():
            if value is None:
                continue
            if key not in SCHEMA:
                raise ConfigError(f"Clave de configuración desconocida: '{key}'")
            resolved[key] = parse_value(key, value) if isinstance(value, str) else value
    return resolved


if __name__ == "__main__":
    print("Valores por defecto:")
    for key, value in BUILTIN_DEFAULTS.items():
        print(f"  {key}={value}")
    print(f"\nIntentando conectar al catálogo de resultados {DEFAULT_RESULTS_URL}...")
    try:
        conn = create_engine(DEFAULT_RESULTS_URL).connect()
        conn.close()
        print("Conexión exitosa")
    except Exception as e:
        print(f"Error conectando al catálogo: {e}")
