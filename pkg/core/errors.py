class ArpsError(Exception):
    """Clase base de los errores del simulador."""


class SingularMatrix(ArpsError):
    """La matriz no es invertible (|det| por debajo del umbral relativo)."""


class DeadzoneHit(ArpsError):
    """‖σ‖ por debajo de la zona muerta: la dirección σ/‖σ‖ no está definida."""


class TimeHorizonExceeded(ArpsError):
    """La fase de alcance no terminó antes de T_c (κ(t) deja de estar definido)."""


class BarrierBreached(ArpsError):
    """‖σ‖ ≥ ε durante la fase adaptativa."""


class NonFiniteState(ArpsError):
    """El estado contiene inf o NaN."""


class ConfigError(ArpsError):
    """Documento de configuración, flag o parámetro inválido."""


class DomainError(ArpsError):
    """Argumento fuera del dominio de la transformación de escala de tiempo."""
