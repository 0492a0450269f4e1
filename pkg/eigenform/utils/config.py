# eigenform/utils/config.py
import os
from dataclasses import dataclass, fields, replace

from dotenv import load_dotenv

# const values
LOG_ENV_VAR = "EIGENFORM_LOG"
LOG_LEVELS = ("quiet", "info", "debug")
DEFAULT_LOG_LEVEL = "info"


class ConfigError(ValueError):
    """Raised for invalid settings or unknown override keys."""
    pass


@dataclass(frozen=True)
class Tolerances:
    """
    Numerical thresholds shared by every area.

    rank_tol=None means "max_dim * machine epsilon", resolved where the
    pseudoinverse is taken.
    """
    zero_tol: float = 1e-14
    sym_tol: float = 1e-10
    psd_tol: float = 1e-10
    def_tol: float = 1e-12
    rank_tol: float | None = None
    markov_tol: float = 1e-9
    image_zero_tol: float = 1e-12
    ext_tol: float = 1e-9
    ray_tol: float = 1e-14
    check_tol: float = 1e-9

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None and not value > 0:
                raise ConfigError(f"Tolerance '{f.name}' must be positive, got {value}.")


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class SolverConfig:
    """Settings of the normalized fixed-point iteration."""
    tol: float = 1e-13
    residual_tol: float = 1e-10
    max_iter: int = 100000
    start: object = "uniform"  # "uniform" or a DirichletForm
    degeneracy_floor: float = 1e-13
    degeneration_threshold: float = 1e-8
    damping: float = 1.0

    def __post_init__(self):
        for name in ("tol", "residual_tol", "degeneracy_floor", "degeneration_threshold"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"'{name}' must be positive.")
        if self.max_iter < 1:
            raise ConfigError("'max_iter' must be at least 1.")
        if not 0.0 < self.damping <= 1.0:
            raise ConfigError("'damping' must lie in (0, 1].")
        if isinstance(self.start, str) and self.start != "uniform":
            raise ConfigError(f"Unknown start '{self.start}'; use 'uniform' or pass a form.")


def _parse_value(raw: str, current):
    """Parses an override string into the type of the current value."""
    if isinstance(current, bool):
        return raw.lower() in ("1", "true", "yes")
    if isinstance(current, int):
        return int(raw)
    if raw.lower() == "none":
        return None
    return float(raw)


class EigenformConfig:
    """
    Bundles tolerances and solver settings and applies `--set key=value`
    overrides on top of the defaults.
    """
    def __init__(self, tolerances: Tolerances = DEFAULT_TOLERANCES, solver: SolverConfig | None = None):
        self.tolerances = tolerances
        self.solver = solver or SolverConfig()
        self.overrides: list[str] = []

    @classmethod
    def from_overrides(cls, overrides: list[str] | None) -> "EigenformConfig":
        """Builds a configuration from repeated 'key=value' strings."""
        config = cls()
        for item in overrides or []:
            config.set(item)
        return config

    def set(self, item: str):
        """Applies a single 'key=value' override."""
        key, sep, raw = item.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"Override '{item}' is not of the form key=value.")

        tolerance_keys = {f.name for f in fields(Tolerances)}
        solver_keys = {f.name for f in fields(SolverConfig)} - {"start"}
        try:
            if key in tolerance_keys:
                value = _parse_value(raw.strip(), getattr(self.tolerances, key) or 0.0)
                self.tolerances = replace(self.tolerances, **{key: value})
            elif key in solver_keys:
                value = _parse_value(raw.strip(), getattr(self.solver, key))
                self.solver = replace(self.solver, **{key: value})
            else:
                raise ConfigError(f"Unknown setting '{key}'.")
        except ValueError as e:
            if isinstance(e, ConfigError):
                raise
            raise ConfigError(f"Bad value for '{key}': {raw!r}.")
        self.overrides.append(f"{key}={raw.strip()}")

    def with_start(self, start) -> "EigenformConfig":
        """Returns a copy whose solver starts from the given form."""
        config = EigenformConfig(self.tolerances, replace(self.solver, start=start))
        config.overrides = list(self.overrides)
        return config


def get_log_level(explicit: str | None = None) -> str:
    """
    Resolves the log verbosity: an explicit value wins, then EIGENFORM_LOG
    (a .env file in the working directory is honoured), then the default.
    """
    if explicit:
        level = explicit
    else:
        load_dotenv()
        level = os.getenv(LOG_ENV_VAR, DEFAULT_LOG_LEVEL)
    level = level.strip().lower()
    if level not in LOG_LEVELS:
        raise ConfigError(f"{LOG_ENV_VAR} must be one of {', '.join(LOG_LEVELS)}; got '{level}'.")
    return level
