"""Run configuration: YAML defaults merged with command-line overrides."""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field, fields, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent / "configs" / "verify.yaml"

MODES = ("auto", "symbolic", "concrete")
FORMATS = ("text", "json", "csv")


class ConfigError(ValueError):
    """Raised when a configuration file or flag is invalid."""


@dataclass(frozen=True)
class Limits:
    weyl_max_weight: int = 14
    weyl_max_terms: int = 2_000_000
    singular_vector_cap: int = 8
    weyl_level_cap: int = 6
    kernel_weight_cap: int = 24
    oracle_max_n: int = 8
    random_products: int = 50
    seed: int = 20240101
    c17_band_factor: int = 4
    c13_max_r: int = 8

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class RunConfig:
    k_values: Tuple[int, ...] = (5,)
    check_ids: Union[str, Tuple[str, ...]] = "all"
    weight_cap: Union[str, int] = "auto"
    mode: str = "auto"
    jobs: int = 1
    format: str = "text"
    out: Optional[str] = None
    strict: bool = False
    log_level: str = "WARNING"
    mutations: Tuple[str, ...] = ()
    limits: Limits = field(default_factory=Limits)

    def __post_init__(self) -> None:
        if not self.k_values:
            raise ConfigError("at least one level k is required")
        for k in self.k_values:
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ConfigError(f"levels must be positive integers, got {k!r}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {', '.join(MODES)}, got {self.mode!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"format must be one of {', '.join(FORMATS)}, got {self.format!r}")
        if self.weight_cap != "auto" and (
            isinstance(self.weight_cap, bool) or not isinstance(self.weight_cap, int) or self.weight_cap < 1
        ):
            raise ConfigError(f"weight cap must be 'auto' or a positive integer, got {self.weight_cap!r}")
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise ConfigError(f"jobs must be a positive integer, got {self.jobs!r}")
        if self.log_level.upper() not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ConfigError(f"unknown log level: {self.log_level}")

    def cap_for(self, k: int) -> int:
        return 2 * k + 6 if self.weight_cap == "auto" else int(self.weight_cap)

    def with_overrides(self, **overrides: Any) -> "RunConfig":
        clean = {key: value for key, value in overrides.items() if value is not None}
        try:
            return replace(self, **clean)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None


def parse_k_range(text: Union[str, int]) -> Tuple[int, ...]:
    """Parse ``5..30``, ``5,7,9`` or ``5`` (ranges may be mixed with lists)."""
    if isinstance(text, int) and not isinstance(text, bool):
        return (text,)
    values: List[int] = []
    for part in str(text).split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = (int(x) for x in part.split("..", 1))
                if hi < lo:
                    raise ConfigError(f"empty level range {part}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(part))
        except ValueError:
            raise ConfigError(f"cannot parse level range {text!r}") from None
    if not values:
        raise ConfigError(f"no levels in {text!r}")
    return tuple(dict.fromkeys(values))


def parse_check_ids(text: Union[str, List[str]]) -> Union[str, Tuple[str, ...]]:
    if isinstance(text, (list, tuple)):
        ids = [str(x).strip() for x in text]
    else:
        if str(text).strip().lower() == "all":
            return "all"
        ids = [x.strip() for x in str(text).split(",")]
    ids = [x.upper() for x in ids if x]
    if not ids:
        raise ConfigError("empty check list")
    return tuple(dict.fromkeys(ids))


def parse_weight_cap(text: Union[str, int]) -> Union[str, int]:
    if isinstance(text, int) and not isinstance(text, bool):
        return text
    if str(text).strip().lower() == "auto":
        return "auto"
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"weight cap must be 'auto' or an integer, got {text!r}") from None


_RUN_KEYS = {
    "k": ("k_values", parse_k_range),
    "checks": ("check_ids", parse_check_ids),
    "weight_cap": ("weight_cap", parse_weight_cap),
    "mode": ("mode", str),
    "jobs": ("jobs", int),
    "format": ("format", str),
    "out": ("out", lambda v: None if v is None else str(v)),
    "strict": ("strict", bool),
    "log_level": ("log_level", str),
    "mutations": ("mutations", lambda v: tuple(str(x) for x in (v or ()))),
}


def _load_limits(data: Dict[str, Any]) -> Limits:
    known = {f.name for f in fields(Limits)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown limits keys: {', '.join(sorted(unknown))}")
    values = {}
    for key, value in data.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ConfigError(f"limits.{key} must be a non-negative integer, got {value!r}")
        values[key] = value
    return Limits(**values)


def config_from_dict(data: Optional[Dict[str, Any]]) -> RunConfig:
    data = data or {}
    if not isinstance(data, dict):
        raise ConfigError("configuration root must be a mapping")
    unknown = set(data) - {"run", "limits"}
    if unknown:
        raise ConfigError(f"unknown configuration sections: {', '.join(sorted(unknown))}")
    run = data.get("run") or {}
    kwargs: Dict[str, Any] = {}
    for key, value in run.items():
        if key not in _RUN_KEYS:
            raise ConfigError(f"unknown run key: {key}")
        name, convert = _RUN_KEYS[key]
        try:
            kwargs[name] = convert(value)
        except (TypeError, ValueError) as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"run.{key}: {exc}") from None
    kwargs["limits"] = _load_limits(data.get("limits") or {})
    return RunConfig(**kwargs)


def load_config(path: Optional[Union[str, Path]] = None) -> RunConfig:
    """Read a YAML configuration; a missing default file yields built-in defaults."""
    if path is None:
        path = DEFAULT_CONFIG_PATH
        if not path.exists():
            logger.debug(f"no configuration at {path}, using built-in defaults")
            return RunConfig()
    path = Path(path)
    try:
        data = yaml.safe_load(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"configuration file not found: {path}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"{path}: invalid YAML ({exc})") from None
    logger.debug(f"loaded configuration from {path}")
    return config_from_dict(data)


__all__ = [
    "ConfigError",
    "DEFAULT_CONFIG_PATH",
    "FORMATS",
    "Limits",
    "MODES",
    "RunConfig",
    "config_from_dict",
    "load_config",
    "parse_check_ids",
    "parse_k_range",
    "parse_weight_cap",
]
