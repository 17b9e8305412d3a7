# src/erba/config_loader.py

from __future__ import annotations
from pathlib import Path
from typing import Any, Dict, Iterable, Optional
import yaml

from .core.errors import ErbaInputError
from .core.rational import parse_rational


class ConfigError(ValueError):
    pass


LOG_LEVELS = ("debug", "info", "warning", "error")


def _validate_keys(d: Dict[str, Any], allowed: Iterable[str], section: str) -> None:
    allowed_set = set(allowed)
    for k in d.keys():
        if k not in allowed_set:
            raise ConfigError(f"Unknown config key: {section}.{k}")


def _require_dict(d: Dict[str, Any], key: str) -> Dict[str, Any]:
    val = d.get(key)
    if not isinstance(val, dict):
        raise ConfigError(f"'{key}' must be a mapping")
    return val


def _optional_bool(d: Dict[str, Any], key: str, section: str) -> Optional[bool]:
    if key not in d:
        return None
    val = d.get(key)
    if not isinstance(val, bool):
        raise ConfigError(f"'{section}.{key}' must be a boolean")
    return val


def _optional_str(d: Dict[str, Any], key: str, section: str) -> Optional[str]:
    if key not in d:
        return None
    val = d.get(key)
    if val is None:
        return None
    if not isinstance(val, str):
        raise ConfigError(f"'{section}.{key}' must be a string or null")
    return val


def _optional_int(d: Dict[str, Any], key: str, section: str, minimum: int = 0) -> Optional[int]:
    if key not in d:
        return None
    val = d.get(key)
    if not isinstance(val, int) or isinstance(val, bool):
        raise ConfigError(f"'{section}.{key}' must be an integer")
    if val < minimum:
        raise ConfigError(f"'{section}.{key}' must be >= {minimum}")
    return val


def _optional_alphabet(d: Dict[str, Any], key: str, section: str) -> Optional[str]:
    val = _optional_str(d, key, section)
    if val is None:
        return None
    if not val or any(not ("a" <= c <= "z") for c in val) or len(set(val)) != len(val):
        raise ConfigError(f"'{section}.{key}' must be distinct lowercase letters, got {val!r}")
    return val


def load_config(path: Path) -> Dict[str, Any]:
    if not path or not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError(f"Config is not a YAML mapping: {path}")

    allowed_top = {"algebra", "sampling", "weights", "logging"}
    for k in raw.keys():
        if k not in allowed_top:
            raise ConfigError(f"Unknown config key: {k}")

    if "algebra" in raw:
        algebra_cfg = _require_dict(raw, "algebra")
        _validate_keys(algebra_cfg, {"alphabet"}, "algebra")
        _optional_alphabet(algebra_cfg, "alphabet", "algebra")

    if "sampling" in raw:
        sampling_cfg = _require_dict(raw, "sampling")
        _validate_keys(
            sampling_cfg, {"samples", "max_depth", "max_breadth", "seed", "max_terms", "alphabet"}, "sampling"
        )
        _optional_int(sampling_cfg, "samples", "sampling", minimum=1)
        _optional_int(sampling_cfg, "max_depth", "sampling")
        _optional_int(sampling_cfg, "max_breadth", "sampling", minimum=1)
        _optional_int(sampling_cfg, "seed", "sampling")
        _optional_int(sampling_cfg, "max_terms", "sampling", minimum=1)
        _optional_alphabet(sampling_cfg, "alphabet", "sampling")

    if "weights" in raw:
        weights_cfg = _require_dict(raw, "weights")
        _validate_keys(weights_cfg, {"standard"}, "weights")
        standard = weights_cfg.get("standard")
        if standard is not None:
            if not isinstance(standard, list) or not standard:
                raise ConfigError("'weights.standard' must be a nonempty list of 'lambda,kappa' strings")
            for item in standard:
                parts = str(item).split(",")
                if len(parts) != 2:
                    raise ConfigError(f"'weights.standard' entry {item!r} must look like 'lambda,kappa'")
                try:
                    for p in parts:
                        parse_rational(p)
                except ErbaInputError as e:
                    raise ConfigError(f"'weights.standard' entry {item!r}: {e}") from None

    if "logging" in raw:
        logging_cfg = _require_dict(raw, "logging")
        _validate_keys(logging_cfg, {"level", "rich"}, "logging")
        level = _optional_str(logging_cfg, "level", "logging")
        _optional_bool(logging_cfg, "rich", "logging")
        # Normalise enumerations
        if level is not None:
            level = level.lower()
            if level not in LOG_LEVELS:
                raise ConfigError(f"Unknown logging.level '{level}' (expected one of {', '.join(LOG_LEVELS)}).")
            logging_cfg["level"] = level

    return raw
