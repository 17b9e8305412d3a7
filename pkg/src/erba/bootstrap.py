from __future__ import annotations
import copy
import logging
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

from .algebra.sampling import SamplingSettings
from .algebra.weight import Weight
from .config_loader import LOG_LEVELS, ConfigError, load_config
from .words.bracketed import Alphabet

DEFAULTS: Dict[str, Any] = {
    "algebra": {"alphabet": "wxyz"},
    "sampling": {
        "samples": 200,
        "max_depth": 3,
        "max_breadth": 3,
        "seed": 0,
        "max_terms": 1,
        "alphabet": "xyz",
    },
    "weights": {"standard": ["0,0", "1,0", "0,1", "1,1", "-3,2"]},
    "logging": {"level": "warning", "rich": True},
}


def _merge(base: Dict[str, Any], raw: Dict[str, Any]) -> Dict[str, Any]:
    cfg = copy.deepcopy(base)
    for section, values in raw.items():
        cfg.setdefault(section, {}).update(values or {})
    return cfg


def configure_logging(level: str, use_rich: bool = True) -> None:
    """Send erba.* records to stderr; stdout is reserved for results."""
    logger = logging.getLogger("erba")
    for h in list(logger.handlers):
        logger.removeHandler(h)
    if use_rich:
        handler: logging.Handler = RichHandler(
            console=Console(stderr=True), show_time=False, show_path=False, markup=False
        )
        handler.setFormatter(logging.Formatter("%(message)s"))
    else:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level.upper())
    logger.propagate = False


def build_app(
    config_path: Optional[Path] = None,
    repo_root: Optional[Path] = None,
    *,
    samples: Optional[int] = None,
    max_depth: Optional[int] = None,
    max_breadth: Optional[int] = None,
    seed: Optional[int] = None,
    max_terms: Optional[int] = None,
    alphabet: Optional[str] = None,
    log_level: Optional[str] = None,
) -> Dict[str, Any]:
    """
    Composition root: load YAML over the built-in defaults, apply CLI overrides,
    configure logging. Returns: dict with cfg, paths, sampling, alphabet, weights.
    """
    load_dotenv()
    repo_root = repo_root or Path(__file__).resolve().parents[2]
    if config_path is None:
        config_path = repo_root / "config" / "default.yaml"
        raw = load_config(config_path) if config_path.exists() else {}
    else:
        raw = load_config(config_path)
    cfg = _merge(DEFAULTS, raw)

    sampling_cfg = cfg["sampling"]
    overrides = {"samples": samples, "max_depth": max_depth, "max_breadth": max_breadth, "seed": seed, "max_terms": max_terms}
    for key, value in overrides.items():
        if value is not None:
            if value < (0 if key in ("max_depth", "seed") else 1):
                raise ConfigError(f"--{key.replace('_', '-')} is out of range: {value}")
            sampling_cfg[key] = value
    if alphabet:
        cfg["algebra"]["alphabet"] = alphabet

    level = (log_level or os.environ.get("ERBA_LOG_LEVEL") or cfg["logging"]["level"]).lower()
    if level not in LOG_LEVELS:
        raise ConfigError(f"Unknown log level '{level}' (expected one of {', '.join(LOG_LEVELS)}).")
    configure_logging(level, bool(cfg["logging"].get("rich", True)))

    return {
        "cfg": cfg,
        "paths": {"config_path": config_path, "config_dir": config_path.resolve().parent, "repo_root": repo_root},
        "sampling": SamplingSettings(**sampling_cfg),
        "alphabet": Alphabet.of(cfg["algebra"]["alphabet"]),
        "weights": [Weight.parse(w) for w in cfg["weights"]["standard"]],
    }
