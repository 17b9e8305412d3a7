# tests/unit/test_config_loader.py

from __future__ import annotations
import sys
from pathlib import Path
import pytest
from textwrap import dedent

# Make "src" importable
sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from erba.config_loader import load_config, ConfigError  # type: ignore


def write_yaml(p: Path, text: str) -> Path:
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(dedent(text).lstrip("\n").rstrip() + "\n", encoding="utf-8")
    return p


def test_load_config_ok(tmp_path: Path):
    cfg = write_yaml(
        tmp_path / "config" / "default.yaml",
        """
        algebra: { alphabet: xyz }
        sampling: { samples: 50, max_depth: 2, seed: 4 }
        weights: { standard: ["0,0", "-3/2,2"] }
        logging: { level: DEBUG, rich: false }
        """,
    )
    data = load_config(cfg)
    assert data["logging"]["level"] == "debug"   # normalised
    assert data["sampling"]["samples"] == 50
    # loader does not merge defaults (bootstrap does)
    assert "max_breadth" not in data["sampling"]


def test_empty_file_is_an_empty_config(tmp_path: Path):
    cfg = write_yaml(tmp_path / "empty.yaml", "")
    assert load_config(cfg) == {}


def test_missing_file(tmp_path: Path):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "nope.yaml")


@pytest.mark.parametrize(
    "text",
    [
        "plot: { colour: red }",                      # unknown section
        "sampling: { samples: 0 }",                   # below minimum
        "sampling: { seed: true }",                   # wrong type
        "sampling: { colour: red }",                  # unknown key
        "algebra: { alphabet: xX }",                  # not lowercase letters
        "algebra: { alphabet: xx }",                  # repeated letter
        "weights: { standard: [] }",
        "weights: { standard: ['1'] }",
        "weights: { standard: ['1,1/0'] }",
        "logging: { level: loud }",
        "logging: { rich: 'yes' }",
        "algebra: xyz",                               # section must be a mapping
        "- just\n- a list",
    ],
)
def test_load_config_rejects(tmp_path: Path, text: str):
    cfg = write_yaml(tmp_path / "bad.yaml", text)
    with pytest.raises(ConfigError):
        load_config(cfg)
