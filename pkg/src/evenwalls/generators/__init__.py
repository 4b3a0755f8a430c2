"""Producers of even 2-complexes: tiling balls, random growth, fixtures and file I/O."""

from __future__ import annotations

import json
from importlib import resources

from .fixtures import FIXTURES
from .growth import GrowthSpec, GrowthStalled, grow_random
from .io import ParseError, dumps, load, parse, save
from .tiling import SpecViolation, TilingSpec, square_grid, tiling_ball


def catalog() -> dict[str, dict]:
    """Named tiling presets."""
    text = resources.files(__package__).joinpath("catalog.json").read_text()
    return json.loads(text)


def preset(name: str, radius: int | None = None) -> TilingSpec:
    entries = catalog()
    if name not in entries:
        raise KeyError(f"unknown preset {name!r}; choose from {', '.join(sorted(entries))}")
    e = entries[name]
    pattern = tuple(e["pattern"]) if "pattern" in e else None
    return TilingSpec(e["k"], e.get("gon", 0), e["radius"] if radius is None else radius, pattern)


def preset_ball(name: str, radius: int | None = None):
    spec = preset(name, radius)
    return tiling_ball(spec, name=f"{name}_r{spec.radius}")


__all__ = [
    "FIXTURES",
    "GrowthSpec",
    "GrowthStalled",
    "ParseError",
    "SpecViolation",
    "TilingSpec",
    "catalog",
    "dumps",
    "grow_random",
    "load",
    "parse",
    "preset",
    "preset_ball",
    "save",
    "square_grid",
    "tiling_ball",
]
