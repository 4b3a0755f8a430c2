"""Walls, links and angle geometry of CAT(0) even 2-complexes."""

from __future__ import annotations

from .angles import PI, ZERO, Angle, SnapError, oplus
from .core import (
    ComplexError,
    DegenerateFace,
    Disconnected,
    EvenComplex,
    FaceTooSmall,
    OddFace,
    ShapeSet,
    build_complex,
    d1,
    homology_proxy_check,
    opposite_edge,
    shapes,
)
from .links import LinkGraph, LinkPoint, SchemeViolation, WeightScheme, check_link_condition, girth, link
from .walls import BadSeparation, HalfDist, Side, Wall, WallNotEmbedded, WallSystem, build_walls

__version__ = "0.1.0"

__all__ = [
    "PI",
    "ZERO",
    "Angle",
    "BadSeparation",
    "ComplexError",
    "DegenerateFace",
    "Disconnected",
    "EvenComplex",
    "FaceTooSmall",
    "HalfDist",
    "LinkGraph",
    "LinkPoint",
    "OddFace",
    "SchemeViolation",
    "ShapeSet",
    "Side",
    "SnapError",
    "Wall",
    "WallNotEmbedded",
    "WallSystem",
    "WeightScheme",
    "build_complex",
    "build_walls",
    "check_link_condition",
    "d1",
    "girth",
    "homology_proxy_check",
    "link",
    "oplus",
    "opposite_edge",
    "shapes",
]
