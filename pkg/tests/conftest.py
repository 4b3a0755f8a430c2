"""Shared complexes.  Builders are cached so every test module sees the same objects."""

from __future__ import annotations

from functools import lru_cache

import pytest

from evenwalls.generators import GrowthSpec, grow_random, preset_ball, square_grid
from evenwalls.generators import fixtures as fx
from evenwalls.walls import WallSystem


@lru_cache(maxsize=None)
def ball(name: str, radius: int):
    return preset_ball(name, radius)


@lru_cache(maxsize=None)
def random_complex(seed: int, faces: int = 40):
    return grow_random(GrowthSpec(seed=seed, palette=(4, 6, 8), target_faces=faces, max_vertices=300))


@lru_cache(maxsize=None)
def system(X):
    return WallSystem(X)


def small_complexes():
    """Verified complexes with at most 300 vertices, named for test ids."""
    out = [
        ("grid_4x5", square_grid(4, 5)),
        ("hexagon", fx.hexagon()),
        ("octagon_chain", fx.octagon_chain()),
        ("square_grid_r4", ball("square_grid", 4)),
        ("hex_r4", ball("hex", 4)),
        ("oct3_r4", ball("oct3", 4)),
        ("sq5_r3", ball("sq5", 3)),
        ("mixed_46_r3", ball("mixed_46", 3)),
    ]
    out += [(f"random_{s}", random_complex(s)) for s in range(4)]
    return out


SMALL = small_complexes()


@pytest.fixture(params=SMALL, ids=[name for name, _ in SMALL])
def small(request):
    return request.param[1]
