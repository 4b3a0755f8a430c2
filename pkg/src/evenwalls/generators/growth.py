"""Seeded random growth of CAT(0) even 2-complexes.

Faces are glued one at a time to the boundary of a planar disk.  A boundary
vertex may be closed off by a new face only if the corner angles around it
add up to at least 2 pi, so every interior vertex satisfies the link
condition as soon as it becomes interior.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ..core import EvenComplex, build_complex
from ..links import WeightScheme, check_link_condition
from ..walls import BadSeparation, WallNotEmbedded, build_walls
from ._disk import AttachError, Disk

log = logging.getLogger(__name__)


class GrowthStalled(RuntimeError):
    pass


@dataclass(frozen=True)
class GrowthSpec:
    """Parameters of a random growth run.

    ``faces_per_vertex`` forces a vertex to be closed off as soon as it has
    that many faces; without it a vertex whose corners already reach 2 pi is
    closed with probability ``close_prob``.  ``spread`` is the number of
    lowest-id boundary vertices the attachment point is drawn from.
    """

    seed: int = 0
    palette: tuple[int, ...] = (4, 6, 8)
    target_faces: int = 30
    faces_per_vertex: int | None = None
    close_prob: float = 0.7
    spread: int = 3
    retries: int = 200
    max_reseeds: int = 5
    max_vertices: int | None = None

    def validate(self) -> None:
        if not self.palette:
            raise ValueError("empty palette")
        for s in self.palette:
            if s < 4 or s % 2:
                raise ValueError(f"palette entry {s} must be even and >= 4")
        if self.target_faces < 1:
            raise ValueError("target_faces must be positive")


def _corner(size: int) -> Fraction:
    n = size // 2
    return Fraction(n - 1, n)


@dataclass
class _State:
    disk: Disk
    sizes: list[int] = field(default_factory=list)
    angle: list[Fraction] = field(default_factory=list)

    def sync(self) -> None:
        while len(self.angle) < self.disk.n_vertices:
            self.angle.append(Fraction(0))


def _closes(spec: GrowthSpec, st: _State, v: int, size: int, rng: random.Random) -> bool:
    """Whether the new face should fill in the last gap at ``v``."""
    if spec.faces_per_vertex is not None:
        return st.disk.face_count[v] + 1 == spec.faces_per_vertex
    if st.angle[v] + _corner(size) < 2:
        return False
    return rng.random() < spec.close_prob


def _try_attach(spec: GrowthSpec, st: _State, rng: random.Random) -> bool:
    disk = st.disk
    open_vertices = sorted(disk.nxt)
    v = rng.choice(open_vertices[: spec.spread])
    size = rng.choice(spec.palette)
    path = [disk.prv[v], v, disk.nxt[v]] if _closes(spec, st, v, size, rng) else [v, disk.nxt[v]]
    while len(path) <= size and _closes(spec, st, path[-1], size, rng):
        path.append(disk.nxt[path[-1]])
    while len(path) <= size and _closes(spec, st, path[0], size, rng):
        path.insert(0, disk.prv[path[0]])
    for u in path[1:-1]:
        if st.angle[u] + _corner(size) < 2:
            return False  # closing u would leave a short link cycle
    if spec.faces_per_vertex is not None:
        for u in (path[0], path[-1]):
            if disk.face_count[u] + 1 >= spec.faces_per_vertex:
                return False
    if spec.max_vertices is not None and disk.n_vertices + size - len(path) > spec.max_vertices:
        return False
    try:
        disk.attach(path, size)
    except AttachError:
        return False
    st.sync()
    for u in disk.faces[-1]:
        st.angle[u] += _corner(size)
    st.sizes.append(size)
    return True


def _grow_once(spec: GrowthSpec, rng: random.Random) -> EvenComplex:
    disk = Disk()
    st = _State(disk)
    first = rng.choice(spec.palette)
    disk.seed_face(first)
    st.sync()
    for u in disk.faces[0]:
        st.angle[u] += _corner(first)
    st.sizes.append(first)
    while len(disk.faces) < spec.target_faces:
        for _ in range(spec.retries):
            if _try_attach(spec, st, rng):
                break
        else:
            raise GrowthStalled(
                f"no legal attachment after {spec.retries} tries at {len(disk.faces)} faces"
            )
    return build_complex(disk.faces, name=f"random_s{spec.seed}_f{spec.target_faces}")


def verified(X: EvenComplex) -> bool:
    """Global re-check: link condition (original and truncated), homology, walls."""
    if not check_link_condition(X, WeightScheme.ORIGINAL).ok:
        return False
    if not check_link_condition(X, WeightScheme.TRUNCATED).links_ok:
        return False
    try:
        build_walls(X, strict=True)
    except (WallNotEmbedded, BadSeparation):
        return False
    return True


def grow_random(spec: GrowthSpec) -> EvenComplex:
    """A verified random complex, reproducible from ``spec``.

    If the global re-check fails the run is repeated from a seed derived
    from the original one; after ``max_reseeds`` failures GrowthStalled is
    raised.
    """
    spec.validate()
    for attempt in range(spec.max_reseeds + 1):
        rng = random.Random(spec.seed if attempt == 0 else f"{spec.seed}/{attempt}")
        X = _grow_once(spec, rng)
        if verified(X):
            return X
        log.warning("seed %s attempt %d failed the global check, reseeding", spec.seed, attempt)
    raise GrowthStalled(f"no verified complex after {spec.max_reseeds + 1} attempts")
