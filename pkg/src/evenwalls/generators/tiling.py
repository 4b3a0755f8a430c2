"""Balls in regular and semi-regular tilings by even polygons.

The ball of radius ``r`` is the union of the closed stars of all vertices
within 1-skeleton distance ``r - 1`` of a centre vertex.  It is grown as a
disk around vertex 0 by closing off (giving its full set of faces) the
smallest boundary vertex within that distance until none is left.  Every
face of the disk contains a closed vertex, so nothing needs trimming and
every vertex within distance ``r`` of the centre is present.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..core import EvenComplex, build_complex
from ._disk import AttachError, Disk


class SpecViolation(ValueError):
    pass


@dataclass(frozen=True)
class TilingSpec:
    """``k`` faces of size ``gon`` around every interior vertex.

    ``pattern`` optionally lists the face sizes in cyclic order around each
    vertex (``k`` is then its length); a new face takes the size opposite
    to the face it is glued to, so the pattern must alternate two sizes.
    """

    k: int
    gon: int = 0
    radius: int = 3
    pattern: tuple[int, ...] | None = None

    def sizes_around(self) -> tuple[int, ...]:
        return self.pattern if self.pattern else (self.gon,) * self.k

    def validate(self) -> None:
        sizes = self.sizes_around()
        if self.k < 3:
            raise SpecViolation(f"need k >= 3 faces per vertex, got {self.k}")
        if len(sizes) != self.k:
            raise SpecViolation("pattern length must equal k")
        for s in sizes:
            if s < 4 or s % 2:
                raise SpecViolation(f"face size {s} must be even and >= 4")
        if self.pattern and len(set(self.pattern)) > 1:
            alternating = all(sizes[i] != sizes[(i + 1) % self.k] for i in range(self.k))
            if len(set(sizes)) != 2 or not alternating:
                raise SpecViolation("pattern must alternate between two sizes")
        girth = sum(Fraction(s // 2 - 1, s // 2) for s in sizes)
        if girth < 2:
            raise SpecViolation(f"link girth {girth}π < 2π: not non-positively curved")
        if self.radius < 0:
            raise SpecViolation("radius must be nonnegative")


def _next_size(spec: TilingSpec, disk: Disk, sizes: list[int], a: int, b: int) -> int:
    if not spec.pattern or len(set(spec.pattern)) == 1:
        return spec.sizes_around()[0]
    across = sizes[disk.face_across(a, b)]
    x, y = sorted(set(spec.pattern))
    return y if across == x else x


def _close(spec: TilingSpec, disk: Disk, sizes: list[int], v: int) -> None:
    k = spec.k
    while disk.face_count[v] < k:
        if disk.face_count[v] + 1 == k:
            path = [disk.prv[v], v, disk.nxt[v]]
        else:
            path = [v, disk.nxt[v]]
        size = _next_size(spec, disk, sizes, path[-2], path[-1])
        try:
            # an end that this face would fill up must be wrapped as well
            while disk.face_count[path[-1]] + 1 == k:
                _grow_path(path, size)
                path.append(disk.nxt[path[-1]])
            while disk.face_count[path[0]] + 1 == k:
                _grow_path(path, size)
                path.insert(0, disk.prv[path[0]])
            disk.attach(path, size)
        except AttachError as exc:
            raise SpecViolation(f"tiling growth failed at vertex {v}: {exc}") from exc
        sizes.append(size)


def _grow_path(path: list[int], size: int) -> None:
    if len(path) >= size:
        raise AttachError(f"a {size}-gon cannot cover a boundary path of {len(path) + 1} vertices")


def _grow(spec: TilingSpec) -> tuple[Disk, list[int]]:
    disk = Disk()
    sizes = list(spec.sizes_around())  # face sizes by face id
    disk.flower(sizes[:])
    if spec.radius <= 1:
        return disk, sizes
    while True:
        dist = disk.distances_from(0)
        todo = [v for v in sorted(disk.nxt) if dist[v] <= spec.radius - 1 and disk.face_count[v] < spec.k]
        if not todo:
            return disk, sizes
        _close(spec, disk, sizes, todo[0])


def tiling_ball(spec: TilingSpec, name: str | None = None) -> EvenComplex:
    """Ball of radius ``spec.radius`` (at least 1) in the tiling.

    Radius 0 or 1 gives the flower of ``k`` faces around the centre.
    """
    spec.validate()
    disk, _ = _grow(spec)
    return _relabel(disk.faces, name or default_name(spec))


def _relabel(faces: list[list[int]], name: str) -> EvenComplex:
    ids: dict[int, int] = {}
    for f in faces:
        for v in f:
            ids.setdefault(v, len(ids))
    return build_complex([[ids[v] for v in f] for f in faces], name=name)


def default_name(spec: TilingSpec) -> str:
    shape = "-".join(map(str, spec.pattern)) if spec.pattern else f"{spec.k}x{spec.gon}"
    return f"tiling_{shape}_r{spec.radius}"


def square_grid(rows: int, cols: int) -> EvenComplex:
    """A ``rows`` by ``cols`` rectangle of unit squares.

    Vertex ``(i, j)`` (row ``i``, column ``j``) has id ``i * (cols + 1) + j``.
    """
    if rows < 1 or cols < 1:
        raise SpecViolation("grid needs at least one row and one column")
    w = cols + 1
    faces = [
        [i * w + j, i * w + j + 1, (i + 1) * w + j + 1, (i + 1) * w + j]
        for i in range(rows)
        for j in range(cols)
    ]
    return build_complex(faces, name=f"grid_{rows}x{cols}")
