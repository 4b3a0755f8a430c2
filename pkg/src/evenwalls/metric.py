"""Truncated cell geometry, in-cell projections onto mirrors and angle criteria.

Link-level reasoning is exact (rational multiples of pi).  Planar geometry
inside a single developed cell is floating point and every angle it produces
is snapped back to an exact rational before leaving this module.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .angles import PI, Angle, SnapError, snap
from .core import EvenComplex
from .links import LinkGraph, LinkPoint, WeightScheme, link, link_distance
from .truncation import InvalidN, q_of, truncation_triple_ok
from .walls import Wall

__all__ = [
    "InvalidN",
    "q_of",
    "truncation_triple_ok",
    "DirectionInsideCell",
    "MirrorNotInCell",
    "PreconditionViolated",
    "DirectionsNotComputable",
    "composite_angle",
    "DevelopedCell",
    "develop_cell",
    "Projection",
    "project_vertex_to_mirror",
    "projection_direction",
    "BoundingCandidate",
    "bounding_cell_criterion",
    "Prediction",
    "disjointness_predicts",
]

TOL = 1e-9


class DirectionInsideCell(ValueError):
    pass


class MirrorNotInCell(ValueError):
    pass


class PreconditionViolated(ValueError):
    pass


class DirectionsNotComputable(ValueError):
    pass


def composite_angle(
    X: EvenComplex,
    v: int,
    face: int,
    y: LinkPoint,
    x: LinkPoint,
    scheme: WeightScheme = WeightScheme.TRUNCATED,
) -> Angle:
    """Angle at ``v`` between a direction ``y`` into ``face`` and a direction ``x`` outside it.

    ``y`` must lie on the corner arc of ``face`` at ``v``; the result is
    ``min`` over the two boundary edges ``u`` of the corner of
    ``angle(y, u) (+) angle(u, x)``.
    """
    L = link(X, v, scheme)
    c = L.corner_arc(face)
    arc = L.arcs[c]
    if y.node is not None:
        if y.node not in (arc.a, arc.b):
            raise ValueError(f"direction {y} is not in the corner of face {face}")
        to_a = Fraction(0) if y.node == arc.a else arc.weight
    elif y.arc == c:
        to_a = y.offset
    else:
        raise ValueError(f"direction {y} is not in the corner of face {face}")
    L.validate_point(y)
    L.validate_point(x)
    if x.arc == c and 0 < x.offset < arc.weight:
        raise DirectionInsideCell(f"x-direction lies inside the corner of face {face}")
    best = PI
    for node, first in ((arc.a, to_a), (arc.b, arc.weight - to_a)):
        best = min(best, Angle(first) + link_distance(L, LinkPoint.at_node(node), x))
    return best


@dataclass(frozen=True)
class DevelopedCell:
    """A 2n-gon carrying the metric of its 2q-truncation.

    The barycentric subdivision has ``4n`` triangles; triangle ``t`` has the
    centre, boundary vertex ``(t + 1) // 2`` and the midpoint of edge
    ``t // 2``.  Sector angles are tracked exactly from vertex 0 (at
    angle 0), so the polar coordinates may wind past ``2 pi`` when the
    total centre angle exceeds it.
    """

    size: int
    q: int

    @property
    def n(self) -> int:
        return self.size // 2

    @property
    def center_angle(self) -> Angle:
        """Angle at the centre of one barycentric triangle."""
        return Angle(1, 2 * self.q)

    @property
    def midpoint_angle(self) -> Angle:
        return Angle(1, 2)

    @property
    def vertex_half_angle(self) -> Angle:
        return Angle(self.q - 1, 2 * self.q)

    @property
    def corner_angle(self) -> Angle:
        return Angle(self.q - 1, self.q)

    @property
    def total_center_angle(self) -> Fraction:
        """``2n pi / q`` as a coefficient of pi (not capped)."""
        return Fraction(2 * self.n, self.q)

    @property
    def R_v(self) -> float:
        return 0.5 / math.sin(math.pi / (2 * self.q))

    @property
    def R_m(self) -> float:
        return 0.5 / math.tan(math.pi / (2 * self.q))

    def vertex_polar(self, i: int) -> tuple[float, Fraction]:
        return self.R_v, Fraction(i, self.q)

    def midpoint_polar(self, i: int) -> tuple[float, Fraction]:
        return self.R_m, Fraction(2 * i + 1, 2 * self.q)

    @cached_property
    def vertex_xy(self) -> tuple[tuple[float, float], ...]:
        return tuple(_polar(*self.vertex_polar(i)) for i in range(self.size))

    @cached_property
    def midpoint_xy(self) -> tuple[tuple[float, float], ...]:
        return tuple(_polar(*self.midpoint_polar(i)) for i in range(self.size))

    def triangle(self, t: int) -> tuple[tuple[float, float], ...]:
        """Centre, vertex and midpoint coordinates of triangle ``t``."""
        if not 0 <= t < 2 * self.size:
            raise IndexError(t)
        m = t // 2
        # vertex coordinates are taken in the triangle's own sector so that
        # vertex 0 closes the last triangle at the wound-up angle
        return (0.0, 0.0), _polar(self.R_v, Fraction((t + 1) // 2, self.q)), self.midpoint_xy[m]

    def triangle_angles(self, t: int) -> tuple[float, float, float]:
        """Measured (centre, vertex, midpoint) angles of triangle ``t`` in radians."""
        c, v, m = self.triangle(t)
        return _angle_at(c, v, m), _angle_at(v, c, m), _angle_at(m, c, v)

    def boundary_distance(self, i: int, j: int) -> int:
        """Edges between boundary vertices ``i`` and ``j`` along the shorter side."""
        d = abs(i - j) % self.size
        return min(d, self.size - d)

    def in_cell_distance(self, i: int, j: int) -> float:
        """Length of the in-cell geodesic between boundary vertices ``i`` and ``j``."""
        delta = Fraction(self.boundary_distance(i, j), self.q)
        if delta >= 1:
            return 2 * self.R_v
        return 2 * self.R_v * math.sin(float(delta) * math.pi / 2)


def _polar(r: float, turn: Fraction) -> tuple[float, float]:
    theta = float(turn) * math.pi
    return r * math.cos(theta), r * math.sin(theta)


def _angle_at(p, a, b) -> float:
    ax, ay = a[0] - p[0], a[1] - p[1]
    bx, by = b[0] - p[0], b[1] - p[1]
    return abs(math.atan2(ax * by - ay * bx, ax * bx + ay * by))


_CELLS: dict[tuple[int, int], DevelopedCell] = {}
_CELLS_LOCK = threading.Lock()


def develop_cell(size: int, q: int) -> DevelopedCell:
    """Cached geometry of a ``size``-gon under the 2q-truncated metric."""
    if size % 2 or size < 4:
        raise InvalidN(f"face size must be even and >= 4, got {size}")
    if q not in (2, 3, 4, 6):
        raise InvalidN(f"q must be one of 2, 3, 4, 6, got {q}")
    key = (size, q)
    cell = _CELLS.get(key)
    if cell is None:
        with _CELLS_LOCK:
            cell = _CELLS.setdefault(key, DevelopedCell(size, q))
    return cell


@dataclass(frozen=True)
class Projection:
    """Where a vertex of a cell projects onto a mirror of that cell.

    ``near`` is the boundary neighbour of the vertex on the side of the
    closer mirror endpoint, ``far`` the other neighbour (both as positions
    in the cell).  ``k`` is the boundary distance to the mirror minus 1/2.
    """

    is_center: bool
    near_angle: Angle
    far_angle: Angle
    near: int
    far: int
    k: int

    @property
    def angles(self) -> tuple[Angle, Angle]:
        return self.near_angle, self.far_angle


def project_vertex_to_mirror(cell: DevelopedCell, vertex: int, mirror: tuple[int, int]) -> Projection:
    """Project boundary vertex ``vertex`` onto the mirror joining edges ``mirror``.

    The computation happens in the developed cell: the sector chain from the
    vertex to the nearer mirror endpoint is unrolled so the vertex sits at
    polar angle 0 and the mirror ray at ``(2k + 1) pi / (2q)``.  The foot of
    the perpendicular is the centre once that ray angle reaches pi/2.
    """
    size, q = cell.size, cell.q
    i, j = mirror
    if not (0 <= i < size and 0 <= j < size) or (i - j) % size != cell.n:
        raise MirrorNotInCell(f"positions {mirror} are not opposite edges of a {size}-gon")
    if not 0 <= vertex < size:
        raise MirrorNotInCell(f"vertex position {vertex} outside a {size}-gon")

    # signed half-unit offsets from the vertex to each mirror endpoint
    best = None
    for e in (i, j):
        for twice in (2 * e + 1 - 2 * vertex, 2 * e + 1 - 2 * vertex - 2 * size, 2 * e + 1 - 2 * vertex + 2 * size):
            cand = (abs(twice), -twice)
            if best is None or cand < best:
                best = cand
    twice_dist, neg = best
    step = 1 if -neg > 0 else -1
    k = (twice_dist - 1) // 2
    near = (vertex + step) % size
    far = (vertex - step) % size

    phi = (2 * k + 1) * math.pi / (2 * q)
    v_xy = (cell.R_v, 0.0)
    u_near = _polar(cell.R_v, Fraction(1, q))
    u_far = _polar(cell.R_v, Fraction(-1, q))
    is_center = phi >= math.pi / 2 - TOL
    if is_center:
        foot = (0.0, 0.0)
    else:
        t = cell.R_v * math.cos(phi)
        foot = (t * math.cos(phi), t * math.sin(phi))
    max_den = 2 * math.lcm(2 * q, size)
    near_r = snap(_angle_at(v_xy, foot, u_near), max_den)
    far_r = snap(_angle_at(v_xy, foot, u_far), max_den)
    if near_r + far_r != Fraction(q - 1, q):
        raise SnapError(f"projection angles {near_r}, {far_r} do not fill the corner")
    return Projection(is_center, Angle(near_r), Angle(far_r), near, far, k)


def _mirror_in_face(W: Wall, face: int) -> tuple[int, int]:
    for f, i, j in W.mirrors:
        if f == face:
            return i, j
    raise MirrorNotInCell(f"wall {W.id} has no mirror in face {face}")


def _face_projection(X: EvenComplex, v: int, W: Wall, face: int, scheme: WeightScheme) -> Projection:
    cyc = X.faces[face]
    if v not in cyc:
        raise PreconditionViolated(f"vertex {v} is not on face {face}")
    size = len(cyc)
    cell = develop_cell(size, scheme.corner_param(size))
    return project_vertex_to_mirror(cell, cyc.index(v), _mirror_in_face(W, face))


def projection_direction(
    X: EvenComplex,
    v: int,
    W: Wall,
    face: int | None = None,
    scheme: WeightScheme = WeightScheme.TRUNCATED,
    L: LinkGraph | None = None,
) -> LinkPoint:
    """Direction at ``v`` of the geodesic to its projection on ``W``.

    ``v`` must be a carrier vertex of ``W``; ``face`` picks the carrier face
    used for the computation (by default the smallest one containing ``v``).
    """
    if face is None:
        faces = [f for f in W.carrier_faces if v in X.faces[f]]
        if not faces:
            raise DirectionsNotComputable(f"vertex {v} is not in the carrier of wall {W.id}")
        face = faces[0]
    elif face not in W.carrier_faces:
        raise DirectionsNotComputable(f"face {face} is not in the carrier of wall {W.id}")
    proj = _face_projection(X, v, W, face, scheme)
    cyc = X.faces[face]
    if L is None:
        L = link(X, v, scheme)
    if proj.k == 0 and not proj.is_center:
        return LinkPoint.at_node(X.edge_between(v, cyc[proj.near]))
    c = L.corner_arc(face)
    arc = L.arcs[c]
    near_edge = X.edge_between(v, cyc[proj.near])
    offset = proj.near_angle.r if near_edge == arc.a else arc.weight - proj.near_angle.r
    return LinkPoint.on_arc(c, offset)


@dataclass(frozen=True)
class BoundingCandidate:
    u: int
    face: int
    p: int
    angle: Angle


def bounding_cell_criterion(
    X: EvenComplex,
    v: int,
    x: int,
    W: Wall,
    P: int,
    scheme: WeightScheme = WeightScheme.TRUNCATED,
) -> list[BoundingCandidate]:
    """Neighbours ``u`` of ``v`` in ``P`` through which the wall dual to ``[v, x]`` could meet ``W``.

    A neighbour qualifies when some face has consecutive vertices ``u, v, x``
    and its parameter ``p`` satisfies ``pi/p > angle_v(proj_W(v), u)``.  An
    empty result means the wall dual to ``[v, x]`` misses ``W``.
    """
    if P not in W.carrier_faces:
        raise PreconditionViolated(f"face {P} is not in the carrier of wall {W.id}")
    cyc = X.faces[P]
    if v not in cyc:
        raise PreconditionViolated(f"vertex {v} is not on face {P}")
    e = X.edge_between(v, x)
    if e is None:
        raise PreconditionViolated(f"{x} is not adjacent to {v}")
    if e in X.face_edges[P]:
        raise PreconditionViolated(f"edge [{v}, {x}] lies in face {P}")
    proj = _face_projection(X, v, W, P, scheme)
    out = []
    for pos, angle in ((proj.near, proj.near_angle), (proj.far, proj.far_angle)):
        u = cyc[pos]
        for f, at in X.vertex_corners[v]:
            other = X.faces[f]
            m = len(other)
            if {other[(at - 1) % m], other[(at + 1) % m]} != {u, x}:
                continue
            p = scheme.corner_param(m)
            if Fraction(1, p) > angle.r:
                out.append(BoundingCandidate(u, f, p, angle))
    return out


class Prediction(enum.Enum):
    DISJOINT = "disjoint"
    UNKNOWN = "unknown"


def disjointness_predicts(
    X: EvenComplex,
    v: int,
    W: Wall,
    Wprime: Wall,
    scheme: WeightScheme = WeightScheme.TRUNCATED,
) -> Prediction:
    """DISJOINT when the directions from ``v`` to both walls form a straight angle."""
    if W.id == Wprime.id:
        raise DirectionsNotComputable("the two walls must differ")
    L = link(X, v, scheme)
    a = projection_direction(X, v, W, scheme=scheme, L=L)
    b = projection_direction(X, v, Wprime, scheme=scheme, L=L)
    return Prediction.DISJOINT if link_distance(L, a, b) == PI else Prediction.UNKNOWN
