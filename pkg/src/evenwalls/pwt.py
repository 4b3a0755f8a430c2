"""Verification of the parallel wall property.

For a wall ``W`` a vertex ``v`` is *separated* when some wall disjoint from
``W`` puts ``v`` and ``W`` in opposite halfspaces.  The separation radius of
``W`` is the largest distance ``d1(v, W)`` over unseparated vertices; the
verifier checks that every vertex at distance at least ``K`` is separated.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .core import EvenComplex, ShapeSet, shapes
from .links import WeightScheme, check_link_condition
from .walls import BadSeparation, HalfDist, Wall, WallNotEmbedded, WallSystem

log = logging.getLogger(__name__)

# documented constants from the two cases of the general argument
CASE_BOUNDS = {"hexagon_case": "5+1/2", "square_case": "4+1/2"}


class NotVerifiedComplex(ValueError):
    """The complex fails a precondition of the verifier."""

    def __init__(self, reason: str, cause: str):
        super().__init__(f"{cause}: {reason}")
        self.cause = cause


def theoretical_bound(S: ShapeSet, large_type: bool = False) -> HalfDist:
    """``max(5 + 1/2, N/2 + 1/2)``, or ``N/2 + 1/2`` for squareless complexes."""
    if not S.sizes:
        raise ValueError("empty shape set")
    if large_type:
        if S.has_squares:
            raise ValueError("large-type bound needs a complex without squares")
        return HalfDist(S.N + 1)
    return HalfDist(max(11, S.N + 1))


def _unseparated(system: WallSystem, w: int) -> np.ndarray:
    return kernels.unseparated(system.side, int(system.anchor[w]), system.candidates(w))


def separation_radius(X: EvenComplex, W: Wall, system: WallSystem | None = None) -> tuple[HalfDist, int]:
    """Largest ``d1(v, W)`` over vertices no other wall separates from ``W``.

    The witness is the smallest vertex id attaining the maximum.
    """
    system = system or WallSystem(X)
    uns = _unseparated(system, W.id).astype(bool)
    halves = system.wall_distance_halves[W.id]
    masked = np.where(uns, halves, -1)
    witness = int(np.argmax(masked))
    return HalfDist(int(masked[witness])), witness


def _geodesic(X: EvenComplex, v: int, target: int) -> list[int]:
    """Vertices of the geodesic that always steps to the smallest closer neighbour."""
    col = X.distance_matrix[:, target]
    path = [v]
    while path[-1] != target:
        cur = path[-1]
        want = col[cur] - 1
        path.append(next(w for w in X.neighbors(cur) if col[w] == want))
    return path


def exhaustive_separating_wall(X: EvenComplex, v: int, W: Wall, system: WallSystem | None = None) -> Wall | None:
    """Smallest-id wall separating ``v`` from ``W``, scanning every wall."""
    system = system or WallSystem(X)
    anchor = int(system.anchor[W.id])
    for Wp in system.walls:
        if not system.intersects[W.id, Wp.id] and system.side[Wp.id, v] != system.side[Wp.id, anchor]:
            return Wp
    return None


def find_separating_wall(X: EvenComplex, v: int, W: Wall, system: WallSystem | None = None) -> Wall | None:
    """A wall separating ``v`` from ``W``, trying walls along a geodesic first.

    The geodesic runs from ``v`` to its nearest dual-edge endpoint of ``W``
    and its edges are scanned in order.  If none qualifies every wall is
    tried.
    """
    system = system or WallSystem(X)
    anchor = int(system.anchor[W.id])
    target = int(system.nearest_endpoint[W.id, v])
    path = _geodesic(X, v, target)
    for a, b in zip(path, path[1:]):
        Wp = system.wall_of_edge(X.edge_between(a, b))
        if not system.intersects[W.id, Wp.id] and system.side[Wp.id, v] != system.side[Wp.id, anchor]:
            return Wp
    return exhaustive_separating_wall(X, v, W, system)


@dataclass
class WallResult:
    id: int
    radius: HalfDist
    witness: int
    separated_by_geodesic_scan: bool
    fallback_vertices: int
    violations: list[dict]

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "radius_num_halves": self.radius.halves,
            "radius": str(self.radius),
            "witness": self.witness,
            "separated_by_geodesic_scan": self.separated_by_geodesic_scan,
        }


@dataclass
class PWTReport:
    complex: str
    shapes: ShapeSet
    K: HalfDist
    large_type: bool
    walls: list[WallResult]
    elapsed: float = 0.0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    @property
    def max_radius(self) -> HalfDist:
        return max((r.radius for r in self.walls), default=HalfDist(0))

    def as_dict(self) -> dict:
        return {
            "complex": self.complex,
            "shapes": sorted(self.shapes.sizes),
            "K": str(self.K),
            "K_num_halves": self.K.halves,
            "large_type": self.large_type,
            "verdict": self.verdict,
            "max_radius_num_halves": self.max_radius.halves,
            "case_bounds": dict(CASE_BOUNDS),
            "walls": [r.as_dict() for r in self.walls],
            "violations": list(self.violations),
        }


def _verify_wall(X: EvenComplex, system: WallSystem, w: int, K: HalfDist) -> WallResult:
    uns = _unseparated(system, w).astype(bool)
    halves = system.wall_distance_halves[w]
    masked = np.where(uns, halves, -1)
    witness = int(np.argmax(masked))
    indptr, indices, arc_edge = X.csr
    found = kernels.geodesic_scan(
        X.distance_matrix,
        indptr,
        indices,
        arc_edge,
        system.edge_wall,
        system.side,
        system.candidates(w),
        int(system.anchor[w]),
        system.nearest_endpoint[w],
    )
    missed = np.flatnonzero(~uns & (found < 0))
    bad = np.flatnonzero(uns & (halves >= K.halves))
    violations = [{"wall": w, "vertex": int(v), "distance_num_halves": int(halves[v])} for v in bad]
    return WallResult(w, HalfDist(int(masked[witness])), witness, missed.size == 0, int(missed.size), violations)


def verify_pwt(
    X: EvenComplex,
    large_type: bool = False,
    workers: int = 1,
    system: WallSystem | None = None,
    check: bool = True,
) -> PWTReport:
    """Check that every vertex at distance >= K from a wall is separated from it.

    ``check`` runs the link condition and homology proxy first; walls must
    be embedded and separating.  ``workers > 1`` spreads the walls over a
    thread pool without changing the report.
    """
    start = time.perf_counter()
    if system is None:
        try:
            system = WallSystem(X)
        except (WallNotEmbedded, BadSeparation) as exc:
            raise NotVerifiedComplex(str(exc), type(exc).__name__) from exc
    S = shapes(X)
    if large_type and S.has_squares:
        raise NotVerifiedComplex("complex contains squares", "SchemeViolation")
    if check:
        report = check_link_condition(X, WeightScheme.ORIGINAL)
        if not report.ok:
            raise NotVerifiedComplex(report.label, "LinkConditionFailed")
    K = theoretical_bound(S, large_type)
    ids = range(len(system))
    if workers > 1:
        # fill the shared caches before fanning out
        _ = (X.distance_matrix, system.wall_distance_halves, system.nearest_endpoint)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda w: _verify_wall(X, system, w, K), ids))
    else:
        results = [_verify_wall(X, system, w, K) for w in ids]
    violations = [v for r in results for v in r.violations]
    elapsed = time.perf_counter() - start
    log.info("verified %d walls in %.2fs, %d violations", len(results), elapsed, len(violations))
    return PWTReport(X.name or X.digest()[:12], S, K, large_type, results, elapsed, violations)


def scan_all(X: EvenComplex, system: WallSystem | None = None) -> np.ndarray:
    """``(n_walls, n_vertices)`` int64 table of smallest separating wall ids (-1 if none)."""
    system = system or WallSystem(X)
    nw, nv = system.side.shape
    out = np.full((nw, nv), -1, dtype=np.int64)
    for w in range(nw):
        cand = np.flatnonzero(system.candidates(w))
        if cand.size == 0:
            continue
        sub = system.side[cand]
        differs = sub != sub[:, int(system.anchor[w])][:, None]
        has = differs.any(axis=0)
        first = cand[np.argmax(differs, axis=0)]
        out[w] = np.where(has, first, -1)
    return out


__all__ = [
    "NotVerifiedComplex",
    "theoretical_bound",
    "separation_radius",
    "find_separating_wall",
    "exhaustive_separating_wall",
    "verify_pwt",
    "PWTReport",
    "WallResult",
    "scan_all",
    "CASE_BOUNDS",
]

