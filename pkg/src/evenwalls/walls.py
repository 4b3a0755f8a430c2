"""Walls, halfspaces and carriers of an even 2-complex.

Two edges are equivalent when a chain of opposite-edge pairs joins them; a
wall is an equivalence class together with the mirrors (opposite-edge
pairs inside faces) that connect it.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, total_ordering

import numpy as np

from . import kernels
from .core import EvenComplex


class WallNotEmbedded(ValueError):
    """A wall crosses itself inside a face or its mirror graph has a cycle."""


class BadSeparation(ValueError):
    """Removing a wall's dual edges does not leave exactly two components."""


class Side(enum.Enum):
    PLUS = "+"
    MINUS = "-"


@total_ordering
@dataclass(frozen=True)
class HalfDist:
    """A distance stored in half units: the value is ``halves / 2``."""

    halves: int

    def __lt__(self, other: "HalfDist") -> bool:
        return self.halves < other.halves

    def __float__(self) -> float:
        return self.halves / 2

    def __str__(self) -> str:
        whole, rem = divmod(self.halves, 2)
        if not rem:
            return str(whole)
        return "1/2" if whole == 0 else f"{whole}+1/2"


@dataclass(eq=False)
class Wall:
    id: int
    dual_edges: tuple[int, ...]
    # (face, position, opposite position) with position < opposite position
    mirrors: tuple[tuple[int, int, int], ...]
    # each mirror joins the two dual edges it connects
    mirror_arcs: tuple[tuple[int, int], ...]
    carrier_faces: tuple[int, ...]
    carrier_vertices: tuple[int, ...]
    endpoints: tuple[int, ...]
    embedded: bool = True
    problem: str | None = None
    side: np.ndarray | None = field(default=None, repr=False)

    def side_of(self, v: int) -> Side:
        if self.side is None:
            raise WallNotEmbedded(f"wall {self.id} has no side labelling: {self.problem}")
        return Side.PLUS if self.side[v] else Side.MINUS

    @cached_property
    def tree_depth(self) -> int:
        """Radius of the mirror graph (dual edges as nodes, mirrors as arcs)."""
        adj: dict[int, list[int]] = {e: [] for e in self.dual_edges}
        for a, b in self.mirror_arcs:
            adj[a].append(b)
            adj[b].append(a)
        best = 0
        for i, s in enumerate(adj):
            dist = {s: 0}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            ecc = max(dist.values())
            best = ecc if i == 0 else min(best, ecc)
        return best

    def summary(self) -> dict:
        return {
            "id": self.id,
            "dual_edges": len(self.dual_edges),
            "carrier_faces": len(self.carrier_faces),
            "carrier_vertices": len(self.carrier_vertices),
            "tree_depth": self.tree_depth,
            "embedded": self.embedded,
        }


def _edge_classes(X: EvenComplex) -> list[list[int]]:
    parent = list(range(X.n_edges))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for ids in X.face_edges:
        n = len(ids) // 2
        for i in range(n):
            ra, rb = find(ids[i]), find(ids[i + n])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    classes: dict[int, list[int]] = {}
    for e in range(X.n_edges):
        classes.setdefault(find(e), []).append(e)
    return sorted(classes.values(), key=lambda c: c[0])


def build_walls(X: EvenComplex, strict: bool = True) -> list[Wall]:
    """Partition the edges into walls, ordered by smallest dual edge.

    With ``strict`` a non-embedded wall raises :class:`WallNotEmbedded` and a
    wall that does not cut the 1-skeleton in two raises
    :class:`BadSeparation`.  Otherwise such walls come back flagged, with
    ``side`` left as ``None``.
    """
    classes = _edge_classes(X)
    edge_wall = np.empty(X.n_edges, dtype=np.int64)
    for w, cls in enumerate(classes):
        edge_wall[cls] = w

    mirrors: list[list[tuple[int, int, int]]] = [[] for _ in classes]
    for f, ids in enumerate(X.face_edges):
        n = len(ids) // 2
        for i in range(n):
            mirrors[edge_wall[ids[i]]].append((f, i, i + n))

    walls = []
    for w, cls in enumerate(classes):
        ms = tuple(sorted(mirrors[w]))
        faces = tuple(sorted({f for f, _, _ in ms}))
        verts = tuple(sorted({v for f in faces for v in X.faces[f]}))
        ends = tuple(sorted({v for e in cls for v in X.edges[e]}))
        arcs = tuple((X.face_edges[f][i], X.face_edges[f][j]) for f, i, j in ms)
        problem = None
        if len(faces) != len(ms):
            twice = next(f for f in faces if sum(1 for m in ms if m[0] == f) > 1)
            problem = f"crosses itself in face {twice}"
        elif len(ms) != len(cls) - 1:
            problem = "mirror graph contains a cycle"
        wall = Wall(w, tuple(cls), ms, arcs, faces, verts, ends, problem is None, problem)
        if problem is not None and strict:
            raise WallNotEmbedded(f"wall {w}: {problem}")
        walls.append(wall)

    for wall in walls:
        if not wall.embedded:
            continue
        try:
            wall.side = halfspaces(X, wall)
        except BadSeparation:
            if strict:
                raise
            wall.embedded = False
            wall.problem = "does not separate into two halfspaces"
    return walls


def halfspaces(X: EvenComplex, W: Wall) -> np.ndarray:
    """Side labels (``True`` = PLUS) after removing the dual edges of ``W``.

    The component holding the smallest vertex id is PLUS.
    """
    indptr, indices, arc_edge = X.csr
    removed = np.zeros(X.n_edges, dtype=np.uint8)
    removed[list(W.dual_edges)] = 1
    labels, count = kernels.component_labels(indptr, indices, arc_edge, removed)
    if count != 2:
        raise BadSeparation(f"wall {W.id} leaves {count} components")
    return labels == 0


def walls_intersect(X: EvenComplex, W1: Wall, W2: Wall) -> bool:
    """Distinct walls meet exactly when some face carries mirrors of both."""
    return bool(set(W1.carrier_faces) & set(W2.carrier_faces))


def carrier(X: EvenComplex, W: Wall) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return W.carrier_faces, W.carrier_vertices


def carrier_edge_mask(X: EvenComplex, W: Wall) -> np.ndarray:
    mask = np.zeros(X.n_edges, dtype=np.uint8)
    for f in W.carrier_faces:
        mask[list(X.face_edges[f])] = 1
    return mask


def d1_vertex_wall(X: EvenComplex, v: int, W: Wall) -> HalfDist:
    """Distance to the nearest endpoint of a dual edge, plus one half."""
    row = X.distance_matrix[v]
    return HalfDist(2 * int(min(row[u] for u in W.endpoints)) + 1)


def separating_walls(walls: list[Wall], v: int, w: int) -> list[Wall]:
    return [W for W in walls if W.side is not None and W.side[v] != W.side[w]]


def separates_vertex_from_wall(X: EvenComplex, Wprime: Wall, v: int, W: Wall) -> bool:
    """Whether ``Wprime`` puts ``v`` and all of ``W`` in opposite halfspaces."""
    if Wprime.id == W.id:
        raise ValueError("the two walls must differ")
    if walls_intersect(X, W, Wprime):
        return False
    assert Wprime.side is not None
    v_side = Wprime.side[v]
    verdicts = {bool(Wprime.side[u] != v_side) for u in W.endpoints}
    # W is connected and misses Wprime, so it lies in one halfspace
    assert len(verdicts) == 1, f"wall {W.id} straddles wall {Wprime.id}"
    return verdicts.pop()


class WallSystem:
    """Walls of a complex with dense side/intersection tables.

    ``side[w, v]`` is 1 when ``v`` is on the PLUS side of wall ``w``;
    ``intersects[w1, w2]`` is true when the walls share a face (and on the
    diagonal).
    """

    def __init__(self, X: EvenComplex, walls: list[Wall] | None = None):
        self.X = X
        self.walls = build_walls(X) if walls is None else walls
        nw = len(self.walls)
        self.edge_wall = np.empty(X.n_edges, dtype=np.int64)
        for W in self.walls:
            self.edge_wall[list(W.dual_edges)] = W.id
        self.side = np.zeros((nw, X.n_vertices), dtype=np.uint8)
        for W in self.walls:
            if W.side is None:
                raise WallNotEmbedded(f"wall {W.id}: {W.problem}")
            self.side[W.id] = W.side
        self.face_walls = [[] for _ in range(X.n_faces)]
        for W in self.walls:
            for f in W.carrier_faces:
                self.face_walls[f].append(W.id)
        inter = np.eye(nw, dtype=bool)
        for ws in self.face_walls:
            for a in ws:
                inter[a, ws] = True
        self.intersects = inter
        self.anchor = np.array([W.endpoints[0] for W in self.walls], dtype=np.int64)

    def __len__(self) -> int:
        return len(self.walls)

    def __getitem__(self, w: int) -> Wall:
        return self.walls[w]

    def wall_of_edge(self, e: int) -> Wall:
        return self.walls[int(self.edge_wall[e])]

    @cached_property
    def wall_distance_halves(self) -> np.ndarray:
        """``(n_walls, n_vertices)`` table of ``2 * d1(v, W)``."""
        D = self.X.distance_matrix
        out = np.empty((len(self.walls), self.X.n_vertices), dtype=np.int32)
        for W in self.walls:
            out[W.id] = 2 * D[:, list(W.endpoints)].min(axis=1) + 1
        return out

    @cached_property
    def nearest_endpoint(self) -> np.ndarray:
        """Smallest-id dual-edge endpoint at minimal distance, per (wall, vertex)."""
        D = self.X.distance_matrix
        out = np.empty((len(self.walls), self.X.n_vertices), dtype=np.int64)
        for W in self.walls:
            ends = np.asarray(W.endpoints)
            out[W.id] = ends[np.argmin(D[:, ends], axis=1)]
        return out

    def separating(self, v: int, w: int) -> np.ndarray:
        return np.flatnonzero(self.side[:, v] != self.side[:, w])

    def separation_counts(self) -> np.ndarray:
        """``|S(v, w)|`` for all vertex pairs, as a dense integer matrix."""
        s = self.side.astype(np.float64)
        t = 1.0 - s
        return np.rint(s.T @ t + t.T @ s).astype(np.int64)

    def candidates(self, w: int) -> np.ndarray:
        """Walls that may separate a vertex from wall ``w`` (disjoint from it)."""
        return (~self.intersects[w]).astype(np.uint8)

    def summaries(self) -> list[dict]:
        return [W.summary() for W in self.walls]
