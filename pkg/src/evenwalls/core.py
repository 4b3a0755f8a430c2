"""Combinatorial even 2-complexes.

An :class:`EvenComplex` is a finite 2-complex whose faces are cycles of even
length >= 4.  Edges are inferred from consecutive vertices of the face cycles
and keyed by unordered vertex pairs, so two faces that use the same pair of
vertices share that edge.
"""

from __future__ import annotations

import hashlib
import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .homology import elementary_divisors


class ComplexError(ValueError):
    """Invalid input for :func:`build_complex`."""

    def __init__(self, message: str, face_index: int | None = None):
        if face_index is not None:
            message = f"face {face_index}: {message}"
        super().__init__(message)
        self.face_index = face_index


class OddFace(ComplexError):
    pass


class FaceTooSmall(ComplexError):
    pass


class DegenerateFace(ComplexError):
    pass


class Disconnected(ComplexError):
    pass


@dataclass(frozen=True)
class ShapeSet:
    sizes: frozenset[int]

    @property
    def N(self) -> int:
        """Half the largest face size."""
        return max(self.sizes) // 2

    @property
    def has_squares(self) -> bool:
        return 4 in self.sizes

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in sorted(self.sizes)) + "}"


class EvenComplex:
    """Immutable even 2-complex with incidence indices.

    Build instances with :func:`build_complex`; the constructor assumes its
    arguments are already validated.
    """

    def __init__(self, faces: tuple[tuple[int, ...], ...], n_vertices: int, name: str | None = None):
        self.name = name
        self.faces = faces
        self.n_vertices = n_vertices
        edge_index: dict[tuple[int, int], int] = {}
        edges: list[tuple[int, int]] = []
        face_edges = []
        for cyc in faces:
            ids = []
            for i, a in enumerate(cyc):
                b = cyc[(i + 1) % len(cyc)]
                key = (a, b) if a < b else (b, a)
                eid = edge_index.get(key)
                if eid is None:
                    eid = edge_index[key] = len(edges)
                    edges.append(key)
                ids.append(eid)
            face_edges.append(tuple(ids))
        self.edges: tuple[tuple[int, int], ...] = tuple(edges)
        self.edge_index = edge_index
        self.face_edges: tuple[tuple[int, ...], ...] = tuple(face_edges)

        vertex_edges: list[list[int]] = [[] for _ in range(n_vertices)]
        for eid, (a, b) in enumerate(edges):
            vertex_edges[a].append(eid)
            vertex_edges[b].append(eid)
        self.vertex_edges = tuple(tuple(es) for es in vertex_edges)

        edge_faces: list[list[tuple[int, int]]] = [[] for _ in edges]
        corners: list[list[tuple[int, int]]] = [[] for _ in range(n_vertices)]
        for f, ids in enumerate(face_edges):
            for pos, eid in enumerate(ids):
                edge_faces[eid].append((f, pos))
            for pos, v in enumerate(faces[f]):
                corners[v].append((f, pos))
        # (face, position) pairs; position is the index of the edge in the face cycle
        self.edge_faces = tuple(tuple(x) for x in edge_faces)
        # (face, position) pairs; position is the index of the vertex in the face cycle
        self.vertex_corners = tuple(tuple(x) for x in corners)

    # -- basic counts -------------------------------------------------
    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def face_size(self, f: int) -> int:
        return len(self.faces[f])

    def edge_between(self, a: int, b: int) -> int | None:
        return self.edge_index.get((a, b) if a < b else (b, a))

    def other_end(self, eid: int, v: int) -> int:
        a, b = self.edges[eid]
        return b if a == v else a

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.other_end(e, v) for e in self.vertex_edges[v])

    def opposite_edge(self, f: int, position: int) -> int:
        return opposite_edge(len(self.faces[f]), position)

    # -- graph structure ----------------------------------------------
    @cached_property
    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(indptr, indices, arc_edge)`` with neighbours sorted by id."""
        indptr = np.zeros(self.n_vertices + 1, dtype=np.int64)
        indices = []
        arc_edge = []
        for v in range(self.n_vertices):
            nb = sorted((self.other_end(e, v), e) for e in self.vertex_edges[v])
            indices.extend(w for w, _ in nb)
            arc_edge.extend(e for _, e in nb)
            indptr[v + 1] = len(indices)
        return (
            indptr,
            np.asarray(indices, dtype=np.int64),
            np.asarray(arc_edge, dtype=np.int64),
        )

    @cached_property
    def distance_matrix(self) -> np.ndarray:
        """All-pairs 1-skeleton distances (int32, -1 when unreachable)."""
        indptr, indices, _ = self.csr
        dm = kernels.all_pairs_bfs(indptr, indices, self.n_vertices)
        dm.setflags(write=False)
        return dm

    def d1(self, v: int, w: int) -> int:
        return int(self.distance_matrix[v, w])

    def shapes(self) -> ShapeSet:
        return shapes(self)

    # -- serialisation ------------------------------------------------
    def normalized_faces(self) -> list[list[int]]:
        return sorted(normalize_cycle(c) for c in self.faces)

    def to_json_obj(self) -> dict:
        obj: dict = {}
        if self.name is not None:
            obj["name"] = self.name
        obj["faces"] = self.normalized_faces()
        return obj

    def digest(self) -> str:
        """sha256 of the normalised face list (name excluded)."""
        payload = json.dumps(self.normalized_faces(), separators=(",", ":"))
        return hashlib.sha256(payload.encode()).hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvenComplex):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.normalized_faces() == other.normalized_faces()

    def __hash__(self) -> int:
        return hash(self.digest())

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"EvenComplex({label}V={self.n_vertices}, E={self.n_edges}, F={self.n_faces})"


def opposite_edge(size: int, position: int) -> int:
    """Index of the edge opposite ``position`` in a ``size``-gon."""
    if not 0 <= position < size:
        raise IndexError(f"position {position} out of range for a {size}-gon")
    return (position + size // 2) % size


def normalize_cycle(cycle: Sequence[int]) -> list[int]:
    """Lexicographically least rotation/reflection of a cycle."""
    c = list(cycle)
    n = len(c)
    best = None
    for seq in (c, c[::-1]):
        for i in range(n):
            cand = seq[i:] + seq[:i]
            if best is None or cand < best:
                best = cand
    return best or []


def build_complex(faces: Iterable[Sequence[int]], name: str | None = None) -> EvenComplex:
    """Validate face cycles and build the complex.

    Vertex ids must be nonnegative; the vertex count is ``max id + 1``, so an
    unused id shows up as an isolated vertex and fails the connectivity check.
    """
    cycles: list[tuple[int, ...]] = []
    for i, raw in enumerate(faces):
        cyc = tuple(int(v) for v in raw)
        if any(v < 0 for v in cyc):
            raise ComplexError("negative vertex id", i)
        if len(cyc) % 2:
            raise OddFace(f"odd cycle of length {len(cyc)}", i)
        if len(cyc) < 4:
            raise FaceTooSmall(f"cycle of length {len(cyc)} (need >= 4)", i)
        if len(set(cyc)) != len(cyc):
            raise DegenerateFace("repeated vertex in cycle", i)
        cycles.append(cyc)
    if not cycles:
        raise ComplexError("no faces")
    n = max(max(c) for c in cycles) + 1
    X = EvenComplex(tuple(cycles), n, name)
    if not _connected(X):
        raise Disconnected("1-skeleton is not connected")
    return X


def _connected(X: EvenComplex) -> bool:
    seen = [False] * X.n_vertices
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        v = queue.popleft()
        for e in X.vertex_edges[v]:
            w = X.other_end(e, v)
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == X.n_vertices


def shapes(X: EvenComplex) -> ShapeSet:
    return ShapeSet(frozenset(len(c) for c in X.faces))


def d1(X: EvenComplex, v: int, w: int) -> int:
    """Combinatorial distance in the 1-skeleton (single BFS)."""
    if v == w:
        return 0
    dist = {v: 0}
    queue = deque([v])
    while queue:
        a = queue.popleft()
        for e in X.vertex_edges[a]:
            b = X.other_end(e, a)
            if b not in dist:
                dist[b] = dist[a] + 1
                if b == w:
                    return dist[b]
                queue.append(b)
    raise ValueError(f"vertices {v} and {w} are not connected")


@dataclass
class HomologyReport:
    connected: bool
    euler_characteristic: int
    h1_rank: int
    h1_torsion: list[int] = field(default_factory=list)

    @property
    def euler_ok(self) -> bool:
        return self.euler_characteristic == 1

    @property
    def h1_trivial(self) -> bool:
        return self.h1_rank == 0 and not self.h1_torsion

    @property
    def ok(self) -> bool:
        return self.connected and self.euler_ok and self.h1_trivial

    def h1_label(self) -> str:
        parts = (["Z"] * self.h1_rank if self.h1_rank <= 3 else [f"Z^{self.h1_rank}"]) + [
            f"Z/{t}" for t in self.h1_torsion
        ]
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict:
        return {
            "connected": self.connected,
            "euler_characteristic": self.euler_characteristic,
            "euler_ok": self.euler_ok,
            "h1": self.h1_label(),
            "h1_rank": self.h1_rank,
            "h1_torsion": list(self.h1_torsion),
            "ok": self.ok,
        }


def boundary_matrices(X: EvenComplex) -> tuple[dict, dict]:
    """Sparse cellular boundary maps ``d1: C1 -> C0`` and ``d2: C2 -> C1``.

    Edges are oriented from the smaller to the larger vertex id; faces follow
    their stored cycle order.
    """
    d_1 = {}
    for e, (a, b) in enumerate(X.edges):
        d_1[(a, e)] = -1
        d_1[(b, e)] = 1
    d_2: dict[tuple[int, int], int] = {}
    for f, cyc in enumerate(X.faces):
        for pos, e in enumerate(X.face_edges[f]):
            a = cyc[pos]
            sign = 1 if X.edges[e][0] == a else -1
            d_2[(e, f)] = d_2.get((e, f), 0) + sign
    return d_1, d_2


def homology_proxy_check(X: EvenComplex) -> HomologyReport:
    """Connectedness, Euler characteristic and integral H1 of ``X``."""
    d_1, d_2 = boundary_matrices(X)
    rank1 = len(elementary_divisors(d_1))
    div2 = elementary_divisors(d_2)
    kernel_dim = X.n_edges - rank1
    return HomologyReport(
        connected=_connected(X),
        euler_characteristic=X.euler_characteristic,
        h1_rank=kernel_dim - len(div2),
        h1_torsion=[d for d in div2 if d > 1],
    )
