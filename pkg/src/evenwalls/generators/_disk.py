"""Planar disk bookkeeping shared by the tiling and random growers.

The disk is a list of face cycles plus a boundary cycle stored as a doubly
linked list.  Faces are attached outside the disk along a path of boundary
vertices; path-interior vertices become interior vertices of the disk.
"""

from __future__ import annotations

from collections import deque


class AttachError(ValueError):
    """An attachment would break the disk (bigon, wrap-around, overfull path)."""


class Disk:
    def __init__(self) -> None:
        self.faces: list[list[int]] = []
        self.face_count: list[int] = []  # faces at each vertex
        self.corners: list[list[int]] = []  # face ids at each vertex
        self.nxt: dict[int, int] = {}
        self.prv: dict[int, int] = {}
        self.adj: list[set[int]] = []
        self.edge_face: dict[tuple[int, int], list[int]] = {}

    # -- construction -------------------------------------------------
    def new_vertex(self) -> int:
        self.face_count.append(0)
        self.corners.append([])
        self.adj.append(set())
        return len(self.face_count) - 1

    def _add_face(self, cycle: list[int]) -> int:
        f = len(self.faces)
        self.faces.append(cycle)
        for i, a in enumerate(cycle):
            b = cycle[(i + 1) % len(cycle)]
            self.adj[a].add(b)
            self.adj[b].add(a)
            self.edge_face.setdefault((min(a, b), max(a, b)), []).append(f)
            self.face_count[a] += 1
            self.corners[a].append(f)
        return f

    def seed_face(self, size: int) -> int:
        cyc = [self.new_vertex() for _ in range(size)]
        f = self._add_face(cyc)
        for i, a in enumerate(cyc):
            self.nxt[a] = cyc[(i + 1) % size]
            self.prv[cyc[(i + 1) % size]] = a
        return f

    def flower(self, sizes: list[int]) -> None:
        """``len(sizes)`` faces around a new centre vertex 0."""
        centre = self.new_vertex()
        k = len(sizes)
        spokes = [self.new_vertex() for _ in range(k)]
        ring: list[int] = []
        for i, size in enumerate(sizes):
            a, b = spokes[i], spokes[(i + 1) % k]
            fresh = [self.new_vertex() for _ in range(size - 3)]
            self._add_face([centre, a, *fresh, b])
            ring.append(a)
            ring.extend(fresh)
        for i, a in enumerate(ring):
            b = ring[(i + 1) % len(ring)]
            self.nxt[a] = b
            self.prv[b] = a

    # -- queries ------------------------------------------------------
    @property
    def n_vertices(self) -> int:
        return len(self.face_count)

    def on_boundary(self, v: int) -> bool:
        return v in self.nxt

    def boundary_length(self) -> int:
        return len(self.nxt)

    def face_across(self, a: int, b: int) -> int:
        return self.edge_face[(min(a, b), max(a, b))][0]

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n_vertices
        dist[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in self.adj[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        return dist

    # -- attachment ---------------------------------------------------
    def check_path(self, path: list[int], size: int) -> None:
        if len(set(path)) != len(path):
            raise AttachError("path repeats a vertex")
        if len(path) >= self.boundary_length():
            raise AttachError("path covers the whole boundary")
        fresh = size - len(path)
        if fresh < 0:
            raise AttachError(f"path of {len(path)} vertices does not fit a {size}-gon")
        if fresh == 0 and path[0] in self.adj[path[-1]]:
            raise AttachError(f"closing edge {path[-1]}-{path[0]} already exists")

    def attach(self, path: list[int], size: int) -> int:
        """Glue a ``size``-gon along the boundary path ``path`` (in ``nxt`` order)."""
        self.check_path(path, size)
        a, b = path[0], path[-1]
        fresh = [self.new_vertex() for _ in range(size - len(path))]
        f = self._add_face(list(reversed(path)) + fresh)
        for v in path[1:-1]:
            del self.nxt[v]
            del self.prv[v]
        chain = [a, *fresh, b]
        for x, y in zip(chain, chain[1:]):
            self.nxt[x] = y
            self.prv[y] = x
        return f
