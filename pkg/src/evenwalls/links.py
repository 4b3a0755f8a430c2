"""Vertex links as exact weighted graphs and the link condition.

Arc weights and path lengths are ``Fraction`` coefficients of pi.  A link's
nodes are the edges of the complex at the vertex; each face corner at the
vertex contributes one arc.
"""

from __future__ import annotations

import enum
import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .angles import Angle
from .core import EvenComplex, HomologyReport, homology_proxy_check
from .truncation import q_of


class SchemeViolation(ValueError):
    pass


class WeightScheme(enum.Enum):
    ORIGINAL = "original"
    TRUNCATED = "truncated"
    LARGE_TYPE = "largetype"

    def corner_param(self, size: int) -> int:
        """The ``p`` with corner angle ``(p - 1) pi / p`` for a ``size``-gon."""
        n = size // 2
        if self is WeightScheme.ORIGINAL:
            return n
        if self is WeightScheme.TRUNCATED:
            return q_of(n)
        return 3

    def corner_weight(self, size: int) -> Fraction:
        p = self.corner_param(size)
        return Fraction(p - 1, p)


def require_scheme(X: EvenComplex, scheme: WeightScheme) -> None:
    if scheme is WeightScheme.LARGE_TYPE and any(len(c) == 4 for c in X.faces):
        raise SchemeViolation("the large-type scheme needs a complex without squares")


@dataclass(frozen=True)
class Arc:
    a: int  # edge towards the previous vertex of the face cycle
    b: int  # edge towards the next vertex
    weight: Fraction
    face: int
    position: int  # index of the link's vertex in the face cycle


@dataclass(frozen=True)
class LinkPoint:
    """A node of a link or a point at ``offset`` along an arc (from ``arc.a``)."""

    node: int | None = None
    arc: int | None = None
    offset: Fraction = Fraction(0)

    @classmethod
    def at_node(cls, edge: int) -> "LinkPoint":
        return cls(node=edge)

    @classmethod
    def on_arc(cls, arc: int, offset: Fraction | int) -> "LinkPoint":
        return cls(arc=arc, offset=Fraction(offset))


@dataclass(frozen=True)
class LinkGraph:
    vertex: int
    scheme: WeightScheme
    nodes: tuple[int, ...]
    arcs: tuple[Arc, ...]

    @cached_property
    def adjacency(self) -> dict[int, list[tuple[int, Fraction, int]]]:
        adj: dict[int, list[tuple[int, Fraction, int]]] = {u: [] for u in self.nodes}
        for i, arc in enumerate(self.arcs):
            adj[arc.a].append((arc.b, arc.weight, i))
            if arc.b != arc.a:
                adj[arc.b].append((arc.a, arc.weight, i))
        for lst in adj.values():
            lst.sort(key=lambda t: (t[0], t[2]))
        return adj

    def corner_arc(self, face: int) -> int:
        for i, arc in enumerate(self.arcs):
            if arc.face == face:
                return i
        raise KeyError(f"face {face} has no corner at vertex {self.vertex}")

    def validate_point(self, p: LinkPoint) -> None:
        if p.node is not None:
            if p.node not in self.adjacency:
                raise ValueError(f"edge {p.node} is not incident to vertex {self.vertex}")
        elif p.arc is None or not 0 <= p.arc < len(self.arcs):
            raise ValueError(f"bad link point {p}")
        elif not 0 <= p.offset <= self.arcs[p.arc].weight:
            raise ValueError(f"offset {p.offset} outside arc {p.arc}")

    def point_sources(self, p: LinkPoint) -> dict[int, Fraction]:
        """Node distances from ``p`` before leaving its own arc."""
        self.validate_point(p)
        if p.node is not None:
            return {p.node: Fraction(0)}
        arc = self.arcs[p.arc]
        out = {arc.a: p.offset}
        other = arc.weight - p.offset
        out[arc.b] = min(out.get(arc.b, other), other)
        return out


def link(X: EvenComplex, v: int, scheme: WeightScheme = WeightScheme.ORIGINAL) -> LinkGraph:
    require_scheme(X, scheme)
    arcs = []
    for f, pos in X.vertex_corners[v]:
        edges = X.face_edges[f]
        size = len(edges)
        arcs.append(Arc(edges[(pos - 1) % size], edges[pos], scheme.corner_weight(size), f, pos))
    arcs.sort(key=lambda a: (a.face, a.position))
    return LinkGraph(v, scheme, tuple(sorted(X.vertex_edges[v])), tuple(arcs))


def is_simplicial(L: LinkGraph) -> bool:
    seen = set()
    for arc in L.arcs:
        if arc.a == arc.b:
            return False
        key = (min(arc.a, arc.b), max(arc.a, arc.b))
        if key in seen:
            return False
        seen.add(key)
    return True


def shortest_paths(
    L: LinkGraph, sources: dict[int, Fraction], skip_arc: int | None = None
) -> dict[int, Fraction]:
    """Exact Dijkstra from weighted sources; ties resolve to the smaller node id."""
    dist: dict[int, Fraction] = {}
    heap = [(d, u) for u, d in sources.items()]
    heapq.heapify(heap)
    while heap:
        d, u = heapq.heappop(heap)
        if u in dist:
            continue
        dist[u] = d
        for w, weight, idx in L.adjacency[u]:
            if idx == skip_arc or w in dist:
                continue
            heapq.heappush(heap, (d + weight, w))
    return dist


def path_length(L: LinkGraph, a: LinkPoint, b: LinkPoint) -> Fraction | float:
    """Uncapped shortest path length between two link points (``inf`` if none)."""
    dist = shortest_paths(L, L.point_sources(a))
    best: Fraction | float = math.inf
    for node, off in L.point_sources(b).items():
        if node in dist:
            best = min(best, dist[node] + off)
    if a.arc is not None and a.arc == b.arc:
        best = min(best, abs(a.offset - b.offset))
    return best


def link_distance(L: LinkGraph, a: LinkPoint, b: LinkPoint) -> Angle:
    """Angle at the link's vertex: ``min(pi, shortest path)``."""
    d = path_length(L, a, b)
    return Angle(1) if d == math.inf or d >= 1 else Angle(d)


def girth(L: LinkGraph) -> Fraction | float:
    """Shortest embedded cycle length, or ``math.inf`` for a forest."""
    best: Fraction | float = math.inf
    for i, arc in enumerate(L.arcs):
        if arc.a == arc.b:
            best = min(best, arc.weight)
            continue
        dist = shortest_paths(L, {arc.a: Fraction(0)}, skip_arc=i)
        if arc.b in dist:
            best = min(best, dist[arc.b] + arc.weight)
    return best


@dataclass
class VertexLinkRow:
    vertex: int
    simplicial: bool
    girth: Fraction | float

    @property
    def ok(self) -> bool:
        return self.simplicial and self.girth >= 2

    def as_dict(self) -> dict:
        g = self.girth
        return {
            "vertex": self.vertex,
            "simplicial": self.simplicial,
            "girth_over_pi": None if g == math.inf else str(g),
            "ok": self.ok,
        }


@dataclass
class LinkConditionReport:
    scheme: WeightScheme
    rows: list[VertexLinkRow]
    homology: HomologyReport

    @property
    def links_ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def failures(self) -> list[VertexLinkRow]:
        return [r for r in self.rows if not r.ok]

    @property
    def ok(self) -> bool:
        return self.links_ok and self.homology.ok

    @property
    def label(self) -> str:
        if self.ok:
            return "locally CAT(0), homology-trivial"
        if self.links_ok:
            return "locally CAT(0), homology check failed"
        return "link condition fails"

    def as_dict(self) -> dict:
        return {
            "scheme": self.scheme.value,
            "links_ok": self.links_ok,
            "failures": [r.as_dict() for r in self.failures],
            "vertices_checked": len(self.rows),
            "homology": self.homology.as_dict(),
            "label": self.label,
            "ok": self.ok,
        }


def check_link_condition(
    X: EvenComplex,
    scheme: WeightScheme = WeightScheme.ORIGINAL,
    homology: HomologyReport | None = None,
) -> LinkConditionReport:
    require_scheme(X, scheme)
    rows = []
    for v in range(X.n_vertices):
        L = link(X, v, scheme)
        rows.append(VertexLinkRow(v, is_simplicial(L), girth(L)))
    if homology is None:
        homology = homology_proxy_check(X)
    return LinkConditionReport(scheme, rows, homology)
