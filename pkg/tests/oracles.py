"""Independent oracles shared by the metric tests and the acceptance suite."""

import math
from fractions import Fraction

import networkx as nx


def float_projection(cell, vertex, mirror):
    """Independent oracle: clamp the vertex onto the mirror ray in an unrolled chart.

    The chart puts the vertex at angle 0 and the nearer mirror ray at its
    unrolled angle; past pi the cone geodesic runs through the apex.
    """
    size, q = cell.size, cell.q
    best = None
    for e in mirror:
        for shift in (-size, 0, size):
            offset = Fraction(2 * (e + shift) + 1 - 2 * vertex, 2 * q)  # multiples of pi
            if best is None or (abs(offset), -offset) < (abs(best), -best):
                best = offset
    sign = 1 if best > 0 else -1
    v = (cell.R_v, 0.0)
    if abs(best) >= 1:
        foot = (0.0, 0.0)
    else:
        ray = float(best) * math.pi
        d = (math.cos(ray), math.sin(ray))
        t = v[0] * d[0]
        t = 0.0 if t < 1e-9 else t
        foot = (t * d[0], t * d[1])

    def ang(th):
        u = (cell.R_v * math.cos(th), cell.R_v * math.sin(th))
        a = (foot[0] - v[0], foot[1] - v[1])
        b = (u[0] - v[0], u[1] - v[1])
        return abs(math.atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]))

    return foot == (0.0, 0.0), ang(sign * math.pi / q), ang(-sign * math.pi / q)


def closed_form_projection(q, k):
    if 2 * k >= q - 1:
        h = Fraction(q - 1, 2 * q)
        return True, h, h
    near = Fraction(k, q)
    return False, near, Fraction(q - 1, q) - near


def split_link_distance(L, y, x):
    """Shortest path from y to x in the link with both points inserted as nodes."""
    G = nx.MultiGraph()
    G.add_nodes_from(L.nodes)

    def place(p, tag, arcs):
        if p.node is not None:
            return p.node
        arcs[p.arc] = arcs.get(p.arc, []) + [(p.offset, tag)]
        return tag

    cuts: dict[int, list] = {}
    ya, xa = place(y, "y", cuts), place(x, "x", cuts)
    for i, arc in enumerate(L.arcs):
        stops = [(Fraction(0), arc.a)] + sorted(cuts.get(i, [])) + [(arc.weight, arc.b)]
        for (o1, n1), (o2, n2) in zip(stops, stops[1:]):
            G.add_edge(n1, n2, weight=o2 - o1)
    if ya == xa:
        return Fraction(0)
    try:
        return nx.dijkstra_path_length(G, ya, xa)
    except nx.NetworkXNoPath:
        return math.inf
