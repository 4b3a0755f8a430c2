"""SVG drawings of complexes with one wall highlighted.

Disks are drawn with a Tutte embedding (boundary cycle on a circle, every
interior vertex at the average of its neighbours); anything else falls back
to a spring layout.  Only the topology of the drawing is meaningful.
"""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

from .core import EvenComplex
from .walls import Wall, build_walls

PLUS_FILL = "#cfe3f7"
MINUS_FILL = "#f7e2c8"
CARRIER_FILL = "#e3e3e3"
PLAIN_FILL = "#eef2ee"
MIRROR_STROKE = "#c0392b"


def boundary_cycle(X: EvenComplex) -> list[int] | None:
    """The boundary of a disk as a vertex cycle, or ``None`` if it is not one cycle."""
    nbrs: dict[int, list[int]] = {}
    for e, fs in enumerate(X.edge_faces):
        if len(fs) == 1:
            a, b = X.edges[e]
            nbrs.setdefault(a, []).append(b)
            nbrs.setdefault(b, []).append(a)
    if not nbrs or any(len(v) != 2 for v in nbrs.values()):
        return None
    start = min(nbrs)
    cycle, prev, cur = [start], None, start
    while True:
        a, b = nbrs[cur]
        nxt = b if a == prev else a
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return cycle if len(cycle) == len(nbrs) else None


def tutte_layout(X: EvenComplex, boundary: list[int]) -> np.ndarray:
    n = X.n_vertices
    pos = np.zeros((n, 2))
    t = 2 * np.pi * np.arange(len(boundary)) / len(boundary)
    pos[boundary] = np.column_stack([np.cos(t), np.sin(t)])
    fixed = np.zeros(n, dtype=bool)
    fixed[boundary] = True
    inner = np.flatnonzero(~fixed)
    if inner.size:
        index = {v: i for i, v in enumerate(inner)}
        A = np.zeros((inner.size, inner.size))
        rhs = np.zeros((inner.size, 2))
        for v in inner:
            i = index[v]
            nb = X.neighbors(int(v))
            A[i, i] = len(nb)
            for w in nb:
                if fixed[w]:
                    rhs[i] += pos[w]
                else:
                    A[i, index[w]] -= 1
        pos[inner] = np.linalg.solve(A, rhs)
    return pos


def spring_layout(X: EvenComplex, seed: int = 0) -> np.ndarray:
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(X.n_vertices))
    G.add_edges_from(X.edges)
    layout = nx.spring_layout(G, seed=seed)
    return np.array([layout[v] for v in range(X.n_vertices)])


def layout(X: EvenComplex) -> np.ndarray:
    cycle = boundary_cycle(X)
    if cycle is not None and X.euler_characteristic == 1:
        return tutte_layout(X, cycle)
    return spring_layout(X)


def render_svg(X: EvenComplex, wall: int | None = None, size: int = 800) -> str:
    """SVG text; with ``wall`` its mirrors are drawn and faces coloured by halfspace."""
    walls = build_walls(X, strict=False)
    W: Wall | None = None
    if wall is not None:
        if not 0 <= wall < len(walls):
            raise IndexError(f"wall id {wall} out of range (complex has {len(walls)} walls)")
        W = walls[wall]
    pos = layout(X)
    lo, hi = pos.min(axis=0), pos.max(axis=0)
    span = float(max(hi - lo)) or 1.0
    margin = 20
    scale = (size - 2 * margin) / span

    def pt(p) -> str:
        x = margin + (p[0] - lo[0]) * scale
        y = margin + (hi[1] - p[1]) * scale
        return f"{x:.2f},{y:.2f}"

    title = escape(X.name or "complex")
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f"<title>{title}</title>",
    ]
    carrier = set(W.carrier_faces) if W else set()
    for f, cyc in enumerate(X.faces):
        if W is None:
            fill = PLAIN_FILL
        elif f in carrier:
            fill = CARRIER_FILL
        elif W.side is not None and W.side[cyc[0]]:
            fill = PLUS_FILL
        else:
            fill = MINUS_FILL
        points = " ".join(pt(pos[v]) for v in cyc)
        out.append(f'<polygon class="face" data-face="{f}" points="{points}" fill="{fill}" stroke="#555" stroke-width="1"/>')
    if W is not None:
        for f, i, j in W.mirrors:
            cyc = X.faces[f]
            m = len(cyc)
            centre = pos[list(cyc)].mean(axis=0)
            a = (pos[cyc[i]] + pos[cyc[(i + 1) % m]]) / 2
            b = (pos[cyc[j]] + pos[cyc[(j + 1) % m]]) / 2
            out.append(
                f'<polyline class="mirror" data-face="{f}" points="{pt(a)} {pt(centre)} {pt(b)}" '
                f'fill="none" stroke="{MIRROR_STROKE}" stroke-width="3"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
