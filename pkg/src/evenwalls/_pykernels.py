"""Pure-Python implementations of the hot graph kernels.

Signatures match ``_ckernels``; arrays follow the CSR layout produced by
:attr:`evenwalls.core.EvenComplex.csr`.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def all_pairs_bfs(indptr, indices, n):
    ptr = indptr.tolist()
    nbr = indices.tolist()
    out = np.full((n, n), -1, dtype=np.int32)
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            da = dist[a] + 1
            for k in range(ptr[a], ptr[a + 1]):
                b = nbr[k]
                if dist[b] < 0:
                    dist[b] = da
                    queue.append(b)
        out[s] = dist
    return out


def bfs_masked(indptr, indices, arc_edge, edge_mask, source):
    """BFS from ``source`` using only edges with ``edge_mask[e] != 0``."""
    n = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    ae = arc_edge.tolist()
    mask = edge_mask.tolist()
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for k in range(ptr[a], ptr[a + 1]):
            if not mask[ae[k]]:
                continue
            b = nbr[k]
            if dist[b] < 0:
                dist[b] = dist[a] + 1
                queue.append(b)
    return np.asarray(dist, dtype=np.int32)


def component_labels(indptr, indices, arc_edge, removed_mask):
    """Label components of the graph minus edges with ``removed_mask[e] != 0``.

    Components are numbered in order of their smallest vertex.
    """
    n = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    ae = arc_edge.tolist()
    removed = removed_mask.tolist()
    labels = [-1] * n
    count = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = count
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for k in range(ptr[a], ptr[a + 1]):
                if removed[ae[k]]:
                    continue
                b = nbr[k]
                if labels[b] < 0:
                    labels[b] = count
                    queue.append(b)
        count += 1
    return np.asarray(labels, dtype=np.int32), count


def unseparated(side, anchor, candidates):
    """1 for vertices that no candidate wall separates from column ``anchor``."""
    rows = np.flatnonzero(candidates)
    if rows.size == 0:
        return np.ones(side.shape[1], dtype=np.uint8)
    sub = side[rows]
    differs = sub != sub[:, anchor][:, None]
    return (~differs.any(axis=0)).astype(np.uint8)


def geodesic_scan(dist, indptr, indices, arc_edge, edge_wall, side, candidates, anchor, targets):
    """First candidate wall separating ``v`` from ``anchor`` along a geodesic.

    For each vertex ``v`` the geodesic to ``targets[v]`` steps to the
    smallest-id neighbour one unit closer.  Returns -1 where no wall on that
    geodesic qualifies.
    """
    n = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    ae = arc_edge.tolist()
    ew = edge_wall.tolist()
    cand = candidates.tolist()
    side_rows: dict[int, list] = {}
    out = [-1] * n
    columns: dict[int, list] = {}
    for v in range(n):
        t = int(targets[v])
        col = columns.get(t)
        if col is None:
            col = columns[t] = dist[:, t].tolist()
        cur = v
        found = -1
        while cur != t and found < 0:
            want = col[cur] - 1
            step = -1
            for k in range(ptr[cur], ptr[cur + 1]):
                if col[nbr[k]] == want:
                    step = k
                    break
            if step < 0:
                break
            w = ew[ae[step]]
            if cand[w]:
                row = side_rows.get(w)
                if row is None:
                    row = side_rows[w] = side[w].tolist()
                if row[v] != row[anchor]:
                    found = w
            cur = nbr[step]
        out[v] = found
    return np.asarray(out, dtype=np.int64)
