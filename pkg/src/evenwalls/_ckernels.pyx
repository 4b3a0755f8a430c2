# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernels; same contracts as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

ctypedef cnp.int64_t i64
ctypedef cnp.int32_t i32
ctypedef cnp.uint8_t u8


cdef void _bfs(const i64[::1] ptr, const i64[::1] nbr, i64 s, i32[::1] dist, i64* queue, i64 n) noexcept nogil:
    cdef i64 head = 0, tail = 0, a, b, k
    cdef i32 da
    for k in range(n):
        dist[k] = -1
    dist[s] = 0
    queue[tail] = s
    tail += 1
    while head < tail:
        a = queue[head]
        head += 1
        da = dist[a] + 1
        for k in range(ptr[a], ptr[a + 1]):
            b = nbr[k]
            if dist[b] < 0:
                dist[b] = da
                queue[tail] = b
                tail += 1


def all_pairs_bfs(indptr, indices, n):
    cdef const i64[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const i64[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef i64 nn = n, s
    out = np.full((nn, nn), -1, dtype=np.int32)
    cdef i32[:, ::1] o = out
    cdef i64* queue = <i64*> malloc(max(nn, 1) * sizeof(i64))
    if queue == NULL:
        raise MemoryError()
    try:
        with nogil:
            for s in range(nn):
                _bfs(ptr, nbr, s, o[s], queue, nn)
    finally:
        free(queue)
    return out


def bfs_masked(indptr, indices, arc_edge, edge_mask, source):
    cdef const i64[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const i64[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const i64[::1] ae = np.ascontiguousarray(arc_edge, dtype=np.int64)
    cdef const u8[::1] mask = np.ascontiguousarray(edge_mask, dtype=np.uint8)
    cdef i64 n = ptr.shape[0] - 1
    dist_arr = np.full(n, -1, dtype=np.int32)
    cdef i32[::1] dist = dist_arr
    cdef i64* queue = <i64*> malloc(max(n, 1) * sizeof(i64))
    cdef i64 head = 0, tail = 0, a, b, k
    if queue == NULL:
        raise MemoryError()
    try:
        dist[source] = 0
        queue[tail] = source
        tail += 1
        while head < tail:
            a = queue[head]
            head += 1
            for k in range(ptr[a], ptr[a + 1]):
                if mask[ae[k]] == 0:
                    continue
                b = nbr[k]
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue[tail] = b
                    tail += 1
    finally:
        free(queue)
    return dist_arr


def component_labels(indptr, indices, arc_edge, removed_mask):
    cdef const i64[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const i64[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const i64[::1] ae = np.ascontiguousarray(arc_edge, dtype=np.int64)
    cdef const u8[::1] removed = np.ascontiguousarray(removed_mask, dtype=np.uint8)
    cdef i64 n = ptr.shape[0] - 1
    labels_arr = np.full(n, -1, dtype=np.int32)
    cdef i32[::1] labels = labels_arr
    cdef i64* queue = <i64*> malloc(max(n, 1) * sizeof(i64))
    cdef i64 head, tail, a, b, k, s
    cdef i32 count = 0
    if queue == NULL:
        raise MemoryError()
    try:
        for s in range(n):
            if labels[s] >= 0:
                continue
            labels[s] = count
            head = 0
            tail = 0
            queue[tail] = s
            tail += 1
            while head < tail:
                a = queue[head]
                head += 1
                for k in range(ptr[a], ptr[a + 1]):
                    if removed[ae[k]]:
                        continue
                    b = nbr[k]
                    if labels[b] < 0:
                        labels[b] = count
                        queue[tail] = b
                        tail += 1
            count += 1
    finally:
        free(queue)
    return labels_arr, int(count)


def unseparated(side, anchor, candidates):
    cdef const u8[:, ::1] sd = np.ascontiguousarray(side, dtype=np.uint8)
    cdef const u8[::1] cand = np.ascontiguousarray(candidates, dtype=np.uint8)
    cdef i64 nw = sd.shape[0], nv = sd.shape[1], w, v
    cdef i64 a = anchor
    cdef u8 ref
    cdef const u8* row
    out_arr = np.ones(nv, dtype=np.uint8)
    cdef u8[::1] out = out_arr
    cdef u8* o = &out[0]
    with nogil:
        for w in range(nw):
            if not cand[w]:
                continue
            row = &sd[w, 0]
            ref = row[a]
            # branch-free so the compiler can vectorise the row
            for v in range(nv):
                o[v] &= row[v] == ref
    return out_arr


def geodesic_scan(dist, indptr, indices, arc_edge, edge_wall, side, candidates, anchor, targets):
    cdef const i32[:, ::1] dm = np.ascontiguousarray(dist, dtype=np.int32)
    cdef const i64[::1] ptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const i64[::1] nbr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef const i64[::1] ae = np.ascontiguousarray(arc_edge, dtype=np.int64)
    cdef const i64[::1] ew = np.ascontiguousarray(edge_wall, dtype=np.int64)
    cdef const u8[:, ::1] sd = np.ascontiguousarray(side, dtype=np.uint8)
    cdef const u8[::1] cand = np.ascontiguousarray(candidates, dtype=np.uint8)
    cdef const i64[::1] tg = np.ascontiguousarray(targets, dtype=np.int64)
    cdef i64 n = ptr.shape[0] - 1, v, t, cur, k, step, w, found
    cdef i64 a = anchor
    cdef i32 want
    out_arr = np.full(n, -1, dtype=np.int64)
    cdef i64[::1] out = out_arr
    with nogil:
        for v in range(n):
            t = tg[v]
            cur = v
            found = -1
            while cur != t and found < 0:
                want = dm[cur, t] - 1
                step = -1
                for k in range(ptr[cur], ptr[cur + 1]):
                    if dm[nbr[k], t] == want:
                        step = k
                        break
                if step < 0:
                    break
                w = ew[ae[step]]
                if cand[w] and sd[w, v] != sd[w, a]:
                    found = w
                cur = nbr[step]
            out[v] = found
    return out_arr
