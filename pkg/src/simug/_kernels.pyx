# cython: language_level=3
"""Compiled graph kernels (same contracts as ``_pykernels``)."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


def reach_matrix(const unsigned char[:, ::1] adj):
    cdef Py_ssize_t n = adj.shape[0]
    out_arr = np.zeros((n, n), dtype=np.uint8)
    cdef unsigned char[:, ::1] out = out_arr
    cdef Py_ssize_t[::1] stack = np.empty(max(n, 1), dtype=np.intp)
    # neighbour lists in CSR form, so the search costs O(n * edges)
    cdef Py_ssize_t[::1] offset = np.zeros(n + 1, dtype=np.intp)
    cdef Py_ssize_t start, top, u, v, k
    for u in range(n):
        offset[u + 1] = offset[u]
        for v in range(n):
            if adj[u, v]:
                offset[u + 1] += 1
    cdef Py_ssize_t[::1] nbr = np.empty(max(offset[n], 1), dtype=np.intp)
    k = 0
    for u in range(n):
        for v in range(n):
            if adj[u, v]:
                nbr[k] = v
                k += 1
    for start in range(n):
        out[start, start] = 1
        stack[0] = start
        top = 1
        while top > 0:
            top -= 1
            u = stack[top]
            for k in range(offset[u], offset[u + 1]):
                v = nbr[k]
                if not out[start, v]:
                    out[start, v] = 1
                    stack[top] = v
                    top += 1
    return out_arr


def max_vdp(const unsigned char[:, ::1] adj,
            const unsigned char[::1] sources,
            const unsigned char[::1] sinks):
    cdef Py_ssize_t n = adj.shape[0]
    cdef Py_ssize_t m = 2 * n + 1
    cdef Py_ssize_t sink_id = 2 * n
    through_arr = np.zeros(n, dtype=np.uint8)
    src_arr = np.zeros(n, dtype=np.uint8)
    snk_arr = np.zeros(n, dtype=np.uint8)
    flow_arr = np.zeros((n, n), dtype=np.uint8)
    parent_arr = np.empty(m, dtype=np.intp)
    queue_arr = np.empty(m, dtype=np.intp)
    cdef unsigned char[::1] through = through_arr
    cdef unsigned char[::1] src_used = src_arr
    cdef unsigned char[::1] snk_used = snk_arr
    cdef unsigned char[:, ::1] flow = flow_arr
    cdef Py_ssize_t[::1] parent = parent_arr
    cdef Py_ssize_t[::1] queue = queue_arr
    cdef Py_ssize_t head, tail, x, u, v, w, cur, prev, k
    cdef int found
    cdef long total = 0

    while True:
        for k in range(m):
            parent[k] = -1
        head = 0
        tail = 0
        for v in range(n):
            if sources[v] and not src_used[v]:
                parent[v] = -2
                queue[tail] = v
                tail += 1
        found = 0
        while head < tail:
            x = queue[head]
            head += 1
            if x < n:
                v = x
                if not through[v] and parent[n + v] == -1:
                    parent[n + v] = x
                    queue[tail] = n + v
                    tail += 1
                for w in range(n):
                    if flow[w, v] and parent[n + w] == -1:
                        parent[n + w] = x
                        queue[tail] = n + w
                        tail += 1
            else:
                u = x - n
                if sinks[u] and not snk_used[u]:
                    parent[sink_id] = x
                    found = 1
                    break
                if through[u] and parent[u] == -1:
                    parent[u] = x
                    queue[tail] = u
                    tail += 1
                for v in range(n):
                    if adj[u, v] and not flow[u, v] and parent[v] == -1:
                        parent[v] = x
                        queue[tail] = v
                        tail += 1
        if not found:
            return total

        prev = parent[sink_id]
        snk_used[prev - n] = 1
        cur = prev
        while True:
            prev = parent[cur]
            if prev == -2:
                src_used[cur] = 1
                break
            if prev < n and cur >= n:
                if cur - n == prev:
                    through[prev] = 1
                else:
                    flow[cur - n, prev] = 0
            elif prev >= n and cur < n:
                if prev - n == cur:
                    through[cur] = 0
                else:
                    flow[prev - n, cur] = 1
            cur = prev
        total += 1
