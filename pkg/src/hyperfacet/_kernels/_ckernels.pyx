# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Entry points take the same list-based inputs as
py_kernels and return identical outputs; internally the work runs on
flattened int64 CSR buffers."""

import numpy as np

from cpython.bytes cimport PyBytes_FromStringAndSize

ctypedef long long i64


cdef void _sort_i64(i64* a, Py_ssize_t n) noexcept nogil:
    # quicksort with median-of-three pivot and insertion sort below 16;
    # avoids libc qsort's comparator call overhead
    cdef Py_ssize_t i, j, lo, hi
    cdef i64 pivot, tmp
    while n > 16:
        lo = 0
        hi = n - 1
        i = n >> 1
        # median of a[0], a[i], a[hi] into a[i]
        if a[i] < a[lo]:
            tmp = a[i]; a[i] = a[lo]; a[lo] = tmp
        if a[hi] < a[lo]:
            tmp = a[hi]; a[hi] = a[lo]; a[lo] = tmp
        if a[hi] < a[i]:
            tmp = a[hi]; a[hi] = a[i]; a[i] = tmp
        pivot = a[i]
        i = 0
        j = n - 1
        while True:
            while a[i] < pivot:
                i += 1
            while a[j] > pivot:
                j -= 1
            if i >= j:
                break
            tmp = a[i]; a[i] = a[j]; a[j] = tmp
            i += 1
            j -= 1
        # recurse into the smaller side, loop on the larger
        if j + 1 < n - j - 1:
            _sort_i64(a, j + 1)
            a += j + 1
            n -= j + 1
        else:
            _sort_i64(a + j + 1, n - j - 1)
            n = j + 1
    for i in range(1, n):
        tmp = a[i]
        j = i
        while j > 0 and a[j - 1] > tmp:
            a[j] = a[j - 1]
            j -= 1
        a[j] = tmp


cdef _flatten(rows):
    # list[list[int]] -> (indptr, indices) int64 arrays
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t nnz = 0
    for row in rows:
        nnz += len(row)
    indptr_a = np.empty(n + 1, dtype=np.int64)
    indices_a = np.empty(nnz, dtype=np.int64)
    cdef i64[::1] indptr = indptr_a
    cdef i64[::1] indices = indices_a
    cdef Py_ssize_t i = 0, p = 0
    indptr[0] = 0
    for row in rows:
        for val in row:
            indices[p] = val
            p += 1
        i += 1
        indptr[i] = p
    return indptr_a, indices_a


cdef inline i64 _find(i64[::1] parent, i64 x) noexcept nogil:
    cdef i64 root = x
    cdef i64 nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def edge_components(int n_vertices, edge_rows):
    """See py_kernels.edge_components."""
    cdef Py_ssize_t n_edges = len(edge_rows)
    indptr_a, indices_a = _flatten(edge_rows)
    cdef i64[::1] indptr = indptr_a
    cdef i64[::1] indices = indices_a

    parent_a = np.arange(n_vertices, dtype=np.int64)
    cdef i64[::1] parent = parent_a
    cdef Py_ssize_t e, j
    cdef i64 ra, rb

    for e in range(n_edges):
        if indptr[e + 1] - indptr[e] < 2:
            continue
        ra = _find(parent, indices[indptr[e]])
        for j in range(indptr[e] + 1, indptr[e + 1]):
            rb = _find(parent, indices[j])
            if rb != ra:
                if rb < ra:
                    ra, rb = rb, ra
                parent[rb] = ra

    # dense labels by first appearance in vertex order
    label_a = np.full(n_vertices, -1, dtype=np.int64)
    vlabels_a = np.empty(n_vertices, dtype=np.int64)
    cdef i64[::1] label_of_root = label_a
    cdef i64[::1] vlabels = vlabels_a
    cdef i64 next_label = 0, r
    cdef Py_ssize_t v
    for v in range(n_vertices):
        r = _find(parent, v)
        if label_of_root[r] < 0:
            label_of_root[r] = next_label
            next_label += 1
        vlabels[v] = label_of_root[r]

    elabels_a = np.empty(n_edges, dtype=np.int64)
    cdef i64[::1] elabels = elabels_a
    for e in range(n_edges):
        if indptr[e + 1] == indptr[e]:
            elabels[e] = -1
        else:
            elabels[e] = vlabels[indices[indptr[e]]]
    return vlabels_a.tolist(), elabels_a.tolist()


def union_rows(groups, rows, Py_ssize_t n_symbols):
    """See py_kernels.union_rows."""
    cdef Py_ssize_t n_groups = len(groups)
    r_indptr_a, r_indices_a = _flatten(rows)
    g_indptr_a, g_indices_a = _flatten(groups)
    cdef i64[::1] r_indptr = r_indptr_a
    cdef i64[::1] r_indices = r_indices_a
    cdef i64[::1] g_indptr = g_indptr_a
    cdef i64[::1] g_indices = g_indices_a

    # upper bound on output size: every referenced row kept whole
    cdef Py_ssize_t cap = 0
    cdef Py_ssize_t g, k, j
    cdef i64 r
    for g in range(n_groups):
        for k in range(g_indptr[g], g_indptr[g + 1]):
            r = g_indices[k]
            cap += r_indptr[r + 1] - r_indptr[r]

    stamp_a = np.full(max(n_symbols, 1), -1, dtype=np.int64)
    buf_a = np.empty(max(cap, 1), dtype=np.int64)
    bounds_a = np.empty(n_groups + 1, dtype=np.int64)
    cdef i64[::1] stamp = stamp_a
    cdef i64[::1] buf = buf_a
    cdef i64[::1] bounds = bounds_a

    cdef Py_ssize_t cursor = 0, start
    cdef i64 sym
    bounds[0] = 0
    for g in range(n_groups):
        start = cursor
        if g_indptr[g + 1] - g_indptr[g] == 1:
            # single row: already sorted and unique by contract
            r = g_indices[g_indptr[g]]
            for j in range(r_indptr[r], r_indptr[r + 1]):
                buf[cursor] = r_indices[j]
                cursor += 1
        else:
            for k in range(g_indptr[g], g_indptr[g + 1]):
                r = g_indices[k]
                for j in range(r_indptr[r], r_indptr[r + 1]):
                    sym = r_indices[j]
                    if stamp[sym] != g:
                        stamp[sym] = g
                        buf[cursor] = sym
                        cursor += 1
            if cursor - start > 1:
                _sort_i64(&buf[start], cursor - start)
        bounds[g + 1] = cursor

    out = []
    for g in range(n_groups):
        out.append(buf_a[bounds[g]:bounds[g + 1]].tolist())
    return out


def group_rows(rows):
    """See py_kernels.group_rows."""
    indptr_a, indices_a = _flatten(rows)
    cdef i64[::1] indptr = indptr_a
    cdef i64[::1] indices = indices_a
    cdef Py_ssize_t n = len(rows)
    cdef dict seen = {}
    cdef list out = []
    cdef Py_ssize_t i, a, b
    for i in range(n):
        a = indptr[i]
        b = indptr[i + 1]
        if b > a:
            key = PyBytes_FromStringAndSize(<char*> &indices[a], (b - a) * sizeof(i64))
        else:
            key = b""
        out.append(seen.setdefault(key, len(seen)))
    return out
