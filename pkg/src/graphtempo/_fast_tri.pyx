# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled triangle enumeration kernel (hot loop of tri-graph construction)."""

import numpy as np

cimport numpy as cnp

cnp.import_array()


cdef inline Py_ssize_t _bsearch(cnp.int32_t[::1] indices,
                                Py_ssize_t lo, Py_ssize_t hi,
                                cnp.int32_t target) nogil:
    cdef Py_ssize_t mid, end = hi
    while lo < hi:
        mid = (lo + hi) // 2
        if indices[mid] < target:
            lo = mid + 1
        else:
            hi = mid
    if lo < end and indices[lo] == target:
        return lo
    return -1


def enumerate_triangles(Py_ssize_t n_nodes,
                        cnp.int64_t[::1] indptr,
                        cnp.int32_t[::1] indices,
                        cnp.int32_t[::1] eids,
                        cnp.uint8_t[:, ::1] edge_bits):
    """Same contract as graphtempo._pure_tri.enumerate_triangles."""
    cdef Py_ssize_t nt = edge_bits.shape[1]
    cdef Py_ssize_t v, pa, pb, pij, t
    cdef cnp.int32_t i, j
    cdef int e_ij, e_iv, e_jv
    cdef bint any_bit
    cdef list members = []
    cdef list rows = []
    cdef cnp.uint8_t[::1] row
    cdef cnp.ndarray row_arr

    for v in range(n_nodes):
        for pa in range(indptr[v], indptr[v + 1]):
            i = indices[pa]
            if i >= v:
                break
            e_iv = eids[pa]
            for pb in range(pa + 1, indptr[v + 1]):
                j = indices[pb]
                if j >= v:
                    break
                e_jv = eids[pb]
                # locate edge (i, j) in i's adjacency (i < j guaranteed)
                pij = _bsearch(indices, indptr[i], indptr[i + 1], j)
                if pij < 0 or pij >= indptr[i + 1] or indices[pij] != j:
                    continue
                e_ij = eids[pij]
                row_arr = np.empty(nt, dtype=np.uint8)
                row = row_arr
                any_bit = False
                for t in range(nt):
                    row[t] = edge_bits[e_ij, t] & edge_bits[e_iv, t] & edge_bits[e_jv, t]
                    if row[t]:
                        any_bit = True
                if any_bit:
                    members.append((int(i), int(j), int(v)))
                    rows.append(row_arr)
    if not members:
        return (np.zeros((0, 3), dtype=np.int32), np.zeros((0, nt), dtype=np.uint8))
    return (np.array(members, dtype=np.int32), np.array(rows, dtype=np.uint8))
