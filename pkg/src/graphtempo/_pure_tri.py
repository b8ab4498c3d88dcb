"""Pure-Python triangle enumeration kernel.

Same contract as the compiled kernel in _fast_tri.pyx; used as the
fallback when the extension is not built (or when forced via the
GRAPHTEMPO_PURE_PYTHON environment variable).
"""

from __future__ import annotations

import numpy as np


def enumerate_triangles(n_nodes, indptr, indices, eids, edge_bits):
    """Enumerate closed triangles over a sorted-CSR undirected adjacency.

    For each seed node v, neighbor pairs (i, j) with i < j < v are tested,
    so each triangle is emitted exactly once. A triangle row's bit at t is
    1 iff all three edge rows have bit 1 at t; rows that are all-zero are
    skipped.

    Returns (members int32 [m, 3], bits uint8 [m, n_time]).
    """
    nt = edge_bits.shape[1] if edge_bits.ndim == 2 else 0
    members: list[tuple[int, int, int]] = []
    bit_rows: list[np.ndarray] = []
    # edge row lookup for pair (min, max)
    pair_eid: dict[tuple[int, int], int] = {}
    for u in range(n_nodes):
        for p in range(indptr[u], indptr[u + 1]):
            w = int(indices[p])
            if w > u:
                pair_eid[(u, w)] = int(eids[p])
    for v in range(n_nodes):
        nbrs = [int(indices[p]) for p in range(indptr[v], indptr[v + 1]) if indices[p] < v]
        eid_v = {
            int(indices[p]): int(eids[p])
            for p in range(indptr[v], indptr[v + 1])
            if indices[p] < v
        }
        for a in range(len(nbrs)):
            i = nbrs[a]
            for b in range(a + 1, len(nbrs)):
                j = nbrs[b]
                e_ij = pair_eid.get((i, j) if i < j else (j, i))
                if e_ij is None:
                    continue
                bits = edge_bits[e_ij] & edge_bits[eid_v[i]] & edge_bits[eid_v[j]]
                if bits.any():
                    members.append((i, j, v) if i < j else (j, i, v))
                    bit_rows.append(bits)
    if not members:
        return np.zeros((0, 3), dtype=np.int32), np.zeros((0, nt), dtype=np.uint8)
    return np.array(members, dtype=np.int32), np.array(bit_rows, dtype=np.uint8)
