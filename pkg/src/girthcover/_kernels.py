"""Compiled inner loops for the exact girth search.

The kernel runs a pruned BFS from every vertex over a CSR adjacency and
returns the length of the shortest cycle found below a cap.  Taking the
minimum over all roots of dist[u] + dist[v] + 1 for non-tree edges uv is
exact: every candidate closes a walk containing a cycle of at most that
length, and a root lying on a shortest cycle realises the girth.
"""

from __future__ import annotations

import numpy as np


def _girth_scan(indptr, indices, n, cap):
    # cap is exclusive: returns min(girth, cap); cap means "no cycle < cap".
    best = cap
    dist = np.empty(n, np.int32)
    parent = np.empty(n, np.int32)
    stamp = np.full(n, -1, np.int32)
    queue = np.empty(n, np.int32)
    for r in range(n):
        if best <= 3:
            break
        head = 0
        tail = 0
        queue[tail] = r
        tail += 1
        stamp[r] = r
        dist[r] = 0
        parent[r] = -1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            # A vertex at depth du can only start a cycle of length >= 2*du + 1.
            if 2 * du + 1 >= best:
                break
            pu = parent[u]
            for e in range(indptr[u], indptr[u + 1]):
                w = indices[e]
                if w == pu:
                    continue
                if stamp[w] == r:
                    if parent[w] != u:
                        cand = du + dist[w] + 1
                        if cand < best:
                            best = cand
                else:
                    stamp[w] = r
                    dist[w] = du + 1
                    parent[w] = u
                    queue[tail] = w
                    tail += 1
    return best


try:  # pragma: no cover - exercised implicitly
    from numba import njit

    girth_scan = njit(cache=True)(_girth_scan)
except ImportError:  # pragma: no cover
    girth_scan = _girth_scan
