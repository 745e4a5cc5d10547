"""Compiled inner loop of the exhaustive rotation search.

Darts are numbered ``3 * v + j`` (leave vertex v along label j). For a cubic
graph with labelled edges the face successor of a dart only depends on the
rotation bit of the vertex it arrives at, so the successor table is
precomputed for both bit values.
"""

from __future__ import annotations

import numba
import numpy as np


def successor_tables(adjacency: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return (head, nxt) with nxt[d, bit] the next dart after d.

    ``head[d]`` is the vertex dart d arrives at. Bit 0 means cyclic order
    (a, b, c), bit 1 means (a, c, b).
    """
    nv = adjacency.shape[0]
    darts = np.arange(3 * nv)
    v, j = darts // 3, darts % 3
    head = adjacency[v, j].astype(np.int64)
    nxt = np.empty((3 * nv, 2), dtype=np.int64)
    nxt[:, 0] = 3 * head + (j + 1) % 3
    nxt[:, 1] = 3 * head + (j + 2) % 3
    return head, nxt


@numba.njit(cache=True, nogil=True)
def count_faces(head, nxt, mask, visited, stamp):
    r = 0
    nd = head.shape[0]
    for d in range(nd):
        if visited[d] == stamp:
            continue
        r += 1
        e = d
        while visited[e] != stamp:
            visited[e] = stamp
            e = nxt[e, (mask >> head[e]) & 1]
    return r


@numba.njit(cache=True, nogil=True)
def scan_range(head, nxt, lo, hi, target):
    """Best (faces, mask) over masks in [lo, hi); smallest mask wins ties.

    Stops as soon as ``target`` faces are reached, since later masks in the
    range can then only tie.
    """
    visited = np.zeros(head.shape[0], dtype=np.int64)
    best_r = -1
    best_mask = lo
    stamp = 0
    for mask in range(lo, hi):
        stamp += 1
        r = count_faces(head, nxt, mask, visited, stamp)
        if r > best_r:
            best_r = r
            best_mask = mask
            if r >= target:
                break
    return best_r, best_mask
