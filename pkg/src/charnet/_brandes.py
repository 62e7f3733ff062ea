"""Compiled Brandes accumulation over simple-view CSR arrays."""

import numpy as np
from numba import njit


@njit(cache=True)
def brandes_csr(indptr, indices, alive, sources):
    """Vertex and per-slot edge dependencies summed over ``sources``.

    ``alive[j]`` masks CSR slot ``j``; both slots of an undirected edge must
    agree. Sums run over ordered (source, target) pairs, so callers halve
    them for unordered pairs. Slot ``j`` in row ``w`` pointing at ``v``
    receives the flow that crosses edge ``v -> w`` away from the source.
    """
    n = indptr.shape[0] - 1
    vb = np.zeros(n)
    eb = np.zeros(indices.shape[0])
    dist = np.full(n, -1, np.int64)
    sigma = np.zeros(n)
    delta = np.zeros(n)
    order = np.empty(n, np.int64)
    for s in sources:
        for i in range(n):
            dist[i] = -1
            sigma[i] = 0.0
            delta[i] = 0.0
        dist[s] = 0
        sigma[s] = 1.0
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            for j in range(indptr[v], indptr[v + 1]):
                if not alive[j]:
                    continue
                w = indices[j]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        for k in range(tail - 1, 0, -1):
            w = order[k]
            coeff = (1.0 + delta[w]) / sigma[w]
            for j in range(indptr[w], indptr[w + 1]):
                if not alive[j]:
                    continue
                v = indices[j]
                if dist[v] == dist[w] - 1:
                    c = sigma[v] * coeff
                    eb[j] += c
                    delta[v] += c
            vb[w] += delta[w]
    return vb, eb


@njit(cache=True)
def bfs_levels(indptr, indices, alive, source):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    dist[source] = 0
    order[0] = source
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        for j in range(indptr[v], indptr[v + 1]):
            if alive[j] and dist[indices[j]] < 0:
                dist[indices[j]] = dist[v] + 1
                order[tail] = indices[j]
                tail += 1
    return dist


def all_alive(indices: np.ndarray) -> np.ndarray:
    return np.ones(indices.shape[0], dtype=np.bool_)
