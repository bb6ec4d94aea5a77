"""Exhaustive enumeration of connected graphs on up to 6 nodes, one
representative per isomorphism class.

Graphs on n nodes are edge-subset bitmasks over the C(n,2) node pairs;
canonicalization takes the minimum mask over all n! node permutations,
vectorized with numpy (6 nodes means 32768 masks x 720 permutations).
Known class counts: 1, 1, 2, 6, 21, 112 for n = 1..6.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from .graph import Graph

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}


def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: i for i, pair in enumerate(combinations(range(n), 2))}


def _connected_mask(mask: int, n: int, pairs: list[tuple[int, int]]) -> bool:
    adj = [[] for _ in range(n)]
    for i, (u, v) in enumerate(pairs):
        if mask >> i & 1:
            adj[u].append(v)
            adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == n


def connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on exactly n nodes up to isomorphism, as
    graphs with sequential IDs, deterministically ordered by canonical
    edge mask."""
    if not (1 <= n <= 6):
        raise ValueError("supported for 1 <= n <= 6")
    if n == 1:
        return [Graph([0], [], 1)]
    pairs = list(combinations(range(n), 2))
    index = _pair_index(n)
    nbits = len(pairs)
    masks = np.array([m for m in range(1, 1 << nbits) if _connected_mask(m, n, pairs)],
                     dtype=np.int64)
    canonical = masks.copy()
    for perm in permutations(range(n)):
        mapped = np.zeros_like(masks)
        for i, (u, v) in enumerate(pairs):
            pu, pv = perm[u], perm[v]
            j = index[(pu, pv) if pu < pv else (pv, pu)]
            mapped |= ((masks >> i) & 1) << j
        np.minimum(canonical, mapped, out=canonical)
    unique = sorted(set(int(m) for m in canonical))
    graphs = []
    for mask in unique:
        edges = [pairs[i] for i in range(nbits) if mask >> i & 1]
        graphs.append(Graph(range(n), edges, n))
    return graphs


def all_connected_graphs(max_n: int = 6) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out
