"""Deterministic graph and hypergraph generators for experiments.

Every generator is a pure function of (kind, params, seed). Structured
families (ring, path, complete) ignore the seed for the topology; the seed
still drives randomized ID assignment when requested.
"""

from __future__ import annotations

import random
from typing import Any

from .graph import Graph, Hypergraph

KINDS = ("ring", "path", "complete", "erdos_renyi", "d_regular", "random_hypergraph")


def generate(kind: str, *, n: int, seed: int = 0, id_mode: str = "sequential",
             p: float | None = None, d: int | None = None,
             num_edges: int | None = None, rank: int | None = None) -> Graph | Hypergraph:
    """Build a named test graph or hypergraph.

    id_mode "sequential" gives IDs 0..n-1 with idspace n; "random" gives a
    seeded distinct assignment from [0, n^3) with idspace n^3, matching the
    O(log n)-bit ID regime.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "ring":
        if n < 3:
            raise ValueError("ring needs n >= 3")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "complete":
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    elif kind == "erdos_renyi":
        if p is None or not (0.0 <= p <= 1.0):
            raise ValueError("erdos_renyi needs 0 <= p <= 1")
        rng = random.Random(seed)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    elif kind == "d_regular":
        if d is None:
            raise ValueError("d_regular needs d")
        edges = _random_regular_edges(n, d, seed)
    else:  # random_hypergraph
        if rank is None or rank < 2:
            raise ValueError("random_hypergraph needs rank >= 2")
        if num_edges is None or num_edges < 0:
            raise ValueError("random_hypergraph needs num_edges >= 0")
        if n < rank:
            raise ValueError("random_hypergraph needs n >= rank")
        rng = random.Random(seed)
        hedges = []
        for _ in range(num_edges):
            size = rng.randint(2, rank)
            hedges.append(sorted(rng.sample(range(n), size)))
        return Hypergraph(n, hedges)

    if id_mode == "sequential":
        return Graph(range(n), edges, idspace=n)
    if id_mode == "random":
        idspace = n ** 3
        rng = random.Random((seed, "ids"))
        ids = rng.sample(range(idspace), n)
        relabeled = [(ids[u], ids[v]) for u, v in edges]
        return Graph(ids, relabeled, idspace=idspace)
    raise ValueError(f"unknown id_mode {id_mode!r}")


def _random_regular_edges(n: int, d: int, seed: int) -> list[tuple[int, int]]:
    """Seeded pairing-model sampler for d-regular graphs (retries the
    stub matching until a simple graph comes out)."""
    if d < 0 or d >= n:
        raise ValueError(f"d_regular needs 0 <= d < n, got d={d}, n={n}")
    if (n * d) % 2 != 0:
        raise ValueError("d_regular needs n*d even")
    if d == 0:
        return []
    rng = random.Random(seed)
    for _ in range(1000):
        edges = _try_pairing(n, d, rng)
        if edges is not None:
            return edges
    raise ValueError(f"could not sample a {d}-regular graph on {n} nodes")


def _try_pairing(n: int, d: int, rng: random.Random) -> list[tuple[int, int]] | None:
    edges: set[tuple[int, int]] = set()
    stubs = list(range(n)) * d
    while stubs:
        leftovers: dict[int, int] = {}
        rng.shuffle(stubs)
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            if s1 > s2:
                s1, s2 = s2, s1
            if s1 != s2 and (s1, s2) not in edges:
                edges.add((s1, s2))
            else:
                leftovers[s1] = leftovers.get(s1, 0) + 1
                leftovers[s2] = leftovers.get(s2, 0) + 1
        if not leftovers:
            return sorted(edges)
        if not _suitable(edges, leftovers):
            return None
        stubs = [v for v, k in leftovers.items() for _ in range(k)]
    return sorted(edges)


def _suitable(edges: set[tuple[int, int]], leftovers: dict[int, int]) -> bool:
    nodes = sorted(leftovers)
    for i, s1 in enumerate(nodes):
        for s2 in nodes[i + 1:]:
            if (s1, s2) not in edges:
                return True
    return False


def with_random_ids(g: Graph, seed: int = 0) -> Graph:
    """Relabel a sequential-ID graph with a seeded distinct assignment
    from [0, n^3), exercising the O(log n)-bit ID regime."""
    idspace = max(g.n, 1) ** 3
    rng = random.Random((seed, "ids"))
    ids = rng.sample(range(idspace), g.n)
    mapping = dict(zip(g.nodes, ids))
    return Graph(ids, [(mapping[u], mapping[v]) for u, v in g.edges()], idspace)


def describe(kind: str, params: dict[str, Any]) -> str:
    """Short descriptor string for experiment records and CSV rows."""
    items = ",".join(f"{k}={v}" for k, v in sorted(params.items()))
    return f"{kind}({items})"
