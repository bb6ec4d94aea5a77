"""Centralized brute-force oracles for every definitional object.

These never touch the distributed code path: everything is sequential
BFS / exhaustive checking over the materialized structures, so a verdict
is an independent certificate for whatever a simulated algorithm
produced.

Independence (minimum pairwise distance within a set) is computed from a
single multi-source BFS with source labels: the minimum over adjacent
pairs u,v with different nearest sources of d(u) + d(v) + 1 equals the
minimum pairwise source distance. Edge sets use the same sweep on the
implicit line graph (incidence lists), so no line graph is materialized
even for large inputs.
"""

from __future__ import annotations

import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import (
    CliqueEdgeCover,
    Edge,
    Graph,
    bfs_distances,
    canonical_edge,
    connected_components,
    power_graph,
)


@dataclass(frozen=True)
class Violation:
    kind: str
    witnesses: tuple
    measured: float
    required: float

    def __str__(self) -> str:
        return (f"{self.kind}: witnesses={list(self.witnesses)} "
                f"measured={self.measured} required={self.required}")


@dataclass
class Verdict:
    ok: bool
    violations: list[Violation] = field(default_factory=list)
    achieved_alpha: float | None = None
    achieved_beta: float | None = None
    diversity: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def _verdict(violations: list[Violation], **extra) -> Verdict:
    return Verdict(ok=not violations, violations=violations, **extra)


def _labeled_bfs(g: Graph, sources: list[int]) -> tuple[dict[int, float], dict[int, int]]:
    """Multi-source BFS returning (distance, nearest-source label)."""
    dist: dict[int, float] = {v: math.inf for v in g.nodes}
    label: dict[int, int] = {}
    q: deque[int] = deque()
    for s in sources:
        if dist[s] != 0:
            dist[s] = 0
            label[s] = s
            q.append(s)
    while q:
        v = q.popleft()
        d = dist[v] + 1
        lv = label[v]
        for u in g.neighbors(v):
            if dist[u] == math.inf:
                dist[u] = d
                label[u] = lv
                q.append(u)
    return dist, label


def verify_ruling_set(g: Graph, nodes: Iterable[int], alpha: int, beta: int) -> Verdict:
    """Check independence (pairwise distance >= alpha) and domination
    (every node within beta of the set) by exact BFS."""
    members = sorted(set(nodes))
    for v in members:
        if not g.has_node(v):
            raise ValueError(f"unknown node {v} in ruling set")
    violations: list[Violation] = []

    achieved_alpha: float = math.inf
    witness: tuple | None = None
    achieved_beta: float = 0
    if members:
        dist, label = _labeled_bfs(g, members)
        for u, v in g.edges():
            if label.get(u) is not None and label.get(v) is not None and label[u] != label[v]:
                cand = dist[u] + dist[v] + 1
                if cand < achieved_alpha:
                    achieved_alpha = cand
                    witness = (label[u], label[v])
        if witness is not None and achieved_alpha < alpha:
            violations.append(Violation("independence", witness, achieved_alpha, alpha))
        if g.n:
            achieved_beta = max(dist.values())
            if achieved_beta > beta:
                worst = max(g.nodes, key=lambda v: (dist[v], -v))
                violations.append(Violation("domination", (worst,), dist[worst], beta))
    elif g.n:
        achieved_beta = math.inf
        violations.append(Violation("domination", (g.nodes[0],), math.inf, beta))
    return _verdict(violations, achieved_alpha=achieved_alpha, achieved_beta=achieved_beta)


def _edge_incidence(g: Graph) -> dict[int, list[int]]:
    incident: dict[int, list[int]] = {v: [] for v in g.nodes}
    for i, (u, v) in enumerate(g.edges()):
        incident[u].append(i)
        incident[v].append(i)
    return incident


def _labeled_edge_bfs(g: Graph, source_indices: list[int]) -> tuple[list[float], list[int | None]]:
    """Multi-source BFS over the implicit line graph (edges adjacent iff
    they share an endpoint); returns per-edge-index distance and label."""
    m = g.num_edges
    edges = g.edges()
    incident = _edge_incidence(g)
    dist: list[float] = [math.inf] * m
    label: list[int | None] = [None] * m
    q: deque[int] = deque()
    for i in source_indices:
        if dist[i] != 0:
            dist[i] = 0
            label[i] = i
            q.append(i)
    while q:
        i = q.popleft()
        d = dist[i] + 1
        li = label[i]
        u, v = edges[i]
        for j in incident[u]:
            if dist[j] == math.inf:
                dist[j] = d
                label[j] = li
                q.append(j)
        for j in incident[v]:
            if dist[j] == math.inf:
                dist[j] = d
                label[j] = li
                q.append(j)
    return dist, label


def verify_ruling_edge_set(g: Graph, edges: Iterable[Edge], alpha: int, beta: int) -> Verdict:
    """Edge-set variant: the ruling-set checks with distances measured in
    the line graph of g."""
    member_edges = sorted({canonical_edge(*e) for e in edges})
    member_idx = [g.edge_rank(e) for e in member_edges]
    if g.num_edges == 0:
        return Verdict(ok=not member_edges, achieved_alpha=math.inf, achieved_beta=0)
    violations: list[Violation] = []
    all_edges = g.edges()
    achieved_alpha: float = math.inf
    achieved_beta: float = 0
    if member_idx:
        dist, label = _labeled_edge_bfs(g, member_idx)
        witness: tuple | None = None
        incident = _edge_incidence(g)
        # adjacent line-graph pairs are exactly pairs of edges sharing a node
        for v in g.nodes:
            ids = incident[v]
            if len(ids) < 2:
                continue
            best_i = None
            for i in ids:
                if label[i] is None:
                    continue
                if best_i is None or dist[i] < dist[best_i]:
                    best_i = i
            if best_i is None:
                continue
            for i in ids:
                if i != best_i and label[i] is not None and label[i] != label[best_i]:
                    cand = dist[i] + dist[best_i] + 1
                    if cand < achieved_alpha:
                        achieved_alpha = cand
                        witness = (all_edges[label[best_i]], all_edges[label[i]])
        if witness is not None and achieved_alpha < alpha:
            violations.append(Violation("independence", witness, achieved_alpha, alpha))
        achieved_beta = max(dist)
        if achieved_beta > beta:
            worst = max(range(len(dist)), key=lambda i: dist[i])
            violations.append(Violation("domination", (all_edges[worst],), dist[worst], beta))
    else:
        achieved_beta = math.inf
        violations.append(Violation("domination", (all_edges[0],), math.inf, beta))
    return _verdict(violations, achieved_alpha=achieved_alpha, achieved_beta=achieved_beta)


def edge_set_distances(g: Graph, edges: Iterable[Edge]) -> dict[Edge, float]:
    """Oracle line-graph distance from every edge of g to the given set."""
    idx = [g.edge_rank(e) for e in {canonical_edge(*e) for e in edges}]
    dist, _ = _labeled_edge_bfs(g, sorted(idx))
    return {e: dist[i] for i, e in enumerate(g.edges())}


def verify_edge_kernel(g: Graph, edges: Iterable[Edge], d: int, r: int) -> Verdict:
    """Degree bound on G[F] plus line-graph domination of every edge."""
    kernel = sorted({canonical_edge(*e) for e in edges})
    kernel_idx = [g.edge_rank(e) for e in kernel]
    violations: list[Violation] = []
    deg: dict[int, int] = {}
    for u, v in kernel:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    for v, k in sorted(deg.items()):
        if k > d:
            violations.append(Violation("kernel-degree", (v,), k, d))
    if g.num_edges:
        all_edges = g.edges()
        if kernel_idx:
            dist, _ = _labeled_edge_bfs(g, kernel_idx)
            worst = max(range(len(dist)), key=lambda i: dist[i])
            if dist[worst] > r:
                violations.append(Violation("kernel-domination", (all_edges[worst],), dist[worst], r))
        else:
            violations.append(Violation("kernel-domination", (all_edges[0],), math.inf, r))
    return _verdict(violations)


def verify_vertex_kernel(g: Graph, nodes: Iterable[int], d: int, r: int) -> Verdict:
    kernel = sorted(set(nodes))
    for v in kernel:
        if not g.has_node(v):
            raise ValueError(f"unknown node {v} in kernel")
    violations: list[Violation] = []
    keep = set(kernel)
    for v in kernel:
        k = sum(1 for u in g.neighbors(v) if u in keep)
        if k > d:
            violations.append(Violation("kernel-degree", (v,), k, d))
    if g.n:
        if kernel:
            dist = bfs_distances(g, kernel)
            worst = max(g.nodes, key=lambda v: (dist[v], -v))
            if dist[worst] > r:
                violations.append(Violation("kernel-domination", (worst,), dist[worst], r))
        else:
            violations.append(Violation("kernel-domination", (g.nodes[0],), math.inf, r))
    return _verdict(violations)


def verify_cover(g: Graph, cover: CliqueEdgeCover) -> Verdict:
    """Cliques complete, every node and edge covered; reports diversity."""
    violations: list[Violation] = []
    for i, clique in enumerate(cover.cliques):
        for v in clique:
            if not g.has_node(v):
                raise ValueError(f"clique {i} references unknown node {v}")
        for a in range(len(clique)):
            for b in range(a + 1, len(clique)):
                if not g.has_edge(clique[a], clique[b]):
                    violations.append(
                        Violation("clique-not-complete", (i, clique[a], clique[b]), 0, 1))
    covered = cover.covered_nodes()
    for v in g.nodes:
        if v not in covered:
            violations.append(Violation("node-not-covered", (v,), 0, 1))
    clique_sets = [set(c) for c in cover.cliques]
    for e in g.edges():
        if not any(e[0] in c and e[1] in c for c in clique_sets):
            violations.append(Violation("edge-not-covered", (e,), 0, 1))
    return _verdict(violations[:32], diversity=cover.diversity)


def verify_coloring(g: Graph, colors: dict[int, int], num_colors: int, power: int = 1) -> Verdict:
    """Proper on power_graph(g, power) with all colors below num_colors."""
    violations: list[Violation] = []
    for v in g.nodes:
        if v not in colors:
            raise ValueError(f"node {v} has no color")
        if not (0 <= colors[v] < num_colors):
            violations.append(Violation("color-range", (v,), colors[v], num_colors))
    gp = g if power == 1 else power_graph(g, power)
    for u, v in gp.edges():
        if colors[u] == colors[v]:
            violations.append(Violation("improper", (u, v), colors[u], -1))
    return _verdict(violations[:32])


def verify_matching(g: Graph, edges: Iterable[Edge]) -> Verdict:
    """Pairwise disjoint edges and no augmentable edge left."""
    matched = sorted({canonical_edge(*e) for e in edges})
    violations: list[Violation] = []
    saturated: set[int] = set()
    for u, v in matched:
        if not g.has_edge(u, v):
            raise ValueError(f"unknown edge {(u, v)} in matching")
        if u in saturated or v in saturated:
            violations.append(Violation("not-independent", ((u, v),), 0, 1))
        saturated.add(u)
        saturated.add(v)
    for e in g.edges():
        if e[0] not in saturated and e[1] not in saturated:
            violations.append(Violation("not-maximal", (e,), 0, 1))
            break
    return _verdict(violations)


def plant_ruling_edge_set(g: Graph, target_beta: int, seed: int = 0):
    """Greedy seeded constructor of a (2, beta')-ruling edge set with
    beta' <= target_beta, for exercising the domination reductions.

    Repeatedly adds an edge at line-graph distance >= 2 from everything
    chosen, preferring edges at distance >= target_beta, until every edge
    is within target_beta. Returns (edges, achieved_beta).
    """
    if target_beta < 1:
        raise ValueError("target_beta must be >= 1")
    if g.num_edges == 0:
        raise ValueError("graph has no edges")
    if len(connected_components(g)) != 1:
        raise ValueError("graph must be connected")
    rng = random.Random(seed)
    all_edges = g.edges()
    chosen: list[int] = []
    dist: list[float] = [math.inf] * len(all_edges)
    while True:
        if chosen and max(dist) <= target_beta:
            break
        candidates = [i for i, dv in enumerate(dist) if dv >= 2]
        if not candidates:
            break
        far = [i for i in candidates if dist[i] >= target_beta]
        pool = far if far else candidates
        pick = pool[rng.randrange(len(pool))]
        chosen.append(pick)
        new_dist, _ = _labeled_edge_bfs(g, [pick])
        for i, dv in enumerate(new_dist):
            if dv < dist[i]:
                dist[i] = dv
    achieved = max(dist)
    return sorted(all_edges[i] for i in chosen), achieved
