"""Immutable graph, hypergraph, and clique-cover structures.

Node IDs are non-negative integers below a declared ``idspace``; the ID
width ceil(log2(idspace)) is what message-size accounting is based on.
Edges are canonically named by their sorted endpoint pair, and the edge
list is kept in lexicographic order so that derived structures (line
graphs, certificates) are reproducible across runs.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the canonical (smaller, larger) form of an edge."""
    if u == v:
        raise ValueError(f"self-loop at node {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with stable node IDs.

    Immutable after construction; adjacency lists are sorted tuples so
    iteration order is deterministic everywhere.
    """

    __slots__ = ("nodes", "idspace", "_adj", "_edges", "_edge_index")

    def __init__(self, nodes: Iterable[int], edges: Iterable[Edge], idspace: int | None = None):
        node_list = sorted(nodes)
        if len(set(node_list)) != len(node_list):
            raise ValueError("duplicate node IDs")
        for v in node_list:
            if not isinstance(v, int) or v < 0:
                raise ValueError(f"node IDs must be non-negative integers, got {v!r}")
        node_set = set(node_list)
        canon = set()
        for u, v in edges:
            e = canonical_edge(u, v)
            if e[0] not in node_set or e[1] not in node_set:
                raise ValueError(f"edge {e} references unknown node")
            if e in canon:
                raise ValueError(f"parallel edge {e}")
            canon.add(e)
        if idspace is None:
            idspace = (node_list[-1] + 1) if node_list else 1
        if node_list and node_list[-1] >= idspace:
            raise ValueError(f"node ID {node_list[-1]} >= idspace {idspace}")
        self.nodes: tuple[int, ...] = tuple(node_list)
        self.idspace = idspace
        adj: dict[int, list[int]] = {v: [] for v in node_list}
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        self._adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._edges: tuple[Edge, ...] = tuple(sorted(canon))
        self._edge_index: dict[Edge, int] = {e: i for i, e in enumerate(self._edges)}

    @property
    def n(self) -> int:
        return len(self.nodes)

    def edges(self) -> tuple[Edge, ...]:
        """All edges in lexicographic order; the index of an edge in this
        tuple is its canonical line-graph node ID."""
        return self._edges

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_node(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self._edge_index

    def edge_rank(self, e: Edge) -> int:
        """Lexicographic rank of an edge (its node ID in the line graph)."""
        e = canonical_edge(*e)
        if e not in self._edge_index:
            raise ValueError(f"unknown edge {e}")
        return self._edge_index[e]

    def with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Graph on the same node set and idspace restricted to `edges`."""
        return Graph(self.nodes, edges, self.idspace)

    def induced(self, nodes: Iterable[int]) -> "Graph":
        """Subgraph induced by a node subset (same idspace)."""
        keep = set(nodes)
        for v in keep:
            if v not in self._adj:
                raise ValueError(f"unknown node {v}")
        edges = [e for e in self._edges if e[0] in keep and e[1] in keep]
        return Graph(sorted(keep), edges, self.idspace)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.nodes == other.nodes
            and self.idspace == other.idspace
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.nodes, self.idspace, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, idspace={self.idspace})"


class Hypergraph:
    """Rank-bounded hypergraph on vertices 0..n-1."""

    __slots__ = ("n", "edges")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError("n must be >= 0")
        self.n = n
        norm = []
        for e in edges:
            members = tuple(sorted(set(e)))
            if len(members) < 2:
                raise ValueError(f"hyperedge {members} has fewer than 2 vertices")
            if members[0] < 0 or members[-1] >= n:
                raise ValueError(f"hyperedge {members} references vertex outside 0..{n - 1}")
            norm.append(members)
        self.edges: tuple[tuple[int, ...], ...] = tuple(norm)

    @property
    def rank(self) -> int:
        return max((len(e) for e in self.edges), default=0)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if v in e)

    def __repr__(self) -> str:
        return f"Hypergraph(n={self.n}, m={self.num_edges}, rank={self.rank})"


class CliqueEdgeCover:
    """A set of cliques intended to cover all nodes and edges of a graph.

    Validity against a particular graph is checked by
    :func:`rulingsets.verify.verify_cover`; this class only normalizes
    shape and exposes the membership index and the diversity (the maximum
    number of cliques any single node belongs to).
    """

    __slots__ = ("cliques", "_membership")

    def __init__(self, cliques: Iterable[Iterable[int]]):
        norm = []
        for c in cliques:
            members = tuple(sorted(set(c)))
            if not members:
                raise ValueError("empty clique")
            if members[0] < 0:
                raise ValueError("negative node ID in clique")
            norm.append(members)
        self.cliques: tuple[tuple[int, ...], ...] = tuple(norm)
        membership: dict[int, list[int]] = {}
        for i, c in enumerate(self.cliques):
            for v in c:
                membership.setdefault(v, []).append(i)
        self._membership = {v: tuple(ix) for v, ix in membership.items()}

    @property
    def diversity(self) -> int:
        return max((len(ix) for ix in self._membership.values()), default=0)

    def cliques_of(self, v: int) -> tuple[int, ...]:
        return self._membership.get(v, ())

    def covered_nodes(self) -> set[int]:
        return set(self._membership)

    def __repr__(self) -> str:
        return f"CliqueEdgeCover(k={len(self.cliques)}, diversity={self.diversity})"


def bfs_distances(g: Graph, sources: Iterable[int]) -> dict[int, float]:
    """Exact multi-source BFS distances; unreachable nodes get math.inf."""
    dist: dict[int, float] = {v: math.inf for v in g.nodes}
    q: deque[int] = deque()
    for s in sources:
        if not g.has_node(s):
            raise ValueError(f"unknown source node {s}")
        if dist[s] != 0:
            dist[s] = 0
            q.append(s)
    while q:
        v = q.popleft()
        d = dist[v] + 1
        for u in g.neighbors(v):
            if dist[u] == math.inf:
                dist[u] = d
                q.append(u)
    return dist


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    comps = []
    for start in g.nodes:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        q = deque([start])
        while q:
            v = q.popleft()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    q.append(u)
        comps.append(tuple(sorted(comp)))
    return comps


def line_graph(g: Graph) -> Graph:
    """Line graph of g: one node per edge (numbered by lexicographic edge
    rank), adjacent iff the edges share an endpoint."""
    m = g.num_edges
    if m == 0:
        raise ValueError("no edges")
    pairs = set()
    incident: dict[int, list[int]] = {v: [] for v in g.nodes}
    for i, (u, v) in enumerate(g.edges()):
        incident[u].append(i)
        incident[v].append(i)
    for ids in incident.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                pairs.add((ids[a], ids[b]))
    return Graph(range(m), pairs, idspace=m)


def hyper_line_graph_with_cover(h: Hypergraph) -> tuple[Graph, CliqueEdgeCover]:
    """Line graph of a hypergraph plus the per-vertex clique edge cover.

    Nodes of the line graph are hyperedge indices, adjacent iff the
    hyperedges intersect. The cover contains, for each hypergraph vertex
    with at least one incident edge, the clique of its incident edges;
    its diversity is at most rank(h).
    """
    m = h.num_edges
    incident: dict[int, list[int]] = {}
    for i, e in enumerate(h.edges):
        for v in e:
            incident.setdefault(v, []).append(i)
    pairs = set()
    for ids in incident.values():
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                pairs.add((ids[a], ids[b]))
    lg = Graph(range(m), pairs, idspace=max(m, 1))
    cliques = sorted({tuple(ids) for ids in incident.values()})
    return lg, CliqueEdgeCover(cliques)


def trivial_edge_clique_cover(g: Graph) -> CliqueEdgeCover:
    """One 2-clique per edge plus singletons for isolated nodes (diversity
    max(Delta, 1) on graphs with at least one node)."""
    cliques: list[tuple[int, ...]] = [e for e in g.edges()]
    cliques.extend((v,) for v in g.nodes if g.degree(v) == 0)
    return CliqueEdgeCover(cliques)


def power_graph(g: Graph, k: int) -> Graph:
    """Graph on the same nodes with edges between all pairs at distance
    1..k. Oracle/verifier use only; never called from node programs."""
    if k < 1:
        raise ValueError("k must be >= 1")
    edges = []
    for v in g.nodes:
        dist = _bounded_bfs(g, v, k)
        for u, d in dist.items():
            if u > v and 1 <= d <= k:
                edges.append((v, u))
    return Graph(g.nodes, edges, g.idspace)


def _bounded_bfs(g: Graph, source: int, radius: int) -> dict[int, int]:
    dist = {source: 0}
    q = deque([source])
    while q:
        v = q.popleft()
        if dist[v] == radius:
            continue
        for u in g.neighbors(v):
            if u not in dist:
                dist[u] = dist[v] + 1
                q.append(u)
    return dist


def edge_distance(g: Graph, e: Edge, f: Edge) -> float:
    """Distance between two edges = BFS distance of the corresponding
    nodes in line_graph(g); math.inf across components."""
    lg = line_graph(g)
    ei, fi = g.edge_rank(e), g.edge_rank(f)
    return bfs_distances(lg, [ei])[fi]


def line_graph_distances(g: Graph, edge_set: Iterable[Edge]) -> dict[Edge, float]:
    """Line-graph distance from every edge of g to the given edge set."""
    lg = line_graph(g)
    sources = [g.edge_rank(e) for e in edge_set]
    dist = bfs_distances(lg, sources)
    all_edges = g.edges()
    return {all_edges[i]: d for i, d in dist.items()}


def id_bits(idspace: int) -> int:
    """Width in bits of an ID drawn from [0, idspace)."""
    if idspace < 1:
        raise ValueError("idspace must be >= 1")
    return max(1, (idspace - 1).bit_length())


def log_star(x: float) -> int:
    """Iterated base-2 logarithm: applications of log2 until <= 1."""
    count = 0
    while x > 1:
        x = math.log2(x)
        count += 1
    return count
