import math
import random

import pytest

from rulingsets.generators import generate, with_random_ids
from rulingsets.graph import (
    CliqueEdgeCover,
    Graph,
    Hypergraph,
    bfs_distances,
    canonical_edge,
    connected_components,
    edge_distance,
    hyper_line_graph_with_cover,
    id_bits,
    line_graph,
    log_star,
    power_graph,
    trivial_edge_clique_cover,
)
from rulingsets.verify import verify_cover


def test_graph_construction_and_validation():
    g = Graph([0, 1, 2], [(1, 0), (1, 2)], 4)
    assert g.n == 3 and g.idspace == 4
    assert g.edges() == ((0, 1), (1, 2))
    assert g.neighbors(1) == (0, 2)
    assert g.max_degree == 2
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 0)])
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph([0, 1], [(0, 2)])
    with pytest.raises(ValueError):
        Graph([0, 5], [], idspace=5)


def test_edge_rank_is_lexicographic():
    g = Graph(range(4), [(2, 3), (0, 1), (0, 3)])
    assert [g.edge_rank(e) for e in [(0, 1), (0, 3), (2, 3)]] == [0, 1, 2]
    with pytest.raises(ValueError):
        g.edge_rank((1, 2))


def test_canonical_edge():
    assert canonical_edge(5, 2) == (2, 5)
    with pytest.raises(ValueError):
        canonical_edge(3, 3)


def test_line_graph_path():
    g = generate("path", n=3)
    lg = line_graph(g)
    assert lg.n == 2 and lg.edges() == ((0, 1),)


def test_line_graph_triangle_is_triangle():
    lg = line_graph(generate("complete", n=3))
    assert lg.n == 3 and lg.num_edges == 3


def test_line_graph_of_ring_is_isomorphic_ring():
    for n in (5, 8, 13):
        lg = line_graph(generate("ring", n=n))
        assert lg.n == n
        assert all(lg.degree(v) == 2 for v in lg.nodes)
        assert len(connected_components(lg)) == 1


def test_line_graph_no_edges_error():
    with pytest.raises(ValueError, match="no edges"):
        line_graph(Graph(range(3), []))


def test_line_graph_size_and_degree_bounds(mixed_graphs):
    for g in mixed_graphs:
        if g.num_edges == 0:
            continue
        lg = line_graph(g)
        assert lg.n == g.num_edges
        if g.max_degree >= 1:
            assert lg.max_degree <= 2 * (g.max_degree - 1)


def test_hyper_line_graph_examples():
    h = Hypergraph(5, [(0, 1, 2), (2, 3, 4)])
    lg, cover = hyper_line_graph_with_cover(h)
    assert lg.n == 2 and lg.edges() == ((0, 1),)
    assert set(cover.cliques) == {(0,), (0, 1), (1,)}
    assert cover.diversity == 2 <= h.rank
    # disjoint hyperedges: edgeless line graph, singleton cliques
    h2 = Hypergraph(4, [(0, 1), (2, 3)])
    lg2, cover2 = hyper_line_graph_with_cover(h2)
    assert lg2.num_edges == 0
    assert set(cover2.cliques) == {(0,), (1,)}


def test_hyper_line_graph_rank_two_diversity():
    h = Hypergraph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)])
    lg, cover = hyper_line_graph_with_cover(h)
    assert cover.diversity <= 2
    assert verify_cover(lg, cover).ok


def test_hyper_cover_validity_random(mixed_graphs):
    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(4, 30)
        rank = rng.choice([2, 3, 4, 5])
        h = generate("random_hypergraph", n=max(n, rank), num_edges=rng.randint(1, 40),
                     rank=rank, seed=rng.randint(0, 999))
        lg, cover = hyper_line_graph_with_cover(h)
        verdict = verify_cover(lg, cover)
        assert verdict.ok
        assert verdict.diversity <= h.rank


def test_power_graph_examples():
    g = generate("path", n=4)
    assert power_graph(g, 1) == g
    p2 = power_graph(g, 2)
    assert set(p2.edges()) == set(g.edges()) | {(0, 2), (1, 3)}
    c5 = generate("ring", n=5)
    assert power_graph(c5, 2).num_edges == 10  # K5
    with pytest.raises(ValueError):
        power_graph(g, 0)


def test_power_graph_monotone(mixed_graphs):
    for g in mixed_graphs[:12]:
        e1 = set(power_graph(g, 1).edges())
        e2 = set(power_graph(g, 2).edges())
        e3 = set(power_graph(g, 3).edges())
        assert e1 <= e2 <= e3


def test_edge_distance_examples():
    g = generate("path", n=5)
    assert edge_distance(g, (0, 1), (0, 1)) == 0
    assert edge_distance(g, (0, 1), (3, 4)) == 3
    assert edge_distance(g, (0, 1), (1, 2)) == 1
    g2 = Graph(range(4), [(0, 1), (2, 3)])
    assert edge_distance(g2, (0, 1), (2, 3)) == math.inf
    with pytest.raises(ValueError):
        edge_distance(g, (0, 2), (0, 1))


def test_edge_distance_triangle_inequality(mixed_graphs):
    rng = random.Random(3)
    for g in mixed_graphs[:8]:
        edges = g.edges()
        if len(edges) < 3:
            continue
        for _ in range(10):
            e, f, h = (edges[rng.randrange(len(edges))] for _ in range(3))
            def d(a, b):
                return edge_distance(g, a, b)
            if d(e, f) < math.inf and d(f, h) < math.inf:
                assert d(e, h) <= d(e, f) + d(f, h)


def test_bfs_distances_multi_source():
    g = generate("ring", n=8)
    dist = bfs_distances(g, [0, 4])
    assert dist[0] == 0 and dist[4] == 0 and dist[2] == 2 and dist[6] == 2


def test_trivial_cover():
    g = Graph(range(4), [(0, 1), (1, 2)])
    cover = trivial_edge_clique_cover(g)
    assert verify_cover(g, cover).ok
    assert cover.diversity == g.max_degree
    assert (3,) in cover.cliques  # isolated node gets a singleton


def test_clique_cover_shape_validation():
    with pytest.raises(ValueError):
        CliqueEdgeCover([[]])
    q = CliqueEdgeCover([(0, 1), (1, 2)])
    assert q.cliques_of(1) == (0, 1)
    assert q.diversity == 2


def test_hypergraph_validation():
    with pytest.raises(ValueError):
        Hypergraph(3, [(0,)])
    with pytest.raises(ValueError):
        Hypergraph(3, [(0, 5)])
    h = Hypergraph(4, [(0, 1, 2)])
    assert h.rank == 3 and h.incident_edges(1) == (0,)


def test_id_bits_and_log_star():
    assert id_bits(1) == 1
    assert id_bits(2) == 1
    assert id_bits(16) == 4
    assert id_bits(17) == 5
    assert log_star(1) == 0
    assert log_star(2) == 1
    assert log_star(16) == 3
    assert log_star(2 ** 16) == 4


def test_induced_and_with_edges():
    g = generate("ring", n=6)
    sub = g.induced([0, 1, 2])
    assert sub.edges() == ((0, 1), (1, 2))
    assert sub.idspace == g.idspace
    fsub = g.with_edges([(0, 1), (3, 4)])
    assert fsub.n == 6 and fsub.num_edges == 2


def test_generators_deterministic_and_valid():
    g1 = generate("erdos_renyi", n=10, p=0.5, seed=7)
    g2 = generate("erdos_renyi", n=10, p=0.5, seed=7)
    assert g1 == g2
    assert generate("erdos_renyi", n=10, p=0.0, seed=7).num_edges == 0
    ring = generate("ring", n=5)
    assert set(ring.edges()) == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}
    reg = generate("d_regular", n=12, d=3, seed=1)
    assert all(reg.degree(v) == 3 for v in reg.nodes)
    with pytest.raises(ValueError):
        generate("d_regular", n=5, d=3, seed=0)  # nd odd
    with pytest.raises(ValueError):
        generate("d_regular", n=4, d=4, seed=0)  # d >= n
    with pytest.raises(ValueError):
        generate("erdos_renyi", n=5, p=1.5, seed=0)
    with pytest.raises(ValueError):
        generate("ring", n=2)


def test_random_id_mode():
    g = generate("ring", n=9, id_mode="random", seed=3)
    assert g.idspace == 9 ** 3
    assert g.n == 9
    assert all(0 <= v < g.idspace for v in g.nodes)
    assert g.nodes != tuple(range(9))
    g2 = generate("ring", n=9, id_mode="random", seed=3)
    assert g == g2
    relabeled = with_random_ids(generate("path", n=5), seed=2)
    assert relabeled.idspace == 125 and relabeled.num_edges == 4
