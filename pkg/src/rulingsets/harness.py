"""Experiment runner: algorithm registry, oracle-checked records, the
seeded benchmark corpus, and the exhaustive small-graph sweep.

Every experiment pairs an algorithm run with the matching brute-force
verdict; achieved parameters in a record always come from the oracle,
never from the algorithm's claim.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .digitruling import DigitSchedule, ruling_set_from_ids, two_beta_ruling_set
from .diversity import diversity_ruling_set, hypergraph_edge_ruling_set
from .edgesets import three_ruling_edge_set, two_ruling_edge_set
from .coloring import maximal_matching_bounded_degree
from .generators import generate, with_random_ids
from .graph import (
    CliqueEdgeCover,
    Graph,
    Hypergraph,
    hyper_line_graph_with_cover,
    trivial_edge_clique_cover,
)
from .jsonio import edge_certificate, vertex_certificate
from .sim import RunReport, SimConfig
from .smallgraphs import all_connected_graphs
from .verify import Verdict, verify_ruling_edge_set, verify_ruling_set

CSV_COLUMNS = ("n", "idspace", "algorithm", "B", "alpha", "beta_claimed",
               "beta_achieved", "rounds", "max_msg_bits", "wallclock_ms")


@dataclass
class ExperimentRecord:
    graph: str
    algorithm: str
    params: dict[str, Any]
    n: int
    idspace: int
    rounds_used: int
    max_message_bits: int
    alpha_claimed: int
    beta_claimed: int
    achieved_alpha: float | None
    achieved_beta: float | None
    verdict: Verdict
    certificate: dict[str, Any]
    wide_clique_messages: bool = False
    wallclock_ms: float = 0.0
    report: RunReport | None = field(default=None, repr=False)

    def csv_row(self) -> list[str]:
        b = self.params.get("B", "")
        beta_achieved = self.achieved_beta
        if beta_achieved is None:
            beta_achieved = ""
        return [str(self.n), str(self.idspace), self.algorithm, str(b),
                str(self.alpha_claimed), str(self.beta_claimed), str(beta_achieved),
                str(self.rounds_used), str(self.max_message_bits),
                f"{self.wallclock_ms:.1f}"]

    def as_dict(self) -> dict[str, Any]:
        return {
            "graph": self.graph,
            "algorithm": self.algorithm,
            "params": {k: v for k, v in self.params.items()},
            "n": self.n,
            "idspace": self.idspace,
            "rounds_used": self.rounds_used,
            "max_message_bits": self.max_message_bits,
            "alpha_claimed": self.alpha_claimed,
            "beta_claimed": self.beta_claimed,
            "achieved_alpha": _json_num(self.achieved_alpha),
            "achieved_beta": _json_num(self.achieved_beta),
            "verdict_ok": self.verdict.ok,
            "violations": [str(v) for v in self.verdict.violations],
            "wide_clique_messages": self.wide_clique_messages,
            "wallclock_ms": round(self.wallclock_ms, 1),
        }


def _json_num(x):
    if x is None:
        return None
    if x == float("inf"):
        return "inf"
    return x


GRAPH_ALGORITHMS = ("two_ruling_edge_set", "three_ruling_edge_set",
                    "maximal_matching", "ruling_set_from_ids",
                    "two_beta_ruling_set", "diversity_ruling_set")
HYPERGRAPH_ALGORITHMS = ("hypergraph_edge_ruling_set",)
ALGORITHMS = GRAPH_ALGORITHMS + HYPERGRAPH_ALGORITHMS


def run_experiment(desc: str, obj: Graph | Hypergraph, algorithm: str,
                   params: dict[str, Any] | None = None,
                   config: SimConfig | None = None,
                   cover: CliqueEdgeCover | None = None) -> ExperimentRecord:
    """Run one algorithm, oracle-verify its output, and record everything."""
    params = dict(params or {})
    t0 = time.perf_counter()

    if algorithm == "two_ruling_edge_set":
        result, report = two_ruling_edge_set(obj, config)
        alpha, beta = 2, 2
        verdict = verify_ruling_edge_set(obj, result.edges, alpha, beta)
        cert = edge_certificate(result.edges, alpha, beta)
    elif algorithm == "three_ruling_edge_set":
        result, report = three_ruling_edge_set(obj, config)
        alpha, beta = 2, 3
        verdict = verify_ruling_edge_set(obj, result.edges, alpha, beta)
        cert = edge_certificate(result.edges, alpha, beta)
    elif algorithm == "maximal_matching":
        result, report = maximal_matching_bounded_degree(obj, config)
        alpha, beta = 2, 1
        verdict = verify_ruling_edge_set(obj, result.edges, alpha, beta)
        cert = edge_certificate(result.edges, alpha, beta)
    elif algorithm == "ruling_set_from_ids":
        alpha = int(params.get("alpha", 2))
        b = int(params.get("B", 2))
        params.update(alpha=alpha, B=b)
        result, report = ruling_set_from_ids(obj, alpha, b, config)
        beta = result.beta
        verdict = verify_ruling_set(obj, result.nodes, alpha, beta)
        cert = vertex_certificate(result.nodes, alpha, beta)
    elif algorithm == "two_beta_ruling_set":
        beta = int(params.get("beta", 2))
        params.update(beta=beta)
        result, report = two_beta_ruling_set(obj, beta, config)
        alpha = 2
        verdict = verify_ruling_set(obj, result.nodes, alpha, beta)
        cert = vertex_certificate(result.nodes, alpha, beta)
    elif algorithm == "diversity_ruling_set":
        q = cover if cover is not None else trivial_edge_clique_cover(obj)
        result, report = diversity_ruling_set(obj, q, config)
        alpha, beta = 2, result.beta
        verdict = verify_ruling_set(obj, result.nodes, alpha, beta)
        cert = vertex_certificate(result.nodes, alpha, beta)
    elif algorithm == "hypergraph_edge_ruling_set":
        result, report = hypergraph_edge_ruling_set(obj, config)
        alpha, beta = 2, result.beta
        lg, _ = hyper_line_graph_with_cover(obj)
        verdict = verify_ruling_set(lg, result.nodes, alpha, beta)
        cert = vertex_certificate(result.nodes, alpha, beta)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}; choose from {ALGORITHMS}")

    ms = (time.perf_counter() - t0) * 1000.0
    n = obj.n
    idspace = obj.idspace if isinstance(obj, Graph) else max(obj.n, 1)
    return ExperimentRecord(
        graph=desc, algorithm=algorithm, params=params, n=n, idspace=idspace,
        rounds_used=report.rounds_used, max_message_bits=report.max_message_bits,
        alpha_claimed=alpha, beta_claimed=beta,
        achieved_alpha=verdict.achieved_alpha, achieved_beta=verdict.achieved_beta,
        verdict=verdict, certificate=cert, wallclock_ms=ms, report=report,
    )


def benchmark_corpus(count: int = 500, max_n: int = 300) -> list[tuple[str, Graph]]:
    """Deterministic 500-graph corpus: Erdos-Renyi at p in {.02,.1,.5},
    rings, and d-regular graphs for d in {3,5}, mixed ID modes, every
    graph guaranteed at least one edge."""
    corpus: list[tuple[str, Graph]] = []
    idx = 0

    def add(desc: str, g: Graph):
        nonlocal idx
        if g.num_edges == 0:
            return False
        if idx % 2 == 1:
            g = with_random_ids(g, seed=idx)
            desc += "/randids"
        corpus.append((desc, g))
        idx += 1
        return True

    sizes = [3 + (17 * i) % (max_n - 2) for i in range(96)]
    for i, n in enumerate(sizes):
        if len(corpus) >= count:
            break
        add(f"ring(n={n})", generate("ring", n=max(n, 3), seed=i))

    for p, lo in ((0.02, 40), (0.1, 20), (0.5, 8)):
        made = 0
        seed = 0
        while made < 96 and len(corpus) < count:
            n = lo + (13 * seed) % 100
            g = generate("erdos_renyi", n=n, p=p, seed=seed)
            if add(f"er(n={n},p={p},seed={seed})", g):
                made += 1
            seed += 1

    for d in (3, 5):
        made = 0
        seed = 0
        while made < 58 and len(corpus) < count:
            n = 2 * (4 + (7 * seed) % 60)
            g = generate("d_regular", n=n, d=d, seed=seed)
            if add(f"dreg(n={n},d={d},seed={seed})", g):
                made += 1
            seed += 1

    return corpus[:count]


SWEEP_ALGORITHMS = (
    ("two_ruling_edge_set", {}),
    ("ruling_set_from_ids", {"alpha": 2, "B": 2}),
    ("ruling_set_from_ids", {"alpha": 2, "B": 3}),
    ("ruling_set_from_ids", {"alpha": 3, "B": 2}),
    ("ruling_set_from_ids", {"alpha": 3, "B": 3}),
    ("diversity_ruling_set", {}),
)


def sweep_small_graphs(max_n: int = 6, config: SimConfig | None = None) -> list[ExperimentRecord]:
    """Every applicable algorithm on every connected graph with at most
    max_n nodes, in both ID modes, each run oracle-verified."""
    records: list[ExperimentRecord] = []
    for gi, g0 in enumerate(all_connected_graphs(max_n)):
        for mode in ("sequential", "random"):
            g = g0 if mode == "sequential" else with_random_ids(g0, seed=gi)
            desc = f"small#{gi}(n={g.n},m={g.num_edges})/{mode}"
            for algorithm, params in SWEEP_ALGORITHMS:
                if algorithm == "two_ruling_edge_set" and g.num_edges == 0:
                    continue  # nothing to rule on a single node
                records.append(run_experiment(desc, g, algorithm, params, config))
    return records
