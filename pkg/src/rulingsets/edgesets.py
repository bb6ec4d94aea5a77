"""Edge-kernel proposal, ruling edge sets, and domination reductions.

Everything here runs on the node simulator. Edge-level logic is owned by
the smaller-ID endpoint of each edge; the larger endpoint mirrors the
edge state from the owner's announcements, so both endpoints always agree
on per-edge facts (color, ruling membership, distance class).

The pipeline is: a two-round proposal builds an edge set F whose induced
graph has degree at most 2 while every edge of G is within line-graph
distance 2 of F; a maximal matching of G[F] then gives a (2,3)-ruling
edge set; a constant-round candidate/accept pass on the distance-2 edges
upgrades it to (2,2). The candidate/accept pass, iterated, lowers any
domination bound by one per round batch.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .coloring import MatchingSub, maximal_matching_bounded_degree
from .colorreduce import reduction_schedule
from .digitruling import RulingSet
from .graph import Edge, Graph, canonical_edge, id_bits
from .sim import EMPTY_INBOX, Message, NodeProgram, RunReport, SimConfig, run
from .verify import verify_matching, verify_ruling_edge_set


@dataclass(frozen=True)
class EdgeKernel:
    """Edge set F with max degree of G[F] at most d and every edge of G
    within line-graph distance r of F."""

    edges: frozenset[Edge]
    d: int
    r: int


@dataclass(frozen=True)
class RulingEdgeSet:
    """Edges pairwise at line-graph distance >= alpha dominating every
    edge within beta (beta is the claimed bound, not the achieved one)."""

    edges: frozenset[Edge]
    alpha: int
    beta: int


class KernelSub:
    """Two-round proposal: propose the incident edge toward the smallest
    neighbor, then accept the incident proposed edge with the smallest
    proposer (self-proposals excluded). f_nbrs ends as the set of
    neighbors sharing a kernel edge with this node."""

    __slots__ = ("self_id", "nbrs", "proposed_to", "f_nbrs", "id_width", "r")

    def __init__(self, self_id: int, nbrs: tuple[int, ...], idspace: int):
        self.self_id = self_id
        self.nbrs = nbrs
        self.proposed_to = min(nbrs) if nbrs else None
        self.f_nbrs: set[int] = set()
        self.id_width = id_bits(idspace)
        self.r = 0

    def step(self, inbox: Mapping[int, Message]):
        r = self.r
        self.r += 1
        out: dict[int, Message] = {}
        if r == 0:
            if self.proposed_to is None:
                return None, True  # isolated: nothing to propose or accept
            msg = Message.bits(self.proposed_to, self.id_width)
            for u in self.nbrs:
                out[u] = msg
            return out, False
        if r == 1:
            proposers = [v for v in sorted(inbox) if inbox[v].to_int() == self.self_id]
            if proposers:
                accepted = proposers[0]
                self.f_nbrs.add(accepted)
                out[accepted] = Message.bits(1, 1)
            return out or None, False
        # r == 2: acceptance notices for this node's own proposal
        for v in sorted(inbox):
            self.f_nbrs.add(v)
        return None, True


class ReduceSub:
    """One domination-reduction iteration in five rounds, repeated.

    Rounds 0-2 classify every incident edge by its line-graph distance to
    the current ruling set, capped at 4 (a node broadcasts the minimum
    class among its incident edges; both endpoints relax the shared edge
    identically). Round 3: a node with both a class-2 and a class-3
    incident edge proposes its smallest class-2 edge. Round 4: a node
    with an incident candidate and an incident class-1 edge accepts its
    smallest candidate, which joins the set; acceptance notices land at
    the start of the next iteration.
    """

    FAR = 4  # class value meaning "distance >= 4"

    __slots__ = ("self_id", "nbrs", "in_r", "iterations", "classes", "m_own",
                 "own_candidate", "class_history", "r")

    def __init__(self, self_id: int, nbrs: tuple[int, ...], r_nbrs, iterations: int):
        self.self_id = self_id
        self.nbrs = nbrs
        self.in_r = set(r_nbrs)
        self.iterations = iterations
        self.classes: dict[int, int] = {}
        self.m_own = self.FAR
        self.own_candidate: int | None = None
        self.class_history: list[dict[Edge, int]] = []
        self.r = 0

    def _edge(self, u: int) -> Edge:
        return canonical_edge(self.self_id, u)

    def _m_message(self) -> Message | None:
        self.m_own = min(self.classes.values(), default=self.FAR)
        if self.m_own <= 2:
            return Message.bits(self.m_own, 2)
        return None

    def step(self, inbox: Mapping[int, Message]):
        r = self.r
        self.r += 1
        it, pos = divmod(r, 5)
        out: dict[int, Message] = {}

        if pos == 0:
            if it > 0:
                for v in sorted(inbox):  # acceptance notices
                    self.in_r.add(v)
            if it == self.iterations:
                return None, True
            self.classes = {v: 0 if v in self.in_r else self.FAR for v in self.nbrs}
            self.own_candidate = None
            msg = self._m_message()
            if msg is not None:
                for u in self.nbrs:
                    out[u] = msg
            return out or None, False

        if pos in (1, 2, 3):
            prev_own = self.m_own
            for v in self.nbrs:
                m_v = inbox[v].to_int() if v in inbox else self.FAR
                alt = 1 + min(prev_own, m_v)
                if alt < self.classes[v]:
                    self.classes[v] = alt
            if pos < 3:
                msg = self._m_message()
                if msg is not None:
                    for u in self.nbrs:
                        out[u] = msg
            else:
                self.class_history.append({self._edge(v): c for v, c in self.classes.items()})
                has3 = any(c == 3 for c in self.classes.values())
                twos = sorted(v for v, c in self.classes.items() if c == 2)
                if has3 and twos:
                    target = min(twos, key=lambda v: self._edge(v))
                    self.own_candidate = target
                    out[target] = Message.bits(1, 1)
            return out or None, False

        # pos == 4: accept
        candidates = [v for v in sorted(inbox)]
        if self.own_candidate is not None:
            candidates.append(self.own_candidate)
        has1 = any(c == 1 for c in self.classes.values())
        if candidates and has1:
            pick = min(candidates, key=lambda v: self._edge(v))
            self.in_r.add(pick)
            out[pick] = Message.bits(1, 1)
        return out or None, False


class EdgeKernelProgram(NodeProgram):
    """Standalone two-round edge-kernel proposal."""

    def init(self, self_id, degree, neighbors, params):
        return KernelSub(self_id, neighbors, params["idspace"])

    def step(self, state, inbox):
        out, done = state.step(inbox)
        return state, out, done

    def output(self, state):
        return sorted(canonical_edge(state.self_id, u) for u in state.f_nbrs)


class DominationReduceProgram(NodeProgram):
    """Standalone reduction: params["node_inputs"][v] lists the neighbors
    whose shared edge is in the input ruling set."""

    def __init__(self, iterations: int):
        self.iterations = iterations

    def init(self, self_id, degree, neighbors, params):
        r_nbrs = params["node_inputs"].get(self_id, ())
        return ReduceSub(self_id, neighbors, r_nbrs, self.iterations)

    def step(self, state, inbox):
        out, done = state.step(inbox)
        return state, out, done

    def output(self, state):
        return {
            "ruling": sorted(state._edge(u) for u in state.in_r),
            "class_history": state.class_history,
        }


class EdgeRulingPipelineProgram(NodeProgram):
    """Kernel proposal, then maximal matching on the kernel subgraph, then
    optionally the 3-to-2 domination reduction; all phases run inside one
    lockstep schedule derived from idspace alone."""

    def __init__(self, reduce_iterations: int):
        self.reduce_iterations = reduce_iterations

    def init(self, self_id, degree, neighbors, params):
        idspace = params["idspace"]
        schedule, palette = reduction_schedule(idspace * 2, 2)
        match_total = len(schedule) + 2 * palette + 2
        return {
            "id": self_id,
            "nbrs": neighbors,
            "idspace": idspace,
            "t": 0,
            "match_end": 2 + match_total - 1,
            "kernel": KernelSub(self_id, neighbors, idspace),
            "match": None,
            "reduce": None,
        }

    def step(self, st, inbox):
        t = st["t"]
        st["t"] += 1
        if t <= 1:
            out, _ = st["kernel"].step(inbox)
            return st, out, False
        if t == 2:
            st["kernel"].step(inbox)
            st["match"] = MatchingSub(st["id"], sorted(st["kernel"].f_nbrs),
                                      st["idspace"], 2)
            out, _ = st["match"].step(EMPTY_INBOX)
            return st, out, False
        if t < st["match_end"]:
            out, _ = st["match"].step(inbox)
            return st, out, False
        if t == st["match_end"]:
            st["match"].step(inbox)
            if self.reduce_iterations == 0:
                return st, None, True
            matched_nbrs = {u for e in st["match"].joined for u in e if u != st["id"]}
            st["reduce"] = ReduceSub(st["id"], st["nbrs"], matched_nbrs, self.reduce_iterations)
            out, _ = st["reduce"].step(EMPTY_INBOX)
            return st, out, False
        out, done = st["reduce"].step(inbox)
        return st, out, done

    def output(self, st):
        kernel = sorted(canonical_edge(st["id"], u) for u in st["kernel"].f_nbrs)
        matched = sorted(st["match"].joined) if st["match"] else []
        if st["reduce"] is not None:
            ruling = sorted(canonical_edge(st["id"], u) for u in st["reduce"].in_r)
            history = st["reduce"].class_history
        else:
            ruling = matched
            history = []
        return {"kernel": kernel, "matched": matched, "ruling": ruling,
                "class_history": history}


def _collect_edges(report: RunReport, key: str) -> frozenset[Edge]:
    edges: set[Edge] = set()
    for out in report.per_node_output.values():
        edges.update(tuple(e) for e in out[key])
    return frozenset(edges)


def propose_edge_kernel(g: Graph, config: SimConfig | None = None) -> tuple[EdgeKernel, RunReport]:
    """Two-round (2,2)-edge-kernel proposal."""
    report = run(g, EdgeKernelProgram(), config=config)
    edges: set[Edge] = set()
    for out in report.per_node_output.values():
        edges.update(tuple(e) for e in out)
    return EdgeKernel(frozenset(edges), 2, 2), report


def three_ruling_edge_set(g: Graph, config: SimConfig | None = None) -> tuple[RulingEdgeSet, RunReport]:
    """(2,3)-ruling edge set in O(log* idspace) rounds."""
    report = run(g, EdgeRulingPipelineProgram(0), config=config)
    return RulingEdgeSet(_collect_edges(report, "ruling"), 2, 3), report


def two_ruling_edge_set(g: Graph, config: SimConfig | None = None) -> tuple[RulingEdgeSet, RunReport]:
    """(2,2)-ruling edge set in O(log* idspace) rounds."""
    report = run(g, EdgeRulingPipelineProgram(1), config=config)
    return RulingEdgeSet(_collect_edges(report, "ruling"), 2, 2), report


def _run_reduction(g: Graph, ruling: RulingEdgeSet, iterations: int,
                   config: SimConfig | None) -> tuple[frozenset[Edge], RunReport]:
    node_inputs: dict[int, list[int]] = {}
    for u, v in ruling.edges:
        node_inputs.setdefault(u, []).append(v)
        node_inputs.setdefault(v, []).append(u)
    report = run(g, DominationReduceProgram(iterations),
                 params={"node_inputs": node_inputs}, config=config)
    return _collect_edges(report, "ruling"), report


def reduce_3_to_2(g: Graph, r3: RulingEdgeSet,
                  config: SimConfig | None = None) -> tuple[RulingEdgeSet, RunReport]:
    """Upgrade a (2,<=3)-ruling edge set to (2,2) in O(1) rounds."""
    check = verify_ruling_edge_set(g, r3.edges, 2, 3)
    if not check.ok:
        raise ValueError(f"input is not a (2,3)-ruling edge set: {check.violations[0]}")
    edges, report = _run_reduction(g, r3, 1, config)
    return RulingEdgeSet(edges, 2, 2), report


def reduce_beta_by_one(g: Graph, r: RulingEdgeSet,
                       config: SimConfig | None = None) -> tuple[RulingEdgeSet, RunReport]:
    """One constant-round application lowering the domination bound by one."""
    if r.beta < 3:
        raise ValueError("reduce_beta_by_one needs beta >= 3")
    check = verify_ruling_edge_set(g, r.edges, 2, r.beta)
    if not check.ok:
        raise ValueError(f"input is not a (2,{r.beta})-ruling edge set: {check.violations[0]}")
    edges, report = _run_reduction(g, r, 1, config)
    return RulingEdgeSet(edges, 2, r.beta - 1), report


def reduce_beta_to_2(g: Graph, r: RulingEdgeSet, beta_bound: int,
                     config: SimConfig | None = None) -> tuple[RulingEdgeSet, RunReport]:
    """Apply the reduction beta_bound - 2 times, ending at (2,2)."""
    if beta_bound < 2:
        raise ValueError("beta_bound must be >= 2")
    check = verify_ruling_edge_set(g, r.edges, 2, beta_bound)
    if not check.ok:
        raise ValueError(f"input is not a (2,{beta_bound})-ruling edge set: {check.violations[0]}")
    iterations = beta_bound - 2
    if iterations == 0:
        return RulingEdgeSet(r.edges, 2, 2), RunReport(0, 0, 0, {v: None for v in g.nodes}, True)
    edges, report = _run_reduction(g, r, iterations, config)
    return RulingEdgeSet(edges, 2, 2), report


def ruling_edge_from_kernel(g: Graph, kernel: EdgeKernel,
                            inner: Callable[[Graph], RulingEdgeSet]) -> RulingEdgeSet:
    """Compose a kernel with an inner ruling-edge algorithm run on G[F];
    domination bounds add, independence carries over."""
    sub = g.with_edges(kernel.edges)
    inner_set = inner(sub)
    check = verify_ruling_edge_set(sub, inner_set.edges, 2, inner_set.beta)
    if not check.ok:
        raise ValueError(f"inner algorithm output failed verification on G[F]: {check.violations[0]}")
    return RulingEdgeSet(frozenset(inner_set.edges), 2, kernel.r + inner_set.beta)


def matching_as_ruling(g: Graph, config: SimConfig | None = None) -> RulingEdgeSet:
    """Maximal matching viewed as a (2,1)-ruling edge set."""
    matching, _ = maximal_matching_bounded_degree(g, config)
    check = verify_matching(g, matching.edges)
    if not check.ok:
        raise ValueError(f"matching failed verification: {check.violations[0]}")
    return RulingEdgeSet(matching.edges, 2, 1)


def edge_ruling_to_vertex_ruling(g: Graph, r: RulingEdgeSet) -> RulingSet:
    """Pick the smaller endpoint of every ruling edge and add isolated
    nodes; yields an (alpha-1, beta+1)-ruling vertex set."""
    if r.alpha < 2:
        raise ValueError("edge ruling set must have alpha >= 2")
    nodes = {min(e) for e in r.edges}
    nodes.update(v for v in g.nodes if g.degree(v) == 0)
    return RulingSet(frozenset(nodes), r.alpha - 1, r.beta + 1)
