"""Ruling sets for graphs carrying a clique edge cover, and ruling edge
sets of bounded-rank hypergraphs via their line graphs.

The proposal runs D phases (D = cover diversity). Each clique is served
by its smallest member (the leader, adjacent to every member by
completeness). A phase costs three rounds of 1-bit messages: members
broadcast their active bit; each leader proposes, per led clique, the
smallest active member the clique has never proposed and tells that node
it was proposed; proposed nodes announce themselves to their neighbors.
A node that stayed unproposed while hearing a proposed neighbor goes
inactive. Proposal history lives only at the leader, which is why the
messages never need to carry clique identities.

The surviving actives P form a (D^2, D)-vertex-kernel; running the
coloring + digit elimination restricted to G[P] with a 4-digit budget
then gives a (2, D+4)-ruling set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import ColorReductionSub, linial_color_count
from .colorreduce import reduction_schedule
from .digitruling import DigitEliminationSub, DigitSchedule, RulingSet, smallest_base_for
from .graph import CliqueEdgeCover, Graph, Hypergraph, hyper_line_graph_with_cover
from .sim import EMPTY_INBOX, Message, NodeProgram, RunReport, SimConfig, run
from .verify import verify_cover, verify_ruling_set


@dataclass(frozen=True)
class VertexKernel:
    """Node set A with max degree of G[A] at most d, dominating every
    node within distance r."""

    nodes: frozenset[int]
    d: int
    r: int


_BIT = Message.bits(1, 1)
_ZERO = Message.bits(0, 1)


class ProposalSub:
    """Per-node state of the D-phase clique proposal.

    Call layout per phase p: call 3p broadcasts the active bit (after
    applying the previous phase's deactivation), call 3p+1 lets leaders
    propose, call 3p+2 lets proposed nodes announce themselves. The final
    deactivation is applied at call 3D.
    """

    __slots__ = ("self_id", "nbrs", "phases", "led", "led_history", "active",
                 "proposed_now", "trace_proposed", "trace_active", "r")

    def __init__(self, self_id: int, nbrs: tuple[int, ...], cliques, phases: int):
        self.self_id = self_id
        self.nbrs = nbrs
        self.phases = phases
        mine = [c for c in cliques if self_id in c]
        self.led = sorted(c for c in mine if c[0] == self_id)
        self.led_history: list[list[int | None]] = [[] for _ in self.led]
        self.active = True
        self.proposed_now = False
        self.trace_proposed: list[bool] = []
        self.trace_active: list[bool] = []
        self.r = 0

    @property
    def total_calls(self) -> int:
        return 3 * self.phases + 1

    def _apply_deactivation(self, inbox) -> None:
        if self.active and not self.proposed_now and inbox:
            self.active = False
        self.trace_proposed.append(self.proposed_now)
        self.trace_active.append(self.active)
        self.proposed_now = False

    def step(self, inbox):
        r = self.r
        self.r += 1
        phase, pos = divmod(r, 3)
        out: dict[int, Message] = {}
        if pos == 0:
            if phase > 0:
                self._apply_deactivation(inbox)
            if phase == self.phases:
                return None, True
            msg = _BIT if self.active else _ZERO
            for u in self.nbrs:
                out[u] = msg
            return out or None, False
        if pos == 1:
            member_active = {v: bool(inbox[v].to_int()) for v in inbox}
            member_active[self.self_id] = self.active
            for idx, clique in enumerate(self.led):
                proposed_before = {p for p in self.led_history[idx] if p is not None}
                eligible = [w for w in clique
                            if member_active.get(w, False) and w not in proposed_before]
                if eligible:
                    pick = min(eligible)
                    self.led_history[idx].append(pick)
                    if pick == self.self_id:
                        self.proposed_now = True
                    else:
                        out[pick] = _BIT
                else:
                    self.led_history[idx].append(None)
            return out or None, False
        # pos == 2: absorb "you are proposed" notices, announce to neighbors
        if inbox:
            self.proposed_now = True
        if self.proposed_now:
            for u in self.nbrs:
                out[u] = _BIT
        return out or None, False


def _proposal_output(prop: ProposalSub) -> dict:
    return {
        "active": prop.active,
        "proposed_phases": tuple(prop.trace_proposed),
        "active_phases": tuple(prop.trace_active),
        "led_proposals": {c: tuple(h) for c, h in zip(prop.led, prop.led_history)},
    }


class DiversityProposalProgram(NodeProgram):
    """Standalone proposal; params need "cliques" and "diversity"."""

    def init(self, self_id, degree, neighbors, params):
        return ProposalSub(self_id, neighbors, params["cliques"], params["diversity"])

    def step(self, state, inbox):
        out, done = state.step(inbox)
        return state, out, done

    def output(self, state):
        return _proposal_output(state)


class DiversityPipelineProgram(NodeProgram):
    """Proposal, then coloring + digit elimination restricted to the
    surviving actives. When the cover diversity is 1 the actives induce
    no edges and the pipeline stops after the proposal.

    Timeline (degree_bound = D(D-1) > 0): calls 0..3D run the proposal;
    call 3D also broadcasts the final active bit; call 3D+1 starts the
    coloring among active peers; the digit elimination follows, and
    inactive nodes idle until the globally known end call.
    """

    def init(self, self_id, degree, neighbors, params):
        d = params["diversity"]
        idspace = params["idspace"]
        degree_bound = d * (d - 1)
        st = {
            "id": self_id,
            "nbrs": neighbors,
            "idspace": idspace,
            "t": 0,
            "proposal": ProposalSub(self_id, neighbors, params["cliques"], d),
            "prop_end": 3 * d,
            "degree_bound": degree_bound,
            "color": None,
            "digits": None,
            "peers": (),
            "in_r": False,
            "end": None,
        }
        if degree_bound > 0:
            schedule, num_colors = reduction_schedule(idspace, degree_bound)
            st["num_colors"] = num_colors
            st["B"] = smallest_base_for(num_colors, 4)
            digit_rounds = DigitSchedule.for_colors(num_colors, st["B"]).num_digits * (st["B"] - 1)
            # color occupies [3D+1, 3D+1+S]; digits [3D+1+S, 3D+1+S+digit_rounds]
            st["color_start"] = st["prop_end"] + 1
            st["color_end"] = st["color_start"] + len(schedule)
            st["end"] = st["color_end"] + digit_rounds
        return st

    def step(self, st, inbox):
        t = st["t"]
        st["t"] += 1
        prop_end = st["prop_end"]
        if t < prop_end:
            out, _ = st["proposal"].step(inbox)
            return st, out, False
        if t == prop_end:
            st["proposal"].step(inbox)  # final deactivation
            st["in_r"] = st["proposal"].active
            if st["degree_bound"] == 0:
                return st, None, True
            msg = _BIT if st["proposal"].active else _ZERO
            return st, {u: msg for u in st["nbrs"]} or None, False
        if t == st["color_start"]:
            st["peers"] = tuple(v for v in sorted(inbox) if inbox[v].to_int() == 1)
            if st["proposal"].active:
                st["color"] = ColorReductionSub(st["peers"], st["idspace"],
                                                st["degree_bound"], st["id"])
        if st["color"] is None:
            return st, None, t == st["end"]  # inactive bystander
        if t < st["color_end"]:
            out, _ = st["color"].step(inbox)
            return st, out, False
        if t == st["color_end"]:
            st["color"].step(inbox)
            st["digits"] = DigitEliminationSub(st["color"].color, st["num_colors"],
                                               2, st["B"], st["peers"])
            out, done = st["digits"].step(EMPTY_INBOX)
        else:
            out, done = st["digits"].step(inbox)
        if done:
            st["in_r"] = st["digits"].in_r
        return st, out, done

    def output(self, st):
        result = _proposal_output(st["proposal"])
        result["in_r"] = st["in_r"]
        result["digit_snapshots"] = (tuple(st["digits"].digit_snapshots)
                                     if st["digits"] is not None else ())
        return result


def _cover_params(g: Graph, cover: CliqueEdgeCover) -> dict:
    check = verify_cover(g, cover)
    if not check.ok:
        raise ValueError(f"invalid clique edge cover: {check.violations[0]}")
    return {"cliques": cover.cliques, "diversity": cover.diversity}


def diversity_proposal(g: Graph, cover: CliqueEdgeCover,
                       config: SimConfig | None = None) -> tuple[VertexKernel, RunReport]:
    """D-phase proposal: the surviving actives are a (D^2, D)-vertex-kernel."""
    params = _cover_params(g, cover)
    report = run(g, DiversityProposalProgram(), params=params, config=config)
    nodes = frozenset(v for v in g.nodes if report.per_node_output[v]["active"])
    d = params["diversity"]
    return VertexKernel(nodes, d * d, d), report


def diversity_ruling_set(g: Graph, cover: CliqueEdgeCover,
                         config: SimConfig | None = None) -> tuple[RulingSet, RunReport]:
    """(2, D+4)-ruling set in O(D + log* idspace) rounds."""
    params = _cover_params(g, cover)
    report = run(g, DiversityPipelineProgram(), params=params, config=config)
    nodes = frozenset(v for v in g.nodes if report.per_node_output[v]["in_r"])
    return RulingSet(nodes, 2, params["diversity"] + 4), report


def ruling_from_vertex_kernel(g: Graph, kernel: VertexKernel, inner) -> RulingSet:
    """Compose a vertex-kernel with an inner ruling-set algorithm run on
    G[A]; domination bounds add."""
    sub = g.induced(kernel.nodes)
    inner_set = inner(sub)
    check = verify_ruling_set(sub, inner_set.nodes, 2, inner_set.beta)
    if not check.ok:
        raise ValueError(f"inner algorithm output failed verification on G[A]: {check.violations[0]}")
    return RulingSet(frozenset(inner_set.nodes), 2, kernel.r + inner_set.beta)


def hypergraph_edge_ruling_set(h: Hypergraph, config: SimConfig | None = None
                               ) -> tuple[RulingSet, RunReport]:
    """(2, rank+4)-ruling edge set of a hypergraph: run the diversity
    pipeline on its line graph with the incident-edge clique cover.
    The returned node IDs are hyperedge indices."""
    lg, cover = hyper_line_graph_with_cover(h)
    if lg.n == 0:
        return RulingSet(frozenset(), 2, h.rank + 4), RunReport(0, 0, 0, {}, True)
    rs, report = diversity_ruling_set(lg, cover, config)
    return RulingSet(rs.nodes, 2, h.rank + 4), report
