"""Distributed coloring and bounded-degree maximal matching primitives.

Both are built from the palette-reduction step in
:mod:`rulingsets.colorreduce`. The matching colors the line graph of the
target subgraph H without materializing it: every edge is owned by its
smaller endpoint, both endpoints track the edge's color, and one
reduction step costs a single round in which the two endpoints exchange
q-bit collision masks (each endpoint can compute the collisions
contributed by its own side locally, because it knows the colors of all
its incident edges). Matched edges are then picked greedily one color
class at a time: edges of a class never share an endpoint, so a class
costs two rounds (report + join).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .colorreduce import collision_mask, color_bound, reduction_schedule, refine_color
from .graph import Edge, Graph, id_bits
from .sim import Message, NodeProgram, RunReport, SimConfig, run


@dataclass(frozen=True)
class Coloring:
    """colors proper on G^target_power, all values < num_colors."""

    colors: dict[int, int]
    num_colors: int
    target_power: int = 1


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]


def _width(palette: int) -> int:
    return max(1, (palette - 1).bit_length())


class ColorReductionSub:
    """Node-level palette reduction over a fixed peer set.

    Call step() once per round; returns (outbox or None, done). Peers must
    run the identical schedule, which they derive from the same
    (num_colors, degree_bound) pair.
    """

    __slots__ = ("peers", "num_colors", "schedule", "final_palette", "color", "r")

    def __init__(self, peers, num_colors: int, degree_bound: int, start_color: int):
        self.peers = tuple(sorted(peers))
        self.num_colors = num_colors
        self.schedule, self.final_palette = reduction_schedule(num_colors, degree_bound)
        self.color = start_color
        self.r = 0

    @property
    def total_calls(self) -> int:
        return len(self.schedule) + 1

    def step(self, inbox: Mapping[int, Message]):
        r = self.r
        self.r += 1
        steps = len(self.schedule)
        out = None
        if r == 0:
            if steps > 0 and self.peers:
                out = {v: Message.bits(self.color, _width(self.num_colors))
                       for v in self.peers}
            return out, steps == 0
        q, k = self.schedule[r - 1]
        nbr_colors = [inbox[v].to_int() for v in self.peers if v in inbox]
        self.color = refine_color(q, k, self.color, nbr_colors)
        if r < steps and self.peers:
            out = {v: Message.bits(self.color, _width(q * q)) for v in self.peers}
        return out, r == steps


class MatchingSub:
    """Maximal matching over a subgraph H given as each node's H-neighbor
    list. Runs edge-level palette reduction, then iterates color classes.

    Timeline (local round counter r, S = reduction steps, C = final
    palette): r=0 owners announce initial edge colors; r=1..S one mask
    exchange per reduction step; then per class t two calls (non-owner
    reports its matched bit, owner joins and notifies). Done after
    r = S + 1 + 2C.
    """

    __slots__ = ("self_id", "h_nbrs", "h_set", "d_bound", "init_width",
                 "schedule", "final_palette", "colors", "sent_masks",
                 "matched", "joined", "r")

    def __init__(self, self_id: int, h_nbrs, idspace: int, d_bound: int):
        self.self_id = self_id
        self.h_nbrs = tuple(sorted(h_nbrs))
        self.h_set = set(self.h_nbrs)
        self.d_bound = d_bound
        self.init_width = _width(idspace * d_bound)
        self.schedule, self.final_palette = reduction_schedule(
            idspace * d_bound, max(2 * (d_bound - 1), 1))
        self.colors: dict[int, int] = {}
        self.sent_masks: dict[int, int] = {}
        self.matched = False
        self.joined: list[Edge] = []
        self.r = 0

    @property
    def total_calls(self) -> int:
        return len(self.schedule) + 2 * self.final_palette + 2

    def step(self, inbox: Mapping[int, Message]):
        r = self.r
        self.r += 1
        S = len(self.schedule)
        C = self.final_palette
        me = self.self_id
        out: dict[int, Message] = {}

        # consume
        if r == 1:
            for v in self.h_nbrs:
                if v < me:
                    self.colors[v] = inbox[v].to_int()
        elif 2 <= r <= S + 1:
            q, k = self.schedule[r - 2]
            for v in self.h_nbrs:
                bad = self.sent_masks[v] | inbox[v].to_int()
                self.colors[v] = refine_color(q, k, self.colors[v], (), bad)
        elif r > S + 1:
            pos = r - (S + 1)
            if pos % 2 == 0:
                for v in sorted(inbox):  # join notice from the edge's owner
                    self.matched = True
                    self.joined.append((v, me))
            else:
                t = (pos - 1) // 2
                for v in sorted(inbox):  # matched bit for my owned class-t edge
                    if inbox[v].to_int() == 0 and not self.matched:
                        self.matched = True
                        self.joined.append((me, v))
                        out[v] = Message.bits(1, 1)

        # send
        if r == 0:
            for i, v in enumerate(self.h_nbrs):
                if me < v:
                    c = me * self.d_bound + i
                    self.colors[v] = c
                    out[v] = Message.bits(c, self.init_width)
        elif 1 <= r <= S:
            q, k = self.schedule[r - 1]
            self.sent_masks = {}
            for v in self.h_nbrs:
                ce = self.colors[v]
                mask = 0
                for u in self.h_nbrs:
                    if u != v:
                        mask |= collision_mask(q, k, ce, self.colors[u])
                self.sent_masks[v] = mask
                out[v] = Message.bits(mask, q)
        elif r > S:
            pos = r - (S + 1)
            if pos % 2 == 0 and pos // 2 < C:
                t = pos // 2
                for v in self.h_nbrs:
                    if v < me and self.colors[v] == t:
                        out[v] = Message.bits(1 if self.matched else 0, 1)

        return (out or None), r == S + 1 + 2 * C


class LinialColoringProgram(NodeProgram):
    """Proper coloring with at most color_bound(Delta) colors in
    O(log* idspace) rounds; nodes know Delta and idspace."""

    def init(self, self_id, degree, neighbors, params):
        if params["max_degree"] == 0:
            return None  # no edges anywhere: color 0 is proper
        return ColorReductionSub(neighbors, params["idspace"],
                                 params["max_degree"], self_id)

    def step(self, state, inbox):
        if state is None:
            return state, None, True
        out, done = state.step(inbox)
        return state, out, done

    def output(self, state):
        return 0 if state is None else state.color


class MaximalMatchingProgram(NodeProgram):
    """Standalone maximal matching on the whole graph (H = G)."""

    def init(self, self_id, degree, neighbors, params):
        d_bound = max(params["max_degree"], 1)
        return MatchingSub(self_id, neighbors, params["idspace"], d_bound)

    def step(self, state, inbox):
        out, done = state.step(inbox)
        return state, out, done

    def output(self, state):
        return sorted(state.joined)


def linial_color_count(idspace: int, degree: int) -> int:
    """Palette size the coloring ends with for the given parameters."""
    if degree == 0:
        return 1
    _, final = reduction_schedule(idspace, degree)
    return final


def linial_coloring(g: Graph, config: SimConfig | None = None) -> tuple[Coloring, RunReport]:
    """Run the coloring program under the simulator."""
    report = run(g, LinialColoringProgram(), config=config)
    num_colors = linial_color_count(g.idspace, g.max_degree)
    colors = {v: report.per_node_output[v] for v in g.nodes}
    return Coloring(colors, num_colors, 1), report


def maximal_matching_bounded_degree(g: Graph, config: SimConfig | None = None) -> tuple[Matching, RunReport]:
    """Maximal matching in O(Delta^2 + log* idspace) rounds; intended for
    the small-degree regime (the ruling-set pipeline uses Delta <= 2)."""
    report = run(g, MaximalMatchingProgram(), config=config)
    edges: set[Edge] = set()
    for out in report.per_node_output.values():
        edges.update(tuple(e) for e in out)
    return Matching(frozenset(edges)), report


MATCHING_COLOR_BOUND = color_bound  # re-export: palette bound used by class iteration
