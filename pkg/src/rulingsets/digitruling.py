"""Digit-splitting ruling sets from colorings or raw IDs.

The tentative set starts as all nodes and is sparsified digit by digit
(least significant first) of the base-B representation of each node's
color. For digit position i and value b = 1..B-1, a surviving node whose
digit equals b leaves the set if some survivor with a smaller digit value
at position i sits within distance alpha-1; membership of the smaller
classes is frozen while b is processed, so the sub-steps are strictly
sequential. Each sub-step is one bounded BFS of alpha-1 rounds in which
every node relays regardless of membership (distances are measured in
the full graph, or in the induced participant subgraph for the embedded
variant). Survivors end pairwise at distance >= alpha and every node
keeps a survivor within (alpha-1) * ceil(log_B C).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .coloring import ColorReductionSub, Coloring, linial_color_count
from .graph import Graph
from .sim import EMPTY_INBOX, Message, NodeProgram, RunReport, SimConfig, run
from .verify import verify_coloring


@dataclass(frozen=True)
class RulingSet:
    """Nodes pairwise at distance >= alpha, dominating within beta
    (beta is the claimed bound)."""

    nodes: frozenset[int]
    alpha: int
    beta: int


@dataclass(frozen=True)
class DigitSchedule:
    """Base and digit count used by the elimination; LSB first."""

    B: int
    num_digits: int

    @classmethod
    def for_colors(cls, num_colors: int, B: int) -> "DigitSchedule":
        if B < 2:
            raise ValueError("B must be >= 2")
        digits = 0
        span = 1
        while span < num_colors:
            span *= B
            digits += 1
        return cls(B, digits)


def smallest_base_for(num_colors: int, max_digits: int) -> int:
    """Smallest B >= 2 with ceil(log_B num_colors) <= max_digits."""
    if max_digits < 1:
        raise ValueError("max_digits must be >= 1")
    B = 2
    while B ** max_digits < num_colors:
        B += 1
    return B


_FAR = -1


class DigitEliminationSub:
    """Per-node digit elimination over a fixed relay peer set.

    One call per BFS round; sub-step (digit i, value b) occupies alpha-1
    calls, plus one trailing call that applies the last removal decision.
    """

    __slots__ = ("color", "alpha", "schedule", "relay", "in_r", "d", "r",
                 "digit_snapshots", "_width")

    def __init__(self, color: int, num_colors: int, alpha: int, B: int,
                 relay_peers, in_r: bool = True):
        if alpha < 2:
            raise ValueError("alpha must be >= 2")
        self.color = color
        self.alpha = alpha
        self.schedule = DigitSchedule.for_colors(num_colors, B)
        self.relay = tuple(sorted(relay_peers))
        self.in_r = in_r
        self.d = _FAR
        self.r = 0
        self.digit_snapshots: list[bool] = []
        self._width = max(1, (alpha - 2).bit_length()) if alpha > 2 else 1

    @property
    def total_calls(self) -> int:
        return self.schedule.num_digits * (self.schedule.B - 1) * (self.alpha - 1) + 1

    def _digit(self, position: int) -> int:
        return (self.color // (self.schedule.B ** position)) % self.schedule.B

    def _decode(self, substep: int) -> tuple[int, int]:
        position, b0 = divmod(substep, self.schedule.B - 1)
        return position, b0 + 1

    def _finalize(self, substep: int, inbox: Mapping[int, Message]):
        for v in inbox:
            alt = inbox[v].to_int() + 1
            if self.d == _FAR or alt < self.d:
                self.d = alt
        position, b = self._decode(substep)
        if self.in_r and self._digit(position) == b and self.d != _FAR and self.d <= self.alpha - 1:
            self.in_r = False
        if b == self.schedule.B - 1:
            self.digit_snapshots.append(self.in_r)

    def step(self, inbox: Mapping[int, Message]):
        r = self.r
        self.r += 1
        per = self.alpha - 1
        last = self.total_calls - 1
        out: dict[int, Message] = {}
        substep, j = divmod(r, per)
        if j == 0:
            if r > 0:
                self._finalize(substep - 1, inbox)
            if r == last:
                return None, True
            position, b = self._decode(substep)
            if self.in_r and self._digit(position) < b:
                self.d = 0
                msg = Message.bits(0, self._width)
                for u in self.relay:
                    out[u] = msg
            else:
                self.d = _FAR
            return out or None, False
        # BFS relay round j >= 1
        for v in inbox:
            alt = inbox[v].to_int() + 1
            if self.d == _FAR or alt < self.d:
                self.d = alt
        if self.d == j and j < per:
            msg = Message.bits(self.d, self._width)
            for u in self.relay:
                out[u] = msg
        return out or None, r == last


class DigitRulingProgram(NodeProgram):
    """Standalone digit elimination; colors come from node_inputs (one
    color per node) or default to the node's own ID."""

    def __init__(self, alpha: int, B: int, num_colors: int | None):
        self.alpha = alpha
        self.B = B
        self.num_colors = num_colors

    def init(self, self_id, degree, neighbors, params):
        colors = params.get("node_inputs")
        color = self_id if colors is None else colors[self_id]
        num_colors = self.num_colors if self.num_colors is not None else params["idspace"]
        return DigitEliminationSub(color, num_colors, self.alpha, self.B, neighbors)

    def step(self, state, inbox):
        out, done = state.step(inbox)
        return state, out, done

    def output(self, state):
        return {"in_r": state.in_r, "digit_snapshots": tuple(state.digit_snapshots)}


class TwoBetaProgram(NodeProgram):
    """Palette reduction to <= 16 * Delta^2 colors, then digit elimination
    with alpha = 2 and the smallest base that keeps the digit count within
    the requested domination bound."""

    def __init__(self, beta: int):
        self.beta = beta

    def init(self, self_id, degree, neighbors, params):
        delta = params["max_degree"]
        idspace = params["idspace"]
        if delta == 0:
            return {"t": 0, "trivial": True, "digits": None}
        num_colors = linial_color_count(idspace, delta)
        B = smallest_base_for(num_colors, self.beta)
        color_sub = ColorReductionSub(neighbors, idspace, delta, self_id)
        return {
            "t": 0,
            "trivial": False,
            "color": color_sub,
            "color_end": color_sub.total_calls - 1,
            "nbrs": neighbors,
            "num_colors": num_colors,
            "B": B,
            "digits": None,
        }

    def step(self, st, inbox):
        if st["trivial"]:
            return st, None, True
        t = st["t"]
        st["t"] += 1
        if t < st["color_end"]:
            out, _ = st["color"].step(inbox)
            return st, out, False
        if t == st["color_end"]:
            st["color"].step(inbox)
            st["digits"] = DigitEliminationSub(st["color"].color, st["num_colors"],
                                               2, st["B"], st["nbrs"])
            out, done = st["digits"].step(EMPTY_INBOX)
            return st, out, done
        out, done = st["digits"].step(inbox)
        return st, out, done

    def output(self, st):
        if st["trivial"]:
            return {"in_r": True, "color": 0, "digit_snapshots": ()}
        return {"in_r": st["digits"].in_r, "color": st["color"].color,
                "digit_snapshots": tuple(st["digits"].digit_snapshots)}


class BoundedBfsProgram(NodeProgram):
    """Distance-variable flooding: after `radius` rounds each node knows
    min(distance to the source set, radius + 1)."""

    def __init__(self, radius: int):
        if radius < 0:
            raise ValueError("radius must be >= 0")
        self.radius = radius
        self.width = max(1, max(radius - 1, 1).bit_length())

    def init(self, self_id, degree, neighbors, params):
        is_source = self_id in params["node_inputs"]
        return {"t": 0, "d": 0 if is_source else _FAR, "nbrs": neighbors}

    def step(self, st, inbox):
        t = st["t"]
        st["t"] += 1
        if self.radius == 0:
            return st, None, True
        out = None
        if t == 0:
            if st["d"] == 0:
                msg = Message.bits(0, self.width)
                out = {u: msg for u in st["nbrs"]}
            return st, out, False
        for v in inbox:
            alt = inbox[v].to_int() + 1
            if st["d"] == _FAR or alt < st["d"]:
                st["d"] = alt
        if st["d"] == t and t < self.radius:
            msg = Message.bits(st["d"], self.width)
            out = {u: msg for u in st["nbrs"]}
        return st, out, t == self.radius

    def output(self, st):
        return st["d"] if st["d"] != _FAR else self.radius + 1


def bounded_bfs_flags(g: Graph, sources, radius: int,
                      config: SimConfig | None = None) -> tuple[dict[int, int], RunReport]:
    """Per-node min(distance to sources, radius + 1) in `radius` rounds."""
    src = set(sources)
    for v in src:
        if not g.has_node(v):
            raise ValueError(f"unknown source {v}")
    report = run(g, BoundedBfsProgram(radius), params={"node_inputs": src}, config=config)
    return dict(report.per_node_output), report


def bary_ruling_set(g: Graph, coloring: Coloring, alpha: int, B: int,
                    config: SimConfig | None = None) -> tuple[RulingSet, RunReport]:
    """Digit elimination driven by a supplied coloring of G^(alpha-1)."""
    if alpha < 2:
        raise ValueError("alpha must be >= 2")
    if B < 2:
        raise ValueError("B must be >= 2")
    check = verify_coloring(g, coloring.colors, coloring.num_colors, alpha - 1)
    if not check.ok:
        raise ValueError(f"coloring is not proper on G^{alpha - 1}: {check.violations[0]}")
    report = run(g, DigitRulingProgram(alpha, B, coloring.num_colors),
                 params={"node_inputs": coloring.colors}, config=config)
    nodes = frozenset(v for v in g.nodes if report.per_node_output[v]["in_r"])
    beta = (alpha - 1) * DigitSchedule.for_colors(coloring.num_colors, B).num_digits
    return RulingSet(nodes, alpha, beta), report


def ruling_set_from_ids(g: Graph, alpha: int, B: int,
                        config: SimConfig | None = None) -> tuple[RulingSet, RunReport]:
    """Digit elimination with colors = IDs (a valid coloring of any power
    of G); claimed bound (alpha, (alpha-1) * ceil(log_B idspace))."""
    if alpha < 2:
        raise ValueError("alpha must be >= 2")
    if B < 2:
        raise ValueError("B must be >= 2")
    report = run(g, DigitRulingProgram(alpha, B, None), config=config)
    nodes = frozenset(v for v in g.nodes if report.per_node_output[v]["in_r"])
    beta = (alpha - 1) * DigitSchedule.for_colors(g.idspace, B).num_digits
    return RulingSet(nodes, alpha, beta), report


def two_beta_ruling_set(g: Graph, beta: int,
                        config: SimConfig | None = None) -> tuple[RulingSet, RunReport]:
    """(2, beta)-ruling set: color first, then eliminate digits with the
    smallest base whose digit count fits the bound."""
    if beta < 2:
        raise ValueError("beta must be >= 2")
    report = run(g, TwoBetaProgram(beta), config=config)
    nodes = frozenset(v for v in g.nodes if report.per_node_output[v]["in_r"])
    return RulingSet(nodes, 2, beta), report
