"""Deterministic round-synchronous executor for per-node programs.

The model: per round every non-halted node is stepped exactly once, its
outbox is collected, and all messages are delivered as the next round's
inboxes. Nodes may send at most one message per neighbor per round and a
message may carry at most the configured number of bits (default
8 * ceil(log2 idspace)). Execution is single-threaded and fully
deterministic: identical inputs produce identical RunReports, transcript
included.

A program must derive everything from what init() hands it: its own ID,
degree, the sorted neighbor ID tuple, and the shared global parameter
mapping. Per-node inputs (e.g. "my incident ruling-set edges") travel
under global_params["node_inputs"]; programs read only their own entry.
Local computation is unbounded in the model but must stay polynomial;
the simulator does not enforce this.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Mapping

from .graph import Graph, Hypergraph, id_bits

EMPTY_INBOX: Mapping[Any, "Message"] = MappingProxyType({})


class SimulationError(RuntimeError):
    pass


class MessageCapExceeded(SimulationError):
    def __init__(self, round_no: int, sender: int, receiver: int, bits: int, cap: int):
        self.round_no = round_no
        self.sender = sender
        self.receiver = receiver
        self.bits = bits
        self.cap = cap
        super().__init__(
            f"message of {bits} bits exceeds cap {cap} "
            f"(round {round_no}, sender {sender}, receiver {receiver})"
        )


class NonTermination(SimulationError):
    def __init__(self, max_rounds: int):
        super().__init__(f"non-termination: max_rounds {max_rounds} exceeded")


class ProtocolViolation(SimulationError):
    pass


class Message:
    """A single directed message: payload bytes plus its exact bit length."""

    __slots__ = ("payload", "bit_length")

    def __init__(self, payload: bytes, bit_length: int):
        if bit_length < 0 or len(payload) != (bit_length + 7) // 8:
            raise ValueError("payload length does not match declared bit_length")
        self.payload = payload
        self.bit_length = bit_length

    @classmethod
    def bits(cls, value: int, width: int) -> "Message":
        """Encode a non-negative integer in exactly `width` bits."""
        if width < 1 or value < 0 or value >= (1 << width):
            raise ValueError(f"value {value} does not fit in {width} bits")
        cached = _SMALL_MSGS.get((value, width))
        if cached is not None:
            return cached
        msg = cls(value.to_bytes((width + 7) // 8, "big"), width)
        if width <= 16:
            _SMALL_MSGS[(value, width)] = msg
        return msg

    def to_int(self) -> int:
        return int.from_bytes(self.payload, "big")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Message)
            and self.payload == other.payload
            and self.bit_length == other.bit_length
        )

    def __hash__(self) -> int:
        return hash((self.payload, self.bit_length))

    def __repr__(self) -> str:
        return f"Message({self.payload!r}, bits={self.bit_length})"


_SMALL_MSGS: dict[tuple[int, int], Message] = {}


@dataclass(frozen=True)
class SimConfig:
    """Executor knobs.

    message_cap_bits: explicit cap, or None to use cap_multiplier *
    ceil(log2 idspace). unlimited_cap disables enforcement entirely.
    """

    message_cap_bits: int | None = None
    cap_multiplier: int = 8
    max_rounds: int = 1_000_000
    record_transcript: bool = False
    unlimited_cap: bool = False

    def __post_init__(self):
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be >= 1")
        if self.cap_multiplier < 1:
            raise ValueError("cap_multiplier must be >= 1")

    def resolved_cap(self, idspace: int) -> int | None:
        if self.unlimited_cap:
            return None
        if self.message_cap_bits is not None:
            return self.message_cap_bits
        return self.cap_multiplier * id_bits(idspace)


@dataclass
class RunReport:
    """Outcome of one simulated execution."""

    rounds_used: int
    max_message_bits: int
    total_messages: int
    per_node_output: dict[int, Any]
    halted_all: bool
    transcript: list[dict] | None = field(default=None)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RunReport)
            and self.rounds_used == other.rounds_used
            and self.max_message_bits == other.max_message_bits
            and self.total_messages == other.total_messages
            and self.per_node_output == other.per_node_output
            and self.halted_all == other.halted_all
            and self.transcript == other.transcript
        )


class NodeProgram:
    """Behavioral contract for simulated per-node state machines.

    init() builds the initial state from local knowledge only. step()
    maps (state, inbox) to (state, outbox, halted); the outbox maps
    neighbor IDs to Messages (absent key = stay silent on that link,
    which is free). A halting step must not send. output() extracts the
    node's final output from its state.
    """

    def init(self, self_id: int, degree: int, neighbors: tuple[int, ...],
             params: Mapping[str, Any]) -> Any:
        raise NotImplementedError

    def step(self, state: Any, inbox: Mapping[int, Message]):
        raise NotImplementedError

    def output(self, state: Any) -> Any:
        return state


def run(g: Graph, program: NodeProgram, params: Mapping[str, Any] | None = None,
        config: SimConfig | None = None) -> RunReport:
    """Execute a node program on a graph until every node halts."""
    cfg = config or SimConfig()
    cap = cfg.resolved_cap(g.idspace)
    gp: dict[str, Any] = dict(params or {})
    gp.setdefault("idspace", g.idspace)
    gp.setdefault("max_degree", g.max_degree)

    order = g.nodes
    states = {v: program.init(v, g.degree(v), g.neighbors(v), gp) for v in order}
    halted = {v: False for v in order}
    inboxes: dict[int, Mapping[int, Message]] = {v: EMPTY_INBOX for v in order}

    rounds = 0
    total_messages = 0
    max_bits = 0
    transcript: list[dict] | None = [] if cfg.record_transcript else None

    while True:
        sends: list[tuple[int, int, Message]] = []  # (receiver, sender, msg)
        all_halted = True
        for v in order:
            if halted[v]:
                continue
            state, outbox, done = program.step(states[v], inboxes[v])
            states[v] = state
            if done:
                if outbox:
                    raise ProtocolViolation(f"node {v} sent messages while halting")
                halted[v] = True
            else:
                all_halted = False
            if outbox:
                neighbor_set = g.neighbors(v)
                for u in sorted(outbox):
                    msg = outbox[u]
                    if u not in neighbor_set:
                        raise ProtocolViolation(f"node {v} sent to non-neighbor {u}")
                    if cap is not None and msg.bit_length > cap:
                        raise MessageCapExceeded(rounds + 1, v, u, msg.bit_length, cap)
                    sends.append((u, v, msg))
        if all_halted:
            break
        if rounds >= cfg.max_rounds:
            raise NonTermination(cfg.max_rounds)
        rounds += 1
        total_messages += len(sends)
        new_inboxes: dict[int, dict[int, Message]] = {}
        for u, v, msg in sends:
            if msg.bit_length > max_bits:
                max_bits = msg.bit_length
            if not halted[u]:
                new_inboxes.setdefault(u, {})[v] = msg
        inboxes = {v: EMPTY_INBOX for v in order}
        inboxes.update(new_inboxes)
        if transcript is not None:
            transcript.append({
                "round": rounds,
                "msgs": [{"from": v, "to": u, "bits": m.bit_length}
                         for u, v, m in sorted(sends, key=lambda t: (t[1], t[0]))],
            })

    outputs = {v: program.output(states[v]) for v in order}
    return RunReport(rounds, max_bits, total_messages, outputs, True, transcript)


class HypergraphProgram:
    """Per-vertex program for the hypergraph executor.

    init() receives the vertex ID and its incident hyperedges as a tuple
    of (edge_index, members) pairs. Each round a vertex may broadcast one
    message per incident hyperedge (outbox keyed by edge index); inboxes
    are keyed by (edge_index, sender).
    """

    def init(self, self_id: int, incident: tuple[tuple[int, tuple[int, ...]], ...],
             params: Mapping[str, Any]) -> Any:
        raise NotImplementedError

    def step(self, state: Any, inbox: Mapping[tuple[int, int], Message]):
        raise NotImplementedError

    def output(self, state: Any) -> Any:
        return state


def run_hypergraph(h: Hypergraph, program: HypergraphProgram,
                   params: Mapping[str, Any] | None = None,
                   config: SimConfig | None = None) -> RunReport:
    """Execute a per-vertex program on a hypergraph.

    One broadcast on a hyperedge counts as one message; every other
    member of the hyperedge receives it tagged with (edge index, sender).
    """
    cfg = config or SimConfig()
    idspace = max(h.n, 1)
    cap = cfg.resolved_cap(idspace)
    gp: dict[str, Any] = dict(params or {})
    gp.setdefault("idspace", idspace)

    incident: dict[int, list[tuple[int, tuple[int, ...]]]] = {v: [] for v in range(h.n)}
    for i, e in enumerate(h.edges):
        for v in e:
            incident[v].append((i, e))

    order = tuple(range(h.n))
    states = {v: program.init(v, tuple(incident[v]), gp) for v in order}
    halted = {v: False for v in order}
    inboxes: dict[int, Mapping[tuple[int, int], Message]] = {v: EMPTY_INBOX for v in order}

    rounds = 0
    total_messages = 0
    max_bits = 0
    transcript: list[dict] | None = [] if cfg.record_transcript else None

    while True:
        sends: list[tuple[int, int, Message]] = []  # (edge_index, sender, msg)
        all_halted = True
        for v in order:
            if halted[v]:
                continue
            state, outbox, done = program.step(states[v], inboxes[v])
            states[v] = state
            if done:
                if outbox:
                    raise ProtocolViolation(f"vertex {v} sent messages while halting")
                halted[v] = True
            else:
                all_halted = False
            if outbox:
                own_edges = {i for i, _ in incident[v]}
                for eidx in sorted(outbox):
                    msg = outbox[eidx]
                    if eidx not in own_edges:
                        raise ProtocolViolation(f"vertex {v} broadcast on non-incident edge {eidx}")
                    if cap is not None and msg.bit_length > cap:
                        raise MessageCapExceeded(rounds + 1, v, eidx, msg.bit_length, cap)
                    sends.append((eidx, v, msg))
        if all_halted:
            break
        if rounds >= cfg.max_rounds:
            raise NonTermination(cfg.max_rounds)
        rounds += 1
        total_messages += len(sends)
        new_inboxes: dict[int, dict[tuple[int, int], Message]] = {}
        for eidx, v, msg in sends:
            if msg.bit_length > max_bits:
                max_bits = msg.bit_length
            for u in h.edges[eidx]:
                if u != v and not halted[u]:
                    new_inboxes.setdefault(u, {})[(eidx, v)] = msg
        inboxes = {v: EMPTY_INBOX for v in order}
        inboxes.update(new_inboxes)
        if transcript is not None:
            transcript.append({
                "round": rounds,
                "msgs": [{"from": v, "edge": eidx, "bits": m.bit_length}
                         for eidx, v, m in sorted(sends, key=lambda t: (t[1], t[0]))],
            })

    outputs = {v: program.output(states[v]) for v in order}
    return RunReport(rounds, max_bits, total_messages, outputs, True, transcript)
