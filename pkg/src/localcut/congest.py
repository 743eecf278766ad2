"""Synchronous message-passing simulation with bit accounting.

Nodes see only their own ID, their degree, and numbered ports; vertex
indices never leak in. Messages are '0'/'1' strings so their bit cost is
just their length. Round r messages are computed from round r-1 state for
every node at once, so execution order cannot matter.

A program that outputs during its very first activation, before anything
has been delivered, costs zero rounds.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import (
    CongestionError,
    InvalidParameterError,
    NonTerminationError,
)
from .graphs import Cut, LEFT, RIGHT, Labelling, RegularGraph


class NodeProgram(ABC):
    """Contract for one node's behavior, replicated across all nodes."""

    @abstractmethod
    def init(self, own_id: int, degree: int, port_count: int):
        """Return the node's initial state."""

    @abstractmethod
    def step(self, state, round_index: int,
             inbound: Sequence[Optional[str]]
             ) -> tuple[object, Sequence[Optional[str]], Optional[int]]:
        """Consume this round's inbound messages.

        Returns (new state, outbound message per port, output side or None).
        At round 0 nothing has been delivered yet and inbound is all None.
        An emitted output is final.
        """


@dataclass(frozen=True)
class RoundTrace:
    """Accounting for one run: rounds, bit totals, per-round bit counts."""

    rounds_used: int
    max_message_bits: int
    total_bits: int
    bits_per_round: tuple[int, ...]


def encode_id(value: int, width: int) -> str:
    """Fixed-width binary; every node sends the same number of bits."""
    if value < 0 or value >= 1 << width:
        raise InvalidParameterError(f"{value} does not fit in {width} bits")
    return format(value, f"0{width}b")


def decode_id(bits: str) -> int:
    return int(bits, 2)


def run(program: NodeProgram, g: RegularGraph, lab: Labelling,
        bit_limit: Optional[int] = None,
        max_rounds: Optional[int] = None) -> tuple[Cut, RoundTrace]:
    """Execute `program` on every node until all have output.

    bit_limit is the CONGEST(B) cap per message per round; a violation
    raises CongestionError naming the sender, port, and round. Nodes that
    have output are not stepped again (silent afterwards). max_rounds
    defaults to 4n.
    """
    if lab.n != g.n:
        raise InvalidParameterError("labelling size does not match graph")
    if max_rounds is None:
        max_rounds = 4 * g.n
    # port p of u leads to v = adj[u][p]; deliveries land on the back port
    back_port = [
        [g.adj[v].index(u) for v in g.adj[u]] for u in range(g.n)
    ]

    states = [program.init(lab.ids[v], g.d, len(g.adj[v])) for v in range(g.n)]
    outputs: list[Optional[int]] = [None] * g.n
    pending: list[list[Optional[str]]] = [[None] * len(g.adj[v]) for v in range(g.n)]
    total_bits = 0
    max_bits = 0
    bits_per_round: list[int] = []
    round_index = 0

    def step_all(inboxes) -> None:
        nonlocal total_bits, max_bits
        round_bits = 0
        for v in range(g.n):
            if outputs[v] is not None:
                pending[v] = [None] * len(g.adj[v])
                continue
            state, outbound, out = program.step(states[v], round_index, tuple(inboxes[v]))
            outbound = list(outbound)
            if len(outbound) != len(g.adj[v]):
                raise InvalidParameterError(
                    f"node {v} produced {len(outbound)} messages for "
                    f"{len(g.adj[v])} ports"
                )
            for port, msg in enumerate(outbound):
                if msg is None:
                    continue
                if bit_limit is not None and len(msg) > bit_limit:
                    raise CongestionError(v, port, round_index, len(msg), bit_limit)
                round_bits += len(msg)
                max_bits = max(max_bits, len(msg))
            states[v] = state
            pending[v] = outbound
            if out is not None:
                if out not in (LEFT, RIGHT):
                    raise InvalidParameterError(
                        f"node {v} output {out!r}, expected a side"
                    )
                outputs[v] = out
        total_bits += round_bits
        bits_per_round.append(round_bits)

    step_all([[None] * len(g.adj[v]) for v in range(g.n)])
    while any(out is None for out in outputs):
        if round_index >= max_rounds:
            raise NonTerminationError(
                f"{sum(1 for o in outputs if o is None)} nodes still running "
                f"after {max_rounds} rounds"
            )
        inboxes: list[list[Optional[str]]] = [
            [None] * len(g.adj[v]) for v in range(g.n)
        ]
        delivered = False
        for u in range(g.n):
            for port, msg in enumerate(pending[u]):
                if msg is not None:
                    inboxes[g.adj[u][port]][back_port[u][port]] = msg
                    delivered = True
            pending[u] = [None] * len(g.adj[u])
        if not delivered:
            raise NonTerminationError(
                "nodes are waiting but no messages are in flight"
            )
        round_index += 1
        step_all(inboxes)

    trace = RoundTrace(
        rounds_used=round_index,
        max_message_bits=max_bits,
        total_bits=total_bits,
        bits_per_round=tuple(bits_per_round),
    )
    return Cut(outputs), trace


class MedianProgram(NodeProgram):
    """One-round median rule: broadcast own ID, then decide from the medians.

    `id_width` fixes the message width for every node (bitlen of the largest
    ID in play).
    """

    def __init__(self, id_width: int):
        if id_width < 1:
            raise InvalidParameterError("id_width must be >= 1")
        self.id_width = id_width

    def init(self, own_id, degree, port_count):
        if degree % 2 == 0:
            raise InvalidParameterError("median rule needs odd degree")
        return {"id": own_id}

    def step(self, state, round_index, inbound):
        ports = len(inbound)
        if round_index == 0:
            return state, (encode_id(state["id"], self.id_width),) * ports, None
        neighbor_ids = sorted(decode_id(msg) for msg in inbound)
        median = neighbor_ids[len(neighbor_ids) // 2]
        side = LEFT if median > state["id"] else RIGHT
        return state, (None,) * ports, side


class BitSerializedMedianProgram(NodeProgram):
    """Median rule under CONGEST(B): stream the ID in B-bit chunks.

    Takes ceil(id_width / chunk_bits) rounds; with chunk_bits >= id_width it
    degenerates to the one-round program.
    """

    def __init__(self, id_width: int, chunk_bits: int):
        if id_width < 1 or chunk_bits < 1:
            raise InvalidParameterError("widths must be >= 1")
        self.id_width = id_width
        self.chunk_bits = chunk_bits
        self.num_chunks = -(-id_width // chunk_bits)

    def init(self, own_id, degree, port_count):
        if degree % 2 == 0:
            raise InvalidParameterError("median rule needs odd degree")
        return {
            "bits": encode_id(own_id, self.id_width),
            "id": own_id,
            "received": [""] * port_count,
        }

    def step(self, state, round_index, inbound):
        ports = len(inbound)
        if round_index > 0:
            received = [
                acc + (msg or "") for acc, msg in zip(state["received"], inbound)
            ]
            state = {**state, "received": received}
        if round_index < self.num_chunks:
            lo = round_index * self.chunk_bits
            chunk = state["bits"][lo:lo + self.chunk_bits]
            return state, (chunk,) * ports, None
        neighbor_ids = sorted(decode_id(bits) for bits in state["received"])
        median = neighbor_ids[len(neighbor_ids) // 2]
        side = LEFT if median > state["id"] else RIGHT
        return state, (None,) * ports, side


class FlipProgram(NodeProgram):
    """Distributed FLIP for a fixed number of rounds, 1 bit per message.

    The starting side comes from the node's own ID via `initial_side`, the
    only locally available information.
    """

    def __init__(self, initial_side: Callable[[int], int], rounds: int):
        if rounds < 0:
            raise InvalidParameterError("rounds must be >= 0")
        self.initial_side = initial_side
        self.rounds = rounds

    def init(self, own_id, degree, port_count):
        side = self.initial_side(own_id)
        if side not in (LEFT, RIGHT):
            raise InvalidParameterError("initial_side must return a side")
        return {"side": side}

    def step(self, state, round_index, inbound):
        ports = len(inbound)
        side = state["side"]
        if round_index > 0:
            same = sum(1 for msg in inbound if decode_id(msg) == side)
            if 2 * same > ports:
                side = 1 - side
            state = {**state, "side": side}
        if round_index >= self.rounds:
            return state, (None,) * ports, side
        return state, (str(side),) * ports, None


def run_bit_serialized_median(g: RegularGraph, lab: Labelling, chunk_bits: int
                              ) -> tuple[Cut, RoundTrace]:
    """Median rule under CONGEST(chunk_bits); B = bitlen(max ID) means 1 round."""
    width = max(1, lab.max_id.bit_length())
    program = BitSerializedMedianProgram(width, chunk_bits)
    return run(program, g, lab, bit_limit=chunk_bits)
