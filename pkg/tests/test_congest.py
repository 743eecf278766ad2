"""Round engine semantics: accounting, congestion, determinism, locality."""

import pytest
from hypothesis import given, settings, strategies as st

from localcut import (
    CongestionError,
    Cut,
    FlipProgram,
    InvalidParameterError,
    LEFT,
    Labelling,
    MedianProgram,
    NodeProgram,
    NonTerminationError,
    RIGHT,
    distributed_flip_step,
    identity_labelling,
    make_circulant,
    make_double_circulant,
    make_random_regular,
    median_cut,
    random_cut,
    random_labelling,
    run,
    run_bit_serialized_median,
)
from localcut.congest import decode_id, encode_id

from conftest import labelling_for, small_regular_graphs

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def median_width(lab: Labelling) -> int:
    return max(1, lab.max_id.bit_length())


# --- encoding ----------------------------------------------------------------

def test_encode_decode_roundtrip():
    assert encode_id(5, 4) == "0101"
    assert decode_id("0101") == 5
    assert decode_id(encode_id(0, 3)) == 0
    with pytest.raises(InvalidParameterError):
        encode_id(8, 3)
    with pytest.raises(InvalidParameterError):
        encode_id(-1, 3)


# --- the median program ---------------------------------------------------------

@given(small_regular_graphs(degrees=(3, 5)), seeds)
@settings(max_examples=40)
def test_engine_matches_direct_median(g, seed):
    lab = labelling_for(g.n, seed)
    cut, trace = run(MedianProgram(median_width(lab)), g, lab)
    assert cut == median_cut(g, lab)
    assert trace.rounds_used == 1


def test_median_trace_accounting():
    g = make_double_circulant(6, 3)
    lab = identity_labelling(g.n)  # max id 12 -> 4 bits
    cut, trace = run(MedianProgram(4), g, lab)
    assert trace.rounds_used == 1
    assert trace.max_message_bits == 4
    # every vertex broadcasts once on each of its 3 ports
    assert trace.total_bits == g.n * 3 * 4
    assert trace.bits_per_round == (g.n * 3 * 4, 0)


def test_median_respects_exact_bit_limit():
    g = make_double_circulant(6, 3)
    lab = identity_labelling(g.n)
    cut, trace = run(MedianProgram(4), g, lab, bit_limit=4)
    assert trace.max_message_bits == 4
    assert cut == median_cut(g, lab)


def test_median_over_bit_limit_raises():
    g = make_double_circulant(6, 3)
    lab = identity_labelling(g.n)
    with pytest.raises(CongestionError) as err:
        run(MedianProgram(4), g, lab, bit_limit=3)
    assert err.value.bits == 4
    assert err.value.limit == 3
    assert err.value.round_index == 0


# --- bit-serialized variant ------------------------------------------------------

@given(small_regular_graphs(degrees=(3, 5)), seeds,
       st.integers(min_value=1, max_value=6))
@settings(max_examples=40)
def test_serialized_median_any_chunk_size(g, seed, chunk):
    lab = labelling_for(g.n, seed)
    cut, trace = run_bit_serialized_median(g, lab, chunk)
    assert cut == median_cut(g, lab)
    width = median_width(lab)
    assert trace.rounds_used == -(-width // chunk)
    assert trace.max_message_bits <= chunk


def test_serialized_median_b1_uses_width_rounds():
    g = make_double_circulant(6, 3)
    lab = random_labelling(g.n, seed=9)
    cut, trace = run_bit_serialized_median(g, lab, 1)
    assert trace.rounds_used == median_width(lab)
    assert trace.max_message_bits == 1
    assert cut == median_cut(g, lab)


def test_serialized_median_wide_chunk_is_one_round():
    g = make_double_circulant(6, 3)
    lab = identity_labelling(g.n)
    cut, trace = run_bit_serialized_median(g, lab, 64)
    assert trace.rounds_used == 1


# --- FLIP program ---------------------------------------------------------------

def test_flip_program_matches_function():
    g = make_random_regular(18, 3, seed=4)
    start = random_cut(g, seed=2)
    prog = FlipProgram(lambda own_id: start.sides[own_id - 1], rounds=4)
    cut, trace = run(prog, g, identity_labelling(g.n))
    expect = start
    for _ in range(4):
        expect = distributed_flip_step(g, expect)
    assert cut == expect
    assert trace.rounds_used == 4
    assert trace.max_message_bits == 1


def test_flip_program_zero_rounds():
    g = make_circulant(8, 2)
    start = Cut.from_left_set(8, [0, 1])
    prog = FlipProgram(lambda own_id: start.sides[own_id - 1], rounds=0)
    cut, trace = run(prog, g, identity_labelling(8))
    assert cut == start
    assert trace.rounds_used == 0
    assert trace.total_bits == 0


def test_flip_program_validates():
    with pytest.raises(InvalidParameterError):
        FlipProgram(lambda own_id: LEFT, rounds=-1)
    g = make_circulant(8, 2)
    bad = FlipProgram(lambda own_id: 7, rounds=1)
    with pytest.raises(InvalidParameterError):
        run(bad, g, identity_labelling(8))


# --- engine contracts -------------------------------------------------------------

def test_engine_deterministic():
    g = make_random_regular(20, 5, seed=6)
    lab = random_labelling(20, seed=8)
    a = run(MedianProgram(median_width(lab)), g, lab)
    b = run(MedianProgram(median_width(lab)), g, lab)
    assert a[0] == b[0]
    assert a[1] == b[1]


def test_engine_locality_far_ids_do_not_matter():
    # node 0's output after 1 round only depends on its radius-1 ball
    g = make_double_circulant(6, 3)
    ids = list(range(1, 13))
    lab = Labelling(ids)
    base, _ = run(MedianProgram(median_width(lab)), g, lab)

    far = [v for v in range(12) if v != 0 and v not in g.adj[0]]
    swapped = ids[:]
    swapped[far[0]], swapped[far[1]] = swapped[far[1]], swapped[far[0]]
    moved, _ = run(MedianProgram(median_width(Labelling(swapped))), g,
                   Labelling(swapped))
    assert moved.sides[0] == base.sides[0]


def test_engine_rejects_size_mismatch():
    g = make_circulant(8, 2)
    with pytest.raises(InvalidParameterError):
        run(MedianProgram(4), g, identity_labelling(9))


class _SilentProgram(NodeProgram):
    """Never outputs and never sends; the engine must notice the deadlock."""

    def init(self, own_id, degree, port_count):
        return None

    def step(self, state, round_index, inbound):
        return None, (None,) * len(inbound), None


class _ChattyProgram(NodeProgram):
    """Keeps sending but never outputs; stopped by the round cap."""

    def init(self, own_id, degree, port_count):
        return None

    def step(self, state, round_index, inbound):
        return None, ("1",) * len(inbound), None


def test_engine_detects_deadlock():
    g = make_circulant(8, 2)
    with pytest.raises(NonTerminationError):
        run(_SilentProgram(), g, identity_labelling(8))


def test_engine_round_cap():
    g = make_circulant(8, 2)
    with pytest.raises(NonTerminationError):
        run(_ChattyProgram(), g, identity_labelling(8), max_rounds=10)


class _WrongArityProgram(NodeProgram):
    def init(self, own_id, degree, port_count):
        return None

    def step(self, state, round_index, inbound):
        return None, ("1",), LEFT


def test_engine_rejects_wrong_port_arity():
    g = make_circulant(8, 2)
    with pytest.raises(InvalidParameterError):
        run(_WrongArityProgram(), g, identity_labelling(8))


def test_finished_nodes_stay_silent():
    # half the nodes stop a round before the rest; their later bits are zero
    class _StaggeredProgram(NodeProgram):
        def init(self, own_id, degree, port_count):
            return {"id": own_id}

        def step(self, state, round_index, inbound):
            if state["id"] % 2 == 0 and round_index >= 0:
                return state, (None,) * len(inbound), LEFT
            if round_index >= 1:
                return state, (None,) * len(inbound), RIGHT
            return state, ("1",) * len(inbound), None

    g = make_circulant(8, 2)
    cut, trace = run(_StaggeredProgram(), g, identity_labelling(8))
    assert set(cut.sides) == {LEFT, RIGHT}
    # round 0: only odd-id nodes (4 of them) send on 2 ports each
    assert trace.bits_per_round[0] == 4 * 2
    assert trace.bits_per_round[1] == 0
