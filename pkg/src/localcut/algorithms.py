"""The local cut algorithms and the flip dynamics, as plain functions.

Side convention: a vertex whose median neighbor ID exceeds its own goes
LEFT, and LEFT is the tail side of a directed cut. Under the low-to-high ID
orientation the left side is exactly the positive-deficit side, which is why
the median rule and the deficit rule agree.
"""

from __future__ import annotations

import random
from typing import Callable, Union

from .errors import InvalidParameterError, UnsupportedDegreeError
from .graphs import Cut, LEFT, Labelling, Orientation, RIGHT, RegularGraph


def median_cut(g: RegularGraph, lab: Labelling) -> Cut:
    """One-round median rule: LEFT iff the median neighbor ID beats your own.

    pre: d odd (the median of an even number of IDs is not one of them).
    """
    if g.d % 2 == 0:
        raise UnsupportedDegreeError(f"median rule needs odd degree, got d={g.d}")
    if lab.n != g.n:
        raise InvalidParameterError("labelling size does not match graph")
    ids = lab.ids
    mid = g.d // 2
    sides = []
    for v in range(g.n):
        median = sorted(ids[u] for u in g.adj[v])[mid]
        sides.append(LEFT if median > ids[v] else RIGHT)
    return Cut(sides)


def oriented_median_cut(o: Orientation) -> Cut:
    """Zero-round deficit rule: LEFT iff out-degree exceeds in-degree.

    pre: no vertex has deficit 0 (guaranteed when d is odd).
    """
    sides = []
    for v in range(o.graph.n):
        delta = o.deficit(v)
        if delta == 0:
            raise InvalidParameterError(
                f"vertex {v} has deficit 0; the deficit rule needs odd degrees"
            )
        sides.append(LEFT if delta > 0 else RIGHT)
    return Cut(sides)


def stable_vertices(g: RegularGraph, c: Cut) -> frozenset[int]:
    """Vertices with at least one neighbor on the other side (undirected)."""
    sides = c.sides
    return frozenset(
        v for v in range(g.n)
        if any(sides[u] != sides[v] for u in g.adj[v])
    )


def unstable_flip_step(o: Orientation, c: Cut) -> Cut:
    """Flip every unstable vertex simultaneously.

    Stability only looks at the underlying graph; the orientation is carried
    so callers can chain dicut measurements.
    """
    g = o.graph
    stable = stable_vertices(g, c)
    return Cut([
        s if v in stable else 1 - s for v, s in enumerate(c.sides)
    ])


def oriented_median_plus_flips(o: Orientation, flips: int) -> tuple[Cut, tuple[int, ...]]:
    """Deficit cut followed by `flips` rounds of unstable flips.

    Returns the final cut and the dicut sizes (CUT_0, ..., CUT_flips).
    The sequence never decreases: flipped arcs never leave the cut.
    """
    from .graphs import dicut_size

    if flips < 0:
        raise InvalidParameterError("flips must be >= 0")
    c = oriented_median_cut(o)
    sizes = [dicut_size(o, c)]
    for _ in range(flips):
        c = unstable_flip_step(o, c)
        sizes.append(dicut_size(o, c))
    return c, tuple(sizes)


def distributed_flip_step(g: RegularGraph, c: Cut) -> Cut:
    """One synchronous round of FLIP: strict same-side majority flips."""
    sides = c.sides
    new = []
    for v in range(g.n):
        same = sum(1 for u in g.adj[v] if sides[u] == sides[v])
        new.append(1 - sides[v] if 2 * same > g.d else sides[v])
    return Cut(new)


def is_maximal_cut(g: RegularGraph, c: Cut) -> bool:
    """No single vertex flip can grow the cut."""
    sides = c.sides
    for v in range(g.n):
        same = sum(1 for u in g.adj[v] if sides[u] == sides[v])
        if 2 * same > len(g.adj[v]):
            return False
    return True


def sequential_flip_to_maximal(g: RegularGraph, c: Cut,
                               order: Union[str, Callable[[list[int]], int]] = "lowest"
                               ) -> Cut:
    """Flip one improving vertex at a time until the cut is maximal.

    Each flip grows the cut, so at most m flips happen and the result is at
    least m/2. `order` picks among improving vertices: "lowest" (default),
    "highest", or a callable receiving the candidate list.
    """
    if order == "lowest":
        pick = min
    elif order == "highest":
        pick = max
    elif callable(order):
        pick = order
    else:
        raise InvalidParameterError(f"unknown order policy {order!r}")
    sides = list(c.sides)
    if None in sides or len(sides) != g.n:
        raise InvalidParameterError("cut must be total")
    flips = 0
    while True:
        candidates = [
            v for v in range(g.n)
            if 2 * sum(1 for u in g.adj[v] if sides[u] == sides[v]) > g.d
        ]
        if not candidates:
            break
        v = pick(candidates)
        sides[v] = 1 - sides[v]
        flips += 1
        if flips > g.m:
            raise AssertionError("more than m improving flips; cut bookkeeping bug")
    return Cut(sides)


def random_cut(g: RegularGraph, seed: int) -> Cut:
    """Fair coin per vertex."""
    rng = random.Random(seed)
    return Cut([rng.getrandbits(1) for _ in range(g.n)])
