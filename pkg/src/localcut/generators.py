"""Graph and instance generators.

Covers the adversarial circulant families, their clockwise orientations,
the four-set sharpness instance for the oriented-median ratio, the labelling
that drives the median cut down to its floor, pairing-model random regular
graphs, and the instance on which one round of flips gains nothing.

Every generator is deterministic: randomness only enters through an explicit
seed argument.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Mapping, Optional

from .errors import (
    BudgetError,
    ConstructionError,
    InvalidParameterError,
    SearchNotFoundError,
)
from .graphs import Labelling, Orientation, RegularGraph


def make_circulant(n: int, d: int) -> RegularGraph:
    """Cycle on n vertices plus all chords of odd length 3, 5, ..., d-1.

    pre: d even >= 2, n even >= 2d. The odd jump lengths {1, 3, ..., d-1}
    make the graph bipartite (even vertices vs odd vertices).
    """
    if d < 2 or d % 2:
        raise InvalidParameterError(f"d must be even >= 2, got {d}")
    if n % 2 or n < 2 * d:
        raise InvalidParameterError(f"n must be even >= 2d, got n={n}, d={d}")
    edges = [
        (i, (i + k) % n)
        for k in range(1, d, 2)
        for i in range(n)
    ]
    return RegularGraph.from_edges(
        n, edges, d=d, family="circulant", family_params=(n, d)
    )


def make_double_circulant(n: int, d: int) -> RegularGraph:
    """Two copies of the (d-1)-jump circulant joined by a perfect matching.

    Outer copy is vertices 0..n-1, inner copy n..2n-1, matching i -- n+i.
    pre: d odd >= 3, n even >= 2(d-1). 2n vertices, all of degree d.
    """
    if d < 3 or d % 2 == 0:
        raise InvalidParameterError(f"d must be odd >= 3, got {d}")
    if n % 2 or n < 2 * (d - 1):
        raise InvalidParameterError(
            f"n must be even >= 2(d-1), got n={n}, d={d}"
        )
    edges = []
    for k in range(1, d - 1, 2):
        for i in range(n):
            edges.append((i, (i + k) % n))
            edges.append((n + i, n + (i + k) % n))
    edges.extend((i, n + i) for i in range(n))
    return RegularGraph.from_edges(
        2 * n, edges, d=d, family="double_circulant", family_params=(n, d)
    )


def orient_clockwise(g: RegularGraph) -> Orientation:
    """Orient a circulant family clockwise: i -> i+k for every jump k.

    For the double circulant the matching is oriented outer -> inner, so
    every outer vertex gets deficit +1 and every inner vertex -1.
    """
    if g.family == "circulant":
        n, d = g.family_params
        arcs = [
            (i, (i + k) % n)
            for k in range(1, d, 2)
            for i in range(n)
        ]
    elif g.family == "double_circulant":
        n, d = g.family_params
        arcs = []
        for k in range(1, d - 1, 2):
            for i in range(n):
                arcs.append((i, (i + k) % n))
                arcs.append((n + i, n + (i + k) % n))
        arcs.extend((i, n + i) for i in range(n))
    else:
        raise InvalidParameterError(
            "clockwise orientation needs a circulant or double_circulant graph"
        )
    return Orientation(g, arcs)


def complete_graph(n: int) -> RegularGraph:
    if n < 1:
        raise InvalidParameterError("n must be >= 1")
    return RegularGraph(
        [[u for u in range(n) if u != v] for v in range(n)], d=n - 1
    )


def _pairing_attempt(n: int, d: int, rng: random.Random) -> Optional[set]:
    """One pass of the stub-matching pairing model.

    Shuffle the remaining stubs, pair them off, keep pairs that are neither
    loops nor repeats, and retry the leftovers; None when the leftovers can
    no longer be placed anywhere.
    """
    edges: set[tuple[int, int]] = set()
    stubs = [v for v in range(n) for _ in range(d)]
    while stubs:
        rng.shuffle(stubs)
        leftover: dict[int, int] = {}
        it = iter(stubs)
        for u, v in zip(it, it):
            if u > v:
                u, v = v, u
            if u != v and (u, v) not in edges:
                edges.add((u, v))
            else:
                leftover[u] = leftover.get(u, 0) + 1
                leftover[v] = leftover.get(v, 0) + 1
        if leftover:
            placeable = any(
                u != v and (min(u, v), max(u, v)) not in edges
                for u in leftover for v in leftover
            )
            if not placeable:
                return None
        stubs = [v for v, count in leftover.items() for _ in range(count)]
    return edges


def make_random_regular(n: int, d: int, seed: int, max_restarts: int = 1000) -> RegularGraph:
    """Random d-regular graph from the pairing model.

    pre: nd even, 0 <= d < n. Loop and duplicate pairs are rejected and
    their stubs re-drawn; only a stuck attempt triggers a full restart, so
    the expected number of restarts stays O(1) even for d = 7.
    """
    if d < 0 or d >= n or (n * d) % 2:
        raise InvalidParameterError(
            f"need 0 <= d < n and nd even, got n={n}, d={d}"
        )
    rng = random.Random(seed)
    for _ in range(max_restarts):
        edges = _pairing_attempt(n, d, rng)
        if edges is not None:
            return RegularGraph.from_edges(n, edges, d=d)
    raise ConstructionError(
        f"pairing model found no simple graph in {max_restarts} restarts "
        f"(n={n}, d={d}, seed={seed})"
    )


def make_id_orientation(g: RegularGraph, lab: Labelling) -> Orientation:
    """Orient every edge from the lower ID to the higher ID."""
    if lab.n != g.n:
        raise InvalidParameterError("labelling size does not match graph")
    ids = lab.ids
    return Orientation(
        g, ((u, v) if ids[u] < ids[v] else (v, u) for u, v in g.edges())
    )


def make_random_orientation(g: RegularGraph, seed: int) -> Orientation:
    """Fair coin per edge."""
    rng = random.Random(seed)
    return Orientation(
        g,
        ((u, v) if rng.getrandbits(1) else (v, u) for u, v in g.edges()),
    )


def _split_evenly(total: int, parts: int) -> list[int]:
    """Nonnegative integers summing to total, all within 1 of each other."""
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]


def _realize_bipartite(out_quota: Mapping[int, int], in_quota: Mapping[int, int],
                       forbidden: frozenset[tuple[int, int]] = frozenset()
                       ) -> list[tuple[int, int]]:
    """Arcs between two vertex sets meeting exact per-vertex quotas.

    Each allowed (tail, head) pair is used at most once. Solved as a
    unit-capacity flow with BFS augmenting paths, so it succeeds whenever
    the quotas are realizable at all and raises ConstructionError otherwise.
    Deterministic: node scan order follows sorted vertex indices.
    """
    total = sum(out_quota.values())
    if total != sum(in_quota.values()):
        raise ConstructionError("quota totals differ")
    tails = sorted(v for v in out_quota if out_quota[v] > 0)
    heads = sorted(v for v in in_quota if in_quota[v] > 0)
    src, snk = 0, 1
    tnode = {v: 2 + i for i, v in enumerate(tails)}
    hnode = {v: 2 + len(tails) + i for i, v in enumerate(heads)}
    cap: dict[int, dict[int, int]] = {u: {} for u in range(2 + len(tails) + len(heads))}

    def add(u: int, v: int, c: int) -> None:
        cap[u][v] = c
        cap[v].setdefault(u, 0)

    for x in tails:
        add(src, tnode[x], out_quota[x])
    for y in heads:
        add(hnode[y], snk, in_quota[y])
    for x in tails:
        for y in heads:
            if (x, y) not in forbidden:
                add(tnode[x], hnode[y], 1)

    flow = 0
    while flow < total:
        parent: dict[int, Optional[int]] = {src: None}
        queue = deque([src])
        while queue and snk not in parent:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > 0 and v not in parent:
                    parent[v] = u
                    queue.append(v)
        if snk not in parent:
            raise ConstructionError(
                f"quotas not realizable; placed {flow} of {total} arcs"
            )
        path = []
        v = snk
        while parent[v] is not None:
            path.append((parent[v], v))
            v = parent[v]
        push = min(cap[u][w] for u, w in path)
        for u, w in path:
            cap[u][w] -= push
            cap[w][u] += push
        flow += push

    return [
        (x, y)
        for x in tails for y in heads
        if (x, y) not in forbidden and cap[hnode[y]].get(tnode[x], 0) > 0
    ]


def abcd_sets(d: int, n: int) -> tuple[range, range, range, range]:
    """Vertex ranges (A, B, C, D) used by make_abcd_instance."""
    if d < 3 or d % 2 == 0:
        raise InvalidParameterError(f"d must be odd >= 3, got {d}")
    if n <= 0 or n % (4 * d):
        raise InvalidParameterError(f"n must be a positive multiple of 4d, got {n}")
    t = n // (4 * d)
    a, c = (d + 1) * t, (d - 1) * t
    return (
        range(0, a),
        range(a, 2 * a),
        range(2 * a, 2 * a + c),
        range(2 * a + c, 2 * a + 2 * c),
    )


def make_abcd_instance(d: int, n: int) -> Orientation:
    """Oriented d-regular instance on which the deficit cut is weakest.

    Four independent sets A, B, C, D with |A| = |B| = (d+1)n/4d and
    |C| = |D| = (d-1)n/4d. Arc families: A->B (n/2 arcs), A->D and C->B
    ((d-1)^2 n/8d each), D->A and B->C ((d^2-1) n/8d each). Every vertex of
    A and D ends up with deficit +1, every vertex of B and C with -1, so the
    deficit cut is (A u D, B u C) with exactly the n/2 A->B arcs crossing,
    while (A u C, B u D) catches (d^2+1)/2d * n/2 arcs.
    """
    A, B, C, D = abcd_sets(d, n)
    t = n // (4 * d)
    ab = n // 2
    ad = (d - 1) ** 2 * t // 2
    da = (d * d - 1) * t // 2
    out_hi, in_lo = (d + 1) // 2, (d - 1) // 2

    # A's out-degree (d+1)/2 splits between B and D; the split varies by
    # vertex, so balance it and let D absorb the rest. Same for B's in-side.
    a_to_b = dict(zip(A, _split_evenly(ab, len(A))))
    a_to_d = {v: out_hi - a_to_b[v] for v in A}
    if sum(a_to_d.values()) != ad or min(a_to_d.values()) < 0:
        raise ConstructionError("A-side quotas infeasible")
    b_from_a = dict(zip(B, _split_evenly(ab, len(B))))
    b_from_c = {v: out_hi - b_from_a[v] for v in B}
    if sum(b_from_c.values()) != ad or min(b_from_c.values()) < 0:
        raise ConstructionError("B-side quotas infeasible")

    arcs: list[tuple[int, int]] = []
    arcs += _realize_bipartite(a_to_b, b_from_a)
    f_ad = _realize_bipartite(a_to_d, {v: in_lo for v in D})
    arcs += f_ad
    arcs += _realize_bipartite(
        {v: out_hi for v in D},
        {v: in_lo for v in A},
        forbidden=frozenset((h, t_) for t_, h in f_ad),
    )
    f_cb = _realize_bipartite({v: in_lo for v in C}, b_from_c)
    arcs += f_cb
    arcs += _realize_bipartite(
        {v: in_lo for v in B},
        {v: out_hi for v in C},
        forbidden=frozenset((h, t_) for t_, h in f_cb),
    )

    graph = RegularGraph.from_edges(n, arcs, d=d, family="abcd", family_params=(d, n))
    o = Orientation(graph, arcs)
    for v in range(n):
        want = 1 if (v in A or v in D) else -1
        if o.deficit(v) != want:
            raise ConstructionError(f"vertex {v} has deficit {o.deficit(v)}")
    assert da == sum(1 for t_, h in arcs if t_ in D)
    return o


def make_extremal_labelling(g: RegularGraph, seed: int = 0,
                            budget: int = 200_000) -> Labelling:
    """Labelling of a double circulant whose median cut is as small as known.

    Target: N/2 + (d-2)^2 + 1 cut edges, N the vertex count. IDs increasing
    clockwise (outer 1..n, then inner n+1..2n) already achieve the target:
    away from the wrap-around seam every outer vertex sees its median neighbor
    above itself and every inner vertex below, so only the matching and the
    two seams cross. Falls back to seeded annealing if the pattern misses,
    and raises SearchNotFoundError (carrying the best cut found) if the
    budget runs out first.
    """
    from .algorithms import median_cut
    from .graphs import cut_size

    if g.family != "double_circulant":
        raise InvalidParameterError("extremal labelling targets double circulants")
    _, d = g.family_params
    target = g.n // 2 + (d - 2) ** 2 + 1
    pattern = Labelling(range(1, g.n + 1), origin="clockwise-sequential")
    if cut_size(g, median_cut(g, pattern)) <= target:
        return pattern

    from .oracle import adversarial_labelling_search

    lab, achieved = adversarial_labelling_search(
        g, median_cut, mode="anneal", budget=budget, seed=seed
    )
    if achieved <= target:
        return Labelling(lab.ids, origin=f"anneal(seed={seed},budget={budget})")
    raise SearchNotFoundError(
        f"no labelling with median cut <= {target} in {budget} moves "
        f"(best {achieved})",
        best=achieved,
    )


def stuck_sets(d: int) -> dict[str, range]:
    """Vertex ranges for make_single_flip_stuck_instance's six classes.

    Class sizes follow from forcing every class to have uniform (out, in)
    degrees with deficit +-1: |A_s| = 4dq/(d-1)^2, |D| = q(d+1)/(d-1) with
    |A_u| = q minimal subject to integrality and |D| >= d (each unstable
    vertex needs d distinct neighbors inside one class).
    """
    if d < 3 or d % 2 == 0:
        raise InvalidParameterError(f"d must be odd >= 3, got {d}")
    q = 1
    while True:
        if (4 * d * q) % ((d - 1) ** 2) == 0 and (q * (d + 1)) % (d - 1) == 0:
            r = q * (d + 1) // (d - 1)
            p = 4 * d * q // ((d - 1) ** 2)
            if r >= d and p >= (d + 1) // 2 and q >= (d - 1) // 2:
                break
        q += 1
    bounds = []
    start = 0
    for size in (p, q, p, q, r, r):
        bounds.append(range(start, start + size))
        start += size
    keys = ("A_s", "A_u", "B_s", "B_u", "C", "D")
    return dict(zip(keys, bounds))


def make_single_flip_stuck_instance(d: int, oracle_budget: int = 24) -> Orientation:
    """Worst-ratio instance on which one round of flips changes nothing.

    Refines the four-set instance: the A->D and C->B arcs that a flip would
    add to the cut are rerouted through unstable subclasses A_u and B_u, so
    no arc runs from a stable vertex into an unstable one on the plus side
    (or out of an unstable one on the minus side). The deficit cut still has
    exactly n/2 arcs and the optimum is still (d^2+1)/2d times that, so
    CUT_0 = CUT_1 = 2/(d + 1/d) * OPT. Verified against the brute-force
    oracle before returning; raises SearchNotFoundError when the smallest
    such instance exceeds the oracle budget (n = 30 already for d = 5).
    """
    from .algorithms import oriented_median_cut, unstable_flip_step
    from .graphs import Cut, LEFT, RIGHT, dicut_size
    from .oracle import max_dicut_exact

    sets = stuck_sets(d)
    A_s, A_u, B_s, B_u, C, D = (sets[k] for k in ("A_s", "A_u", "B_s", "B_u", "C", "D"))
    n = 2 * (len(A_s) + len(A_u) + len(D))
    if n > oracle_budget:
        raise SearchNotFoundError(
            f"smallest single-flip-stuck instance for d={d} has {n} vertices, "
            f"beyond the dicut oracle budget of {oracle_budget}",
            best=None,
        )
    out_hi, in_lo = (d + 1) // 2, (d - 1) // 2

    arcs: list[tuple[int, int]] = []
    # Cut arcs: stable plus side to stable minus side, (d+1)/2 per vertex.
    arcs += _realize_bipartite(
        {v: out_hi for v in A_s}, {v: out_hi for v in B_s}
    )
    # Unstable plus side: A_u and D only see each other / A. D's out arcs
    # split between A_u and A_s inside one flow, so the reversal bans from
    # f_aud never strand a tail.
    f_aud = _realize_bipartite(
        {v: out_hi for v in A_u}, {v: in_lo for v in D}
    )
    arcs += f_aud
    arcs += _realize_bipartite(
        {v: out_hi for v in D},
        {v: in_lo for v in A_u} | {v: in_lo for v in A_s},
        forbidden=frozenset((h, t) for t, h in f_aud),
    )
    # Unstable minus side, mirrored: C and B_u only see each other / B.
    f_cbu = _realize_bipartite(
        {v: in_lo for v in C}, {v: out_hi for v in B_u}
    )
    arcs += f_cbu
    arcs += _realize_bipartite(
        {v: in_lo for v in B_u} | {v: in_lo for v in B_s},
        {v: out_hi for v in C},
        forbidden=frozenset((h, t) for t, h in f_cbu),
    )

    graph = RegularGraph.from_edges(
        n, arcs, d=d, family="single_flip_stuck", family_params=(d, n)
    )
    o = Orientation(graph, arcs)

    c0 = oriented_median_cut(o)
    want = Cut([LEFT if (v in A_s or v in A_u or v in D) else RIGHT for v in range(n)])
    cut0 = dicut_size(o, c0)
    cut1 = dicut_size(o, unstable_flip_step(o, c0))
    opt, _ = max_dicut_exact(o, budget=oracle_budget)
    if not (c0 == want and cut0 == n // 2 and cut1 == cut0
            and cut0 * (d * d + 1) == opt * 2 * d):
        raise ConstructionError(
            f"stuck instance failed verification: cut0={cut0}, cut1={cut1}, opt={opt}"
        )
    return o
