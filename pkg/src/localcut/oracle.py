"""Brute-force ground truth: exact MaxCut / MaxDiCut and adversarial IDs.

The exact solvers enumerate all 2^n side assignments with numpy over chunks
of masks, so they are usable up to the documented budgets (n <= 30 for
MaxCut with a bipartite shortcut, n <= 24 for MaxDiCut) but no further.
They are deliberately independent of the algorithm implementations they
certify: nothing here calls median_cut or friends except through the
caller-supplied callable in the labelling search.
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Callable, Optional

import numpy as np

from .errors import BudgetError, InvalidParameterError
from .graphs import (
    Cut,
    LEFT,
    RIGHT,
    Labelling,
    Orientation,
    RegularGraph,
    cut_size,
    is_bipartite,
)

_CHUNK_BITS = 20


def _mask_to_cut(mask: int, n: int) -> Cut:
    # bit v set <=> v on the LEFT
    return Cut([LEFT if (mask >> v) & 1 else RIGHT for v in range(n)])


def max_cut_exact(g: RegularGraph, budget: int = 30) -> tuple[int, Cut]:
    """Maximum cut size with a witness.

    Bipartite graphs short-circuit to the 2-coloring (cut = m) at any size;
    otherwise all 2^(n-1) bipartitions are enumerated (vertex n-1 pinned
    RIGHT, which loses nothing by mirror symmetry).
    """
    bip, witness = is_bipartite(g)
    if bip:
        return g.m, witness
    if g.n > budget:
        raise BudgetError(
            f"exact MaxCut enumerates 2^(n-1) cuts; n={g.n} exceeds budget {budget}"
        )
    if g.n == 0:
        return 0, Cut([])
    best_size, best_mask = -1, 0
    total = 1 << (g.n - 1)
    for lo in range(0, total, 1 << _CHUNK_BITS):
        hi = min(lo + (1 << _CHUNK_BITS), total)
        masks = np.arange(lo, hi, dtype=np.int64)
        acc = np.zeros(hi - lo, dtype=np.uint16)
        for u, v in g.edges():
            acc += (((masks >> u) ^ (masks >> v)) & 1).astype(np.uint16)
        i = int(np.argmax(acc))
        if int(acc[i]) > best_size:
            best_size, best_mask = int(acc[i]), lo + i
    return best_size, _mask_to_cut(best_mask, g.n)


def _dicut_sizes_chunk(o: Orientation, lo: int, hi: int) -> np.ndarray:
    masks = np.arange(lo, hi, dtype=np.int64)
    acc = np.zeros(hi - lo, dtype=np.uint16)
    for t, h in o.arcs:
        acc += (((masks >> t) & ~(masks >> h)) & 1).astype(np.uint16)
    return acc


def max_dicut_exact(o: Orientation, budget: int = 24) -> tuple[int, Cut]:
    """Maximum directed cut size with a witness; enumerates all 2^n sides."""
    n = o.graph.n
    if n > budget:
        raise BudgetError(
            f"exact MaxDiCut enumerates 2^n cuts; n={n} exceeds budget {budget}"
        )
    if n == 0:
        return 0, Cut([])
    best_size, best_mask = -1, 0
    for lo in range(0, 1 << n, 1 << _CHUNK_BITS):
        hi = min(lo + (1 << _CHUNK_BITS), 1 << n)
        acc = _dicut_sizes_chunk(o, lo, hi)
        i = int(np.argmax(acc))
        if int(acc[i]) > best_size:
            best_size, best_mask = int(acc[i]), lo + i
    return best_size, _mask_to_cut(best_mask, n)


def enumerate_max_dicuts(o: Orientation, budget: int = 16) -> tuple[int, list[Cut]]:
    """All optimal directed cuts (ties included); budget keeps n small."""
    n = o.graph.n
    if n > budget:
        raise BudgetError(
            f"witness enumeration wants n <= {budget}, got {n}"
        )
    acc = _dicut_sizes_chunk(o, 0, 1 << n)
    best = int(acc.max())
    masks = np.nonzero(acc == best)[0]
    return best, [_mask_to_cut(int(m), n) for m in masks]


def adversarial_labelling_search(
    g: RegularGraph,
    algorithm: Callable[[RegularGraph, Labelling], Cut],
    mode: str = "anneal",
    budget: int = 10 ** 6,
    seed: int = 0,
) -> tuple[Labelling, int]:
    """Smallest algorithm cut over labellings, by exhaustion or annealing.

    mode "exhaustive": all n! assignments of IDs 1..n (pre: n <= 9).
    mode "anneal": seeded simulated annealing over ID permutations with
    swap-two moves and geometric cooling, `budget` moves total. Determinism
    comes from the single seed.
    """
    if mode == "exhaustive":
        if g.n > 9:
            raise BudgetError(
                f"exhaustive search is n! evaluations; n={g.n} exceeds 9"
            )
        best_ids, best_size = None, None
        for perm in itertools.permutations(range(1, g.n + 1)):
            lab = Labelling(perm)
            size = cut_size(g, algorithm(g, lab))
            if best_size is None or size < best_size:
                best_ids, best_size = perm, size
        return Labelling(best_ids, origin="exhaustive"), best_size

    if mode != "anneal":
        raise InvalidParameterError(f"mode must be 'exhaustive' or 'anneal', got {mode!r}")
    if budget < 1:
        raise InvalidParameterError("budget must be >= 1")
    rng = random.Random(seed)
    ids = list(range(1, g.n + 1))
    rng.shuffle(ids)
    current = cut_size(g, algorithm(g, Labelling(ids)))
    best_ids, best_size = list(ids), current
    t0, t_end = max(2.0, float(g.d)), 0.01
    cooling = (t_end / t0) ** (1.0 / budget)
    temp = t0
    for _ in range(budget):
        i, j = rng.sample(range(g.n), 2)
        ids[i], ids[j] = ids[j], ids[i]
        size = cut_size(g, algorithm(g, Labelling(ids)))
        if size <= current or rng.random() < math.exp((current - size) / temp):
            current = size
            if size < best_size:
                best_ids, best_size = list(ids), size
        else:
            ids[i], ids[j] = ids[j], ids[i]
        temp *= cooling
    return (
        Labelling(best_ids, origin=f"anneal(seed={seed},budget={budget})"),
        best_size,
    )
