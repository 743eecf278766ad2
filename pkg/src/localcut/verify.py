"""Verification suites: run a guarantee against a seeded corpus, report.

Each suite returns a plain dict (JSON-ready) with a boolean "pass", case
counts, and a bounded list of violation descriptions. The CLI exposes them
via `verify --suite`; the acceptance tests assert on the same reports, so
there is exactly one implementation of every check.

All comparisons against guaranteed values are exact (integers, Fractions).
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from functools import lru_cache

from . import bounds
from .algorithms import (
    median_cut,
    oriented_median_cut,
    random_cut,
    stable_vertices,
    unstable_flip_step,
)
from .generators import (
    complete_graph,
    make_abcd_instance,
    make_circulant,
    make_double_circulant,
    make_id_orientation,
    make_random_orientation,
    make_random_regular,
    orient_clockwise,
)
from .graphs import (
    cut_size,
    dicut_arcs,
    dicut_size,
    identity_labelling,
    is_bipartite,
    random_labelling,
    validate_regular,
)
from .oracle import max_cut_exact, max_dicut_exact

_MAX_REPORTED = 20


def _report(suite: str, cases: int, violations: list[str], started: float,
            **extra) -> dict:
    return {
        "suite": suite,
        "cases": cases,
        "violations": len(violations),
        "first_violations": violations[:_MAX_REPORTED],
        "pass": not violations,
        "elapsed_s": round(time.monotonic() - started, 3),
        **extra,
    }


def _even_n(rng: random.Random, d: int, max_n: int) -> int:
    lo = (d + 2) // 2 + 1  # smallest half so that 2*half > d
    return 2 * rng.randrange(lo, max_n // 2 + 1)


def double_circulant_halves(d: int) -> tuple[int, ...]:
    """Family sizes exercised per degree: smallest legal, 2d, and 12."""
    return tuple(sorted({max(2 * (d - 1), d + 1), 2 * d, 12}))


def verify_median_floor(seed: int = 0, degrees: tuple[int, ...] = (3, 5, 7),
                        random_graphs: int = 50,
                        labellings_per_graph: int = 10) -> dict:
    """Median cut >= n/2 + (d-1)(d+1)/4 on families and random graphs."""
    started = time.monotonic()
    rng = random.Random(seed)
    violations: list[str] = []
    cases = 0
    for d in degrees:
        graphs = [make_double_circulant(n, d) for n in double_circulant_halves(d)]
        for _ in range(random_graphs):
            n = _even_n(rng, d, 40)
            graphs.append(make_random_regular(n, d, seed=rng.randrange(2 ** 32)))
        floor_cache = {}
        for g in graphs:
            floor = floor_cache.setdefault(g.n, bounds.median_floor(g.n, d))
            for _ in range(labellings_per_graph):
                lab = random_labelling(g.n, seed=rng.randrange(2 ** 32))
                size = cut_size(g, median_cut(g, lab))
                cases += 1
                if Fraction(size) < floor:
                    violations.append(
                        f"d={d} n={g.n} ids={lab.origin}: cut {size} < floor {floor}"
                    )
    return _report("median-floor", cases, violations, started)


@lru_cache(maxsize=4)
def _ratio_records(degrees: tuple[int, ...], cases_per_degree: int,
                   max_n: int, seed: int) -> tuple[dict, ...]:
    """Shared corpus: random orientations with oracle OPT and decompositions.

    Cached because three suites (ratio, inequalities, two-flip floor) read
    the same records and the oracle pass is the expensive part.
    """
    rng = random.Random(seed)
    records = []
    for d in degrees:
        for _ in range(cases_per_degree):
            n = _even_n(rng, d, max_n)
            g = make_random_regular(n, d, seed=rng.randrange(2 ** 32))
            o = make_random_orientation(g, seed=rng.randrange(2 ** 32))
            opt, witness = max_dicut_exact(o)
            dec = bounds.decompose(o, witness)
            records.append({
                "d": d,
                "n": n,
                "opt": opt,
                "cuts": dec.cut_sizes,
                "verdicts": bounds.check_inequalities(dec),
            })
    return tuple(records)


def verify_oriented_ratio(seed: int = 0,
                          floor_degrees: tuple[int, ...] = (3, 5, 7),
                          floor_cases: int = 500,
                          floor_max_n: int = 100,
                          ratio_degrees: tuple[int, ...] = (3, 5),
                          ratio_cases_per_degree: int = 100,
                          ratio_max_n: int = 20) -> dict:
    """Deficit cut >= n/2 always, and >= 2d/(d^2+1) * OPT against the oracle."""
    started = time.monotonic()
    rng = random.Random(seed)
    violations: list[str] = []
    cases = 0
    for i in range(floor_cases):
        d = floor_degrees[i % len(floor_degrees)]
        n = _even_n(rng, d, floor_max_n)
        g = make_random_regular(n, d, seed=rng.randrange(2 ** 32))
        o = make_random_orientation(g, seed=rng.randrange(2 ** 32))
        size = dicut_size(o, oriented_median_cut(o))
        cases += 1
        if 2 * size < n:
            violations.append(f"d={d} n={n}: dicut {size} < n/2")
    for rec in _ratio_records(ratio_degrees, ratio_cases_per_degree,
                              ratio_max_n, seed):
        ratio = bounds.oriented_ratio(rec["d"])
        cases += 1
        if Fraction(rec["cuts"][0]) < ratio * rec["opt"]:
            violations.append(
                f"d={rec['d']} n={rec['n']}: dicut {rec['cuts'][0]} < "
                f"{ratio} * OPT({rec['opt']})"
            )
    return _report("oriented-ratio", cases, violations, started)


def verify_flip_inequalities(seed: int = 0,
                             degrees: tuple[int, ...] = (3, 5),
                             cases_per_degree: int = 100,
                             max_n: int = 20) -> dict:
    """The nine flip inequalities on the shared corpus, plus tight cases."""
    started = time.monotonic()
    violations: list[str] = []
    cases = 0
    for rec in _ratio_records(degrees, cases_per_degree, max_n, seed):
        cases += 1
        for v in rec["verdicts"].values():
            if not v.holds:
                violations.append(
                    f"d={rec['d']} n={rec['n']}: {v.name} fails "
                    f"({v.lhs} < {v.rhs})"
                )

    # Tightness: complete graph on 4 vertices under the ID orientation
    # pins eq1 at 4 = 4; the (3,12) four-set instance pins eq2 at 6 = 6.
    k4 = make_id_orientation(complete_graph(4), identity_labelling(4))
    _, w4 = max_dicut_exact(k4)
    v4 = bounds.check_inequalities(bounds.decompose(k4, w4))["eq1"]
    cases += 1
    if not (v4.lhs == v4.rhs == 4):
        violations.append(f"eq1 on K4 not tight at 4: {v4.lhs} vs {v4.rhs}")
    abcd = make_abcd_instance(3, 12)
    _, wa = max_dicut_exact(abcd)
    va = bounds.check_inequalities(bounds.decompose(abcd, wa))["eq2"]
    cases += 1
    if not (va.lhs == va.rhs == 6):
        violations.append(f"eq2 on ABCD(3,12) not tight at 6: {va.lhs} vs {va.rhs}")
    return _report("flip-inequalities", cases, violations, started)


def verify_two_flip_floor(seed: int = 0,
                          degrees: tuple[int, ...] = (3, 5),
                          cases_per_degree: int = 100,
                          max_n: int = 20) -> dict:
    """CUT_2 >= two_flip_floor(d) * OPT on the shared corpus, exactly."""
    started = time.monotonic()
    violations: list[str] = []
    cases = 0
    if bounds.two_flip_floor(3) != Fraction(71, 115):
        violations.append("two_flip_floor(3) != 71/115")
    for rec in _ratio_records(degrees, cases_per_degree, max_n, seed):
        floor = bounds.two_flip_floor(rec["d"])
        cases += 1
        if Fraction(rec["cuts"][2]) < floor * rec["opt"]:
            violations.append(
                f"d={rec['d']} n={rec['n']}: CUT_2 {rec['cuts'][2]} < "
                f"{floor} * OPT({rec['opt']})"
            )
    return _report("two-flip-floor", cases, violations, started)


def verify_flip_monotonicity(seed: int = 0, cases: int = 1000,
                             degrees: tuple[int, ...] = (3, 5, 7),
                             max_n: int = 30, flips: int = 4) -> dict:
    """Stable sets and dicut arc sets only grow under simultaneous flips."""
    started = time.monotonic()
    rng = random.Random(seed)
    violations: list[str] = []
    for i in range(cases):
        d = degrees[i % len(degrees)]
        n = _even_n(rng, d, max_n)
        g = make_random_regular(n, d, seed=rng.randrange(2 ** 32))
        o = make_random_orientation(g, seed=rng.randrange(2 ** 32))
        c = oriented_median_cut(o)
        stable = stable_vertices(g, c)
        arcs = dicut_arcs(o, c)
        for _ in range(flips):
            c_next = unstable_flip_step(o, c)
            stable_next = stable_vertices(g, c_next)
            arcs_next = dicut_arcs(o, c_next)
            if not stable <= stable_next:
                violations.append(f"case {i}: stable set shrank")
            if not arcs <= arcs_next:
                violations.append(f"case {i}: dicut arcs left the cut")
            if len(arcs_next) < len(arcs):
                violations.append(f"case {i}: dicut size decreased")
            c, stable, arcs = c_next, stable_next, arcs_next
    return _report("flip-monotonicity", cases, violations, started)


def verify_constructions(max_n: int = 40) -> dict:
    """Regularity and bipartiteness across the circulant families, plus
    the frozen oracle values for C_12^4 and the clockwise D_12^3."""
    started = time.monotonic()
    violations: list[str] = []
    cases = 0
    for d in (2, 4, 6):
        for n in range(2 * d, max_n + 1, 2):
            g = make_circulant(n, d)
            cases += 1
            if not validate_regular(g, d):
                violations.append(f"C_{n}^{d} not {d}-regular")
            if not is_bipartite(g)[0]:
                violations.append(f"C_{n}^{d} not bipartite")
    for d in (3, 5, 7):
        for n in range(2 * (d - 1), max_n + 1, 2):
            g = make_double_circulant(n, d)
            cases += 1
            if not validate_regular(g, d):
                violations.append(f"D_{2 * n}^{d} not {d}-regular")
            if not is_bipartite(g)[0]:
                violations.append(f"D_{2 * n}^{d} not bipartite")

    size, _ = max_cut_exact(make_circulant(12, 4))
    cases += 1
    if size != 24:
        violations.append(f"maxcut(C_12^4) = {size}, expected 24 (= m)")
    size, _ = max_dicut_exact(orient_clockwise(make_double_circulant(6, 3)))
    cases += 1
    if size != 9:
        violations.append(f"maxdicut(clockwise D_12^3) = {size}, expected 9 (= m/2)")
    return _report("constructions", cases, violations, started)


def verify_claim1(max_k: int = 5, max_n: int = 4) -> dict:
    """log*(twr_k(n)) = k - 1 + log*(n) wherever the tower is representable."""
    started = time.monotonic()
    violations: list[str] = []
    cases = 0
    skipped = 0
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            try:
                t = bounds.tower(k, n)
            except OverflowError:
                skipped += 1
                continue
            cases += 1
            got = bounds.log_star(t)
            want = k - 1 + bounds.log_star(n)
            if got != want:
                violations.append(f"k={k} n={n}: log*={got}, expected {want}")
    return _report("claim1", cases, violations, started, skipped=skipped)


def verify_claim2(degrees: tuple[int, ...] = (4, 6), max_n: int = 60,
                  max_r: int = 25) -> dict:
    """Inner-window edge counts beat l*d/2 - d(r-1)/2 - d^2/2 on all grids."""
    started = time.monotonic()
    violations: list[str] = []
    cases = 0
    for d in degrees:
        for n in range(2 * d, max_n + 1, 4):
            g = make_circulant(n, d)
            for length in range(1, n + 1):
                for r in range(1, min(length, max_r) + 1, 2):
                    count, bound, ok = bounds.check_window_bound(g, 0, length, r)
                    cases += 1
                    if not ok:
                        violations.append(
                            f"C_{n}^{d} l={length} r={r}: {count} < {bound}"
                        )
    count = bounds.window_edge_count(make_circulant(12, 4), 0, 6)
    cases += 1
    if count != 8:
        violations.append(f"window count C_12^4 l=6: {count}, expected 8")
    return _report("claim2", cases, violations, started)


def verify_folklore(seed: int = 0, trials: int = 10 ** 4,
                    n: int = 1000, d: int = 5) -> dict:
    """Random cuts average m/2; almost none fall below 0.45m."""
    started = time.monotonic()
    g = make_random_regular(n, d, seed=seed)
    sizes = [cut_size(g, random_cut(g, seed=seed + 1 + i)) for i in range(trials)]
    mean = sum(sizes) / trials
    half = g.m / 2
    below = sum(1 for s in sizes if s < 0.45 * g.m)
    violations = []
    if abs(mean - half) > 0.01 * half:
        violations.append(f"mean {mean} strays more than 1% from {half}")
    if below > 0.01 * trials:
        violations.append(f"{below} of {trials} cuts below 0.45m")
    return _report(
        "folklore", trials, violations, started,
        mean=round(mean, 3), expected=half, below_045m=below,
    )


SUITES = {
    "median-floor": verify_median_floor,
    "oriented-ratio": verify_oriented_ratio,
    "flip-inequalities": verify_flip_inequalities,
    "two-flip-floor": verify_two_flip_floor,
    "flip-monotonicity": verify_flip_monotonicity,
    "constructions": verify_constructions,
    "claim1": verify_claim1,
    "claim2": verify_claim2,
    "folklore": verify_folklore,
}
