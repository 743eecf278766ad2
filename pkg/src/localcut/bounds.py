"""Quantitative guarantees, checked in exact arithmetic.

Every floor and ratio is a Fraction; every inequality check compares
integers. Floats never decide a verdict (log_star is the one place floats
appear, and only below 2^53 where they are exact enough for iterated logs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InvalidParameterError
from .graphs import (
    Cut,
    LEFT,
    Orientation,
    RegularGraph,
    dicut_size,
)

Rational = Union[int, Fraction]

_MAX_TOWER_EXPONENT = 1 << 20


def median_floor(n: int, d: int) -> Fraction:
    """Guaranteed median-rule cut size: n/2 + (d-1)(d+1)/4."""
    if d % 2 == 0 or d < 1:
        raise InvalidParameterError(f"median floor needs odd d, got {d}")
    return Fraction(n, 2) + Fraction((d - 1) * (d + 1), 4)


def oriented_ratio(d: int) -> Fraction:
    """Deficit-rule approximation ratio 2/(d + 1/d) = 2d/(d^2 + 1)."""
    if d % 2 == 0 or d < 1:
        raise InvalidParameterError(f"oriented ratio needs odd d, got {d}")
    return Fraction(2 * d, d * d + 1)


def f_d(d: int, alpha: Rational, beta: Rational) -> Fraction:
    """The refined ratio (d - 2a + b) / (d^2/2 - a(d+1) + b + 1/2).

    pre: 0 <= alpha, beta <= 1. f_d(0, 0) recovers the bare ratio.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not (0 <= alpha <= 1 and 0 <= beta <= 1):
        raise InvalidParameterError("alpha and beta must lie in [0, 1]")
    num = d - 2 * alpha + beta
    den = Fraction(d * d, 2) - alpha * (d + 1) + beta + Fraction(1, 2)
    return num / den


def two_flip_floor(d: int) -> Fraction:
    """Ratio guaranteed after two flip rounds.

    With x = (d^2+d)/(d^2+4d+1) and y = (1-x)/2 = (3d+1)/(2d^2+8d+2), the
    worst point on the line alpha + beta >= y is (0, y) for d = 3 and
    (y, 0) for d >= 5. d = 3 gives 71/115.
    """
    if d % 2 == 0 or d < 3:
        raise InvalidParameterError(f"two-flip floor needs odd d >= 3, got {d}")
    y = Fraction(3 * d + 1, 2 * d * d + 8 * d + 2)
    return f_d(d, 0, y) if d == 3 else f_d(d, y, 0)


@dataclass(frozen=True)
class FlipDecomposition:
    """All the sets the flip-refined inequalities talk about.

    Relative to the deficit cut (V+ left, V- right) and one fixed optimal
    directed cut (V1, V2):
      M: misplaced vertices, (V1 n V-) u (V2 n V+)
      M_star: members of M with |deficit| >= 3
      M_one: members of M \\ M_star touching no E0 edge and no E1 arc
      E0: edges V- to M n V+, M n V- to V+, or inside M n V+ / M n V-
      E1: arcs stable-to-unstable on the plus side, unstable-to-stable on
          the minus side (exactly the arcs a simultaneous flip adds)
      F0: edges inside V+ \\ M or inside V- \\ M
      U0/U1: unstable vertices before / after one flip
      cut_sizes: (CUT_0, CUT_1, CUT_2)
    """

    d: int
    n: int
    big_d: int
    opt: int
    cut_sizes: tuple[int, int, int]
    M: frozenset[int]
    M_star: frozenset[int]
    M_one: frozenset[int]
    E0: frozenset[tuple[int, int]]
    E1: frozenset[tuple[int, int]]
    F0: frozenset[tuple[int, int]]
    U0: frozenset[int]
    U1: frozenset[int]


def decompose(o: Orientation, opt_cut: Cut) -> FlipDecomposition:
    """Build the decomposition for an orientation and an optimal-cut witness.

    `opt_cut` is trusted to be optimal; pass a brute-force witness. All
    sets follow the undirected stability convention.
    """
    from .algorithms import (
        oriented_median_cut,
        stable_vertices,
        unstable_flip_step,
    )

    g = o.graph
    n, d = g.n, g.d
    c0 = oriented_median_cut(o)
    plus = frozenset(c0.left_vertices())

    v1 = frozenset(opt_cut.left_vertices())
    M = frozenset(
        v for v in range(n)
        if (v in v1) != (v in plus)
    )
    M_star = frozenset(v for v in M if abs(o.deficit(v)) >= 3)

    U0 = frozenset(range(n)) - stable_vertices(g, c0)
    c1 = unstable_flip_step(o, c0)
    c2 = unstable_flip_step(o, c1)
    U1 = frozenset(range(n)) - stable_vertices(g, c1)

    m_plus = M & plus
    m_minus = M - plus

    def in_e0(u: int, v: int) -> bool:
        for x, y in ((u, v), (v, u)):
            if x not in plus and y in m_plus:
                return True
            if x in m_minus and y in plus:
                return True
        return (u in m_plus and v in m_plus) or (u in m_minus and v in m_minus)

    E0 = frozenset(e for e in g.edges() if in_e0(*e))
    E1 = frozenset(
        (t, h) for t, h in o.arcs
        if (t in plus and h in plus and t not in U0 and h in U0)
        or (t not in plus and h not in plus and t in U0 and h not in U0)
    )
    F0 = frozenset(
        (u, v) for u, v in g.edges()
        if u not in M and v not in M and (u in plus) == (v in plus)
    )
    touched = {v for e in E0 for v in e} | {v for a in E1 for v in a}
    M_one = frozenset(v for v in M - M_star if v not in touched)

    big_d = sum(
        o.out_degree(v) if v in plus else o.in_degree(v) for v in range(n)
    )
    return FlipDecomposition(
        d=d,
        n=n,
        big_d=big_d,
        opt=dicut_size(o, opt_cut),
        cut_sizes=(dicut_size(o, c0), dicut_size(o, c1), dicut_size(o, c2)),
        M=M,
        M_star=M_star,
        M_one=M_one,
        E0=E0,
        E1=E1,
        F0=F0,
        U0=U0,
        U1=U1,
    )


@dataclass(frozen=True)
class InequalityVerdict:
    name: str
    lhs: int
    rhs: int
    holds: bool


def check_inequalities(dec: FlipDecomposition,
                       d: Optional[int] = None,
                       n: Optional[int] = None) -> dict[str, InequalityVerdict]:
    """Evaluate the nine flip inequalities on a decomposition.

    All quantities are integers; (d-1)/2 is exact since d is odd. Returns
    one verdict per inequality, keyed by the usual tags.
    """
    d = dec.d if d is None else d
    n = dec.n if n is None else n
    if d % 2 == 0:
        raise InvalidParameterError("the inequalities assume odd d")
    cut0, cut1, cut2 = dec.cut_sizes
    opt, big_d = dec.opt, dec.big_d
    half = (d - 1) // 2
    base = opt - half * len(dec.M)
    e0, e1, u1 = len(dec.E0), len(dec.E1), len(dec.U1)
    mstar, f0, msize = len(dec.M_star), len(dec.F0), len(dec.M)

    checks = [
        # eq1 is usually stated as a chain; split it so each step gets a verdict
        ("eq1", cut0, big_d - d * n // 2),
        ("eq1_half", big_d - d * n // 2, -(-n // 2)),
        ("eq2", cut0, base),
        ("eq2bis", cut0, base + e0),
        ("eq2ter", cut1, base + e0 + e1),
        ("eq2quater", cut2, base + e0 + e1 + u1),
        ("eq3", big_d - msize, 2 * opt),
        ("eq3bis", big_d - msize - f0, 2 * opt),
        ("eq3ter", big_d - msize - f0 - mstar, 2 * opt),
        ("eq2c", cut2, base + e0 + e1 + u1 + mstar),
    ]
    return {
        name: InequalityVerdict(name, lhs, rhs, lhs >= rhs)
        for name, lhs, rhs in checks
    }


def all_inequalities_hold(verdicts: dict[str, InequalityVerdict]) -> bool:
    return all(v.holds for v in verdicts.values())


def tower(k: int, x: int) -> int:
    """Iterated exponential: twr_1(x) = x, twr_k(x) = 2^twr_{k-1}(x).

    Guarded: raises OverflowError once an exponent passes 2^20, which
    admits every representable case of the k <= 5, x <= 16 test grid.
    """
    if k < 1:
        raise InvalidParameterError(f"tower needs k >= 1, got {k}")
    if x < 0:
        raise InvalidParameterError(f"tower needs x >= 0, got {x}")
    value = x
    for _ in range(k - 1):
        if value > _MAX_TOWER_EXPONENT:
            # value itself may have thousands of digits; report its size only
            raise OverflowError(
                f"tower exponent of {value.bit_length()} bits exceeds "
                f"guard 2^{_MAX_TOWER_EXPONENT.bit_length() - 1}"
            )
        value = 1 << value
    return value


def _log2_exactish(x) -> float:
    """log2 that survives huge ints; exact when x is a power of two."""
    if isinstance(x, int) and x > 0:
        bits = x.bit_length()
        if x == 1 << (bits - 1):
            return float(bits - 1)
        if bits > 53:
            # scale into float range; good to ~1e-15, plenty for log*
            return (bits - 53) + math.log2(x >> (bits - 53))
    return math.log2(x)


def log_star(x) -> int:
    """Iterations of base-2 log until the value drops to 1 or below."""
    count = 0
    while x > 1:
        x = _log2_exactish(x)
        count += 1
    return count


def window_edge_count(g: RegularGraph, start: int, length: int) -> int:
    """Exact number of edges inside `length` consecutive circulant positions."""
    if g.family != "circulant":
        raise InvalidParameterError("window counts are defined on circulants")
    n, _ = g.family_params
    if not 0 <= length <= n:
        raise InvalidParameterError(f"window length must be in [0, {n}]")
    window = {(start + i) % n for i in range(length)}
    return sum(1 for u, v in g.edges() if u in window and v in window)


def window_bound(d: int, length: int, r: int) -> Fraction:
    """The inner-window edge floor: l*d/2 - d(r-1)/2 - d^2/2."""
    if r < 1 or r % 2 == 0:
        raise InvalidParameterError(f"r must be odd >= 1, got {r}")
    return (
        Fraction(length * d, 2)
        - Fraction(d * (r - 1), 2)
        - Fraction(d * d, 2)
    )


def check_window_bound(g: RegularGraph, start: int, length: int, r: int
                       ) -> tuple[int, Fraction, bool]:
    """Count edges in the margin-trimmed window and compare to the floor.

    The window of `length` positions loses (r-1)/2 positions on each side
    before counting, matching how the radius-r information margin is spent.
    Returns (count, bound, count >= bound).
    """
    bound = window_bound(g.d, length, r)
    margin = (r - 1) // 2
    inner = max(0, length - 2 * margin)
    count = window_edge_count(g, start + margin, inner)
    return count, bound, count >= bound
