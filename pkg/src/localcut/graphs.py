"""Core types: regular graphs, orientations, labellings, cuts.

Everything is immutable after construction. Vertices are 0..n-1 throughout;
IDs (distinct positive integers used by the local algorithms) live in a
separate Labelling so the same graph can carry many labellings.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import InvalidParameterError

LEFT = 0
RIGHT = 1


def validate_regular(adjacency, d: int) -> bool:
    """True iff the adjacency structure is a simple d-regular graph.

    Accepts a RegularGraph or raw per-vertex neighbor sequences, so it can
    vet candidate structures before a RegularGraph exists.
    """
    if isinstance(adjacency, RegularGraph):
        adjacency = adjacency.adj
    adj = [tuple(nbrs) for nbrs in adjacency]
    n = len(adj)
    neighbor_sets = []
    for u, nbrs in enumerate(adj):
        seen = set(nbrs)
        if len(nbrs) != d or len(seen) != d:
            return False
        if u in seen:
            return False
        if any(not (0 <= v < n) for v in nbrs):
            return False
        neighbor_sets.append(seen)
    return all(
        u in neighbor_sets[v] for u in range(n) for v in neighbor_sets[u]
    )


class RegularGraph:
    """Simple undirected d-regular graph on vertices 0..n-1.

    `family`/`family_params` record which generator produced the graph
    (orient_clockwise needs to know the circulant structure); they do not
    take part in equality.
    """

    def __init__(self, adjacency: Iterable[Iterable[int]], d: Optional[int] = None,
                 family: Optional[str] = None, family_params: Optional[tuple] = None):
        adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        if d is None:
            d = len(adj[0]) if adj else 0
        if not validate_regular(adj, d):
            raise InvalidParameterError(
                f"adjacency is not a simple {d}-regular graph"
            )
        self.n = len(adj)
        self.d = d
        self.adj = adj
        self.m = self.n * d // 2
        self.family = family
        self.family_params = family_params
        self._edges = tuple(
            (u, v) for u in range(self.n) for v in adj[u] if u < v
        )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], d: Optional[int] = None,
                   family: Optional[str] = None, family_params: Optional[tuple] = None
                   ) -> "RegularGraph":
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range")
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj, d=d, family=family, family_params=family_params)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) pairs with u < v."""
        return self._edges

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegularGraph):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self) -> str:
        tag = f", family={self.family!r}" if self.family else ""
        return f"RegularGraph(n={self.n}, d={self.d}{tag})"


class Orientation:
    """An orientation of a RegularGraph: every edge gets exactly one arc."""

    def __init__(self, graph: RegularGraph, arcs: Iterable[tuple[int, int]]):
        arcs = tuple((int(t), int(h)) for t, h in arcs)
        arc_set = frozenset(arcs)
        if len(arc_set) != len(arcs):
            raise InvalidParameterError("duplicate arcs")
        edge_keys = {(min(t, h), max(t, h)) for t, h in arcs}
        if len(edge_keys) != len(arcs) or edge_keys != set(graph.edges()):
            raise InvalidParameterError(
                "arcs must orient every edge of the graph exactly once"
            )
        self.graph = graph
        self.arcs = arcs
        self.arc_set = arc_set
        out_nbrs: list[list[int]] = [[] for _ in range(graph.n)]
        in_nbrs: list[list[int]] = [[] for _ in range(graph.n)]
        for t, h in arcs:
            out_nbrs[t].append(h)
            in_nbrs[h].append(t)
        self.out_nbrs = tuple(tuple(sorted(x)) for x in out_nbrs)
        self.in_nbrs = tuple(tuple(sorted(x)) for x in in_nbrs)

    def out_degree(self, v: int) -> int:
        return len(self.out_nbrs[v])

    def in_degree(self, v: int) -> int:
        return len(self.in_nbrs[v])

    def deficit(self, v: int) -> int:
        """Out-degree minus in-degree (odd whenever d is odd)."""
        return len(self.out_nbrs[v]) - len(self.in_nbrs[v])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Orientation):
            return NotImplemented
        return self.graph == other.graph and self.arc_set == other.arc_set

    def __hash__(self):
        return hash((self.graph, self.arc_set))

    def __repr__(self) -> str:
        return f"Orientation(n={self.graph.n}, d={self.graph.d})"


def deficit_partition(o: Orientation) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Split vertices into (V+, V-, V0) by deficit sign."""
    vplus, vminus, vzero = [], [], []
    for v in range(o.graph.n):
        delta = o.deficit(v)
        if delta > 0:
            vplus.append(v)
        elif delta < 0:
            vminus.append(v)
        else:
            vzero.append(v)
    return tuple(vplus), tuple(vminus), tuple(vzero)


class Labelling:
    """Injective assignment of positive integer IDs to vertices.

    Default ID space is [1, n^3], the usual polynomial ID assumption.
    `origin` records how the labelling was produced (pattern name, search
    seed); purely informational.
    """

    def __init__(self, ids: Sequence[int], id_bound: Optional[int] = None,
                 origin: Optional[str] = None):
        ids = tuple(int(x) for x in ids)
        n = len(ids)
        if id_bound is None:
            id_bound = n ** 3
        if len(set(ids)) != n:
            raise InvalidParameterError("IDs must be distinct")
        if ids and (min(ids) < 1 or max(ids) > id_bound):
            raise InvalidParameterError(
                f"IDs must lie in [1, {id_bound}]"
            )
        self.ids = ids
        self.n = n
        self.id_bound = id_bound
        self.max_id = max(ids) if ids else 0
        self.origin = origin

    def id_of(self, v: int) -> int:
        return self.ids[v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Labelling):
            return NotImplemented
        return self.ids == other.ids

    def __hash__(self):
        return hash(self.ids)

    def __repr__(self) -> str:
        return f"Labelling(n={self.n}, max_id={self.max_id})"


def identity_labelling(n: int) -> Labelling:
    """IDs 1..n in vertex order."""
    return Labelling(range(1, n + 1), origin="identity")


def random_labelling(n: int, seed: int, id_bound: Optional[int] = None) -> Labelling:
    """n distinct IDs sampled uniformly from [1, id_bound] (default n^3)."""
    if id_bound is None:
        id_bound = n ** 3
    rng = random.Random(seed)
    ids = rng.sample(range(1, id_bound + 1), n)
    return Labelling(ids, id_bound=id_bound, origin=f"random(seed={seed})")


class Cut:
    """Two-sided vertex partition; side LEFT (0) or RIGHT (1).

    Entries may be None while a cut is being assembled, but every operation
    that consumes a cut requires it to be total.
    """

    def __init__(self, sides: Sequence[Optional[int]]):
        checked = []
        for s in sides:
            if s is not None and s not in (LEFT, RIGHT):
                raise InvalidParameterError(f"side must be LEFT/RIGHT, got {s!r}")
            checked.append(s)
        self.sides = tuple(checked)
        self.n = len(self.sides)

    @classmethod
    def from_left_set(cls, n: int, left: Iterable[int]) -> "Cut":
        left = set(left)
        return cls([LEFT if v in left else RIGHT for v in range(n)])

    def is_total(self) -> bool:
        return all(s is not None for s in self.sides)

    def side(self, v: int) -> Optional[int]:
        return self.sides[v]

    def left_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.sides) if s == LEFT)

    def right_vertices(self) -> tuple[int, ...]:
        return tuple(v for v, s in enumerate(self.sides) if s == RIGHT)

    def mirrored(self) -> "Cut":
        """Swap the two sides."""
        return Cut([None if s is None else 1 - s for s in self.sides])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cut):
            return NotImplemented
        return self.sides == other.sides

    def __hash__(self):
        return hash(self.sides)

    def __repr__(self) -> str:
        return f"Cut(left={len(self.left_vertices())}, right={len(self.right_vertices())})"


def _require_total(g: RegularGraph, c: Cut) -> None:
    if c.n != g.n:
        raise InvalidParameterError(
            f"cut covers {c.n} vertices, graph has {g.n}"
        )
    if not c.is_total():
        raise InvalidParameterError("cut leaves some vertices unassigned")


def cut_size(g: RegularGraph, c: Cut) -> int:
    """Number of edges with endpoints on different sides."""
    _require_total(g, c)
    sides = c.sides
    return sum(1 for u, v in g.edges() if sides[u] != sides[v])


def dicut_size(o: Orientation, c: Cut) -> int:
    """Number of arcs from the left side to the right side."""
    _require_total(o.graph, c)
    sides = c.sides
    return sum(1 for t, h in o.arcs if sides[t] == LEFT and sides[h] == RIGHT)


def dicut_arcs(o: Orientation, c: Cut) -> frozenset[tuple[int, int]]:
    """The arcs counted by dicut_size, as a set."""
    _require_total(o.graph, c)
    sides = c.sides
    return frozenset(
        (t, h) for t, h in o.arcs if sides[t] == LEFT and sides[h] == RIGHT
    )


def is_bipartite(g: RegularGraph) -> tuple[bool, Optional[Cut]]:
    """BFS 2-coloring. Returns (True, witness cut of size m) or (False, None)."""
    color: list[Optional[int]] = [None] * g.n
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = LEFT
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False, None
    return True, Cut(color)


def monochromatic_components(g: RegularGraph, c: Cut) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by each cut side."""
    _require_total(g, c)
    seen = [False] * g.n
    components: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if not seen[v] and c.sides[v] == c.sides[start]:
                    seen[v] = True
                    comp.add(v)
                    queue.append(v)
        components.append(frozenset(comp))
    return components


def boundary_size(g: RegularGraph, vertices: Iterable[int]) -> int:
    """Number of edges with exactly one endpoint in the vertex set."""
    inside = set(vertices)
    return sum(1 for u, v in g.edges() if (u in inside) != (v in inside))
