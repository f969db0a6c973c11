"""Immutable simple graphs, validated constructors, and named generators."""

from __future__ import annotations

import random
from typing import Iterable, NamedTuple

from .errors import DuplicateEdge, InvalidEdge, InvalidParameter, OutOfRange


class _EdgeBase(NamedTuple):
    u: int
    v: int


class Edge(_EdgeBase):
    """Unordered vertex pair, normalized so that u < v."""

    __slots__ = ()

    def __new__(cls, u: int, v: int) -> "Edge":
        if u == v:
            raise InvalidEdge(f"loop edge ({u}, {u}) is not allowed in a simple graph")
        if u > v:
            u, v = v, u
        return super().__new__(cls, u, v)


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Adjacency lists are sorted tuples; instances are immutable after
    construction and safe to share between threads.
    """

    __slots__ = ("n", "m", "adjacency", "edge_list", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise InvalidParameter(f"vertex count must be non-negative, got {n}")
        seen: set[Edge] = set()
        adjacency: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise OutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            e = Edge(u, v)
            if e in seen:
                raise DuplicateEdge(f"edge ({e.u}, {e.v}) supplied more than once")
            seen.add(e)
            adjacency[e.u].append(e.v)
            adjacency[e.v].append(e.u)
        self.n = n
        self.m = len(seen)
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in adjacency
        )
        self.edge_list: tuple[Edge, ...] = tuple(sorted(seen))
        self._edge_set = frozenset(seen)

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise OutOfRange(f"vertex {v} outside 0..{self.n - 1}")
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return Edge(u, v) in self._edge_set

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def regular_degree(self) -> int | None:
        """Common vertex degree, or None when the graph is not regular."""
        degs = set(self.degrees())
        if len(degs) == 1:
            return degs.pop()
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._edge_set == other._edge_set

    def __hash__(self) -> int:
        return hash((self.n, self._edge_set))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a validated graph from unordered endpoint pairs."""
    return Graph(n, edges)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove v and its incident edges; higher labels shift down by one."""
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    remap = lambda w: w if w < v else w - 1
    edges = [(remap(e.u), remap(e.v)) for e in g.edge_list if v not in (e.u, e.v)]
    return Graph(g.n - 1, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"a cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"a complete graph needs at least 1 vertex, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameter(f"both parts must be non-empty, got ({a}, {b})")
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def hoffman_singleton_graph() -> Graph:
    """Five pentagons and five pentagrams joined by modular cross edges.

    Pentagon h occupies vertices 5h..5h+4, pentagram i occupies
    25+5i..25+5i+4; pentagon vertex j is joined to pentagram-i vertex
    (h*i + j) mod 5.  The result is certified 7-regular with 50 vertices,
    175 edges, girth 5, and diameter 2 by the test suite.
    """
    pent = lambda h, j: 5 * h + j
    star = lambda i, j: 25 + 5 * i + j
    edges = []
    for h in range(5):
        edges += [(pent(h, j), pent(h, (j + 1) % 5)) for j in range(5)]
    for i in range(5):
        edges += [(star(i, j), star(i, (j + 2) % 5)) for j in range(5)]
    for h in range(5):
        for i in range(5):
            for j in range(5):
                edges.append((pent(h, j), star(i, (h * i + j) % 5)))
    return Graph(50, edges)


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p); identical output for identical arguments."""
    if n < 0:
        raise InvalidParameter(f"vertex count must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise InvalidParameter(f"edge probability must lie in [0, 1], got {p}")
    if not 0 <= seed < 2**64:
        raise InvalidParameter(f"seed must be an unsigned 64-bit integer, got {seed}")
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


_FAMILIES = {
    "cycle": (cycle_graph, (int,)),
    "complete": (complete_graph, (int,)),
    "complete_bipartite": (complete_bipartite_graph, (int, int)),
    "petersen": (petersen_graph, ()),
    "hoffman_singleton": (hoffman_singleton_graph, ()),
    "gnp": (gnp_random_graph, (int, float, int)),
}


def generate(family: str, *params) -> Graph:
    """Dispatch to a named generator: cycle(n), complete(n),
    complete_bipartite(a, b), petersen, hoffman_singleton, gnp(n, p, seed)."""
    if family not in _FAMILIES:
        known = ", ".join(sorted(_FAMILIES))
        raise InvalidParameter(f"unknown family {family!r} (known: {known})")
    func, kinds = _FAMILIES[family]
    if len(params) != len(kinds):
        raise InvalidParameter(
            f"family {family!r} takes {len(kinds)} parameter(s), got {len(params)}"
        )
    try:
        args = [kind(p) for kind, p in zip(kinds, params)]
    except (TypeError, ValueError) as exc:
        raise InvalidParameter(f"bad parameter for family {family!r}: {exc}") from exc
    return func(*args)
