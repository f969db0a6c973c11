"""Per-root BFS with exact shortest-path counting, girth, and diameter.

Distances of unreachable vertices are None (never a large finite number);
girth and diameter use math.inf for "no cycle" / "disconnected".  Path
counts are plain Python integers, so they stay exact no matter how fast
they grow.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import Disconnected, OutOfRange
from .graphs import Graph


@dataclass(frozen=True)
class DistanceRecord:
    """BFS result from one root.

    preds[v] lists the neighbors of v one step closer to the root, in
    discovery order; preds[v][0] is the BFS-tree parent.  sigma[v] is the
    exact number of distinct shortest root-v paths (0 when unreachable).
    """

    root: int
    dist: tuple[int | None, ...]
    sigma: tuple[int, ...]
    preds: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MetricProfile:
    """Distance records for every root plus girth, diameter, connectivity."""

    records: tuple[DistanceRecord, ...]
    girth: int | float
    diameter: int | float
    connected: bool

    def dist(self, u: int, v: int) -> int | None:
        return self.records[u].dist[v]

    def sigma(self, u: int, v: int) -> int:
        return self.records[u].sigma[v]


def bfs_record(g: Graph, root: int) -> DistanceRecord:
    """Distances, shortest-path counts, and predecessor sets from one root."""
    if not 0 <= root < g.n:
        raise OutOfRange(f"root {root} outside 0..{g.n - 1}")
    dist: list[int | None] = [None] * g.n
    sigma = [0] * g.n
    preds: list[list[int]] = [[] for _ in range(g.n)]
    dist[root] = 0
    sigma[root] = 1
    queue = deque([root])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        su = sigma[u]
        for w in adjacency[u]:
            dw = dist[w]
            if dw is None:
                dist[w] = du1
                sigma[w] = su
                preds[w].append(u)
                queue.append(w)
            elif dw == du1:
                sigma[w] += su
                preds[w].append(u)
    return DistanceRecord(root, tuple(dist), tuple(sigma), tuple(map(tuple, preds)))


def _girth_from_records(g: Graph, records: tuple[DistanceRecord, ...]) -> int | float:
    """Shortest cycle length via the per-root non-tree-edge scan, O(n*m).

    For each root, every edge that is not a BFS-tree edge closes a walk of
    length dist(x)+dist(y)+1 containing a cycle no longer than that, and a
    root lying on a shortest cycle yields the exact girth (shortest cycles
    are isometric).
    """
    best: int | float = math.inf
    edges = g.edge_list
    for rec in records:
        dist = rec.dist
        preds = rec.preds
        for x, y in edges:
            dx = dist[x]
            dy = dist[y]
            if dx is None or dy is None:
                continue
            if preds[x] and preds[x][0] == y:
                continue
            if preds[y] and preds[y][0] == x:
                continue
            cand = dx + dy + 1
            if cand < best:
                best = cand
                if best == 3:
                    return 3
    return best


def metric_profile(g: Graph, threads: int | None = None) -> MetricProfile:
    """All-roots BFS profile; `threads` > 1 maps roots over a thread pool
    (record order, and hence every downstream result, is unaffected)."""
    if threads is not None and threads > 1 and g.n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = tuple(pool.map(lambda r: bfs_record(g, r), range(g.n)))
    else:
        records = tuple(bfs_record(g, r) for r in range(g.n))
    connected = True
    diameter: int | float = 0
    for rec in records:
        for d in rec.dist:
            if d is None:
                connected = False
            elif d > diameter:
                diameter = d
    if not connected:
        diameter = math.inf
    return MetricProfile(records, _girth_from_records(g, records), diameter, connected)


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle; math.inf for forests."""
    return metric_profile(g).girth


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; math.inf when disconnected."""
    return metric_profile(g).diameter


def _check_reachable(profile: MetricProfile, u: int, v: int) -> None:
    n = len(profile.records)
    if not (0 <= u < n and 0 <= v < n):
        raise OutOfRange(f"vertex pair ({u}, {v}) outside 0..{n - 1}")
    if profile.records[u].dist[v] is None:
        raise Disconnected(f"vertices {u} and {v} lie in different components")


def unique_shortest_path(
    g: Graph, profile: MetricProfile, u: int, v: int
) -> list[int] | None:
    """The single shortest u,v-path, or None when it is not unique."""
    rec = profile.records[u]
    _check_reachable(profile, u, v)
    if rec.sigma[v] != 1:
        return None
    path = [v]
    cur = v
    while cur != u:
        cur = rec.preds[cur][0]  # sigma == 1 forces a single predecessor chain
        path.append(cur)
    path.reverse()
    return path


def two_shortest_paths(
    g: Graph, profile: MetricProfile, u: int, v: int
) -> tuple[list[int], list[int]] | None:
    """Both shortest u,v-paths when exactly two exist, else None."""
    rec = profile.records[u]
    _check_reachable(profile, u, v)
    if rec.sigma[v] != 2:
        return None
    paths: list[list[int]] = []
    stack = [v]

    def walk(cur: int) -> None:
        if cur == u:
            paths.append(stack[::-1])
            return
        for p in rec.preds[cur]:
            stack.append(p)
            walk(p)
            stack.pop()

    walk(v)
    first, second = sorted(paths)
    return first, second
