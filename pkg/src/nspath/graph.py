"""Simple undirected graphs, BFS distances and the uv-layering.

Vertices are dense integers ``0..n-1``. A path is a tuple of vertex ids.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

Path = tuple[int, ...]

TOWARD_U = "toward-u"
TOWARD_V = "toward-v"


class GraphError(ValueError):
    """Raised on malformed graph input or an unmet precondition."""


class NoPathError(GraphError):
    """Raised when an operation needs v to be reachable from u."""


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    adjacency: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise GraphError("adjacency length does not match vertex_count")
        for x, nbrs in enumerate(self.adjacency):
            for y in nbrs:
                if not 0 <= y < self.vertex_count:
                    raise GraphError(f"vertex {y} out of range in adj({x})")
                if y == x:
                    raise GraphError(f"self-loop at {x}")
                if x not in self.adjacency[y]:
                    raise GraphError(f"asymmetric adjacency {x}-{y}")

    @property
    def n(self) -> int:
        return self.vertex_count

    def __len__(self) -> int:
        return self.vertex_count

    def adj(self, x: int) -> frozenset[int]:
        return self.adjacency[x]

    def has_edge(self, x: int, y: int) -> bool:
        return y in self.adjacency[x]

    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.vertex_count)
                for y in sorted(self.adjacency[x]) if x < y]

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as bitmasks."""
        return tuple(sum(1 << y for y in nbrs) for nbrs in self.adjacency)

    def induced_subgraph(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Relabel ``G[keep]`` densely; returns the subgraph and new-to-old ids."""
        labels = sorted(set(keep))
        index = {x: i for i, x in enumerate(labels)}
        adjacency = tuple(
            frozenset(index[y] for y in self.adjacency[x] if y in index)
            for x in labels)
        return Graph(len(labels), adjacency), labels


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        a, b = pair
        if not (0 <= a < n and 0 <= b < n):
            raise GraphError(f"edge ({a}, {b}) has a vertex out of range 0..{n - 1}")
        if a == b:
            raise GraphError(f"edge ({a}, {b}) is a self-loop")
        adj[a].add(b)
        adj[b].add(a)
    return Graph(n, tuple(frozenset(s) for s in adj))


def distances_from(G: Graph, s: int) -> list[Optional[int]]:
    """BFS distances from ``s``; ``None`` marks unreachable vertices."""
    if not 0 <= s < G.n:
        raise GraphError(f"vertex {s} out of range")
    dist: list[Optional[int]] = [None] * G.n
    dist[s] = 0
    queue = deque([s])
    adjacency = G.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adjacency[x]:
            if dist[y] is None:
                dist[y] = dx
                queue.append(y)
    return dist


def shortest_path(G: Graph, s: int, t: int, allowed: Optional[int] = None) -> Optional[Path]:
    """Shortest s-t path, optionally inside the vertex bitmask ``allowed``.

    Ties go to the smallest-id predecessor, so the result is deterministic.
    A shortest path is always induced.
    """
    if allowed is not None and not (allowed >> s & 1 and allowed >> t & 1):
        return None
    parent = {s: s}
    frontier = [s]
    adjacency = G.adjacency
    while frontier and t not in parent:
        nxt = []
        for x in frontier:
            for y in sorted(adjacency[x]):
                if y not in parent and (allowed is None or allowed >> y & 1):
                    parent[y] = x
                    nxt.append(y)
        frontier = sorted(nxt)
    if t not in parent:
        return None
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def _require_reachable(G: Graph, u: int, v: int):
    du = distances_from(G, u)
    if du[v] is None:
        raise NoPathError(f"no uv-path between {u} and {v}")
    return du, distances_from(G, v)


def straight_set(G: Graph, u: int, v: int) -> frozenset[int]:
    """Vertices x with d(u,x) + d(x,v) = d(u,v)."""
    du, dv = _require_reachable(G, u, v)
    d = du[v]
    return frozenset(x for x in range(G.n)
                     if du[x] is not None and dv[x] is not None and du[x] + dv[x] == d)


@dataclass(frozen=True)
class Layering:
    u: int
    v: int
    dist: int
    layers: tuple[frozenset[int], ...]
    height: dict[int, int]

    @property
    def straight(self) -> frozenset[int]:
        return frozenset(self.height)


def layering(G: Graph, u: int, v: int) -> Layering:
    if u == v:
        raise GraphError("layering needs u != v")
    du, dv = _require_reachable(G, u, v)
    d = du[v]
    buckets: list[set[int]] = [set() for _ in range(d + 1)]
    height = {}
    for x in range(G.n):
        if du[x] is not None and dv[x] is not None and du[x] + dv[x] == d:
            buckets[du[x]].add(x)
            height[x] = du[x]
    return Layering(u, v, d, tuple(frozenset(b) for b in buckets), height)


def is_induced_path(G: Graph, seq: Sequence[int]) -> bool:
    if len(set(seq)) != len(seq):
        return False
    for i, x in enumerate(seq):
        if not 0 <= x < G.n:
            return False
        nbrs = G.adjacency[x]
        if i + 1 < len(seq) and seq[i + 1] not in nbrs:
            return False
        for y in seq[i + 2:]:
            if y in nbrs:
                return False
    return True


def monotone_path(G: Graph, L: Layering, x: int, direction: str) -> Path:
    """Monotone path from ``x`` to u (or v), one vertex per layer.

    Each step moves to the smallest-id neighbour in the adjacent layer.
    """
    if x not in L.height:
        raise GraphError(f"vertex {x} is not uv-straight")
    if direction == TOWARD_U:
        step, stop = -1, 0
    elif direction == TOWARD_V:
        step, stop = 1, L.dist
    else:
        raise GraphError(f"unknown direction {direction!r}")
    path = [x]
    h = L.height[x]
    while h != stop:
        h += step
        path.append(min(G.adjacency[path[-1]] & L.layers[h]))
    return tuple(path)


def is_monotone(L: Layering, p: Sequence[int]) -> bool:
    heights = [L.height.get(x) for x in p]
    if any(h is None for h in heights):
        return False
    return len(set(heights)) == len(heights)
