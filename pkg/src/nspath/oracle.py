"""Exponential-time reference answers.

Nothing here shares code with the solver or the DP beyond the Graph type;
the forest checks go through networkx so the two routes stay independent.
"""
from __future__ import annotations

import itertools
from typing import Iterator, Optional, Sequence

import networkx as nx

from .graph import Graph, GraphError, Path

MAX_FOREST_ORACLE_N = 16


def _induced_paths_from(G: Graph, u: int, v: int, budget: Optional[int] = None,
                        reach_prune: bool = False) -> Iterator[Path]:
    """Depth-first extension: each new vertex is adjacent to the last one and
    to no earlier one. ``budget`` caps the path length; ``reach_prune``
    abandons a prefix once v is cut off by the prefix's closed neighbourhood."""
    adjacency = G.adjacency
    path = [u]
    blocked = {u}  # prefix vertices, minus the last, plus their neighbours

    if u == v:
        yield (u,)
        return

    def v_reachable(tip: int) -> bool:
        # necessary condition only: v reachable from tip avoiding blocked vertices
        seen = {tip}
        stack = [tip]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if y in seen or y in blocked:
                    continue
                if y == v:
                    return True
                seen.add(y)
                stack.append(y)
        return False

    def extend() -> Iterator[Path]:
        tip = path[-1]
        if budget is not None and len(path) - 1 >= budget:
            return
        for y in sorted(adjacency[tip]):
            if y in blocked:
                continue
            if any(y in adjacency[z] for z in path[:-1]):
                continue
            if y == v:
                yield tuple(path) + (v,)
                continue
            path.append(y)
            added = (adjacency[tip] | {tip}) - blocked
            blocked.update(added)
            if not reach_prune or v_reachable(y):
                yield from extend()
            blocked.difference_update(added)
            path.pop()

    yield from extend()


def enumerate_induced_paths(G: Graph, u: int, v: int, cap: Optional[int] = None) -> list[Path]:
    out = []
    for p in _induced_paths_from(G, u, v):
        out.append(p)
        if cap is not None and len(out) >= cap:
            break
    return out


def enumerate_induced_paths_filtered(G: Graph, u: int, v: int) -> list[Path]:
    """Second route: all simple paths, then keep the chordless ones."""
    if u == v:
        return [(u,)]
    nxg = to_networkx(G)
    out = []
    for p in nx.all_simple_paths(nxg, u, v):
        if nxg.subgraph(p).number_of_edges() == len(p) - 1:
            out.append(tuple(p))
    return out


def induced_length_set(G: Graph, u: int, v: int) -> frozenset[int]:
    return frozenset(len(p) - 1 for p in _induced_paths_from(G, u, v))


def bfs_distance(G: Graph, u: int, v: int) -> Optional[int]:
    nxg = to_networkx(G)
    try:
        return nx.shortest_path_length(nxg, u, v)
    except nx.NetworkXNoPath:
        return None


def oracle_has_nsp(G: Graph, u: int, v: int) -> bool:
    d = bfs_distance(G, u, v)
    if d is None:
        return False
    return any(len(p) - 1 > d for p in _induced_paths_from(G, u, v, reach_prune=True))


def oracle_lengths_up_to(G: Graph, u: int, v: int, bound: int) -> frozenset[int]:
    """Induced uv-path lengths that are at most ``bound``."""
    return frozenset(len(p) - 1 for p in _induced_paths_from(G, u, v, budget=bound))


def to_networkx(G: Graph) -> nx.Graph:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(G.n))
    nxg.add_edges_from(G.edges())
    return nxg


def _forest_profile(nxg: nx.Graph, S) -> Optional[list[tuple[int, int, int]]]:
    sub = nxg.subgraph(S)
    out = []
    for comp in nx.connected_components(sub):
        c = sub.subgraph(comp)
        if c.number_of_edges() != c.number_of_nodes() - 1:
            return None
        if any(deg > 2 for _, deg in c.degree()):
            return None
        ends = [x for x, deg in c.degree() if deg <= 1]
        a, b = (ends[0], ends[0]) if len(ends) == 1 else sorted(ends)
        out.append((a, b, c.number_of_edges()))
    return out


def _narrow(nxg: nx.Graph, parts: Sequence[frozenset], S: frozenset, h: int) -> bool:
    suffix: set[int] = set()
    for part in reversed(parts):
        suffix |= part
        prof = _forest_profile(nxg, S & suffix)
        if prof is None:
            return False
        if len(S & part) > h:
            return False
        if sum(1 for a, b, _ in prof if a not in part and b not in part) > h:
            return False
    return True


def narrow_forest_profiles(G: Graph, parts: Sequence[frozenset], h: int,
                           max_components: Optional[int] = None):
    """Every h-narrow path forest, as a map from its sorted component profile to
    the first vertex set (in subset-bitmask order) realizing it."""
    if G.n > MAX_FOREST_ORACLE_N:
        raise GraphError(f"forest oracle is limited to {MAX_FOREST_ORACLE_N} vertices")
    nxg = to_networkx(G)
    parts = [frozenset(p) for p in parts]
    found = {}
    for mask in range(1 << G.n):
        S = frozenset(x for x in range(G.n) if mask >> x & 1)
        prof = _forest_profile(nxg, S)
        if prof is None:
            continue
        if max_components is not None and len(prof) > max_components:
            continue
        if not _narrow(nxg, parts, S, h):
            continue
        found.setdefault(tuple(sorted(prof)), S)
    return found


def oracle_path_forest(G: Graph, parts: Sequence[frozenset], targets, h: int) -> bool:
    """Is there an h-narrow path forest whose components are exactly ``targets``?"""
    norm = []
    for tgt in targets:
        s, t, n = tgt if len(tgt) == 3 else (*tgt, None)
        norm.append((min(s, t), max(s, t), n))
    for prof in narrow_forest_profiles(G, parts, h, max_components=len(norm)):
        if len(prof) != len(norm):
            continue
        for perm in itertools.permutations(norm):
            if all(p[0] == t[0] and p[1] == t[1] and (t[2] is None or t[2] == p[2])
                   for p, t in zip(prof, perm)):
                return True
    return False
