"""Dynamic programming over an altitude for narrow path forests.

An *altitude* is an ordered partition ``(V_0, ..., V_n)`` of the vertex set
with no edge between parts whose indices differ by two or more. A *path
forest* is an induced subgraph in which every component is a path.

The table for index ``i`` holds one representative for each class of
h-narrow path forests of ``G[V_i ∪ ... ∪ V_n]``, where two forests are in the
same class when they meet ``V_i`` in the same set and have the same
multiset of (ends, length) components. The table for ``i`` is built from
the table for ``i + 1`` by adding at most ``h`` vertices of ``V_i`` to every
representative.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from .graph import Graph, GraphError, NoPathError, Path, distances_from

WILDCARD = None
MAX_H = 6
MAX_TARGETS = 4

Target = tuple[int, int, Optional[int]]


class AltitudeError(GraphError):
    pass


@dataclass(frozen=True)
class Altitude:
    parts: tuple[frozenset[int], ...]
    part_of: dict[int, int] = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class Component:
    end_a: int
    end_b: int
    length: int
    sequence: Path


@dataclass(frozen=True)
class PathForest:
    vertices: frozenset[int]
    components: tuple[Component, ...]

    def paths(self) -> list[Path]:
        return [c.sequence for c in self.components]


class ClassKey(NamedTuple):
    x_intersection: tuple[int, ...]
    component_count: int
    profile: tuple[tuple[int, int, Optional[int]], ...]


@dataclass
class ClassTable:
    index: int
    entries: dict[ClassKey, PathForest]

    def __len__(self) -> int:
        return len(self.entries)


def make_altitude(G: Graph, parts: Iterable[Iterable[int]]) -> Altitude:
    frozen = tuple(frozenset(p) for p in parts)
    part_of: dict[int, int] = {}
    for i, part in enumerate(frozen):
        for x in part:
            if not 0 <= x < G.n:
                raise AltitudeError(f"vertex {x} out of range")
            if x in part_of:
                raise AltitudeError(f"vertex {x} is in parts {part_of[x]} and {i}")
            part_of[x] = i
    if len(part_of) != G.n:
        missing = sorted(set(range(G.n)) - part_of.keys())
        raise AltitudeError(f"parts do not cover vertices {missing}")
    for a, b in G.edges():
        if abs(part_of[a] - part_of[b]) >= 2:
            raise AltitudeError(
                f"edge ({a}, {b}) joins parts {part_of[a]} and {part_of[b]}")
    return Altitude(frozen, part_of)


def bfs_altitude(G: Graph, root: int) -> Altitude:
    """Distance classes from ``root``; unreachable vertices form one extra last part."""
    dist = distances_from(G, root)
    top = max(d for d in dist if d is not None)
    parts: list[set[int]] = [set() for _ in range(top + 1)]
    lost = set()
    for x, d in enumerate(dist):
        (lost if d is None else parts[d]).add(x)
    if lost:
        parts.append(lost)
    return make_altitude(G, parts)


def _normalize(a: int, b: int, length: int, seq: Sequence[int]) -> Component:
    if a > b:
        a, b = b, a
        seq = seq[::-1]
    return Component(a, b, length, tuple(seq))


def path_forest_from_vertices(G: Graph, S: Iterable[int]) -> Optional[PathForest]:
    """Decompose ``G[S]`` into its paths, or ``None`` if it is not a path forest."""
    S = frozenset(S)
    nbrs = {x: sorted(G.adjacency[x] & S) for x in S}
    if any(len(ns) > 2 for ns in nbrs.values()):
        return None
    seen: set[int] = set()
    comps = []
    for start in sorted(S):
        if start in seen or len(nbrs[start]) == 2:
            continue
        seq = [start]
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [y for y in nbrs[cur] if y != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seq.append(cur)
            seen.add(cur)
        comps.append(_normalize(seq[0], seq[-1], len(seq) - 1, seq))
    if len(seen) != len(S):
        return None  # leftover vertices all have degree 2: a cycle
    comps.sort(key=lambda c: (c.end_a, c.end_b, c.length, c.sequence))
    return PathForest(S, tuple(comps))


def is_h_restricted(F: PathForest, X: Iterable[int], h: int) -> bool:
    X = frozenset(X)
    if len(F.vertices & X) > h:
        return False
    loose = sum(1 for c in F.components if c.end_a not in X and c.end_b not in X)
    return loose <= h


def is_h_narrow(G: Graph, A: Altitude, F: PathForest, h: int, start: int = 0) -> bool:
    """Check h-restriction of every suffix ``F[V_i ∪ ... ∪ V_n]``, ``i >= start``."""
    suffix: set[int] = set()
    for i in range(len(A.parts) - 1, start - 1, -1):
        suffix |= A.parts[i]
        sub = path_forest_from_vertices(G, F.vertices & suffix)
        if sub is None or not is_h_restricted(sub, A.parts[i], h):
            return False
    return True


def class_key(F: PathForest, X: Iterable[int], with_lengths: bool = True) -> ClassKey:
    X = frozenset(X)
    profile = sorted((min(c.end_a, c.end_b), max(c.end_a, c.end_b),
                      c.length if with_lengths else None) for c in F.components)
    return ClassKey(tuple(sorted(F.vertices & X)), len(F.components), tuple(profile))


def _matches(profile: Sequence[tuple], targets: Sequence[Target], exact: bool) -> bool:
    """Injective (bijective when ``exact``) matching of components to targets."""
    if exact and len(profile) != len(targets):
        return False
    if len(profile) > len(targets):
        return False
    for perm in itertools.permutations(range(len(targets)), len(profile)):
        if all(_fits(p, targets[j]) for p, j in zip(profile, perm)):
            return True
    return False


def _fits(comp: tuple, target: Target) -> bool:
    a, b, length = comp
    s, t, n = target
    if (a, b) != (s, t):
        return False
    return n is None or length is None or n == length


def _normalize_targets(G: Graph, targets: Sequence[Sequence]) -> list[Target]:
    out = []
    for tgt in targets:
        if len(tgt) == 2:
            (s, t), n = tgt, WILDCARD
        else:
            s, t, n = tgt
        if not (0 <= s < G.n and 0 <= t < G.n):
            raise GraphError(f"target ({s}, {t}) has a vertex out of range")
        if n is not None and (n < 0 or (n == 0 and s != t)):
            raise GraphError(f"malformed target ({s}, {t}, {n})")
        out.append((min(s, t), max(s, t), n))
    return out


class _Engine:
    """One DP run: fixed graph, altitude, h, and optional target-driven pruning."""

    def __init__(self, G: Graph, A: Altitude, h: int,
                 targets: Optional[Sequence[Target]] = None, prune: bool = True):
        if not 1 <= h <= MAX_H:
            raise GraphError(f"h must be in 1..{MAX_H}, got {h}")
        self.G = G
        self.A = A
        self.h = h
        self.targets = list(targets) if targets is not None else None
        if self.targets is not None and len(self.targets) > MAX_TARGETS:
            raise GraphError(f"at most {MAX_TARGETS} targets supported")
        self.with_lengths = self.targets is None or any(t[2] is not None for t in self.targets)
        self.prune = prune and self.targets is not None
        if self.prune:
            self.target_ends = {x for s, t, _ in self.targets for x in (s, t)}
            exact = [t[2] for t in self.targets]
            self.max_length = None if any(n is None for n in exact) else max(exact, default=0)

    def _subsets(self, i: int) -> list[tuple[tuple[int, ...], list[Component]]]:
        """Subsets S of V_i with |S| <= h such that G[S] is a path forest."""
        part = sorted(self.A.parts[i])
        out = []
        combos = [c for r in range(min(self.h, len(part)) + 1)
                  for c in itertools.combinations(part, r)]
        for S in sorted(combos):
            F = path_forest_from_vertices(self.G, S)
            if F is not None:
                out.append(S)
        return out

    def _admit(self, S: frozenset, profile: list[tuple]) -> bool:
        """h-narrow condition at this index plus optional pruning."""
        loose = [p for p in profile if p[0] not in S and p[1] not in S]
        if len(loose) > self.h:
            return False
        if not self.prune:
            return True
        ends = self.target_ends
        for a, b, length in profile:
            if (a not in S and a not in ends) or (b not in S and b not in ends):
                return False
            if self.max_length is not None and length > self.max_length:
                return False
        return not loose or _matches(loose, self.targets, exact=False)

    def _key(self, S, profile) -> ClassKey:
        if not self.with_lengths:
            profile = [(a, b, None) for a, b, _ in profile]
        return ClassKey(tuple(sorted(S)), len(profile), tuple(sorted(profile)))

    def top(self) -> ClassTable:
        i = len(self.A.parts) - 1
        entries: dict[ClassKey, PathForest] = {}
        for S in self._subsets(i):
            F = path_forest_from_vertices(self.G, S)
            profile = [(c.end_a, c.end_b, c.length) for c in F.components]
            fs = frozenset(S)
            if not self._admit(fs, profile):
                continue
            key = self._key(fs, profile)
            if key not in entries:
                entries[key] = F
        return ClassTable(i, entries)

    def step(self, i: int, nxt: ClassTable) -> ClassTable:
        G = self.G
        adjacency = G.adjacency
        upper = self.A.parts[i + 1]
        subsets = self._subsets(i)
        entries: dict[ClassKey, PathForest] = {}
        for key in sorted(nxt.entries):
            rep = nxt.entries[key]
            comps = rep.components
            upper_in = rep.vertices & upper
            end_of: dict[int, list[int]] = {}
            for idx, c in enumerate(comps):
                end_of.setdefault(c.end_a, []).append(idx)
                if c.end_b != c.end_a:
                    end_of.setdefault(c.end_b, []).append(idx)
            interior = upper_in - end_of.keys()
            for S in subsets:
                fs = frozenset(S)
                merged = self._merge(fs, comps, end_of, interior, adjacency)
                if merged is None:
                    continue
                profile = [(min(a, b), max(a, b), length) for a, b, length, _ in merged]
                if not self._admit(fs, profile):
                    continue
                new_key = self._key(fs, profile)
                if new_key in entries:
                    continue
                built = tuple(sorted(
                    (_normalize(a, b, length, seq()) for a, b, length, seq in merged),
                    key=lambda c: (c.end_a, c.end_b, c.length, c.sequence)))
                entries[new_key] = PathForest(rep.vertices | fs, built)
        return ClassTable(i, entries)

    @staticmethod
    def _merge(S, comps, end_of, interior, adjacency):
        """Component structure of ``G[S ∪ V(H')]`` or ``None`` if not a path forest.

        Nodes are the vertices of S plus the ends of the components of H';
        each component with distinct ends acts as a weighted link between them.
        Returns ``(a, b, length, build_sequence)`` tuples.
        """
        links: dict[int, list[tuple[int, int]]] = {}  # node -> [(nbr, comp idx or -1)]
        for s in S:
            nbrs = adjacency[s]
            if nbrs & interior:
                return None
            row = []
            for y in nbrs:
                if y in S or y in end_of:
                    row.append((y, -1))
            if len(row) > 2:
                return None
            links[s] = row
            for y, _ in row:
                if y in end_of:
                    links.setdefault(y, []).append((s, -1))
        for idx, c in enumerate(comps):
            if c.end_a != c.end_b:
                links.setdefault(c.end_a, []).append((c.end_b, idx))
                links.setdefault(c.end_b, []).append((c.end_a, idx))
            else:
                links.setdefault(c.end_a, [])
        for row in links.values():
            if len(row) > 2:
                return None

        seen: set[int] = set()
        out = []
        for start in sorted(links):
            if start in seen or len(links[start]) == 2:
                continue
            steps = []  # (node, via) pairs
            prev, cur, length = None, start, 0
            seen.add(start)
            while True:
                nxt = [(y, via) for y, via in links[cur] if y != prev]
                if not nxt:
                    break
                y, via = nxt[0]
                length += 1 if via < 0 else comps[via].length
                steps.append((y, via))
                prev, cur = cur, y
                seen.add(cur)
            out.append((start, cur, length, _sequence_builder(start, steps, comps)))
        if len(seen) != len(links):
            return None
        return out


def _sequence_builder(start, steps, comps):
    def build():
        seq = [start]
        for node, via in steps:
            if via < 0:
                seq.append(node)
            else:
                c = comps[via].sequence
                seq.extend(c[1:] if c[0] == seq[-1] else c[-2::-1])
        return seq
    return build


def init_top_classes(G: Graph, A: Altitude, h: int, targets=None, prune: bool = True) -> ClassTable:
    return _Engine(G, A, h, _normalize_targets(G, targets) if targets is not None else None,
                   prune).top()


def dp_step(G: Graph, A: Altitude, i: int, next_table: ClassTable, h: int,
            targets=None, prune: bool = True) -> ClassTable:
    if next_table.index != i + 1:
        raise GraphError(f"table for index {next_table.index} cannot feed step {i}")
    return _Engine(G, A, h, _normalize_targets(G, targets) if targets is not None else None,
                   prune).step(i, next_table)


def class_tables(G: Graph, A: Altitude, h: int, targets=None, prune: bool = True) -> list[ClassTable]:
    """All tables, index 0 first."""
    engine = _Engine(G, A, h, _normalize_targets(G, targets) if targets is not None else None,
                     prune)
    tables = [engine.top()]
    for i in range(len(A.parts) - 2, -1, -1):
        tables.append(engine.step(i, tables[-1]))
    return tables[::-1]


def find_path_forest(G: Graph, A: Altitude, targets: Sequence[Sequence], h: int,
                     prune: bool = True) -> Optional[PathForest]:
    """An h-narrow path forest whose components are exactly ``targets``.

    Each target is ``(s, t, length)`` or ``(s, t, None)`` for any length.
    """
    if h < 1:
        raise GraphError("h must be at least 1")
    norm = _normalize_targets(G, targets)
    engine = _Engine(G, A, h, norm, prune)
    table = engine.top()
    for i in range(len(A.parts) - 2, -1, -1):
        table = engine.step(i, table)
        if not table.entries:
            return None
    for key in sorted(table.entries):
        if key.component_count == len(norm) and _matches(key.profile, norm, exact=True):
            F = table.entries[key]
            check = path_forest_from_vertices(G, F.vertices)
            profile = [(c.end_a, c.end_b, c.length) for c in F.components]
            assert check == F, "representative is not its own decomposition"
            assert _matches(profile, norm, exact=True), "representative misses targets"
            assert is_h_narrow(G, A, F, h), "representative is not h-narrow"
            return F
    return None


def exact_length_path(G: Graph, u: int, v: int, k: int) -> Optional[Path]:
    """An induced uv-path of length exactly d(u,v) + k, or ``None``."""
    if k < 0:
        raise GraphError("k must be nonnegative")
    dist = distances_from(G, u)
    if dist[v] is None:
        raise NoPathError(f"no uv-path between {u} and {v}")
    if u == v:
        return (u,) if k == 0 else None
    A = bfs_altitude(G, u)
    F = find_path_forest(G, A, [(u, v, dist[v] + k)], h=k + 1)
    if F is None:
        return None
    seq = F.components[0].sequence
    return seq if seq[0] == u else seq[::-1]


def disjoint_short_paths(G: Graph, root: int, pairs: Sequence[tuple[int, int]], h: int
                         ) -> Optional[PathForest]:
    """Disjoint, pairwise anticomplete induced paths joining each pair, with at
    most ``h`` forest vertices at each distance from ``root``."""
    dist = distances_from(G, root)
    for s, t in pairs:
        if dist[s] is None or dist[t] is None:
            raise NoPathError(f"pair ({s}, {t}) is not reachable from {root}")
    A = bfs_altitude(G, root)
    return find_path_forest(G, A, [(s, t, WILDCARD) for s, t in pairs], h)
