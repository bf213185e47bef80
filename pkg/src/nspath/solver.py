"""Find an induced uv-path longer than d(u,v), or decide that none exists.

Pipeline: ``straighten`` either finds a certificate outright or contracts
every component of non-straight vertices, leaving a graph whose vertices
all lie on shortest uv-paths. On that graph a shortest non-shortest path
``P`` splits into a monotone prefix ending at ``s``, a monotone suffix
starting at ``t`` and a middle part; ``bounded_gap_search(k)`` covers
``h(s) - h(t) = k`` for small ``k`` and ``wide_gap_search`` covers the rest.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .forest import find_path_forest, make_altitude
from .graph import (TOWARD_U, TOWARD_V, Graph, GraphError, Layering, NoPathError, Path,
                    distances_from, is_induced_path, layering, monotone_path,
                    shortest_path)

GAP_LIMIT = 5  # bounded_gap_search handles gaps 0..5, wide_gap_search gaps >= 6


class SolverError(GraphError):
    """A precondition of a search routine does not hold."""


class CertificateError(AssertionError):
    """An assembled certificate failed verification; indicates a bug."""


@dataclass(frozen=True)
class ContractionRecord:
    component: frozenset[int]
    boundary: frozenset[int]
    added_edges: frozenset[tuple[int, int]]
    boundary_subgraph: dict[int, frozenset[int]] = field(compare=False)


@dataclass(frozen=True)
class Reduction:
    original: Graph
    final: Graph
    records: tuple[ContractionRecord, ...]
    labels: tuple[int, ...]  # final id -> original id
    u: int
    v: int

    def to_final(self, x: int) -> int:
        return self.labels.index(x)


@dataclass(frozen=True)
class Found:
    path: Path


@dataclass(frozen=True)
class NspOutcome:
    certificate: Optional[Path]
    dist: Optional[int]

    @property
    def found(self) -> bool:
        return self.certificate is not None


def verify_nsp(G: Graph, u: int, v: int, p: Sequence[int]) -> bool:
    if len(p) == 0 or p[0] != u or p[-1] != v:
        return False
    if not is_induced_path(G, p):
        return False
    d = distances_from(G, u)[v]
    return d is not None and len(p) - 1 > d


# --- straightening -----------------------------------------------------------

def _freeze(adj: list[set[int]], alive: set[int]) -> tuple[Graph, list[int]]:
    labels = sorted(alive)
    index = {x: i for i, x in enumerate(labels)}
    adjacency = tuple(frozenset(index[y] for y in adj[x]) for x in labels)
    return Graph(len(labels), adjacency), labels


def _bfs(adj: list[set[int]], s: int) -> dict[int, int]:
    dist = {s: 0}
    frontier = [s]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def _working_layering(adj, alive, u, v):
    G, labels = _freeze(adj, alive)
    index = {x: i for i, x in enumerate(labels)}
    return G, labels, layering(G, index[u], index[v])


def straighten(G: Graph, u: int, v: int) -> Union[Found, Reduction]:
    """Either a certificate in ``G`` or a reduction to an all-straight graph."""
    if u == v:
        raise GraphError("straighten needs u != v")
    if distances_from(G, u)[v] is None:
        raise NoPathError(f"no uv-path between {u} and {v}")
    adj = [set(a) for a in G.adjacency]
    alive = set(range(G.n))
    records: list[ContractionRecord] = []
    prev_straight = None
    while True:
        du, dv = _bfs(adj, u), _bfs(adj, v)
        d = du[v]
        straight = {x for x in alive if x in du and x in dv and du[x] + dv[x] == d}
        if prev_straight is not None:
            assert straight == prev_straight, "straight set moved after contraction"
        prev_straight = straight
        rest = alive - straight
        if not rest:
            final, labels = _freeze(adj, alive)
            index = {x: i for i, x in enumerate(labels)}
            return Reduction(G, final, tuple(records), tuple(labels), index[u], index[v])

        K = _component(adj, rest, min(rest))
        boundary = set().union(*(adj[x] for x in K)) - K
        pair = _widest_nonadjacent_pair(adj, boundary, du)
        if pair is not None:
            x, y = pair
            WG, labels, L = _working_layering(adj, alive, u, v)
            index = {z: i for i, z in enumerate(labels)}
            p1 = [labels[z] for z in monotone_path(WG, L, index[x], TOWARD_U)]
            p2 = [labels[z] for z in monotone_path(WG, L, index[y], TOWARD_V)]
            q = _restricted_shortest(adj, x, y, K)
            path = tuple(p1[::-1]) + tuple(q[1:-1]) + tuple(p2)
            if not _verify_working(adj, alive, u, v, path, d):
                raise CertificateError(f"straightening certificate {path} failed")
            expanded = lift_path(records, path)
            if not verify_nsp(G, u, v, expanded):
                raise CertificateError(f"expanded certificate {expanded} failed")
            return Found(expanded)

        sub = {x: frozenset(adj[x] & (K | boundary)) for x in K | boundary}
        added = set()
        for a in boundary:
            for b in boundary:
                if a < b and b not in adj[a]:
                    added.add((a, b))
        for x in K:
            for y in adj[x]:
                adj[y].discard(x)
            adj[x] = set()
        alive -= K
        for a, b in added:
            adj[a].add(b)
            adj[b].add(a)
        records.append(ContractionRecord(frozenset(K), frozenset(boundary),
                                         frozenset(added), sub))


def _component(adj, allowed: set[int], start: int) -> set[int]:
    comp = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y in allowed and y not in comp:
                comp.add(y)
                stack.append(y)
    return comp


def _widest_nonadjacent_pair(adj, boundary, du) -> Optional[tuple[int, int]]:
    best = None
    for x in sorted(boundary):
        for y in sorted(boundary):
            if du[x] < du[y] and y not in adj[x]:
                gap = du[y] - du[x]
                if best is None or gap > best[0]:
                    best = (gap, x, y)
    return None if best is None else best[1:]


def _restricted_shortest(adj, x, y, K) -> list[int]:
    """Shortest x-y path with all interior vertices in K (smallest-id ties)."""
    parent = {x: x}
    frontier = [x]
    while frontier and y not in parent:
        nxt = []
        for a in frontier:
            for b in sorted(adj[a]):
                if b in parent or (b not in K and b != y):
                    continue
                parent[b] = a
                nxt.append(b)
        frontier = sorted(nxt)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    return path[::-1]


def _verify_working(adj, alive, u, v, path, d) -> bool:
    if path[0] != u or path[-1] != v or len(path) - 1 <= d:
        return False
    if len(set(path)) != len(path) or not set(path) <= alive:
        return False
    for i, a in enumerate(path):
        if i + 1 < len(path) and path[i + 1] not in adj[a]:
            return False
        if any(b in adj[a] for b in path[i + 2:]):
            return False
    return True


def lift_path(records: Sequence[ContractionRecord], path: Sequence[int]) -> Path:
    """Undo contractions, newest first, splicing a path through K for each added edge used."""
    path = list(path)
    for rec in reversed(records):
        for i in range(len(path) - 1):
            a, b = path[i], path[i + 1]
            if (min(a, b), max(a, b)) in rec.added_edges:
                inner = _restricted_shortest(rec.boundary_subgraph, a, b, rec.component)
                path[i:i + 2] = inner
                break
    return tuple(path)


def expand_path(R: Reduction, p: Sequence[int]) -> Path:
    """Translate an NSP of ``R.final`` into an NSP of ``R.original``."""
    lifted = [R.labels[x] for x in p]
    out = lift_path(R.records, lifted)
    u, v = R.labels[R.u], R.labels[R.v]
    if not verify_nsp(R.original, u, v, out):
        raise CertificateError(f"expanded path {out} is not an NSP of the original graph")
    return out


def replay(R: Reduction) -> Graph:
    """Apply the contraction log to ``R.original``; equals ``R.final`` up to labels."""
    adj = [set(a) for a in R.original.adjacency]
    alive = set(range(R.original.n))
    for rec in R.records:
        for x in rec.component:
            for y in adj[x]:
                adj[y].discard(x)
            adj[x] = set()
        alive -= rec.component
        for a, b in rec.added_edges:
            adj[a].add(b)
            adj[b].add(a)
    return _freeze(adj, alive)[0]


# --- searches on an all-straight graph -----------------------------------------

def _straight_layering(G: Graph, u: int, v: int) -> Layering:
    L = layering(G, u, v)
    if len(L.height) != G.n:
        raise SolverError("every vertex must be uv-straight")
    return L


class _Context:
    """Per-graph caches: closed neighbourhood masks and fixed monotone paths."""

    def __init__(self, G: Graph, L: Layering):
        self.G = G
        self.L = L
        self.closed = tuple(m | (1 << x) for x, m in enumerate(G.masks))
        self.everything = (1 << G.n) - 1
        self._down: dict[int, Path] = {}
        self._up: dict[int, Path] = {}
        self._up_chains: dict[tuple[int, int], list[Path]] = {}

    def down(self, x: int) -> Path:
        if x not in self._down:
            self._down[x] = monotone_path(self.G, self.L, x, TOWARD_U)
        return self._down[x]

    def up(self, x: int) -> Path:
        if x not in self._up:
            self._up[x] = monotone_path(self.G, self.L, x, TOWARD_V)
        return self._up[x]

    def kill_mask(self, vertices) -> int:
        m = 0
        closed = self.closed
        for x in vertices:
            m |= closed[x]
        return m

    def up_chains(self, start: int, count: int) -> list[Path]:
        """All paths of ``count`` vertices starting at ``start`` that climb one
        layer per step, in lexicographic order."""
        key = (start, count)
        if key not in self._up_chains:
            if count == 1:
                chains = [(start,)]
            else:
                h = self.L.height[start]
                if h + count - 1 > self.L.dist:
                    chains = []
                else:
                    nxt = sorted(self.G.adjacency[start] & self.L.layers[h + 1])
                    chains = [(start,) + rest for y in nxt for rest in self.up_chains(y, count - 1)]
            self._up_chains[key] = chains
        return self._up_chains[key]

    def mask(self, vertices) -> int:
        m = 0
        for x in vertices:
            m |= 1 << x
        return m


def bounded_gap_search(G: Graph, u: int, v: int, k: int) -> Optional[Path]:
    """Look for an NSP whose monotone end pieces leave a height gap of exactly k."""
    if not 0 <= k <= GAP_LIMIT:
        raise SolverError(f"k must be in 0..{GAP_LIMIT}")
    L = _straight_layering(G, u, v)
    return _bounded_gap(_Context(G, L), u, v, k)


def _bounded_gap(ctx: _Context, u: int, v: int, k: int) -> Optional[Path]:
    G, L = ctx.G, ctx.L
    masks = G.masks
    layers = L.layers
    for x in range(G.n):
        hx = L.height[x]
        if hx + k + 2 > L.dist:
            continue
        for y in sorted(G.adjacency[x] & layers[hx + 1]):
            xy_open = masks[x] | masks[y]
            kill_u = None
            for v1 in sorted(layers[hx + 1]):
                if v1 == y or v1 in G.adjacency[x]:
                    continue
                for chain in ctx.up_chains(v1, k + 2):
                    rest = chain[1:]
                    if ctx.mask(rest) & xy_open:
                        continue
                    if kill_u is None:
                        kill_u = ctx.kill_mask(ctx.down(x))
                    q_v = ctx.up(chain[-1])
                    kill = kill_u | ctx.kill_mask(rest) | ctx.kill_mask(q_v)
                    alive = (ctx.everything & ~kill) | (1 << y) | (1 << v1)
                    q = shortest_path(G, v1, y, alive)
                    if q is None:
                        continue
                    cand = ctx.down(x)[::-1] + q[::-1] + tuple(rest) + q_v[1:]
                    if verify_nsp(G, u, v, cand):
                        return cand
    return None


def wide_gap_search(G: Graph, u: int, v: int) -> Optional[Path]:
    """Look for an NSP whose monotone end pieces leave a height gap of 6 or more."""
    L = _straight_layering(G, u, v)
    return _wide_gap(_Context(G, L), u, v)


def _wide_gap(ctx: _Context, u: int, v: int) -> Optional[Path]:
    G, L = ctx.G, ctx.L
    d = L.dist
    if G.n < 14 or d < 7:
        return None
    masks = G.masks
    layers = L.layers
    pair_cache: dict[tuple[int, int, int, int], Optional[tuple[Path, Path]]] = {}

    # a = h(t_1) = h(s_1); b = h(t_4) = h(s_4); t_7 sits at b + 3 <= d
    for a in range(1, d - 5):
        lower_s = [c for s0 in sorted(layers[a - 1]) for c in ctx.up_chains(s0, 4)]
        lower_t = [c for t1 in sorted(layers[a]) for c in ctx.up_chains(t1, 3)]
        for sl in lower_s:
            sl_mask = ctx.mask(sl)
            sl_open = 0
            for z in sl:
                sl_open |= masks[z]
            for tl in lower_t:
                tl_mask = ctx.mask(tl)
                if tl_mask & (sl_mask | sl_open):
                    continue
                for b in range(a + 2, d - 2):
                    if b == a + 2:
                        continue  # s_3, s_4 distinct at equal height: no monotone path
                    upper_s = [c for s4 in sorted(layers[b]) for c in ctx.up_chains(s4, 3)]
                    upper_t = [c for t4 in sorted(layers[b]) for c in ctx.up_chains(t4, 4)]
                    for su in upper_s:
                        su_mask = ctx.mask(su)
                        s_mask = sl_mask | su_mask
                        s_open = sl_open
                        for z in su:
                            s_open |= masks[z]
                        if su_mask & tl_mask:
                            continue
                        if s_open & tl_mask:
                            continue
                        for tu in upper_t:
                            tu_mask = ctx.mask(tu)
                            if tu_mask & (s_mask | s_open):
                                continue
                            found = _wide_tuple(ctx, u, v, sl, tl, su, tu, pair_cache)
                            if found is not None:
                                return found
    return None


def _wide_tuple(ctx, u, v, sl, tl, su, tu, pair_cache) -> Optional[Path]:
    G, L = ctx.G, ctx.L
    s0, s1, s2, s3 = sl
    t1, t2, t3 = tl
    s4, s5, s6 = su
    t4, t5, t6, t7 = tu
    key = (s3, s4, t3, t4)
    if key not in pair_cache:
        pair_cache[key] = _anticomplete_monotone_pair(G, L, s3, s4, t3, t4)
    pair = pair_cache[key]
    if pair is None:
        return None
    r_u, r_v = pair
    p_u = ctx.down(s0)[::-1] + (s1, s2, s3) + r_u[1:-1] + (s4, s5, s6)
    p_v = (t1, t2, t3) + r_v[1:-1] + (t4, t5, t6, t7) + ctx.up(t7)[1:]
    if not (is_induced_path(G, p_u) and is_induced_path(G, p_v)):
        return None
    if ctx.mask(p_u) & ctx.kill_mask(p_v):
        return None
    kill = ctx.kill_mask(p_u[:-1]) | ctx.kill_mask(p_v[1:])
    alive = (ctx.everything & ~kill) | (1 << s6) | (1 << t1)
    q = shortest_path(G, s6, t1, alive)
    if q is None:
        return None
    cand = p_u + q[1:-1] + p_v
    return cand if verify_nsp(G, u, v, cand) else None


def _anticomplete_monotone_pair(G: Graph, L: Layering, s3, s4, t3, t4
                                ) -> Optional[tuple[Path, Path]]:
    """Monotone s3-s4 and t3-t4 paths with no edges between them, via the
    forest DP on the layers they span (exact length forces monotonicity)."""
    lo, hi = L.height[s3], L.height[s4]
    keep = [x for x in range(G.n) if lo <= L.height[x] <= hi]
    sub, labels = G.induced_subgraph(keep)
    index = {x: i for i, x in enumerate(labels)}
    parts = [[index[x] for x in L.layers[j]] for j in range(lo, hi + 1)]
    A = make_altitude(sub, parts)
    span = hi - lo
    F = find_path_forest(sub, A, [(index[s3], index[s4], span), (index[t3], index[t4], span)], h=2)
    if F is None:
        return None
    paths = {}
    for c in F.components:
        seq = tuple(labels[x] for x in c.sequence)
        if L.height[seq[0]] != lo:
            seq = seq[::-1]
        paths[seq[0]] = seq
    return paths[s3], paths[t3]


# --- top level -------------------------------------------------------------------

def find_nsp(G: Graph, u: int, v: int) -> NspOutcome:
    if not (0 <= u < G.n and 0 <= v < G.n):
        raise GraphError("u and v must be vertices of G")
    d = distances_from(G, u)[v]
    if u == v or d is None:
        return NspOutcome(None, d)
    reduced = straighten(G, u, v)
    if isinstance(reduced, Found):
        cert = reduced.path
    else:
        cert = _search_straight(reduced)
    if cert is not None and not verify_nsp(G, u, v, cert):
        raise CertificateError(f"certificate {cert} failed verification")
    return NspOutcome(cert, d)


def _search_straight(R: Reduction) -> Optional[Path]:
    G = R.final
    L = _straight_layering(G, R.u, R.v)
    ctx = _Context(G, L)
    for k in range(GAP_LIMIT + 1):
        p = _bounded_gap(ctx, R.u, R.v, k)
        if p is not None:
            return expand_path(R, p)
    p = _wide_gap(ctx, R.u, R.v)
    return expand_path(R, p) if p is not None else None
