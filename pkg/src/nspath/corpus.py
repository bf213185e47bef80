"""Instance corpora, oracle cross-checks and benchmark reports."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .formats import GraphDocument
from .forest import exact_length_path
from .generators import Uniform, gen_gnp, gen_layered
from .graph import Graph, Path, build_graph, distances_from, straight_set
from .oracle import induced_length_set, oracle_has_nsp
from .solver import Found, find_nsp, straighten, verify_nsp

GNP_PROBS = (0.15, 0.3, 0.5)
LAYERED_PROBS = (0.3, 0.5, 0.7)


@dataclass
class RunReport:
    name: str
    verdict: bool
    dist: Optional[int]
    certificate: Optional[Path]
    millis: float

    def lines(self, with_time: bool = True) -> list[str]:
        out = [f"INSTANCE {self.name}",
               f"VERDICT {'yes' if self.verdict else 'no'}",
               f"DIST {'inf' if self.dist is None else self.dist}"]
        if self.certificate is not None:
            out.append("CERT " + " ".join(map(str, self.certificate)))
            out.append(f"LENGTH {len(self.certificate) - 1}")
        if with_time:
            out.append(f"TIME {self.millis:.3f}")
        return out

    def render(self, with_time: bool = True) -> str:
        return "\n".join(self.lines(with_time)) + "\n"


def run_nsp(doc: GraphDocument) -> RunReport:
    G = doc.graph()
    start = time.perf_counter()
    outcome = find_nsp(G, doc.u, doc.v)
    millis = (time.perf_counter() - start) * 1000.0
    if outcome.certificate is not None:
        assert verify_nsp(G, doc.u, doc.v, outcome.certificate)
    return RunReport(doc.name or "unnamed", outcome.found, outcome.dist,
                     outcome.certificate, millis)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices; bit i of the index picks the i-th
    pair of ``itertools.combinations(range(n), 2)``."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def gnp_corpus(count: int, seed: int = 0) -> Iterator[GraphDocument]:
    """n cycles through 7..14 and p through 0.15, 0.3, 0.5; instance i uses seed + i."""
    for i in range(count):
        n = 7 + i % 8
        p = GNP_PROBS[(i // 8) % 3]
        yield gen_gnp(n, p, seed + i)


def layered_corpus(count: int, seed: int = 0, max_layers: int = 12,
                   max_width: int = 3) -> Iterator[GraphDocument]:
    """Between 3 and ``max_layers`` layers with middle widths in 1..``max_width``."""
    for i in range(count):
        shape = Uniform(seed + i + (1 << 32))
        layers = 3 + i % (max_layers - 2)
        widths = [1] + [shape.randint(1, max_width) for _ in range(layers - 2)] + [1]
        p = LAYERED_PROBS[(i // (max_layers - 2)) % 3]
        yield gen_layered(widths, p, seed + i)


def check_nsp(G: Graph, u: int, v: int) -> list[str]:
    """Compare ``find_nsp`` with the oracle; returns discrepancy messages."""
    problems = []
    outcome = find_nsp(G, u, v)
    expected = oracle_has_nsp(G, u, v)
    if outcome.found != expected:
        problems.append(f"verdict {outcome.found} but oracle says {expected}")
    if outcome.certificate is not None and not verify_nsp(G, u, v, outcome.certificate):
        problems.append(f"certificate {outcome.certificate} does not verify")
    return problems


def check_straighten(G: Graph, u: int, v: int) -> list[str]:
    if u == v or distances_from(G, u)[v] is None:
        return []
    result = straighten(G, u, v)
    if isinstance(result, Found):
        if not verify_nsp(G, u, v, result.path):
            return [f"straighten certificate {result.path} does not verify"]
        return []
    problems = []
    final = result.final
    if straight_set(final, result.u, result.v) != frozenset(range(final.n)):
        problems.append("reduced graph has a non-straight vertex")
    if oracle_has_nsp(G, u, v) != oracle_has_nsp(final, result.u, result.v):
        problems.append("straightening changed the oracle verdict")
    return problems


def check_exact_lengths(G: Graph, u: int, v: int, ks=(0, 1, 2, 3)) -> list[str]:
    d = distances_from(G, u)[v]
    if d is None:
        return []
    lengths = induced_length_set(G, u, v)
    problems = []
    for k in ks:
        p = exact_length_path(G, u, v, k)
        if (p is not None) != (d + k in lengths):
            problems.append(f"k={k}: got {p}, oracle lengths {sorted(lengths)}")
        elif p is not None and (len(p) - 1 != d + k or p[0] != u or p[-1] != v):
            problems.append(f"k={k}: returned path {p} has the wrong shape")
    return problems


def check_document(doc: GraphDocument, exact: bool = True) -> list[str]:
    G = doc.graph()
    problems = check_nsp(G, doc.u, doc.v) + check_straighten(G, doc.u, doc.v)
    if exact:
        problems += check_exact_lengths(G, doc.u, doc.v)
    return [f"{doc.name}: {p}" for p in problems]


def bench_families(max_vertices: int = 40) -> list[tuple[str, list[int], float]]:
    """Layered families of growing height, constant middle width 2 or 3."""
    out = []
    for width in (2, 3):
        for p in LAYERED_PROBS:
            layers = 4
            while 2 + width * (layers - 2) <= max_vertices:
                widths = [1] + [width] * (layers - 2) + [1]
                out.append((f"w{width}-L{layers}-p{p:g}", widths, p))
                layers += 2
    return out


def run_bench(trials: int = 3, seed: int = 0, max_vertices: int = 40) -> Iterator[RunReport]:
    for family, widths, p in bench_families(max_vertices):
        for t in range(trials):
            doc = gen_layered(widths, p, seed + t)
            doc.name = f"{family}-s{seed + t}"
            yield run_nsp(doc)
