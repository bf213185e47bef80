import sys
from dataclasses import dataclass

import pytest

from nspath.graph import Graph, build_graph


@dataclass
class Fixture:
    G: Graph
    names: list
    u: int
    v: int

    def __getitem__(self, name):
        return self.names.index(name)

    def ids(self, *names):
        return [self[n] for n in names]


def named(edges: str, vertices: str = None, u="u", v="v") -> Fixture:
    """Vertices get ids in listing order (or first-appearance order in ``edges``)."""
    pairs = [e.split("-") for e in edges.split()]
    if vertices is None:
        names = []
        for pair in pairs:
            for x in pair:
                if x not in names:
                    names.append(x)
    else:
        names = vertices.split()
    ix = {x: i for i, x in enumerate(names)}
    G = build_graph(len(names), [(ix[a], ix[b]) for a, b in pairs])
    return Fixture(G, names, ix.get(u, 0), ix.get(v, 0))


FIXTURES = {
    "PATH4": named("u-a a-b b-v", "u a b v"),
    "C5X": named("u-a a-v v-b b-c c-u", "u a v b c"),
    "C6X": named("u-a a-b b-v v-c c-d d-u", "u a b v c d"),
    "K4": named("u-v u-a u-b v-a v-b a-b", "u v a b"),
    "THETA23": named("u-a a-v u-b b-c c-v", "u a v b c"),
    "WGADGET": named("u-a a-v u-b b-v w-a w-b", "u a v b w"),
    "LADDER": named("a1-a2 b1-b2", "a1 a2 b1 b2"),
    "LADDER+": named("a1-a2 b1-b2 a1-b1", "a1 a2 b1 b2"),
    "ZIGZAG12": named("u-s1 s1-s2 s2-s3 s3-s4 s4-v u-p1 p1-p2 p2-p3 p3-s4 s1-q2 "
                      "p3-q2 q2-q3 q3-r4 r4-v",
                      "u s1 s2 s3 s4 p1 p2 p3 q2 q3 r4 v"),
    # only NSP climbs column a to a9, drops down column c to c2, then climbs column b
    "DESCENT": named(" ".join(["u-a1", "u-b1", "a10-v", "b10-v", "c8-a9", "c2-b1", "c2-b3"]
                              + [f"a{i}-a{i + 1}" for i in range(1, 10)]
                              + [f"b{i}-b{i + 1}" for i in range(1, 10)]
                              + [f"c{i}-c{i + 1}" for i in range(2, 8)])),
}


@pytest.fixture
def fx():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in results.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
