import itertools

from hypothesis import given, settings, strategies as st

from nspath.graph import build_graph, is_induced_path
from nspath.oracle import (enumerate_induced_paths, enumerate_induced_paths_filtered,
                           induced_length_set, oracle_has_nsp, oracle_lengths_up_to)

from conftest import FIXTURES
from test_graph import small_graphs


def test_enumerate_examples():
    p4 = FIXTURES["PATH4"]
    assert enumerate_induced_paths(p4.G, p4.u, p4.v) == [(0, 1, 2, 3)]
    c5 = FIXTURES["C5X"]
    assert set(enumerate_induced_paths(c5.G, c5.u, c5.v)) == {
        tuple(c5.ids("u", "a", "v")), tuple(c5.ids("u", "c", "b", "v"))}
    k4 = FIXTURES["K4"]
    assert enumerate_induced_paths(k4.G, k4.u, k4.v) == [(k4.u, k4.v)]
    assert len(enumerate_induced_paths(c5.G, c5.u, c5.v, cap=1)) == 1


def test_length_sets():
    c6, c5, z = FIXTURES["C6X"], FIXTURES["C5X"], FIXTURES["ZIGZAG12"]
    assert induced_length_set(c6.G, c6.u, c6.v) == {3}
    assert induced_length_set(c5.G, c5.u, c5.v) == {2, 3}
    lengths = induced_length_set(z.G, z.u, z.v)
    assert 5 in lengths and max(lengths) >= 7
    assert oracle_lengths_up_to(z.G, z.u, z.v, 6) == {5}
    assert induced_length_set(build_graph(3, [(0, 1)]), 0, 2) == frozenset()


def test_has_nsp_examples():
    c5, k4 = FIXTURES["C5X"], FIXTURES["K4"]
    assert oracle_has_nsp(c5.G, c5.u, c5.v)
    assert not oracle_has_nsp(k4.G, k4.u, k4.v)
    assert not oracle_has_nsp(build_graph(4, [(0, 1), (2, 3)]), 0, 3)


def test_dual_enumeration_all_graphs_up_to_5():
    for n in range(1, 6):
        pairs = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = build_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
            for u, v in itertools.product(range(n), repeat=2):
                first = enumerate_induced_paths(G, u, v)
                assert sorted(first) == sorted(enumerate_induced_paths_filtered(G, u, v))


@settings(max_examples=200, deadline=None)
@given(small_graphs(max_n=7), st.data())
def test_oracle_properties(G, data):
    u = data.draw(st.integers(0, G.n - 1))
    v = data.draw(st.integers(0, G.n - 1))
    paths = enumerate_induced_paths(G, u, v)
    assert all(is_induced_path(G, p) and p[0] == u and p[-1] == v for p in paths)
    assert oracle_has_nsp(G, u, v) == oracle_has_nsp(G, v, u)
    assert sorted(paths) == sorted(enumerate_induced_paths_filtered(G, u, v))
