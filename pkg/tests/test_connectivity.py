from hypothesis import given, settings
from hypothesis import strategies as st

from planarcanon.connectivity import is_3_connected, is_connected
from planarcanon.corpus import cube, gen_triangulation, k33, k4, octahedron, prism, wheel
from planarcanon.graphs import Graph


def _minus_edge(g, e):
    return Graph(g.n, g.edges - {e})


def test_connected():
    assert is_connected(k4())
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(Graph(1, frozenset()))


def test_small_graphs_never_3_connected():
    triangle = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
    assert not is_3_connected(triangle)
    assert not is_3_connected(Graph.from_edges(2, [(0, 1)]))


def test_known_3_connected():
    for g in (k4(), octahedron(), prism(), cube(), wheel(4), wheel(5), k33()):
        assert is_3_connected(g)


def test_degree_two_vertex_rejected():
    assert not is_3_connected(_minus_edge(k4(), (2, 3)))


def test_two_cut_rejected():
    # Two K4-like blocks sharing only the pair {0, 1}: min degree is 3 but
    # removing that pair disconnects.
    book = Graph.from_edges(6, [
        (0, 1),
        (0, 2), (1, 2), (0, 3), (1, 3), (2, 3),
        (0, 4), (1, 4), (0, 5), (1, 5), (4, 5),
    ])
    assert is_connected(book)
    assert min(book.degree(v) for v in range(6)) >= 3
    assert not is_3_connected(book)


def test_disconnected_rejected():
    g = Graph.from_edges(8, [(u, v) for u in range(4) for v in range(u + 1, 4)]
                         + [(u + 4, v + 4) for u in range(4) for v in range(u + 1, 4)])
    assert not is_3_connected(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(4, 14), st.integers(0, 10_000))
def test_triangulations_are_3_connected(n, seed):
    assert is_3_connected(gen_triangulation(n, seed))
