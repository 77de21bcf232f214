import pytest

from planarcanon import corpus


@pytest.fixture(scope="session")
def enum_by_n():
    """Enumerated 3-connected planar graphs, keyed by vertex count."""
    return {n: corpus.enumerate_small_3conn_planar(n) for n in range(4, 9)}


@pytest.fixture(scope="session")
def named_graphs():
    return {
        "k4": corpus.k4(),
        "w4": corpus.wheel(4),
        "w5": corpus.wheel(5),
        "octahedron": corpus.octahedron(),
        "prism": corpus.prism(),
        "cube": corpus.cube(),
    }
