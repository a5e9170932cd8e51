import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from framework_forge import corpus
from framework_forge.framework import framework_from_graph
from framework_forge.graph import cycle_matroid


@pytest.fixture(scope="session")
def k4_graph():
    return corpus.k4()


@pytest.fixture(scope="session")
def k4_matroid(k4_graph):
    return cycle_matroid(k4_graph)


@pytest.fixture(scope="session")
def k4_framework(k4_graph):
    return framework_from_graph(k4_graph)


@pytest.fixture(scope="session")
def triangle_graph():
    from framework_forge.graph import Multigraph
    return Multigraph(("1", "2", "3"),
                      (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")))


@pytest.fixture(scope="session")
def triangle_matroid(triangle_graph):
    return cycle_matroid(triangle_graph)


@pytest.fixture(scope="session")
def triangle_framework(triangle_graph):
    return framework_from_graph(triangle_graph)
