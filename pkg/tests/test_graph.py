import pytest

from framework_forge import corpus
from framework_forge.errors import ValidationError
from framework_forge.graph import (
    Multigraph,
    bonds,
    components,
    cycle_matroid,
    cycles,
    to_dot,
    to_json_obj,
    graph_from_json_obj,
    tree_path,
)

import oracles


def fs(*labels):
    return frozenset(labels)


def test_multigraph_validates():
    with pytest.raises(ValidationError):
        Multigraph(("1",), (("e", "1", "2"),))
    with pytest.raises(ValidationError):
        Multigraph(("1", "2"), (("e", "1", "2"), ("e", "2", "1")))


def test_cycles_triangle(triangle_graph):
    assert cycles(triangle_graph) == (fs("a", "b", "c"),)


def test_cycles_parallel_and_loop():
    g = Multigraph(("1", "2"), (("e", "1", "2"), ("f", "2", "1"), ("l", "1", "1")))
    assert set(cycles(g)) == {fs("e", "f"), fs("l")}


def test_cycles_match_walk_oracle_on_corpus():
    for name in ("k4", "k33", "w4", "prism", "paw", "diamond"):
        g = corpus.named(name)
        assert set(cycles(g)) == oracles.walk_cycles(g)


def test_bonds_match_oracle_on_corpus():
    for name in ("k4", "k33", "w4", "prism", "p4", "star4"):
        g = corpus.named(name)
        assert set(bonds(g)) == oracles.graph_bonds(g)


def test_k4_counts(k4_graph):
    assert len(cycles(k4_graph)) == 7      # 4 triangles + 3 quadrilaterals
    assert len(bonds(k4_graph)) == 7       # 4 stars + 3 balanced cuts


def test_cycle_matroid_examples(triangle_graph):
    m = cycle_matroid(triangle_graph)
    assert m.circuits == (fs("a", "b", "c"),)
    parallel = Multigraph(("1", "2"), (("e", "1", "2"), ("f", "2", "1")))
    assert cycle_matroid(parallel).circuits == (fs("e", "f"),)


def test_cycle_matroid_cocircuits_are_bonds(k4_graph):
    m = cycle_matroid(k4_graph)
    assert set(m.cocircuits) == set(bonds(k4_graph))


def test_corpus_instances_revalidate():
    from framework_forge.matroid import build_matroid
    for name in corpus.corpus_names():
        instance = corpus.named(name)
        if isinstance(instance, Multigraph):
            instance = cycle_matroid(instance)
        rebuilt = build_matroid(instance.ground,
                                [set(c) for c in instance.circuits])
        assert rebuilt == instance


def test_components_and_tree_path(k4_graph):
    base = ("12", "13", "14")
    assert len(components(k4_graph, base)) == 1
    path = tree_path(k4_graph, base, "2", "3")
    assert path == ("12", "13")
    assert tree_path(k4_graph, base, "2", "2") == ()


def test_dot_and_json_roundtrip(k4_graph):
    dot = to_dot(k4_graph)
    assert dot.startswith("graph G {") and '"12"' in dot
    obj = to_json_obj(k4_graph)
    back = graph_from_json_obj(obj)
    assert [e[0] for e in back.edges] == [e[0] for e in k4_graph.edges]
    assert set(cycles(back)) == {
        frozenset(c) for c in oracles.walk_cycles(k4_graph)}
