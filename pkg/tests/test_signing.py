import pytest

from framework_forge import corpus
from framework_forge.errors import DomainMismatch, InconsistentTraversal
from framework_forge.graph import Multigraph, cycle_matroid
from framework_forge.matroid import build_matroid
from framework_forge.signing import (
    Signing,
    find_signing,
    iter_signings,
    signing_from_oriented_graph,
    traversal_directions,
    verify_signing,
)


def fs(*labels):
    return frozenset(labels)


def triangle_signing_by_hand():
    # c identically +1; on each bond the two edges point opposite ways
    o = fs("a", "b", "c")
    c = {o: {"a": 1, "b": 1, "c": 1}}
    d = {
        fs("a", "b"): {"a": 1, "b": -1},
        fs("a", "c"): {"a": 1, "c": -1},
        fs("b", "c"): {"b": 1, "c": -1},
    }
    return Signing(c, d)


def test_verify_valid_triangle(triangle_matroid):
    report = verify_signing(triangle_matroid, triangle_signing_by_hand())
    assert report.ok


def test_verify_all_plus_one_fails(triangle_matroid):
    o = fs("a", "b", "c")
    bad = Signing(
        {o: {"a": 1, "b": 1, "c": 1}},
        {b: {e: 1 for e in b} for b in triangle_matroid.cocircuits},
    )
    report = verify_signing(triangle_matroid, bad)
    assert not report.ok
    _o, _b, total = report.violation
    assert total == 2


def test_verify_empty_matroid():
    empty = build_matroid([], [])
    assert verify_signing(empty, Signing({}, {})).ok


def test_verify_domain_mismatch(triangle_matroid):
    with pytest.raises(DomainMismatch):
        verify_signing(triangle_matroid, Signing({}, {}))


def test_traversal_same_and_opposite_sense(triangle_graph, triangle_matroid):
    o = fs("a", "b", "c")
    forward = signing_from_oriented_graph(
        triangle_graph, circuit_orientations={o: ("a", "b", "c")})
    assert forward.c[o] == {"a": 1, "b": 1, "c": 1}
    backward = signing_from_oriented_graph(
        triangle_graph, circuit_orientations={o: ("a", "c", "b")})
    assert backward.c[o] == {"a": -1, "b": -1, "c": -1}
    for signing in (forward, backward):
        assert verify_signing(triangle_matroid, signing).ok


def test_traversal_rejects_non_walk(triangle_graph):
    with pytest.raises(InconsistentTraversal):
        traversal_directions(triangle_graph, fs("a", "b"), ("a", "b"))


def test_signing_from_k4_verifies(k4_graph, k4_matroid):
    signing = signing_from_oriented_graph(k4_graph)
    assert verify_signing(k4_matroid, signing).ok


def test_signing_from_graph_verifies_on_corpus():
    for name in ("k5", "k33", "w4", "w5", "prism"):
        g = corpus.named(name)
        m = cycle_matroid(g)
        assert verify_signing(m, signing_from_oriented_graph(g)).ok


def test_gauge_invariance(k4_graph, k4_matroid):
    signing = signing_from_oriented_graph(k4_graph)
    some_circuit = k4_matroid.circuits[0]
    flipped_c = dict(signing.c)
    flipped_c[some_circuit] = {e: -v for e, v in signing.c[some_circuit].items()}
    assert verify_signing(k4_matroid, Signing(flipped_c, signing.d)).ok
    some_bond = k4_matroid.cocircuits[0]
    flipped_d = dict(signing.d)
    flipped_d[some_bond] = {e: -v for e, v in signing.d[some_bond].items()}
    assert verify_signing(k4_matroid, Signing(signing.c, flipped_d)).ok


def test_find_signing_graphic_corpus():
    for name in ("k4", "k5", "k33", "w4", "prism"):
        m = cycle_matroid(corpus.named(name))
        signing = find_signing(m)
        assert signing is not None
        assert verify_signing(m, signing).ok


def test_find_signing_negative_instances():
    assert find_signing(corpus.u24()) is None
    assert find_signing(corpus.fano()) is None
    assert find_signing(corpus.fano_dual()) is None


def test_find_signing_gauge_fixed_and_first(triangle_matroid):
    signing = find_signing(triangle_matroid)
    o = fs("a", "b", "c")
    assert signing.c[o]["a"] == 1
    for b in triangle_matroid.cocircuits:
        assert signing.d[b][sorted(b)[0]] == 1
    assert verify_signing(triangle_matroid, signing).ok


def test_iter_signings_deterministic(triangle_matroid):
    first = [s.to_json_obj() for s in iter_signings(triangle_matroid)]
    second = [s.to_json_obj() for s in iter_signings(triangle_matroid)]
    assert first == second
    # row gauge leaves the per-edge reorientation freedom: 2 free edges
    assert len(first) == 4
    for obj in first:
        assert obj["c"]["a,b,c"]["a"] == 1


def test_signing_json_shape(triangle_matroid):
    signing = find_signing(triangle_matroid)
    obj = signing.to_json_obj()
    assert set(obj) == {"c", "d"}
    assert obj["c"]["a,b,c"]["a"] == 1
    assert "a,b" in obj["d"]
