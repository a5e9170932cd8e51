from itertools import combinations

import pytest

from framework_forge import corpus
from framework_forge.errors import LabelMismatch, NotACut, NotAVertex
from framework_forge.framework import find_framework, framework_from_graph, restrict_framework
from framework_forge.graph import Multigraph, bonds, cycle_matroid, cycles, tree_path
from framework_forge.matroid import build_matroid, minor
from framework_forge.realize import (
    base_path,
    cocircuit_list,
    edge_endpoint_codes,
    realize,
    subspace_connectivity,
    verify_induces,
)


def fs(*labels):
    return frozenset(labels)


def test_cocircuit_list_order(k4_matroid):
    order = cocircuit_list(k4_matroid)
    sizes = [len(b) for b in order]
    assert sizes == sorted(sizes)
    assert order[0] == fs("12", "13", "14")


def test_codes_triangle(triangle_matroid, triangle_framework):
    # cocircuits in canonical order: {a,b}, {a,c}, {b,c}
    lo, hi = edge_endpoint_codes(triangle_matroid, triangle_framework, "a")
    differs = [i for i, (x, y) in enumerate(zip(lo.bits, hi.bits)) if x != y]
    assert differs == [0, 1]
    assert lo != hi


def test_codes_loop_and_coloop():
    loop = cycle_matroid(Multigraph(("1",), (("e", "1", "1"),)))
    fw = find_framework(loop)
    lo, hi = edge_endpoint_codes(loop, fw, "e")
    assert lo == hi
    coloop = build_matroid(["e"], [])
    fwc = find_framework(coloop)
    lo, hi = edge_endpoint_codes(coloop, fwc, "e")
    assert (lo.bits, hi.bits) == ((-1,), (1,))


def test_endpoint_loop_coherence(k4_matroid, k4_framework):
    for e in k4_matroid.ground:
        lo, hi = edge_endpoint_codes(k4_matroid, k4_framework, e)
        assert (lo == hi) == k4_matroid.is_circuit(fs(e))


def test_realize_triangle(triangle_matroid, triangle_framework):
    g = realize(triangle_matroid, triangle_framework)
    assert len(g.vertices) == 3 and len(g.edges) == 3
    assert verify_induces(triangle_matroid, g).ok


def test_realize_single_loop():
    m = cycle_matroid(Multigraph(("1",), (("e", "1", "1"),)))
    g = realize(m, find_framework(m))
    assert len(g.vertices) == 1
    lab, tail, head = g.edges[0]
    assert tail == head


def test_realize_k4_roundtrip(k4_matroid, k4_framework):
    g = realize(k4_matroid, k4_framework)
    assert len(g.vertices) == 4 and len(g.edges) == 6
    assert verify_induces(k4_matroid, g).ok


def test_roundtrip_whole_corpus():
    for name in ("k4", "k5", "k33", "w4", "w5", "prism",
                  "c3", "c4", "diamond", "paw", "p4", "star4", "k2"):
        g = corpus.named(name)
        m = cycle_matroid(g)
        fw = framework_from_graph(g)
        assert verify_induces(m, realize(m, fw)).ok, name


def test_realized_orthogonality(k4_matroid, k4_framework):
    g = realize(k4_matroid, k4_framework)
    for cycle in cycles(g):
        for bond in bonds(g):
            assert len(cycle & bond) != 1
            assert len(cycle & bond) % 2 == 0


def test_verify_induces_mismatch(triangle_matroid):
    path = Multigraph(("1", "2", "3", "4"),
                      (("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4")))
    report = verify_induces(triangle_matroid, path)
    assert not report.ok
    assert fs("a", "b", "c") in report.missing_circuits


def test_verify_induces_label_mismatch(triangle_matroid):
    with pytest.raises(LabelMismatch):
        verify_induces(triangle_matroid,
                       Multigraph(("1", "2"), (("z", "1", "2"),)))


def test_realize_minor_commutation(k4_matroid, k4_framework):
    for e in k4_matroid.ground:
        for contract in (True, False):
            c, d = ([e], []) if contract else ([], [e])
            mm = minor(k4_matroid, c, d)
            fm = restrict_framework(k4_matroid, k4_framework, c, d)
            assert verify_induces(mm, realize(mm, fm)).ok


def test_base_path_same_vertex(k4_matroid, k4_framework):
    g = realize(k4_matroid, k4_framework)
    v = g.vertices[0]
    assert base_path(k4_matroid, k4_framework, ("12", "13", "14"), v, v) == ()


def test_base_path_triangle(triangle_matroid, triangle_framework):
    g = realize(triangle_matroid, triangle_framework)
    lo, hi = None, None
    for lab, tail, head in g.edges:
        if lab == "c":
            lo, hi = tail, head
    path = base_path(triangle_matroid, triangle_framework, ("a", "b"), lo, hi)
    assert set(path) == {"a", "b"}
    oracle = tree_path(g, ("a", "b"), lo, hi)
    assert path == oracle


def test_base_path_star_base_through_hub(k4_matroid, k4_framework):
    g = realize(k4_matroid, k4_framework)
    ends = {lab: (tail, head) for lab, tail, head in g.edges}
    # leaf endpoints of two different spokes of the star base at vertex 1
    leaf_23, leaf_34 = ends["23"][0], ends["34"][1]
    path = base_path(k4_matroid, k4_framework,
                     ("12", "13", "14"), leaf_23, leaf_34)
    assert len(path) == 2
    assert path == tree_path(g, ("12", "13", "14"), leaf_23, leaf_34)


def test_base_path_rejects_foreign_vertex(k4_matroid, k4_framework):
    from framework_forge.realize import VertexCode
    fake = VertexCode(tuple([1] * len(cocircuit_list(k4_matroid))))
    g = realize(k4_matroid, k4_framework)
    if fake in g.vertices:
        fake = VertexCode(tuple([-1] * len(cocircuit_list(k4_matroid))))
    with pytest.raises(NotAVertex):
        base_path(k4_matroid, k4_framework, ("12", "13", "14"),
                  fake, g.vertices[0])


def test_base_path_matches_tree_path_everywhere(k4_matroid, k4_framework):
    g = realize(k4_matroid, k4_framework)
    for base in k4_matroid.bases:
        for v, w in combinations(g.vertices, 2):
            formula = base_path(k4_matroid, k4_framework, base, v, w)
            walk = tree_path(g, base, v, w)
            assert formula == walk, (sorted(base), v, w)


def test_subspace_reports(k4_matroid, k4_framework):
    base = {"12", "13", "14"}
    report = subspace_connectivity(k4_matroid, k4_framework, base)
    assert report.connected and report.spanning
    assert report.bond_criterion and report.spanning_criterion

    triangle = {"12", "13", "23"}
    report = subspace_connectivity(k4_matroid, k4_framework, triangle)
    assert report.connected and not report.spanning
    assert report.bond_criterion and not report.spanning_criterion

    split = {"12", "34"}
    report = subspace_connectivity(k4_matroid, k4_framework, split)
    assert not report.connected and not report.bond_criterion


def test_subspace_equivalences_sweep(k4_matroid, k4_framework):
    from itertools import chain
    ground = sorted(k4_matroid.ground)
    for r in range(1, len(ground) + 1):
        for subset in combinations(ground, r):
            report = subspace_connectivity(k4_matroid, k4_framework, subset)
            assert report.connected == report.bond_criterion
            assert report.spanning == report.spanning_criterion


def test_cut_decomposition_k33():
    g = corpus.k33()
    m = cycle_matroid(g)
    fw = framework_from_graph(g)
    star_a = fs("ax", "ay", "az")
    star_b = fs("bx", "by", "bz")
    report = subspace_connectivity(m, fw, set(), cut=star_a | star_b)
    assert set(report.cut_bonds) == {star_a, star_b}
    with pytest.raises(NotACut):
        subspace_connectivity(m, fw, set(), cut={"ax"})
