"""Named test instances: standard graphs and small matroids.

Graph edge labels are derived from the endpoint names so that instances
serialize deterministically.  The matroid entries cover the classical
non-graphic obstructions.
"""

from __future__ import annotations

from .graph import Multigraph, cycle_matroid
from .matroid import build_matroid, dual_matroid


def complete_graph(names):
    names = tuple(names)
    edges = tuple(
        (f"{u}{v}", u, v)
        for i, u in enumerate(names) for v in names[i + 1:]
    )
    return Multigraph(names, edges)


def k4():
    return complete_graph("1234")


def k5():
    return complete_graph("12345")


def k33():
    left, right = "abc", "xyz"
    edges = tuple((f"{u}{v}", u, v) for u in left for v in right)
    return Multigraph(tuple(left + right), edges)


def wheel(n):
    """Hub plus an n-vertex rim; rim edges r1..rn, spokes s1..sn."""
    rim = tuple((f"r{i}", str(i), str(i % n + 1)) for i in range(1, n + 1))
    spokes = tuple((f"s{i}", "h", str(i)) for i in range(1, n + 1))
    return Multigraph(tuple(str(i) for i in range(1, n + 1)) + ("h",), rim + spokes)


def w4():
    return wheel(4)


def w5():
    return wheel(5)


def prism():
    tri1 = [("a1", "1", "2"), ("a2", "2", "3"), ("a3", "3", "1")]
    tri2 = [("b1", "4", "5"), ("b2", "5", "6"), ("b3", "6", "4")]
    rungs = [("m1", "1", "4"), ("m2", "2", "5"), ("m3", "3", "6")]
    return Multigraph(tuple("123456"), tuple(tri1 + tri2 + rungs))


def petersen():
    outer = [(f"o{i}", f"u{i}", f"u{i % 5 + 1}") for i in range(1, 6)]
    spokes = [(f"s{i}", f"u{i}", f"v{i}") for i in range(1, 6)]
    inner = [(f"p{i}", f"v{i}", f"v{(i + 1) % 5 + 1}") for i in range(1, 6)]
    verts = tuple(f"u{i}" for i in range(1, 6)) + tuple(f"v{i}" for i in range(1, 6))
    return Multigraph(verts, tuple(outer + spokes + inner))


def connected_graphs_up_to_4():
    """All connected simple graphs on at most 4 vertices, up to isomorphism."""
    def g(verts, pairs):
        return Multigraph(tuple(verts), tuple((f"{u}{v}", u, v) for u, v in pairs))

    return {
        "k1": Multigraph(("1",), ()),
        "k2": g("12", [("1", "2")]),
        "p3": g("123", [("1", "2"), ("2", "3")]),
        "c3": g("123", [("1", "2"), ("2", "3"), ("1", "3")]),
        "p4": g("1234", [("1", "2"), ("2", "3"), ("3", "4")]),
        "star4": g("1234", [("1", "2"), ("1", "3"), ("1", "4")]),
        "paw": g("1234", [("1", "2"), ("2", "3"), ("1", "3"), ("3", "4")]),
        "c4": g("1234", [("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")]),
        "diamond": g("1234", [("1", "2"), ("2", "3"), ("1", "3"), ("1", "4"), ("3", "4")]),
        "k4": k4(),
    }


def u24():
    labels = ["1", "2", "3", "4"]
    triples = [[a, b, c] for i, a in enumerate(labels)
               for j, b in enumerate(labels[i + 1:], i + 1)
               for c in labels[j + 1:]]
    return build_matroid(labels, triples)


FANO_LINES = (
    frozenset("123"), frozenset("145"), frozenset("167"),
    frozenset("246"), frozenset("257"), frozenset("347"), frozenset("356"),
)


def fano():
    points = [str(i) for i in range(1, 8)]
    circuits = [set(line) for line in FANO_LINES]
    circuits += [set(points) - set(line) for line in FANO_LINES]
    return build_matroid(points, circuits)


def fano_dual():
    return dual_matroid(fano())


def mk5_dual():
    return dual_matroid(cycle_matroid(k5()))


def mk33_dual():
    return dual_matroid(cycle_matroid(k33()))


CORPUS_GRAPHS = {
    "k4": k4,
    "k5": k5,
    "k33": k33,
    "w4": w4,
    "w5": w5,
    "prism": prism,
    "petersen": petersen,
}

CORPUS_MATROIDS = {
    "u24": u24,
    "fano": fano,
    "fano-dual": fano_dual,
    "mk5-dual": mk5_dual,
    "mk33-dual": mk33_dual,
}

# instances whose cycle matroids are 3-connected; the bridge machinery
# applies to these
THREE_CONNECTED_GRAPHS = ("k4", "k5", "k33", "w4", "w5", "prism", "petersen")


def named(name):
    """Look up a corpus instance by name (graph or matroid)."""
    if name in CORPUS_GRAPHS:
        return CORPUS_GRAPHS[name]()
    if name in CORPUS_MATROIDS:
        return CORPUS_MATROIDS[name]()
    small = connected_graphs_up_to_4()
    if name in small:
        return small[name]
    raise KeyError(name)


def corpus_names():
    names = list(CORPUS_GRAPHS) + list(CORPUS_MATROIDS)
    names += [n for n in connected_graphs_up_to_4() if n not in names]
    return tuple(sorted(set(names)))
