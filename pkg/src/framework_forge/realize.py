"""Rebuilding a graph from a matroid with a framework.

Vertices are +-1 codes over the canonical cocircuit list; the two endpoint
codes of an edge e agree with sigma off the cocircuits through e and differ
(by the d values) on them.  Only codes that actually occur as endpoints are
materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

from .errors import LabelMismatch, NotAVertex, NotConnected, NotACut
from .matroid import binary_tame_report, is_connected, set_key
from . import graph as graphmod


def cocircuit_list(m):
    """Canonical cocircuit order: by size, then lexicographically."""
    return tuple(sorted(m.cocircuits, key=lambda b: (len(b), set_key(b))))


@dataclass(frozen=True, order=True)
class VertexCode:
    bits: tuple  # +-1 per cocircuit, in cocircuit_list order

    def bitstring(self):
        return "".join("+" if v > 0 else "-" for v in self.bits)

    def __repr__(self):
        return f"VertexCode({self.bitstring()!r})"


def edge_endpoint_codes(m, framework, e, cocircuits=None):
    """The pair (iota_e(0), iota_e(1)); equal exactly when e is a loop."""
    cocircuits = cocircuits or cocircuit_list(m)
    lo, hi = [], []
    for b in cocircuits:
        if e in b:
            d = framework.signing.d[b][e]
            lo.append(-d)
            hi.append(d)
        else:
            s = framework.sigma[b][e]
            lo.append(s)
            hi.append(s)
    return VertexCode(tuple(lo)), VertexCode(tuple(hi))


def realize(m, framework):
    """The finite realized graph: one vertex per occurring endpoint code."""
    cocircuits = cocircuit_list(m)
    vertices = []
    seen = set()
    edges = []
    for e in m.ground:
        lo, hi = edge_endpoint_codes(m, framework, e, cocircuits)
        for code in (lo, hi):
            if code not in seen:
                seen.add(code)
                vertices.append(code)
        edges.append((e, lo, hi))
    return graphmod.Multigraph(tuple(vertices), tuple(edges))


@dataclass(frozen=True)
class InducesReport:
    ok: bool
    missing_circuits: tuple = ()
    extra_circuits: tuple = ()
    missing_cocircuits: tuple = ()
    extra_cocircuits: tuple = ()


def verify_induces(m, graph):
    """Does the graph's cycle/bond structure match m exactly?"""
    if set(graph.edge_labels()) != set(m.ground):
        raise LabelMismatch("edge labels differ from the ground set")
    graph_circuits = set(graphmod.cycles(graph))
    graph_bonds = set(graphmod.bonds(graph))
    circuits = set(m.circuits)
    cocircuits = set(m.cocircuits)
    report = InducesReport(
        ok=(graph_circuits == circuits and graph_bonds == cocircuits),
        missing_circuits=tuple(sorted(circuits - graph_circuits, key=set_key)),
        extra_circuits=tuple(sorted(graph_circuits - circuits, key=set_key)),
        missing_cocircuits=tuple(sorted(cocircuits - graph_bonds, key=set_key)),
        extra_cocircuits=tuple(sorted(graph_bonds - cocircuits, key=set_key)),
    )
    return report


def base_path(m, framework, base, v, w):
    """Tree path between realized vertices, read off the fundamental cocircuits.

    The path consists of the base edges whose fundamental cocircuit separates
    v from w, ordered away from v; the graph-walk path must agree.
    """
    if not is_connected(m):
        raise NotConnected("matroid is not connected")
    base = frozenset(base)
    realized = realize(m, framework)
    if v not in realized.vertices or w not in realized.vertices:
        raise NotAVertex("endpoint is not a realized vertex")
    cocircuits = cocircuit_list(m)
    index = {b: i for i, b in enumerate(cocircuits)}
    base_mask = m.mask(base)

    separating = []
    cocircuit_of = {}
    for e in base:
        b = m.labels(m.fundamental_cocircuit_mask(base_mask, m._index[e]))
        cocircuit_of[e] = b
        if v.bits[index[b]] != w.bits[index[b]]:
            separating.append(e)

    def side_of(e, other):
        # side of `other` w.r.t. the fundamental cocircuit of e; the base
        # meets that cocircuit only in e, so `other` never lies on it
        return framework.sigma[cocircuit_of[e]][other]

    def cmp(e, f):
        if e == f:
            return 0
        # e <= f iff e lies on the same side of b_f as v
        return -1 if side_of(f, e) == v.bits[index[cocircuit_of[f]]] else 1

    ordered = tuple(sorted(separating, key=cmp_to_key(cmp)))
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            if cmp(ordered[i], ordered[j]) != -1 or cmp(ordered[j], ordered[i]) != 1:
                raise AssertionError("separation relation is not a linear order")
    return ordered


@dataclass(frozen=True)
class SubspaceReport:
    connected: bool
    bond_criterion: bool
    spanning: bool
    spanning_criterion: bool
    m_connected: bool
    cut_bonds: tuple | None


def subspace_connectivity(m, framework, edge_set, cut=None):
    """Connectivity facts about the realized subgraph on `edge_set`.

    Reports both sides of the two equivalences (subgraph connectivity vs the
    bond criterion; matroid spanning vs component matching) and, when `cut`
    is supplied, its decomposition into disjoint bonds.
    """
    edge_set = frozenset(edge_set)
    realized = realize(m, framework)
    cocircuits = cocircuit_list(m)
    index = {b: i for i, b in enumerate(cocircuits)}

    comps_touched = graphmod.components(realized, edge_set, all_vertices=False)
    connected = len(comps_touched) <= 1

    touched_vertices = set()
    for lab, tail, head in realized.edges:
        if lab in edge_set:
            touched_vertices.update((tail, head))
    bond_criterion = True
    for b in m.cocircuits:
        i = index[b]
        sides = {code.bits[i] for code in touched_vertices}
        if len(sides) == 2 and not (b & edge_set):
            bond_criterion = False
            break

    spanning = m.rank(edge_set) == m.rank()
    sub_comps = frozenset(graphmod.components(realized, edge_set, all_vertices=True))
    full_comps = frozenset(graphmod.components(realized))
    spanning_criterion = sub_comps == full_comps

    cut_bonds = None
    if cut is not None:
        cut_set = frozenset(cut)
        for o in m.circuits:
            if len(o & cut_set) % 2 == 1:
                raise NotACut(o)
        cut_bonds = binary_tame_report(m, even_set=cut_set).decomposition

    return SubspaceReport(
        connected=connected,
        bond_criterion=bond_criterion,
        spanning=spanning,
        spanning_criterion=spanning_criterion,
        m_connected=is_connected(m),
        cut_bonds=cut_bonds,
    )
