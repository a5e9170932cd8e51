"""Multigraphs with labeled, oriented edges.

Edges are (label, tail, head) triples; the stored endpoint order is the
edge's orientation.  Loops are allowed.  Cycle and bond enumeration are
exhaustive (subset scan / shore scan), exact at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LabelMismatch, ValidationError
from .matroid import build_matroid, set_key, DEFAULT_CAP


@dataclass(frozen=True)
class Multigraph:
    vertices: tuple
    edges: tuple  # (label, tail, head)

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise ValidationError("duplicate vertices")
        labels = [e[0] for e in self.edges]
        if len(set(labels)) != len(labels):
            raise ValidationError("duplicate edge labels")
        for label, tail, head in self.edges:
            if tail not in vset or head not in vset:
                raise ValidationError(f"edge {label!r} has unknown endpoint")

    def edge_labels(self):
        return tuple(e[0] for e in self.edges)

    def endpoints(self, label):
        for lab, tail, head in self.edges:
            if lab == label:
                return tail, head
        raise ValidationError(f"unknown edge {label!r}")

    def incident(self, vertex):
        return tuple(
            lab for lab, tail, head in self.edges if vertex in (tail, head)
        )


def components(graph, edge_labels=None, all_vertices=True):
    """Connected components as frozensets of vertices.

    With `edge_labels` given, only those edges join; with `all_vertices`
    false, only vertices touched by the chosen edges appear.
    """
    chosen = set(graph.edge_labels() if edge_labels is None else edge_labels)
    adj = {}
    touched = set()
    for lab, tail, head in graph.edges:
        if lab not in chosen:
            continue
        adj.setdefault(tail, set()).add(head)
        adj.setdefault(head, set()).add(tail)
        touched.update((tail, head))
    verts = list(graph.vertices) if all_vertices else [
        v for v in graph.vertices if v in touched
    ]
    seen = set()
    out = []
    for v in verts:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        out.append(frozenset(comp))
    return tuple(out)


def is_connected(graph):
    return len(components(graph)) <= 1


def cycles(graph):
    """Edge sets of simple closed walks: connected, every degree exactly 2."""
    edges = graph.edges
    n = len(edges)
    out = []
    for mask in range(1, 1 << n):
        degree = {}
        for i in range(n):
            if mask >> i & 1:
                lab, tail, head = edges[i]
                degree[tail] = degree.get(tail, 0) + 1
                degree[head] = degree.get(head, 0) + 1
        if any(d != 2 for d in degree.values()):
            continue
        chosen = [edges[i][0] for i in range(n) if mask >> i & 1]
        if len(components(graph, chosen, all_vertices=False)) == 1:
            out.append(frozenset(chosen))
    return tuple(sorted(out, key=set_key))


def bonds(graph):
    """Minimal nonempty edge cuts, by scanning vertex bipartitions."""
    verts = graph.vertices
    nv = len(verts)
    if nv == 0:
        return ()
    index = {v: i for i, v in enumerate(verts)}
    cut_masks = set()
    ne = len(graph.edges)
    for half in range(1 << (nv - 1)):
        side = (half << 1) | 1
        cut = 0
        for i, (lab, tail, head) in enumerate(graph.edges):
            if (side >> index[tail] & 1) != (side >> index[head] & 1):
                cut |= 1 << i
        if cut:
            cut_masks.add(cut)
    minimal = [
        c for c in cut_masks
        if not any(o != c and (o & c) == o for o in cut_masks)
    ]
    labels = graph.edge_labels()
    out = [
        frozenset(labels[i] for i in range(ne) if c >> i & 1)
        for c in minimal
    ]
    return tuple(sorted(out, key=set_key))


def cycle_matroid(graph, cap=DEFAULT_CAP):
    """The cycle matroid; its cocircuits are checked against the bonds."""
    circuit_family = cycles(graph)
    m = build_matroid(graph.edge_labels(), circuit_family, cap=cap)
    if m.cocircuits != bonds(graph):
        raise AssertionError("cocircuits of the cycle matroid differ from the graph bonds")
    return m


def tree_path(graph, tree_edges, start, goal):
    """Ordered edge labels of the unique start-goal path inside a forest."""
    tree_edges = set(tree_edges)
    if start == goal:
        return ()
    adj = {}
    for lab, tail, head in graph.edges:
        if lab not in tree_edges or tail == head:
            continue
        adj.setdefault(tail, []).append((lab, head))
        adj.setdefault(head, []).append((lab, tail))
    pred = {start: None}
    frontier = [start]
    while frontier and goal not in pred:
        nxt = []
        for v in frontier:
            for lab, w in adj.get(v, ()):
                if w not in pred:
                    pred[w] = (lab, v)
                    nxt.append(w)
        frontier = nxt
    if goal not in pred:
        raise ValidationError("no path inside the given forest")
    path = []
    v = goal
    while pred[v] is not None:
        lab, u = pred[v]
        path.append(lab)
        v = u
    return tuple(reversed(path))


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def vertex_names(graph):
    """Deterministic v0..vk names by first occurrence in edge order."""
    names = {}
    for lab, tail, head in graph.edges:
        for v in (tail, head):
            if v not in names:
                names[v] = f"v{len(names)}"
    for v in graph.vertices:
        if v not in names:
            names[v] = f"v{len(names)}"
    return names


def to_dot(graph, name="G", vertex_labeler=None):
    names = vertex_names(graph)
    lines = [f"graph {name} {{"]
    for v in sorted(names, key=names.get):
        label = vertex_labeler(v) if vertex_labeler else str(v)
        lines.append(f'  {names[v]} [label="{label}"];')
    for lab, tail, head in graph.edges:
        lines.append(f'  {names[tail]} -- {names[head]} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_obj(graph):
    names = vertex_names(graph)
    return {
        "vertices": [names[v] for v in sorted(names, key=names.get)],
        "edges": [[lab, names[tail], names[head]] for lab, tail, head in graph.edges],
    }


def graph_from_json_obj(obj):
    try:
        vertices = tuple(str(v) for v in obj["vertices"])
        edges = tuple((str(l), str(t), str(h)) for l, t, h in obj["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise LabelMismatch(f"bad multigraph object: {exc}") from exc
    return Multigraph(vertices, edges)
