"""Bridges of a circuit and the partition-tree countability certificate.

For a circuit o of a 3-connected matroid m, contract a base s of m/o so
that o becomes a spanning circuit of m' = m/s; the non-loop edges of m'
off o are the bridges, and their endpoints subdivide the realized circle
of o.  Growing the bridge set from a seed yields the partition tree whose
good-node structure certifies that the circle's edges inject into the
tree's nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    CertificateFailure,
    Disconnected,
    NoBridge,
    NotABridge,
    NotACircuit,
    NotGraphic,
    NotThreeConnected,
    ValidationError,
)
from .cyclic import CyclicOrder
from .matroid import connectivity, is_connected, minor, set_key
from .framework import (
    derive_circuit_orders,
    find_framework,
    restrict_framework,
)
from .realize import realize


# ---------------------------------------------------------------------------
# realized circle of a spanning circuit
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CircleModel:
    """The circle of a spanning circuit: edges and vertices interleaved.

    vertices[i] is the endpoint shared by edges[i] and edges[i+1 mod n],
    so edge j runs from vertices[j-1] to vertices[j] around the circle.
    """

    edges: tuple
    vertices: tuple

    def vertex_position(self, v):
        return self.vertices.index(v)

    def edge_position(self, e):
        return self.edges.index(e)

    def arcs_without(self, removed):
        """Components of the circle minus a nonempty vertex set.

        Returns (anchor, edges, internal vertices) triples, one per removed
        vertex, anchored at the removed vertex that opens the arc clockwise.
        """
        n = len(self.edges)
        removed = set(removed)
        out = []
        for i, v in enumerate(self.vertices):
            if v not in removed:
                continue
            arc_edges = []
            arc_vertices = []
            j = (i + 1) % n
            while True:
                arc_edges.append(self.edges[j])
                if self.vertices[j] in removed:
                    break
                arc_vertices.append(self.vertices[j])
                j = (j + 1) % n
            out.append((v, tuple(arc_edges), tuple(arc_vertices)))
        return out

    def edges_between(self, x, y):
        """Edges strictly on the clockwise arc from vertex x to vertex y."""
        n = len(self.edges)
        i = self.vertex_position(x)
        j = self.vertex_position(y)
        out = []
        k = (i + 1) % n
        while True:
            out.append(self.edges[k])
            if k == j:
                break
            k = (k + 1) % n
        return frozenset(out)


def _circle_from_realization(graph, rotation):
    """Interleave circle vertices with the given edge rotation."""
    n = len(rotation)
    ends = {e: graph.endpoints(e) for e in rotation}
    if n == 1:
        (e,) = rotation
        tail, head = ends[e]
        if tail != head:
            raise ValidationError("single-edge circle must be a loop")
        return CircleModel(rotation, (tail,))
    if n == 2:
        e0, e1 = rotation
        shared = sorted(set(ends[e0]) & set(ends[e1]))
        if len(shared) != 2:
            raise ValidationError("2-circuit edges must be parallel")
        return CircleModel(rotation, (shared[0], shared[1]))
    vertices = []
    for i in range(n):
        a, b = rotation[i], rotation[(i + 1) % n]
        shared = set(ends[a]) & set(ends[b])
        if len(shared) != 1:
            raise ValidationError("circle rotation does not chain")
        vertices.append(next(iter(shared)))
    return CircleModel(rotation, tuple(vertices))


# ---------------------------------------------------------------------------
# bridge decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BridgeDecomposition:
    circuit: frozenset
    base_s: frozenset            # lexicographically least base of m/o
    contracted: object           # m' = m/s, with o spanning
    framework: object            # framework on m', restricted from m
    circle_order: object         # CyclicOrder on o
    circle: CircleModel
    bridges: frozenset
    loops_of_mprime: frozenset
    attachments: dict            # bridge -> (vertex, vertex) on the circle


def bridge_decomposition(m, o, framework=None):
    """Contract a base of m/o and read off bridges and their attachments."""
    o = frozenset(o)
    if not m.is_circuit(o):
        raise NotACircuit(f"{sorted(o)} is not a circuit")
    if not is_connected(m):
        raise Disconnected("bridge decomposition needs a connected matroid")

    over = minor(m, o, ())
    s = min(over.bases, key=set_key)
    m2 = minor(m, s, ())

    if framework is None:
        framework = find_framework(m)
        if framework is None:
            raise NotGraphic("no framework exists; cannot realize the circle")
    f2 = restrict_framework(m, framework, s, ())

    rest = frozenset(m2.ground) - o
    loops = frozenset(e for e in rest if m2.is_circuit(frozenset((e,))))
    bridges = rest - loops

    rotation = derive_circuit_orders(m2, f2)[o].items
    realized = realize(m2, f2)
    circle = _circle_from_realization(realized, rotation)

    circle_vertices = set(circle.vertices)
    attachments = {}
    for e in sorted(bridges):
        tail, head = realized.endpoints(e)
        if tail == head or tail not in circle_vertices or head not in circle_vertices:
            raise AssertionError(f"bridge {e!r} does not attach to the circle")
        attachments[e] = (tail, head)

    return BridgeDecomposition(
        circuit=o,
        base_s=frozenset(s),
        contracted=m2,
        framework=f2,
        circle_order=CyclicOrder(rotation),
        circle=circle,
        bridges=bridges,
        loops_of_mprime=loops,
        attachments=attachments,
    )


def _separates(decomposition, bridge, e, f):
    x, y = decomposition.attachments[bridge]
    side = decomposition.circle.edges_between(x, y)
    return (e in side) != (f in side)


def separating_bridge(m, o, e, f, decomposition=None, framework=None):
    """A bridge whose attachments separate e from f on the circle.

    Follows the constructive proof: pick g off {e, f} in the fundamental
    cocircuit of f with respect to the base s + o - e; fall back to a scan
    of all bridges.
    """
    o = frozenset(o)
    if e == f or e not in o or f not in o:
        raise ValidationError("need two distinct edges of the circuit")
    if not connectivity(m, 3).is_k_connected:
        raise NotThreeConnected("separating bridges need 3-connectedness")
    if decomposition is None:
        decomposition = bridge_decomposition(m, o, framework=framework)

    s_e = decomposition.base_s | (o - {e})
    base_mask = m.mask(s_e)
    if not m.is_base_mask(base_mask):
        raise AssertionError("s + o - e is not a base")
    b_f = m.labels(m.fundamental_cocircuit_mask(base_mask, m._index[f]))
    for g in sorted(b_f - {e, f}):
        if g in decomposition.bridges and _separates(decomposition, g, e, f):
            return g
    for g in sorted(decomposition.bridges):
        if _separates(decomposition, g, e, f):
            return g
    raise NoBridge(f"no bridge separates {e!r} from {f!r}")


# ---------------------------------------------------------------------------
# partition tree
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TreeNode:
    level: int
    anchor: object               # removed vertex opening the arc
    edges: frozenset
    internal_vertices: frozenset


@dataclass(frozen=True)
class TreeLevel:
    bridges: frozenset           # I_n
    attachment_vertices: frozenset  # J_n
    nodes: tuple                 # K_n, in circle order


@dataclass
class PartitionTree:
    decomposition: BridgeDecomposition
    seed: str                    # e_0
    levels: list
    good_flags: dict | None = None

    @property
    def depth(self):
        return len(self.levels) - 1

    def node_of_edge(self, level, e):
        for node in self.levels[level].nodes:
            if e in node.edges:
                return node
        raise AssertionError(f"edge {e!r} not covered at level {level}")

    def parent(self, node):
        if node.level == 0:
            return None
        for cand in self.levels[node.level - 1].nodes:
            if node.edges <= cand.edges:
                return cand
        raise AssertionError("node has no parent")

    def children(self, node):
        if node.level + 1 > self.depth:
            return ()
        return tuple(
            child for child in self.levels[node.level + 1].nodes
            if child.edges <= node.edges
        )


def partition_tree(m, o, e0=None, framework=None):
    """Grow I_n from the seed bridge until every bridge is absorbed."""
    o = frozenset(o)
    if not connectivity(m, 3).is_k_connected:
        raise NotThreeConnected("partition trees need a 3-connected matroid")
    dec = bridge_decomposition(m, o, framework=framework)
    if not dec.bridges:
        raise NotABridge(f"circuit {sorted(o)} has no bridges")
    if e0 is None:
        e0 = min(dec.bridges)
    if e0 not in dec.bridges:
        raise NotABridge(f"{e0!r} is not a bridge of {sorted(o)}")

    circle = dec.circle
    levels = []
    current = frozenset((e0,))
    for _ in range(len(dec.bridges) + 2):
        j = frozenset(v for b in current for v in dec.attachments[b])
        nodes = tuple(
            TreeNode(len(levels), anchor, frozenset(edges), frozenset(internal))
            for anchor, edges, internal in circle.arcs_without(j)
        )
        levels.append(TreeLevel(current, j, nodes))
        arc_of = {}
        for node in nodes:
            for v in node.internal_vertices:
                arc_of[v] = node
        grown = set(current)
        for b in dec.bridges - current:
            x, y = dec.attachments[b]
            if x in j or y in j or arc_of[x] is not arc_of[y]:
                grown.add(b)
        grown = frozenset(grown)
        if grown == current:
            break
        current = grown
    else:
        raise CertificateFailure("bridge recursion failed to stabilize")

    if current != dec.bridges:
        raise CertificateFailure(
            "not every bridge was absorbed; is the matroid really 3-connected?")
    return PartitionTree(dec, e0, levels)


# ---------------------------------------------------------------------------
# countability certificate
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertificateReport:
    ok: bool
    injection: dict              # edge of o -> (level, arc edge set)
    good_flags: dict             # (level, arc edge set) -> bool
    max_level_checked: int


def _node_at(tree, level, e):
    """Arc containing e at a possibly virtual level (tree repeats past depth)."""
    return tree.node_of_edge(min(level, tree.depth), e)


def _good(tree, level, node):
    """Goodness at depth >= 2: no current bridge joins the two closed arcs
    of the grandparent minus the node.  Depth < 2 is good by convention."""
    if level < 2:
        return True
    dec = tree.decomposition
    circle = dec.circle

    # ancestors through virtual levels: parent of a node past the stored
    # depth is the node itself
    def parent_at(nd, lv):
        return tree.parent(nd) if lv <= tree.depth else nd

    parent = parent_at(node, level)
    grand = parent_at(parent, level - 1)
    if grand.edges == node.edges:
        return True  # nothing remains of the grandparent

    nverts = len(circle.vertices)
    pos = {v: i for i, v in enumerate(circle.vertices)}

    def bounds(nd):
        # positions of the removed vertices opening and closing the arc
        start = pos[nd.anchor]
        end = (start + len(nd.edges)) % nverts
        return start, end

    g_start, g_end = bounds(grand)
    k_start, k_end = bounds(node)

    def interval(a, b):
        # closed vertex interval from position a to position b clockwise
        out = set()
        i = a
        while True:
            out.add(circle.vertices[i])
            if i == b:
                break
            i = (i + 1) % nverts
        return out

    pieces = []
    if k_start != g_start:
        pieces.append(interval(g_start, k_start))
    if k_end != g_end:
        pieces.append(interval(k_end, g_end))
    if len(pieces) < 2:
        return True

    bridges_now = tree.levels[min(level, tree.depth)].bridges
    for b in bridges_now:
        x, y = dec.attachments[b]
        if (x in pieces[0] and y in pieces[1]) or (x in pieces[1] and y in pieces[0]):
            return False
    return True


def countability_certificate(tree):
    """Check the good-node structure and build the edge-to-node injection.

    Verifies that every node has at most one good child and that each
    node's child count matches its new attachment vertices, then maps every
    circle edge to the first depth-two-or-deeper node from which its ray
    stays good.  The map must be injective with one node per edge.
    """
    dec = tree.decomposition
    top = tree.depth + 2  # two virtual levels suffice: beyond them the
    # grandparent equals the node itself and goodness is automatic

    flags = {}
    for level in range(top + 1):
        for node in tree.levels[min(level, tree.depth)].nodes:
            flags[(level, node.edges)] = _good(tree, level, node)

    # every node has at most one good child; goodness is only meaningful
    # from depth 2 on, so depth-1 children are exempt
    for level in range(tree.depth):
        nxt = level + 1
        for node in tree.levels[level].nodes:
            children = tree.children(node)
            new_inside = sum(
                1 for v in tree.levels[nxt].attachment_vertices
                if v in node.internal_vertices
            )
            if len(children) != new_inside + 1:
                raise CertificateFailure(
                    f"child count {len(children)} != {new_inside + 1}", node)
            if nxt < 2:
                continue
            good_children = [
                c for c in children if flags[(nxt, c.edges)]
            ]
            if len(good_children) > 1:
                raise CertificateFailure("two good children", node)

    injection = {}
    for e in sorted(dec.circuit):
        last_bad = None
        for level in range(2, top + 1):
            node = _node_at(tree, level, e)
            if not flags[(level, node.edges)]:
                last_bad = level
        start = 2 if last_bad is None else last_bad + 1
        if start > top:
            raise CertificateFailure(f"no all-good suffix for edge {e!r}")
        node = _node_at(tree, start, e)
        injection[e] = (start, node.edges)

    images = set(injection.values())
    if len(images) != len(dec.circuit):
        raise CertificateFailure("edge-to-node map is not injective")

    tree.good_flags = flags
    return CertificateReport(True, injection, flags, top)
