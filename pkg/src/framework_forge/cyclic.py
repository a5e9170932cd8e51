"""Linear and cyclic orders on finite sets.

A cyclic order is stored as its canonical rotation (minimal item first); the
direction of the stored sequence carries the orientation, so reversing gives
the other sense.  Orders on one or two items have an empty triple relation
and are valid by convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .errors import (
    AsymmetryViolation,
    CyclicityViolation,
    EmptySelection,
    NotASubset,
    SingletonOrder,
    TotalityViolation,
    TransitivityViolation,
    ValidationError,
)


def _canonical(seq):
    seq = tuple(seq)
    if len(seq) <= 1:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


@dataclass(frozen=True)
class CyclicOrder:
    items: tuple

    @classmethod
    def from_sequence(cls, seq):
        seq = tuple(seq)
        if len(set(seq)) != len(seq):
            raise ValidationError("items not distinct")
        return cls(_canonical(seq))

    def __len__(self):
        return len(self.items)

    def __contains__(self, item):
        return item in self.items

    def reversed(self):
        return CyclicOrder(_canonical(tuple(reversed(self.items))))

    def holds(self, a, b, c):
        """Whether [a, b, c] is in the triple relation."""
        seq = self.items
        if len({a, b, c}) != 3 or not {a, b, c} <= set(seq):
            return False
        n = len(seq)
        ia, ib, ic = seq.index(a), seq.index(b), seq.index(c)
        return (ib - ia) % n < (ic - ia) % n

    def triples(self):
        out = set()
        for a, b, c in permutations(self.items, 3):
            if self.holds(a, b, c):
                out.add((a, b, c))
        return out

    def successor(self, e):
        if len(self.items) < 2:
            raise SingletonOrder("no clockwise successor on fewer than 2 items")
        if e not in self.items:
            raise ValidationError(f"{e!r} not in the order")
        i = self.items.index(e)
        return self.items[(i + 1) % len(self.items)]

    def restrict(self, subset):
        subset = frozenset(subset)
        if not subset <= set(self.items):
            raise NotASubset(f"{sorted(subset)} not within the order")
        return CyclicOrder(_canonical(tuple(x for x in self.items if x in subset)))

    def to_json_obj(self):
        return list(self.items)


def validate_cyclic(triples, items=None):
    """Check the four cyclic-order axioms and realize the circular sequence.

    `triples` is a set of ordered triples; `items` may be supplied when the
    relation is empty (orders on at most two items).
    """
    triples = {tuple(t) for t in triples}
    found = set()
    for t in triples:
        if len(t) != 3 or len(set(t)) != 3:
            raise ValidationError(f"not an ordered triple of distinct items: {t}")
        found.update(t)
    if items is None:
        items = found
    items = frozenset(items)
    if not found <= items:
        raise NotASubset("triples mention items outside the given set")

    if len(items) <= 2:
        if triples:
            raise ValidationError("nonempty triple relation on fewer than 3 items")
        return CyclicOrder(_canonical(tuple(sorted(items))))

    for (a, b, c) in triples:
        if (b, c, a) not in triples:
            raise CyclicityViolation((a, b, c))
        if (c, b, a) in triples:
            raise AsymmetryViolation((a, b, c))
    for (a, b, c) in triples:
        for d in items:
            if d in (a, b, c):
                continue
            if (a, c, d) in triples and (a, b, d) not in triples:
                raise TransitivityViolation((a, b, c, d))
    # with cyclicity and asymmetry settled, one representative per
    # unordered triple decides totality
    for a, b, c in combinations(sorted(items), 3):
        if (a, b, c) not in triples and (c, b, a) not in triples:
            raise TotalityViolation((a, b, c))

    # realize: the clockwise successor of e is the unique g with [e,g,f] for
    # every other f; with the axioms verified, chaining successors visits
    # every item exactly once
    ordered = sorted(items)
    start = ordered[0]
    seq = [start]
    current = start
    for _ in range(len(items) - 1):
        nxt = None
        for g in ordered:
            if g in seq:
                continue
            if all(
                (current, g, f) in triples
                for f in items if f not in (current, g)
            ):
                nxt = g
                break
        if nxt is None:
            raise TransitivityViolation(tuple(seq))
        seq.append(nxt)
        current = nxt
    order = CyclicOrder(_canonical(tuple(seq)))
    if order.triples() != triples:
        raise TransitivityViolation(tuple(seq))
    return order


def clockwise_next(order, e):
    return order.successor(e)


def restrict_cyclic(order, subset):
    return order.restrict(subset)


def arc_components(order, selection):
    """Split the order along `selection`.

    Returns one entry per selected element e: the items strictly between e
    and the next selected element clockwise.  The intervals partition the
    complement of the selection.
    """
    selection = frozenset(selection)
    if not selection:
        raise EmptySelection("selection must be nonempty")
    if not selection <= set(order.items):
        raise NotASubset(f"{sorted(selection)} not within the order")
    seq = order.items
    n = len(seq)
    anchors = [x for x in seq if x in selection]
    out = []
    for anchor in anchors:
        i = seq.index(anchor)
        interval = []
        j = (i + 1) % n
        while seq[j] not in selection:
            interval.append(seq[j])
            j = (j + 1) % n
        out.append((anchor, tuple(interval)))
    return out


@dataclass(frozen=True)
class LinearOrder:
    items: tuple

    def __post_init__(self):
        if len(set(self.items)) != len(self.items):
            raise ValidationError("items not distinct")

    def __len__(self):
        return len(self.items)


def linear_order_path(order):
    """The path with one edge per item, vertices the initial segments.

    Start vertex is the empty segment, end vertex the whole order; the edge
    order along the path equals the linear order.
    """
    from .graph import Multigraph

    items = order.items if isinstance(order, LinearOrder) else tuple(order)
    if len(set(items)) != len(items):
        raise ValidationError("items not distinct")

    def seg_label(prefix):
        return "{" + ",".join(str(x) for x in prefix) + "}"

    vertices = [seg_label(items[:i]) for i in range(len(items) + 1)]
    edges = [
        (items[i], vertices[i], vertices[i + 1])
        for i in range(len(items))
    ]
    return Multigraph(tuple(vertices), tuple(edges))
