"""Independent brute-force oracles for the test suite.

Everything here recomputes matroid/graph facts from first principles with
plain set arithmetic and exhaustive scans, deliberately avoiding the
library's bitmask code paths.
"""

from itertools import chain, combinations


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def independent(circuits, subset):
    subset = set(subset)
    return not any(set(c) <= subset for c in circuits)


def rank(circuits, subset):
    best = 0
    for cand in powerset(subset):
        if independent(circuits, cand):
            best = max(best, len(cand))
    return best


def bases(ground, circuits):
    ground = list(ground)
    r = rank(circuits, ground)
    return {
        frozenset(cand)
        for cand in combinations(ground, r)
        if independent(circuits, cand)
    }


def cocircuits(ground, circuits):
    """Minimal nonempty transversals of the base family, by full scan."""
    base_family = bases(ground, circuits)
    transversals = [
        frozenset(cand) for cand in powerset(ground)
        if cand and all(set(cand) & b for b in base_family)
    ]
    return {
        t for t in transversals
        if not any(o != t and o <= t for o in transversals)
    }


def minor_circuits(circuits, contract, delete):
    contract, delete = set(contract), set(delete)
    traces = {
        frozenset(set(c) - contract)
        for c in circuits
        if not set(c) & delete and set(c) - contract
    }
    return {t for t in traces if not any(o != t and o <= t for o in traces)}


def has_l_separation_below(ground, circuits, k):
    """Any l-separation with l < k, by scanning all bipartitions."""
    ground = list(ground)
    n = len(ground)
    total = rank(circuits, ground)
    for half in range(1, 1 << (n - 1)):
        side = [ground[i] for i in range(n) if (half << 1 | 1) >> i & 1]
        other = [g for g in ground if g not in side]
        if not other:
            continue
        lam = rank(circuits, side) + rank(circuits, other) - total
        if lam + 1 < k and lam + 1 <= min(len(side), len(other)):
            return True
    return False


def strong_elimination_holds(circuits):
    circuits = [frozenset(c) for c in circuits]
    for o1 in circuits:
        for o2 in circuits:
            if o1 == o2:
                continue
            for x in o1 & o2:
                for z in o1 - o2:
                    scope = (o1 | o2) - {x}
                    if not any(z in c and c <= scope for c in circuits):
                        return False
    return True


def walk_cycles(graph):
    """Edge sets of simple cycles, by closed-walk enumeration."""
    out = set()
    adjacency = {}
    for label, tail, head in graph.edges:
        if tail == head:
            out.add(frozenset((label,)))
            continue
        adjacency.setdefault(tail, []).append((label, head))
        adjacency.setdefault(head, []).append((label, tail))

    def extend(start, vertex, used_edges, used_vertices):
        for label, nxt in adjacency.get(vertex, ()):
            if label in used_edges:
                continue
            if nxt == start and len(used_edges) >= 1:
                out.add(frozenset(used_edges | {label}))
            elif nxt not in used_vertices:
                extend(start, nxt, used_edges | {label}, used_vertices | {nxt})

    for start in graph.vertices:
        extend(start, start, frozenset(), frozenset((start,)))
    return out


def graph_bonds(graph):
    """Minimal nonempty cuts over all vertex bipartitions."""
    verts = list(graph.vertices)
    cuts = set()
    for assignment in powerset(verts[1:]):
        side = set(assignment) | {verts[0]} if verts else set()
        cut = frozenset(
            label for label, tail, head in graph.edges
            if (tail in side) != (head in side)
        )
        if cut:
            cuts.add(cut)
    return {c for c in cuts if not any(o != c and o <= c for o in cuts)}
