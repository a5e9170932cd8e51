"""Plus/minus-one signings of circuits and cocircuits.

A signing assigns c_o(e) on every circuit and d_b(e) on every cocircuit so
that sum over o-cap-b of c_o(e)*d_b(e) vanishes for every pair.  Existence
is equivalent to regularity, so the exhaustive search below doubles as a
regularity test at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    DomainMismatch,
    InconsistentBondSides,
    InconsistentTraversal,
)
from .matroid import set_key
from . import graph as graphmod


def row_key(labels):
    """Serialization key for a circuit or cocircuit row."""
    return ",".join(sorted(labels))


@dataclass(frozen=True)
class Signing:
    c: dict  # frozenset circuit -> {label: +-1}
    d: dict  # frozenset cocircuit -> {label: +-1}

    def to_json_obj(self):
        return {
            "c": {
                row_key(o): {e: v for e, v in sorted(row.items())}
                for o, row in sorted(self.c.items(), key=lambda kv: set_key(kv[0]))
            },
            "d": {
                row_key(b): {e: v for e, v in sorted(row.items())}
                for b, row in sorted(self.d.items(), key=lambda kv: set_key(kv[0]))
            },
        }


@dataclass(frozen=True)
class SigningReport:
    ok: bool
    violation: tuple | None  # (circuit, cocircuit, integer sum)


def _check_domains(m, signing):
    circuits = set(m.circuits)
    cocircuits = set(m.cocircuits)
    if set(signing.c) != circuits or set(signing.d) != cocircuits:
        raise DomainMismatch("signing rows do not match the circuit/cocircuit families")
    for o, row in signing.c.items():
        if set(row) != set(o) or any(v not in (-1, 1) for v in row.values()):
            raise DomainMismatch(f"bad circuit row {row_key(o)}")
    for b, row in signing.d.items():
        if set(row) != set(b) or any(v not in (-1, 1) for v in row.values()):
            raise DomainMismatch(f"bad cocircuit row {row_key(b)}")


def verify_signing(m, signing):
    """Check the orthogonality identity on every circuit-cocircuit pair."""
    _check_domains(m, signing)
    for o in m.circuits:
        for b in m.cocircuits:
            common = o & b
            if not common:
                continue
            total = sum(signing.c[o][e] * signing.d[b][e] for e in common)
            if total != 0:
                return SigningReport(False, (o, b, total))
    return SigningReport(True, None)


# ---------------------------------------------------------------------------
# extraction from an oriented graph
# ---------------------------------------------------------------------------

def traversal_directions(graph, circuit, walk):
    """Resolve a closed edge walk into per-edge directions.

    `walk` lists the circuit's edge labels in traversal order; the first
    edge is taken forward (tail to head) unless only the reversed sense
    chains up.  Returns {label: +1 forward / -1 backward}.
    """
    walk = tuple(walk)
    if set(walk) != set(circuit) or len(walk) != len(circuit):
        raise InconsistentTraversal(
            f"walk {walk} does not traverse circuit {sorted(circuit)} exactly once"
        )
    if len(walk) == 1:
        tail, head = graph.endpoints(walk[0])
        if tail != head:
            raise InconsistentTraversal(f"single-edge walk on non-loop {walk[0]!r}")
        return {walk[0]: 1}

    def chain(first_forward):
        directions = {}
        tail, head = graph.endpoints(walk[0])
        if not first_forward:
            tail, head = head, tail
        directions[walk[0]] = 1 if first_forward else -1
        at = head
        start = tail
        for lab in walk[1:]:
            t, h = graph.endpoints(lab)
            if t == at:
                directions[lab] = 1
                at = h
            elif h == at:
                directions[lab] = -1
                at = t
            else:
                return None
        return directions if at == start else None

    for sense in (True, False):
        directions = chain(sense)
        if directions is not None:
            return directions
    raise InconsistentTraversal(f"walk {walk} does not chain into a closed walk")


def default_circuit_walks(graph, circuit_family):
    """Deterministic traversal per circuit: start at the least edge, forward."""
    walks = {}
    for o in circuit_family:
        labels = sorted(o)
        if len(labels) == 1:
            walks[o] = (labels[0],)
            continue
        start = labels[0]
        tail, head = graph.endpoints(start)
        walk = [start]
        used = {start}
        at = head
        while len(walk) < len(labels):
            for lab in sorted(o):
                if lab in used:
                    continue
                t, h = graph.endpoints(lab)
                if t == at:
                    walk.append(lab)
                    used.add(lab)
                    at = h
                    break
                if h == at:
                    walk.append(lab)
                    used.add(lab)
                    at = t
                    break
            else:
                raise InconsistentTraversal(f"{sorted(o)} is not a closed walk")
        walks[o] = tuple(walk)
    return walks


def default_bond_sides(graph, bond_family):
    """Deterministic (U, V) shores per bond.

    U is the component (after removing the bond) containing the tail of the
    bond's least edge; V collects every other vertex.
    """
    sides = {}
    all_labels = set(graph.edge_labels())
    for b in bond_family:
        rest = all_labels - set(b)
        comps = graphmod.components(graph, rest, all_vertices=True)
        least = sorted(b)[0]
        tail, _head = graph.endpoints(least)
        u = next(comp for comp in comps if tail in comp)
        v = frozenset(set(graph.vertices) - u)
        sides[b] = (u, v)
    return sides


def check_bond_sides(graph, bond, u, v):
    u, v = frozenset(u), frozenset(v)
    if u & v or (u | v) != set(graph.vertices):
        raise InconsistentBondSides(
            f"sides of {sorted(bond)} do not partition the vertices"
        )
    crossing = {
        lab for lab, tail, head in graph.edges
        if (tail in u) != (head in u)
    }
    if crossing != set(bond):
        raise InconsistentBondSides(
            f"sides of {sorted(bond)} cut {sorted(crossing)} instead"
        )
    return u, v


def signing_from_oriented_graph(graph, circuit_orientations=None, bond_orientations=None):
    """Signing read off from edge orientations.

    c_o(e) is +1 when the traversal of o passes e tail-to-head; d_b(e) is +1
    when e crosses b out of the designated U side.
    """
    m = graphmod.cycle_matroid(graph)
    circuit_family = m.circuits
    bond_family = m.cocircuits
    walks = dict(default_circuit_walks(graph, circuit_family))
    if circuit_orientations:
        for o, walk in circuit_orientations.items():
            walks[frozenset(o)] = tuple(walk)
    sides = dict(default_bond_sides(graph, bond_family))
    if bond_orientations:
        for b, (u, v) in bond_orientations.items():
            sides[frozenset(b)] = (frozenset(u), frozenset(v))

    c = {}
    for o in circuit_family:
        c[o] = traversal_directions(graph, o, walks[o])
    d = {}
    for b in bond_family:
        u, v = check_bond_sides(graph, b, *sides[b])
        row = {}
        for lab in b:
            tail, _head = graph.endpoints(lab)
            row[lab] = 1 if tail in u else -1
        d[b] = row
    return Signing(c, d)


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

class _UnsatisfiableError(Exception):
    pass


class _SignSearch:
    """DPLL over the +-1 entries with gauge fixing and unit propagation.

    Variables are ordered circuits before cocircuits, elements in label
    order; the first entry of every row is pinned to +1 (row flips are
    symmetries of the identity).  Propagation works per circuit-cocircuit
    pair: once the undetermined products of a pair must all take one sign
    to reach zero, they are forced, and a forced product with one known
    factor forces the other factor.
    """

    def __init__(self, m):
        self.vars = []          # (kind, row frozenset, element)
        self.var_id = {}
        circuits = m.circuits
        cocircuits = m.cocircuits
        for o in circuits:
            for e in sorted(o):
                self.var_id[("c", o, e)] = len(self.vars)
                self.vars.append(("c", o, e))
        for b in cocircuits:
            for e in sorted(b):
                self.var_id[("d", b, e)] = len(self.vars)
                self.vars.append(("d", b, e))

        self.pairs = []  # list of dicts: terms, state
        self.terms_of_var = [[] for _ in self.vars]
        self.impossible = False
        for o in circuits:
            for b in cocircuits:
                common = o & b
                if not common:
                    continue
                if len(common) % 2 == 1:
                    self.impossible = True
                    return
                pair_id = len(self.pairs)
                terms = []
                for e in sorted(common):
                    ci = self.var_id[("c", o, e)]
                    di = self.var_id[("d", b, e)]
                    term_id = (pair_id, len(terms))
                    terms.append([ci, di, None])  # None: product not forced
                    self.terms_of_var[ci].append(term_id)
                    self.terms_of_var[di].append(term_id)
                self.pairs.append({"terms": terms, "sum": 0, "open": len(terms)})

        self.assign = [0] * len(self.vars)  # 0 unknown, else +-1
        self.pinned = []
        for o in circuits:
            self.pinned.append(self.var_id[("c", o, sorted(o)[0])])
        for b in cocircuits:
            self.pinned.append(self.var_id[("d", b, sorted(b)[0])])

    # --- propagation machinery ---

    def _set_var(self, idx, value, trail):
        current = self.assign[idx]
        if current != 0:
            if current != value:
                raise _UnsatisfiableError
            return
        self.assign[idx] = value
        trail.append(("var", idx))
        for pair_id, t_idx in self.terms_of_var[idx]:
            pair = self.pairs[pair_id]
            term = pair["terms"][t_idx]
            ci, di, forced = term
            a, b = self.assign[ci], self.assign[di]
            if a != 0 and b != 0:
                product = a * b
                if forced is not None:
                    if forced != product:
                        raise _UnsatisfiableError
                    # already counted when forced
                    continue
                term[2] = product
                trail.append(("term", pair_id, t_idx))
                pair["sum"] += product
                pair["open"] -= 1
                trail.append(("pair", pair_id, product))
                self._check_pair(pair_id, trail)
            elif forced is not None:
                # one factor just arrived; force the other
                other = di if idx == ci else ci
                self._set_var(other, forced * value, trail)

    def _force_product(self, pair_id, t_idx, product, trail):
        pair = self.pairs[pair_id]
        term = pair["terms"][t_idx]
        ci, di, forced = term
        if forced is not None:
            if forced != product:
                raise _UnsatisfiableError
            return
        a, b = self.assign[ci], self.assign[di]
        if a != 0 and b != 0:
            if a * b != product:
                raise _UnsatisfiableError
            return
        term[2] = product
        trail.append(("term", pair_id, t_idx))
        pair["sum"] += product
        pair["open"] -= 1
        trail.append(("pair", pair_id, product))
        if a != 0:
            self._set_var(di, product * a, trail)
        elif b != 0:
            self._set_var(ci, product * b, trail)
        self._check_pair(pair_id, trail)

    def _check_pair(self, pair_id, trail):
        pair = self.pairs[pair_id]
        total, open_terms = pair["sum"], pair["open"]
        if abs(total) > open_terms:
            raise _UnsatisfiableError
        if open_terms and abs(total) == open_terms:
            sign = -1 if total > 0 else 1
            for t_idx, term in enumerate(pair["terms"]):
                if term[2] is None:
                    self._force_product(pair_id, t_idx, sign, trail)

    def _undo(self, trail, mark):
        while len(trail) > mark:
            entry = trail.pop()
            if entry[0] == "var":
                self.assign[entry[1]] = 0
            elif entry[0] == "term":
                self.pairs[entry[1]]["terms"][entry[2]][2] = None
            else:
                pair = self.pairs[entry[1]]
                pair["sum"] -= entry[2]
                pair["open"] += 1

    # --- enumeration ---

    def solutions(self):
        if self.impossible:
            return
        trail = []
        try:
            for idx in self.pinned:
                self._set_var(idx, 1, trail)
        except _UnsatisfiableError:
            return
        yield from self._branch(0, trail)

    def _branch(self, start, trail):
        idx = start
        while idx < len(self.vars) and self.assign[idx] != 0:
            idx += 1
        if idx == len(self.vars):
            yield tuple(self.assign)
            return
        for value in (1, -1):
            mark = len(trail)
            try:
                self._set_var(idx, value, trail)
            except _UnsatisfiableError:
                self._undo(trail, mark)
                continue
            yield from self._branch(idx + 1, trail)
            self._undo(trail, mark)


def iter_signings(m):
    """All gauge-fixed signings, lexicographically (+1 before -1)."""
    search = _SignSearch(m)
    for assignment in search.solutions():
        c = {o: {} for o in m.circuits}
        d = {b: {} for b in m.cocircuits}
        for (kind, row, e), value in zip(search.vars, assignment):
            (c if kind == "c" else d)[row][e] = value
        yield Signing(c, d)


def find_signing(m):
    """First gauge-fixed signing, or None after exhausting the search."""
    for signing in iter_signings(m):
        return signing
    return None
