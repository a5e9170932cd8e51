"""Graph frameworks: a signing plus per-cocircuit side functions.

A framework adds, for every cocircuit b, a map sigma_b on the other edges
saying which side of b each edge lies on.  The data must induce a total
cyclic order R_o on every circuit o (derived from cocircuits crossing o in
exactly two edges) and satisfy four local conditions tying clockwise
adjacency to the signs.  Frameworks are exactly what the realizer needs to
rebuild a graph, so the exhaustive search here decides graphicness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclic import CyclicOrder, validate_cyclic
from .errors import (
    CyclicOrderViolation,
    DomainMismatch,
    InconsistentBondSides,
    NoWitnessCocircuit,
    NotACyclicOrder,
    OverlappingSets,
)
from .matroid import minor, set_key
from .signing import (
    Signing,
    check_bond_sides,
    default_bond_sides,
    default_circuit_walks,
    iter_signings,
    row_key,
    signing_from_oriented_graph,
    verify_signing,
)
from . import graph as graphmod


@dataclass(frozen=True)
class GraphFramework:
    signing: Signing
    sigma: dict  # frozenset cocircuit -> {label outside it: +-1}

    def to_json_obj(self, m=None):
        obj = self.signing.to_json_obj()
        obj["sigma"] = {
            row_key(b): {e: v for e, v in sorted(row.items())}
            for b, row in sorted(self.sigma.items(), key=lambda kv: set_key(kv[0]))
        }
        if m is not None:
            orders = derive_circuit_orders(m, self)
            obj["orders"] = {
                row_key(o): list(orders[o].items)
                for o in sorted(orders, key=set_key)
            }
        return obj


@dataclass(frozen=True)
class FrameworkReport:
    ok: bool
    stage: str | None = None
    witness: tuple | None = None
    detail: str = ""


def _sigma_domains_ok(m, framework):
    ground = set(m.ground)
    if set(framework.sigma) != set(m.cocircuits):
        raise DomainMismatch("sigma rows do not match the cocircuit family")
    for b, row in framework.sigma.items():
        if set(row) != ground - set(b) or any(v not in (-1, 1) for v in row.values()):
            raise DomainMismatch(f"bad sigma row for {row_key(b)}")


def _pair_witnesses(m):
    """For every circuit o: {frozenset {e,f}: [cocircuits b with o&b == {e,f}]}."""
    out = {}
    for o in m.circuits:
        table = {}
        for b in m.cocircuits:
            common = o & b
            if len(common) == 2:
                table.setdefault(common, []).append(b)
        out[o] = table
    return out


def _circuit_triples(o, pair_table, signing, sigma, choose=None):
    """Triple relation of R_o.  `choose` picks the witness per pair."""
    triples = set()
    for pair in sorted(pair_table, key=set_key):
        e, f = sorted(pair)
        witnesses = pair_table[pair]
        b = witnesses[0] if choose is None else choose(pair, witnesses)
        cf = signing.c[o][f] * signing.d[b][f]
        for g in sorted(o - pair):
            if sigma[b][g] == cf:
                triples.add((e, f, g))
            else:
                triples.add((f, e, g))
    # close under cyclicity so the validator sees the full relation
    closed = set(triples)
    for a, b_, c_ in triples:
        closed.add((b_, c_, a))
        closed.add((c_, a, b_))
    return closed


def _clockwise_adjacent(rotation, positions, members, p, q):
    """Is q the clockwise successor of p in the restriction to `members`?"""
    n = len(rotation)
    i = positions[p]
    for step in range(1, n + 1):
        item = rotation[(i + step) % n]
        if item in members:
            return item == q
    return False


def _condition_holds(signing, sigma, o, b, p, q):
    """Conditions (1)-(4) for the clockwise-adjacent pair (p, q)."""
    c_row, d_row, s_row = signing.c[o], signing.d[b], sigma[b]
    p_in, q_in = p in b, q in b
    if p_in and q_in:
        return c_row[p] * d_row[p] == -c_row[q] * d_row[q], 1
    if not p_in and not q_in:
        return s_row[p] == s_row[q], 2
    if p_in:
        return c_row[p] * d_row[p] == s_row[q], 3
    return c_row[q] * d_row[q] == -s_row[p], 4


def verify_framework(m, framework):
    """Full check: signing, well-definedness, cyclic orders, conditions.

    Returns a report carrying the first violated stage and a witness tuple.
    """
    signing_report = verify_signing(m, framework.signing)
    if not signing_report.ok:
        return FrameworkReport(False, "signing", signing_report.violation,
                               "orthogonality identity fails")
    _sigma_domains_ok(m, framework)

    witnesses = _pair_witnesses(m)
    sigma = framework.sigma
    signing = framework.signing

    # well-definedness across witness cocircuits
    for o in m.circuits:
        if len(o) < 3:
            continue
        table = witnesses[o]
        for pair in sorted(table, key=set_key):
            _e, f = sorted(pair)
            others = sorted(o - pair)
            b0 = table[pair][0]
            ref = [sigma[b0][g] * signing.c[o][f] * signing.d[b0][f] for g in others]
            for b in table[pair][1:]:
                got = [sigma[b][g] * signing.c[o][f] * signing.d[b][f] for g in others]
                if got != ref:
                    gi = next(i for i, (x, y) in enumerate(zip(got, ref)) if x != y)
                    return FrameworkReport(
                        False, "well_defined", (o, tuple(sorted(pair)), others[gi], b0, b),
                        "triple classification depends on the witness cocircuit")

    # each derived relation must be a total cyclic order
    orders = {}
    for o in m.circuits:
        if len(o) < 3:
            orders[o] = CyclicOrder.from_sequence(sorted(o))
            continue
        table = witnesses[o]
        if len(table) < len(o) * (len(o) - 1) // 2:
            raise NoWitnessCocircuit(
                f"some pair of {sorted(o)} is crossed by no cocircuit")
        triples = _circuit_triples(o, table, signing, sigma)
        try:
            orders[o] = validate_cyclic(triples, items=o)
        except CyclicOrderViolation as exc:
            return FrameworkReport(False, "cyclic", (o, exc.witness), str(exc))

    # conditions (1)-(4); adjacency witnessed inside b&o plus the pair itself
    for o in m.circuits:
        rotation = orders[o].items
        positions = {x: i for i, x in enumerate(rotation)}
        for b in m.cocircuits:
            core = o & b
            for p in rotation:
                for q in rotation:
                    if p == q:
                        continue
                    members = core | {p, q}
                    if not _clockwise_adjacent(rotation, positions, members, p, q):
                        continue
                    ok, which = _condition_holds(signing, sigma, o, b, p, q)
                    if not ok:
                        return FrameworkReport(
                            False, "conditions",
                            (which, o, b, p, q, tuple(sorted(members))),
                            f"condition ({which}) fails")
    return FrameworkReport(True)


def derive_circuit_orders(m, framework):
    """R_o for every circuit, using the least witness cocircuit per pair."""
    witnesses = _pair_witnesses(m)
    orders = {}
    for o in m.circuits:
        if len(o) < 3:
            orders[o] = CyclicOrder.from_sequence(sorted(o))
            continue
        table = witnesses[o]
        if len(table) < len(o) * (len(o) - 1) // 2:
            raise NoWitnessCocircuit(
                f"some pair of {sorted(o)} is crossed by no cocircuit")
        triples = _circuit_triples(o, table, framework.signing, framework.sigma)
        try:
            orders[o] = validate_cyclic(triples, items=o)
        except CyclicOrderViolation as exc:
            raise NotACyclicOrder(o, exc) from exc
    return orders


# ---------------------------------------------------------------------------
# synthesis from a graph
# ---------------------------------------------------------------------------

def framework_from_graph(graph, bond_sides=None, circuit_orientations=None):
    """Framework of a finite graph: signing plus shore-side sigma values."""
    m = graphmod.cycle_matroid(graph)
    sides = dict(default_bond_sides(graph, m.cocircuits))
    if bond_sides:
        for b, (u, v) in bond_sides.items():
            key = frozenset(b)
            sides[key] = check_bond_sides(graph, key, u, v)
    signing = signing_from_oriented_graph(graph, circuit_orientations, sides)

    sigma = {}
    for b in m.cocircuits:
        u, _v = sides[b]
        row = {}
        for e in m.ground:
            if e in b:
                continue
            tail, head = graph.endpoints(e)
            if tail in u and head in u:
                row[e] = -1
            elif tail not in u and head not in u:
                row[e] = 1
            else:
                raise InconsistentBondSides(
                    f"edge {e!r} crosses bond {sorted(b)} it does not belong to")
        sigma[b] = row
    return GraphFramework(signing, sigma)


# ---------------------------------------------------------------------------
# restriction to minors
# ---------------------------------------------------------------------------

def restrict_framework(m, framework, contract, delete):
    """Induced framework on m / contract \\ delete via least parents."""
    contract, delete = frozenset(contract), frozenset(delete)
    if contract & delete:
        raise OverlappingSets("contract and delete sets intersect")
    minor_m = minor(m, contract, delete)

    c = {}
    for o in minor_m.circuits:
        parents = [op for op in m.circuits if o <= op <= o | contract]
        parent = min(parents, key=set_key)
        c[o] = {e: framework.signing.c[parent][e] for e in o}
    d = {}
    sigma = {}
    minor_ground = set(minor_m.ground)
    for b in minor_m.cocircuits:
        parents = [bp for bp in m.cocircuits if b <= bp <= b | delete]
        parent = min(parents, key=set_key)
        d[b] = {e: framework.signing.d[parent][e] for e in b}
        sigma[b] = {e: framework.sigma[parent][e] for e in minor_ground - b}
    return GraphFramework(Signing(c, d), sigma)


# ---------------------------------------------------------------------------
# exhaustive search
# ---------------------------------------------------------------------------

@dataclass
class FrameworkSearchStats:
    signings_tried: int = 0
    branch_nodes: int = 0
    sigma_variables: int = 0
    parity_classes: int = 0


class _ParityUnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.sign = [1] * n
        self.size = [1] * n

    def find(self, a):
        sign = 1
        while self.parent[a] != a:
            sign *= self.sign[a]
            a = self.parent[a]
        return a, sign

    def union(self, a, b, parity):
        """Impose val(a) = parity * val(b); False on contradiction."""
        ra, sa = self.find(a)
        rb, sb = self.find(b)
        if ra == rb:
            return sa == parity * sb
        if self.size[ra] > self.size[rb]:
            ra, sa, rb, sb = rb, sb, ra, sa
        self.parent[ra] = rb
        self.sign[ra] = sa * parity * sb
        self.size[rb] += self.size[ra]
        return True


class _SigmaSearch:
    """Backtracking completion of sigma for a fixed signing.

    Parity phase: well-definedness, cyclicity of the derived triples, and
    constancy over circuits disjoint from a cocircuit are all relations of
    the form sigma_x = +-sigma_y, merged in a signed union-find.  Search
    phase: branch on class representatives; whenever a circuit's triple
    bits are all known its rotation is validated and the crossing
    conditions (1)-(4) are checked, forcing further sigma values.
    """

    def __init__(self, m, signing):
        self.m = m
        self.signing = signing
        self.ok = True
        self.branch_nodes = 0

        comp_of = {}
        for cm in m.component_masks:
            for label in m.labels(cm):
                comp_of[label] = cm

        self.vars = []
        self.var_id = {}
        for b in m.cocircuits:
            bcomp = comp_of[sorted(b)[0]]
            for e in m.ground:
                if e in b or comp_of[e] != bcomp:
                    continue
                self.var_id[(b, e)] = len(self.vars)
                self.vars.append((b, e))

        self.uf = _ParityUnionFind(len(self.vars))
        self.witnesses = _pair_witnesses(m)

        if not self._parity_phase(comp_of):
            self.ok = False
            return

        # circuit completion bookkeeping: roots whose values decide R_o
        self.circuit_roots = {}
        for o in m.circuits:
            if len(o) < 3:
                continue
            roots = set()
            for pair, blist in self.witnesses[o].items():
                b0 = blist[0]
                for g in o - pair:
                    roots.add(self.uf.find(self.var_id[(b0, g)])[0])
            self.circuit_roots[o] = roots
        self.root_circuits = {}
        for o, roots in self.circuit_roots.items():
            for r in roots:
                self.root_circuits.setdefault(r, []).append(o)

        # deterministic branch order: complete circuits early
        order = []
        seen = set()
        for o in m.circuits:
            for pair in sorted(self.witnesses.get(o, {}), key=set_key):
                b0 = self.witnesses[o][pair][0]
                for g in sorted(o - pair):
                    r = self.uf.find(self.var_id[(b0, g)])[0]
                    if r not in seen:
                        seen.add(r)
                        order.append(r)
        for idx in range(len(self.vars)):
            r = self.uf.find(idx)[0]
            if r not in seen:
                seen.add(r)
                order.append(r)
        self.branch_order = order
        self.value = {}        # root -> +-1
        self.pending = {o: len(roots) for o, roots in self.circuit_roots.items()}
        self.rotations = {}    # circuit -> rotation tuple, once validated

    # -- setup ---------------------------------------------------------

    def _parity_phase(self, comp_of):
        m, signing = self.m, self.signing
        uf, var_id = self.uf, self.var_id

        for o in m.circuits:
            table = self.witnesses.get(o, {})
            if len(o) >= 3 and len(table) < len(o) * (len(o) - 1) // 2:
                raise NoWitnessCocircuit(
                    f"some pair of {sorted(o)} is crossed by no cocircuit")
            # well-definedness between witness cocircuits of one pair
            for pair, blist in table.items():
                _e, f = sorted(pair)
                b0 = blist[0]
                for b in blist[1:]:
                    parity = signing.d[b0][f] * signing.d[b][f]
                    for g in o - pair:
                        if not uf.union(var_id[(b, g)], var_id[(b0, g)], parity):
                            return False
            # cyclicity: [x,y,z] iff [y,z,x]
            if len(o) >= 3:
                elems = sorted(o)
                for i in range(len(elems)):
                    for j in range(i + 1, len(elems)):
                        for k in range(j + 1, len(elems)):
                            x, y, z = elems[i], elems[j], elems[k]
                            if not self._link_triple(o, x, y, z):
                                return False
                            if not self._link_triple(o, y, z, x):
                                return False
        # sigma constant over circuits disjoint from the cocircuit
        for b in m.cocircuits:
            bcomp = comp_of[sorted(b)[0]]
            for o in m.circuits:
                if o & b or comp_of[sorted(o)[0]] != bcomp:
                    continue
                elems = sorted(o)
                first = var_id[(b, elems[0])]
                for e in elems[1:]:
                    if not uf.union(var_id[(b, e)], first, 1):
                        return False
        return True

    def _link_triple(self, o, x, y, z):
        """t_{xy}(z) == t_{yz}(x), both via canonical witnesses."""
        signing = self.signing
        b_xy = self.witnesses[o][frozenset((x, y))][0]
        b_yz = self.witnesses[o][frozenset((y, z))][0]
        parity = (
            signing.c[o][y] * signing.d[b_xy][y]
            * signing.c[o][z] * signing.d[b_yz][z]
        )
        return self.uf.union(
            self.var_id[(b_xy, z)], self.var_id[(b_yz, x)], parity)

    # -- search --------------------------------------------------------

    def first(self):
        if not self.ok:
            return None
        return self._dfs(0, [])

    def _dfs(self, pos, trail):
        order = self.branch_order
        while pos < len(order) and order[pos] in self.value:
            pos += 1
        if pos == len(order):
            return self._harvest()
        root = order[pos]
        for val in (1, -1):
            self.branch_nodes += 1
            mark = len(trail)
            if self._assign(root, val, trail):
                result = self._dfs(pos + 1, trail)
                if result is not None:
                    return result
            self._undo(trail, mark)
        return None

    def _assign(self, root, val, trail):
        queue = [(root, val)]
        completions = []
        while queue:
            r, v = queue.pop()
            if r in self.value:
                if self.value[r] != v:
                    return False
                continue
            self.value[r] = v
            trail.append(("val", r))
            for o in self.root_circuits.get(r, ()):
                self.pending[o] -= 1
                trail.append(("pend", o))
                if self.pending[o] == 0:
                    completions.append(o)
            while completions:
                o = completions.pop()
                if not self._complete_circuit(o, trail, queue):
                    return False
        return True

    def _undo(self, trail, mark):
        while len(trail) > mark:
            kind, payload = trail.pop()
            if kind == "val":
                del self.value[payload]
            elif kind == "pend":
                self.pending[payload] += 1
            else:
                del self.rotations[payload]

    def _sigma_value(self, b, g):
        root, sign = self.uf.find(self.var_id[(b, g)])
        v = self.value.get(root)
        return None if v is None else sign * v

    def _complete_circuit(self, o, trail, queue):
        signing = self.signing
        table = self.witnesses[o]
        triples = set()
        for pair in table:
            e, f = sorted(pair)
            b0 = table[pair][0]
            cf = signing.c[o][f] * signing.d[b0][f]
            for g in o - pair:
                sv = self._sigma_value(b0, g)
                triples.add((e, f, g) if sv == cf else (f, e, g))
        closed = set(triples)
        for a, b_, c_ in triples:
            closed.add((b_, c_, a))
            closed.add((c_, a, b_))
        try:
            rotation = validate_cyclic(closed, items=o).items
        except CyclicOrderViolation:
            return False
        self.rotations[o] = rotation
        trail.append(("rot", o))

        positions = {x: i for i, x in enumerate(rotation)}
        n = len(rotation)
        for b in self.m.cocircuits:
            core = o & b
            if len(core) < 4:
                continue
            ring = [x for x in rotation if x in core]
            for i, p in enumerate(ring):
                q = ring[(i + 1) % len(ring)]
                if signing.c[o][p] * signing.d[b][p] != -signing.c[o][q] * signing.d[b][q]:
                    return False
            # force the side of every non-crossing edge from its gap
            for g in o - core:
                i = positions[g]
                p = None
                for step in range(1, n + 1):
                    item = rotation[(i - step) % n]
                    if item in core:
                        p = item
                        break
                want = signing.c[o][p] * signing.d[b][p]
                root, sign = self.uf.find(self.var_id[(b, g)])
                queue.append((root, sign * want))
        return True

    def _harvest(self):
        m = self.m
        sigma = {}
        for b in m.cocircuits:
            row = {}
            for e in m.ground:
                if e in b:
                    continue
                key = (b, e)
                if key in self.var_id:
                    v = self._sigma_value(b, e)
                    assert v is not None
                    row[e] = v
                else:
                    row[e] = 1
            sigma[b] = row
        return sigma


def find_framework_detailed(m):
    """Exhaustive layered search; returns (framework or None, stats)."""
    stats = FrameworkSearchStats()
    for signing in iter_signings(m):
        stats.signings_tried += 1
        search = _SigmaSearch(m, signing)
        stats.sigma_variables = max(stats.sigma_variables, len(search.vars))
        if search.ok:
            roots = {search.uf.find(i)[0] for i in range(len(search.vars))}
            stats.parity_classes = max(stats.parity_classes, len(roots))
        sigma = search.first()
        stats.branch_nodes += search.branch_nodes
        if sigma is not None:
            framework = GraphFramework(signing, sigma)
            report = verify_framework(m, framework)
            if not report.ok:
                raise AssertionError(
                    f"search produced an invalid framework: {report}")
            return framework, stats
    return None, stats


def find_framework(m):
    framework, _stats = find_framework_detailed(m)
    return framework
