"""Finite matroid kernel.

Matroids live on small ground sets (cap 16 by default) and are built from an
explicit circuit family.  Subsets are handled as int bitmasks internally;
the public API speaks frozensets of string labels.  Bases are derived by a
greedy base plus exchange walk, cocircuits as the minimal transversals of the
base family (computed through the complement bases, which is the same family).

All values are immutable after construction and every operation is a pure
function of its inputs, so instances can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import (
    Disconnected,
    DecompositionRequestedOnOddSet,
    EliminationFailure,
    EmptyCircuit,
    GroundCapExceeded,
    NonAntichain,
    NotABase,
    OverlappingSets,
    ValidationError,
)

DEFAULT_CAP = 16


def set_key(labels):
    """Canonical sort key for a set of labels."""
    return tuple(sorted(labels))


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Matroid:
    """A finite matroid given by its circuit family.

    Use :func:`build_matroid` to construct a validated instance.
    """

    __slots__ = (
        "ground", "_index", "_circuit_masks", "_per_element_circuits",
        "_base_masks", "_cocircuit_masks", "_component_masks", "_conn_cache",
    )

    def __init__(self, ground, circuit_masks):
        self.ground = tuple(ground)
        self._index = {label: i for i, label in enumerate(self.ground)}
        self._circuit_masks = tuple(circuit_masks)
        per = [[] for _ in self.ground]
        for c in self._circuit_masks:
            for i in _bits(c):
                per[i].append(c)
        self._per_element_circuits = tuple(tuple(v) for v in per)
        self._base_masks = None
        self._cocircuit_masks = None
        self._component_masks = None
        self._conn_cache = {}

    # -- conversions -------------------------------------------------

    def mask(self, labels):
        m = 0
        for label in labels:
            try:
                m |= 1 << self._index[label]
            except KeyError:
                raise ValidationError(f"unknown element {label!r}") from None
        return m

    def labels(self, mask):
        return frozenset(self.ground[i] for i in _bits(mask))

    def _sorted_sets(self, masks):
        return tuple(sorted((self.labels(m) for m in masks), key=set_key))

    @property
    def full_mask(self):
        return (1 << len(self.ground)) - 1

    # -- families ----------------------------------------------------

    @property
    def circuits(self):
        return self._sorted_sets(self._circuit_masks)

    @property
    def circuit_masks(self):
        return self._circuit_masks

    @property
    def bases(self):
        return self._sorted_sets(self.base_masks)

    @property
    def base_masks(self):
        if self._base_masks is None:
            self._base_masks = self._compute_bases()
        return self._base_masks

    @property
    def cocircuits(self):
        return self._sorted_sets(self.cocircuit_masks)

    @property
    def cocircuit_masks(self):
        if self._cocircuit_masks is None:
            full = self.full_mask
            dual_bases = frozenset(full ^ b for b in self.base_masks)
            self._cocircuit_masks = _circuits_from_bases(len(self.ground), dual_bases)
        return self._cocircuit_masks

    # -- independence and rank ----------------------------------------

    def independent_mask(self, mask):
        return not any((c & mask) == c for c in self._circuit_masks)

    def is_independent(self, labels):
        return self.independent_mask(self.mask(labels))

    def _extension_free(self, current, i):
        # adding element i to the independent set `current` keeps it
        # independent iff no circuit through i fits inside current + i
        cand = current | (1 << i)
        return not any((c & cand) == c for c in self._per_element_circuits[i])

    def rank_mask(self, mask=None):
        if mask is None:
            mask = self.full_mask
        current, r = 0, 0
        for i in _bits(mask):
            if self._extension_free(current, i):
                current |= 1 << i
                r += 1
        return r

    def rank(self, labels=None):
        return self.rank_mask(None if labels is None else self.mask(labels))

    def greedy_independent_mask(self, mask):
        current = 0
        for i in _bits(mask):
            if self._extension_free(current, i):
                current |= 1 << i
        return current

    def is_base_mask(self, mask):
        return mask in set(self.base_masks)

    def is_base(self, labels):
        return self.is_base_mask(self.mask(labels))

    def is_circuit(self, labels):
        return self.mask(labels) in set(self._circuit_masks)

    # -- fundamental sets ----------------------------------------------

    def fundamental_circuit_mask(self, base_mask, i):
        scope = base_mask | (1 << i)
        for c in self._per_element_circuits[i]:
            if (c & scope) == c:
                return c
        raise AssertionError("no fundamental circuit; base invalid?")

    def fundamental_cocircuit_mask(self, base_mask, i):
        scope = (self.full_mask ^ base_mask) | (1 << i)
        bit = 1 << i
        for b in self.cocircuit_masks:
            if (b & bit) and (b & scope) == b:
                return b
        raise AssertionError("no fundamental cocircuit; base invalid?")

    # -- structure ------------------------------------------------------

    @property
    def component_masks(self):
        """Connected components: transitive closure of sharing a circuit.

        Elements on no circuit (coloops) are singleton components.
        """
        if self._component_masks is None:
            n = len(self.ground)
            parent = list(range(n))

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for c in self._circuit_masks:
                ids = list(_bits(c))
                for other in ids[1:]:
                    ra, rb = find(ids[0]), find(other)
                    if ra != rb:
                        parent[rb] = ra
            groups = {}
            for i in range(n):
                groups.setdefault(find(i), 0)
                groups[find(i)] |= 1 << i
            self._component_masks = tuple(
                sorted(groups.values(), key=lambda m: set_key(self.labels(m)))
            )
        return self._component_masks

    def component_of(self, label):
        bit = 1 << self._index[label]
        for m in self.component_masks:
            if m & bit:
                return m
        raise AssertionError

    # -- internals -------------------------------------------------------

    def _compute_bases(self):
        greedy = self.greedy_independent_mask(self.full_mask)
        seen = {greedy}
        queue = [greedy]
        while queue:
            base = queue.pop()
            outside = self.full_mask ^ base
            for f in _bits(base):
                stripped = base ^ (1 << f)
                for e in _bits(outside):
                    cand = stripped | (1 << e)
                    if cand not in seen and self._extension_free(stripped, e):
                        seen.add(cand)
                        queue.append(cand)
        return tuple(sorted(seen, key=lambda m: set_key(self.labels(m))))

    # -- equality ----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matroid):
            return NotImplemented
        return self.ground == other.ground and set(self._circuit_masks) == set(other._circuit_masks)

    def __hash__(self):
        return hash((self.ground, frozenset(self._circuit_masks)))

    def __repr__(self):
        return f"Matroid({len(self.ground)} elements, {len(self._circuit_masks)} circuits)"


def _circuits_from_bases(n, base_masks):
    """All circuits of the matroid whose bases are `base_masks`.

    Every circuit is the fundamental circuit of one of its elements with
    respect to a base containing the rest of it, so sweeping fundamental
    circuits over all bases is exhaustive.  For the dual-bases call this
    yields exactly the minimal transversals of the primal base family.
    """
    base_set = frozenset(base_masks)
    full = (1 << n) - 1
    out = set()
    for base in base_masks:
        for e in _bits(full ^ base):
            ebit = 1 << e
            fc = ebit
            for f in _bits(base):
                if (base ^ (1 << f)) | ebit in base_set:
                    fc |= 1 << f
            out.add(fc)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def build_matroid(ground, circuits, cap=DEFAULT_CAP):
    """Validate a circuit family and return the matroid it defines.

    Checks, in order: ground cap, no empty circuit, antichain, and pairwise
    strong circuit elimination (equivalent to the full axiom family for
    finite ground sets).
    """
    labels = sorted(set(ground))
    if len(labels) != len(tuple(ground)):
        raise ValidationError("duplicate element labels")
    if len(labels) > cap:
        raise GroundCapExceeded(len(labels), cap)

    m = Matroid(labels, ())
    masks = sorted(
        {m.mask(c) for c in circuits},
        key=lambda mk: set_key(m.labels(mk)),
    )
    if masks and masks[0] == 0:
        raise EmptyCircuit("empty set offered as a circuit")
    for a, b in combinations(masks, 2):
        if a & b == a:
            raise NonAntichain(m.labels(a), m.labels(b))
        if a & b == b:
            raise NonAntichain(m.labels(b), m.labels(a))

    # strong elimination: for circuits o1 != o2, x in both, z in o1 - o2,
    # some circuit through z avoids x inside o1 | o2
    result = Matroid(labels, masks)
    for o1, o2 in combinations(masks, 2):
        common = o1 & o2
        if not common:
            continue
        union = o1 | o2
        for x in _bits(common):
            scope = union & ~(1 << x)
            for z in _bits((o1 ^ o2)):
                ok = any(
                    (c & scope) == c
                    for c in result._per_element_circuits[z]
                )
                if not ok:
                    raise EliminationFailure(
                        result.labels(o1), result.labels(o2),
                        labels[x], labels[z],
                    )
    return result


# ---------------------------------------------------------------------------
# duality, minors
# ---------------------------------------------------------------------------

def dual_matroid(m, cap=DEFAULT_CAP):
    """The dual: bases are complements of bases, circuits are cocircuits."""
    circuits = [m.labels(b) for b in m.cocircuit_masks]
    return build_matroid(m.ground, circuits, cap=cap)


def minor(m, contract, delete, cap=DEFAULT_CAP):
    """m / contract \\ delete, via the minimal surviving circuit traces."""
    cm, dm = m.mask(contract), m.mask(delete)
    if cm & dm:
        raise OverlappingSets("contract and delete sets intersect")
    traces = set()
    for c in m.circuit_masks:
        if c & dm:
            continue
        t = c & ~cm
        if t:
            traces.add(t)
    minimal = [t for t in traces if not any(o != t and (o & t) == o for o in traces)]
    keep = m.full_mask & ~(cm | dm)
    ground = [m.ground[i] for i in _bits(keep)]
    return build_matroid(ground, [m.labels(t) for t in minimal], cap=cap)


# ---------------------------------------------------------------------------
# fundamental sets
# ---------------------------------------------------------------------------

def fundamental_set(m, base, x):
    """Fundamental circuit (x outside the base) or cocircuit (x inside)."""
    base_mask = m.mask(base)
    if not m.is_base_mask(base_mask):
        raise NotABase(f"{sorted(base)} is not a base")
    i = m._index[x] if x in m._index else None
    if i is None:
        raise ValidationError(f"unknown element {x!r}")
    if base_mask & (1 << i):
        return m.labels(m.fundamental_cocircuit_mask(base_mask, i))
    return m.labels(m.fundamental_circuit_mask(base_mask, i))


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeparationWitness:
    side_a: frozenset
    side_b: frozenset
    k: int
    bases_used: tuple  # (s_A, s_B, s)


@dataclass(frozen=True)
class ConnectivityReport:
    k: int
    is_k_connected: bool
    witness: SeparationWitness | None


def connectivity(m, k):
    """Decide k-connectivity by bipartition search.

    Returns a report; the witness (when present) is the separation with the
    least order, ties broken by the lexicographically least side_a.  For k=2
    the verdict is cross-checked against the common-circuit characterization.
    """
    if k in m._conn_cache:
        return m._conn_cache[k]
    n = len(m.ground)
    best = None
    if n >= 2:
        total_rank = m.rank_mask()
        full = m.full_mask
        for half in range(1, 1 << (n - 1)):
            one_side = (half << 1) | 1  # canonical rep holds element 0
            other = full ^ one_side
            if other == 0:
                continue
            size_min = min(one_side.bit_count(), other.bit_count())
            lam = m.rank_mask(one_side) + m.rank_mask(other) - total_rank
            l = lam + 1
            if l < k and l <= size_min:
                for amask, bmask in ((one_side, other), (other, one_side)):
                    cand_key = (l, set_key(m.labels(amask)))
                    if best is None or cand_key < best[0]:
                        best = (cand_key, amask, bmask, l)

    if k == 2:
        pairwise = _common_circuit_connected(m)
        found_sep = best is not None
        if pairwise != (not found_sep):
            raise AssertionError("connectivity cross-check failed")

    if best is None:
        report = ConnectivityReport(k, True, None)
    else:
        _, amask, bmask, l = best
        s_a = m.greedy_independent_mask(amask)
        s_b = m.greedy_independent_mask(bmask)
        s = m.greedy_independent_mask(s_a | s_b)
        witness = SeparationWitness(
            m.labels(amask), m.labels(bmask), l,
            (m.labels(s_a), m.labels(s_b), m.labels(s)),
        )
        report = ConnectivityReport(k, False, witness)
    m._conn_cache[k] = report
    return report


def _common_circuit_connected(m):
    n = len(m.ground)
    for i, j in combinations(range(n), 2):
        pair = (1 << i) | (1 << j)
        if not any((c & pair) == pair for c in m._per_element_circuits[i]):
            return False
    return True


def is_connected(m):
    return connectivity(m, 2).is_k_connected


# ---------------------------------------------------------------------------
# switching sequences
# ---------------------------------------------------------------------------

def switching_sequence(m, base, e, f):
    """Shortest switching sequence from e to f for the given base (BFS)."""
    base_mask = m.mask(base)
    if not m.is_base_mask(base_mask):
        raise NotABase(f"{sorted(base)} is not a base")
    for x in (e, f):
        if x not in m._index:
            raise ValidationError(f"unknown element {x!r}")
    if e == f:
        return (e,)

    def successors(x):
        i = m._index[x]
        if base_mask & (1 << i):
            nxt = m.fundamental_cocircuit_mask(base_mask, i)
        else:
            nxt = m.fundamental_circuit_mask(base_mask, i)
        return sorted(m.labels(nxt & ~(1 << i)))

    pred = {e: None}
    frontier = [e]
    while frontier:
        nxt_frontier = []
        for x in frontier:
            for y in successors(x):
                if y in pred:
                    continue
                pred[y] = x
                if y == f:
                    seq = [y]
                    while pred[seq[-1]] is not None:
                        seq.append(pred[seq[-1]])
                    return tuple(reversed(seq))
                nxt_frontier.append(y)
        frontier = nxt_frontier
    raise Disconnected(f"no switching sequence from {e!r} to {f!r}")


# ---------------------------------------------------------------------------
# binary / tame diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinaryTameReport:
    is_binary: bool
    odd_pair: tuple | None          # (circuit, cocircuit) with odd meet
    never_meets_once: bool
    singleton_pair: tuple | None    # (circuit, cocircuit) with |meet| == 1
    intersection_sizes: frozenset
    decomposition: tuple | None     # disjoint cocircuits covering the set
    union_flags: tuple | None       # (never-once bool, covered bool, cover)


def binary_tame_report(m, even_set=None, union_candidate=None):
    """Binary/orthogonality diagnostics, cocircuit peeling, scrawl test."""
    odd_pair = None
    singleton_pair = None
    sizes = set()
    for o in m.circuit_masks:
        for b in m.cocircuit_masks:
            size = (o & b).bit_count()
            sizes.add(size)
            if size == 1 and singleton_pair is None:
                singleton_pair = (m.labels(o), m.labels(b))
            if size % 2 == 1 and odd_pair is None:
                odd_pair = (m.labels(o), m.labels(b))

    decomposition = None
    if even_set is not None:
        x = m.mask(even_set)
        for o in m.circuit_masks:
            if (o & x).bit_count() % 2 == 1:
                raise DecompositionRequestedOnOddSet(m.labels(o))
        parts = []
        remaining = x
        while remaining:
            inner = [b for b in m.cocircuit_masks if (b & remaining) == b]
            if not inner:
                raise AssertionError(
                    "even-meeting set is not a disjoint union of cocircuits; "
                    "matroid is not binary"
                )
            chosen = min(inner, key=lambda b: set_key(m.labels(b)))
            parts.append(m.labels(chosen))
            remaining &= ~chosen
        decomposition = tuple(parts)

    union_flags = None
    if union_candidate is not None:
        w = m.mask(union_candidate)
        never_once = all((b & w).bit_count() != 1 for b in m.cocircuit_masks)
        cover = tuple(
            m.labels(c) for c in m.circuit_masks if (c & w) == c
        )
        covered_mask = 0
        for c in m.circuit_masks:
            if (c & w) == c:
                covered_mask |= c
        union_flags = (never_once, covered_mask == w, cover)

    return BinaryTameReport(
        is_binary=odd_pair is None,
        odd_pair=odd_pair,
        never_meets_once=singleton_pair is None,
        singleton_pair=singleton_pair,
        intersection_sizes=frozenset(sizes),
        decomposition=decomposition,
        union_flags=union_flags,
    )
