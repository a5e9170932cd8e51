from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from framework_forge.cyclic import (
    CyclicOrder,
    LinearOrder,
    arc_components,
    clockwise_next,
    linear_order_path,
    restrict_cyclic,
    validate_cyclic,
)
from framework_forge.errors import (
    AsymmetryViolation,
    EmptySelection,
    NotASubset,
    SingletonOrder,
    TotalityViolation,
    ValidationError,
)
from framework_forge.graph import components


def rot(*items):
    return CyclicOrder.from_sequence(items)


def test_validate_three_cycle():
    triples = {("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")}
    order = validate_cyclic(triples)
    assert order == rot("a", "b", "c")


def test_validate_rejects_both_senses():
    triples = {("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b"), ("c", "b", "a")}
    with pytest.raises(AsymmetryViolation):
        validate_cyclic(triples)


def test_validate_rejects_missing_totality():
    triples = {("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")}
    with pytest.raises(TotalityViolation):
        validate_cyclic(triples, items={"a", "b", "c", "d"})


def test_validate_four_cycle_brute_force():
    base = rot("1", "2", "3", "4")
    triples = base.triples()
    assert len(triples) == 12  # half of the 24 ordered triples
    for a, b, c in permutations("1234", 3):
        assert ((a, b, c) in triples) != ((c, b, a) in triples)
    assert validate_cyclic(triples) == base


def test_validate_small_orders():
    assert validate_cyclic(set(), items={"x"}) == CyclicOrder(("x",))
    assert validate_cyclic(set(), items={"y", "x"}) == CyclicOrder(("x", "y"))
    assert validate_cyclic(set(), items=set()) == CyclicOrder(())
    with pytest.raises(ValidationError):
        validate_cyclic({("a", "b", "c")}, items={"a", "b"})


def test_roundtrip_exhaustive_up_to_six():
    labels = "abcdef"
    for n in range(1, 7):
        for perm in permutations(labels[:n]):
            order = CyclicOrder.from_sequence(perm)
            again = validate_cyclic(order.triples(), items=set(perm))
            assert again == order


def test_restrict():
    order = rot("1", "2", "3", "4")
    assert restrict_cyclic(order, {"1", "3"}) == rot("1", "3")
    assert restrict_cyclic(order, {"2", "3", "4"}) == rot("2", "3", "4")
    assert restrict_cyclic(order, set(order.items)) == order
    with pytest.raises(NotASubset):
        restrict_cyclic(order, {"5"})


def test_restrict_composes():
    order = rot(*"abcde")
    assert restrict_cyclic(order, {"a", "c", "d"}) == rot("a", "c", "d")
    twice = restrict_cyclic(restrict_cyclic(order, {"a", "b", "c", "d"}), {"a", "c", "d"})
    assert twice == restrict_cyclic(order, {"a", "c", "d"})


def test_clockwise_next():
    order = rot("a", "b", "c")
    assert clockwise_next(order, "a") == "b"
    assert clockwise_next(order, "c") == "a"
    four = rot("1", "2", "3", "4")
    assert clockwise_next(four, "2") == "3"
    # the successor is the unique g with [e, g, f] for all other f
    for f in ("1", "4"):
        assert four.holds("2", "3", f)
    with pytest.raises(SingletonOrder):
        clockwise_next(CyclicOrder(("a",)), "a")


def test_successor_orbit_visits_all():
    order = rot(*"badec")
    seen = []
    current = order.items[0]
    for _ in range(len(order)):
        seen.append(current)
        current = order.successor(current)
    assert current == order.items[0]
    assert sorted(seen) == sorted(order.items)


def test_arc_components_examples():
    four = rot("1", "2", "3", "4")
    assert arc_components(four, {"1", "3"}) == [("1", ("2",)), ("3", ("4",))]
    three = rot("a", "b", "c")
    assert arc_components(three, {"a", "b", "c"}) == [("a", ()), ("b", ()), ("c", ())]
    six = rot(*"123456")
    assert arc_components(six, {"1", "4"}) == [("1", ("2", "3")), ("4", ("5", "6"))]
    single = arc_components(six, {"3"})
    assert single == [("3", ("4", "5", "6", "1", "2"))]
    with pytest.raises(EmptySelection):
        arc_components(six, set())


@given(st.integers(2, 8), st.data())
def test_arc_components_partition(n, data):
    items = [str(i) for i in range(n)]
    order = CyclicOrder.from_sequence(items)
    selection = data.draw(
        st.sets(st.sampled_from(items), min_size=1, max_size=n))
    arcs = arc_components(order, selection)
    assert len(arcs) == len(selection)
    covered = set()
    for anchor, interval in arcs:
        assert anchor in selection
        for x in interval:
            assert x not in selection
            assert x not in covered
            covered.add(x)
    assert covered | selection == set(items)


def test_linear_order_path_shapes():
    single = linear_order_path(LinearOrder(("a",)))
    assert single.vertices == ("{}", "{a}")
    assert single.edges == (("a", "{}", "{a}"),)
    double = linear_order_path(LinearOrder(("a", "b")))
    assert double.vertices == ("{}", "{a}", "{a,b}")


def test_linear_order_path_edge_removal_disconnects():
    path = linear_order_path(LinearOrder(("1", "2", "3")))
    assert len(path.vertices) == 4 and len(path.edges) == 3
    labels = [e[0] for e in path.edges]
    assert labels == ["1", "2", "3"]
    start, end = path.vertices[0], path.vertices[-1]
    for removed in labels:
        rest = [l for l in labels if l != removed]
        comps = components(path, rest)
        side_of = {}
        for comp in comps:
            for v in comp:
                side_of[v] = comp
        assert side_of[start] is not side_of[end]
