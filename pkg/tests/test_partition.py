import pytest
from hypothesis import given, strategies as st

from funcgraphs.partition import Partition, UnionFind


def test_from_classes_round_trip():
    p = Partition.from_classes([{3, 1}, {2}, {0, 4}])
    assert p.classes() == [[0, 4], [1, 3], [2]]
    assert p.num_classes == 3
    assert p.same_class(1, 3)
    assert not p.same_class(0, 2)


def test_class_ids_follow_least_elements():
    p = Partition.from_classes([{5, 2}, {0, 1, 3}, {4}])
    assert p.class_id(3) == 0
    assert p.class_id(5) == 1
    assert p.class_id(4) == 2


def test_overlapping_classes_rejected():
    with pytest.raises(ValueError):
        Partition.from_classes([{0, 1}, {1, 2}])


def test_union_find_basic():
    uf = UnionFind(range(6))
    uf.union(0, 3)
    uf.union(3, 5)
    p = uf.to_partition()
    assert p.same_class(0, 5)
    assert not p.same_class(0, 1)
    assert p.class_id(5) == 0


@given(st.integers(2, 30), st.lists(st.tuples(st.integers(0, 29),
                                              st.integers(0, 29))))
def test_union_find_matches_naive_components(n, pairs):
    pairs = [(a % n, b % n) for a, b in pairs]
    uf = UnionFind(range(n))
    for a, b in pairs:
        uf.union(a, b)
    # naive closure by repeated sweeps
    comp = list(range(n))
    changed = True
    while changed:
        changed = False
        for a, b in pairs:
            lo = min(comp[a], comp[b])
            if comp[a] != lo or comp[b] != lo:
                comp[a] = comp[b] = lo
                changed = True
        for v in range(n):
            if comp[comp[v]] != comp[v]:
                comp[v] = comp[comp[v]]
                changed = True
    p = uf.to_partition()
    for a in range(n):
        for b in range(n):
            assert p.same_class(a, b) == (comp[a] == comp[b])


@given(st.lists(st.sets(st.integers(0, 50), min_size=1), min_size=1))
def test_partition_equality_ignores_class_order(classes):
    seen: set[int] = set()
    cleaned = []
    for cls in classes:
        cls = cls - seen
        if cls:
            cleaned.append(cls)
            seen |= cls
    p = Partition.from_classes(cleaned)
    q = Partition.from_classes(list(reversed(cleaned)))
    assert p == q
    assert p.elements == seen
