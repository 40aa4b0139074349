import pytest
from hypothesis import given, settings, strategies as st

import oracles
from funcgraphs.graphs import FunctionalGraph, gen_path, gen_random_forest
from funcgraphs.hitting import (
    countdown_violations, greedy_hitting, hitting_from_cover,
    hitting_from_equivalence, hitting_from_labeling, is_forward_independent,
    is_hitting, labeling_from_hitting, periodic_hitting)
from funcgraphs.partition import Partition
from strategies import forest_graphs


def test_independence_fails_inside_short_cycle():
    rho = FunctionalGraph([1, 2, 3, 1])
    assert not is_forward_independent(rho, {1}, 3)
    assert is_forward_independent(rho, {1}, 2)


def test_loop_hits_itself():
    loop = FunctionalGraph([0])
    assert is_hitting(loop, {0}, 0)


def test_greedy_on_short_path():
    g = gen_path(10)
    hs = greedy_hitting(g, 2)
    assert is_forward_independent(g, hs.members, 2)
    assert is_hitting(g, hs.members, hs.horizon)
    members = hs.sorted_members()
    assert members[-1] == 9
    assert all(b - a == 3 for a, b in zip(members, members[1:]))


def test_greedy_on_random_forest():
    g = gen_random_forest(100, 1)
    hs = greedy_hitting(g, 4)
    assert is_forward_independent(g, hs.members, 4)
    assert is_hitting(g, hs.members, hs.horizon)


def test_greedy_rejects_cycles():
    with pytest.raises(ValueError):
        greedy_hitting(FunctionalGraph([0]), 2)


@settings(max_examples=60)
@given(forest_graphs(), st.sampled_from([1, 2, 4, 8]))
def test_greedy_orbit_gaps_are_exactly_spacing_plus_one(g, spacing):
    hs = greedy_hitting(g, spacing)
    for x in hs.members:
        nxt = oracles.naive_least_hit(list(g.succ), x, set(hs.members), g.n)
        assert nxt is None or nxt == spacing + 1


@settings(max_examples=40)
@given(forest_graphs(), st.integers(2, 9))
def test_periodic_hitting_gaps_equal_period(g, period):
    hs = periodic_hitting(g, period)
    assert is_forward_independent(g, hs.members, period - 1)
    assert is_hitting(g, hs.members, period)
    for x in hs.members:
        nxt = oracles.naive_least_hit(list(g.succ), x, set(hs.members), g.n)
        assert nxt is None or nxt == period


def test_labeling_counts_down_to_member():
    g = gen_path(5)
    labels = labeling_from_hitting(g, {4})
    assert labels == [4, 3, 2, 1, 0]


def test_labeling_none_past_last_member():
    g = gen_path(5)
    labels = labeling_from_hitting(g, {2})
    assert labels == [2, 1, 0, None, None]


@settings(max_examples=60)
@given(forest_graphs(), st.sampled_from([1, 2, 4, 8]))
def test_round_trip_hitting_labeling_hitting(g, spacing):
    hs = greedy_hitting(g, spacing)
    labels = labeling_from_hitting(g, hs.members)
    assert countdown_violations(g, labels, spacing) == []
    back = hitting_from_labeling(g, labels, spacing)
    assert back.members == hs.members


@settings(max_examples=60)
@given(forest_graphs())
def test_labels_match_least_hit_oracle(g):
    hs = greedy_hitting(g, 3)
    labels = labeling_from_hitting(g, hs.members)
    succ = list(g.succ)
    for x in range(g.n):
        if x in hs.members:
            assert labels[x] == 0
        else:
            want = oracles.naive_least_hit(succ, x, set(hs.members), g.n)
            assert labels[x] == want


def test_tampered_labels_are_caught():
    g = gen_path(9)
    hs = greedy_hitting(g, 2)
    labels = labeling_from_hitting(g, hs.members)
    labels[3] = (labels[3] or 0) + 1
    assert countdown_violations(g, labels, 2)
    with pytest.raises(ValueError):
        hitting_from_labeling(g, labels, 2)


def test_zero_label_must_reset_high():
    g = gen_path(3)
    # 0 -> 1 -> 2 with labels 0, 1, 0: the 0 at vertex 0 is followed by
    # label 1 < spacing 2
    assert countdown_violations(g, [0, 1, 0], 2) == [(0, 1)]


def test_cover_extraction_on_even_vertices():
    g = gen_path(10)
    hs = hitting_from_cover(g, set(range(0, 10, 2)), 2)
    assert hs.members == frozenset({8})


def test_cover_extraction_full_cover():
    g = gen_path(10)
    hs = hitting_from_cover(g, set(range(10)), 1)
    assert hs.members == frozenset({9})


@settings(max_examples=40)
@given(forest_graphs(), st.integers(1, 4), st.data())
def test_cover_extraction_always_independent(g, spacing, data):
    cover = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    hs = hitting_from_cover(g, cover, spacing)
    assert is_forward_independent(g, hs.members, spacing) \
        or not hs.members


def test_eqrel_extraction_singletons_keep_sinks():
    g = gen_path(6)
    eq = Partition.from_classes([{x} for x in range(6)])
    hs, report = hitting_from_equivalence(g, eq, 1, 1)
    assert hs.members == frozenset({5})
    assert report["max_class_diameter"] == 0


def test_eqrel_extraction_passes_verifiers_downstream():
    from funcgraphs.asdim import equivalence_from_hitting
    g = gen_random_forest(500, 2)
    base = greedy_hitting(g, 144)
    wit = equivalence_from_hitting(g, base.members, 1)
    hs, _ = hitting_from_equivalence(g, wit.classes, 1, 1)
    assert is_forward_independent(g, hs.members, 1)
    assert is_hitting(g, hs.members, hs.horizon)


def test_spacing_below_one_rejected():
    g = gen_path(4)
    with pytest.raises(ValueError):
        greedy_hitting(g, 0)
    with pytest.raises(ValueError):
        is_forward_independent(g, {0}, 0)
    with pytest.raises(ValueError):
        periodic_hitting(g, 1)
