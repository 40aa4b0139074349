import json

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from funcgraphs.graphs import (
    UNBOUNDED, FunctionalGraph, class_diameters, gen_path,
    gen_random_forest, gen_random_total, proximity_classes)
from strategies import forest_graphs, partial_graphs


def rho_shape():
    # 0 -> 1 -> 2 -> 3 -> 1
    return FunctionalGraph([1, 2, 3, 1])


def test_path_is_acyclic_with_sink():
    g = FunctionalGraph([1, 2, None])
    assert g.acyclic
    assert g.sinks() == [2]
    assert not g.is_total


def test_self_loop_is_cyclic():
    g = FunctionalGraph([0])
    assert not g.acyclic
    assert g.cyclic_points() == {0}


def test_rho_shape_is_cyclic():
    assert not rho_shape().acyclic


def test_forward_orbit_wraps_cycles():
    assert rho_shape().forward_orbit(0, 6) == [0, 1, 2, 3, 1, 2]


def test_orbit_truncates_at_sink():
    g = FunctionalGraph([1, 2, None])
    assert g.forward_orbit(0, 10) == [0, 1, 2]
    assert g.iterate(0, 2) == 2
    assert g.iterate(0, 3) is None


def test_distance_on_small_tree():
    g = FunctionalGraph([2, 2, None])
    assert g.distance(0, 1) == 2
    assert g.distance(0, 2) == 1
    assert g.distance(2, 2) == 0


def test_distance_none_across_components():
    g = FunctionalGraph([1, None, 3, None])
    assert g.distance(0, 2) is None


def test_ball_on_tree():
    g = FunctionalGraph([2, 2, 3, None])
    assert g.ball(2, 1) == {0, 1, 2, 3}
    assert g.ball(3, 0) == {3}


def test_cyclic_points_examples():
    assert rho_shape().cyclic_points() == {0, 1, 2, 3}
    loop_and_path = FunctionalGraph([0, 2, None])
    assert loop_and_path.cyclic_points() == {0}
    assert gen_path(5).cyclic_points() == set()


def test_cycle_transversal_examples():
    assert rho_shape().cycle_transversal() == {1}
    assert gen_path(4).cycle_transversal() == set()
    two_loops = FunctionalGraph([0, 1])
    assert two_loops.cycle_transversal() == {0, 1}


def test_transversal_hits_each_cycle_once():
    g = FunctionalGraph([1, 2, 0, 4, 5, 3, 0])
    trans = g.cycle_transversal()
    for cyc in g.cycles():
        assert len(trans & set(cyc)) == 1


def test_interior_example():
    g = FunctionalGraph([2, 2, 3, None])
    assert g.interior(1) == {0, 1, 2}
    assert g.interior(0) == {0, 1, 2, 3}
    assert g.interior(3) == set()


def test_interior_unbounded_on_cycles():
    g = rho_shape()
    assert g.forward_iterates() == [UNBOUNDED] * 4
    assert g.interior(10 ** 9) == {0, 1, 2, 3}


def test_forward_iterates_on_path():
    assert gen_path(4).forward_iterates() == [3, 2, 1, 0]


@given(partial_graphs())
def test_forward_iterates_match_naive_walk(g):
    iters = g.forward_iterates()
    for x in range(g.n):
        naive = oracles.naive_forward_iterates(list(g.succ), x)
        assert iters[x] == (UNBOUNDED if naive is None else naive)


@given(partial_graphs())
def test_distance_matches_bfs_oracle(g):
    succ = list(g.succ)
    for x in range(min(g.n, 8)):
        d = oracles.bfs_dists(succ, x)
        for y in range(g.n):
            assert g.distance(x, y) == d[y]


@given(partial_graphs(), st.integers(0, 6))
def test_ball_matches_bfs_oracle(g, radius):
    succ = list(g.succ)
    for x in range(min(g.n, 6)):
        assert g.ball(x, radius) == oracles.bfs_ball(succ, x, radius)


@given(partial_graphs(), st.integers(0, 5), st.data())
def test_proximity_classes_match_naive(g, radius, data):
    subset = data.draw(st.sets(st.integers(0, g.n - 1)))
    part = proximity_classes(g, subset, radius)
    naive = oracles.naive_proximity_classes(list(g.succ), subset, radius)
    assert sorted(map(sorted, part.classes())) == \
        sorted(map(sorted, (sorted(c) for c in naive)))


@given(partial_graphs(), st.integers(0, 5), st.data())
def test_class_diameters_match_bfs(g, radius, data):
    subset = data.draw(st.sets(st.integers(0, g.n - 1)))
    part = proximity_classes(g, subset, radius)
    diams = class_diameters(g, part)
    for cid, cls in enumerate(part.classes()):
        assert diams[cid] == oracles.naive_class_diameter(
            list(g.succ), set(cls))


def test_proximity_single_class_on_spaced_path():
    g = gen_path(13)
    members = set(range(0, 13, 3))
    part = proximity_classes(g, members, 3)
    assert part.num_classes == 1


def test_proximity_splits_beyond_radius():
    g = gen_path(13)
    members = set(range(0, 13, 3))
    part = proximity_classes(g, members, 2)
    assert part.num_classes == len(members)


def test_json_round_trip():
    g = FunctionalGraph([1, None, 0])
    doc = g.to_json_dict()
    assert doc == {"n": 3, "succ": [1, -1, 0]}
    assert json.loads(json.dumps(doc)) == doc
    back = FunctionalGraph.from_json_dict(doc)
    assert back.succ == g.succ


def test_json_rejects_bad_length():
    with pytest.raises(ValueError):
        FunctionalGraph.from_json_dict({"n": 3, "succ": [1, -1]})


def test_successor_out_of_range_rejected():
    with pytest.raises(ValueError):
        FunctionalGraph([5])


def test_dot_export_lists_edges():
    dot = FunctionalGraph([1, None]).to_dot()
    assert "0 -> 1;" in dot
    assert dot.startswith("digraph")


def test_generators_deterministic():
    a = gen_random_forest(200, 9)
    b = gen_random_forest(200, 9)
    assert a.succ == b.succ
    assert a.acyclic
    c = gen_random_total(50, 9)
    assert c.succ == gen_random_total(50, 9).succ


def test_total_generator_always_cyclic():
    for seed in range(5):
        g = gen_random_total(10, seed)
        assert g.is_total
        assert not g.acyclic
        assert g.cyclic_points() == set(range(10))


def test_forest_generator_keeps_deep_interior():
    g = gen_random_forest(1000, 3)
    assert g.acyclic
    assert len(g.interior(200)) > 0


@settings(max_examples=30)
@given(forest_graphs())
def test_acyclic_strategy_graphs_have_no_cycles(g):
    assert g.acyclic
    assert g.cyclic_points() == set()
    total = sum(1 for _ in g.edges())
    assert total == g.n - len(g.sinks())
