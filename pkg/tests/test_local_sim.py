import pytest
from hypothesis import given, settings, strategies as st

from funcgraphs.digraphs import Digraph, GraphShapeError
from funcgraphs.hitting import HittingSet
from funcgraphs.homsolver import hom_violations, solve_ergodic
from funcgraphs.local_sim import (
    ConstantOutput, EchoNeighborIds, PathNetwork, RoundLimitError,
    RulingSetAlgorithm, TemplateSolverAlgorithm, cv_iterations, log_star,
    make_path_network, permute_network, run_local, verify_ruling)


def two_three_cycles():
    return Digraph(4, [(0, 1), (1, 0), (0, 2), (2, 3), (3, 0)])


def test_log_star_values():
    assert log_star(1) == 0
    assert log_star(2) == 1
    assert log_star(4) == 2
    assert log_star(16) == 3
    assert log_star(65536) == 4
    with pytest.raises(ValueError):
        log_star(0)


def test_cv_iterations_is_flat_over_practical_sizes():
    values = {cv_iterations(n) for n in (10, 100, 10**3, 10**4, 10**6)}
    assert len(values) == 1


def test_network_validation():
    with pytest.raises(ValueError):
        PathNetwork([5, 5], [1, None], None)          # duplicate ids
    with pytest.raises(ValueError):
        PathNetwork([0, 9], [1, None], None)           # id above n**3
    with pytest.raises(ValueError):
        PathNetwork([0, 1, 2], [2, 2, None], None)     # in-degree two
    with pytest.raises(ValueError):
        PathNetwork([0, 1], [1, 0], None)              # cycle
    with pytest.raises(ValueError):
        make_path_network(10, segments=11)
    with pytest.raises(ValueError):
        make_path_network(10, id_mode="shuffled")


def test_make_path_network_segments_and_id_modes():
    net = make_path_network(10, seed=3, segments=3)
    sizes = [end - start for start, end in net.segments]
    assert sizes == [4, 3, 3]
    assert [i for i, s in enumerate(net.succ) if s is None] == [3, 6, 9]
    assert len(set(net.ids)) == 10
    assert all(0 <= v <= 1000 for v in net.ids)
    inc = make_path_network(9, seed=3, id_mode="sorted").ids
    dec = make_path_network(9, seed=3, id_mode="reversed").ids
    assert inc == sorted(inc) and dec == sorted(dec, reverse=True)


def test_permute_network_preserves_ids_and_shape():
    net = make_path_network(30, seed=5, segments=4)
    shuffled = permute_network(net, seed=6)
    assert sorted(shuffled.ids) == sorted(net.ids)
    assert net.succ.count(None) == shuffled.succ.count(None)
    assert shuffled.segments is None
    with pytest.raises(ValueError):
        run_local(RulingSetAlgorithm(1), shuffled, engine="vector")


def test_constant_baseline_runs_in_zero_rounds():
    net = make_path_network(12, seed=0)
    trace = run_local(ConstantOutput(7), net)
    assert trace.rounds == 0
    assert trace.outputs == [7] * 12
    assert trace.engine == "reference"


def test_echo_baseline_reports_neighbor_ids():
    net = make_path_network(8, seed=1, segments=2)
    trace = run_local(EchoNeighborIds(), net)
    assert trace.rounds == 1
    for i, (pred_id, succ_id) in enumerate(trace.outputs):
        p, s = net.pred[i], net.succ[i]
        assert pred_id == (None if p is None else net.ids[p])
        assert succ_id == (None if s is None else net.ids[s])


def test_single_node_is_its_own_member():
    net = make_path_network(1, seed=4)
    trace = run_local(RulingSetAlgorithm(2), net, engine="reference")
    assert trace.outputs == [True]


def test_ruling_set_on_small_path():
    net = make_path_network(16, seed=9)
    alg = RulingSetAlgorithm(2)
    trace = run_local(alg, net, engine="reference")
    report = verify_ruling(net, trace.outputs, 2, alg.gap_bound())
    assert report["ok"], report
    run_local(alg, net, engine="reference", round_cap=trace.rounds)
    with pytest.raises(RoundLimitError):
        run_local(alg, net, round_cap=trace.rounds - 1)


def test_ruling_set_midsize_passes_central_verifiers():
    net = make_path_network(1024, seed=2)
    alg = RulingSetAlgorithm(2)
    trace = run_local(alg, net)
    assert trace.engine == "vector"
    assert verify_ruling(net, trace.outputs, 2, alg.gap_bound())["ok"]


def test_engines_agree():
    for spacing in (1, 2, 4):
        for segments in (1, 3):
            net = make_path_network(257, seed=10 + spacing, segments=segments)
            alg = RulingSetAlgorithm(spacing)
            ref = run_local(alg, net, engine="reference")
            vec = run_local(alg, net, engine="vector")
            assert ref.outputs == vec.outputs
            assert ref.rounds == vec.rounds


def test_outputs_ignore_update_order():
    net = make_path_network(200, seed=11, segments=2)
    alg = RulingSetAlgorithm(2)
    baseline = run_local(alg, net, engine="reference").outputs
    for seed in range(10):
        again = run_local(alg, net, engine="reference", order_seed=seed)
        assert again.outputs == baseline


def test_membership_follows_ids_not_indices():
    net = make_path_network(150, seed=12)
    alg = RulingSetAlgorithm(1)
    base = run_local(alg, net, engine="reference").outputs
    shuffled = permute_network(net, seed=13)
    perm = run_local(alg, shuffled, engine="reference").outputs
    base_ids = {net.ids[i] for i, b in enumerate(base) if b}
    perm_ids = {shuffled.ids[i] for i, b in enumerate(perm) if b}
    assert base_ids == perm_ids
    assert verify_ruling(shuffled, perm, 1, alg.gap_bound())["ok"]


def test_monotone_id_layouts():
    for mode in ("sorted", "reversed"):
        net = make_path_network(300, seed=14, id_mode=mode)
        alg = RulingSetAlgorithm(1)
        trace = run_local(alg, net)
        assert verify_ruling(net, trace.outputs, 1, alg.gap_bound())["ok"]


def test_round_counts_flat_in_network_size():
    expected = {1: 10, 2: 40, 4: 130}
    for spacing, rounds in expected.items():
        alg = RulingSetAlgorithm(spacing)
        small = alg.total_rounds(10**3)
        large = alg.total_rounds(10**6)
        assert small == rounds
        assert large - small <= 2


@settings(max_examples=40, deadline=None)
@given(n=st.integers(2, 60), spacing=st.sampled_from([1, 2, 3, 4]),
       segments=st.integers(1, 3), seed=st.integers(0, 50))
def test_ruling_set_property(n, spacing, segments, seed):
    net = make_path_network(n, seed=seed, segments=min(segments, n))
    alg = RulingSetAlgorithm(spacing)
    trace = run_local(alg, net, engine="reference")
    assert verify_ruling(net, trace.outputs, spacing, alg.gap_bound())["ok"]


def test_template_solver_matches_centralized():
    h = two_three_cycles()
    net = make_path_network(300, seed=15)
    alg = TemplateSolverAlgorithm(h)
    trace = run_local(alg, net, engine="reference")
    assert trace.rounds == alg.ruling.total_rounds(300) + alg.window

    members_trace = run_local(alg.ruling, net, engine="reference")
    members = frozenset(i for i, b in enumerate(members_trace.outputs) if b)
    hitting = HittingSet(members, alg.data.reach_all, net.n)
    central = solve_ergodic(net.to_graph(), h, hitting)
    assert trace.outputs == central

    g = net.to_graph()
    labeled_edges = [(x, g.succ[x]) for x in range(g.n)
                     if g.succ[x] is not None
                     and trace.outputs[x] is not None
                     and trace.outputs[g.succ[x]] is not None]
    assert labeled_edges
    assert hom_violations(g, trace.outputs, h) == []


def test_template_solver_rejects_loop_template():
    with pytest.raises(GraphShapeError):
        TemplateSolverAlgorithm(Digraph(2, [(0, 0), (0, 1), (1, 0)]))
