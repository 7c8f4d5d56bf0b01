"""
OSSS 模块测试：块划分、决策树 T_k、影响力、枢轴点与 Russo 公式
"""

import numpy as np
import pytest
from scipy import stats

from cplab.errors import ParameterError, PartitionError
from cplab.graphical import russo_factor, sample_points
from cplab.harness import stream_for
from cplab.lattice import ball_vertices, graph_distance, sphere_vertices
from cplab.osss import (
    CLUSTER_EXHAUSTED,
    FOUND_CROSSING,
    BlockIndex,
    BlockPartition,
    CrossingEvent,
    DifferentialTerms,
    block_point_count,
    determine,
    differential_terms,
    dump_trace,
    estimate_influence,
    estimate_revealment,
    flip_indicator,
    full_reveal_indicator,
    influence_matrix,
    influence_sum_check,
    osss_check,
    pivotal_points,
    resample_block,
    resample_blocks,
    revealment_bound,
    revealment_matrix,
    run_decision_tree,
    russo_check,
    russo_samples,
    unrevealed_blocks,
    variance_estimate,
)
from cplab.analysis import Estimate
from cplab.percolation import theta_window

from oracles import all_star_config, crossing_oracle, empty_config, pivotal_oracle

ROOT2 = 2 ** 0.5


@pytest.fixture
def partition():
    """n=4, α=0.5, ε=0.25：8 个槽位，Λ_6 共 85 个顶点"""
    return BlockPartition(4, 0.5, 0.25)


@pytest.fixture
def coarse_partition():
    return BlockPartition(4, 0.5, 0.5)


@pytest.fixture
def small_partition():
    return BlockPartition(2, 0.5, ROOT2 / 2)


def test_partition_examples(partition):
    assert partition.slots == 8
    assert len(partition.vertices) == 85
    assert len(partition) == 680
    assert len(partition.blocks) == 680
    assert len(BlockPartition(4, 0.5, 2.0)) == 85


def test_partition_rejects_bad_epsilon():
    with pytest.raises(PartitionError):
        BlockPartition(4, 0.5, 0.3)
    with pytest.raises(PartitionError):
        BlockPartition(4, 0.5, 2.5)
    with pytest.raises(PartitionError):
        BlockPartition(4, 0.5, 0.0)


def test_slot_boundaries(partition):
    assert partition.slot_of(0.0) == 0
    assert partition.slot_of(-0.25) == 0
    assert partition.slot_of(-0.26) == 1
    assert partition.slot_of(-2.0) == 7
    assert partition.interval(BlockIndex((0, 0), 0)) == (-0.25, 0.0)
    assert partition.interval(BlockIndex((0, 0), 7)) == (-2.0, -1.75)
    with pytest.raises(PartitionError):
        partition.interval(BlockIndex((0, 0), 8))
    with pytest.raises(PartitionError):
        partition.block_of((7, 0), -0.1)


def test_determine_reveals_ball(partition):
    config = empty_config(partition.window())
    bit, blocks = determine((0, 0), config, 1.0, partition)
    assert bit == 1
    assert len(blocks) == 104
    _, edge_blocks = determine((4, 0), config, 1.0, partition)
    assert edge_blocks == partition.blocks_at(ball_vertices((4, 0), 2))
    assert all(partition.contains(b) for b in edge_blocks)


def test_tree_on_all_occupied(partition):
    config = empty_config(partition.window())
    for k in range(1, 5):
        trace = run_decision_tree(k, config, 1.0, partition)
        assert trace.outcome == 1
        assert trace.halt_reason == FOUND_CROSSING


def test_tree_on_all_unoccupied(partition):
    config = all_star_config(partition.window(), -0.5)
    for k in range(1, 5):
        trace = run_decision_tree(k, config, 1.0, partition)
        assert trace.outcome == 0
        assert trace.halt_reason == CLUSTER_EXHAUSTED
        assert set(trace.determined_vertices) == set(sphere_vertices((0, 0), k))
    trace = run_decision_tree(4, config, 1.0, partition)
    assert (0, 0) not in trace.revealed_vertices
    assert (2, 2) in trace.revealed_vertices


def test_tree_rejects_bad_k(partition):
    config = empty_config(partition.window())
    with pytest.raises(ParameterError):
        run_decision_tree(0, config, 1.0, partition)
    with pytest.raises(ParameterError):
        run_decision_tree(5, config, 1.0, partition)


def test_tree_outcome_matches_full_reveal(coarse_partition):
    window = coarse_partition.window()
    for i in range(40):
        config = sample_points(window, stream_for(31, i))
        expected = full_reveal_indicator(config, 0.8, 4, 0.5)
        assert expected == crossing_oracle(config, 0.8, 4, 0.5)
        for k in range(1, 5):
            trace = run_decision_tree(k, config, 0.8, coarse_partition)
            assert trace.outcome == expected
            assert trace.determined_vertices[: len(sphere_vertices((0, 0), k))] == sphere_vertices((0, 0), k)
            assert len(set(trace.determined_vertices)) == len(trace.determined_vertices)


def test_tree_reveals_only_determined_balls(coarse_partition):
    config = sample_points(coarse_partition.window(), stream_for(32, 0))
    trace = run_decision_tree(2, config, 0.8, coarse_partition)
    union = set()
    for v in trace.determined_vertices:
        union.update(coarse_partition.revealed_by(v))
    assert union == set(trace.revealed_vertices)
    assert trace.revealed_counts[-1] == trace.revealed_block_count
    assert list(trace.revealed_counts) == sorted(trace.revealed_counts)


def test_tree_is_deterministic(coarse_partition):
    config = sample_points(coarse_partition.window(), stream_for(33, 0))
    first = dump_trace(run_decision_tree(3, config, 0.8, coarse_partition))
    second = dump_trace(run_decision_tree(3, config, 0.8, coarse_partition))
    assert first == second
    assert first.startswith("# k=3 outcome=")


def test_outcome_ignores_unrevealed_blocks(coarse_partition):
    window = coarse_partition.window()
    for i in range(30):
        config = sample_points(window, stream_for(34, i))
        trace = run_decision_tree(2, config, 0.8, coarse_partition)
        hidden = unrevealed_blocks(coarse_partition, trace.revealed_blocks)
        altered = resample_blocks(config, hidden, coarse_partition, stream_for(35, i))
        assert full_reveal_indicator(altered, 0.8, 4, 0.5) == trace.outcome


def test_resample_block_is_local(small_partition):
    config = sample_points(small_partition.window(), stream_for(40, 0))
    block = BlockIndex((0, 0), 1)
    lower, upper = small_partition.interval(block)
    resampled = resample_block(config, block, small_partition, stream_for(41, 0))

    def outside(c):
        return sorted(
            (p.vertex, p.time, p.uniform_label)
            for p in c.points
            if not (p.vertex == (0, 0) and lower < p.time <= upper)
        )

    assert outside(resampled) == outside(config)
    for p in resampled.points:
        if p.vertex == (0, 0) and lower < p.time <= upper:
            assert p not in config.points


def test_resampled_block_count_is_poisson(small_partition):
    config = empty_config(small_partition.window())
    block = BlockIndex((1, 0), 0)
    rng = stream_for(42, 0)
    counts = np.array([block_point_count(resample_block(config, block, small_partition, rng), block, small_partition) for _ in range(3000)])
    mean = small_partition.epsilon
    observed = [np.sum(counts == 0), np.sum(counts == 1), np.sum(counts >= 2)]
    probs = [stats.poisson.pmf(0, mean), stats.poisson.pmf(1, mean), stats.poisson.sf(1, mean)]
    _, p_value = stats.chisquare(observed, np.asarray(probs) * len(counts))
    assert p_value > 0.001


def test_influence_rejects_foreign_blocks(small_partition):
    with pytest.raises(PartitionError):
        influence_matrix(1.0, small_partition, 2, 1, [BlockIndex((9, 9), 0)])
    with pytest.raises(PartitionError):
        estimate_influence(BlockIndex((0, 0), small_partition.slots), 1.0, small_partition, 2, 1)


def test_influence_bounded_by_block_occupation(partition):
    # 新旧块都没有点时不可能翻转
    estimate = estimate_influence(BlockIndex((1, 0), 0), 0.8, partition, 200, 43)
    assert 0.0 <= estimate.mean <= 1 - np.exp(-2 * partition.epsilon) + 3 * estimate.stderr


def test_changes_far_from_box_do_not_matter(partition):
    config = sample_points(partition.window(), stream_for(44, 0))
    event = CrossingEvent(config, 0.8, 4, 0.5)
    assert event.affected_targets([(6, 0)]) == [(4, 0)]
    assert event.affected_targets([(7, 0)]) == []


def test_pivotal_points_on_fixtures():
    window = theta_window(2, 0.5)
    assert pivotal_points(empty_config(window), 1.0, 2, 0.5).size == 0


def test_pivotal_points_match_brute_force():
    window = theta_window(2, 0.5)
    for i in range(30):
        config = sample_points(window, stream_for(50, i))
        for lam in (0.5, 1.5):
            report = pivotal_points(config, lam, 2, 0.5)
            assert report.pivotal_point_ids == pivotal_oracle(config, lam, 2, 0.5)


def test_flips_are_involutions_and_monotone():
    window = theta_window(3, 0.5)
    for i in range(20):
        config = sample_points(window, stream_for(51, i))
        event = CrossingEvent(config, 0.8, 3, 0.5)
        for index, star in enumerate(event.star_flags[:40]):
            flipped = flip_indicator(event, index)
            if star:
                assert flipped >= event.indicator
            else:
                assert flipped <= event.indicator
            flags = list(event.star_flags)
            flags[index] = not flags[index]
            twice = CrossingEvent(config, 0.8, 3, 0.5, flags)
            assert flip_indicator(twice, index) == event.indicator


def test_russo_validation():
    with pytest.raises(ParameterError):
        russo_samples(0.5, 0.5, 2, 0.5, 4, 1)
    with pytest.raises(ParameterError):
        russo_samples(0.5, 0.0, 2, 0.5, 4, 1)


def test_russo_check_agrees():
    record = russo_check(1.0, 0.1, 2, 0.5, 300, 60)
    assert record.slack == pytest.approx(0.16 * 0.01)
    assert record.mean_pivotal.mean >= 0
    assert record.pivotal_form.mean == pytest.approx(0.16 * record.mean_pivotal.mean)
    assert record.agrees(sigmas=4.0)


def test_russo_check_at_small_lambda():
    record = russo_check(0.5, 0.05, 3, 0.5, 400, 61)
    assert record.slack == pytest.approx(russo_factor(0.5, 2) * 0.05 ** 2)
    assert record.finite_difference.replicas == 400
    assert record.mean_pivotal.mean > 0
    assert record.agrees()


def test_revealment_near_initial_sphere_is_one(small_partition):
    for v in sphere_vertices((0, 0), 1):
        assert estimate_revealment(1, v, 0.8, small_partition, 20, 70).mean == 1.0
    with pytest.raises(PartitionError):
        estimate_revealment(1, (9, 9), 0.8, small_partition, 2, 70)
    matrix = revealment_matrix(1, 0.8, small_partition, 10, 70)
    assert matrix.shape == (10, len(small_partition.vertices))


def test_revealment_bound_table(small_partition):
    table = revealment_bound(1, 0.8, small_partition, 20, 71)
    assert list(table.columns) == ["vertex", "revealment", "revealment_stderr", "bound", "bound_stderr"]
    assert len(table) == len(small_partition.vertices)
    assert (table["bound"] >= 0).all()
    near = table[table["vertex"].apply(lambda v: graph_distance(v, (0, 0)) <= 2)]
    assert (near["revealment"] == 1.0).all()


def test_variance_estimate():
    assert variance_estimate(Estimate(0.0, 0.0, 10)).mean == 0.0
    assert variance_estimate(Estimate(0.5, 0.05, 10)).mean == 0.25


def test_osss_inequality_holds(small_partition):
    record = osss_check(0.8, 1, small_partition, 60, 80)
    assert 0.0 <= record.lhs.mean <= 0.25
    assert record.rhs.mean >= 0.0
    assert record.holds()
    assert len(record.influence) == len(small_partition)
    with pytest.raises(ParameterError):
        osss_check(0.8, 3, small_partition, 2, 80)


@pytest.mark.parametrize("lam", [0.3, 0.5])
def test_osss_inequality_on_fine_blocks(partition, lam):
    """n=4, k=2, ε=0.25"""
    record = osss_check(lam, 2, partition, 24, 83)
    assert record.k == 2
    assert len(record.influence) == 680
    assert record.rhs.replicas == 24
    assert record.holds()


def test_influence_sum_check(small_partition):
    record = influence_sum_check(0.8, small_partition, 20, 81)
    assert record.influence_sum.mean >= 0.0
    assert record.twice_pivotal.mean >= 0.0
    assert record.epsilon == small_partition.epsilon


def test_differential_terms():
    terms = differential_terms(0.8, 2, 0.5, 30, 82)
    assert terms.gamma == pytest.approx(0.5)
    assert terms.scale == pytest.approx(ROOT2)
    assert terms.s.mean >= terms.theta.mean
    degenerate = DifferentialTerms(0.8, 2, 0.5, 2, Estimate(0.0, 0.0, 1), Estimate(0.0, 0.0, 1), Estimate(0.0, 0.0, 1))
    assert np.isnan(degenerate.implied_constant)
