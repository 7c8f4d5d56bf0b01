"""
重整化测试：块事件、好顶点、覆盖不等式与块事件独立性
"""

import numpy as np
import pytest

from cplab.errors import ParameterError, SeparationError, WindowTooSmallError
from cplab.graphical import OccupiedField, SpaceTimeWindow, sample_points
from cplab.harness import stream_for
from cplab.lattice import ball_vertices, graph_distance, sphere_vertices
from cplab.renorm import (
    BlockSpec,
    block_event_curve,
    block_event_indicator,
    block_tail_experiment,
    covering_check,
    covering_region,
    good_implies_block_event,
    good_vertices,
    independence_check,
    regions_disjoint,
    separated_subset,
)

from oracles import all_star_config, connects_oracle, empty_config, field_bit_oracle

O = (0, 0)


def test_block_spec():
    spec = BlockSpec(4, (1, -1))
    assert spec.center == (4, -4)
    assert spec.inner_radius == 4
    assert spec.outer_radius == 8
    assert len(spec.field_region()) == len(ball_vertices(O, 8))
    for N in (0, 3, -2):
        with pytest.raises(ParameterError):
            BlockSpec(N, O)


def test_block_event_on_fixtures():
    window = BlockSpec(2, O).window(0.5)
    assert block_event_indicator(O, 2, empty_config(window), 1.0, 0.5) == 1
    assert block_event_indicator(O, 2, all_star_config(window, -0.5), 1.0, 0.5) == 0


def test_block_event_window_too_small():
    window = SpaceTimeWindow.around(O, 4, -1.5)
    with pytest.raises(WindowTooSmallError):
        block_event_indicator(O, 2, empty_config(window), 1.0, 0.5)


def test_block_event_matches_oracle():
    window = BlockSpec(2, O).window(0.5)
    r = 2 ** 0.5
    region = ball_vertices(O, 4)
    for i in range(40):
        config = sample_points(window, stream_for(90, i))
        bits = {v: field_bit_oracle(config, 0.9, v, r) for v in region}
        expected = connects_oracle(bits, sphere_vertices(O, 2), sphere_vertices(O, 4), region)
        assert block_event_indicator(O, 2, config, 0.9, 0.5) == int(expected)


def test_good_vertices_examples():
    region = ball_vertices(O, 8)
    full = OccupiedField.constant(region, 1)
    blocks = covering_region(8, 2, 2)
    good = good_vertices(full, 2, blocks)
    expected = [v for v in sorted(blocks) if any(w in full.bits for w in ball_vertices((2 * v[0], 2 * v[1]), 2))]
    assert list(good.members) == expected
    bits = dict(full.bits)
    bits[O] = 0
    assert len(good_vertices(OccupiedField(region, bits), 2, blocks)) == 0
    with pytest.raises(ParameterError):
        good_vertices(OccupiedField.constant(ball_vertices((5, 5), 1), 1), 2, blocks)


def test_covering_and_good_on_random_fields(rng):
    region = ball_vertices(O, 8)
    for _ in range(200):
        field_ = OccupiedField(region, {v: int(rng.random() < 0.6) for v in region})
        check = covering_check(field_, 2, 8)
        assert check.holds
        assert check.inner_ball_size == 13
        assert check.implies(check.cluster_size)
        good = good_vertices(field_, 2, covering_region(8, 2, 2))
        assert good_implies_block_event(field_, good) == []


def test_separated_subset():
    blocks = ball_vertices(O, 4)
    chosen = separated_subset(blocks, 3)
    assert chosen[0] == min(blocks)
    for i, a in enumerate(chosen):
        for b in chosen[i + 1:]:
            assert graph_distance(a, b) >= 3
    with pytest.raises(ParameterError):
        separated_subset(blocks, -1)


def test_regions_disjoint():
    assert regions_disjoint(O, (6, 0), 4, 0.5)
    assert not regions_disjoint(O, (2, 0), 4, 0.5)


def test_independence_requires_separation():
    with pytest.raises(SeparationError):
        independence_check(O, (5, 0), 2, 1.0, 0.5, 4, 1)


def test_independence_check():
    record = independence_check(O, (6, 0), 2, 1.0, 0.5, 150, 91)
    assert record.regions_disjoint
    assert 0.0 <= record.p_v.mean <= 1.0
    assert record.corr.replicas == 150
    assert record.consistent(sigmas=4.0)


def test_block_event_curve():
    curve = block_event_curve(1.0, (2, 4), 0.5, 30, 92)
    assert set(curve) == {2, 4}
    assert all(0.0 <= e.mean <= 1.0 for e in curve.values())


def test_block_event_decreases_with_scale():
    curve = block_event_curve(0.08, (2, 4, 6), 0.5, 200, 94)
    means = [curve[N].mean for N in (2, 4, 6)]
    assert all(a >= b for a, b in zip(means, means[1:]))
    assert means[0] > means[2]


def test_block_tail_experiment():
    result = block_tail_experiment(0.9, 2, [1, 2, 4, 8], 0.5, 60, 93)
    assert result.field_radius == 4
    assert result.covering_violations == 0
    assert result.good_violations == 0
    means = [result.tail[m].mean for m in (1, 2, 4, 8)]
    assert all(a >= b for a, b in zip(means, means[1:]))
    assert result.cluster_sizes.shape == (60,)
    assert np.all(result.good_counts >= 0)
    assert list(result.table()["quantity"]) == ["tail"] * 4 + ["block-event"]
    with pytest.raises(ParameterError):
        block_tail_experiment(0.9, 2, [1], 0.5, 4, 93, field_radius=3)
