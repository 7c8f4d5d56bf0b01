"""
占据簇、穿越事件与渗流估计量测试
"""

import numpy as np
import pytest

from cplab.errors import ParameterError
from cplab.graphical import OccupiedField, sample_points
from cplab.harness import stream_for
from cplab.lattice import ball_vertices, origin, sphere_vertices
from cplab.percolation import (
    cluster_of,
    cluster_size_tail,
    connects,
    crossing_event,
    crossing_indicator,
    estimate_s,
    estimate_theta,
    estimate_theta_curve,
    fit_theta_decay,
    theta_matrix,
    theta_window,
    truncation_gap_curve,
    truncation_gap_indicators,
)

from oracles import all_star_config, cluster_oracle, connects_oracle, crossing_oracle, empty_config

O = (0, 0)
BOX = ball_vertices(O, 3)


def random_field(rng, p=0.6, region=BOX):
    return OccupiedField(region, {v: int(rng.random() < p) for v in region})


def test_cluster_examples():
    region = ball_vertices(O, 2)
    full = OccupiedField.constant(region, 1)
    assert cluster_of(full, [O]).size == 13
    bits = dict(full.bits)
    bits[O] = 0
    assert cluster_of(OccupiedField(region, bits), [O]).size == 0


def test_cluster_l_shape():
    region = [(x, y) for x in range(3) for y in range(3)]
    occupied = {(0, 0), (1, 0), (2, 0), (2, 1), (2, 2)}
    field_ = OccupiedField(tuple(region), {v: int(v in occupied) for v in region})
    cluster = cluster_of(field_, [(0, 0)], targets={"corner": [(2, 2)], "middle": [(1, 1)]})
    assert set(cluster.members) == occupied
    assert cluster.touched_targets == {"corner": True, "middle": False}


def test_cluster_matches_label_oracle(rng):
    for _ in range(200):
        field_ = random_field(rng)
        forward = cluster_of(field_, [O])
        backward = cluster_of(field_, [O], reverse=True)
        assert forward.members == backward.members
        assert frozenset(forward.members) == cluster_oracle(field_.bits, O, BOX)


def test_cluster_rejects_stray_sources():
    field_ = OccupiedField.constant(BOX, 1)
    with pytest.raises(ParameterError):
        cluster_of(field_, [(5, 5)])
    with pytest.raises(ParameterError):
        cluster_of(field_, [O], region=ball_vertices(O, 4))


def test_connects_on_constant_fields():
    sphere = sphere_vertices(O, 3)
    assert connects(OccupiedField.constant(BOX, 1), [O], sphere)
    assert not connects(OccupiedField.constant(BOX, 0), [O], sphere)
    assert connects(OccupiedField.constant(BOX, 1), [O], [O])


def test_connects_matches_label_oracle(rng):
    sphere = sphere_vertices(O, 3)
    for _ in range(500):
        field_ = random_field(rng)
        expected = connects_oracle(field_.bits, [O], sphere, BOX)
        assert connects(field_, [O], sphere) == expected
        assert connects(field_, sphere, [O]) == expected


def test_connects_monotone_in_field(rng):
    sphere = sphere_vertices(O, 3)
    for _ in range(200):
        field_ = random_field(rng, p=0.5)
        if not connects(field_, [O], sphere):
            continue
        bits = dict(field_.bits)
        bits[tuple(int(a) for a in rng.integers(-1, 2, size=2))] = 1
        assert connects(OccupiedField(BOX, bits), [O], sphere)


def test_crossing_event_examples():
    region = ball_vertices(O, 4)
    bits = {v: 0 for v in region}
    for v in [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]:
        bits[v] = 1
    field_ = OccupiedField(region, bits)
    assert crossing_event(field_, 3)
    bits[(2, 0)] = 0
    bits.update({(2, 1): 1, (2, -1): 1})
    assert not crossing_event(OccupiedField(region, bits), 3)


def test_crossing_indicator_on_fixtures():
    window = theta_window(4, 0.5)
    assert crossing_indicator(empty_config(window), 1.0, 4, 0.5) == 1
    assert crossing_indicator(all_star_config(window, -1.0), 1.0, 4, 0.5) == 0


def test_crossing_indicator_matches_oracle():
    window = theta_window(3, 0.5)
    for i in range(120):
        config = sample_points(window, stream_for(99, i))
        for lam in (0.4, 1.0):
            assert crossing_indicator(config, lam, 3, 0.5) == crossing_oracle(config, lam, 3, 0.5)


def test_theta_estimate_matches_oracle_on_shared_seeds():
    estimate = estimate_theta(0.8, 3, 0.5, 60, 17)
    window = theta_window(3, 0.5)
    oracle = [crossing_oracle(sample_points(window, stream_for(17, i)), 0.8, 3, 0.5) for i in range(60)]
    assert estimate.mean == pytest.approx(np.mean(oracle))


def test_theta_matrix_monotone():
    window = theta_window(4, 0.5)
    lambdas, ns = [0.2, 0.5, 1.0, 2.0], [1, 2, 3, 4]
    for i in range(40):
        matrix = theta_matrix(sample_points(window, stream_for(3, i)), lambdas, ns, 0.5)
        assert (np.diff(matrix.astype(int), axis=0) >= 0).all()
        assert (np.diff(matrix.astype(int), axis=1) <= 0).all()


def test_theta_curve_has_no_violations():
    curve = estimate_theta_curve([0.3, 0.6, 1.2], [1, 2, 3], 0.5, 80, 2024)
    assert curve.indicators.shape == (80, 3, 3)
    assert curve.lambda_violations() == 0
    assert curve.n_violations() == 0
    single = estimate_theta(0.6, 3, 0.5, 80, 2024)
    assert curve.estimate(0.6, 3).mean == single.mean
    table = curve.table()
    assert list(table.columns) == ["lambda", "n", "estimate", "stderr", "replicas"]
    assert len(table) == 9


def test_theta_curve_independent_of_workers():
    serial = estimate_theta_curve([0.5, 1.0], [2, 3], 0.5, 24, 8, workers=1)
    parallel = estimate_theta_curve([0.5, 1.0], [2, 3], 0.5, 24, 8, workers=2)
    assert np.array_equal(serial.indicators, parallel.indicators)


def test_theta_curve_validation():
    with pytest.raises(ParameterError):
        estimate_theta_curve([1.0, 0.5], [2], 0.5, 4, 1)
    with pytest.raises(ParameterError):
        estimate_theta_curve([1.0], [2], 1.5, 4, 1)
    with pytest.raises(ParameterError):
        estimate_theta_curve([1.0], [0, 1], 0.5, 4, 1)


def test_fit_theta_decay():
    curve = estimate_theta_curve([0.3], [1, 2, 3, 4], 0.5, 100, 5)
    fit = fit_theta_decay(curve, 0.3)
    assert fit.points_used + fit.points_dropped == 4
    with pytest.raises(ParameterError):
        fit_theta_decay(curve, 0.3, beta=0.0)


def test_estimate_s():
    s1 = estimate_s(0.7, 1, 0.5, 50, 4)
    assert s1.mean == estimate_theta(0.7, 1, 0.5, 50, 4).mean
    s3 = estimate_s(0.7, 3, 0.5, 50, 4)
    # 每个副本的 S_3 包含同一配置上的 θ_3 指示
    assert s3.mean >= estimate_theta(0.7, 3, 0.5, 50, 4).mean
    assert 0.0 <= s3.mean <= 3.0


def test_cluster_size_tail():
    result = cluster_size_tail(0.15, [0, 1, 2, 3, 4, 500], 6, 0.5, 200, 21)
    assert result.estimates[0].mean == 1.0
    assert result.estimates[500].mean == 0.0
    means = [result.estimates[m].mean for m in result.sizes]
    assert all(a >= b for a, b in zip(means, means[1:]))
    assert 0.0 <= result.edge_touch_fraction <= 1.0
    assert result.cluster_sizes.shape == (200,)
    assert result.fit.points_used + result.fit.points_dropped == 5
    assert result.fit.is_valid
    assert result.fit.rate < 0


def test_subcritical_tail_fit_quality():
    """m = 1..12 的对数尾部接近直线，原点簇几乎不触及盒子边界"""
    sizes = list(range(1, 13))
    result = cluster_size_tail(0.08, sizes, 8, 0.5, 4000, 2024)
    assert result.fit.is_valid
    assert result.fit.points_used >= 10
    assert result.fit.rate < 0
    assert result.fit.r_squared >= 0.98
    assert result.edge_touch_fraction < 0.01


def test_tail_at_small_theta():
    """θ̂_3 < 0.05 的 λ 上尾部仍单调衰减"""
    lam = 0.002
    theta = estimate_theta(lam, 3, 0.5, 2000, 2025)
    assert theta.mean < 0.05
    result = cluster_size_tail(lam, list(range(1, 13)), 6, 0.5, 4000, 2025)
    means = [result.estimates[m].mean for m in result.sizes]
    assert all(a >= b for a, b in zip(means, means[1:]))
    assert result.estimates[12].mean == 0.0
    assert result.fit.is_valid
    assert result.fit.rate < 0
    assert result.edge_touch_fraction < 0.01


def test_gap_indicators_vanish_at_reference(random_configs):
    for config in random_configs[:40]:
        assert truncation_gap_indicators(config, 0.5, [2.0], 2.0) == [0]
        gaps = truncation_gap_indicators(config, 0.5, [1.0, 1.5, 2.0], 2.0)
        assert all(a >= b for a, b in zip(gaps, gaps[1:]))
    with pytest.raises(ParameterError):
        truncation_gap_indicators(random_configs[0], 0.5, [2.5], 2.0)


def test_truncation_gap_curve():
    result = truncation_gap_curve(0.8, [1, 2, 4], 0.5, 2.0, 60, 13)
    assert result.reference_radius == pytest.approx(4.0)
    assert result.monotonicity_violations() == 0
    assert result.indicators.shape == (60, 3)
    with pytest.raises(ParameterError):
        truncation_gap_curve(0.8, [1, 2], 0.5, 1.0, 10, 13)


def test_truncation_gap_decays_when_supercritical():
    result = truncation_gap_curve(2.0, [1, 4, 9, 16], 0.5, 2.0, 2000, 14)
    assert result.reference_radius == pytest.approx(8.0)
    assert result.monotonicity_violations() == 0
    means = [result.estimates[n].mean for n in result.ns]
    assert all(a >= b for a, b in zip(means, means[1:]))
    assert means[0] > 0
    assert result.fit.is_valid
    assert result.fit.rate < 0
