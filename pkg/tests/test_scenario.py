import math

import numpy as np
import pytest

from vnoplan import (PropagationConfig, ScenarioConfig, build_scenario,
                     dump_scenario, load_scenario, received_power,
                     received_power_vector)
from vnoplan.scenario import dumps_scenario, loads_scenario

from conftest import make_manual_scenario


def test_default_counts(default_scenario):
    s = default_scenario
    assert s.num_users == 20
    assert s.num_antennas == 64
    assert s.num_dwellings == 570
    assert s.num_habitants == 1350
    # 570 dwellings + 64 sites over a 64-way split
    assert s.num_pons == math.ceil((570 + 64) / 64) == 10


def test_density_scale_4():
    s = build_scenario(ScenarioConfig(density_scale=4.0))
    assert s.num_users == 80
    assert s.num_antennas == 256
    assert s.num_dwellings == 2280
    assert s.num_pons == math.ceil((2280 + 256) / 64) == 40


def test_determinism():
    a = build_scenario(ScenarioConfig())
    b = build_scenario(ScenarioConfig())
    assert np.array_equal(a.user_positions, b.user_positions)
    assert np.array_equal(a.antenna_positions, b.antenna_positions)
    assert np.array_equal(a.gain_matrix, b.gain_matrix)
    assert np.array_equal(a.pon_homing, b.pon_homing)


def test_seed_changes_users_not_grid():
    a = build_scenario(ScenarioConfig(rng_seed=1))
    b = build_scenario(ScenarioConfig(rng_seed=2))
    assert not np.array_equal(a.user_positions, b.user_positions)
    assert np.array_equal(a.antenna_positions, b.antenna_positions)


def test_antenna_grid_geometry(default_scenario):
    pos = default_scenario.antenna_positions
    # 8x8 grid, 125 m pitch, centred: first site at 62.5 m
    assert pos.shape == (64, 2)
    assert pos[0] == pytest.approx([0.0625, 0.0625])
    assert pos[63] == pytest.approx([0.9375, 0.9375])
    assert pos[1][0] == pytest.approx(0.1875)  # row-major scan along x


def test_positions_quantized(default_scenario):
    s = default_scenario
    assert np.array_equal(s.user_positions, np.round(s.user_positions, 6))


def test_gain_entries_positive_finite_bounded(default_scenario):
    s = default_scenario
    g = s.gain_matrix
    assert np.all(np.isfinite(g))
    assert np.all(g > 0)
    assert np.all(g <= s.config.propagation.max_gain)


def test_gain_at_antenna_position_hits_floor():
    prop = PropagationConfig(path_loss_exponent=3.0, ref_loss_db=140.7,
                             min_distance_m=35.0)
    s = make_manual_scenario([[prop.max_gain]], num_pons=1, pon_homing=[0],
                             config=ScenarioConfig(num_users=1, num_antennas=1,
                                                   propagation=prop))
    pl_35m = 140.7 + 10 * 3.0 * math.log10(0.035)
    assert s.gain_matrix[0][0] == pytest.approx(10 ** (-pl_35m / 10), rel=1e-12)
    # the floor also caps gains computed from an actual zero distance
    assert prop.gain(0.0) == s.gain_matrix[0][0]


def test_homing_balance_and_roundrobin(default_scenario):
    s = default_scenario
    counts = s.homed_counts()
    assert counts.max() - counts.min() <= 1
    assert list(counts) == [7, 7, 7, 7, 6, 6, 6, 6, 6, 6]
    assert s.pon_homing[0] == 0 and s.pon_homing[10] == 0 and s.pon_homing[13] == 3


def test_received_power_single_antenna(default_scenario):
    s = default_scenario
    r = received_power(s, 3, [17])
    assert r == pytest.approx(s.tx_power_mw * s.gain_matrix[3, 17], rel=1e-12)


def test_received_power_additive_over_disjoint_sets(default_scenario):
    s = default_scenario
    a1, a2 = range(0, 20), range(20, 64)
    total = received_power(s, 0, list(a1) + list(a2))
    assert total == pytest.approx(received_power(s, 0, a1) + received_power(s, 0, a2),
                                  rel=1e-12)


def test_received_power_monotone_in_set(default_scenario):
    s = default_scenario
    grown = [received_power(s, 5, range(m)) for m in range(1, 65)]
    assert all(b > a for a, b in zip(grown, grown[1:]))


def test_received_power_vector_matches_scalar(default_scenario):
    s = default_scenario
    vec = received_power_vector(s, range(64))
    for k in (0, 7, 19):
        assert received_power(s, k, range(64)) == vec[k]


def test_rejects_more_users_than_antennas():
    with pytest.raises(ValueError, match="antennas as users"):
        build_scenario(ScenarioConfig(num_users=65, num_antennas=64))


def test_rejects_non_square_antenna_count():
    with pytest.raises(ValueError, match="square"):
        build_scenario(ScenarioConfig(num_users=10, num_antennas=60))


def test_rejects_scaled_non_square():
    with pytest.raises(ValueError, match="square"):
        build_scenario(ScenarioConfig(density_scale=2.0))


def test_rejects_empty_antenna_set(default_scenario):
    with pytest.raises(ValueError, match="empty"):
        received_power(default_scenario, 0, [])


def test_rejects_bad_indices(default_scenario):
    with pytest.raises(ValueError):
        received_power(default_scenario, 0, [64])
    with pytest.raises(ValueError):
        received_power(default_scenario, 20, [0])


def test_propagation_validation():
    with pytest.raises(ValueError):
        PropagationConfig(path_loss_exponent=2.0)
    with pytest.raises(ValueError):
        PropagationConfig(min_distance_m=0.0)


def test_dump_load_roundtrip(tmp_path, default_scenario):
    s = default_scenario
    path = tmp_path / "scenario.json"
    dump_scenario(s, path)
    s2 = load_scenario(path)
    assert s2.config == s.config
    assert np.array_equal(s2.user_positions, s.user_positions)
    assert np.array_equal(s2.antenna_positions, s.antenna_positions)
    assert np.array_equal(s2.gain_matrix, s.gain_matrix)
    assert np.array_equal(s2.pon_homing, s.pon_homing)
    assert s2.num_pons == s.num_pons


def test_dump_is_stable_text(default_scenario):
    assert dumps_scenario(default_scenario) == dumps_scenario(default_scenario)


def test_load_rejects_foreign_document():
    with pytest.raises(ValueError, match="format"):
        loads_scenario('{"format": "something-else"}')
