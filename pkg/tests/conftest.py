import numpy as np
import pytest

from vnoplan import ScenarioConfig, Scenario, build_scenario


@pytest.fixture(scope="session")
def default_scenario() -> Scenario:
    return build_scenario(ScenarioConfig())


def make_manual_scenario(gain_matrix, num_pons, pon_homing, config=None) -> Scenario:
    """Hand-built scenario for small analytic cases; positions are placeholders."""
    gain = np.asarray(gain_matrix, dtype=float)
    k, m = gain.shape
    cfg = config or ScenarioConfig(num_users=k, num_antennas=m)
    users = np.zeros((k, 2))
    antennas = np.zeros((m, 2))
    homing = np.asarray(pon_homing, dtype=int)
    for arr in (users, antennas, gain, homing):
        arr.flags.writeable = False
    return Scenario(config=cfg, user_positions=users, antenna_positions=antennas,
                    gain_matrix=gain, pon_homing=homing, num_pons=num_pons,
                    num_dwellings=cfg.dwellings, num_habitants=cfg.habitants)
