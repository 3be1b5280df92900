"""Deterministic synthetic deployment: user drop, antenna grid, PON homing, path gains.

A scenario places M antenna sites on a regular grid inside a square service
area, draws K user positions from a seeded generator, and derives the linear
power-gain matrix G (K x M) from a log-distance path-loss law with a gain
floor below ``min_distance_m``. Antenna sites are homed round-robin onto
PONs; the PON count is sized so one split port serves each dwelling and each
antenna site.

All randomness comes from numpy's PCG64 generator seeded with ``rng_seed``,
so an identical config reproduces the scenario bit for bit on any platform.
Positions are quantized to 6 decimal places (millimetres, in km units) at
construction, which makes the dump file a lossless record of the scenario.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, asdict

import numpy as np

DUMP_FORMAT = "vnoplan-scenario"
DUMP_VERSION = 1

_POSITION_DECIMALS = 6  # km with 6 decimals = 1 mm resolution


@dataclass(frozen=True)
class PropagationConfig:
    """Log-distance path loss: PL(d) = ref_loss_db + 10*alpha*log10(d / 1 km).

    Distances below ``min_distance_m`` are clamped, which bounds the gain and
    keeps the aggregate received power of a dense antenna set well behaved.
    """

    path_loss_exponent: float = 2.2
    ref_loss_db: float = 140.7
    min_distance_m: float = 200.0

    def __post_init__(self):
        if not self.path_loss_exponent > 2.0:
            raise ValueError("path_loss_exponent must exceed 2")
        if not self.min_distance_m > 0.0:
            raise ValueError("min_distance_m must be positive")

    def path_loss_db(self, distance_km):
        d = np.maximum(np.asarray(distance_km, dtype=float), self.min_distance_m / 1000.0)
        return self.ref_loss_db + 10.0 * self.path_loss_exponent * np.log10(d)

    def gain(self, distance_km):
        """Linear power gain at a distance given in km."""
        return 10.0 ** (-self.path_loss_db(distance_km) / 10.0)

    @property
    def max_gain(self) -> float:
        """Gain at the clamp distance; an upper bound for every matrix entry."""
        return float(self.gain(self.min_distance_m / 1000.0))


@dataclass(frozen=True)
class ScenarioConfig:
    """Inputs for one synthetic deployment.

    ``density_scale`` multiplies users, antenna sites, dwellings and habitants
    together, so a denser variant keeps the same mix of resources per head.
    """

    area_side_km: float = 1.0
    num_users: int = 20
    num_antennas: int = 64
    dwellings_per_km2: int = 570
    habitants_per_km2: int = 1350
    pon_split: int = 64
    density_scale: float = 1.0
    rng_seed: int = 42
    propagation: PropagationConfig = field(default_factory=PropagationConfig)
    tx_power_dbm: float = 14.0
    noise_density_dbm_hz: float = -174.0
    noise_figure_db: float = 9.0

    def __post_init__(self):
        if self.area_side_km <= 0:
            raise ValueError("area_side_km must be positive")
        if self.num_users < 1:
            raise ValueError("need at least one user")
        if self.pon_split < 1:
            raise ValueError("pon_split must be at least 1")
        if self.density_scale <= 0:
            raise ValueError("density_scale must be positive")

    # resolved counts after density scaling
    @property
    def users(self) -> int:
        return int(round(self.num_users * self.density_scale))

    @property
    def antennas(self) -> int:
        return int(round(self.num_antennas * self.density_scale))

    @property
    def dwellings(self) -> int:
        return int(round(self.dwellings_per_km2 * self.area_side_km**2 * self.density_scale))

    @property
    def habitants(self) -> int:
        return int(round(self.habitants_per_km2 * self.area_side_km**2 * self.density_scale))

    @property
    def tx_power_mw(self) -> float:
        """Per-symbol transmit power in linear mW."""
        return 10.0 ** (self.tx_power_dbm / 10.0)

    @property
    def noise_mw_per_hz(self) -> float:
        """Effective noise density (thermal + receiver noise figure), mW/Hz."""
        return 10.0 ** ((self.noise_density_dbm_hz + self.noise_figure_db) / 10.0)


@dataclass(frozen=True, eq=False)
class Scenario:
    """Immutable deployment: positions in km, linear gains, PON homing.

    Safe for concurrent reads; all arrays are write-protected.
    """

    config: ScenarioConfig
    user_positions: np.ndarray     # (K, 2) km
    antenna_positions: np.ndarray  # (M, 2) km
    gain_matrix: np.ndarray        # (K, M) linear power gain
    pon_homing: np.ndarray         # (M,) antenna index -> PON index
    num_pons: int
    num_dwellings: int
    num_habitants: int

    @property
    def num_users(self) -> int:
        return self.user_positions.shape[0]

    @property
    def num_antennas(self) -> int:
        return self.antenna_positions.shape[0]

    @property
    def tx_power_mw(self) -> float:
        return self.config.tx_power_mw

    @property
    def noise_mw_per_hz(self) -> float:
        return self.config.noise_mw_per_hz

    def homed_counts(self) -> np.ndarray:
        """Antennas homed on each PON; counts differ by at most one."""
        return np.bincount(self.pon_homing, minlength=self.num_pons)


def _antenna_grid(m: int, side_km: float) -> np.ndarray:
    """Uniform sqrt(M) x sqrt(M) grid centred in the area, row-major scan order."""
    n = math.isqrt(m)
    if n * n != m:
        raise ValueError(f"grid placement needs a square antenna count, got {m}")
    step = side_km / n
    idx = np.arange(m)
    x = (idx % n + 0.5) * step
    y = (idx // n + 0.5) * step
    return np.round(np.column_stack([x, y]), _POSITION_DECIMALS)


def _assemble(cfg: ScenarioConfig, users_km: np.ndarray, antennas_km: np.ndarray) -> Scenario:
    k, m = users_km.shape[0], antennas_km.shape[0]
    if k > m:
        raise ValueError(f"need at least as many antennas as users, got K={k} > M={m}")
    dwellings = cfg.dwellings
    num_pons = math.ceil((dwellings + m) / cfg.pon_split)
    pon_homing = np.arange(m) % num_pons

    d = np.hypot(
        users_km[:, None, 0] - antennas_km[None, :, 0],
        users_km[:, None, 1] - antennas_km[None, :, 1],
    )
    gain = cfg.propagation.gain(d)

    for arr in (users_km, antennas_km, gain, pon_homing):
        arr.flags.writeable = False
    return Scenario(
        config=cfg,
        user_positions=users_km,
        antenna_positions=antennas_km,
        gain_matrix=gain,
        pon_homing=pon_homing,
        num_pons=num_pons,
        num_dwellings=dwellings,
        num_habitants=cfg.habitants,
    )


def build_scenario(cfg: ScenarioConfig) -> Scenario:
    """Build the deployment for ``cfg``; pure function of the config.

    Antenna sites sit on a centred uniform grid, users are drawn uniformly
    from PCG64(rng_seed), and antennas are homed round-robin over
    ceil((dwellings + M) / pon_split) PONs in grid-scan order.
    """
    k, m = cfg.users, cfg.antennas
    if k < 1:
        raise ValueError("need at least one user after density scaling")
    if k > m:
        raise ValueError(f"need at least as many antennas as users, got K={k} > M={m}")
    antennas_km = _antenna_grid(m, cfg.area_side_km)
    rng = np.random.default_rng(cfg.rng_seed)
    users_km = np.round(rng.random((k, 2)) * cfg.area_side_km, _POSITION_DECIMALS)
    return _assemble(cfg, users_km, antennas_km)


def received_power_vector(s: Scenario, antennas) -> np.ndarray:
    """Aggregate received power (mW) of every user over the antenna set.

    The model sums the per-antenna contributions: r_k = P * sum_j G[k, j].
    """
    cols = np.asarray(sorted(antennas), dtype=int)
    if cols.size == 0:
        raise ValueError("antenna set must not be empty")
    if cols[0] < 0 or cols[-1] >= s.num_antennas:
        raise ValueError("antenna index out of range")
    if np.unique(cols).size != cols.size:
        raise ValueError("antenna set contains duplicates")
    return s.tx_power_mw * s.gain_matrix[:, cols].sum(axis=1)


def received_power(s: Scenario, user: int, antennas) -> float:
    """Received power (mW) of one user over the antenna set."""
    if not 0 <= user < s.num_users:
        raise ValueError(f"user index {user} out of range")
    return float(received_power_vector(s, antennas)[user])


def _scenario_to_dict(s: Scenario) -> dict:
    cfg = s.config
    cfg_dict = asdict(cfg)
    return {
        "format": DUMP_FORMAT,
        "version": DUMP_VERSION,
        "config": cfg_dict,
        "resolved": {
            "num_users": s.num_users,
            "num_antennas": s.num_antennas,
            "num_dwellings": s.num_dwellings,
            "num_habitants": s.num_habitants,
            "num_pons": s.num_pons,
        },
        "user_positions_km": [[round(float(x), _POSITION_DECIMALS) for x in p]
                              for p in s.user_positions],
        "antenna_positions_km": [[round(float(x), _POSITION_DECIMALS) for x in p]
                                 for p in s.antenna_positions],
        "pon_homing": [int(p) for p in s.pon_homing],
    }


def dumps_scenario(s: Scenario) -> str:
    """Serialize to the documented JSON dump (positions at 6 decimals, km)."""
    return json.dumps(_scenario_to_dict(s), indent=2, sort_keys=True) + "\n"


def dump_scenario(s: Scenario, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_scenario(s))


def loads_scenario(text: str) -> Scenario:
    """Rebuild a scenario from its dump; gains are recomputed from positions."""
    doc = json.loads(text)
    if doc.get("format") != DUMP_FORMAT:
        raise ValueError(f"not a scenario dump (format={doc.get('format')!r})")
    if doc.get("version") != DUMP_VERSION:
        raise ValueError(f"unsupported dump version {doc.get('version')!r}")
    cfg_dict = dict(doc["config"])
    cfg_dict["propagation"] = PropagationConfig(**cfg_dict["propagation"])
    cfg = ScenarioConfig(**cfg_dict)
    users_km = np.array(doc["user_positions_km"], dtype=float).reshape(-1, 2)
    antennas_km = np.array(doc["antenna_positions_km"], dtype=float).reshape(-1, 2)
    s = _assemble(cfg, users_km, antennas_km)
    resolved = doc["resolved"]
    if resolved["num_pons"] != s.num_pons:
        raise ValueError("dump is inconsistent: stored PON count does not match")
    if list(doc["pon_homing"]) != [int(p) for p in s.pon_homing]:
        raise ValueError("dump is inconsistent: stored homing does not match")
    return s


def load_scenario(path) -> Scenario:
    with open(path, encoding="utf-8") as fh:
        return loads_scenario(fh.read())
