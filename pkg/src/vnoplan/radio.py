"""Shannon sum rate of a distributed-MIMO allocation.

An allocation is a bandwidth ``w`` (multiple of 5 MHz) together with ``m``
antenna sites. All users share the whole band simultaneously; the per-user
SNR uses the aggregate received power over the selected antennas against the
effective noise floor N * w.

Two numerator conventions are supported:

* ``corrected`` (default): total rate in bit/s, w * sum_k log2(1 + SNR_k).
* ``literal``: the bare spectral-efficiency sum, sum_k log2(1 + SNR_k),
  dimensionless. Useful as an audit mode; it makes the smallest bandwidth
  always win, because the sum decreases in w while every cost grows with it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scenario import Scenario, received_power_vector

MODE_CORRECTED = "corrected"
MODE_LITERAL = "literal"
NUMERATOR_MODES = (MODE_CORRECTED, MODE_LITERAL)

MIN_BANDWIDTH_MHZ = 5


@dataclass(frozen=True)
class Allocation:
    """A candidate point: bandwidth in MHz plus an explicit antenna set."""

    bandwidth_mhz: int
    num_antennas: int
    antenna_set: tuple[int, ...]

    def __post_init__(self):
        w = self.bandwidth_mhz
        if w < MIN_BANDWIDTH_MHZ or w % MIN_BANDWIDTH_MHZ != 0:
            raise ValueError(f"bandwidth must be a positive multiple of 5 MHz, got {w}")
        aset = tuple(sorted(self.antenna_set))
        if len(set(aset)) != len(aset):
            raise ValueError("antenna_set contains duplicates")
        if len(aset) != self.num_antennas:
            raise ValueError(
                f"antenna_set size {len(aset)} does not match num_antennas {self.num_antennas}"
            )
        object.__setattr__(self, "antenna_set", aset)


def antenna_ranking(s: Scenario) -> np.ndarray:
    """All antenna indices ordered by decreasing aggregate gain over the users.

    Ties break toward the lower index, so the ranking is deterministic and the
    top-m prefix is nested in the top-(m+1) prefix.
    """
    col_sums = s.gain_matrix.sum(axis=0)
    return np.lexsort((np.arange(s.num_antennas), -col_sums))


def select_antennas(s: Scenario, m: int) -> tuple[int, ...]:
    """The m strongest antenna sites (by gain column sum), ascending indices."""
    if not s.num_users <= m <= s.num_antennas:
        raise ValueError(
            f"antenna count {m} outside [{s.num_users}, {s.num_antennas}]"
        )
    return tuple(int(j) for j in np.sort(antenna_ranking(s)[:m]))


def rate_from_power(received_mw: np.ndarray, bandwidth_mhz: int,
                    noise_mw_per_hz: float, mode: str = MODE_CORRECTED) -> float:
    """Sum rate from per-user received powers; single implementation point."""
    if mode not in NUMERATOR_MODES:
        raise ValueError(f"unknown numerator mode {mode!r}")
    w_hz = bandwidth_mhz * 1e6
    snr = received_mw / (noise_mw_per_hz * w_hz)
    total = float(np.log2(1.0 + snr).sum())
    if mode == MODE_LITERAL:
        return total
    return w_hz * total


def snr_per_user(s: Scenario, a: Allocation) -> np.ndarray:
    """Linear per-user SNR for the allocation."""
    _check_allocation(s, a)
    r = received_power_vector(s, a.antenna_set)
    return r / (s.noise_mw_per_hz * a.bandwidth_mhz * 1e6)


def sum_rate(s: Scenario, a: Allocation, mode: str = MODE_CORRECTED) -> float:
    """Rate of the allocation: bit/s in corrected mode, dimensionless in literal."""
    _check_allocation(s, a)
    r = received_power_vector(s, a.antenna_set)
    return rate_from_power(r, a.bandwidth_mhz, s.noise_mw_per_hz, mode)


def _check_allocation(s: Scenario, a: Allocation) -> None:
    if not s.num_users <= a.num_antennas <= s.num_antennas:
        raise ValueError(
            f"antenna count {a.num_antennas} outside [{s.num_users}, {s.num_antennas}]"
        )
    if a.antenna_set[-1] >= s.num_antennas:
        raise ValueError("antenna index out of range for this scenario")
