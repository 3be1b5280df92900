"""Exhaustive search for the cost-efficiency optimum over the (w, m) grid.

Every candidate pairs a bandwidth w in {5, 10, ..., W} MHz with an antenna
count m in {K, ..., M}; the objective is eta = rate / cost. The grid is a few
hundred points, so plain enumeration is both exact and fast. Ties go to the
smaller antenna count, then the smaller bandwidth, so repeated runs and
any evaluation order return the same optimum.
"""

from __future__ import annotations

from dataclasses import dataclass

from .economics import CostBreakdown, CostPoint, cost_efficiency, total_cost
from .radio import (Allocation, MODE_CORRECTED, MIN_BANDWIDTH_MHZ,
                    antenna_ranking, rate_from_power)
from .scenario import Scenario, received_power_vector
from .transport import (PonAssignment, TransportModel, assign_antennas_to_pons,
                        count_wavelengths, per_pon_wavelengths)


@dataclass(frozen=True)
class Evaluation:
    """One fully costed candidate."""

    allocation: Allocation
    sum_rate: float
    n_wavelengths: int
    cost: CostBreakdown
    eta: float
    feasibility_flag: bool
    numerator_mode: str
    pon_assignment: PonAssignment

    @property
    def feasible_per_pon(self) -> bool:
        return not self.feasibility_flag


@dataclass(frozen=True)
class Optimum:
    best: Evaluation
    grid_size: int


def _compose(s: Scenario, t: TransportModel, cp: CostPoint, a: Allocation,
             received_mw, pa: PonAssignment, mode: str) -> Evaluation:
    # Single composition point: optimize() and evaluate() must price a
    # candidate identically, bit for bit.
    rate = rate_from_power(received_mw, a.bandwidth_mhz, s.noise_mw_per_hz, mode)
    n_wavelengths = count_wavelengths(t, a.bandwidth_mhz, pa)
    cost = total_cost(cp, a.bandwidth_mhz, a.num_antennas, n_wavelengths)
    eta = cost_efficiency(rate, cost.total)
    usage = per_pon_wavelengths(t, a.bandwidth_mhz, pa)
    flagged = max(usage) > t.max_wavelengths_per_pon if usage else False
    return Evaluation(allocation=a, sum_rate=rate, n_wavelengths=n_wavelengths,
                      cost=cost, eta=eta, feasibility_flag=flagged,
                      numerator_mode=mode, pon_assignment=pa)


def evaluate(s: Scenario, t: TransportModel, cp: CostPoint, a: Allocation,
             mode: str = MODE_CORRECTED) -> Evaluation:
    """Cost and rate one candidate allocation; pure and deterministic."""
    received = received_power_vector(s, a.antenna_set)
    pa = assign_antennas_to_pons(s, a.antenna_set)
    return _compose(s, t, cp, a, received, pa, mode)


def optimize(s: Scenario, t: TransportModel, cp: CostPoint,
             max_bandwidth_mhz: int, mode: str = MODE_CORRECTED) -> Optimum:
    """Enumerate the full (w, m) grid and return the eta maximum.

    The antenna set for each m is the nested greedy prefix of the gain
    ranking, so per-user received powers are computed once per m and reused
    across the bandwidth axis.
    """
    if max_bandwidth_mhz < MIN_BANDWIDTH_MHZ:
        raise ValueError("empty bandwidth grid: maximum below 5 MHz")
    if max_bandwidth_mhz % MIN_BANDWIDTH_MHZ != 0:
        raise ValueError("maximum bandwidth must be a multiple of 5 MHz")
    k, m_max = s.num_users, s.num_antennas
    bandwidths = range(MIN_BANDWIDTH_MHZ, max_bandwidth_mhz + 1, MIN_BANDWIDTH_MHZ)
    ranking = antenna_ranking(s)

    best: Evaluation | None = None
    grid_size = 0
    for m in range(k, m_max + 1):
        antenna_set = tuple(int(j) for j in sorted(ranking[:m]))
        received = received_power_vector(s, antenna_set)
        pa = assign_antennas_to_pons(s, antenna_set)
        for w in bandwidths:
            ev = _compose(s, t, cp, Allocation(w, m, antenna_set), received, pa, mode)
            grid_size += 1
            # strict improvement only: m ascends in the outer loop and w in
            # the inner one, so the first maximum seen wins ties
            if best is None or ev.eta > best.eta:
                best = ev
    assert best is not None
    return Optimum(best=best, grid_size=grid_size)
