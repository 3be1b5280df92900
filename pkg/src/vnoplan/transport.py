"""PON wavelength counting for the overlay and shared-wavelength transport models.

A wavelength carries ``B_p`` 5-MHz radio channels, where B_p is derived from
the wavelength line rate and the per-5-MHz transport rate of the chosen
functional split. The defaults give B_p = 32 for fronthaul (0.3125 Gb/s per
5 MHz on a 10 Gb/s wavelength) and B_p = 320 for the split-PHY midhaul,
whose transport rate is ten times lower.

Overlay: a wavelength never serves more than one antenna site, so each of
the m sites needs ceil((w/5) / B_p) wavelengths even when the ceiling is
driven to one.

Shared: sites on the same PON are time-division multiplexed into common
wavelengths, so PON i needs ceil(m_i * (w/5) / B_p) with m_i sites in use.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .scenario import Scenario


class TransportVariant(str, enum.Enum):
    FRONTHAUL_OVERLAY = "fronthaul_overlay"
    FRONTHAUL_SHARED = "fronthaul_shared"
    SPLIT_PHY_SHARED = "split_phy_shared"


# Canonical report order for the three variants.
VARIANT_ORDER = (
    TransportVariant.FRONTHAUL_OVERLAY,
    TransportVariant.FRONTHAUL_SHARED,
    TransportVariant.SPLIT_PHY_SHARED,
)

FRONTHAUL_GBPS_PER_5MHZ = 0.3125   # 1.25 Gb/s per 20 MHz carrier
SPLIT_PHY_GBPS_PER_5MHZ = 0.03125  # midhaul at one tenth of fronthaul
DEFAULT_WAVELENGTH_GBPS = 10.0
DEFAULT_MAX_WAVELENGTHS_PER_PON = 8  # NG-PON2 stacks eight 10G channels


@dataclass(frozen=True)
class TransportModel:
    variant: TransportVariant
    wavelength_capacity_gbps: float = DEFAULT_WAVELENGTH_GBPS
    per_5mhz_gbps: float = FRONTHAUL_GBPS_PER_5MHZ
    max_wavelengths_per_pon: int = DEFAULT_MAX_WAVELENGTHS_PER_PON

    def __post_init__(self):
        if self.wavelength_capacity_gbps <= 0 or self.per_5mhz_gbps <= 0:
            raise ValueError("transport rates must be positive")
        if self.b_p < 1:
            raise ValueError("wavelength cannot carry a single 5 MHz channel")

    @property
    def b_p(self) -> int:
        """5-MHz channels per wavelength for this split."""
        return math.floor(self.wavelength_capacity_gbps / self.per_5mhz_gbps)

    @property
    def shares_wavelengths(self) -> bool:
        return self.variant is not TransportVariant.FRONTHAUL_OVERLAY


def fronthaul_overlay(**kw) -> TransportModel:
    return TransportModel(TransportVariant.FRONTHAUL_OVERLAY,
                          per_5mhz_gbps=kw.pop("per_5mhz_gbps", FRONTHAUL_GBPS_PER_5MHZ), **kw)


def fronthaul_shared(**kw) -> TransportModel:
    return TransportModel(TransportVariant.FRONTHAUL_SHARED,
                          per_5mhz_gbps=kw.pop("per_5mhz_gbps", FRONTHAUL_GBPS_PER_5MHZ), **kw)


def split_phy_shared(**kw) -> TransportModel:
    return TransportModel(TransportVariant.SPLIT_PHY_SHARED,
                          per_5mhz_gbps=kw.pop("per_5mhz_gbps", SPLIT_PHY_GBPS_PER_5MHZ), **kw)


@dataclass(frozen=True)
class PonAssignment:
    """Antennas in use per PON.

    ``per_pon`` is the uniform split (counts differ by at most one) that the
    shared-wavelength accounting uses; ``geometric_per_pon`` counts the
    selected sites on their geometric home PON before re-balancing.
    """

    per_pon: tuple[int, ...]
    geometric_per_pon: tuple[int, ...]

    def __post_init__(self):
        if sum(self.per_pon) != sum(self.geometric_per_pon):
            raise ValueError("balanced and geometric assignments disagree on the total")
        if self.per_pon and max(self.per_pon) - min(self.per_pon) > 1:
            raise ValueError("balanced assignment must be uniform within one antenna")

    @property
    def total(self) -> int:
        return sum(self.per_pon)


def assign_antennas_to_pons(s: Scenario, antenna_set) -> PonAssignment:
    """Distribute the selected sites uniformly over the PONs.

    Starts from the geometric homing counts and, while any two PONs differ by
    more than one antenna, moves one antenna from the fullest PON to the
    emptiest (lowest index on ties). Because homing itself is balanced, the
    emptiest PON always has a spare homed site, so the loop terminates with
    the unique uniform count multiset.
    """
    cols = np.asarray(sorted(antenna_set), dtype=int)
    if cols.size and (cols[0] < 0 or cols[-1] >= s.num_antennas):
        raise ValueError("antenna index out of range")
    homed = s.homed_counts()
    geometric = np.bincount(s.pon_homing[cols], minlength=s.num_pons) if cols.size \
        else np.zeros(s.num_pons, dtype=int)
    balanced = geometric.copy()
    for _ in range(s.num_antennas * s.num_pons + 1):
        hi = int(np.argmax(balanced))
        lo = int(np.argmin(balanced))
        if balanced[hi] - balanced[lo] <= 1:
            break
        if balanced[lo] >= homed[lo]:
            raise RuntimeError("re-balance blocked; PON homing is not uniform")
        balanced[hi] -= 1
        balanced[lo] += 1
    else:
        raise RuntimeError("re-balance did not converge")
    return PonAssignment(per_pon=tuple(int(x) for x in balanced),
                         geometric_per_pon=tuple(int(x) for x in geometric))


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _slots(bandwidth_mhz: int) -> int:
    if bandwidth_mhz < 5 or bandwidth_mhz % 5 != 0:
        raise ValueError(f"bandwidth must be a positive multiple of 5 MHz, got {bandwidth_mhz}")
    return bandwidth_mhz // 5


def wavelengths_overlay(bandwidth_mhz: int, num_antennas: int, b_p: int) -> int:
    """Total wavelengths when every site holds its own: m * ceil((w/5)/B_p)."""
    if num_antennas < 1:
        raise ValueError("need at least one antenna")
    if b_p < 1:
        raise ValueError("B_p must be at least 1")
    return num_antennas * _ceil_div(_slots(bandwidth_mhz), b_p)


def wavelengths_shared(bandwidth_mhz: int, pa: PonAssignment, b_p: int) -> int:
    """Total wavelengths with TDM sharing: sum_i ceil(m_i * (w/5) / B_p)."""
    if b_p < 1:
        raise ValueError("B_p must be at least 1")
    slots = _slots(bandwidth_mhz)
    return sum(_ceil_div(m_i * slots, b_p) for m_i in pa.per_pon)


def per_pon_wavelengths(t: TransportModel, bandwidth_mhz: int, pa: PonAssignment) -> tuple[int, ...]:
    """Wavelengths in use on each PON, for feasibility reporting.

    Overlay usage follows the geometric homing (each site's wavelengths live
    on its home PON); shared usage follows the balanced assignment.
    """
    slots = _slots(bandwidth_mhz)
    if t.shares_wavelengths:
        return tuple(_ceil_div(m_i * slots, t.b_p) for m_i in pa.per_pon)
    per_site = _ceil_div(slots, t.b_p)
    return tuple(g * per_site for g in pa.geometric_per_pon)


def count_wavelengths(t: TransportModel, bandwidth_mhz: int, pa: PonAssignment) -> int:
    """Wavelength count under the model's sharing rule."""
    if t.shares_wavelengths:
        return wavelengths_shared(bandwidth_mhz, pa, t.b_p)
    return wavelengths_overlay(bandwidth_mhz, pa.total, t.b_p)
