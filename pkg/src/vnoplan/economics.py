"""Lease prices, cost ratios, total cost and cost efficiency.

Internally every price lives in a common currency unit ("cu") per common
period. Two dimensionless ratios describe a market point:

* ``r_wb`` = c_w / c_b, spectrum (per MHz) against one PON wavelength;
* ``r_bm`` = c_b / c_m, one PON wavelength against one antenna site.

``reference_cost_point`` rebuilds the published-lease reference in USD/year:
a site at 1900 USD/month, a wavelength at 1510 USD/year, and spectrum at
0.1138 GBP per MHz per habitant over a 20-year lease. The GBP->USD factor
defaults to 1.278, a documented reconstruction chosen so the spectrum ratio
lands on 0.0065; override it if you have the actual conversion for your
market.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CostPoint:
    """Lease prices per common period: spectrum per MHz, one site, one wavelength."""

    c_w: float
    c_m: float
    c_b: float

    def __post_init__(self):
        if min(self.c_w, self.c_m, self.c_b) <= 0:
            raise ValueError("lease prices must be strictly positive")

    def ratios(self) -> "CostRatios":
        return CostRatios(r_wb=self.c_w / self.c_b, r_bm=self.c_b / self.c_m)


@dataclass(frozen=True)
class CostRatios:
    r_wb: float
    r_bm: float

    def __post_init__(self):
        if self.r_wb <= 0 or self.r_bm <= 0:
            raise ValueError("cost ratios must be strictly positive")


@dataclass(frozen=True)
class ReferenceCostInputs:
    """Published lease figures used to derive the reference ratios."""

    spectrum_price_gbp_per_mhz_per_habitant: float = 0.1138
    habitants: int = 1350
    lease_years: float = 20.0
    site_monthly_usd: float = 1900.0
    wavelength_annual_usd: float = 1510.0
    fx_gbp_usd: float = 1.278

    def __post_init__(self):
        for name, v in (("spectrum price", self.spectrum_price_gbp_per_mhz_per_habitant),
                        ("habitants", self.habitants),
                        ("lease_years", self.lease_years),
                        ("site_monthly_usd", self.site_monthly_usd),
                        ("wavelength_annual_usd", self.wavelength_annual_usd),
                        ("fx_gbp_usd", self.fx_gbp_usd)):
            if v <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class CostBreakdown:
    antennas: float
    spectrum: float
    transport: float
    total: float


def ratios_to_costpoint(r: CostRatios, normalization: float = 1.0) -> CostPoint:
    """Fix absolute prices from ratios, anchoring c_b at ``normalization`` cu."""
    if normalization <= 0:
        raise ValueError("normalization must be positive")
    c_b = normalization
    return CostPoint(c_w=r.r_wb * c_b, c_m=c_b / r.r_bm, c_b=c_b)


def total_cost(cp: CostPoint, bandwidth_mhz: int, num_antennas: int,
               n_wavelengths: int) -> CostBreakdown:
    """c_m*m + c_w*w + c_b*wavelengths, with the three addends kept separate."""
    antennas = cp.c_m * num_antennas
    spectrum = cp.c_w * bandwidth_mhz
    transport = cp.c_b * n_wavelengths
    return CostBreakdown(antennas=antennas, spectrum=spectrum,
                         transport=transport, total=antennas + spectrum + transport)


def cost_efficiency(rate: float, cost: float) -> float:
    """Bits per cost unit."""
    if cost <= 0:
        raise ValueError("cost must be strictly positive")
    return rate / cost


def reference_cost_point(inputs: ReferenceCostInputs) -> CostPoint:
    """Annualized reference prices in USD/year (spectrum per MHz)."""
    c_m = inputs.site_monthly_usd * 12.0
    c_b = inputs.wavelength_annual_usd
    c_w = (inputs.spectrum_price_gbp_per_mhz_per_habitant * inputs.habitants
           / inputs.lease_years * inputs.fx_gbp_usd)
    return CostPoint(c_w=c_w, c_m=c_m, c_b=c_b)


def reference_ratios(inputs: ReferenceCostInputs) -> CostRatios:
    return reference_cost_point(inputs).ratios()


def capital_recovery_factor(rate: float, years: int) -> float:
    """Annuity factor i(1+i)^T / ((1+i)^T - 1); equals 1/T in the i -> 0 limit."""
    if years < 1:
        raise ValueError("horizon must be at least one year")
    if rate == 0.0:
        return 1.0 / years
    if rate < 0:
        raise ValueError("discount rate must be non-negative")
    growth = (1.0 + rate) ** years
    return rate * growth / (growth - 1.0)


def annualize_lease(capex: float, opex_fraction: float, wacc: float,
                    roi: float, horizon_years: int) -> float:
    """Yearly lease price covering capex recovery, a return margin and OPEX.

    capex * CRF(wacc, horizon) * (1 + roi) + opex_fraction * capex.
    """
    if capex < 0:
        raise ValueError("capex must be non-negative")
    crf = capital_recovery_factor(wacc, horizon_years)
    return capex * crf * (1.0 + roi) + opex_fraction * capex
