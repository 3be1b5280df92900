import numpy as np
import pytest

from vnoplan import (CostPoint, CostRatios, ReferenceCostInputs,
                     annualize_lease, capital_recovery_factor, cost_efficiency,
                     ratios_to_costpoint, reference_cost_point,
                     reference_ratios, total_cost)


def test_ratios_to_costpoint_reference():
    cp = ratios_to_costpoint(CostRatios(r_wb=0.0065, r_bm=0.066), 1.0)
    assert cp.c_b == 1.0
    assert cp.c_w == pytest.approx(0.0065, rel=1e-12)
    assert cp.c_m == pytest.approx(1 / 0.066, rel=1e-12)


def test_ratios_to_costpoint_identity_and_scaling():
    assert ratios_to_costpoint(CostRatios(1.0, 1.0), 1.0) == CostPoint(1.0, 1.0, 1.0)
    cp = ratios_to_costpoint(CostRatios(0.65, 0.6), 2.0)
    assert (cp.c_w, cp.c_m, cp.c_b) == pytest.approx((1.3, 2.0 / 0.6, 2.0), rel=1e-12)


def test_ratio_roundtrip_identity():
    rng = np.random.default_rng(11)
    for _ in range(200):
        r = CostRatios(r_wb=float(10 ** rng.uniform(-5, 2)),
                       r_bm=float(10 ** rng.uniform(-5, 2)))
        norm = float(10 ** rng.uniform(-3, 3))
        back = ratios_to_costpoint(r, norm).ratios()
        assert back.r_wb == pytest.approx(r.r_wb, rel=1e-12)
        assert back.r_bm == pytest.approx(r.r_bm, rel=1e-12)


def test_total_cost_unit_prices():
    bd = total_cost(CostPoint(1, 1, 1), bandwidth_mhz=5, num_antennas=20, n_wavelengths=20)
    assert bd.total == 45
    assert (bd.antennas, bd.spectrum, bd.transport) == (20, 5, 20)


def test_total_cost_reference_point():
    cp = ratios_to_costpoint(CostRatios(0.0065, 0.066), 1.0)
    bd = total_cost(cp, 50, 64, 10)
    assert bd.antennas == pytest.approx(969.696969697, rel=1e-9)
    assert bd.spectrum == pytest.approx(0.325, rel=1e-12)
    assert bd.transport == 10.0
    assert bd.total == pytest.approx(980.021969697, rel=1e-9)


def test_total_cost_breakdown_sums_exactly():
    rng = np.random.default_rng(3)
    for _ in range(100):
        cp = CostPoint(*(float(10 ** rng.uniform(-4, 4)) for _ in range(3)))
        bd = total_cost(cp, 5 * int(rng.integers(1, 11)),
                        int(rng.integers(1, 300)), int(rng.integers(0, 500)))
        assert bd.antennas + bd.spectrum + bd.transport == bd.total


def test_zero_transport():
    bd = total_cost(CostPoint(2, 3, 7), 10, 4, 0)
    assert bd.total == 3 * 4 + 2 * 10


def test_cost_efficiency():
    assert cost_efficiency(45.0, 45.0) == 1.0
    assert cost_efficiency(0.0, 10.0) == 0.0
    with pytest.raises(ValueError):
        cost_efficiency(1.0, 0.0)
    with pytest.raises(ValueError):
        cost_efficiency(1.0, -2.0)


def test_efficiency_decreases_with_each_price():
    base = total_cost(CostPoint(0.5, 2.0, 1.0), 25, 30, 12).total
    for bump in (CostPoint(0.6, 2.0, 1.0), CostPoint(0.5, 2.5, 1.0),
                 CostPoint(0.5, 2.0, 1.3)):
        assert cost_efficiency(1e6, total_cost(bump, 25, 30, 12).total) \
            < cost_efficiency(1e6, base)


def test_reference_ratio_wavelength_to_site():
    r = reference_ratios(ReferenceCostInputs())
    assert r.r_bm == pytest.approx(1510 / 22800, rel=1e-12)
    assert r.r_bm == pytest.approx(0.06623, abs=1e-5)


def test_reference_ratio_spectrum_to_wavelength():
    r = reference_ratios(ReferenceCostInputs())
    expected = (0.1138 * 1350 / 20 * 1.278) / 1510
    assert r.r_wb == pytest.approx(expected, rel=1e-12)
    assert r.r_wb == pytest.approx(0.0065, abs=2e-4)


def test_reference_ratio_without_fx():
    r = reference_ratios(ReferenceCostInputs(fx_gbp_usd=1.0))
    assert r.r_wb == pytest.approx(0.005087, abs=1e-6)


def test_reference_cost_point_components():
    cp = reference_cost_point(ReferenceCostInputs())
    assert cp.c_m == 1900 * 12
    assert cp.c_b == 1510
    assert cp.c_w == pytest.approx(0.1138 * 1350 / 20 * 1.278, rel=1e-12)


def test_reference_inputs_validation():
    with pytest.raises(ValueError):
        ReferenceCostInputs(lease_years=0)


def test_annualize_zero_capex():
    assert annualize_lease(0.0, 0.04, 0.10, 0.05, 20) == 0.0


def test_annualize_straight_line_limit():
    assert annualize_lease(1000.0, 0.0, 0.0, 0.0, 10) == pytest.approx(100.0, rel=1e-12)


def test_annualize_against_amortization_table():
    # independent route: CRF as the reciprocal of the discounted annuity sum
    wacc, years = 0.10, 20
    annuity = sum((1 + wacc) ** -t for t in range(1, years + 1))
    expected = 1000.0 * (1 / annuity) * 1.05 + 0.04 * 1000.0
    got = annualize_lease(1000.0, opex_fraction=0.04, wacc=0.10, roi=0.05,
                          horizon_years=20)
    assert got == pytest.approx(expected, rel=1e-12)
    assert got == pytest.approx(163.33, abs=0.005)
    assert capital_recovery_factor(0.10, 20) == pytest.approx(0.117460, abs=5e-7)


def test_annualize_payment_clears_balance():
    # a second oracle: paying capex*CRF each year zeroes the loan at horizon
    capex, wacc, years = 750.0, 0.07, 12
    payment = capex * capital_recovery_factor(wacc, years)
    balance = capex
    for _ in range(years):
        balance = balance * (1 + wacc) - payment
    assert balance == pytest.approx(0.0, abs=1e-9)


def test_costpoint_validation():
    with pytest.raises(ValueError):
        CostPoint(0.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        CostRatios(1.0, -1.0)
    with pytest.raises(ValueError):
        ratios_to_costpoint(CostRatios(1.0, 1.0), 0.0)
