"""Techno-economic planner for distributed-MIMO radio over shared PON transport.

Finds the cost-optimal antenna count and spectrum bandwidth for an operator
leasing spectrum, antenna sites and PON wavelengths, and sweeps the optimum
across cost-ratio grids for three transport models (fronthaul overlay,
fronthaul shared wavelength, split-PHY shared wavelength).
"""

__version__ = "0.1.0"

from .scenario import (PropagationConfig, Scenario, ScenarioConfig,
                       build_scenario, dump_scenario, load_scenario,
                       received_power, received_power_vector)
from .radio import (Allocation, MODE_CORRECTED, MODE_LITERAL, select_antennas,
                    snr_per_user, sum_rate)
from .transport import (PonAssignment, TransportModel, TransportVariant,
                        assign_antennas_to_pons, fronthaul_overlay,
                        fronthaul_shared, split_phy_shared,
                        wavelengths_overlay, wavelengths_shared)
from .economics import (CostBreakdown, CostPoint, CostRatios,
                        ReferenceCostInputs, annualize_lease,
                        capital_recovery_factor, cost_efficiency,
                        ratios_to_costpoint, reference_cost_point,
                        reference_ratios, total_cost)
from .optimizer import Evaluation, Optimum, evaluate, optimize
from .sweep import (SweepError, SweepRecord, SweepSpec, default_r_bm_values,
                    records_to_csv, run_sweep, write_sweep_outputs)
from .config import (ConfigError, RunConfig, config_hash, default_config_json,
                     load_config)

__all__ = [
    "Allocation", "ConfigError", "CostBreakdown", "CostPoint", "CostRatios",
    "Evaluation", "MODE_CORRECTED", "MODE_LITERAL", "Optimum", "PonAssignment",
    "PropagationConfig", "ReferenceCostInputs", "RunConfig", "Scenario",
    "ScenarioConfig", "SweepError", "SweepRecord", "SweepSpec",
    "TransportModel", "TransportVariant", "annualize_lease",
    "assign_antennas_to_pons", "build_scenario", "capital_recovery_factor",
    "config_hash", "cost_efficiency", "default_config_json",
    "default_r_bm_values", "dump_scenario", "evaluate", "fronthaul_overlay",
    "fronthaul_shared", "load_config", "load_scenario", "optimize",
    "ratios_to_costpoint", "received_power", "received_power_vector",
    "records_to_csv", "reference_cost_point", "reference_ratios", "run_sweep",
    "select_antennas", "snr_per_user", "split_phy_shared", "sum_rate",
    "total_cost", "wavelengths_overlay", "wavelengths_shared",
    "write_sweep_outputs",
]
