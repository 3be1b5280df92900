"""Run configuration: one JSON file drives every command.

Unknown keys are rejected with their dotted path so typos cannot silently
fall back to defaults. ``default_config_json`` emits a reference file with
every field present at its default value. The config hash covers exactly the
semantic fields (everything except the output path), canonically serialized,
so reformatting the file never changes the hash and any meaningful edit does.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, fields

from .economics import ReferenceCostInputs
from .radio import NUMERATOR_MODES, MODE_CORRECTED
from .scenario import PropagationConfig, ScenarioConfig
from .sweep import (DEFAULT_R_WB_VALUES, DEFAULT_SHADED_BAND, SweepSpec,
                    default_r_bm_values)
from .transport import (DEFAULT_MAX_WAVELENGTHS_PER_PON, DEFAULT_WAVELENGTH_GBPS,
                        FRONTHAUL_GBPS_PER_5MHZ, SPLIT_PHY_GBPS_PER_5MHZ,
                        TransportModel, TransportVariant)


class ConfigError(ValueError):
    """Bad configuration file; message carries the offending location."""


@dataclass(frozen=True)
class TransportDefaults:
    wavelength_capacity_gbps: float = DEFAULT_WAVELENGTH_GBPS
    fronthaul_per_5mhz_gbps: float = FRONTHAUL_GBPS_PER_5MHZ
    splitphy_per_5mhz_gbps: float = SPLIT_PHY_GBPS_PER_5MHZ
    max_wavelengths_per_pon: int = DEFAULT_MAX_WAVELENGTHS_PER_PON

    def build(self, variant: TransportVariant) -> TransportModel:
        per_5mhz = (self.splitphy_per_5mhz_gbps
                    if variant is TransportVariant.SPLIT_PHY_SHARED
                    else self.fronthaul_per_5mhz_gbps)
        return TransportModel(
            variant=variant,
            wavelength_capacity_gbps=self.wavelength_capacity_gbps,
            per_5mhz_gbps=per_5mhz,
            max_wavelengths_per_pon=self.max_wavelengths_per_pon,
        )


@dataclass(frozen=True)
class EconomicsConfig:
    spectrum_price_gbp_per_mhz_per_habitant: float = 0.1138
    lease_years: float = 20.0
    site_monthly_usd: float = 1900.0
    wavelength_annual_usd: float = 1510.0
    fx_gbp_usd: float = 1.278
    habitants: int | None = None  # None: take the scenario's habitant count

    def reference_inputs(self, scenario_habitants: int) -> ReferenceCostInputs:
        return ReferenceCostInputs(
            spectrum_price_gbp_per_mhz_per_habitant=self.spectrum_price_gbp_per_mhz_per_habitant,
            habitants=self.habitants if self.habitants is not None else scenario_habitants,
            lease_years=self.lease_years,
            site_monthly_usd=self.site_monthly_usd,
            wavelength_annual_usd=self.wavelength_annual_usd,
            fx_gbp_usd=self.fx_gbp_usd,
        )


@dataclass(frozen=True)
class SweepConfig:
    models: tuple[str, ...] = tuple(v.value for v in TransportVariant)
    r_wb_values: tuple[float, ...] = DEFAULT_R_WB_VALUES
    r_bm_values: tuple[float, ...] = field(default_factory=default_r_bm_values)
    shaded_band: tuple[float, float] = DEFAULT_SHADED_BAND
    normalization: float = 1.0


@dataclass(frozen=True)
class RunConfig:
    scenario: ScenarioConfig = field(default_factory=ScenarioConfig)
    transport: TransportDefaults = field(default_factory=TransportDefaults)
    economics: EconomicsConfig = field(default_factory=EconomicsConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    max_bandwidth_mhz: int = 50
    numerator_mode: str = MODE_CORRECTED
    output_path: str = "sweep.csv"

    def __post_init__(self):
        if self.numerator_mode not in NUMERATOR_MODES:
            raise ConfigError(f"numerator_mode must be one of {NUMERATOR_MODES}")
        if self.max_bandwidth_mhz < 5 or self.max_bandwidth_mhz % 5 != 0:
            raise ConfigError("max_bandwidth_mhz must be a positive multiple of 5")

    def transport_model(self, name: str) -> TransportModel:
        try:
            variant = TransportVariant(name)
        except ValueError:
            known = ", ".join(v.value for v in TransportVariant)
            raise ConfigError(f"unknown transport model {name!r}; expected one of: {known}")
        return self.transport.build(variant)

    def sweep_spec(self) -> SweepSpec:
        if not self.sweep.models:
            raise ConfigError("sweep.models must not be empty")
        models = tuple(self.transport_model(name) for name in self.sweep.models)
        return SweepSpec(models=models,
                         r_wb_values=tuple(self.sweep.r_wb_values),
                         r_bm_values=tuple(self.sweep.r_bm_values),
                         shaded_band=tuple(self.sweep.shaded_band),
                         normalization=self.sweep.normalization)

    def reference_inputs(self) -> ReferenceCostInputs:
        return self.economics.reference_inputs(self.scenario.habitants)


def _from_mapping(cls, data, path):
    if not isinstance(data, dict):
        raise ConfigError(f"{path or 'config'}: expected an object")
    allowed = {f.name: f for f in fields(cls)}
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown key: {path + '.' if path else ''}{unknown[0]}")
    kwargs = {}
    for name, value in data.items():
        sub_path = f"{path}.{name}" if path else name
        if name == "propagation":
            value = _from_mapping(PropagationConfig, value, sub_path)
        elif isinstance(value, list):
            value = tuple(value)
        kwargs[name] = value
    try:
        return cls(**kwargs)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{path or 'config'}: {exc}") from exc


_SECTIONS = {
    "scenario": ScenarioConfig,
    "transport": TransportDefaults,
    "economics": EconomicsConfig,
    "sweep": SweepConfig,
}


def config_from_dict(doc: dict) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("config root must be an object")
    allowed = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ConfigError(f"unknown key: {unknown[0]}")
    kwargs = {}
    for name, value in doc.items():
        if name in _SECTIONS:
            kwargs[name] = _from_mapping(_SECTIONS[name], value, name)
        else:
            kwargs[name] = value
    try:
        return RunConfig(**kwargs)
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(str(exc)) from exc


def load_config(path) -> RunConfig:
    """Parse a JSON run config; syntax errors keep their line and column."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return config_from_dict(doc)


def config_to_dict(cfg: RunConfig) -> dict:
    return {
        "scenario": {
            "area_side_km": cfg.scenario.area_side_km,
            "num_users": cfg.scenario.num_users,
            "num_antennas": cfg.scenario.num_antennas,
            "dwellings_per_km2": cfg.scenario.dwellings_per_km2,
            "habitants_per_km2": cfg.scenario.habitants_per_km2,
            "pon_split": cfg.scenario.pon_split,
            "density_scale": cfg.scenario.density_scale,
            "rng_seed": cfg.scenario.rng_seed,
            "propagation": {
                "path_loss_exponent": cfg.scenario.propagation.path_loss_exponent,
                "ref_loss_db": cfg.scenario.propagation.ref_loss_db,
                "min_distance_m": cfg.scenario.propagation.min_distance_m,
            },
            "tx_power_dbm": cfg.scenario.tx_power_dbm,
            "noise_density_dbm_hz": cfg.scenario.noise_density_dbm_hz,
            "noise_figure_db": cfg.scenario.noise_figure_db,
        },
        "transport": {
            "wavelength_capacity_gbps": cfg.transport.wavelength_capacity_gbps,
            "fronthaul_per_5mhz_gbps": cfg.transport.fronthaul_per_5mhz_gbps,
            "splitphy_per_5mhz_gbps": cfg.transport.splitphy_per_5mhz_gbps,
            "max_wavelengths_per_pon": cfg.transport.max_wavelengths_per_pon,
        },
        "economics": {
            "spectrum_price_gbp_per_mhz_per_habitant":
                cfg.economics.spectrum_price_gbp_per_mhz_per_habitant,
            "lease_years": cfg.economics.lease_years,
            "site_monthly_usd": cfg.economics.site_monthly_usd,
            "wavelength_annual_usd": cfg.economics.wavelength_annual_usd,
            "fx_gbp_usd": cfg.economics.fx_gbp_usd,
            "habitants": cfg.economics.habitants,
        },
        "sweep": {
            "models": list(cfg.sweep.models),
            "r_wb_values": list(cfg.sweep.r_wb_values),
            "r_bm_values": list(cfg.sweep.r_bm_values),
            "shaded_band": list(cfg.sweep.shaded_band),
            "normalization": cfg.sweep.normalization,
        },
        "max_bandwidth_mhz": cfg.max_bandwidth_mhz,
        "numerator_mode": cfg.numerator_mode,
        "output_path": cfg.output_path,
    }


def config_hash(cfg: RunConfig) -> str:
    """Hash of the semantic fields; the output path is presentation, not semantics."""
    doc = config_to_dict(cfg)
    doc.pop("output_path")
    blob = json.dumps(doc, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def default_config_json() -> str:
    """The reference config: every key present, set to its default."""
    return json.dumps(config_to_dict(RunConfig()), indent=2) + "\n"
