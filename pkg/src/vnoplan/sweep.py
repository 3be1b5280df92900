"""Sensitivity sweep over cost-ratio grids and transport models.

For every (model, r_wb, r_bm) triple the sweep anchors c_b at the
normalization, derives the cost point, runs the exhaustive optimizer, and
records the optimum as one CSV row. Grid points are independent, so they may
be evaluated by a thread pool; results are always emitted in (model, r_wb,
r_bm) lexicographic order, making the output file byte-stable.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .economics import CostRatios, ratios_to_costpoint
from .optimizer import optimize
from .radio import MODE_CORRECTED
from .scenario import Scenario
from .transport import TransportModel, VARIANT_ORDER

CSV_COLUMNS = ("model", "R_wb", "R_bm", "c_w", "c_m", "c_b", "opt_m", "opt_w",
               "eta", "sum_rate", "n_wavelengths", "cost_total", "feasibility_flag")

DEFAULT_R_WB_VALUES = (6.5e-5, 6.5e-4, 6.5e-3, 6.5e-2, 6.5e-1)
DEFAULT_SHADED_BAND = (0.006, 0.6)


def default_r_bm_values(start: float = 1e-4, stop: float = 1e2,
                        points: int = 25) -> tuple[float, ...]:
    """Log-spaced ratio grid covering the shaded reference band."""
    return tuple(float(v) for v in np.logspace(np.log10(start), np.log10(stop), points))


@dataclass(frozen=True)
class SweepSpec:
    models: tuple[TransportModel, ...]
    r_wb_values: tuple[float, ...] = DEFAULT_R_WB_VALUES
    r_bm_values: tuple[float, ...] = field(default_factory=default_r_bm_values)
    shaded_band: tuple[float, float] = DEFAULT_SHADED_BAND
    normalization: float = 1.0

    def __post_init__(self):
        if not self.models:
            raise ValueError("sweep needs at least one transport model")
        for name, values in (("r_wb_values", self.r_wb_values),
                             ("r_bm_values", self.r_bm_values)):
            if not values:
                raise ValueError(f"{name} must not be empty")
            if any(v <= 0 for v in values):
                raise ValueError(f"{name} must be strictly positive")
            if any(b <= a for a, b in zip(values, values[1:])):
                raise ValueError(f"{name} must be strictly increasing")
        if min(self.shaded_band) <= 0 or self.shaded_band[1] <= self.shaded_band[0]:
            raise ValueError("shaded_band must be a positive increasing interval")
        if self.normalization <= 0:
            raise ValueError("normalization must be positive")


@dataclass(frozen=True)
class SweepRecord:
    model: str
    r_wb: float
    r_bm: float
    c_w: float
    c_m: float
    c_b: float
    opt_m: int
    opt_w: int
    eta: float
    sum_rate: float
    n_wavelengths: int
    cost_total: float
    feasibility_flag: bool


class SweepError(RuntimeError):
    """A grid point failed; carries the offending (model, r_wb, r_bm) triple."""

    def __init__(self, point, cause):
        model, r_wb, r_bm = point
        super().__init__(
            f"sweep point (model={model}, r_wb={r_wb!r}, r_bm={r_bm!r}) failed: {cause}")
        self.point = point


def _sorted_points(spec: SweepSpec):
    order = {v: i for i, v in enumerate(VARIANT_ORDER)}
    models = sorted(spec.models, key=lambda t: order[t.variant])
    return [(t, r_wb, r_bm)
            for t in models
            for r_wb in sorted(spec.r_wb_values)
            for r_bm in sorted(spec.r_bm_values)]


def run_sweep(s: Scenario, spec: SweepSpec, max_bandwidth_mhz: int,
              mode: str = MODE_CORRECTED, workers: int = 1) -> list[SweepRecord]:
    """One record per (model, r_wb, r_bm), in lexicographic order."""
    points = _sorted_points(spec)

    def solve(point):
        t, r_wb, r_bm = point
        try:
            cp = ratios_to_costpoint(CostRatios(r_wb=r_wb, r_bm=r_bm), spec.normalization)
            opt = optimize(s, t, cp, max_bandwidth_mhz, mode)
        except Exception as exc:
            raise SweepError((t.variant.value, r_wb, r_bm), exc) from exc
        ev = opt.best
        return SweepRecord(
            model=t.variant.value, r_wb=r_wb, r_bm=r_bm,
            c_w=cp.c_w, c_m=cp.c_m, c_b=cp.c_b,
            opt_m=ev.allocation.num_antennas, opt_w=ev.allocation.bandwidth_mhz,
            eta=ev.eta, sum_rate=ev.sum_rate, n_wavelengths=ev.n_wavelengths,
            cost_total=ev.cost.total, feasibility_flag=ev.feasibility_flag,
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(solve, points))
    return [solve(p) for p in points]


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return format(value, ".9g")


def records_to_csv(records) -> str:
    """Render records as delimited text; floats carry 9 significant digits."""
    lines = [",".join(CSV_COLUMNS)]
    for r in records:
        lines.append(",".join((
            r.model, _fmt(r.r_wb), _fmt(r.r_bm), _fmt(r.c_w), _fmt(r.c_m),
            _fmt(r.c_b), _fmt(r.opt_m), _fmt(r.opt_w), _fmt(r.eta),
            _fmt(r.sum_rate), _fmt(r.n_wavelengths), _fmt(r.cost_total),
            _fmt(r.feasibility_flag),
        )))
    return "\n".join(lines) + "\n"


def write_sweep_outputs(records, csv_path, metadata: dict) -> str:
    """Write the CSV plus its JSON sidecar; returns the sidecar path."""
    with open(csv_path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(records_to_csv(records))
    sidecar = sidecar_path(csv_path)
    doc = {"format": "vnoplan-sweep-meta", "version": 1,
           "num_records": len(records), **metadata}
    with open(sidecar, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return sidecar


def sidecar_path(csv_path) -> str:
    return f"{csv_path}.meta.json"
