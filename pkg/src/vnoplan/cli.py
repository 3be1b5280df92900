"""Command-line entry point.

Subcommands:

* ``generate-scenario``: build and dump the deterministic deployment.
* ``optimize``: solve one (model, r_wb, r_bm) point and report the optimum.
* ``sweep``: run the full sensitivity grid, writing CSV plus a JSON sidecar.
* ``ref-costs``: derive the reference cost ratios from published lease prices.

Exit codes: 0 success, 1 usage or configuration error, 2 runtime failure.
Every command is a pure function of the (optional) config file plus the few
explicit overrides, so repeated runs rewrite identical bytes.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from . import __version__
from .config import (ConfigError, RunConfig, config_hash, default_config_json,
                     load_config)
from .economics import (CostRatios, ratios_to_costpoint, reference_cost_point,
                        reference_ratios)
from .optimizer import optimize
from .radio import NUMERATOR_MODES
from .scenario import build_scenario, dump_scenario
from .sweep import SweepError, run_sweep, write_sweep_outputs
from .transport import TransportVariant

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; this tool reserves 2 for runtime
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _build_parser() -> _Parser:
    parser = _Parser(prog="vnoplan",
                     description="Cost-optimal antenna/spectrum planning over shared PON transport")
    parser.add_argument("--version", action="version", version=f"vnoplan {__version__}")
    parser.add_argument("--emit-default-config", metavar="PATH",
                        help="write the reference config with all defaults and exit")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--config", metavar="PATH", help="JSON run config (defaults apply if omitted)")
        p.add_argument("--seed", type=int, metavar="N", help="override scenario rng seed")
        p.add_argument("--numerator", choices=NUMERATOR_MODES, help="override rate numerator mode")
        p.add_argument("--out", metavar="PATH", help="output path")

    p_gen = sub.add_parser("generate-scenario", help="build and dump the deployment")
    common(p_gen)

    p_opt = sub.add_parser("optimize", help="solve one cost point")
    common(p_opt)
    p_opt.add_argument("--model", required=True,
                       help="transport model: " + ", ".join(v.value for v in TransportVariant))
    p_opt.add_argument("--rwb", type=float, metavar="X",
                       help="spectrum/wavelength cost ratio (default: reference value)")
    p_opt.add_argument("--rbm", type=float, metavar="X",
                       help="wavelength/site cost ratio (default: reference value)")
    p_opt.add_argument("--dump-grid", metavar="PATH",
                       help="also write every grid candidate for this cost point")

    p_sweep = sub.add_parser("sweep", help="run the sensitivity grid")
    common(p_sweep)
    p_sweep.add_argument("--model", action="append", dest="models", metavar="NAME",
                         help="restrict to this model (repeatable)")
    p_sweep.add_argument("--workers", type=int, default=1, metavar="N",
                         help="thread pool size; output is identical at any width")

    p_ref = sub.add_parser("ref-costs", help="derive reference cost ratios")
    common(p_ref)

    return parser


def _load(args) -> RunConfig:
    cfg = load_config(args.config) if args.config else RunConfig()
    if getattr(args, "seed", None) is not None:
        cfg = dataclasses.replace(
            cfg, scenario=dataclasses.replace(cfg.scenario, rng_seed=args.seed))
    if getattr(args, "numerator", None) is not None:
        cfg = dataclasses.replace(cfg, numerator_mode=args.numerator)
    return cfg


def _evaluation_record(cfg: RunConfig, model_name, r_wb, r_bm, opt) -> dict:
    ev = opt.best
    return {
        "model": model_name,
        "r_wb": r_wb,
        "r_bm": r_bm,
        "numerator_mode": ev.numerator_mode,
        "opt_w_mhz": ev.allocation.bandwidth_mhz,
        "opt_m": ev.allocation.num_antennas,
        "eta": ev.eta,
        "sum_rate": ev.sum_rate,
        "n_wavelengths": ev.n_wavelengths,
        "cost": {"antennas": ev.cost.antennas, "spectrum": ev.cost.spectrum,
                 "transport": ev.cost.transport, "total": ev.cost.total},
        "per_pon_antennas": list(ev.pon_assignment.per_pon),
        "feasibility_flag": ev.feasibility_flag,
        "grid_size": opt.grid_size,
        "config_hash": config_hash(cfg),
        "tool_version": __version__,
    }


def cmd_generate_scenario(args) -> int:
    cfg = _load(args)
    s = build_scenario(cfg.scenario)
    out = args.out or "scenario.json"
    dump_scenario(s, out)
    print(f"scenario written to {out}")
    print(f"  users: {s.num_users}  antennas: {s.num_antennas}  "
          f"dwellings: {s.num_dwellings}  pons: {s.num_pons}")
    print(f"  seed: {cfg.scenario.rng_seed}  config hash: {config_hash(cfg)}")
    return EXIT_OK


def cmd_optimize(args) -> int:
    cfg = _load(args)
    t = cfg.transport_model(args.model)
    ref = reference_ratios(cfg.reference_inputs())
    r_wb = args.rwb if args.rwb is not None else ref.r_wb
    r_bm = args.rbm if args.rbm is not None else ref.r_bm
    cp = ratios_to_costpoint(CostRatios(r_wb=r_wb, r_bm=r_bm), cfg.sweep.normalization)
    s = build_scenario(cfg.scenario)
    opt = optimize(s, t, cp, cfg.max_bandwidth_mhz, cfg.numerator_mode)
    ev = opt.best

    rate_unit = "bit/s" if ev.numerator_mode == "corrected" else "(dimensionless)"
    print(f"model:          {args.model}")
    print(f"numerator mode: {ev.numerator_mode}")
    print(f"cost point:     c_w={cp.c_w:.6g}  c_m={cp.c_m:.6g}  c_b={cp.c_b:.6g}  (cu)")
    print(f"optimum:        w* = {ev.allocation.bandwidth_mhz} MHz, "
          f"m* = {ev.allocation.num_antennas} antennas")
    print(f"sum rate:       {ev.sum_rate:.6g} {rate_unit}")
    print(f"wavelengths:    {ev.n_wavelengths}"
          + ("  [exceeds per-PON wavelength budget]" if ev.feasibility_flag else ""))
    print(f"cost:           antennas {ev.cost.antennas:.6g} + spectrum {ev.cost.spectrum:.6g}"
          f" + transport {ev.cost.transport:.6g} = {ev.cost.total:.6g} cu")
    print(f"eta:            {ev.eta:.9g} bits per cu")
    print(f"grid examined:  {opt.grid_size} candidates")

    record = _evaluation_record(cfg, args.model, r_wb, r_bm, opt)
    line = json.dumps(record, sort_keys=True)
    print(line)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(line + "\n")
    if args.dump_grid:
        _dump_grid(args.dump_grid, s, t, cp, cfg)
    return EXIT_OK


def _dump_grid(path, s, t, cp, cfg: RunConfig) -> None:
    from .optimizer import evaluate
    from .radio import Allocation, select_antennas

    lines = ["w_mhz,m,eta,sum_rate,n_wavelengths,cost_total"]
    for m in range(s.num_users, s.num_antennas + 1):
        aset = select_antennas(s, m)
        for w in range(5, cfg.max_bandwidth_mhz + 1, 5):
            ev = evaluate(s, t, cp, Allocation(w, m, aset), cfg.numerator_mode)
            lines.append(f"{w},{m},{ev.eta:.9g},{ev.sum_rate:.9g},"
                         f"{ev.n_wavelengths},{ev.cost.total:.9g}")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def cmd_sweep(args) -> int:
    cfg = _load(args)
    if args.models is not None:
        if not args.models:
            raise ConfigError("at least one --model is required")
        cfg = dataclasses.replace(
            cfg, sweep=dataclasses.replace(cfg.sweep, models=tuple(args.models)))
    spec = cfg.sweep_spec()
    s = build_scenario(cfg.scenario)
    out = args.out or cfg.output_path
    records = run_sweep(s, spec, cfg.max_bandwidth_mhz, cfg.numerator_mode,
                        workers=args.workers)
    ref = reference_ratios(cfg.reference_inputs())
    metadata = {
        "tool_version": __version__,
        "rng_seed": cfg.scenario.rng_seed,
        "config_hash": config_hash(cfg),
        "numerator_mode": cfg.numerator_mode,
        "models": list(cfg.sweep.models),
        "max_bandwidth_mhz": cfg.max_bandwidth_mhz,
        "normalization": cfg.sweep.normalization,
        "shaded_band": list(cfg.sweep.shaded_band),
        "reference_ratios": {"r_wb": ref.r_wb, "r_bm": ref.r_bm},
    }
    tmp = f"{out}.tmp"
    try:
        sidecar = write_sweep_outputs(records, tmp, metadata)
        os.replace(tmp, out)
        os.replace(sidecar, f"{out}.meta.json")
    except BaseException:
        for leftover in (tmp, f"{tmp}.meta.json"):
            if os.path.exists(leftover):
                os.unlink(leftover)
        raise
    print(f"{len(records)} records written to {out}")
    print(f"metadata sidecar: {out}.meta.json  config hash: {metadata['config_hash']}")
    return EXIT_OK


def cmd_ref_costs(args) -> int:
    cfg = _load(args)
    inputs = cfg.reference_inputs()
    cp = reference_cost_point(inputs)
    ratios = cp.ratios()
    print("reference lease prices, normalized to USD per year:")
    print(f"  antenna site:  {inputs.site_monthly_usd:.2f} USD/month x 12"
          f"  -> c_m = {cp.c_m:.2f} USD/yr")
    print(f"  wavelength:    {inputs.wavelength_annual_usd:.2f} USD/yr"
          f"  -> c_b = {cp.c_b:.2f} USD/yr")
    print(f"  spectrum:      {inputs.spectrum_price_gbp_per_mhz_per_habitant} GBP/MHz/habitant"
          f" x {inputs.habitants} habitants / {inputs.lease_years:g} yr"
          f" x {inputs.fx_gbp_usd} USD/GBP -> c_w = {cp.c_w:.4f} USD/MHz/yr")
    print(f"ratios:")
    print(f"  R_bm = c_b / c_m = {ratios.r_bm:.6f}")
    print(f"  R_wb = c_w / c_b = {ratios.r_wb:.6f}")
    record = {"c_w": cp.c_w, "c_m": cp.c_m, "c_b": cp.c_b,
              "r_wb": ratios.r_wb, "r_bm": ratios.r_bm,
              "fx_gbp_usd": inputs.fx_gbp_usd, "habitants": inputs.habitants,
              "tool_version": __version__}
    print(json.dumps(record, sort_keys=True))
    return EXIT_OK


_COMMANDS = {
    "generate-scenario": cmd_generate_scenario,
    "optimize": cmd_optimize,
    "sweep": cmd_sweep,
    "ref-costs": cmd_ref_costs,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.emit_default_config:
        with open(args.emit_default_config, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(default_config_json())
        print(f"default config written to {args.emit_default_config}")
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SweepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
