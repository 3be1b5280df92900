"""3x3 panel grid: optimal antennas, optimal bandwidth, and sum rate.

The input is the sweep CSV (one row per transport model and cost-ratio
pair). Panels are arranged with one column per transport model and one row
per metric; the rate row only exists for the two wavelength-sharing models,
so the spare cell carries the legend. Every panel uses a log-scaled
wavelength/site ratio axis with the reference uncertainty band shaded, and
one curve per spectrum/wavelength ratio value.

Rendering never alters the data: integer metrics are drawn as step curves
whose vertices are exactly the CSV values.
"""

from __future__ import annotations

import csv

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

EXPECTED_COLUMNS = ("model", "R_wb", "R_bm", "c_w", "c_m", "c_b", "opt_m",
                    "opt_w", "eta", "sum_rate", "n_wavelengths", "cost_total",
                    "feasibility_flag")

MODEL_ORDER = ("fronthaul_overlay", "fronthaul_shared", "split_phy_shared")
MODEL_TITLES = {
    "fronthaul_overlay": "fronthaul overlay",
    "fronthaul_shared": "fronthaul shared",
    "split_phy_shared": "split-PHY shared",
}

# (metric, y label, step drawing) per panel row; rate panels exist only for
# the sharing models
PANEL_ROWS = (
    ("opt_m", "optimal antennas m*", True),
    ("opt_w", "optimal bandwidth w* (MHz)", True),
    ("sum_rate", "sum rate (bit/s)", False),
)
PANEL_TAGS = (("a1", "b1", "c1"), ("a2", "b2", "c2"), (None, "b3", "c3"))

DEFAULT_SHADED_BAND = (0.006, 0.6)


class SchemaError(ValueError):
    """The CSV does not look like a sweep output file."""


def read_sweep_csv(path) -> list[dict]:
    """Parse and type one sweep CSV; rejects files missing any documented column."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in EXPECTED_COLUMNS if c not in header]
        if missing:
            raise SchemaError(f"missing column: {missing[0]}")
        rows = []
        for row in reader:
            rows.append({
                "model": row["model"],
                "R_wb": float(row["R_wb"]),
                "R_bm": float(row["R_bm"]),
                "opt_m": int(row["opt_m"]),
                "opt_w": int(row["opt_w"]),
                "eta": float(row["eta"]),
                "sum_rate": float(row["sum_rate"]),
                "feasibility_flag": row["feasibility_flag"] == "true",
            })
    if not rows:
        raise SchemaError("sweep file has no data rows")
    return rows


def _curves(rows, model, metric):
    """One (x, y) series per R_wb value, x ascending."""
    series = {}
    for row in rows:
        if row["model"] != model:
            continue
        series.setdefault(row["R_wb"], []).append((row["R_bm"], row[metric]))
    curves = {}
    for r_wb, points in sorted(series.items()):
        points.sort(key=lambda p: p[0])
        xs = [p[0] for p in points]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise SchemaError(
                f"duplicate R_bm value in curve (model={model}, R_wb={r_wb:g})")
        curves[r_wb] = (xs, [p[1] for p in points])
    return curves


def render_figure(csv_path, out_path, style=None,
                  shaded_band=DEFAULT_SHADED_BAND):
    """Write the panel figure for one sweep CSV; returns the matplotlib Figure."""
    rows = read_sweep_csv(csv_path)
    if style:
        plt.style.use(style)
    plt.rcParams["svg.hashsalt"] = "vnoplan-figures"  # reproducible svg ids

    r_wb_values = sorted({r["R_wb"] for r in rows})
    colors = {r_wb: f"C{i % 10}" for i, r_wb in enumerate(r_wb_values)}

    fig, axes = plt.subplots(3, 3, figsize=(13, 10), sharex=True)
    handles = {}
    for row_idx, (metric, ylabel, step) in enumerate(PANEL_ROWS):
        for col_idx, model in enumerate(MODEL_ORDER):
            ax = axes[row_idx][col_idx]
            tag = PANEL_TAGS[row_idx][col_idx]
            if tag is None:
                ax.set_axis_off()  # spare cell, used for the legend below
                continue
            ax.set_xscale("log")
            ax.axvspan(shaded_band[0], shaded_band[1], color="0.85", zorder=0)
            curves = _curves(rows, model, metric)
            for r_wb, (xs, ys) in curves.items():
                line, = ax.plot(xs, ys, color=colors[r_wb],
                                drawstyle="steps-post" if step else "default",
                                label=f"R_wb = {r_wb:g}")
                handles.setdefault(r_wb, line)
            if not curves:
                ax.text(0.5, 0.5, f"no data for\n{MODEL_TITLES[model]}",
                        ha="center", va="center", transform=ax.transAxes,
                        color="0.4")
            ax.set_title(f"({tag}) {MODEL_TITLES[model]}", fontsize=10)
            if col_idx == 0 or (row_idx == 2 and col_idx == 1):
                ax.set_ylabel(ylabel)
            if row_idx == 2 or (row_idx == 1 and col_idx == 0):
                ax.set_xlabel("wavelength/site cost ratio R_bm")

    legend_ax = axes[2][0]
    if handles:
        legend_ax.legend(handles=[handles[r] for r in sorted(handles)],
                         loc="center", frameon=False,
                         title="spectrum/wavelength ratio")
    fig.tight_layout()
    fig.savefig(out_path, metadata=_clean_metadata(str(out_path)))
    return fig


def _clean_metadata(out_path: str):
    # drop timestamps so identical inputs write identical bytes
    if out_path.endswith(".svg"):
        return {"Date": None}
    if out_path.endswith(".pdf"):
        return {"CreationDate": None}
    return None
