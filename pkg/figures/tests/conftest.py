import math

import pytest

COLUMNS = ("model", "R_wb", "R_bm", "c_w", "c_m", "c_b", "opt_m", "opt_w",
           "eta", "sum_rate", "n_wavelengths", "cost_total", "feasibility_flag")

MODELS = ("fronthaul_overlay", "fronthaul_shared", "split_phy_shared")
R_WB_VALUES = (6.5e-05, 0.00065, 0.0065, 0.065, 0.65)


def r_bm_grid(points=25):
    return [10 ** (-4 + 6 * i / (points - 1)) for i in range(points)]


def synthetic_rows():
    """A full 3 x 5 x 25 grid with plausible shapes, schema-identical to a sweep."""
    rows = []
    for model_idx, model in enumerate(MODELS):
        for wb_idx, r_wb in enumerate(R_WB_VALUES):
            for r_bm in r_bm_grid():
                opt_m = 20 + min(44, int(3 * model_idx * math.log10(1 + 1e3 * r_bm)))
                opt_w = 5 * (10 - min(9, wb_idx * 2))
                rate = 4e7 * (1 + model_idx) * (opt_w / 50) * (opt_m / 20)
                c_b = 1.0
                c_w, c_m = r_wb * c_b, c_b / r_bm
                cost = c_m * opt_m + c_w * opt_w + c_b * 10
                rows.append({
                    "model": model, "R_wb": r_wb, "R_bm": r_bm,
                    "c_w": c_w, "c_m": c_m, "c_b": c_b,
                    "opt_m": opt_m, "opt_w": opt_w,
                    "eta": rate / cost, "sum_rate": rate,
                    "n_wavelengths": 10 + model_idx, "cost_total": cost,
                    "feasibility_flag": False,
                })
    return rows


def write_csv(path, rows, columns=COLUMNS):
    def fmt(v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, int):
            return str(v)
        if isinstance(v, float):
            return format(v, ".9g")
        return str(v)

    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(fmt(row[c]) for c in columns))
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture()
def sweep_csv(tmp_path):
    return write_csv(tmp_path / "sweep.csv", synthetic_rows())
