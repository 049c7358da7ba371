"""Pass/fail grid of merged law reports (instances by suites)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402

from .laws import Report  # noqa: E402

# missing, skip, pass, fail
_COLOURS = ["#ffffff", "#c8c8c8", "#5aae61", "#d6604d"]
_CODE = {"skip": 1, "pass": 2, "fail": 3}


def grid_cells(reports: list[Report]) -> tuple[list[str], list[str], dict]:
    """Rows, columns and ``(instance, suite) -> (status, passed, total)``."""
    rows, cols, cells = [], [], {}
    for r in reports:
        inst = r.instance or "?"
        if inst not in rows:
            rows.append(inst)
        if r.suite not in cols:
            cols.append(r.suite)
        run = [x for x in r.results if x.status != "skip"]
        passed = sum(x.status == "pass" for x in run)
        prev = cells.get((inst, r.suite))
        if prev:
            passed, total = prev[1] + passed, prev[2] + len(run)
        else:
            total = len(run)
        status = "fail" if passed < total else ("pass" if total else "skip")
        cells[(inst, r.suite)] = (status, passed, total)
    return rows, cols, cells


def plot_grid(reports: list[Report], path: str, title: str = "law suites") -> None:
    rows, cols, cells = grid_cells(reports)
    data = [[_CODE[cells[(i, s)][0]] if (i, s) in cells else 0 for s in cols] for i in rows]
    fig, ax = plt.subplots(figsize=(1.1 * len(cols) + 2, 0.5 * len(rows) + 1.5))
    ax.imshow(data, cmap=ListedColormap(_COLOURS), vmin=0, vmax=3, aspect="auto")
    for y, inst in enumerate(rows):
        for x, suite in enumerate(cols):
            if (inst, suite) in cells:
                _, p, t = cells[(inst, suite)]
                ax.text(x, y, f"{p}/{t}", ha="center", va="center", fontsize=8)
    ax.set_xticks(range(len(cols)), cols, rotation=30, ha="right")
    ax.set_yticks(range(len(rows)), rows)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
