"""Report rendering: delimited first-return tables plus figures on disk.

``write_report`` drops four artifacts into a directory: the full first-return
table as CSV (closed form next to the simulated oracle), a heatmap of the
return times over the (a, b) grid, the induced cycle drawn as a closed tour of
the section, and a JSON summary of the verdicts.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Dict, List

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.colors import LogNorm

from .firstreturn import (
    SectionPoint,
    closed_form_first_return,
    induced_cycle,
    row_excursion,
    section_points,
    simulate_first_return,
    total_excursion,
)
from .modring import check_modulus


def first_return_rows(m: int, check: bool = True) -> List[dict]:
    rows = []
    for p in section_points(m):
        rec = closed_form_first_return(m, p)
        row = {
            "a": p.a,
            "b": p.b,
            "s": (p.a + p.b) % m,
            "end_a": rec.end.a,
            "end_b": rec.end.b,
            "length": rec.length,
        }
        if check:
            sim = simulate_first_return(m, p)
            row["simulated_length"] = sim.length
            row["agree"] = int(sim == rec)
        rows.append(row)
    return rows


def write_first_return_csv(path: Path, m: int, check: bool = True) -> List[dict]:
    rows = first_return_rows(m, check)
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)
    return rows


def plot_return_times(path: Path, m: int) -> None:
    grid = np.full((m, m), np.nan)
    for p in section_points(m):
        grid[p.b, p.a] = closed_form_first_return(m, p).length
    fig, ax = plt.subplots(figsize=(6, 5))
    im = ax.imshow(grid, origin="lower", cmap="viridis",
                   norm=LogNorm(vmin=np.nanmin(grid), vmax=np.nanmax(grid)))
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.set_title(f"first-return times on the section, m={m}")
    fig.colorbar(im, ax=ax, label="steps")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_induced_cycle(path: Path, m: int) -> None:
    cycle, _ = induced_cycle(m)
    pts = cycle + [cycle[0]]
    xs = [p.a for p in pts]
    ys = [p.b for p in pts]
    fig, ax = plt.subplots(figsize=(6, 5))
    ax.plot(xs, ys, "-", color="lightgray", lw=0.8, zorder=1)
    order = ax.scatter(xs[:-1], ys[:-1], c=range(len(cycle)), cmap="plasma", s=28, zorder=2)
    ax.set_xlabel("a")
    ax.set_ylabel("b")
    ax.set_title(f"induced cycle on the section, m={m} ({len(cycle)} points)")
    fig.colorbar(order, ax=ax, label="visit order")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(m: int, out_dir, check: bool = True) -> Dict[str, object]:
    """Render all report artifacts for one modulus; returns the summary."""
    check_modulus(m)
    if m < 5:
        raise ValueError("the first-return report requires odd m >= 5")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "first_return.csv"
    rows = write_first_return_csv(csv_path, m, check)
    heat_path = out / "first_return_times.png"
    plot_return_times(heat_path, m)
    cycle_path = out / "induced_cycle.png"
    plot_induced_cycle(cycle_path, m)
    _, cycle_verdict = induced_cycle(m)
    summary = {
        "m": m,
        "section_size": len(rows),
        "total_excursion": total_excursion(m),
        "row_excursions": [row_excursion(m, b) for b in range(m)],
        "induced_cycle_pass": cycle_verdict.ok,
        "long_wrap_length": closed_form_first_return(m, SectionPoint(0, m - 1)).length,
        "closed_form_matches_simulation": all(r.get("agree", 1) for r in rows) if check else None,
        "files": {
            "table": csv_path.name,
            "return_times": heat_path.name,
            "induced_cycle": cycle_path.name,
        },
    }
    with open(out / "summary.json", "w") as fh:
        json.dump(summary, fh, indent=2)
    return summary
