"""Artifact writers: delimited output, a generated gnuplot script, and
matplotlib figures rendered next to the data files.

The CSV column set is part of the public contract::

    N,F,norm0_sq,norm1_sq,min_eig,residual,wall_s,status

Rows for failed solves keep their N and carry the failure class in
``status``; numeric columns are left empty.  All numeric formatting uses
``repr``-faithful ``%.17g`` so a sweep re-run bit-compares (wall_s excepted).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = [
    "SWEEP_HEADER",
    "SweepResult",
    "SweepRow",
    "render_field_figure",
    "render_sweep_figure",
    "write_field_csv",
    "write_gnuplot_script",
    "write_solution_summary",
    "write_sweep_csv",
]

SWEEP_HEADER = "N,F,norm0_sq,norm1_sq,min_eig,residual,wall_s,status"


@dataclass(frozen=True)
class SweepRow:
    N: int
    F: float | None
    norm0_sq: float | None
    norm1_sq: float | None
    min_eig: float | None
    residual: float | None
    wall_s: float
    status: str = "ok"

    @property
    def ok(self) -> bool:
        return self.status == "ok"


@dataclass(frozen=True)
class SweepResult:
    """Sweep rows in ascending N plus the least-squares slope of ln F vs N."""

    rows: list[SweepRow]
    fitted_slope: float

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def fit_slope(rows: list[SweepRow]) -> float:
    """Least-squares slope of ln F against N over successful rows."""
    pts = [(r.N, r.F) for r in rows if r.ok and r.F is not None and r.F > 0.0]
    if len(pts) < 2:
        return math.nan
    ns = np.array([p[0] for p in pts], dtype=float)
    lf = np.log(np.array([p[1] for p in pts]))
    return float(np.polyfit(ns, lf, 1)[0])


def _fmt(v: float | None) -> str:
    return "" if v is None else f"{v:.17g}"


def write_sweep_csv(path: Path, rows: list[SweepRow]) -> None:
    lines = [SWEEP_HEADER]
    for r in rows:
        lines.append(",".join([
            str(r.N), _fmt(r.F), _fmt(r.norm0_sq), _fmt(r.norm1_sq),
            _fmt(r.min_eig), _fmt(r.residual), f"{r.wall_s:.6f}", r.status,
        ]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_gnuplot_script(path: Path, csv_name: str, title: str,
                         fitted_slope: float) -> None:
    """Companion gnuplot script plotting F(N) on a log axis."""
    script = f"""\
# gnuplot script: error bound F(N) against collocation count N
# fitted slope of ln F vs N: {fitted_slope:.6g}
set datafile separator ','
set logscale y
set xlabel 'N'
set ylabel 'F(N)'
set title '{title}'
set grid
plot '{csv_name}' using 1:2 skip 1 with linespoints pt 7 title 'F(N)'
"""
    path.write_text(script, encoding="utf-8")


def render_sweep_figure(path: Path, rows: list[SweepRow], title: str) -> None:
    """Render F(N) on a log axis to an image file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ok = [(r.N, r.F) for r in rows if r.ok and r.F is not None and r.F > 0.0]
    fig, ax = plt.subplots(figsize=(5.4, 3.6), constrained_layout=True)
    if ok:
        ax.semilogy([p[0] for p in ok], [p[1] for p in ok], "o-", ms=4, lw=1.2)
    ax.set_xlabel("N")
    ax.set_ylabel("F(N)")
    ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    fig.savefig(path, dpi=150)
    plt.close(fig)


FIELD_HEADER = "r,theta,gN,g_exact,abs_err"


def write_field_csv(path: Path, r: np.ndarray, theta: np.ndarray,
                    gN: np.ndarray, g_exact: np.ndarray | None = None) -> None:
    """Polar-grid field dump; exact-solution columns are optional."""
    lines = [FIELD_HEADER]
    r = np.asarray(r).ravel()
    theta = np.asarray(theta).ravel()
    gN = np.asarray(gN).ravel()
    ge = None if g_exact is None else np.asarray(g_exact).ravel()
    for i in range(len(r)):
        if ge is None:
            tail = ","
        else:
            tail = f"{ge[i]:.17g},{abs(gN[i] - ge[i]):.17g}"
        lines.append(f"{r[i]:.17g},{theta[i]:.17g},{gN[i]:.17g},{tail}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def render_field_figure(path: Path, r: np.ndarray, theta: np.ndarray,
                        gN: np.ndarray, title: str) -> None:
    """Polar pseudocolor rendering of the field dump."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(subplot_kw={"projection": "polar"},
                           figsize=(4.6, 4.0), constrained_layout=True)
    th2 = np.concatenate([theta, theta[:1] + 2 * np.pi])
    z2 = np.concatenate([gN, gN[:1, :]], axis=0)
    pcm = ax.pcolormesh(th2, r, z2.T, shading="gouraud", cmap="viridis")
    fig.colorbar(pcm, ax=ax, shrink=0.85)
    ax.set_title(title)
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_solution_summary(path: Path, lines: list[str]) -> None:
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
