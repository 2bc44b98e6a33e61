"""Build the sweep figures from CSV records.

Each figure id expects exactly the column schema its sweep emits; a
mismatch is reported by naming the offending columns before anything is
written.  Rendering is deterministic: a fixed SVG hash salt and no
timestamp metadata, so re-rendering overwrites the output byte for byte.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

FIGURE_SCHEMAS = {
    "fig4": ("T_K", "n_th", "concurrence", "purity"),
    "fig5": ("dl_over_lambda1", "r_opt", "concurrence", "purity", "concurrence_noH"),
    "fig6": ("mu_over_Gamma", "r", "gap_over_Gamma"),
    "gap-vs-r": ("r", "gap_numeric", "gap_leading_order"),
}

plt.rcParams["svg.hashsalt"] = "synthsqueeze-figures"


class SchemaError(ValueError):
    """The CSV does not carry the columns the figure id requires."""


@dataclass(frozen=True)
class FigureSpec:
    csv_path: str
    figure_id: str
    out_path: str

    def __post_init__(self):
        if self.figure_id not in FIGURE_SCHEMAS:
            raise SchemaError(
                f"unknown figure id {self.figure_id!r}; expected one of "
                f"{sorted(FIGURE_SCHEMAS)}"
            )


def read_records(csv_path: str, figure_id: str) -> list[dict]:
    """Parse and schema-check the CSV for a figure id."""
    expected = FIGURE_SCHEMAS[figure_id]
    with open(csv_path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise SchemaError(f"{csv_path}: empty file, no header row") from None
        if tuple(header) != expected:
            missing = [c for c in expected if c not in header]
            extra = [c for c in header if c not in expected]
            parts = [f"{figure_id} expects columns {list(expected)}"]
            if missing:
                parts.append(f"missing {missing}")
            if extra:
                parts.append(f"unexpected {extra}")
            raise SchemaError(f"{csv_path}: " + "; ".join(parts))
        rows = [[float(x) for x in row] for row in reader if row]
    if not rows:
        raise SchemaError(f"{csv_path}: header only, no data rows")
    return [dict(zip(expected, row)) for row in rows]


def _column(records: list[dict], name: str) -> list[float]:
    return [rec[name] for rec in records]


def _fig4(records: list[dict]):
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    t_mk = [1e3 * t for t in _column(records, "T_K")]
    ax.plot(t_mk, _column(records, "concurrence"), "k-", label="concurrence")
    ax.plot(t_mk, _column(records, "purity"), "r--", label="purity")
    ax.set_xlabel("temperature [mK]")
    ax.set_ylabel("concurrence, purity")
    ax.set_ylim(0.0, 1.0)
    ax.legend(frameon=False)
    return fig


def _fig5(records: list[dict]):
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    x = _column(records, "dl_over_lambda1")
    ax.plot(x, _column(records, "concurrence"), "k-", label="concurrence")
    ax.plot(x, _column(records, "concurrence_noH"), "k--",
            label="concurrence (no pairing H)")
    ax.plot(x, _column(records, "purity"), "r-", label="purity")
    ax.set_xlabel(r"spacing error $\delta l / \lambda_1$")
    ax.set_ylabel("concurrence, purity")
    ax.legend(frameon=False, loc="lower left", fontsize=8)
    right = ax.twinx()
    right.plot(x, _column(records, "r_opt"), "b-", label="optimal squeezing")
    right.set_ylabel("optimal squeezing r", color="b")
    return fig


def _fig6(records: list[dict]):
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    r_values = sorted({rec["r"] for rec in records})
    for r in r_values:
        rows = [rec for rec in records if rec["r"] == r]
        rows.sort(key=lambda rec: rec["mu_over_Gamma"])
        mus = [rec["mu_over_Gamma"] for rec in rows if rec["mu_over_Gamma"] > 0]
        gaps = [rec["gap_over_Gamma"] for rec in rows if rec["mu_over_Gamma"] > 0]
        line, = ax.loglog(mus, gaps, "-", label=f"r = {r:g}")
        asymptote = 1.0 / (3.0 * math.sinh(r) ** 2)
        ax.loglog([mus[0], mus[-1]], [asymptote, asymptote], "--",
                  color=line.get_color(), linewidth=0.9)
    ax.set_xlabel(r"$\mu / \Gamma$")
    ax.set_ylabel(r"gap $/\ \Gamma$")
    ax.legend(frameon=False, fontsize=8)
    return fig


def _gap_vs_r(records: list[dict]):
    fig, ax = plt.subplots(figsize=(5.0, 3.4))
    r = _column(records, "r")
    ax.semilogy(r, _column(records, "gap_numeric"), "k-", label="numeric gap")
    ax.semilogy(r, _column(records, "gap_leading_order"), "k--",
                label=r"$\Gamma / (3 \sinh^2 r)$")
    ax.set_xlabel("squeezing r")
    ax.set_ylabel(r"gap $/\ \Gamma$")
    ax.legend(frameon=False)
    return fig


_BUILDERS = {"fig4": _fig4, "fig5": _fig5, "fig6": _fig6, "gap-vs-r": _gap_vs_r}


def build_figure(figure_id: str, records: list[dict]):
    """Matplotlib Figure for a figure id from already-validated records."""
    return _BUILDERS[figure_id](records)


def render(spec: FigureSpec) -> str:
    """Validate, build and write the figure; returns the output path."""
    records = read_records(spec.csv_path, spec.figure_id)
    fig = build_figure(spec.figure_id, records)
    try:
        out = Path(spec.out_path)
        metadata = {"Date": None} if out.suffix.lower() == ".svg" else None
        fig.savefig(spec.out_path, metadata=metadata, dpi=150,
                    bbox_inches="tight")
    finally:
        plt.close(fig)
    return spec.out_path
