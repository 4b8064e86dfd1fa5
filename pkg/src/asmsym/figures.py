"""Report figures rendered alongside the delimited table output.

Two PNG renders: count growth per symmetry class (log scale) and the
x=1 totals of the generating-function families. Figure bytes are kept
reproducible: a fixed rc context, fixed canvas geometry, and pinned PNG
metadata (no timestamps, no version strings).
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from matplotlib import pyplot as plt  # noqa: E402  (backend must be set first)

from .asm import CLASSES  # noqa: E402
from .bipoly import BiPoly  # noqa: E402

_RC = {
    "figure.figsize": (6.4, 4.2),
    "figure.dpi": 100,
    "savefig.dpi": 100,
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.fontsize": 8,
}
_PNG_META = {"Software": "asmsym"}


def _save(fig, path: Path) -> None:
    fig.savefig(path, format="png", metadata=_PNG_META)
    plt.close(fig)


def render_counts_figure(grid: list[list], path: Path) -> None:
    """Log-scale count growth per class over the computed grid cells."""
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for cid in range(1, 9):
            xs = [row[0] for row in grid if row[cid] not in (None, 0)]
            ys = [row[cid] for row in grid if row[cid] not in (None, 0)]
            if xs:
                ax.plot(xs, ys, marker="o", markersize=3, linewidth=1,
                        label=f"{cid}: {CLASSES[cid].mnemonic}")
        ax.set_yscale("log")
        ax.set_xlabel("matrix size n")
        ax.set_ylabel("matrices in class")
        ax.set_title("Symmetry-class counts")
        ax.legend(ncol=2)
        _save(fig, path)


def render_family_figure(entries: list[tuple[str, BiPoly]], path: Path) -> None:
    """x=1 totals of each generating-function family against its index."""
    series: dict[str, list[tuple[int, int]]] = {}
    for label, poly in entries:
        name, _, rest = label.partition("_")
        idx = int(rest.split("(")[0])
        suffix = rest[rest.index("(") :]
        key = f"{name}{suffix.replace('x', '1').replace('y', '1')}"
        total = poly.eval(1, 1)
        series.setdefault(key, []).append((idx, int(total)))
    with plt.rc_context(_RC):
        fig, ax = plt.subplots()
        for key in sorted(series):
            pts = sorted(series[key])
            xs = [p[0] for p in pts]
            ys = [p[1] for p in pts if p[1] > 0]
            xs = [p[0] for p in pts if p[1] > 0]
            if xs:
                ax.plot(xs, ys, marker="s", markersize=3, linewidth=1, label=key)
        ax.set_yscale("log")
        ax.set_xlabel("index n")
        ax.set_ylabel("value at x = y = 1")
        ax.set_title("Generating-function totals")
        ax.legend(ncol=3)
        _save(fig, path)
