"""Reference-table computation and byte-stable emission.

Three tables: the size-by-class count grid, the ratio/product checks
between consecutive counts, and the generating-function families
(determinant Z/T/R, enumerated H(1,y), extracted S, w, v). Each renders
to text, CSV and JSON; renderings are bit-exact across runs and thread
counts. Cells beyond the configured cutoffs render as "*" in text and
null in JSON, and skipped generating-function entries are reported as
warnings rather than failures.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

from .asm import CLASSES
from .bipoly import BiPoly
from .config import RunConfig, TABLE_MAX_SIZE
from .detgen import r_poly, t_poly, z_poly
from .enumeration import genfun, genfun_parallel
from .verify import (
    RATIO_FAMILIES,
    check_ratio,
    extract_S,
    extract_v_sequence,
    extract_w_sequence,
    ratio_instances,
)

GridValue = "int | None"


def grid_value(n: int, class_id: int, cutoffs: dict[int, int], threads: int = 1):
    """Count for one grid cell, or None beyond the class cutoff."""
    cls = CLASSES[class_id]
    if not cls.exists(n):
        return 0
    if n > cutoffs[class_id]:
        return None
    if threads > 1:
        return genfun_parallel(n, class_id, threads).count
    return genfun(n, class_id).count


def counts_grid(
    sizes: tuple[int, int], cutoffs: dict[int, int], threads: int = 1
) -> list[list]:
    """Rows [size, count_1, ..., count_8] over an inclusive size range."""
    lo, hi = sizes
    return [
        [n] + [grid_value(n, cid, cutoffs, threads) for cid in range(1, 9)]
        for n in range(lo, hi + 1)
    ]


def render_counts_text(grid: list[list]) -> str:
    header = ["size"] + [str(c) for c in range(1, 9)]
    rows = [[str(r[0])] + ["*" if v is None else str(v) for v in r[1:]] for r in grid]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for row in rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def render_counts_csv(grid: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["size"] + [f"class{c}" for c in range(1, 9)])
    for row in grid:
        writer.writerow([row[0]] + ["" if v is None else str(v) for v in row[1:]])
    return buf.getvalue()


def counts_json_obj(grid: list[list]) -> dict:
    return {
        "table": "counts",
        "classes": {str(c.id): c.mnemonic for c in CLASSES.values()},
        "rows": [
            {
                "size": row[0],
                "counts": [None if v is None else str(v) for v in row[1:]],
            }
            for row in grid
        ],
    }


# ----------------------------------------------------------------------
# ratio table

_RATIO_FORMULAS = {
    ("A", 0): "A(n+1)/A(n) = C(3n+1,n)/C(2n,n)",
    ("F", 0): "F(2n+1)/F(2n-1) = C(6n-2,2n)/(2 C(4n-1,2n))",
    ("H", 1): "H(2n+1)/H(2n) = C(3n,n)/C(2n,n)",
    ("H", 0): "H(2n)/H(2n-1) = 4 C(3n,n)/(3 C(2n,n))",
    ("Q", 0): "Q(4n) = H(2n) A(n)^2",
    ("Q", 1): "Q(4n+1) = H(2n+1) A(n)^2",
    ("Q", 2): "Q(4n-1) = H(2n-1) A(n)^2",
    ("P", 1): "P(4n+1)/P(4n-1) = (3n-1) C(6n-3,2n-1)/((4n-1) C(4n-2,2n-1))",
    ("P", 0): "P(4n+3)/P(4n+1) = (3n+1) C(6n,2n)/((4n+1) C(4n,2n))",
    ("X", 0): "X(2n+1)/X(2n-1) = C(3n,n)/C(2n-1,n)",
}


def _ratio_formula(family: str, n: int) -> str:
    if family in ("A", "F", "X"):
        return _RATIO_FORMULAS[(family, 0)]
    if family in ("H", "P"):
        return _RATIO_FORMULAS[(family, n % 2)]
    return _RATIO_FORMULAS[("Q", n % 3)]


def ratio_rows(cutoffs: dict[int, int]) -> list[dict]:
    rows = []
    for family in RATIO_FAMILIES:
        for n in ratio_instances(family, cutoffs):
            rep = check_ratio(family, n)
            rows.append(
                {
                    "family": family,
                    "n": n,
                    "formula": _ratio_formula(family, n),
                    "lhs": str(rep.lhs),
                    "rhs": str(rep.rhs),
                    "ok": rep.ok,
                }
            )
    return rows


def render_ratios_text(rows: list[dict]) -> str:
    lines = []
    for row in rows:
        status = "ok " if row["ok"] else "FAIL"
        lines.append(
            f"{status} {row['family']}  n={row['n']:<2} {row['lhs']} == {row['rhs']}"
            f"   [{row['formula']}]"
        )
    return "\n".join(lines) + "\n"


def render_ratios_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "n", "lhs", "rhs", "ok", "formula"])
    for row in rows:
        writer.writerow(
            [row["family"], row["n"], row["lhs"], row["rhs"], row["ok"], row["formula"]]
        )
    return buf.getvalue()


def ratios_json_obj(rows: list[dict]) -> dict:
    return {"table": "ratios", "rows": rows}


# ----------------------------------------------------------------------
# generating-function table


def genfun_entries(cutoffs: dict[int, int]) -> tuple[list[tuple[str, BiPoly]], list[str]]:
    """Labelled polynomial entries plus warnings for cutoff-skipped ones."""
    entries: list[tuple[str, BiPoly]] = []
    warnings: list[str] = []
    for mu in (0, 1):
        for n in range(1, 5):
            entries.append((f"Z_{n}(x,y,{mu})", z_poly(n, mu)))
    for mu in (0, 1):
        for n in range(1, 5):
            entries.append((f"T_{n}(x,{mu})", t_poly(n, mu)))
    for mu in (0, 1):
        for n in range(1, 4):
            entries.append((f"R_{n}(x,{mu})", r_poly(n, mu)))
    for n in (1, 3, 5, 7):
        if n <= cutoffs[3]:
            entries.append((f"H_{n}(1,y)", genfun(n, 3).poly.at_x(1)))
        else:
            warnings.append(f"H_{n}(1,y) skipped: class 3 cutoff {cutoffs[3]}")
    for k in (1, 3, 5, 7, 9):
        if k <= cutoffs[3]:
            entries.append((f"S_{k}(x)", extract_S(k)))
        else:
            warnings.append(f"S_{k}(x) skipped: class 3 cutoff {cutoffs[3]}")
    max_w = 8
    while max_w > 1 and 2 * max_w - 1 > cutoffs[5]:
        warnings.append(f"w_{max_w}(x) skipped: class 5 cutoff {cutoffs[5]}")
        max_w -= 1
    w = extract_w_sequence(max_w)
    for k, poly in enumerate(w):
        entries.append((f"w_{k}(x)", poly))
    max_v = 4
    while max_v > 0 and (4 * max_v > cutoffs[5] or 2 * max_v > max_w):
        warnings.append(f"v_{max_v}(x) skipped: class 5 cutoff {cutoffs[5]}")
        max_v -= 1
    for k, poly in enumerate(extract_v_sequence(max_v, w), start=1):
        entries.append((f"v_{k}(x)", poly))
    return entries, warnings


def render_genfuns_text(entries: list[tuple[str, BiPoly]]) -> str:
    width = max(len(label) for label, _ in entries)
    lines = [f"{label.ljust(width)}  =  {poly.text()}" for label, poly in entries]
    return "\n".join(lines) + "\n"


def render_genfuns_csv(entries: list[tuple[str, BiPoly]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["label", "text", "terms"])
    for label, poly in entries:
        writer.writerow([label, poly.text(), json.dumps(poly.json_terms())])
    return buf.getvalue()


def genfuns_json_obj(entries: list[tuple[str, BiPoly]]) -> dict:
    return {
        "table": "genfuns",
        "rows": [
            {"label": label, "text": poly.text(), "terms": poly.json_terms()}
            for label, poly in entries
        ],
    }


# ----------------------------------------------------------------------
# emission


def _dump_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_tables(
    out_dir: Path,
    cfg: RunConfig,
    sizes: tuple[int, int] = (1, 13),
    figures: bool = True,
) -> tuple[list[Path], list[str]]:
    """Write all three tables (text/CSV/JSON) and the report figures.

    Returns the written paths and any truncation warnings.
    """
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []
    grid = counts_grid(sizes, cfg.cutoffs, cfg.threads)
    rrows = ratio_rows(cfg.cutoffs)
    entries, warnings = genfun_entries(cfg.cutoffs)
    blobs = {
        "counts.txt": render_counts_text(grid),
        "counts.csv": render_counts_csv(grid),
        "counts.json": _dump_json(counts_json_obj(grid)),
        "ratios.txt": render_ratios_text(rrows),
        "ratios.csv": render_ratios_csv(rrows),
        "ratios.json": _dump_json(ratios_json_obj(rrows)),
        "genfuns.txt": render_genfuns_text(entries),
        "genfuns.csv": render_genfuns_csv(entries),
        "genfuns.json": _dump_json(genfuns_json_obj(entries)),
    }
    for name, blob in sorted(blobs.items()):
        path = out_dir / name
        path.write_text(blob)
        paths.append(path)
    if figures:
        from .figures import render_counts_figure, render_family_figure

        fig1 = out_dir / "counts.png"
        render_counts_figure(grid, fig1)
        paths.append(fig1)
        fig2 = out_dir / "families.png"
        render_family_figure(entries, fig2)
        paths.append(fig2)
    return paths, warnings
