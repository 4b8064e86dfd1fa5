"""Command-line front end.

Subcommands: count, genfun, verify, tables, factor. Exit codes: 0 on
success, 1 for usage errors (including requests beyond the configured
cutoffs), 2 when a theorem check fails, 3 for internal errors. All big
integers are rendered as decimal strings in JSON output.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .asm import CLASSES, symmetry_class
from .bipoly import BiPoly
from .config import (
    DEFAULT_SMOOTH_BOUND,
    MissingDataError,
    RunConfig,
    apply_config_file,
    load_config_file,
    parse_classes,
    parse_cutoffs,
    parse_rational,
    parse_sizes,
)
from .detgen import r_poly, t_poly, z_poly
from .enumeration import genfun, genfun_parallel
from .tables import (
    counts_grid,
    counts_json_obj,
    genfun_entries,
    genfuns_json_obj,
    ratio_rows,
    ratios_json_obj,
    render_counts_csv,
    render_counts_text,
    render_genfuns_csv,
    render_genfuns_text,
    render_ratios_csv,
    render_ratios_text,
    write_tables,
)
from .verify import default_suite, extract_S, extract_v_sequence, extract_w_sequence
from .verify import factor_smooth, run_identity, value_text


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse default exits with code 2
        raise UsageError(message)


def _add_common(parser: _Parser) -> None:
    parser.add_argument("--format", dest="fmt", choices=("text", "json", "csv"))
    parser.add_argument("--threads", type=int)
    parser.add_argument("--cutoff", help="per-class size cutoffs, e.g. 5=16,half-turn=12")
    parser.add_argument("--config", help="key = value config file; flags win")
    parser.add_argument("--out", help="output directory")


def build_parser() -> _Parser:
    parser = _Parser(prog="asmsym", description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_count = sub.add_parser("count", help="class counts by size")
    p_count.add_argument("--class", dest="one_class")
    p_count.add_argument("--classes", default=None)
    p_count.add_argument("--size", type=int)
    p_count.add_argument("--sizes")
    _add_common(p_count)

    p_gen = sub.add_parser("genfun", help="generating functions")
    p_gen.add_argument("family", choices=list("ZTRAFHQP") + ["S", "w", "v"])
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--mu", type=int)
    p_gen.add_argument("--at-x", dest="at_x")
    p_gen.add_argument("--at-y", dest="at_y")
    _add_common(p_gen)

    p_ver = sub.add_parser("verify", help="run identity checks")
    p_ver.add_argument("--all", action="store_true")
    p_ver.add_argument("--id", dest="identity")
    p_ver.add_argument("--n", type=int)
    p_ver.add_argument("--mu", type=int)
    p_ver.add_argument("--family")
    p_ver.add_argument("--max-size", default="default")
    _add_common(p_ver)

    p_tab = sub.add_parser("tables", help="regenerate the reference tables")
    p_tab.add_argument("--sizes", default="1..13")
    p_tab.add_argument("--no-figures", action="store_true")
    _add_common(p_tab)

    p_fac = sub.add_parser("factor", help="trial-division factorization")
    p_fac.add_argument("value", type=int)
    p_fac.add_argument("--bound", type=int)
    _add_common(p_fac)

    return parser


def _build_config(args) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        apply_config_file(cfg, load_config_file(Path(args.config)))
    if getattr(args, "fmt", None):
        cfg.fmt = args.fmt
    if getattr(args, "threads", None):
        cfg.threads = args.threads
    if getattr(args, "cutoff", None):
        cfg.cutoffs.update(parse_cutoffs(args.cutoff))
    if getattr(args, "out", None):
        cfg.out_dir = Path(args.out)
    if getattr(args, "bound", None):
        cfg.smooth_bound = args.bound
    cfg.validate()
    return cfg


# ----------------------------------------------------------------------
# subcommands


def _cmd_count(args, cfg: RunConfig) -> int:
    if args.one_class and args.classes:
        raise UsageError("--class and --classes are mutually exclusive")
    if args.size is not None and args.sizes:
        raise UsageError("--size and --sizes are mutually exclusive")
    class_ids = (
        [symmetry_class(args.one_class).id]
        if args.one_class
        else parse_classes(args.classes or "all")
    )
    sizes = (args.size, args.size) if args.size is not None else parse_sizes(args.sizes or "1..7")
    if sizes[0] < 1:
        raise UsageError("sizes start at 1")
    grid = counts_grid(sizes, cfg.cutoffs, cfg.threads)
    if cfg.fmt == "text" and len(class_ids) == 1 and sizes[0] == sizes[1]:
        value = grid[0][class_ids[0]]
        print("*" if value is None else value)
        return 0
    if len(class_ids) < 8:
        trimmed = [[row[0]] + [row[c] for c in class_ids] for row in grid]
        if cfg.fmt == "json":
            doc = {
                "table": "counts",
                "classes": {str(c): CLASSES[c].mnemonic for c in class_ids},
                "rows": [
                    {"size": r[0], "counts": [None if v is None else str(v) for v in r[1:]]}
                    for r in trimmed
                ],
            }
            print(json.dumps(doc, indent=2, sort_keys=True))
        elif cfg.fmt == "csv":
            print(f"size,{','.join('class' + str(c) for c in class_ids)}")
            for r in trimmed:
                print(",".join([str(r[0])] + ["" if v is None else str(v) for v in r[1:]]))
        else:
            header = ["size"] + [str(c) for c in class_ids]
            cells = [[str(r[0])] + ["*" if v is None else str(v) for v in r[1:]] for r in trimmed]
            widths = [max(len(h), *(len(row[i]) for row in cells)) for i, h in enumerate(header)]
            print("  ".join(h.rjust(w) for h, w in zip(header, widths)))
            for row in cells:
                print("  ".join(c.rjust(w) for c, w in zip(row, widths)))
        return 0
    if cfg.fmt == "json":
        print(json.dumps(counts_json_obj(grid), indent=2, sort_keys=True))
    elif cfg.fmt == "csv":
        print(render_counts_csv(grid), end="")
    else:
        print(render_counts_text(grid), end="")
    return 0


def _family_poly(family: str, n: int, mu: int | None, cfg: RunConfig) -> BiPoly:
    need_mu = family in ("Z", "T", "R")
    if need_mu and mu is None:
        raise UsageError(f"family {family} requires --mu")
    if family == "Z":
        return z_poly(n, mu)
    if family == "T":
        return t_poly(n, mu)
    if family == "R":
        return r_poly(n, mu)
    class_of = {"A": 1, "F": 2, "H": 3, "Q": 5, "P": 6}
    if family in class_of:
        cid = class_of[family]
        if n > cfg.cutoffs[cid]:
            raise MissingDataError(
                f"{family}_{n} needs class {cid} at size {n} > cutoff {cfg.cutoffs[cid]}"
            )
        return genfun(n, cid).poly
    if family == "S":
        if n > cfg.cutoffs[3]:
            raise MissingDataError(f"S_{n} needs class 3 at size {n} > cutoff {cfg.cutoffs[3]}")
        return extract_S(n)
    if family == "w":
        if n < 0:
            raise UsageError("w is indexed from 0")
        if n > 1 and 2 * n - 1 > cfg.cutoffs[5]:
            raise MissingDataError(f"w_{n} needs class 5 at size {2 * n - 1} > cutoff {cfg.cutoffs[5]}")
        return extract_w_sequence(max(n, 1))[n]
    if family == "v":
        if n < 1:
            raise UsageError("v is indexed from 1")
        if 4 * n > cfg.cutoffs[5]:
            raise MissingDataError(f"v_{n} needs class 5 at size {4 * n} > cutoff {cfg.cutoffs[5]}")
        return extract_v_sequence(n)[n - 1]
    raise UsageError(f"unknown family {family}")


def _cmd_genfun(args, cfg: RunConfig) -> int:
    poly = _family_poly(args.family, args.n, args.mu, cfg)
    label = f"{args.family}_{args.n}" + (f"(mu={args.mu})" if args.mu is not None else "")
    if args.at_x is not None and args.at_y is not None:
        value = poly.eval(parse_rational(args.at_x), parse_rational(args.at_y))
        if cfg.fmt == "json":
            print(json.dumps({"label": label, "value": str(value)}, sort_keys=True))
        else:
            print(value)
        return 0
    for flag, text_val, sub in (("--at-x", args.at_x, "x"), ("--at-y", args.at_y, "y")):
        if text_val is not None:
            point = parse_rational(text_val)
            if point.denominator != 1:
                raise UsageError(f"{flag} must be an integer unless both points are given")
            poly = poly.at_x(int(point)) if sub == "x" else poly.at_y(int(point))
            label += f"|{sub}={point}"
    if cfg.fmt == "json":
        print(
            json.dumps(
                {"label": label, "text": poly.text(), "terms": poly.json_terms()},
                indent=2,
                sort_keys=True,
            )
        )
    elif cfg.fmt == "csv":
        print("ex,ey,coeff")
        for ex, ey, c in poly.terms():
            print(f"{ex},{ey},{c}")
    else:
        print(poly.text())
    return 0


def _cmd_verify(args, cfg: RunConfig) -> int:
    cutoffs = dict(cfg.cutoffs)
    if args.max_size != "default":
        cap = int(args.max_size)
        cutoffs = {cid: min(v, cap) for cid, v in cutoffs.items()}
    if args.identity:
        params = {}
        if args.n is not None:
            params["n"] = args.n
        if args.mu is not None:
            params["mu"] = args.mu
        if args.family:
            params["family"] = args.family
        reports = run_identity(args.identity, params, cutoffs)
    else:
        reports = default_suite(cutoffs)
    failed_theorems = [r for r in reports if r.is_theorem and not r.ok]
    if cfg.fmt == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True))
    else:
        for r in reports:
            status = "ok  " if r.ok else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in sorted(r.params.items()))
            detail = ""
            lhs, rhs = value_text(r.lhs), value_text(r.rhs)
            if len(lhs) + len(rhs) <= 100:
                detail = f"  {lhs} == {rhs}" if r.ok else f"  {lhs} != {rhs}"
            print(f"{status} {r.identity:<14} {params:<18}{detail}")
        ok_count = sum(1 for r in reports if r.ok)
        print(f"{ok_count}/{len(reports)} identities hold", end="")
        print(f"; {len(failed_theorems)} theorem failures" if failed_theorems else "")
    return 2 if failed_theorems else 0


def _cmd_tables(args, cfg: RunConfig) -> int:
    sizes = parse_sizes(args.sizes)
    if cfg.out_dir is not None:
        paths, warnings = write_tables(
            cfg.out_dir, cfg, sizes, figures=not args.no_figures
        )
        for path in paths:
            print(path)
        for warning in warnings:
            print(f"warning: {warning}", file=sys.stderr)
        return 0
    grid = counts_grid(sizes, cfg.cutoffs, cfg.threads)
    rrows = ratio_rows(cfg.cutoffs)
    entries, warnings = genfun_entries(cfg.cutoffs)
    if cfg.fmt == "json":
        doc = {
            "counts": counts_json_obj(grid),
            "ratios": ratios_json_obj(rrows),
            "genfuns": genfuns_json_obj(entries),
        }
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif cfg.fmt == "csv":
        print(render_counts_csv(grid), end="")
        print(render_ratios_csv(rrows), end="")
        print(render_genfuns_csv(entries), end="")
    else:
        print(render_counts_text(grid), end="\n")
        print(render_ratios_text(rrows), end="\n")
        print(render_genfuns_text(entries), end="")
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return 0


def _cmd_factor(args, cfg: RunConfig) -> int:
    report = factor_smooth(args.value, cfg.smooth_bound)
    if cfg.fmt == "json":
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(f"{report.value} = {report.text()}")
        if not report.complete:
            print(f"remainder {report.remainder} not factored below {report.bound}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required (count, genfun, verify, tables, factor)")
        cfg = _build_config(args)
        handler = {
            "count": _cmd_count,
            "genfun": _cmd_genfun,
            "verify": _cmd_verify,
            "tables": _cmd_tables,
            "factor": _cmd_factor,
        }[args.command]
        return handler(args, cfg)
    except (UsageError, MissingDataError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal error
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
