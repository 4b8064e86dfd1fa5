"""Run configuration: size cutoffs, output format, threads, config files.

Cutoffs bound how far each class is computed by the CLI and the table
emitters; requests beyond a cutoff surface as MissingDataError (rendered
as "*" in the count grid, mirroring cells that are too large to print).
The defaults keep the full verification suite at minutes scale.

The optional config file is a flat key = value list; command-line flags
win over file values. Keys: format, threads, out, smooth-bound, and
cutoff.<class> with <class> an id or mnemonic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .asm import symmetry_class

DEFAULT_CUTOFFS: dict[int, int] = {1: 8, 2: 13, 3: 11, 4: 8, 5: 17, 6: 17, 7: 13, 8: 17}
DEFAULT_SMOOTH_BOUND = 1000
TABLE_MAX_SIZE = 17


class MissingDataError(Exception):
    """A requested size exceeds the configured cutoff for its class."""


@dataclass
class RunConfig:
    fmt: str = "text"
    threads: int = 1
    cutoffs: dict[int, int] = field(default_factory=lambda: dict(DEFAULT_CUTOFFS))
    smooth_bound: int = DEFAULT_SMOOTH_BOUND
    out_dir: Path | None = None

    def validate(self) -> None:
        if self.fmt not in ("text", "json", "csv"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if any(v < 1 for v in self.cutoffs.values()):
            raise ValueError("cutoffs must be >= 1")
        if self.smooth_bound < 2:
            raise ValueError("smoothness bound must be >= 2")


def parse_cutoffs(text: str) -> dict[int, int]:
    """Parse "5=16,half-turn=12" into {class_id: cutoff}."""
    out: dict[int, int] = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, _, value = chunk.partition("=")
        if not value:
            raise ValueError(f"bad cutoff {chunk!r}, expected CLASS=N")
        out[symmetry_class(key).id] = int(value)
    return out


def parse_sizes(text: str) -> tuple[int, int]:
    """Parse "A..B" (or a single size) into an inclusive range.

    A reversed range is allowed and denotes the empty range; sizes below 1
    are rejected.
    """
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        lo_i, hi_i = int(lo), int(hi)
    else:
        lo_i = hi_i = int(text)
    if lo_i < 1:
        raise ValueError(f"invalid size range {text!r}: sizes start at 1")
    return lo_i, hi_i


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_classes(text: str) -> list[int]:
    """Parse "all" or a comma list of ids/mnemonics into class ids."""
    text = text.strip().lower()
    if text == "all":
        return list(range(1, 9))
    ids = [symmetry_class(chunk.strip()).id for chunk in text.split(",") if chunk.strip()]
    if not ids:
        raise ValueError("no classes given")
    return ids


def load_config_file(path: Path) -> dict[str, str]:
    """Flat key = value file; '#' starts a comment."""
    values: dict[str, str] = {}
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"bad config line {raw!r}")
        values[key.strip().lower()] = value.strip()
    return values


def apply_config_file(cfg: RunConfig, values: dict[str, str]) -> None:
    for key, value in values.items():
        if key == "format":
            cfg.fmt = value
        elif key == "threads":
            cfg.threads = int(value)
        elif key == "out":
            cfg.out_dir = Path(value)
        elif key == "smooth-bound":
            cfg.smooth_bound = int(value)
        elif key.startswith("cutoff."):
            cfg.cutoffs[symmetry_class(key.split(".", 1)[1]).id] = int(value)
        else:
            raise ValueError(f"unknown config key {key!r}")
