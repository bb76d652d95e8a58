"""Sweep runner: spacing tables, verification checks, CSV and JSON emission.

Output is deterministic: rows are written with 17-significant-digit decimal
floats (round-trip safe), files are written atomically, and the summary is
assembled in lexicographic (n, alpha) order regardless of config order.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import bethe, bounds
from .errors import ParameterError
from .laguerre import LaguerreParams
from .solver import ZeroSet, zeros

VALID_CHECKS = frozenset({"bethe", "bounds", "krasikov", "bulk"})
DEFAULT_N_VALUES = (10, 20, 50, 100)
DEFAULT_ALPHA_VALUES = (1.0, 100.0, 1e3, 1e4)

BETHE_RESIDUAL_TOL = 1e-8
BULK_FACTOR = 2.0  # "within a factor c" used for the reported bulk statistic

_CSV_HEADER = "i,spacing,uniform_bound,ratio\n"


@dataclass(frozen=True)
class SpacingRow:
    """One spacing record; i = 1 is the gap below the largest zero."""

    n: int
    alpha: float
    i: int
    spacing: float
    uniform_bound: float
    ratio: float


@dataclass(frozen=True)
class SweepConfig:
    """Grid and options for one sweep run."""

    n_values: tuple
    alpha_values: tuple
    checks: frozenset = field(default_factory=lambda: frozenset(VALID_CHECKS))
    epsilon: float = 0.1
    output_dir: Path = Path("sweep-out")

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        object.__setattr__(
            self, "alpha_values", tuple(float(a) for a in self.alpha_values)
        )
        object.__setattr__(self, "checks", frozenset(self.checks))
        object.__setattr__(self, "output_dir", Path(self.output_dir))
        if not self.n_values or not self.alpha_values:
            raise ParameterError("n_values and alpha_values must be non-empty")
        bad = self.checks - VALID_CHECKS
        if bad:
            raise ParameterError(f"unknown checks: {sorted(bad)}")
        if not 0.0 < self.epsilon < 0.5:
            raise ParameterError(f"epsilon must lie in (0, 1/2), got {self.epsilon}")


def spacing_rows(zs: ZeroSet) -> list[SpacingRow]:
    """Per-gap rows in descending-zero order (exactly n-1 of them)."""
    if zs.n < 2:
        return []
    ub = bounds.uniform_spacing_lower(zs.params)
    rows = []
    for i, gap in enumerate(zs.spacings_descending(), start=1):
        rows.append(
            SpacingRow(
                n=zs.n,
                alpha=zs.params.alpha,
                i=i,
                spacing=float(gap),
                uniform_bound=ub,
                ratio=float(gap) / ub,
            )
        )
    return rows


def bulk_stats(zs: ZeroSet, epsilon: float, c: float = BULK_FACTOR) -> float:
    """Fraction of bulk spacings within a factor c of the uniform bound.

    Bulk means ranks i with epsilon*n <= i <= (1-epsilon)*n. Reported as an
    observation; nothing is asserted about its value.
    """
    if not 0.0 < epsilon < 0.5:
        raise ParameterError(f"epsilon must lie in (0, 1/2), got {epsilon}")
    if c < 1.0:
        raise ParameterError(f"factor must be >= 1, got {c}")
    if zs.n < 3:
        raise ParameterError("bulk statistics need n >= 3")
    ub = bounds.uniform_spacing_lower(zs.params)
    gaps = zs.spacings_descending()
    lo, hi = epsilon * zs.n, (1.0 - epsilon) * zs.n
    in_bulk = [gaps[i - 1] for i in range(1, zs.n) if lo <= i <= hi]
    if not in_bulk:
        raise ParameterError("bulk window is empty for this n and epsilon")
    return sum(1 for g in in_bulk if g <= c * ub) / len(in_bulk)


def _format_float(x: float) -> str:
    return format(x, ".17g")


def _alpha_tag(alpha: float) -> str:
    if float(alpha).is_integer():
        return str(int(alpha))
    return format(alpha, "g")


def pair_filename(n: int, alpha: float) -> str:
    return f"n{n}_alpha{_alpha_tag(alpha)}.csv"


def _write_atomic(path: Path, text: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _pair_csv_text(rows: list[SpacingRow]) -> str:
    lines = [_CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.i},{_format_float(r.spacing)},"
            f"{_format_float(r.uniform_bound)},{_format_float(r.ratio)}\n"
        )
    return "".join(lines)


def _run_pair(n: int, alpha: float, checks: frozenset, epsilon: float):
    """Compute one grid point: rows, summary entry, failure records."""
    params = LaguerreParams(n=n, alpha=alpha)
    zs = zeros(params)
    rows = spacing_rows(zs)
    failures = []

    min_ratio = min((r.ratio for r in rows), default=None)
    if "bounds" in checks and rows:
        if min_ratio < 1.0:
            failures.append(
                {
                    "n": n,
                    "alpha": alpha,
                    "check": "bounds",
                    "detail": f"minimum spacing/bound ratio {min_ratio} fell below 1",
                }
            )

    max_residual = None
    if "bethe" in checks:
        reports = bethe.verify_identity(zs)
        max_residual = bethe.max_rel_residual(reports)
        if max_residual > BETHE_RESIDUAL_TOL:
            failures.append(
                {
                    "n": n,
                    "alpha": alpha,
                    "check": "bethe",
                    "detail": f"max identity residual {max_residual} exceeds "
                    f"{BETHE_RESIDUAL_TOL}",
                }
            )

    krasikov_ok = None
    if "krasikov" in checks:
        edge = bounds.edge_params(params)
        lo, hi = bounds.krasikov_window(params)
        krasikov_ok = bool(
            edge.V2 < zs.zeros[0]
            and zs.zeros[-1] < edge.U2
            and lo <= zs.zeros[0]
            and zs.zeros[-1] <= hi
        )
        if not krasikov_ok:
            failures.append(
                {
                    "n": n,
                    "alpha": alpha,
                    "check": "krasikov",
                    "detail": "extreme zeros escaped the sharpened window",
                }
            )

    bulk_fraction = None
    if "bulk" in checks and zs.n >= 3:
        bulk_fraction = bulk_stats(zs, epsilon)

    entry = {
        "n": n,
        "alpha": alpha,
        "min_ratio": min_ratio,
        "max_bethe_residual": max_residual,
        "krasikov_ok": krasikov_ok,
        "bulk_fraction": bulk_fraction,
    }
    return rows, entry, failures


def run_sweep(config: SweepConfig) -> dict:
    """Run every grid point, write one CSV per pair plus summary.json.

    Returns the summary dict; callers decide the exit status from its
    "failures" list. Identical configs produce byte-identical outputs.
    """
    out = config.output_dir
    out.mkdir(parents=True, exist_ok=True)
    pairs = sorted(
        {(n, a) for n in config.n_values for a in config.alpha_values}
    )
    summary = {"pairs": [], "failures": []}
    for n, alpha in pairs:
        rows, entry, failures = _run_pair(n, alpha, config.checks, config.epsilon)
        _write_atomic(out / pair_filename(n, alpha), _pair_csv_text(rows))
        summary["pairs"].append(entry)
        summary["failures"].extend(failures)
    _write_atomic(out / "summary.json", json.dumps(summary, indent=2) + "\n")
    return summary


_PLOT_SCRIPT = '''#!/usr/bin/env python3
"""Render the spacing-versus-bound panels from the CSVs in this directory.

Blue: the spacing i -> x_i - x_(i+1) (largest zeros first).
Red: the uniform lower bound, constant per panel.
"""
import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

N_VALUES = [{n_values}]
ALPHA_VALUES = [{alpha_values}]

here = Path(__file__).parent
fig, axes = plt.subplots(
    len(N_VALUES), len(ALPHA_VALUES), figsize=(16, 12), squeeze=False
)
for r, n in enumerate(N_VALUES):
    for c, alpha in enumerate(ALPHA_VALUES):
        name = f"n{{n}}_alpha{{alpha}}.csv"
        with open(here / name, newline="") as handle:
            rows = list(csv.DictReader(handle))
        i = [int(row["i"]) for row in rows]
        spacing = [float(row["spacing"]) for row in rows]
        bound = float(rows[0]["uniform_bound"])
        ax = axes[r][c]
        ax.plot(i, spacing, color="tab:blue", lw=1.2)
        ax.axhline(bound, color="tab:red", lw=1.2)
        ax.set_yscale("log")
        ax.set_title(f"n={{n}}, alpha={{alpha}}", fontsize=9)
fig.suptitle("spacings (blue) vs uniform lower bound (red)")
fig.tight_layout()
fig.savefig(here / "figure1.png", dpi=150)
print("wrote", here / "figure1.png")
'''


def figure1(output_dir) -> list[Path]:
    """Emit the default 4x4 grid CSVs plus a standalone plot script.

    The script consumes the CSVs with matplotlib; the package itself never
    imports a rendering dependency.
    """
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for n in DEFAULT_N_VALUES:
        for alpha in DEFAULT_ALPHA_VALUES:
            zs = zeros(LaguerreParams(n=n, alpha=alpha))
            path = out / pair_filename(n, alpha)
            _write_atomic(path, _pair_csv_text(spacing_rows(zs)))
            written.append(path)
    script = _PLOT_SCRIPT.format(
        n_values=", ".join(str(n) for n in DEFAULT_N_VALUES),
        alpha_values=", ".join(_alpha_tag(a) for a in DEFAULT_ALPHA_VALUES),
    )
    script_path = out / "plot_figure1.py"
    _write_atomic(script_path, script)
    written.append(script_path)
    return written


def parse_sweep_config(path) -> SweepConfig:
    """Read a flat key/value config file (lists comma-separated).

    Recognized keys match SweepConfig fields: n_values, alpha_values,
    checks, epsilon, output_dir. Lines starting with '#' are comments.
    """
    text = Path(path).read_text()
    values = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParameterError(f"{path}:{lineno}: expected 'key = value'")
        key, _, val = line.partition("=")
        values[key.strip()] = val.strip()
    unknown = set(values) - {"n_values", "alpha_values", "checks", "epsilon", "output_dir"}
    if unknown:
        raise ParameterError(f"unknown config keys: {sorted(unknown)}")
    missing = {"n_values", "alpha_values"} - set(values)
    if missing:
        raise ParameterError(f"missing config keys: {sorted(missing)}")

    def split_list(text: str) -> list[str]:
        return [piece.strip() for piece in text.split(",") if piece.strip()]

    kwargs = {
        "n_values": [int(p) for p in split_list(values["n_values"])],
        "alpha_values": [float(p) for p in split_list(values["alpha_values"])],
    }
    if "checks" in values:
        kwargs["checks"] = frozenset(split_list(values["checks"]))
    if "epsilon" in values:
        kwargs["epsilon"] = float(values["epsilon"])
    if "output_dir" in values:
        kwargs["output_dir"] = Path(values["output_dir"])
    return SweepConfig(**kwargs)
