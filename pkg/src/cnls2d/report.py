"""Sampled curves of the standing-wave family and their text export.

Table files are UTF-8: ``#`` metadata lines, then ``x<TAB>y`` rows printed
with 17 significant digits so that parsing recovers every double exactly.
Plot scripts target gnuplot and reference tables by relative path.
"""
from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError
from .model import ModelParams, Regime, critical_constants, frequency_interval, make_params
from . import waves


class CurveId(enum.Enum):
    Q_OF_OMEGA = "Q_of_Omega"
    E_OF_OMEGA = "E_of_Omega"
    LOGOMEGA_OF_Q = "LogOmega_of_Q"
    OMEGA_OF_Q = "Omega_of_Q"
    E_OF_Q = "E_of_Q"
    M_OF_OMEGA = "M_of_Omega"
    M_OF_Q = "M_of_Q"

    @property
    def over_frequency(self) -> bool:
        return self in (CurveId.Q_OF_OMEGA, CurveId.E_OF_OMEGA, CurveId.M_OF_OMEGA)


class Spacing(enum.Enum):
    LINEAR = "lin"
    LOG = "log"


_EVALUATORS = {
    CurveId.Q_OF_OMEGA: waves.charge_of_frequency,
    CurveId.E_OF_OMEGA: waves.energy_of_frequency,
    CurveId.LOGOMEGA_OF_Q: lambda p, q: np.log(waves.frequency_of_charge(p, q)),
    CurveId.OMEGA_OF_Q: waves.frequency_of_charge,
    CurveId.E_OF_Q: waves.energy_of_charge,
    CurveId.M_OF_OMEGA: waves.mass_of_frequency,
    CurveId.M_OF_Q: waves.mass_of_charge,
}

_LABELS = {
    CurveId.Q_OF_OMEGA: ("omega", "q(omega)"),
    CurveId.E_OF_OMEGA: ("omega", "E(omega)"),
    CurveId.LOGOMEGA_OF_Q: ("q", "log omega(q)"),
    CurveId.OMEGA_OF_Q: ("q", "omega(q)"),
    CurveId.E_OF_Q: ("q", "E(q)"),
    CurveId.M_OF_OMEGA: ("omega", "M(omega)"),
    CurveId.M_OF_Q: ("q", "M(q)"),
}


@dataclass(frozen=True)
class Marker:
    name: str
    x: float
    y: float


@dataclass
class CurveTable:
    curve_id: CurveId
    params: ModelParams
    x: np.ndarray
    y: np.ndarray
    markers: list[Marker] = field(default_factory=list)
    spacing: Spacing = Spacing.LINEAR

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist()))

    def __eq__(self, other):
        if not isinstance(other, CurveTable):
            return NotImplemented
        return (
            self.curve_id is other.curve_id
            and self.params == other.params
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.y, other.y)
            and self.markers == other.markers
        )


def curve_markers(curve_id: CurveId, p: ModelParams) -> list[Marker]:
    """Critical points lying on the curve (focusing only)."""
    if not p.focusing:
        return []
    cc = critical_constants(p)
    table = {
        CurveId.Q_OF_OMEGA: Marker("omega_bar", cc.omega_bar, cc.q_bar),
        CurveId.E_OF_OMEGA: Marker("omega_bar", cc.omega_bar, cc.lambda_threshold),
        CurveId.M_OF_OMEGA: Marker("omega_bar", cc.omega_bar, cc.mu_bar),
        CurveId.LOGOMEGA_OF_Q: Marker("q_bar", cc.q_bar, math.log(cc.omega_bar)),
        CurveId.OMEGA_OF_Q: Marker("q_bar", cc.q_bar, cc.omega_bar),
        CurveId.E_OF_Q: Marker("q_bar", cc.q_bar, cc.lambda_threshold),
        CurveId.M_OF_Q: Marker("q_bar", cc.q_bar, cc.mu_bar),
    }
    return [table[curve_id]]


def sample_curve(
    curve_id: CurveId | str,
    p: ModelParams,
    x_min: float,
    x_max: float,
    n: int,
    spacing: Spacing | str | None = None,
) -> CurveTable:
    """Sample ``n`` points of a curve on ``[x_min, x_max]``.

    ``spacing`` defaults to logarithmic for frequency curves and linear for
    charge curves. The range must lie inside the curve's open domain.
    """
    curve_id = CurveId(curve_id)
    if spacing is None:
        spacing = Spacing.LOG if curve_id.over_frequency else Spacing.LINEAR
    spacing = Spacing(spacing)
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n}")
    x_min, x_max = float(x_min), float(x_max)
    if not x_min < x_max:
        raise DomainError(f"empty range [{x_min}, {x_max}]")
    lo, hi = frequency_interval(p) if curve_id.over_frequency else (0.0, math.inf)
    if not (lo < x_min and x_max < hi):
        raise DomainError(f"range [{x_min}, {x_max}] leaves the open domain ({lo}, {hi}) of {curve_id.value}")
    if spacing is Spacing.LOG:
        x = np.geomspace(x_min, x_max, n)
    else:
        x = np.linspace(x_min, x_max, n)
    x[0], x[-1] = x_min, x_max
    y = np.asarray(_EVALUATORS[curve_id](p, x), dtype=float)
    markers = [m for m in curve_markers(curve_id, p) if x_min <= m.x <= x_max]
    return CurveTable(curve_id, p, x, y, markers, spacing)


def table_filename(table: CurveTable) -> str:
    p = table.params
    return f"{table.curve_id.value}_sigma{p.sigma:g}_beta{p.beta:g}.dat"


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def format_table(table: CurveTable) -> str:
    p = table.params
    lines = [
        f"# curve_id {table.curve_id.value}",
        f"# regime {p.regime.value}",
        f"# sigma {_fmt(p.sigma)}",
        f"# beta {_fmt(p.beta)}",
        f"# spacing {table.spacing.value}",
    ]
    lines += [f"# marker {m.name} {_fmt(m.x)} {_fmt(m.y)}" for m in table.markers]
    lines.append("# columns x y")
    lines += [f"{_fmt(x)}\t{_fmt(y)}" for x, y in zip(table.x, table.y)]
    return "\n".join(lines) + "\n"


def write_table(table: CurveTable, path) -> Path:
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(format_table(table))
    except OSError as exc:
        raise OSError(f"cannot write table {path}: {exc}") from exc
    return path


def read_table(path) -> CurveTable:
    meta: dict[str, str] = {}
    markers = []
    xs, ys = [], []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, rest = line[1:].strip().partition(" ")
                if key == "marker":
                    name, mx, my = rest.split()
                    markers.append(Marker(name, float(mx), float(my)))
                else:
                    meta[key] = rest
            elif line:
                sx, sy = line.split("\t")
                xs.append(float(sx))
                ys.append(float(sy))
    p = make_params(float(meta["sigma"]), float(meta["beta"]))
    return CurveTable(
        CurveId(meta["curve_id"]), p, np.array(xs), np.array(ys), markers, Spacing(meta.get("spacing", "lin"))
    )


def format_plot_script(tables: Sequence[CurveTable], table_paths: Sequence[str], output: str) -> str:
    n = len(tables)
    lines = [
        "# gnuplot script",
        f"set terminal pngcairo size {520 * n},420",
        f"set output '{output}'",
        f"set multiplot layout 1,{n}",
    ]
    for table, rel in zip(tables, table_paths):
        xlabel, ylabel = _LABELS[table.curve_id]
        p = table.params
        lines.append(f"set title '{ylabel}, sigma={p.sigma:g}, beta={p.beta:g}'")
        lines.append(f"set xlabel '{xlabel}'")
        lines.append(f"set ylabel '{ylabel}'")
        if table.spacing is Spacing.LOG:
            lines.append("set logscale x")
        for i, m in enumerate(table.markers, start=1):
            lines.append(f"set label {i} '{m.name}' at {_fmt(m.x)},{_fmt(m.y)} point pt 7 offset 1,1")
        lines.append(f"plot '{rel}' using 1:2 with lines notitle")
        lines.append("unset label")
        lines.append("unset logscale x")
    lines.append("unset multiplot")
    return "\n".join(lines) + "\n"


def write_plot_script(tables: Sequence[CurveTable], path, table_paths: Optional[Sequence] = None) -> Path:
    """Write a gnuplot script drawing one panel per table.

    ``table_paths`` default to :func:`table_filename` beside the script; the
    table files must already exist.
    """
    if not tables:
        raise ValueError("write_plot_script needs at least one table")
    path = Path(path)
    root = path.parent
    if table_paths is None:
        table_paths = [root / table_filename(t) for t in tables]
    if len(table_paths) != len(tables):
        raise ValueError("one table path per table required")
    rel = []
    for tp in table_paths:
        tp = Path(tp)
        full = tp if tp.is_absolute() else root / tp
        if not full.exists():
            raise FileNotFoundError(f"table file {full} not written yet")
        rel.append(Path(os.path.relpath(full, root)).as_posix())
    text = format_plot_script(tables, rel, path.with_suffix(".png").name)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write plot script {path}: {exc}") from exc
    return path


FOCUSING_DEMO = (1.0, -1.0)
DEFOCUSING_DEMO = (1.0, 1.0)

#: figure number -> (sigma, beta), [(curve, x_min, x_max, spacing), ...]
FIGURES = {
    1: (FOCUSING_DEMO, [(CurveId.Q_OF_OMEGA, 1.27, 20.0, Spacing.LOG), (CurveId.E_OF_OMEGA, 1.27, 20.0, Spacing.LOG)]),
    2: (FOCUSING_DEMO, [(CurveId.LOGOMEGA_OF_Q, 0.01, 0.6, Spacing.LINEAR), (CurveId.E_OF_Q, 0.01, 0.5, Spacing.LINEAR)]),
    3: (FOCUSING_DEMO, [(CurveId.M_OF_OMEGA, 1.27, 50.0, Spacing.LOG), (CurveId.M_OF_Q, 0.01, 0.6, Spacing.LINEAR)]),
    4: (DEFOCUSING_DEMO, [(CurveId.Q_OF_OMEGA, 0.01, 1.26, Spacing.LOG), (CurveId.E_OF_OMEGA, 0.01, 1.26, Spacing.LOG)]),
    5: (DEFOCUSING_DEMO, [(CurveId.OMEGA_OF_Q, 0.01, 2.0, Spacing.LINEAR), (CurveId.E_OF_Q, 0.01, 2.0, Spacing.LINEAR)]),
}


def figure_tables(figure: int, n: int = 400) -> list[CurveTable]:
    """Both panels of one of the five standing-wave figures."""
    if figure not in FIGURES:
        raise DomainError(f"figure must be one of {sorted(FIGURES)}, got {figure!r}")
    (sigma, beta), panels = FIGURES[figure]
    p = make_params(sigma, beta)
    return [sample_curve(c, p, lo, hi, n, sp) for c, lo, hi, sp in panels]


def write_figure(figure: int, outdir, n: int = 400) -> list[Path]:
    """Write both tables of one figure and a two-panel plot script into ``outdir``."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    tables = figure_tables(figure, n)
    names = [f"fig{figure}_{table_filename(t)}" for t in tables]
    written = [write_table(t, outdir / name) for t, name in zip(tables, names)]
    written.append(write_plot_script(tables, outdir / f"fig{figure}.gp", names))
    return written


def reproduce_figures(outdir, n: int = 400) -> list[Path]:
    """Write tables and plot scripts for all five figures."""
    return [path for fig in sorted(FIGURES) for path in write_figure(fig, outdir, n)]
