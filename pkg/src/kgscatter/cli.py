"""Command-line front end: energy sweeps, resonance reporting, CSV/SVG output.

Usage:

    kgscatter --a 5 --b 2 --m 1 --x0 -4 --x1 -2 --emin 1.05 --emax 15 \
              --estep 0.01 --out sweep.csv --plot sweep.svg

Parameters may also come from a plain `key = value` file via --config
(# comments allowed); explicit flags override file entries.  Grid points
inside a threshold band are emitted as gap rows with empty R/T fields so the
grid stays aligned.  Exit codes: 0 success, 2 bad config, 3 any failed point
under --strict.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

from .errors import ConfigInvalid, IoFailure, KgScatterError, ThresholdSingular
from .model import EnergyRegime, PotentialParams
from .solver import ScatteringPoint, solve_point

UNITARITY_TOL = 1e-6
RESONANCE_MIN_T = 0.999
CSV_HEADER = "E,R,T,unitarity_residual,regime"


@dataclass(frozen=True)
class SweepConfig:
    params: PotentialParams
    e_min: float
    e_max: float
    e_step: float
    eps_threshold: float
    out_csv: str | None = None
    out_svg: str | None = None
    strict: bool = False

    def __post_init__(self) -> None:
        if not (self.params.m < self.e_min < self.e_max):
            raise ConfigInvalid(
                f"need m < emin < emax, got m={self.params.m}, "
                f"emin={self.e_min}, emax={self.e_max}"
            )
        if self.e_step <= 0:
            raise ConfigInvalid(f"estep={self.e_step} must be > 0")
        if self.eps_threshold < 0:
            raise ConfigInvalid(f"eps={self.eps_threshold} must be >= 0")


@dataclass(frozen=True)
class SweepRow:
    """One grid energy: a solved point, a threshold gap, or a failure."""

    E: float
    point: ScatteringPoint | None
    note: str  # "" for solved points, "near_threshold" for gaps, error name otherwise

    @property
    def failed(self) -> bool:
        if self.point is None:
            return self.note != "near_threshold"
        return self.point.unitarity_residual >= UNITARITY_TOL


def energy_grid(cfg: SweepConfig) -> list[float]:
    n = int(math.floor((cfg.e_max - cfg.e_min) / cfg.e_step + 1e-9))
    return [cfg.e_min + k * cfg.e_step for k in range(n + 1)]


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """One row per grid energy, ascending; failures flagged, never raised."""
    rows = []
    for E in energy_grid(cfg):
        try:
            point = solve_point(cfg.params, E, cfg.eps_threshold)
            rows.append(SweepRow(E=E, point=point, note=""))
        except ThresholdSingular:
            rows.append(SweepRow(E=E, point=None, note="near_threshold"))
        except (KgScatterError, OverflowError) as exc:
            rows.append(SweepRow(E=E, point=None, note=type(exc).__name__))
    return rows


def find_resonances(points: list[ScatteringPoint]) -> list[tuple[float, float]]:
    """Transmission peaks with refined T > 0.999 among propagating points.

    Each local maximum of T is refined by the vertex of the parabola through
    the three bracketing samples (valid for uneven spacing across gaps).
    """
    peaks = []
    prop = [pt for pt in points if pt.regime is EnergyRegime.PROPAGATING]
    for lo, mid, hi in zip(prop, prop[1:], prop[2:]):
        if not (mid.T > lo.T and mid.T > hi.T):
            continue
        # parabola through the triple, centered on the middle sample
        d1, d3 = lo.E - mid.E, hi.E - mid.E
        s1, s3 = (lo.T - mid.T) / d1, (hi.T - mid.T) / d3
        a2 = (s3 - s1) / (d3 - d1)
        a1 = s3 - a2 * d3
        if a2 < 0:
            delta = -a1 / (2.0 * a2)
            e_peak, t_peak = mid.E + delta, mid.T - a1 * a1 / (4.0 * a2)
            if not (d1 < delta < d3):
                e_peak, t_peak = mid.E, mid.T
        else:  # flat or degenerate triple: keep the grid sample
            e_peak, t_peak = mid.E, mid.T
        if t_peak > RESONANCE_MIN_T:
            peaks.append((e_peak, t_peak))
    return peaks


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def _csv_lines(rows: list[SweepRow]) -> list[str]:
    lines = [CSV_HEADER]
    for row in rows:
        if row.point is None:
            lines.append(f"{_fmt(row.E)},,,,{row.note}")
        else:
            pt = row.point
            lines.append(
                f"{_fmt(pt.E)},{_fmt(pt.R)},{_fmt(pt.T)},"
                f"{_fmt(pt.unitarity_residual)},{pt.regime.value}"
            )
    return lines


def _as_rows(points) -> list[SweepRow]:
    return [
        pt if isinstance(pt, SweepRow) else SweepRow(E=pt.E, point=pt, note="")
        for pt in points
    ]


def emit_csv(points, path: str) -> None:
    """CSV with header E,R,T,unitarity_residual,regime; 12 significant digits."""
    rows = _as_rows(points)
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(_csv_lines(rows)) + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot write CSV to {path}: {exc}") from exc


def _polyline(xs, ys, x_rng, y_rng, box) -> str:
    left, top, width, height = box
    x_lo, x_hi = x_rng
    y_lo, y_hi = y_rng
    x_span = (x_hi - x_lo) or 1.0
    y_span = (y_hi - y_lo) or 1.0
    pts = " ".join(
        f"{left + (x - x_lo) / x_span * width:.2f},"
        f"{top + height - (y - y_lo) / y_span * height:.2f}"
        for x, y in zip(xs, ys)
    )
    return f'<polyline fill="none" stroke="#1f6fb2" stroke-width="1" points="{pts}"/>'


def _panel(title, xs, ys, box) -> list[str]:
    left, top, width, height = box
    x_rng = (min(xs), max(xs))
    y_rng = (min(ys), max(ys))
    if y_rng[0] == y_rng[1]:
        y_rng = (y_rng[0] - 0.5, y_rng[1] + 0.5)
    parts = [
        f'<rect x="{left}" y="{top}" width="{width}" height="{height}" '
        'fill="none" stroke="black" stroke-width="1"/>',
        f'<text x="{left + width / 2:.0f}" y="{top - 6}" text-anchor="middle" '
        f'font-size="13">{title}</text>',
    ]
    for i in range(5):
        xv = x_rng[0] + i * (x_rng[1] - x_rng[0]) / 4
        px = left + i * width / 4
        parts.append(
            f'<text x="{px:.1f}" y="{top + height + 14}" text-anchor="middle" '
            f'font-size="10">{xv:.4g}</text>'
        )
    for i in range(4):
        yv = y_rng[0] + i * (y_rng[1] - y_rng[0]) / 3
        py = top + height - i * height / 3
        parts.append(
            f'<text x="{left - 4}" y="{py:.1f}" text-anchor="end" '
            f'font-size="10">{yv:.4g}</text>'
        )
    parts.append(_polyline(xs, ys, x_rng, y_rng, box))
    return parts


def emit_svg(points, path: str) -> None:
    """Static SVG 1.1 with R(E) and T(E) polylines.

    Plotted values are re-parsed from the CSV-formatted strings, so the plot
    matches the CSV bit-for-bit.
    """
    rows = [r for r in _as_rows(points) if r.point is not None]
    if not rows:
        raise IoFailure("nothing to plot: no solved points")
    es = [float(_fmt(r.point.E)) for r in rows]
    rs = [float(_fmt(r.point.R)) for r in rows]
    ts = [float(_fmt(r.point.T)) for r in rows]
    body = ['<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="760" height="560">']
    body += _panel("R vs E", es, rs, (70, 30, 650, 210))
    body += _panel("T vs E", es, ts, (70, 310, 650, 210))
    body.append("</svg>")
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("\n".join(body) + "\n")
    except OSError as exc:
        raise IoFailure(f"cannot write SVG to {path}: {exc}") from exc


def read_config_file(path: str) -> dict[str, str]:
    """Plain `key = value` lines; blank lines and # comments ignored."""
    known = {"a", "b", "m", "x0", "x1", "emin", "emax", "estep", "eps", "out", "plot"}
    entries: dict[str, str] = {}
    try:
        with open(path, encoding="utf-8") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ConfigInvalid(f"cannot read config file {path}: {exc}") from exc
    for lineno, line in enumerate(raw.splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        if "=" not in text:
            raise ConfigInvalid(f"{path}:{lineno}: expected key = value, got {line!r}")
        key, _, value = text.partition("=")
        key = key.strip()
        if key not in known:
            raise ConfigInvalid(f"{path}:{lineno}: unknown key {key!r}")
        entries[key] = value.strip()
    return entries


def _build_config(args: argparse.Namespace) -> SweepConfig:
    values: dict[str, str] = {}
    if args.config:
        values.update(read_config_file(args.config))
    for key in ("a", "b", "m", "x0", "x1", "emin", "emax", "estep", "eps"):
        flag = getattr(args, key)
        if flag is not None:
            values[key] = repr(flag)
    out_csv = args.out if args.out is not None else values.get("out")
    out_svg = args.plot if args.plot is not None else values.get("plot")

    def num(key: str, default: float | None = None) -> float:
        if key not in values:
            if default is None:
                raise ConfigInvalid(f"missing required parameter {key!r}")
            return default
        try:
            return float(values[key])
        except ValueError as exc:
            raise ConfigInvalid(f"parameter {key}={values[key]!r} is not a number") from exc

    try:
        params = PotentialParams(
            a=num("a", 5.0), b=num("b", 2.0), m=num("m", 1.0),
            x0=num("x0", -4.0), x1=num("x1", -2.0),
        )
    except ValueError as exc:
        raise ConfigInvalid(str(exc)) from exc
    # Sweep defaults (the figures do not state a grid): [m + 0.05, 3a], step 0.01.
    return SweepConfig(
        params=params,
        e_min=num("emin", params.m + 0.05),
        e_max=num("emax", 3.0 * params.a),
        e_step=num("estep", 0.01),
        eps_threshold=num("eps", params.threshold_band()),
        out_csv=out_csv,
        out_svg=out_svg,
        strict=args.strict,
    )


def _summarize(rows: list[SweepRow], out) -> None:
    points = [r.point for r in rows if r.point is not None]
    gaps = sum(1 for r in rows if r.point is None and r.note == "near_threshold")
    failures = sum(1 for r in rows if r.failed)
    by_regime: dict[str, int] = {}
    for pt in points:
        by_regime[pt.regime.value] = by_regime.get(pt.regime.value, 0) + 1
    print(f"points solved: {len(points)} / {len(rows)} "
          f"(threshold gaps: {gaps}, failures: {failures})", file=out)
    for name in sorted(by_regime):
        print(f"  {name}: {by_regime[name]}", file=out)
    if points:
        worst = max(pt.unitarity_residual for pt in points)
        print(f"max |R+T-1|: {worst:.3e}", file=out)
    peaks = find_resonances(points)
    if peaks:
        print("transmission resonances (T > 0.999):", file=out)
        for e_peak, t_peak in peaks:
            print(f"  E = {e_peak:.6f}  T = {t_peak:.9f}", file=out)
    else:
        print("transmission resonances (T > 0.999): none", file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgscatter",
        description="Klein-Gordon scattering sweep for the step + tanh potential",
    )
    parser.add_argument("--config", help="key = value parameter file")
    for key, doc in (
        ("a", "potential height"),
        ("b", "tanh smoothness (inverse length)"),
        ("m", "particle mass"),
        ("x0", "left step position (< x1)"),
        ("x1", "right step position (< 0)"),
        ("emin", "sweep start energy"),
        ("emax", "sweep end energy"),
        ("estep", "sweep energy step"),
        ("eps", "threshold exclusion band"),
    ):
        parser.add_argument(f"--{key}", type=float, default=None, help=doc)
    parser.add_argument("--out", default=None, help="CSV output path")
    parser.add_argument("--plot", default=None, help="SVG output path")
    parser.add_argument("--strict", action="store_true",
                        help="exit 3 if any point fails")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _build_config(args)
    except ConfigInvalid as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    rows = run_sweep(cfg)
    try:
        if cfg.out_csv:
            emit_csv(rows, cfg.out_csv)
        if cfg.out_svg:
            emit_svg(rows, cfg.out_svg)
    except IoFailure as exc:
        print(f"output error: {exc}", file=sys.stderr)
        return 2
    _summarize(rows, sys.stdout)
    if cfg.strict and any(r.failed for r in rows):
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
