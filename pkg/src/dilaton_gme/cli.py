"""Command-line interface.

Four subcommands:

* ``sweep``    — CSV of E over a dilaton range for one mode split
* ``figures``  — the three standard figure datasets (fig1/fig2/fig3.csv)
* ``verify``   — run the verification suite, emit a JSON check report
* ``state``    — dump a reduced density matrix as row/col/value triplets

All numeric output is printed with 17 significant digits so that reruns
are byte-identical.  Exit codes: 0 on success, 1 when verification
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Optional, Sequence

from .analytic import e_general
from .errors import DilatonGmeError
from .gme import gme_xstate
from .hawking import BlackHoleParams, bogoliubov
from .modes_state import ScenarioSpec, scenario_density
from .verify import (
    default_oracle_grid,
    monotonicity_scan,
    oracle_compare,
    relationship_suite,
)
from .xstate import extract_xstate

_FIG3_SPLITS = ((8, 4), (32, 2), (4, 8), (2, 32))
_SCAN_SPLITS = ((8, 4), (32, 2), (4, 8), (2, 32), (5, 0), (0, 5))
_THETA_SUFFIX = {"pi12": math.pi / 12, "pi6": math.pi / 6, "pi4": math.pi / 4}

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(value: float) -> str:
    return format(value, ".17g")


def _dilaton_grid(d_min: float, d_max: float, steps: int) -> list[float]:
    step = (d_max - d_min) / (steps - 1)
    return [d_min + i * step for i in range(steps - 1)] + [d_max]


def _add_split_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-horizon", type=int, required=True, metavar="N",
                        help="number of parties at the horizon")
    parser.add_argument("--p", type=int, default=None, metavar="P",
                        help="kept outside modes")
    parser.add_argument("--q", type=int, default=None, metavar="Q",
                        help="kept inside modes")
    parser.add_argument("--accessible", action="store_true",
                        help="keep every outside mode (p = n, q = 0)")
    parser.add_argument("--inaccessible", action="store_true",
                        help="keep every inside mode (p = 0, q = n)")


def _resolve_split(parser: argparse.ArgumentParser, args: argparse.Namespace) -> tuple[int, int]:
    n = args.n_horizon
    chosen = sum([args.accessible, args.inaccessible, args.p is not None or args.q is not None])
    if chosen > 1:
        parser.error("--accessible, --inaccessible and --p/--q are mutually exclusive")
    if args.accessible:
        return n, 0
    if args.inaccessible:
        return 0, n
    p, q = args.p, args.q
    if p is None and q is None:
        parser.error("choose a split: --accessible, --inaccessible, or --p/--q")
    if p is None:
        p = n - q
    elif q is None:
        q = n - p
    if p + q != n:
        parser.error(f"--p + --q must equal --n-horizon: {p} + {q} != {n}")
    return p, q


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _sweep_rows(args, parser) -> str:
    p, q = _resolve_split(parser, args)
    d_max = args.mass if args.d_max is None else args.d_max
    if not 0.0 <= args.d_min < d_max <= args.mass:
        parser.error(
            f"need 0 <= --d-min < --d-max <= --mass, got [{args.d_min}, {d_max}]"
        )
    if args.steps < 2:
        parser.error("--steps must be at least 2")
    if args.oracle and args.n_parties is None:
        parser.error("--oracle needs --n-parties")
    spec = None
    if args.oracle:
        spec = ScenarioSpec(args.n_parties, p + q, p, q, args.theta)
    lines = ["D,alpha,beta,E_analytic" + (",E_oracle" if args.oracle else "")]
    for d in _dilaton_grid(args.d_min, d_max, args.steps):
        params = BlackHoleParams(args.mass, d, args.omega)
        pair = bogoliubov(params)
        fields = [
            _fmt(d),
            _fmt(pair.alpha),
            _fmt(pair.beta),
            _fmt(e_general(args.theta, pair, p, q)),
        ]
        if args.oracle:
            rho = scenario_density(spec, pair)
            fields.append(_fmt(gme_xstate(extract_xstate(rho))))
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def cmd_sweep(args, parser) -> int:
    _write_text(args.output, _sweep_rows(args, parser))
    return 0


def _figure_table(
    columns: Sequence[tuple[str, int, int, float]],
    mass: float,
    omega: float,
    steps: int,
) -> tuple[list[float], list[tuple[str, list[float]]]]:
    ds = _dilaton_grid(0.0, mass, steps)
    pairs = [bogoliubov(BlackHoleParams(mass, d, omega)) for d in ds]
    series = []
    for name, p, q, theta in columns:
        series.append((name, [e_general(theta, pair, p, q) for pair in pairs]))
    return ds, series


def _figure_csv(ds: list[float], series: list[tuple[str, list[float]]]) -> str:
    lines = ["D," + ",".join(name for name, _ in series)]
    for i, d in enumerate(ds):
        lines.append(",".join([_fmt(d)] + [_fmt(values[i]) for _, values in series]))
    return "\n".join(lines) + "\n"


def _render_svg(title: str, ds: list[float], series: list[tuple[str, list[float]]]) -> str:
    width, height, margin = 720, 480, 60
    x0, x1 = ds[0], ds[-1]
    y0 = min(min(v) for _, v in series)
    y1 = max(max(v) for _, v in series)
    if y1 <= y0:
        y1 = y0 + 1.0
    span_x, span_y = x1 - x0, y1 - y0

    def sx(x: float) -> float:
        return margin + (x - x0) / span_x * (width - 2 * margin)

    def sy(y: float) -> float:
        return height - margin - (y - y0) / span_y * (height - 2 * margin)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width // 2}" y="24" text-anchor="middle" font-family="sans-serif" '
        f'font-size="16">{title}</text>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" '
        f'stroke="black"/>',
        f'<text x="{width // 2}" y="{height - 16}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">D</text>',
    ]
    for k, (name, values) in enumerate(series):
        color = _PALETTE[k % len(_PALETTE)]
        points = " ".join(
            f"{format(sx(d), '.2f')},{format(sy(v), '.2f')}" for d, v in zip(ds, values)
        )
        parts.append(f'<polyline fill="none" stroke="{color}" points="{points}"/>')
        parts.append(
            f'<text x="{width - margin + 4}" y="{margin + 16 * k}" font-family="sans-serif" '
            f'font-size="11" fill="{color}">{name}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_figures(args, parser) -> int:
    figures = {
        "fig1": [
            (f"E_n{n}_{suffix}", n, 0, theta)
            for suffix, theta in (("pi6", math.pi / 6), ("pi4", math.pi / 4))
            for n in (5, 20, 80)
        ],
        "fig2": [
            (f"E_n{n}_{suffix}", 0, n, theta)
            for suffix, theta in (("pi6", math.pi / 6), ("pi4", math.pi / 4))
            for n in (8, 10, 12)
        ],
        "fig3": [
            (f"E_p{p}_q{q}_{suffix}", p, q, theta)
            for p, q in _FIG3_SPLITS
            for suffix, theta in sorted(_THETA_SUFFIX.items(), key=lambda kv: kv[1])
        ],
    }
    os.makedirs(args.output_dir, exist_ok=True)
    for stem, columns in figures.items():
        ds, series = _figure_table(columns, args.mass, args.omega, args.steps)
        csv_path = os.path.join(args.output_dir, f"{stem}.csv")
        _write_text(csv_path, _figure_csv(ds, series))
        print(csv_path)
        if args.svg:
            svg_path = os.path.join(args.output_dir, f"{stem}.svg")
            _write_text(svg_path, _render_svg(stem, ds, series))
            print(svg_path)
    return 0


def cmd_verify(args, parser) -> int:
    if args.grid == "small":
        grid = default_oracle_grid(max_parties=4, max_horizon=2)
    else:
        grid = default_oracle_grid()
    report = oracle_compare(grid)
    report = report.merged_with(relationship_suite(grid=grid))
    for p, q in _SCAN_SPLITS:
        report = report.merged_with(monotonicity_scan(p, q, steps=args.steps))
    _write_text(args.output, json.dumps(report.as_json(), indent=2) + "\n")
    return 0 if report.passed else 1


def cmd_state(args, parser) -> int:
    p, q = _resolve_split(parser, args)
    spec = ScenarioSpec(args.n_parties, p + q, p, q, args.theta)
    pair = bogoliubov(BlackHoleParams(args.mass, args.dilaton, args.omega))
    rho = scenario_density(spec, pair)
    lines = [f"# modes: {rho.layout.labels()}", "row,col,value"]
    for (row, col) in sorted(rho.entries):
        lines.append(f"{row},{col},{_fmt(rho.entries[(row, col)])}")
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilaton-gme",
        description="GHZ entanglement across a dilaton black-hole horizon",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="CSV of E over a dilaton range")
    sweep.add_argument("--mass", type=float, default=1.0)
    sweep.add_argument("--omega", type=float, default=1.0)
    sweep.add_argument("--theta", type=float, default=math.pi / 4)
    _add_split_arguments(sweep)
    sweep.add_argument("--d-min", type=float, default=0.0)
    sweep.add_argument("--d-max", type=float, default=None)
    sweep.add_argument("--steps", type=int, default=2001)
    sweep.add_argument("--oracle", action="store_true",
                       help="add an E_oracle column from the exact pipeline")
    sweep.add_argument("--n-parties", type=int, default=None)
    sweep.add_argument("--output", default=None, metavar="FILE")
    sweep.set_defaults(func=cmd_sweep)

    figures = sub.add_parser("figures", help="write fig1/fig2/fig3 datasets")
    figures.add_argument("--output-dir", default=".")
    figures.add_argument("--steps", type=int, default=201)
    figures.add_argument("--mass", type=float, default=1.0)
    figures.add_argument("--omega", type=float, default=1.0)
    figures.add_argument("--svg", action="store_true", help="also render SVG plots")
    figures.set_defaults(func=cmd_figures)

    verify = sub.add_parser("verify", help="run the verification suite")
    verify.add_argument("--grid", choices=("full", "small"), default="full")
    verify.add_argument("--steps", type=int, default=2001,
                        help="points per monotonicity scan")
    verify.add_argument("--output", default=None, metavar="FILE")
    verify.set_defaults(func=cmd_verify)

    state = sub.add_parser("state", help="dump a reduced density matrix")
    state.add_argument("--n-parties", type=int, required=True)
    _add_split_arguments(state)
    state.add_argument("--theta", type=float, default=math.pi / 4)
    state.add_argument("--mass", type=float, default=1.0)
    state.add_argument("--dilaton", type=float, default=0.0)
    state.add_argument("--omega", type=float, default=1.0)
    state.add_argument("--output", default=None, metavar="FILE")
    state.set_defaults(func=cmd_state)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except DilatonGmeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
