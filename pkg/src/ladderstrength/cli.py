"""Command-line entry point: every table and figure dataset as CSV or JSON."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from .exact import format_rational, series_eval
from .model import ModelSpec, build_hamiltonian, preset_offsets
from .rspt import PRINTED_WINDOW, leading_vector, rs_series, table4_row
from .spectral import ConvergenceError, decompose
from .strength import (SeriesMode, TransitionKind, ZeroStrengthError, fit_power,
                       strength_profile, strength_series, table3)

STRENGTH_COLUMNS = ["model", "operator", "dim", "E", "v", "from", "to",
                    "e_star", "O", "O2", "lnO2"]

FIGURES = {
    "fig1": ("tri", TransitionKind.T1),
    "fig2": ("penta", TransitionKind.T1),
    "fig3": ("tri", TransitionKind.T2),
    "fig4": ("penta", TransitionKind.T2),
}


class UsageError(ValueError):
    pass


def _float_list(text: str) -> list[float]:
    items = [t for t in text.split(",") if t.strip()]
    try:
        return [float(t) for t in items]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")


def _cell(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if x is None:
        return "none"
    if isinstance(x, float) and not math.isfinite(x):
        return "-inf" if x < 0 else ("inf" if x > 0 else "nan")
    if isinstance(x, bool):
        return int(x)
    return x


def _csv_text(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format(v, ".17g") if isinstance(v, float) else v
                    for v in map(_cell, row)])
    return buf.getvalue()


def _json_text(columns, rows) -> str:
    recs = [dict(zip(columns, map(_cell, row))) for row in rows]
    return json.dumps(recs, indent=1) + "\n"


# ---------------------------------------------------------------------------
# argument parsing

def _add_model_args(p: argparse.ArgumentParser, model=True) -> None:
    if model:
        p.add_argument("--model", choices=["tri", "penta", "allv", "custom"], default="tri")
        p.add_argument("--offsets", type=_int_list, default=None,
                       help="band offsets, custom model only (e.g. 1,2)")
    p.add_argument("--dim", type=int, default=11)
    p.add_argument("--E", type=float, default=1.0, help="level spacing (MeV)")
    p.add_argument("--v", type=float, default=0.1, help="coupling (MeV)")


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", choices=["csv", "json"], default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ladderstrength",
        description="Ladder Hamiltonians, weak-coupling series and transition strengths.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalues (and optionally eigenvectors)")
    _add_model_args(p)
    p.add_argument("--vectors", action="store_true")

    p = sub.add_parser("ground", help="ground-state amplitudes")
    _add_model_args(p)
    p.add_argument("--method", choices=["numeric", "series"], default="numeric")
    p.add_argument("--order", type=int, default=8)

    p = sub.add_parser("series", help="exact perturbation series of one state")
    _add_model_args(p)
    p.add_argument("--ref", type=int, default=0)
    p.add_argument("--order", type=int, default=12)

    p = sub.add_parser("leading", help="leading weak-coupling amplitudes by path sums")
    _add_model_args(p)
    p.add_argument("--ref", type=int, default=0)

    p = sub.add_parser("strength", help="transition strengths from one state")
    _add_model_args(p)
    p.add_argument("--operator", choices=["T1", "T2"], default="T1")
    p.add_argument("--from", dest="from_state", type=int, default=0)
    p.add_argument("--to", dest="to_state", type=int, default=None)
    p.add_argument("--mode", choices=["numeric", "table4", "full_rs"], default="numeric")
    p.add_argument("--order", type=int, default=12)

    p = sub.add_parser("table3", help="leading T1 amplitudes of the tridiagonal ladder")
    p.add_argument("--dim", type=int, default=11)

    p = sub.add_parser("table4", help="closed-form weak-coupling tridiagonal eigenvectors")
    p.add_argument("--dim", type=int, default=11)
    p.add_argument("--printed", action="store_true",
                   help="truncate interior rows to the printed window")

    p = sub.add_parser("figures", help="strength-function plot data")
    p.add_argument("--which", choices=sorted(FIGURES), default="fig1")
    _add_model_args(p, model=False)
    p.add_argument("--gnuplot", default=None, metavar="PATH",
                   help="also write a gnuplot script reading the CSV output")

    p = sub.add_parser("sweep", help="strengths over a list of couplings")
    _add_model_args(p)
    p.add_argument("--operator", choices=["T1", "T2"], default="T1")
    p.add_argument("--v-list", dest="v_list", type=_float_list, required=True)
    p.add_argument("--to", dest="to_state", type=int, default=None)

    p = sub.add_parser("fitpower", help="log-log slope of |O| against u")
    _add_model_args(p)
    p.add_argument("--operator", choices=["T1", "T2"], default="T1")
    p.add_argument("--to", dest="to_state", type=int, required=True)
    p.add_argument("--u-list", dest="u_list", type=_float_list, default=[1e-3, 1e-4, 1e-5])

    for p in sub.choices.values():
        _add_output_args(p)
    return parser


def spec_from_args(args) -> ModelSpec:
    model = getattr(args, "model", "tri")
    offsets = getattr(args, "offsets", None)
    if model == "custom":
        if not offsets:
            raise UsageError("--model custom requires --offsets")
        return ModelSpec(args.dim, args.E, args.v, frozenset(offsets), "custom")
    if offsets is not None:
        raise UsageError("--offsets is only valid with --model custom")
    return ModelSpec(args.dim, args.E, args.v, preset_offsets(model, args.dim), model)


# ---------------------------------------------------------------------------
# subcommands; each returns (columns, rows)

def _strength_rows(spec: ModelSpec, kind: TransitionKind, from_state=0, to_state=None):
    rows = []
    for r in strength_profile(spec, kind, from_state):
        if to_state is not None and r.to_state != to_state:
            continue
        rows.append([spec.name, kind.value, spec.dim, spec.spacing_E, spec.coupling_v,
                     r.from_state, r.to_state, r.e_star, r.amplitude_O, r.strength,
                     r.ln_strength])
    return rows


def cmd_spectrum(args):
    spec = spec_from_args(args)
    es = decompose(build_hamiltonian(spec))
    if not args.vectors:
        return ["state", "eigenvalue"], [[k, float(x)] for k, x in enumerate(es.eigenvalues)]
    rows = [[k, float(es.eigenvalues[k]), j, float(es.eigenvectors[j, k])]
            for k in range(spec.dim) for j in range(spec.dim)]
    return ["state", "eigenvalue", "component", "amplitude"], rows


def cmd_ground(args):
    spec = spec_from_args(args)
    if args.method == "numeric":
        es = decompose(build_hamiltonian(spec))
        amps = es.vector(0)
    else:
        _check_order(args.order)
        amps = rs_series(spec, 0, args.order).evaluate(spec.u)
    cols = ["model", "dim", "E", "v", "method", "index", "amplitude"]
    rows = [[spec.name, spec.dim, spec.spacing_E, spec.coupling_v, args.method, n, float(a)]
            for n, a in enumerate(amps)]
    return cols, rows


def _check_order(order: int) -> None:
    if not 1 <= order <= 40:
        raise UsageError(f"--order must be in 1..40, got {order}")


def _check_ref(spec, ref) -> None:
    if not 0 <= ref < spec.dim:
        raise UsageError(f"--ref {ref} out of range 0..{spec.dim - 1}")


def series_rows(state):
    rows = [[state.ref_index, "energy", -1, k, c] for k, c in enumerate(state.energy_series)]
    for n, amp in enumerate(state.amplitudes):
        rows += [[state.ref_index, "amplitude", n, k, c] for k, c in enumerate(amp)]
    return rows


SERIES_COLUMNS = ["ref", "kind", "index", "power", "coeff"]


def cmd_series(args):
    spec = spec_from_args(args)
    _check_ref(spec, args.ref)
    _check_order(args.order)
    state = rs_series(spec, args.ref, args.order)
    if args.format == "json":
        return state
    return SERIES_COLUMNS, series_rows(state)


def cmd_leading(args):
    spec = spec_from_args(args)
    _check_ref(spec, args.ref)
    rows = [[args.ref, j, t.power_m, t.coeff]
            for j, t in enumerate(leading_vector(spec, args.ref))]
    return ["ref", "target", "m", "coeff"], rows


def cmd_strength(args):
    spec = spec_from_args(args)
    kind = TransitionKind(args.operator)
    if args.mode == "numeric":
        if args.to_state is not None and args.to_state == args.from_state:
            raise UsageError("--from and --to must differ")
        for s in (args.from_state, args.to_state):
            if s is not None and not 0 <= s < spec.dim:
                raise UsageError(f"state {s} out of range 0..{spec.dim - 1}")
        return STRENGTH_COLUMNS, _strength_rows(spec, kind, args.from_state, args.to_state)
    if args.from_state != 0:
        raise UsageError("series modes are defined from the ground state only")
    _check_order(args.order)
    targets = range(1, spec.dim) if args.to_state is None else [args.to_state]
    rows = []
    for n in targets:
        if not 1 <= n < spec.dim:
            raise UsageError(f"--to {n} out of range 1..{spec.dim - 1}")
        lead = strength_series(spec, kind, n, args.mode, args.order)
        # no eigensystem here: excitation energy is the unperturbed n*E
        rows.append([spec.name, kind.value, spec.dim, args.mode, 0, n,
                     n * spec.spacing_E, "unperturbed", lead.power_m, lead.coeff_A,
                     float(lead.coeff_A)])
    cols = ["model", "operator", "dim", "mode", "from", "to", "e_star", "e_star_source",
            "m", "A", "A_float"]
    return cols, rows


def cmd_table3(args):
    rows = [[r.n, r.m, r.A, r.expression, r.ln_strength, r.printed_ln_strength]
            for r in table3(args.dim)]
    return ["n", "m", "A_exact", "A_expression", "lnO2_at_1e-4", "lnO2_printed"], rows


def cmd_table4(args):
    if args.dim < 2:
        raise UsageError("--dim must be >= 2")
    window = PRINTED_WINDOW if args.printed else None
    rows = []
    for k in range(args.dim):
        for j, t in enumerate(table4_row(args.dim, k, window)):
            rows.append([k, j, t.power_m, t.coeff])
    return ["k", "j", "m", "coeff"], rows


def cmd_figures(args):
    model, kind = FIGURES[args.which]
    spec = ModelSpec(args.dim, args.E, args.v, preset_offsets(model, args.dim), model)
    if args.gnuplot and args.output == "-":
        raise UsageError("--gnuplot needs --output pointing at the CSV file")
    if args.gnuplot and args.format != "csv":
        raise UsageError("--gnuplot requires --format csv")
    return STRENGTH_COLUMNS, _strength_rows(spec, kind)


def cmd_sweep(args):
    spec = spec_from_args(args)
    if not args.v_list:
        raise UsageError("--v-list is empty")
    if any(not (v > 0 and math.isfinite(v)) for v in args.v_list):
        raise UsageError("--v-list values must be positive")
    kind = TransitionKind(args.operator)
    if args.to_state is not None and not 1 <= args.to_state < spec.dim:
        raise UsageError(f"--to {args.to_state} out of range")
    rows = []
    for v in sorted(set(args.v_list)):
        rows += _strength_rows(spec.with_coupling(v), kind, 0, args.to_state)
    return STRENGTH_COLUMNS, rows


def cmd_fitpower(args):
    spec = spec_from_args(args)
    if not 1 <= args.to_state < spec.dim:
        raise UsageError(f"--to {args.to_state} out of range")
    kind = TransitionKind(args.operator)
    slope = fit_power(spec, kind, args.to_state, args.u_list)
    return ["model", "operator", "dim", "to", "slope"], [[spec.name, kind.value, spec.dim,
                                                          args.to_state, slope]]


COMMANDS = {
    "spectrum": cmd_spectrum, "ground": cmd_ground, "series": cmd_series,
    "leading": cmd_leading, "strength": cmd_strength, "table3": cmd_table3,
    "table4": cmd_table4, "figures": cmd_figures, "sweep": cmd_sweep,
    "fitpower": cmd_fitpower,
}


def gnuplot_script(csv_path: str, title: str) -> str:
    return (
        "set datafile separator ','\n"
        f"set title '{title}'\n"
        "set xlabel 'E* (MeV)'\n"
        "set ylabel 'ln(O^2)'\n"
        f"plot '{csv_path}' using 8:11 skip 1 with linespoints notitle\n"
    )


def render(args) -> str:
    result = COMMANDS[args.command](args)
    if args.command == "series" and args.format == "json":
        return json.dumps(result.to_json(), indent=1) + "\n"
    cols, rows = result
    return _json_text(cols, rows) if args.format == "json" else _csv_text(cols, rows)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = render(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, ZeroStrengthError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
    if getattr(args, "gnuplot", None):
        title = f"{args.which}: {FIGURES[args.which][1].value} {FIGURES[args.which][0]} v={args.v:g}"
        Path(args.gnuplot).write_text(gnuplot_script(args.output, title),
                                      encoding="utf-8", newline="\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
