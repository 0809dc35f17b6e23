"""Command-line interface.

Subcommands: basis, expand, oracle, verify-tables, antisym, negativity,
figures, plot.  Exit codes: 0 success, 2 usage or domain error, 3 missing
data file, 4 violated shape/consistency property.  All output is UTF-8
with LF line endings; CSV uses ',' separators and '.' decimal points.
The DICKE_THREADS environment variable caps sweep parallelism.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import entanglement, svg
from .antisym import enumerate_all_antisym
from .basis import enumerate_basis, parametric_count
from .coefficients import WEIGHT_VARIANTS, DickeExpansion, dicke_expansion
from .entanglement import (
    SWEEP_FAMILIES,
    dicke_two_particle_rdm,
    negativity,
    negativity_sweep,
    sweep_shape_violations,
)
from .ladder import oracle_expansion
from .species import DomainError, SpinSpecies, parse_twice, twice_to_str
from .tables import TABLE_TOLERANCE, verify_tables

FIGURE_PARTICLE_COUNTS = range(20, 81, 10)
COMPARISON_PARTICLE_COUNTS = (30, 80)


def console_main() -> None:
    raise SystemExit(main(sys.argv[1:]))


def main(argv: list[str]) -> int:
    parser = _build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dicke",
        description="Dicke states in the occupation-number representation, "
        "antisymmetric states, and two-qudit negativity.",
    )
    sub = parser.add_subparsers(dest="command")

    def add_state_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--spin", required=True, help="1/2, 1, 3/2 or 2")
        p.add_argument("--n", required=True, type=int, help="particle count N")
        p.add_argument("--m", required=True, help="magnetization M (may be k/2)")

    def add_format_arg(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("basis", help="enumerate the (N, M) occupation basis")
    add_state_args(p)
    add_format_arg(p)
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser("expand", help="closed-form Dicke expansion")
    add_state_args(p)
    add_format_arg(p)
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("oracle", help="ladder-generated Dicke expansion")
    add_state_args(p)
    add_format_arg(p)
    p.add_argument(
        "--diff-closed-form",
        action="store_true",
        help="also report the max deviation from the closed form on stderr",
    )
    p.set_defaults(handler=_cmd_oracle)

    p = sub.add_parser("verify-tables", help="replay the bundled reference tables")
    p.add_argument(
        "--weights",
        choices=WEIGHT_VARIANTS,
        default="binomial",
        help="closed-form level-weight variant; 'alt' demonstrates the "
        "rejected candidate prefactors failing the tables",
    )
    p.set_defaults(handler=_cmd_verify_tables)

    p = sub.add_parser("antisym", help="list all elementary antisymmetric states")
    p.add_argument("--spin", required=True, help="1/2, 1, 3/2 or 2")
    add_format_arg(p)
    p.set_defaults(handler=_cmd_antisym)

    p = sub.add_parser("negativity", help="two-qudit negativity")
    p.add_argument(
        "--state",
        required=True,
        help="bg | psie | psi2 | bsplus | bsminus | psi1:c1,c2 | dicke | equal",
    )
    p.add_argument("--n", type=int, help="particle count (dicke/equal)")
    p.add_argument("--m", help="magnetization (dicke/equal)")
    p.add_argument(
        "--sweep", action="store_true", help="sweep M = 0..J instead of one M"
    )
    p.set_defaults(handler=_cmd_negativity)

    p = sub.add_parser("figures", help="emit sweep CSVs and SVG charts")
    p.add_argument("--out-dir", default=".", help="output directory")
    p.set_defaults(handler=_cmd_figures)

    p = sub.add_parser("plot", help="render a sweep CSV as an SVG polyline chart")
    p.add_argument("--in", dest="input", required=True, help="input CSV")
    p.add_argument("--out", dest="output", required=True, help="output SVG")
    p.set_defaults(handler=_cmd_plot)

    return parser


def _parse_state_args(args) -> tuple[SpinSpecies, int, int]:
    species = SpinSpecies.from_str(args.spin)
    return species, args.n, parse_twice(args.m)


def _write_csv(header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _print_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")


def _cmd_basis(args) -> int:
    species, n, tm = _parse_state_args(args)
    vectors = enumerate_basis(species, n, tm)
    formula_count = parametric_count(species, n, tm)
    if args.format == "json":
        _print_json(
            {
                "spin": species.name,
                "n": n,
                "m": twice_to_str(tm),
                "count": len(vectors),
                "parametric_count": formula_count,
                "basis": [list(v) for v in vectors],
            }
        )
    else:
        _write_csv(
            list(species.level_labels()),
            [[str(c) for c in v] for v in vectors],
        )
    if formula_count != len(vectors):
        print(
            f"note: parametric count formula gives {formula_count}, "
            f"direct enumeration gives {len(vectors)}",
            file=sys.stderr,
        )
    return 0


def _expansion_rows(x: DickeExpansion) -> list[list[str]]:
    return [
        [str(c) for c in occ] + [f"{amp:.17g}"] for occ, amp in x.terms
    ]


def _emit_expansion(args, x: DickeExpansion) -> None:
    if args.format == "json":
        _print_json(
            {
                "spin": x.species.name,
                "n": x.n_particles,
                "m": twice_to_str(x.twice_m),
                "terms": [
                    {"occupation": list(occ), "coefficient": amp}
                    for occ, amp in x.terms
                ],
            }
        )
    else:
        _write_csv(
            list(x.species.level_labels()) + ["coefficient"], _expansion_rows(x)
        )


def _cmd_expand(args) -> int:
    species, n, tm = _parse_state_args(args)
    _emit_expansion(args, dicke_expansion(species, n, tm))
    return 0


def _cmd_oracle(args) -> int:
    species, n, tm = _parse_state_args(args)
    oracle = oracle_expansion(species, n, tm)
    _emit_expansion(args, oracle)
    if args.diff_closed_form:
        closed = dicke_expansion(species, n, tm).as_dict()
        keys = set(closed) | set(oracle.as_dict())
        deviation = max(
            abs(closed.get(k, 0.0) - oracle.amplitude(k)) for k in keys
        )
        print(f"max deviation from closed form: {deviation:.3e}", file=sys.stderr)
    return 0


def _cmd_verify_tables(args) -> int:
    reports = verify_tables(variant=args.weights)
    all_passed = True
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        all_passed &= report.passed
        print(
            f"{report.table}: rows={report.rows} corrected={report.corrected_rows} "
            f"max_dev_closed_form={report.max_dev_closed_form:.2e} "
            f"max_dev_oracle={report.max_dev_oracle:.2e} {verdict}"
        )
    print(
        f"overall: {'PASS' if all_passed else 'FAIL'} "
        f"(tolerance {TABLE_TOLERANCE:.0e}, weights={args.weights})"
    )
    return 0 if all_passed else 4


def _cmd_antisym(args) -> int:
    species = SpinSpecies.from_str(args.spin)
    states = enumerate_all_antisym(species)
    if args.format == "json":
        _print_json(
            {
                "spin": species.name,
                "count": len(states),
                "states": [
                    {
                        "terms": [
                            {
                                "assignment": [twice_to_str(tm) for tm in assignment],
                                "amplitude": amp,
                            }
                            for assignment, amp in state.terms
                        ]
                    }
                    for state in states
                ],
            }
        )
        return 0
    rows = []
    for index, state in enumerate(states):
        for assignment, amp in state.terms:
            rows.append(
                [
                    str(index),
                    ",".join(twice_to_str(tm) for tm in assignment),
                    f"{amp:.17g}",
                ]
            )
    _write_csv(["state", "assignment", "amplitude"], rows)
    return 0


def _sweep_workers() -> int:
    cap = os.environ.get("DICKE_THREADS")
    workers = os.cpu_count() or 1
    if cap is not None:
        try:
            cap_value = int(cap)
        except ValueError:
            raise DomainError(f"DICKE_THREADS must be a positive integer, got {cap!r}")
        if cap_value < 1:
            raise DomainError(f"DICKE_THREADS must be a positive integer, got {cap!r}")
        workers = min(workers, cap_value)
    return workers


def _parallel_sweep(family: str, n: int) -> list[tuple[int, float]]:
    twice_ms = list(range(0, 2 * n + 1, 2))
    workers = _sweep_workers()
    if workers == 1:
        return negativity_sweep(family, n, twice_ms)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        values = list(
            pool.map(lambda tm: negativity_sweep(family, n, [tm])[0], twice_ms)
        )
    return sorted(values)


def _cmd_negativity(args) -> int:
    name, _, params_text = args.state.partition(":")
    if name in SWEEP_FAMILIES:
        if args.n is None:
            raise DomainError(f"--n is required for --state {name}")
        if args.sweep:
            rows = _parallel_sweep(name, args.n)
            _write_csv(
                ["M", "negativity"],
                [[twice_to_str(tm), f"{value:.6f}"] for tm, value in rows],
            )
            return 0
        if args.m is None:
            raise DomainError(f"--m or --sweep is required for --state {name}")
        tm = parse_twice(args.m)
        build = (
            dicke_expansion
            if name == "dicke"
            else entanglement.equal_probability_expansion
        )
        state = build(SpinSpecies.from_str("1"), args.n, tm)
        report = negativity(dicke_two_particle_rdm(state))
        print(f"{report.value:.6f}")
        return 0
    if args.sweep:
        raise DomainError(f"--sweep applies to the dicke/equal families, not {name!r}")
    params = ()
    if params_text:
        try:
            params = tuple(float(x) for x in params_text.split(","))
        except ValueError:
            raise DomainError(f"bad state parameters {params_text!r}") from None
    vector = entanglement.named_two_qutrit_state(name, params)
    report = negativity(entanglement.density_of(vector))
    print(f"{report.value:.6f}")
    return 0


def _cmd_figures(args) -> int:
    out_dir = args.out_dir
    os.makedirs(out_dir, exist_ok=True)

    dicke_sweeps = {n: _parallel_sweep("dicke", n) for n in FIGURE_PARTICLE_COUNTS}
    equal_sweeps = {n: _parallel_sweep("equal", n) for n in COMPARISON_PARTICLE_COUNTS}

    problems: list[str] = []
    for n, rows in dicke_sweeps.items():
        problems += [f"N={n}: {p}" for p in sweep_shape_violations(rows)]
    zero_m = [(n, dicke_sweeps[n][0][1]) for n in FIGURE_PARTICLE_COUNTS]
    for (n_a, v_a), (n_b, v_b) in zip(zero_m, zero_m[1:]):
        if not v_a > v_b:
            problems.append(
                f"M=0 negativity does not decrease from N={n_a} to N={n_b}"
            )
    for n in COMPARISON_PARTICLE_COUNTS:
        if not equal_sweeps[n][0][1] > dicke_sweeps[n][0][1]:
            problems.append(
                f"equal-probability state does not beat the Dicke state at M=0, N={n}"
            )
    if problems:
        for problem in problems:
            print(f"shape violation: {problem}", file=sys.stderr)
        return 4

    def write_rows(name: str, header: list[str], rows: list[list[str]]) -> None:
        with open(
            os.path.join(out_dir, name), "w", encoding="utf-8", newline="\n"
        ) as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(rows)

    write_rows(
        "fig1.csv",
        ["N", "M", "negativity"],
        [
            [str(n), twice_to_str(tm), f"{value:.6f}"]
            for n in FIGURE_PARTICLE_COUNTS
            for tm, value in dicke_sweeps[n]
        ],
    )
    svg.write_chart(
        os.path.join(out_dir, "fig1.svg"),
        [
            (f"N={n}", [(tm / 2.0, value) for tm, value in dicke_sweeps[n]])
            for n in FIGURE_PARTICLE_COUNTS
        ],
        title="Pair negativity of Dicke states",
        x_label="M",
        y_label="negativity",
    )
    for n in COMPARISON_PARTICLE_COUNTS:
        rows = [
            [
                twice_to_str(tm),
                f"{value:.6f}",
                f"{equal_sweeps[n][i][1]:.6f}",
            ]
            for i, (tm, value) in enumerate(dicke_sweeps[n])
        ]
        write_rows(f"fig2_n{n}.csv", ["M", "dicke", "equal"], rows)
        svg.write_chart(
            os.path.join(out_dir, f"fig2_n{n}.svg"),
            [
                (
                    "dicke",
                    [(tm / 2.0, value) for tm, value in dicke_sweeps[n]],
                ),
                (
                    "equal",
                    [(tm / 2.0, value) for tm, value in equal_sweeps[n]],
                ),
            ],
            title=f"Dicke vs equal-probability states, N={n}",
            x_label="M",
            y_label="negativity",
        )
    return 0


def _cmd_plot(args) -> int:
    with open(args.input, encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise DomainError(f"{args.input} is empty") from None
        if len(header) < 2:
            raise DomainError("plot input needs an x column and at least one series")
        records = [row for row in reader if row]
    series = []
    for k, label in enumerate(header[1:], start=1):
        points = []
        for row in records:
            points.append((_parse_number(row[0]), _parse_number(row[k])))
        series.append((label, points))
    svg.write_chart(args.output, series, x_label=header[0])
    return 0


def _parse_number(text: str) -> float:
    try:
        return parse_twice(text) / 2.0 if "/" in text else float(text)
    except (ValueError, DomainError):
        raise DomainError(f"not a number: {text!r}") from None


if __name__ == "__main__":
    console_main()
