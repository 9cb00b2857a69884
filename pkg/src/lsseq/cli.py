"""Command-line surface.

Subcommands: params check, gen, digits, counts, partition, disc, bound,
verify, integrate.  Exit codes: 0 ok, 1 invalid parameters or usage,
2 verification failure, 3 I/O error.  All output is deterministic: CSV is
UTF-8 with LF endings and 17-significant-digit reals, JSON keeps a fixed
key order.  No configuration files or environment variables are read.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from contextlib import contextmanager

import numpy as np

from .bounds import classical_bound, generalized_bound
from .counts import CountsTable
from .discrepancy import discrepancy_report
from .errors import LsSeqError, UnknownFunction
from .numeration import phi, psi
from .partition import left_endpoints, partition_at_level
from .points import LsPoints
from .spectral import Params, solve_spectral, validate_params

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VIOLATION = 2
EXIT_IO = 3

INTEGRANDS = {
    # name: (f, exact integral over [0,1), total variation)
    "x2": (lambda x: x * x, 1.0 / 3.0, 1.0),
    "exp": (np.exp, math.e - 1.0, math.e - 1.0),
    "cos2pi": (lambda x: np.cos(2.0 * np.pi * x), 0.0, 4.0),
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; keep 2 reserved for
    # verification failures and report usage problems as invalid input.
    def error(self, message):
        raise _UsageError(message)


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _parse_params(text: str) -> Params:
    try:
        coeffs = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise LsSeqError(f"cannot parse coefficients from {text!r}") from exc
    return validate_params(coeffs)


@contextmanager
def _out_stream(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


# -- subcommands --------------------------------------------------------------


def cmd_params(args) -> int:
    try:
        coeffs = tuple(int(p) for p in args.coeffs.split(","))
    except ValueError:
        print(json.dumps({"params": args.coeffs, "valid": False,
                          "reason": "ParseError",
                          "message": "coefficients must be comma-separated integers"}))
        return EXIT_INVALID
    try:
        params = validate_params(coeffs)
    except LsSeqError as exc:
        print(json.dumps({"params": list(coeffs), "valid": False,
                          "reason": type(exc).__name__, "message": str(exc)}))
        return EXIT_INVALID
    spectral = solve_spectral(params)
    print(json.dumps({
        "params": list(params.coeffs),
        "valid": True,
        "beta": spectral.beta,
        "conjugate_moduli": [abs(z) for z in spectral.conjugates],
        "lambda_residual": spectral.residual,
        "pisot": True,
    }))
    return EXIT_OK


def cmd_gen(args) -> int:
    params = _parse_params(args.params)
    gen = LsPoints(params)
    start = args.start
    if start < 0:
        raise LsSeqError(f"--start must be >= 0, got {start}")
    if args.count < 0:
        raise LsSeqError(f"--count must be >= 0, got {args.count}")
    end = start + args.count
    with _out_stream(args.output) as out:
        if args.format == "json":
            items = []
            for p in gen.point_range(start, end):
                item = {"index": p.index, "value": p.value}
                if args.coeffs:
                    item["coeffs"] = {str(m): c for m, c in sorted(p.coeffs.items())}
                items.append(item)
            out.write(json.dumps(items) + "\n")
            return EXIT_OK
        if not args.no_header:
            out.write("index,value,coeffs\n" if args.coeffs else "index,value\n")
        if args.coeffs:
            for p in gen.point_range(start, end):
                pairs = ";".join(f"{m}:{c}" for m, c in sorted(p.coeffs.items()))
                out.write(f"{p.index},{_fmt(p.value)},{pairs}\n")
        else:
            values = gen.values(start, end)
            for i, v in enumerate(values):
                out.write(f"{start + i},{_fmt(v)}\n")
    return EXIT_OK


def cmd_digits(args) -> int:
    params = _parse_params(args.params)
    table = CountsTable(params)
    expansion = phi(args.n, table)
    print(expansion.to_text())
    print(f"N={psi(expansion, table)}")
    return EXIT_OK


def cmd_counts(args) -> int:
    params = _parse_params(args.params)
    table = CountsTable(params, args.levels)
    with _out_stream(args.output) as out:
        if not args.no_header:
            out.write("n,t," + ",".join(f"l{i}" for i in range(1, params.k + 1)) + "\n")
        for n, t, l in table.rows(args.levels):
            out.write(f"{n},{t}," + ",".join(str(v) for v in l) + "\n")
    return EXIT_OK


def cmd_partition(args) -> int:
    params = _parse_params(args.params)
    p = partition_at_level(params, args.level)
    lefts = left_endpoints(p)
    with _out_stream(args.output) as out:
        if args.endpoints:
            if not args.no_header:
                out.write("left\n")
            for v in lefts:
                out.write(_fmt(v) + "\n")
        else:
            if not args.no_header:
                out.write("left,exponent\n")
            for v, (_, e) in zip(lefts, p.intervals):
                out.write(f"{_fmt(v)},{e}\n")
    return EXIT_OK


def _read_values(path: str) -> list[float]:
    fh = sys.stdin if path == "-" else open(path, "r", encoding="utf-8")
    try:
        values = []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            fields = line.split(",")
            raw = fields[1] if len(fields) >= 2 else fields[0]
            try:
                values.append(float(raw))
            except ValueError:
                continue  # header or comment line
        return values
    finally:
        if fh is not sys.stdin:
            fh.close()


def cmd_disc(args) -> int:
    if (args.count is None) == (args.file is None):
        raise LsSeqError("disc needs exactly one of --count or --file")
    if args.count is not None:
        params = _parse_params(args.params)
        gen = LsPoints(params)
        values = gen.values(1, args.count + 1)
    else:
        values = _read_values(args.file)
    report = discrepancy_report(values)
    with _out_stream(args.output) as out:
        out.write(json.dumps({
            "n_points": report.n_points,
            "star": report.star,
            "extreme": report.extreme,
            "d_plus": report.d_plus,
            "d_minus": report.d_minus,
        }) + "\n")
    return EXIT_OK


def cmd_bound(args) -> int:
    params = _parse_params(args.params)
    if args.classical:
        if params.k != 2:
            raise LsSeqError("--classical needs a two-coefficient tuple")
        report = classical_bound(params.coeffs[0], params.coeffs[1], args.n)
    else:
        report = generalized_bound(params, args.n)
    payload = {
        "kind": report.kind,
        "main_coeff": report.main_coeff,
        "additive_coeff": report.additive_coeff,
        "log_shift": report.log_shift,
        "n0": report.n0,
    }
    if report.n is not None:
        payload.update({"n": report.n, "value": report.value,
                        "certified": report.certified})
    print(json.dumps(payload))
    return EXIT_OK


def _verify_grid(n0: int, max_n: int, table: CountsTable, min_points: int) -> list[int]:
    lo = max(2, n0)
    grid = set()
    for i in range(min_points):
        f = i / (min_points - 1) if min_points > 1 else 0.0
        grid.add(int(round(lo * (max_n / lo) ** f)))
    n = 0
    while table.t(n) <= max_n:
        if table.t(n) >= lo:
            grid.add(table.t(n))
        n += 1
    return sorted(v for v in grid if lo <= v <= max_n)


def cmd_verify(args) -> int:
    if args.max_n > 10**6:
        raise LsSeqError(f"--max-n capped at 10^6, got {args.max_n}")
    params = _parse_params(args.params)
    gen = LsPoints(params)
    report = generalized_bound(params)
    grid = _verify_grid(report.n0, args.max_n, gen.counts, args.grid)
    values = gen.values(1, args.max_n + 1)
    violations = []
    with _out_stream(args.output) as out:
        if not args.no_header:
            out.write("N,D_star,D,bound,ratio\n")
        for N in grid:
            x = np.sort(values[:N])
            i = np.arange(1, N + 1, dtype=np.float64)
            d_plus = float(np.max(i / N - x))
            d_minus = float(np.max(x - (i - 1) / N))
            d_star = max(d_plus, d_minus)
            d = d_plus + d_minus
            bound = report.value_at(N)
            out.write(f"{N},{_fmt(d_star)},{_fmt(d)},{_fmt(bound)},{_fmt(d / bound)}\n")
            if d > bound:
                violations.append(N)
    if violations:
        print(f"bound violated at N={violations[0]}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_integrate(args) -> int:
    params = _parse_params(args.params)
    if args.function not in INTEGRANDS:
        raise UnknownFunction(
            f"unknown function {args.function!r}; choose from {sorted(INTEGRANDS)}"
        )
    f, reference, variation = INTEGRANDS[args.function]
    if args.count < 1:
        raise LsSeqError(f"--count must be >= 1, got {args.count}")
    gen = LsPoints(params)
    values = gen.values(1, args.count + 1)
    estimate = float(np.mean(f(values)))
    abs_error = abs(estimate - reference)
    x = np.sort(values)
    i = np.arange(1, args.count + 1, dtype=np.float64)
    star = max(float(np.max(i / args.count - x)),
               float(np.max(x - (i - 1) / args.count)))
    print(json.dumps({
        "estimate": estimate,
        "reference": reference,
        "abs_error": abs_error,
        "star_disc": star,
        "koksma_bound_ok": bool(abs_error <= variation * star),
    }))
    return EXIT_OK


# -- wiring --------------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(prog="lsseq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="validate a parameter tuple")
    p.add_argument("action", choices=["check"])
    p.add_argument("coeffs", help="comma-separated coefficients, e.g. 2,1,1")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("gen", help="emit sequence points")
    p.add_argument("params")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--start", type=int, default=1)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--coeffs", action="store_true",
                   help="include exact coefficient vectors (slower)")
    p.add_argument("--output", default=None)
    p.add_argument("--no-header", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("digits", help="digit expansion of one integer")
    p.add_argument("params")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("counts", help="interval count rows as CSV")
    p.add_argument("params")
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--output", default=None)
    p.add_argument("--no-header", action="store_true")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("partition", help="cells of one refinement level")
    p.add_argument("params")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--endpoints", action="store_true",
                   help="emit the endpoint list only")
    p.add_argument("--output", default=None)
    p.add_argument("--no-header", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("disc", help="discrepancy report as JSON")
    p.add_argument("params", nargs="?", default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--file", default=None, help="CSV of values; '-' for stdin")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_disc)

    p = sub.add_parser("bound", help="discrepancy bound report as JSON")
    p.add_argument("params")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--classical", action="store_true")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("verify", help="check measured discrepancy against the bound")
    p.add_argument("params")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--grid", type=int, default=50,
                   help="minimum number of log-spaced sample sizes")
    p.add_argument("--output", default=None)
    p.add_argument("--no-header", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("integrate", help="quasi-Monte Carlo integration demo")
    p.add_argument("params")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--function", required=True)
    p.set_defaults(func=cmd_integrate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        if args.command == "disc" and args.count is not None and args.params is None:
            raise LsSeqError("disc --count needs a parameter tuple")
        return args.func(args)
    except LsSeqError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
