"""tribokit command line.

Subcommands: eval, verify, expand, matrix, roots, crosscheck, bench.
Every subcommand accepts ``--format {plain,json,csv,bfile}`` and
``--config PATH`` (also via the TRIBOKIT_CONFIG environment variable;
an explicit flag wins).  Exit status: 0 success, 2 usage/domain/IO
error, 3 a verification or crosscheck reported mismatches.

Sequence values are arbitrary-precision integers; json and csv output
renders them as decimal strings so nothing is ever truncated.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import dataclass, replace
from typing import Any, Callable

import mpmath

from . import analytic, genfunc, identities, oeis, seqcore, tribomatrix
from .seqcore import SequenceKind

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILED = 3

CONFIG_ENV = "TRIBOKIT_CONFIG"
FORMATS = ("plain", "json", "csv", "bfile")

# module-level hook so tests can substitute a canned transport
transport_factory: Callable[[str], Callable[[str], str]] = oeis.http_transport


class CommandError(Exception):
    """Domain, configuration, or IO problem mapped to an exit status."""

    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class CliConfig:
    default_range: tuple[int, int] = (0, 100)
    precision: int = 30
    fixture_dir: str | None = None
    output_format: str = "plain"
    oeis_url: str = "https://oeis.org"


def _parse_bounds(text: str) -> tuple[int, int]:
    try:
        lo_text, hi_text = text.split(":")
        lo, hi = int(lo_text), int(hi_text)
    except ValueError:
        raise CommandError(f"bounds must look like LO:HI, got {text!r}") from None
    if lo > hi:
        raise CommandError(f"empty bounds: {lo} exceeds {hi}")
    return lo, hi


def load_config(path: str | None) -> CliConfig:
    """Defaults, overlaid with ``key = value`` lines from a config file."""
    config = CliConfig()
    if path is None:
        path = os.environ.get(CONFIG_ENV) or None
    if path is None:
        return config
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise CommandError(f"cannot read config {path!r}: {exc}") from exc
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise CommandError(f"{path}:{line_number}: expected key = value, got {line!r}")
        key, value = key.strip(), value.strip()
        if key == "default_range":
            config = replace(config, default_range=_parse_bounds(value))
        elif key == "precision":
            try:
                precision = int(value)
            except ValueError:
                raise CommandError(f"{path}:{line_number}: precision must be an integer") from None
            if precision < 15:
                raise CommandError(f"{path}:{line_number}: precision must be >= 15")
            config = replace(config, precision=precision)
        elif key == "fixture_dir":
            config = replace(config, fixture_dir=value)
        elif key == "output_format":
            if value not in FORMATS:
                raise CommandError(f"{path}:{line_number}: output_format must be one of {FORMATS}")
            config = replace(config, output_format=value)
        elif key == "oeis_url":
            config = replace(config, oeis_url=value)
        else:
            raise CommandError(f"{path}:{line_number}: unknown config key {key!r}")
    return config


def _kind(text: str) -> SequenceKind:
    try:
        return SequenceKind.from_string(text)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc


def _format(args: argparse.Namespace, config: CliConfig) -> str:
    return args.format if args.format else config.output_format


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _csv(header: list[str], rows: list[list[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _no_bfile(fmt: str, command: str) -> None:
    if fmt == "bfile":
        raise CommandError(f"bfile format does not apply to {command}")


# ---------------------------------------------------------------- eval

def _matrix_term(kind: SequenceKind, power: tribomatrix.Matrix3) -> int:
    if kind is SequenceKind.TRIBONACCI:
        return power[0][1]
    if kind is SequenceKind.GENERALIZED_LUCAS:
        return tribomatrix.trace(power)
    return tribomatrix.minors_of(power).total


def _eval_pairs(
    kind: SequenceKind, lo: int, hi: int, strategy: str, precision: int
) -> list[tuple[int, int]]:
    if lo > hi:
        raise CommandError(f"empty range: {lo} exceeds {hi}")
    if strategy == "recurrence":
        return seqcore.sequence_range(kind, lo, hi)
    if strategy == "matrix":
        if lo < 0:
            raise CommandError("matrix strategy requires lo >= 0")
        pairs = []
        power = tribomatrix.mat_pow(lo)
        for n in range(lo, hi + 1):
            pairs.append((n, _matrix_term(kind, power)))
            power = tribomatrix.mat_mul(power, tribomatrix.tribomatrix())
        return pairs
    if kind is SequenceKind.TRIBONACCI:
        raise CommandError("binet strategy applies to S and C only")
    cap = analytic.binet_index_cap(precision)
    if max(abs(lo), abs(hi)) > cap:
        raise CommandError(
            f"binet strategy is certified only for |n| <= {cap} at precision {precision}"
        )
    roots = analytic.char_roots(precision)
    return [(n, analytic.binet_round(kind, n, roots)) for n in range(lo, hi + 1)]


def cmd_eval(args: argparse.Namespace, config: CliConfig) -> int:
    kind = _kind(args.kind)
    pairs = _eval_pairs(kind, args.lo, args.hi, args.strategy, config.precision)
    fmt = _format(args, config)
    if fmt == "plain":
        _emit("\n".join(f"{n} {value}" for n, value in pairs))
    elif fmt == "bfile":
        if args.lo < 0:
            raise CommandError("bfile format requires lo >= 0")
        _emit("\n".join(f"{n} {value}" for n, value in pairs))
    elif fmt == "json":
        _emit(json.dumps({
            "command": "eval",
            "kind": kind.value,
            "strategy": args.strategy,
            "values": [{"n": n, "value": str(value)} for n, value in pairs],
        }))
    else:
        _emit(_csv(["n", "value"], [[n, str(value)] for n, value in pairs]))
    return EXIT_OK


# -------------------------------------------------------------- verify

def _report_payload(report: identities.VerificationReport) -> dict[str, Any]:
    return {
        "identity": report.identity,
        "bounds": report.bounds,
        "cases_checked": report.cases_checked,
        "counterexamples": [
            {"point": list(point), "lhs": str(lhs), "rhs": str(rhs)}
            for point, lhs, rhs in report.counterexamples
        ],
        "ok": report.ok,
    }


def cmd_verify(args: argparse.Namespace, config: CliConfig) -> int:
    n_bounds = _parse_bounds(args.range) if args.range else config.default_range
    m_bounds = _parse_bounds(args.m_range) if args.m_range else n_bounds
    try:
        if args.identity.lower() == "all":
            reports = identities.verify_all(n_bounds, m_bounds)
        else:
            reports = [identities.verify(args.identity.upper(), n_bounds, m_bounds)]
    except KeyError as exc:
        raise CommandError(exc.args[0]) from exc
    fmt = _format(args, config)
    _no_bfile(fmt, "verify")
    if fmt == "plain":
        lines = []
        for report in reports:
            status = "ok" if report.ok else "FAILED"
            lines.append(
                f"{report.identity}  {report.bounds}  cases={report.cases_checked}  "
                f"counterexamples={len(report.counterexamples)}  {status}"
            )
            for point, lhs, rhs in report.counterexamples[:10]:
                lines.append(f"  at {point}: lhs={lhs} rhs={rhs}")
            hidden = len(report.counterexamples) - 10
            if hidden > 0:
                lines.append(f"  ... {hidden} more")
        _emit("\n".join(lines))
    elif fmt == "json":
        _emit(json.dumps({
            "command": "verify",
            "reports": [_report_payload(r) for r in reports],
            "ok": all(r.ok for r in reports),
        }))
    else:
        _emit(_csv(
            ["identity", "bounds", "cases_checked", "counterexamples", "ok"],
            [[r.identity, r.bounds, r.cases_checked, len(r.counterexamples), r.ok]
             for r in reports],
        ))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


# -------------------------------------------------------------- expand

def _parse_coeffs(text: str, option: str) -> tuple[int, ...]:
    try:
        return tuple(int(piece.strip()) for piece in text.split(","))
    except ValueError:
        raise CommandError(f"{option} must be a comma-separated integer list, got {text!r}") from None


def cmd_expand(args: argparse.Namespace, config: CliConfig) -> int:
    if args.source is not None and (args.num or args.den):
        raise CommandError("give either a builtin name or --num/--den, not both")
    if args.source is not None:
        try:
            ogf = genfunc.builtin_ogf(args.source)
        except ValueError as exc:
            raise CommandError(str(exc)) from exc
    elif args.num and args.den:
        try:
            ogf = genfunc.RationalOGF(_parse_coeffs(args.num, "--num"), _parse_coeffs(args.den, "--den"))
        except ValueError as exc:
            raise CommandError(str(exc)) from exc
    else:
        raise CommandError("expand needs a builtin name (S, C, CEven) or both --num and --den")
    try:
        coefficients = genfunc.expand(ogf, args.count)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    fmt = _format(args, config)
    _no_bfile(fmt, "expand")
    if fmt == "plain":
        _emit("\n".join(f"{n} {value}" for n, value in enumerate(coefficients)))
    elif fmt == "json":
        _emit(json.dumps({
            "command": "expand",
            "numerator": list(ogf.numerator),
            "denominator": list(ogf.denominator),
            "coefficients": [str(value) for value in coefficients],
        }))
    else:
        _emit(_csv(["n", "coefficient"], [[n, str(v)] for n, v in enumerate(coefficients)]))
    return EXIT_OK


# -------------------------------------------------------------- matrix

def cmd_matrix(args: argparse.Namespace, config: CliConfig) -> int:
    if args.n < 0:
        raise CommandError(f"matrix power requires n >= 0, got {args.n}")
    power = tribomatrix.mat_pow(args.n)
    minors = tribomatrix.minors_of(power)
    trace = tribomatrix.trace(power)
    fmt = _format(args, config)
    _no_bfile(fmt, "matrix")
    if fmt == "plain":
        lines = [f"A^{args.n}"]
        lines.extend(" ".join(str(entry) for entry in row) for row in power)
        lines.append(f"trace {trace}")
        lines.append(f"minors {minors.minor_12} {minors.minor_13} {minors.minor_23}")
        lines.append(f"minor_sum {minors.total}")
        _emit("\n".join(lines))
    elif fmt == "json":
        _emit(json.dumps({
            "command": "matrix",
            "n": args.n,
            "entries": [[str(entry) for entry in row] for row in power],
            "trace": str(trace),
            "minors": {
                "minor_12": str(minors.minor_12),
                "minor_13": str(minors.minor_13),
                "minor_23": str(minors.minor_23),
                "total": str(minors.total),
            },
        }))
    else:
        rows = [["entry", f"{i}{j}", str(power[i][j])] for i in range(3) for j in range(3)]
        rows.append(["trace", "", str(trace)])
        rows.append(["minor_sum", "", str(minors.total)])
        _emit(_csv(["field", "position", "value"], rows))
    return EXIT_OK


# --------------------------------------------------------------- roots

def cmd_roots(args: argparse.Namespace, config: CliConfig) -> int:
    precision = args.precision if args.precision is not None else config.precision
    try:
        roots = analytic.char_roots(precision)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    residuals = analytic.vieta_check(roots)
    digits = precision
    with mpmath.workdps(precision + 10):
        alpha = mpmath.nstr(roots.alpha, digits)
        beta_re = mpmath.nstr(roots.beta.real, digits)
        beta_im = mpmath.nstr(roots.beta.imag, digits)
        abs_beta = mpmath.nstr(abs(roots.beta), digits)
    fmt = _format(args, config)
    _no_bfile(fmt, "roots")
    if fmt == "plain":
        _emit("\n".join([
            f"precision {precision}",
            f"alpha {alpha}",
            f"beta {beta_re} + {beta_im}i",
            f"gamma {beta_re} - {beta_im}i",
            f"|beta| {abs_beta}",
            f"residual_sum {residuals.sum_res:.3e}",
            f"residual_pair {residuals.pair_res:.3e}",
            f"residual_product {residuals.prod_res:.3e}",
            f"index_cap {analytic.binet_index_cap(precision)}",
        ]))
    elif fmt == "json":
        _emit(json.dumps({
            "command": "roots",
            "precision": precision,
            "alpha": alpha,
            "beta": {"real": beta_re, "imag": beta_im},
            "abs_beta": abs_beta,
            "residuals": {
                "sum": residuals.sum_res,
                "pair": residuals.pair_res,
                "product": residuals.prod_res,
            },
            "index_cap": analytic.binet_index_cap(precision),
        }))
    else:
        _emit(_csv(["field", "value"], [
            ["precision", precision],
            ["alpha", alpha],
            ["beta_real", beta_re],
            ["beta_imag", beta_im],
            ["abs_beta", abs_beta],
            ["residual_sum", residuals.sum_res],
            ["residual_pair", residuals.pair_res],
            ["residual_product", residuals.prod_res],
            ["index_cap", analytic.binet_index_cap(precision)],
        ]))
    return EXIT_OK


# ---------------------------------------------------------- crosscheck

def _fixture_text(kind: SequenceKind, args: argparse.Namespace, config: CliConfig) -> str:
    sequence_id = oeis.OEIS_IDS[kind]
    if args.fetch:
        bfile = oeis.fetch_bfile(sequence_id, transport_factory(config.oeis_url))
        return "\n".join(f"{n} {v}" for n, v in bfile.rows) + "\n"
    if args.fixture is not None:
        path = args.fixture
    elif config.fixture_dir is not None:
        path = os.path.join(config.fixture_dir, f"b{sequence_id[1:]}.txt")
    else:
        return oeis.bundled_fixture_text(sequence_id)
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise CommandError(f"cannot read fixture {path!r}: {exc}") from exc


def cmd_crosscheck(args: argparse.Namespace, config: CliConfig) -> int:
    kind = _kind(args.kind)
    sequence_id = oeis.OEIS_IDS[kind]
    rows = args.rows_override if args.rows_override is not None else args.rows
    if rows < 1:
        raise CommandError(f"rows must be >= 1, got {rows}")
    try:
        text = _fixture_text(kind, args, config)
        bfile = oeis.parse_bfile(text, sequence_id)
    except oeis.BFileError as exc:
        raise CommandError(f"{sequence_id}: {exc}") from exc
    except oeis.BFileFetchError as exc:
        raise CommandError(str(exc)) from exc
    report = oeis.crosscheck(kind, bfile, rows)
    fmt = _format(args, config)
    _no_bfile(fmt, "crosscheck")
    if fmt == "plain":
        status = "ok" if report.ok else "FAILED"
        lines = [
            f"{report.sequence_id}  offset={report.offset_used}  "
            f"rows={report.rows_compared}  mismatches={len(report.mismatches)}  {status}"
        ]
        lines.extend(
            f"  at {index}: local={local} bfile={listed}"
            for index, local, listed in report.mismatches
        )
        _emit("\n".join(lines))
    elif fmt == "json":
        _emit(json.dumps({
            "command": "crosscheck",
            "sequence_id": report.sequence_id,
            "offset_used": report.offset_used,
            "rows_compared": report.rows_compared,
            "mismatches": [
                {"index": index, "local": str(local), "bfile": str(listed)}
                for index, local, listed in report.mismatches
            ],
            "ok": report.ok,
        }))
    else:
        _emit(_csv(
            ["index", "local", "bfile"],
            [[index, str(local), str(listed)] for index, local, listed in report.mismatches],
        ))
    return EXIT_OK if report.ok else EXIT_FAILED


# --------------------------------------------------------------- bench

def bench_strategies(
    kind: SequenceKind, n: int, repetitions: int, precision: int
) -> tuple[list[dict[str, Any]], bool]:
    """Time each strategy at index n; returns (rows, exact_agreement)."""
    if n < 0:
        raise CommandError(f"bench requires n >= 0, got {n}")
    if repetitions < 1:
        raise CommandError(f"repetitions must be >= 1, got {repetitions}")
    if kind is SequenceKind.TRIBONACCI:
        raise CommandError("bench compares recurrence, matrix and binet; use S or C")

    def best_of(fn: Callable[[], int]) -> tuple[float, int]:
        best, value = None, None
        for _ in range(repetitions):
            start = time.perf_counter()
            value = fn()
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        return best, value

    if kind is SequenceKind.GENERALIZED_LUCAS:
        matrix_fn = lambda: tribomatrix.trace_pow(n)
    else:
        matrix_fn = lambda: tribomatrix.minor_sum(n).total

    rows: list[dict[str, Any]] = []
    rec_seconds, rec_value = best_of(lambda: seqcore.term(kind, n))
    rows.append({"strategy": "recurrence", "seconds": rec_seconds, "value": rec_value})
    mat_seconds, mat_value = best_of(matrix_fn)
    rows.append({"strategy": "matrix", "seconds": mat_seconds, "value": mat_value})

    roots = analytic.char_roots(precision)
    try:
        bin_seconds, bin_value = best_of(lambda: analytic.binet_round(kind, n, roots))
        rows.append({
            "strategy": "binet",
            "seconds": bin_seconds,
            "value": bin_value,
            "bound": analytic.binet_error_bound(kind, n, roots),
        })
    except analytic.PrecisionError as exc:
        rows.append({
            "strategy": "binet",
            "seconds": None,
            "value": None,
            "note": f"bound exceeded: {exc}",
        })
    return rows, rec_value == mat_value


def _short_int(value: int) -> str:
    text = str(value)
    if len(text) <= 40:
        return text
    return f"<{len(text)} digits> {text[:12]}..."


def cmd_bench(args: argparse.Namespace, config: CliConfig) -> int:
    kind = _kind(args.kind)
    rows, agreement = bench_strategies(kind, args.n, args.reps, config.precision)
    fmt = _format(args, config)
    _no_bfile(fmt, "bench")
    if fmt == "plain":
        lines = [f"bench {kind.value} n={args.n} repetitions={args.reps}"]
        for row in rows:
            if row["value"] is None:
                lines.append(f"{row['strategy']:<12} {row['note']}")
            else:
                seconds = f"{row['seconds']:.6f}s"
                extra = f"  bound={row['bound']:.3e}" if "bound" in row else ""
                lines.append(f"{row['strategy']:<12} {seconds}  value={_short_int(row['value'])}{extra}")
        lines.append(f"exact strategies agree: {'yes' if agreement else 'NO'}")
        _emit("\n".join(lines))
    elif fmt == "json":
        _emit(json.dumps({
            "command": "bench",
            "kind": kind.value,
            "n": args.n,
            "repetitions": args.reps,
            "strategies": [
                {
                    "strategy": row["strategy"],
                    "seconds": row["seconds"],
                    "value": None if row["value"] is None else str(row["value"]),
                    **({"bound": row["bound"]} if "bound" in row else {}),
                    **({"note": row["note"]} if "note" in row else {}),
                }
                for row in rows
            ],
            "exact_agreement": agreement,
        }))
    else:
        _emit(_csv(
            ["strategy", "seconds", "value", "note"],
            [[row["strategy"], row["seconds"],
              "" if row["value"] is None else str(row["value"]),
              row.get("note", "")] for row in rows],
        ))
    return EXIT_OK


# ------------------------------------------------------------- parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None,
                        help="output format (default from config, plain otherwise)")
    common.add_argument("--config", default=None, metavar="PATH",
                        help=f"config file (also via ${CONFIG_ENV})")

    parser = argparse.ArgumentParser(
        prog="tribokit",
        description="Exact Tribonacci-family sequences, identities, and cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate sequence terms over a range")
    p.add_argument("kind", help="T, S or C")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--strategy", choices=("recurrence", "matrix", "binet"),
                   default="recurrence")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", parents=[common], help="check identities over index bounds")
    p.add_argument("identity", help="an identity name or 'all'")
    p.add_argument("--range", default=None, metavar="LO:HI",
                   help="bounds for n (default from config)")
    p.add_argument("--m-range", default=None, metavar="LO:HI",
                   help="bounds for m (defaults to the n bounds)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("expand", parents=[common],
                       help="expand a rational generating function")
    p.add_argument("source", nargs="?", default=None, help="builtin: S, C or CEven")
    p.add_argument("count", type=int, help="number of coefficients")
    p.add_argument("--num", default=None, metavar="CSV", help="numerator coefficients")
    p.add_argument("--den", default=None, metavar="CSV", help="denominator coefficients")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("matrix", parents=[common],
                       help="show A^n with trace and principal minors")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("roots", parents=[common],
                       help="roots of x^3 - x^2 - x - 1 with Vieta residuals")
    p.add_argument("precision", nargs="?", type=int, default=None,
                   help="decimal digits, >= 15 (default from config)")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("crosscheck", parents=[common],
                       help="compare a sequence against an OEIS b-file")
    p.add_argument("kind", help="T, S or C")
    p.add_argument("fixture", nargs="?", default=None,
                   help="b-file path (default: bundled fixture)")
    p.add_argument("rows", nargs="?", type=int, default=50,
                   help="rows to compare (default 50)")
    p.add_argument("--rows", dest="rows_override", type=int, default=None,
                   help="rows to compare without naming a fixture path")
    p.add_argument("--fetch", action="store_true", help="retrieve the live b-file")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("bench", parents=[common],
                       help="time the evaluation strategies at one index")
    p.add_argument("kind", help="S or C")
    p.add_argument("n", type=int)
    p.add_argument("reps", nargs="?", type=int, default=3,
                   help="repetitions, min is reported (default 3)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except CommandError as exc:
        print(f"tribokit: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, OSError) as exc:
        print(f"tribokit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
