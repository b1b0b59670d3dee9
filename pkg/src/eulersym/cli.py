"""Command-line front end: parameter sweeps, report serialization, exit codes.

Subcommands:

* ``euler``  -- print the coefficient vector of E_n(x), or its value at x
* ``altsum`` -- print the alternating power sum T_k(n)
* ``series`` -- print the coefficients of one of the quotient series
* ``verify`` -- sweep identity families over a parameter grid and emit one
  report record per (family, n, w, y) case

Exit codes: 0 when every checked identity holds, 1 when at least one case
fails, 2 on usage or configuration errors (including malformed rationals,
which are rejected before any computation starts).

Sweeps are deterministic: cases are ordered lexicographically by
(family id, n, w tuple, y tuple) and records carry no timestamps, so the
same configuration always produces byte-identical output.

Shift-value grids: ``--ys`` takes scalar samples.  A family needing r
shift values is swept over the cyclic length-r windows of that list (one
window per starting offset), so every sample appears in every slot while
the case count stays linear in the sample count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

from . import identities
from .egf_series import LAMBDA_FAMILIES, egf_coeff, lambda_series
from .exact_arith import format_rational, parse_rational
from .identities import FAMILIES, FAMILY_IDS, IdentityFamily, VerificationReport
from .orbits import orbit_audit

__all__ = ["SweepConfig", "SweepSummary", "run_sweep", "emit_report", "main"]

DEFAULT_W_SET = (1, 3, 5, 7)
DEFAULT_Y_SAMPLES = "0,1,-1,1/2,-1/3,2/7"


@dataclass(frozen=True)
class SweepConfig:
    families: tuple[str, ...]
    w_set: tuple[int, ...]
    n_max: int
    y_samples: tuple[Fraction, ...]
    order: int = 24
    include_even_w: bool = False
    output_path: str | None = None
    format: str = "json"

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if self.format not in ("json", "csv"):
            raise ValueError(f"format must be 'json' or 'csv', got {self.format!r}")
        if any(v < 1 for v in self.w_set):
            raise ValueError("w values must be positive integers")


@dataclass(frozen=True)
class SweepSummary:
    families_run: int
    cases_run: int
    failures: int
    orbit_checks: int = 0
    orbit_failures: int = 0
    oracle_checks: int = 0
    oracle_failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0 and self.orbit_failures == 0 and self.oracle_failures == 0


def _admissible_w_values(family: IdentityFamily, config: SweepConfig) -> tuple[int, ...]:
    # Even weights are dropped for odd-only families unconditionally, and
    # for the any-parity families unless explicitly opted in.
    values = sorted(set(config.w_set))
    if family.odd_only or not config.include_even_w:
        values = [v for v in values if v % 2 == 1]
    return tuple(values)


def _y_tuples(samples: Sequence[Fraction], arity: int) -> tuple[tuple[Fraction, ...], ...]:
    if arity == 0:
        return ((),)
    pool = tuple(dict.fromkeys(samples))
    if not pool:
        return ()
    windows = [
        tuple(pool[(start + offset) % len(pool)] for offset in range(arity))
        for start in range(len(pool))
    ]
    return tuple(dict.fromkeys(windows))


def _series_spot_check(
    family_id: str,
    w: tuple[int, ...],
    y: tuple[Fraction, ...],
    n_max: int,
    order: int,
) -> bool:
    series_family, sub_index, evaluator = identities.SERIES_ORACLES[family_id]
    top = min(n_max, order)
    series = lambda_series(series_family, sub_index, w, y, order=top)
    return all(
        evaluator(n, w, y) == egf_coeff(series, n) for n in range(top + 1)
    )


def run_sweep(
    config: SweepConfig,
    families: Mapping[str, IdentityFamily] | None = None,
) -> tuple[list[VerificationReport], SweepSummary]:
    """Evaluate every admissible (family, n, w, y) case of the grid.

    Besides the variant-equality checks, each theorem family gets a one-off
    orbit-size audit of its expression template and, where applicable, a
    series-coefficient spot check at its first admissible parameter tuple.
    """
    catalog = FAMILIES if families is None else families
    unknown = [f for f in config.families if f not in catalog]
    if unknown:
        raise ValueError(f"unknown families: {', '.join(sorted(unknown))}")

    records: list[VerificationReport] = []
    failures = 0
    orbit_checks = orbit_failures = 0
    oracle_checks = oracle_failures = 0

    for family_id in sorted(set(config.families)):
        fam = catalog[family_id]

        orbit_ok = False
        if fam.orbit_template is not None:
            orbit_checks += 1
            orbit_ok = orbit_audit(fam.orbit_template) == fam.expected_orbit_size
            if not orbit_ok:
                orbit_failures += 1

        w_values = _admissible_w_values(fam, config)
        w_tuples = tuple(product(w_values, repeat=fam.w_arity))
        y_tuples = _y_tuples(config.y_samples, fam.y_arity)

        if w_tuples and y_tuples and family_id in identities.SERIES_ORACLES:
            oracle_checks += 1
            if not _series_spot_check(
                family_id, w_tuples[0], y_tuples[0], config.n_max, config.order
            ):
                oracle_failures += 1

        for n in range(config.n_max + 1):
            for wt in w_tuples:
                for yt in y_tuples:
                    report = identities.check_case(
                        family_id, n, wt, yt,
                        orbit_size_checked=orbit_ok,
                        families=catalog,
                    )
                    records.append(report)
                    if not report.all_equal:
                        failures += 1

    summary = SweepSummary(
        families_run=len(set(config.families)),
        cases_run=len(records),
        failures=failures,
        orbit_checks=orbit_checks,
        orbit_failures=orbit_failures,
        oracle_checks=oracle_checks,
        oracle_failures=oracle_failures,
    )
    return records, summary


def _record_dict(record: VerificationReport) -> dict:
    return {
        "family": record.family_id,
        "n": record.n,
        "w": list(record.w),
        "y": [format_rational(v) for v in record.y],
        "values": [format_rational(v) for v in record.variant_values],
        "equal": record.all_equal,
    }


def emit_report(records: Sequence[VerificationReport], format: str = "json") -> bytes:
    """Serialize records; byte-stable for a fixed record order."""
    if format == "json":
        payload = json.dumps(
            [_record_dict(r) for r in records], separators=(",", ":")
        )
        return payload.encode("utf-8")
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["family", "n", "w", "y", "values", "equal"])
        for r in records:
            writer.writerow(
                [
                    r.family_id,
                    r.n,
                    "|".join(str(v) for v in r.w),
                    "|".join(format_rational(v) for v in r.y),
                    "|".join(format_rational(v) for v in r.variant_values),
                    "true" if r.all_equal else "false",
                ]
            )
        return buffer.getvalue().encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


# --------------------------------------------------------------------------
# Argument parsing helpers.


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise ValueError(f"malformed integer list: {text!r}") from exc


def _parse_rational_list(text: str) -> tuple[Fraction, ...]:
    return tuple(
        parse_rational(part) for part in text.split(",") if part.strip() != ""
    )


def _resolve_families(text: str) -> tuple[str, ...]:
    if text == "all":
        return FAMILY_IDS
    requested = tuple(part.strip() for part in text.split(",") if part.strip())
    unknown = [f for f in requested if f not in FAMILIES]
    if unknown:
        raise ValueError(
            f"unknown families: {', '.join(unknown)} "
            f"(choose from {', '.join(FAMILY_IDS)} or 'all')"
        )
    return requested


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulersym",
        description=(
            "Exact computation and verification of symmetry identities for "
            "Euler polynomials and alternating power sums."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_euler = sub.add_parser(
        "euler", help="Euler polynomial coefficients or a point value"
    )
    p_euler.add_argument("--n", type=int, required=True, help="polynomial index")
    p_euler.add_argument(
        "--x", default=None, help="evaluation point as 'p/q'; omit for coefficients"
    )

    p_altsum = sub.add_parser("altsum", help="alternating power sum T_k(n)")
    p_altsum.add_argument("--k", type=int, required=True)
    p_altsum.add_argument("--n", type=int, required=True)

    p_series = sub.add_parser(
        "series", help="coefficients of a quotient generating function"
    )
    p_series.add_argument("--family", required=True, choices=LAMBDA_FAMILIES)
    p_series.add_argument(
        "--i", type=int, default=None, help="sub-index 0..3 (L23/L13 only)"
    )
    p_series.add_argument("--w", required=True, help="weights, e.g. 1,3,5")
    p_series.add_argument("--y", default="", help="shift values, e.g. 0,1/2")
    p_series.add_argument("--order", type=int, default=24)

    p_verify = sub.add_parser("verify", help="sweep identity families")
    p_verify.add_argument(
        "--family", default="all", help="family id, comma list, or 'all'"
    )
    p_verify.add_argument("--wset", default="1,3,5,7", help="weight values")
    p_verify.add_argument("--nmax", type=int, default=10)
    p_verify.add_argument("--ys", default=DEFAULT_Y_SAMPLES, help="shift samples")
    p_verify.add_argument(
        "--include-even-w",
        action="store_true",
        help="let any-parity families (T1, T16) use even weights from --wset",
    )
    p_verify.add_argument("--order", type=int, default=24)
    p_verify.add_argument("--output", default=None, help="write report here")
    p_verify.add_argument("--format", default="json", choices=("json", "csv"))
    return parser


def _cmd_euler(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise ValueError("--n must be >= 0")
    from . import euler

    if args.x is None:
        poly = euler.euler_polynomial(args.n)
        for coeff in poly.coeffs:
            print(format_rational(coeff))
    else:
        print(format_rational(euler.euler_eval(args.n, parse_rational(args.x))))
    return 0


def _cmd_altsum(args: argparse.Namespace) -> int:
    from .altsum import alt_power_sum

    print(format_rational(alt_power_sum(args.k, args.n)))
    return 0


def _cmd_series(args: argparse.Namespace) -> int:
    w = _parse_int_list(args.w)
    y = _parse_rational_list(args.y)
    series = lambda_series(args.family, args.i, w, y, order=args.order)
    for coeff in series.coeffs:
        print(format_rational(coeff))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    config = SweepConfig(
        families=_resolve_families(args.family),
        w_set=_parse_int_list(args.wset),
        n_max=args.nmax,
        y_samples=_parse_rational_list(args.ys),
        order=args.order,
        include_even_w=args.include_even_w,
        output_path=args.output,
        format=args.format,
    )
    records, summary = run_sweep(config)
    payload = emit_report(records, config.format)
    if config.output_path is None:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.write(b"\n")
        sys.stdout.flush()
    else:
        with open(config.output_path, "wb") as handle:
            handle.write(payload)
            handle.write(b"\n")

    note = "" if summary.cases_run else " (0 admissible parameter tuples)"
    print(
        f"families={summary.families_run} cases={summary.cases_run} "
        f"failures={summary.failures} orbit_failures={summary.orbit_failures} "
        f"oracle_failures={summary.oracle_failures}{note}",
        file=sys.stderr,
    )
    return 0 if summary.ok else 1


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "euler": _cmd_euler,
        "altsum": _cmd_altsum,
        "series": _cmd_series,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
