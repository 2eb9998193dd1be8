"""Command-line front end: every computation as a scriptable subcommand.

Subcommands: table, psi, density, constant, lemma-check, rf-coefficients.
Output goes to stdout or --out as csv, tsv, or pretty-aligned text; exit
status is 0 on success, 2 on argument validation failure, 3 on resource
limits.
"""

import argparse
import csv
import io
import math
import sys
from dataclasses import dataclass

from .arith_core import build_prime_table, euler_phi, factorize, lambda1_sieve, mobius
from .correlation import psi_table
from .errors import ResourceLimitError
from .rf_series import carmichael_coefficient
from .singular_series import (
    PairTriple,
    conjectured_density,
    lemma_sum_truncated,
    twin_prime_constant,
)

DEFAULT_PRIME_LIMIT = 10**7
DEFAULT_TRUNCATION_Q = 10**4

TABLE_HEADER = ["N", "psi", "psi_over_N", "rhs", "ratio"]


@dataclass
class RunConfig:
    """Parsed invocation: one command plus every knob it may need."""

    command: str
    a: int = 1
    b: int = 1
    l: int = 1
    n_max: int = 0
    step: int = 0
    prime_limit: int = DEFAULT_PRIME_LIMIT
    truncation_q: int = DEFAULT_TRUNCATION_Q
    output_format: str = "pretty"
    output_path: str = None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text!r}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rfprimes",
        description="Totient-weighted prime pair correlations and their conjectured densities.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add_triple(sub):
        sub.add_argument("--a", type=_positive_int, default=1, help="pair coefficient a (default 1)")
        sub.add_argument("--b", type=_positive_int, default=1, help="pair coefficient b (default 1)")
        sub.add_argument("--l", type=_positive_int, default=1, help="pair offset l (default 1)")

    def add_output(sub):
        sub.add_argument("--format", choices=["csv", "tsv", "pretty"], default="pretty",
                         dest="output_format", help="output format (default pretty)")
        sub.add_argument("--out", dest="output_path", default=None,
                         help="write output to this file instead of stdout")

    def add_prime_limit(sub):
        sub.add_argument("--prime-limit", type=_positive_int, default=DEFAULT_PRIME_LIMIT,
                         help="Euler products and sieves use primes up to this bound (default 1e7)")

    sub = subparsers.add_parser("table", help="correlation table: one row per step up to n-max")
    add_triple(sub)
    sub.add_argument("--n-max", type=_positive_int, required=True, help="largest N")
    sub.add_argument("--step", type=_positive_int, required=True, help="row spacing")
    add_prime_limit(sub)
    add_output(sub)

    sub = subparsers.add_parser("psi", help="single correlation row at N = n-max")
    add_triple(sub)
    sub.add_argument("--n-max", type=_positive_int, required=True, help="the N of the sum")
    add_prime_limit(sub)
    add_output(sub)

    sub = subparsers.add_parser("density", help="admissibility and conjectured density of a triple")
    add_triple(sub)
    add_prime_limit(sub)
    add_output(sub)

    sub = subparsers.add_parser("constant", help="partial twin-prime constant at the prime limit")
    add_prime_limit(sub)
    add_output(sub)

    sub = subparsers.add_parser("lemma-check", help="truncated singular series vs its closed form")
    add_triple(sub)
    sub.add_argument("--truncation-q", type=_positive_int, default=DEFAULT_TRUNCATION_Q,
                     help="truncation bound of the series (default 1e4)")
    add_prime_limit(sub)
    add_output(sub)

    sub = subparsers.add_parser("rf-coefficients",
                                help="estimated RF coefficients of the weighted prime indicator")
    sub.add_argument("--n-max", type=_positive_int, required=True, help="sample count of the estimator")
    sub.add_argument("--truncation-q", type=_positive_int, default=DEFAULT_TRUNCATION_Q,
                     help="largest modulus q to estimate (default 1e4)")
    add_output(sub)

    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    for field in ("a", "b", "l", "n_max", "step", "prime_limit", "truncation_q",
                  "output_format", "output_path"):
        if hasattr(args, field):
            setattr(config, field, getattr(args, field))
    if math.gcd(config.a, config.b) != 1:
        parser.error(f"gcd(a,b) must be 1, got gcd({config.a},{config.b}) = {math.gcd(config.a, config.b)}")
    return config


def _correlation_rows(config: RunConfig, n_max: int, step: int):
    triple = PairTriple(config.a, config.b, config.l)
    bound = max(n_max, (config.b * n_max + config.l) // config.a, config.prime_limit)
    table = build_prime_table(bound)
    rows = psi_table(triple, n_max, step, config.prime_limit, table)
    formatted = [
        [str(r.N), f"{r.psi:.6f}", f"{r.psi_over_N:.6f}", f"{r.rhs:.6f}", f"{r.ratio:.6f}"]
        for r in rows
    ]
    return TABLE_HEADER, formatted


def _density_row(config: RunConfig):
    triple = PairTriple(config.a, config.b, config.l)
    table = build_prime_table(config.prime_limit)
    result = conjectured_density(triple, config.prime_limit, table)
    flag = "true" if result.admissible else "false"
    value = f"{result.value:.9f}" if result.admissible else "0"
    return ["admissible", "rhs"], [[flag, value]]


def _constant_row(config: RunConfig):
    table = build_prime_table(max(config.prime_limit, 3))
    value = twin_prime_constant(config.prime_limit, table)
    return ["C"], [[f"{value:.9f}"]]


def _lemma_check_row(config: RunConfig):
    triple = PairTriple(config.a, config.b, config.l)
    bound = max(config.prime_limit, config.truncation_q, config.a, config.b, config.l)
    table = build_prime_table(bound)
    truncated = lemma_sum_truncated(triple, config.truncation_q, table)
    closed = conjectured_density(triple, config.prime_limit, table).value
    return (
        ["S_truncated", "closed_form", "difference"],
        [[f"{truncated:.9f}", f"{closed:.9f}", f"{truncated - closed:.9f}"]],
    )


def _rf_coefficient_rows(config: RunConfig):
    bound = max(config.n_max, config.truncation_q, 2)
    table = build_prime_table(bound)
    values = lambda1_sieve(config.n_max, table)
    rows = []
    for q in range(1, config.truncation_q + 1):
        estimate = carmichael_coefficient(values, q, config.n_max, table)
        fq = factorize(q, table)
        reference = mobius(fq) / euler_phi(fq)
        rows.append([str(q), f"{estimate:.6f}", f"{reference:.6f}"])
    return ["q", "a_q", "mu_over_phi"], rows


def _render(header: list, rows: list, output_format: str) -> str:
    if output_format in ("csv", "tsv"):
        buffer = io.StringIO()
        writer = csv.writer(buffer, delimiter="," if output_format == "csv" else "\t",
                            lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buffer.getvalue()
    if len(rows) == 1 and header[0] not in ("N", "q"):
        # single-result commands read best as one name=value line
        pairs = ", ".join(f"{name}={value}" for name, value in zip(header, rows[0]))
        return pairs + "\n"
    widths = [max(len(header[i]), max(len(row[i]) for row in rows)) for i in range(len(header))]
    lines = ["  ".join(name.rjust(widths[i]) for i, name in enumerate(header))]
    for row in rows:
        lines.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines) + "\n"


def run(config: RunConfig) -> str:
    """Execute one parsed command and return its rendered output."""
    if config.command == "table":
        header, rows = _correlation_rows(config, config.n_max, config.step)
    elif config.command == "psi":
        header, rows = _correlation_rows(config, config.n_max, config.n_max)
    elif config.command == "density":
        header, rows = _density_row(config)
    elif config.command == "constant":
        header, rows = _constant_row(config)
    elif config.command == "lemma-check":
        header, rows = _lemma_check_row(config)
    elif config.command == "rf-coefficients":
        header, rows = _rf_coefficient_rows(config)
    else:
        raise ValueError(f"unknown command {config.command!r}")
    return _render(header, rows, config.output_format)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(parser, args)
    try:
        output = run(config)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(output)
    else:
        sys.stdout.write(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
