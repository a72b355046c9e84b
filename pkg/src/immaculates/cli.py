"""Command-line drivers: expand, classify, enumerate, schur-check.

Exit codes: 0 ok, 2 parse/argument error, 3 length mismatch, 4 output
I/O failure, 5 identity mismatch.  The environment variable
IMMACULATE_DIM_CAP overrides the dimension caps (default 10 for expand
and classify, 7 for enumerate).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from .compositions import (
    enumerate_compositions,
    format_parts,
    is_partition,
    pad_to_length,
    parse_parts,
)
from .errors import LengthMismatchError
from .matrix import build_matrix
from .ndet import DEFAULT_DIM_CAP, ndet_laplace
from .predicates import Outcome, classify, format_certificate
from .symfunc import schur_via_jacobi_trudi, schur_via_tableaux

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_SHAPE = 3
EXIT_IO = 4
EXIT_MISMATCH = 5

ENUMERATE_WEIGHT_CAP = 14
ENUMERATE_LENGTH_CAP = 7

CENSUS_FIELDS = ("alpha", "beta", "class", "certificate", "terms", "micros")


def _env_cap(default: int) -> int:
    raw = os.environ.get("IMMACULATE_DIM_CAP")
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"IMMACULATE_DIM_CAP must be an integer, got {raw!r}") from None


def _cmd_expand(args) -> int:
    alpha = parse_parts(args.alpha, minimum=1)
    if args.skew is None:
        beta = (0,) * len(alpha)
    else:
        beta = parse_parts(args.skew, minimum=0)
        if args.pad and len(beta) < len(alpha):
            beta = pad_to_length(beta, len(alpha))
    matrix = build_matrix(alpha, beta)
    if args.show_matrix:
        print(matrix.render())
    print(ndet_laplace(matrix, cap=_env_cap(DEFAULT_DIM_CAP)).render())
    return EXIT_OK


def _cmd_classify(args) -> int:
    alpha = parse_parts(args.alpha, minimum=1)
    beta = parse_parts(args.beta, minimum=0)
    result = classify(alpha, beta, oracle_cap=_env_cap(DEFAULT_DIM_CAP))
    line = result.outcome.value
    if result.certificate is not None:
        line += " " + format_certificate(result.certificate)
    print(line)
    return EXIT_OK


def census_records(n: int, length: int, partitions_only: bool, cap: int, timings: bool):
    """One record per pair of weight-n length-`length` sequences, lex order."""
    betas = [
        b
        for b in enumerate_compositions(n, length)
        if not partitions_only or is_partition(b)
    ]
    for alpha in enumerate_compositions(n, length):
        for beta in betas:
            started = time.perf_counter_ns() if timings else 0
            result = classify(alpha, beta, oracle_cap=cap)
            if result.outcome in (
                Outcome.ALL_ZERO_PRE_CANCELLATION,
                Outcome.ZERO_AFTER_CANCELLATION,
            ):
                terms = 0
            elif result.outcome is Outcome.NONZERO_TERM_EXISTS and result.witness is not None:
                terms = len(result.witness)
            else:
                terms = len(ndet_laplace(build_matrix(alpha, beta), cap=cap))
            micros = (time.perf_counter_ns() - started) // 1000 if timings else 0
            yield {
                "alpha": format_parts(alpha),
                "beta": format_parts(beta),
                "class": result.outcome.value,
                "certificate": (
                    format_certificate(result.certificate)
                    if result.certificate is not None
                    else None
                ),
                "terms": terms,
                "micros": micros,
            }


def _write_census(records, stream, fmt: str) -> None:
    if fmt == "csv":
        writer = csv.writer(stream)
        writer.writerow(CENSUS_FIELDS)
        for rec in records:
            writer.writerow(
                [rec["alpha"], rec["beta"], rec["class"], rec["certificate"] or "",
                 rec["terms"], rec["micros"]]
            )
    else:
        for rec in records:
            stream.write(json.dumps(rec) + "\n")


def _cmd_enumerate(args) -> int:
    length_cap = _env_cap(ENUMERATE_LENGTH_CAP)
    if not 1 <= args.n <= ENUMERATE_WEIGHT_CAP:
        raise ValueError(f"--n must be within 1..{ENUMERATE_WEIGHT_CAP}")
    if not 1 <= args.length <= length_cap:
        raise ValueError(f"--len must be within 1..{length_cap}")
    records = list(
        census_records(args.n, args.length, args.partitions_only, length_cap, args.timings)
    )
    if args.out is not None:
        try:
            stream = open(args.out, "w", encoding="utf-8", newline="")
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        with stream:
            _write_census(records, stream, args.format)
        summary_stream = sys.stdout
    else:
        _write_census(records, sys.stdout, args.format)
        summary_stream = sys.stderr
    counts = {outcome: 0 for outcome in Outcome}
    for rec in records:
        counts[Outcome(rec["class"])] += 1
    summary = f"total={len(records)} " + " ".join(
        f"{outcome.value}={counts[outcome]}" for outcome in Outcome
    )
    print(summary, file=summary_stream)
    return EXIT_OK


def _cmd_schur_check(args) -> int:
    outer = parse_parts(args.outer, minimum=1)
    if not is_partition(outer):
        raise ValueError(f"outer shape must be a partition: {args.outer!r}")
    inner: tuple[int, ...] = ()
    if args.inner is not None:
        inner = parse_parts(args.inner, minimum=1)
        if not is_partition(inner):
            raise ValueError(f"inner shape must be a partition: {args.inner!r}")
    if len(inner) > len(outer) or any(v > outer[i] for i, v in enumerate(inner)):
        raise ValueError("inner shape must fit inside the outer shape")
    if args.vars < 1:
        raise ValueError("--vars must be >= 1")
    via_tableaux = schur_via_tableaux(outer, inner, args.vars)
    via_determinant = schur_via_jacobi_trudi(outer, inner, args.vars)
    if via_tableaux == via_determinant:
        print(f"MATCH {via_tableaux.render()}")
        return EXIT_OK
    print("MISMATCH")
    print(f"tableaux:    {via_tableaux.render()}")
    print(f"determinant: {via_determinant.render()}")
    print(f"difference:  {(via_tableaux - via_determinant).render()}")
    return EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="immaculates",
        description="Exact H-basis expansions and nonzeroness classification "
        "of skew immaculate noncommutative symmetric functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="H-basis expansion of a (skew) immaculate")
    p.add_argument("alpha", help="outer composition, e.g. 6,4,3")
    p.add_argument("--skew", metavar="BETA", help="skewing sequence (weak composition)")
    p.add_argument("--pad", action="store_true",
                   help="zero-pad the skewing sequence to the outer length")
    p.add_argument("--show-matrix", action="store_true",
                   help="print the associated subscript matrix first")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("classify", help="zero/nonzero classification of a pair")
    p.add_argument("alpha")
    p.add_argument("beta")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="census of all pairs of a given weight and length")
    p.add_argument("--n", type=int, required=True, help="weight of both sequences")
    p.add_argument("--len", dest="length", type=int, required=True, help="number of parts")
    p.add_argument("--partitions-only", action="store_true",
                   help="restrict the skewing sequence to partitions")
    p.add_argument("--format", choices=["json-lines", "csv"], default="json-lines")
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    p.add_argument("--timings", action="store_true",
                   help="record real elapsed microseconds per pair "
                   "(off by default so reruns are byte-identical)")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("schur-check",
                       help="compare tableau and determinant Schur polynomials")
    p.add_argument("outer", help="outer partition, e.g. 2,2")
    p.add_argument("--inner", help="inner partition")
    p.add_argument("--vars", type=int, required=True, help="number of variables")
    p.set_defaults(func=_cmd_schur_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LengthMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SHAPE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
