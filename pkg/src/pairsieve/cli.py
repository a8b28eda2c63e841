"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from typing import IO, Optional, Sequence

from pairsieve.characterization import is_representable
from pairsieve.core import Case, InvalidPairClass, PairClass, PairRecord
from pairsieve.families import derive_families
from pairsieve.oracle import is_prime, is_prime_trial
from pairsieve.parity import parity_sweep, write_csv
from pairsieve.sieve import (
    DEFAULT_SEGMENT_SIZE,
    build_exclusions,
    complement,
    eratosthenes_starts,
    pair_starts,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def pair_classes(k: int, case: str) -> list[PairClass]:
    try:
        if case == "both":
            return PairClass.valid_cases(k)
        return [PairClass(k, Case.parse(case))]
    except InvalidPairClass as exc:
        raise UsageError(str(exc)) from None


def _sweep(text: str) -> tuple[int, int, int]:
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected A:B or A:B:S, got {text!r}")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer sweep {text!r}") from None
    return vals[0], vals[1], vals[2] if len(vals) == 3 else 1


def _int(text: str) -> int:
    # accepts 10**6 / 1e6 style limits
    text = text.replace("_", "")
    if "**" in text:
        base, exp = text.split("**")
        return int(base) ** int(exp)
    if "^" in text:
        base, exp = text.split("^")
        return int(base) ** int(exp)
    try:
        return int(text)
    except ValueError:
        f = float(text)
        if not f.is_integer():
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
        return int(f)


# ---- derive ---------------------------------------------------------------

def cmd_derive(args: argparse.Namespace, out: IO[str]) -> int:
    for pc in pair_classes(args.k, args.case):
        fams = derive_families(pc)
        ms = range(1, args.max_m + 1)
        if args.format == "json":
            for f in fams:
                rec = {"k": pc.k, "case": pc.case.value, **f.to_record(),
                       "formula": f.formula(),
                       "progressions": [str(f.progression(m)) for m in ms]}
                out.write(json.dumps(rec) + "\n")
            continue
        out.write(f"{pc}\n")
        header = ["family", "target"] + [f"m={m}" for m in ms]
        rows = [[f.formula(), f"c={f.offset_target}"] + [str(f.progression(m)) for m in ms]
                for f in fams]
        widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
        for r in [header] + rows:
            out.write("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() + "\n")
    return EXIT_OK


# ---- sieve ----------------------------------------------------------------

def cmd_sieve(args: argparse.Namespace, out: IO[str]) -> int:
    for pc in pair_classes(args.k, args.case):
        es = build_exclusions(pc, args.limit, args.segment_size, args.threads, args.mode)
        if args.dump == "none":
            excluded = len(es)
            out.write(json.dumps({
                "k": pc.k, "case": pc.case.value, "x_limit": es.x_limit,
                "excluded": excluded, "unmarked": es.x_limit + 1 - excluded,
            }) + "\n")
            continue
        values = complement(es) if args.complement else es.excluded()
        if args.dump == "csv":
            out.write("x\n")
        out.writelines(f"{x}\n" for x in values.tolist())
    return EXIT_OK


# ---- pairs ----------------------------------------------------------------

def write_pairs(pairs: Sequence[PairRecord], fmt: str, out: IO[str]) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("p", "q"))
        w.writerows(pairs)
    else:
        out.writelines(json.dumps({"p": r.p, "q": r.q}) + "\n" for r in pairs)


def read_pairs_csv(fh: IO[str]) -> list[PairRecord]:
    rows = csv.reader(fh)
    if next(rows, None) != ["p", "q"]:
        raise ValueError("expected header p,q")
    return [PairRecord(int(p), int(q)) for p, q in rows]


def cmd_pairs(args: argparse.Namespace, out: IO[str]) -> int:
    if args.limit < 3:
        raise UsageError("--limit must be >= 3")
    pcs = pair_classes(args.k, args.case)
    if args.method == "families":
        starts = pair_starts(args.k, args.limit, pcs, args.segment_size, args.threads)
    else:
        if args.case != "both":
            raise UsageError("--method baseline does not split by case")
        starts = eratosthenes_starts(args.k, args.limit)
    gap = 2 * args.k
    write_pairs([PairRecord(p, p + gap) for p in starts.tolist()], args.format, out)
    return EXIT_OK


# ---- parity ---------------------------------------------------------------

def cmd_parity(args: argparse.Namespace, out: IO[str]) -> int:
    if args.sweep is not None:
        a, b, s = args.sweep
    else:
        a = b = args.n
        s = 1
    try:
        reports = parity_sweep(a, b, s, segment_size=args.segment_size, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(reports, fh)
    else:
        write_csv(reports, out)
    return EXIT_OK


# ---- verify ---------------------------------------------------------------

def sieve_mismatches(pc: PairClass, x_limit: int, **sieve_opts) -> list[int]:
    """Indices where the sieve and the primality oracle disagree."""
    flags = build_exclusions(pc, x_limit, **sieve_opts).to_bool().tolist()
    bad = []
    for x, marked in enumerate(flags):
        both_prime = is_prime(6 * x + pc.c1) and is_prime(6 * x + pc.c2)
        if marked == both_prime:
            bad.append(x)
    return bad


def characterization_mismatches(limit: int) -> list[int]:
    return [
        z for z in range(1, limit + 1)
        if is_representable(z) != (not is_prime_trial(2 * z + 1))
    ]


def cmd_verify(args: argparse.Namespace, out: IO[str]) -> int:
    if args.limit < 0:
        raise UsageError("--limit must be >= 0")
    total = 0
    for pc in pair_classes(args.k, args.case):
        bad = sieve_mismatches(pc, args.limit, segment_size=args.segment_size,
                               threads=args.threads)
        out.write(f"{pc}: indices 0..{args.limit}, {len(bad)} mismatches\n")
        if bad:
            out.write(f"  first offending x: {bad[:10]}\n")
        total += len(bad)
    bad = characterization_mismatches(args.limit)
    out.write(f"characterization: z 1..{args.limit}, {len(bad)} mismatches\n")
    if bad:
        out.write(f"  first offending z: {bad[:10]}\n")
    total += len(bad)
    out.write(f"{total} mismatches\n")
    return EXIT_OK if total == 0 else EXIT_MISMATCH


# ---- bench ----------------------------------------------------------------

def run_bench(k: int, x_limit: int, segment_size: int, threads: Optional[int]) -> dict:
    p_limit = 6 * x_limit + 5
    results = []

    t0 = time.perf_counter()
    starts = pair_starts(k, p_limit, None, segment_size, threads)
    families_s = time.perf_counter() - t0
    results.append({"method": "families", "limit": x_limit, "seconds": families_s,
                    "pairs_found": len(starts)})

    t0 = time.perf_counter()
    base = eratosthenes_starts(k, p_limit)
    base_s = time.perf_counter() - t0
    results.append({"method": "eratosthenes", "limit": x_limit, "seconds": base_s,
                    "pairs_found": len(base)})

    for r in results:
        r["indices_per_second"] = (x_limit + 1) / r["seconds"] if r["seconds"] > 0 else None
    return {
        "k": k, "limit": x_limit, "p_limit": p_limit,
        "segment_size": segment_size, "threads": threads,
        "results": results,
        "agree": bool(len(starts) == len(base) and (starts == base).all()),
    }


def cmd_bench(args: argparse.Namespace, out: IO[str]) -> int:
    pair_classes(args.k, "both")
    threads = args.threads or os.cpu_count() or 1
    summary = run_bench(args.k, args.limit, args.segment_size, threads)
    out.write(json.dumps(summary) + "\n")
    return EXIT_OK if summary["agree"] else EXIT_MISMATCH


# ---- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairsieve",
        description="Enumerate prime pairs (p, p+2k) with closed-form exclusion families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_opts(p: argparse.ArgumentParser, case: bool = True) -> None:
        p.add_argument("--k", type=int, default=1, help="half-gap; pairs are (p, p+2k)")
        if case:
            p.add_argument("--case", choices=("a", "b", "both"), default="both",
                           type=str.lower, help="residue case (default: every valid case)")

    def sieve_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--segment-size", type=_int, default=DEFAULT_SEGMENT_SIZE)
        p.add_argument("--threads", type=int, default=None)

    p = sub.add_parser("derive", help="print the exclusion families")
    pair_opts(p)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("sieve", help="build the exclusion set over candidate indices")
    pair_opts(p)
    p.add_argument("--limit", type=_int, required=True, help="largest candidate index x")
    p.add_argument("--mode", choices=("fast", "literal"), default="fast")
    p.add_argument("--dump", choices=("none", "text", "csv"), default="none")
    p.add_argument("--complement", action="store_true",
                   help="dump the unmarked indices instead of the excluded ones")
    sieve_opts(p)
    p.set_defaults(func=cmd_sieve)

    p = sub.add_parser("pairs", help="list prime pairs (p, p+2k) with p <= limit")
    pair_opts(p)
    p.add_argument("--limit", type=_int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--method", choices=("families", "baseline"), default="families")
    sieve_opts(p)
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("parity", help="(even - odd)/n statistic as CSV")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--sweep", type=_sweep, help="A:B or A:B:S")
    p.add_argument("--out", default=None)
    sieve_opts(p)
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("verify", help="cross-check sieve and characterization against the oracle")
    pair_opts(p)
    p.add_argument("--limit", type=_int, required=True)
    sieve_opts(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the family sieve against plain Eratosthenes")
    pair_opts(p, case=False)
    p.add_argument("--limit", type=_int, default=10**6, help="largest candidate index x")
    sieve_opts(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, InvalidPairClass, ValueError, OverflowError) as exc:
        print(f"pairsieve {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
