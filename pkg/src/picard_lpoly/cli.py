"""Command-line interface.

Subcommands: compute (batch records), lpoly (one prime), verify (oracle +
invariant audit, exit 1 on the first counterexample), stats (classification
summary), psi (the attached degree-9 polynomial).  Exit codes: 0 success,
1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import pipeline
from .curve import PicardCurve, compute_psi, normalize
from .errors import PicardLpolyError
from .records import CSV_HEADER, RunConfig

# the inert-side oracle needs a p^2-byte cube table, which caps its reach
VERIFY_MAX_PRIME = 16_000


def _parse_curve(text: str) -> PicardCurve:
    parts = [int(v) for v in text.split(",")]
    if len(parts) == 3:
        return PicardCurve(f2=parts[0], f1=parts[1], f0=parts[2])
    if len(parts) == 5:
        return normalize(*parts)
    raise ValueError("--curve takes f2,f1,f0 or f4,f3,f2,f1,f0")


def _add_common(sub: argparse.ArgumentParser, with_range: bool = True):
    sub.add_argument(
        "--curve",
        required=True,
        help="f2,f1,f0 for y^3 = x^4+f2x^2+f1x+f0, or f4,f3,f2,f1,f0 to normalize",
    )
    if with_range:
        sub.add_argument("--min-prime", type=int, default=5)
        sub.add_argument("--max-prime", type=int, required=True)
        sub.add_argument("--jobs", type=int, default=1)
        sub.add_argument("--naive-fallback", type=int, default=0,
                         help="also count split non-ordinary primes up to this bound")
        sub.add_argument("--oracle-bound", type=int, default=1 << 32,
                         help="refuse enumeration beyond p^k of this size")
        sub.add_argument("--backend", choices=("c", "py"), default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="picard-lpoly",
        description="L-polynomials of a Picard curve at good primes",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="records for every prime in range")
    _add_common(p_compute)
    p_compute.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_compute.add_argument("--out", default=None, help="output file (default stdout)")

    p_lpoly = sub.add_parser("lpoly", help="one prime")
    _add_common(p_lpoly, with_range=False)
    p_lpoly.add_argument("--prime", type=int, required=True)
    p_lpoly.add_argument("--naive-fallback", type=int, default=0)
    p_lpoly.add_argument("--backend", choices=("c", "py"), default=None)

    p_verify = sub.add_parser("verify", help="audit computed records against the oracle")
    _add_common(p_verify)

    p_stats = sub.add_parser("stats", help="classification summary for a range")
    _add_common(p_stats)

    p_psi = sub.add_parser("psi", help="print the degree-9 polynomial psi_f")
    _add_common(p_psi, with_range=False)

    return ap


def _make_config(args, fmt: str = "jsonl", out=None) -> RunConfig:
    return RunConfig(
        curve=_parse_curve(args.curve),
        min_prime=args.min_prime,
        max_prime=args.max_prime,
        fmt=fmt,
        jobs=args.jobs,
        naive_fallback=args.naive_fallback,
        oracle_bound=args.oracle_bound,
        backend=args.backend,
        out=out,
    )


def _cmd_compute(args) -> int:
    cfg = _make_config(args, fmt=args.format, out=args.out)
    sink = open(cfg.out, "w", encoding="utf-8") if cfg.out else sys.stdout
    try:
        if cfg.fmt == "csv":
            print(CSV_HEADER, file=sink)
        for rec in pipeline.iter_records(cfg):
            line = rec.to_csv_line() if cfg.fmt == "csv" else rec.to_json_line()
            print(line, file=sink)
    finally:
        if cfg.out:
            sink.close()
    return 0


def _cmd_lpoly(args) -> int:
    curve = _parse_curve(args.curve)
    rec = pipeline.single_lpoly(
        curve, args.prime, naive_fallback=args.naive_fallback, backend=args.backend
    )
    print(rec.to_json_line())
    return 0


def _cmd_verify(args) -> int:
    if args.max_prime > VERIFY_MAX_PRIME:
        raise ValueError(f"verify is limited to max-prime <= {VERIFY_MAX_PRIME}")
    cfg = _make_config(args)
    try:
        pipeline.verify_range(cfg)
    except pipeline.VerifyFailure as fail:
        print(f"FAIL {fail}", file=sys.stderr)
        return 1
    print(f"OK: all computed L-polynomials in [{cfg.min_prime}, {cfg.max_prime}] "
          "match the oracle and the congruence invariants")
    return 0


def _cmd_stats(args) -> int:
    cfg = _make_config(args)
    print(json.dumps(pipeline.stats(cfg), separators=(",", ":")))
    return 0


def _cmd_psi(args) -> int:
    curve = _parse_curve(args.curve)
    print(json.dumps(list(compute_psi(curve.f2, curve.f1, curve.f0))))
    return 0


_COMMANDS = {
    "compute": _cmd_compute,
    "lpoly": _cmd_lpoly,
    "verify": _cmd_verify,
    "stats": _cmd_stats,
    "psi": _cmd_psi,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, PicardLpolyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint():  # console_scripts hook
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
