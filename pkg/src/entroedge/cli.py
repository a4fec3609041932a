"""Command line interface.

Exit codes: 0 success, 1 usage error, 2 input I/O error, 3 malformed PGM,
4 degenerate input (no threshold exists or image too small), 5 output
could not be written.
"""

import argparse
import sys
from pathlib import Path

from . import bench
from .baselines import log_edges, sobel_edges
from .edgemap import detect_hybrid, hybrid_thresholds
from .exceptions import DegenerateHistogramError, PGMParseError
from .imgio import load_pgm, render_edges, save_pgm
from .validation import check_q

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_PARSE, EXIT_DEGENERATE, EXIT_OUTPUT = range(6)


class UsageError(Exception):
    pass


class _Fail(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_q(p):
    p.add_argument("--q", type=float, default=0.5, help="entropic index of the local thresholds (default 0.5)")
    p.add_argument("--allow-any-q", action="store_true", help="accept any q > 0 instead of only 0 < q < 1")


def build_parser():
    parser = _Parser(prog="entroedge", description="Hybrid entropic edge detection for PGM images.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("threshold", help="print the hybrid thresholds t1, t2, t3")
    p.add_argument("input")
    _add_q(p)

    p = sub.add_parser("edges", help="write the hybrid edge image as PGM")
    p.add_argument("input")
    p.add_argument("output")
    _add_q(p)

    p = sub.add_parser("baseline", help="write a Sobel or LoG edge image as PGM")
    p.add_argument("input")
    p.add_argument("output")
    p.add_argument("--method", choices=["sobel", "log"], required=True)
    p.add_argument("--scale", type=float, default=4.0, help="Sobel: threshold as a multiple of the mean magnitude")
    p.add_argument("--sigma", type=float, default=2.0, help="LoG: Gaussian standard deviation")
    p.add_argument("--zc-thresh", type=float, default=0.0, help="LoG: minimum response jump at a zero crossing")

    p = sub.add_parser("bench", help="time hybrid, sobel and log on each image")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--runs", type=int, default=10)
    p.add_argument("--csv", help="write timing records to this CSV file")
    p.add_argument("--phases", action="store_true", help="add per-phase columns for the hybrid method")
    p.add_argument("--verbose", action="store_true", help="also print every individual run time")
    p.add_argument("--scale", type=float, default=4.0)
    p.add_argument("--sigma", type=float, default=2.0)
    p.add_argument("--zc-thresh", type=float, default=0.0)
    _add_q(p)
    return parser


def _read(path):
    try:
        return load_pgm(path)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {path}: {exc.strerror or exc}")


def _write(path, img):
    try:
        save_pgm(path, img)
    except OSError as exc:
        raise _Fail(EXIT_OUTPUT, f"cannot write {path}: {exc.strerror or exc}")


def _q(args):
    try:
        return check_q(args.q, allow_any=args.allow_any_q)
    except ValueError as exc:
        raise UsageError(f"{exc} (pass --allow-any-q to lift the (0, 1) restriction)")


def cmd_threshold(args, out):
    q = _q(args)
    ts = hybrid_thresholds(_read(args.input), q)
    c1, c2, c3 = ts.criteria
    print(f"t1={ts.t1}", file=out)
    print(f"t2={ts.t2}", file=out)
    print(f"t3={ts.t3}", file=out)
    print(f"q={ts.q:g}", file=out)
    print(f"t1_criterion={c1:.10g}", file=out)
    print(f"t2_criterion={c2:.10g}", file=out)
    print(f"t3_criterion={c3:.10g}", file=out)
    return EXIT_OK


def cmd_edges(args, out):
    q = _q(args)
    edges, _ = detect_hybrid(_read(args.input), q)
    _write(args.output, render_edges(edges))
    return EXIT_OK


def cmd_baseline(args, out):
    img = _read(args.input)
    try:
        if args.method == "sobel":
            edges = sobel_edges(img, scale=args.scale)
        else:
            edges = log_edges(img, sigma=args.sigma, zc_thresh=args.zc_thresh)
    except ValueError as exc:
        # the only data-dependent failure left is an image too small for the kernel
        raise _Fail(EXIT_DEGENERATE, str(exc))
    _write(args.output, render_edges(edges))
    return EXIT_OK


def cmd_bench(args, out):
    q = _q(args)
    if args.runs < 1:
        raise UsageError("--runs must be at least 1")
    params = dict(q=q, scale=args.scale, sigma=args.sigma, zc_thresh=args.zc_thresh)
    records, status = [], EXIT_OK
    for image_id, path in zip(bench.image_ids(Path(p).stem for p in args.inputs), args.inputs):
        try:
            img = _read(path)
        except (PGMParseError, _Fail) as exc:
            code = exc.code if isinstance(exc, _Fail) else EXIT_PARSE
            print(f"entroedge: {path}: {exc}", file=sys.stderr)
            status = status or code
            records += [bench.TimingRecord(m, image_id, 0, 0, 0, float("nan"), error=str(exc)) for m in bench.METHODS]
            continue
        for rec in bench.bench_image(image_id, img, runs=args.runs, **params):
            if not rec.ok:
                print(f"entroedge: {path}: {rec.method}: {rec.error}", file=sys.stderr)
                status = status or EXIT_DEGENERATE
            records.append(rec)
    print(bench.format_table(records), file=out)
    if args.verbose:
        for r in records:
            print(f"{r.method} {r.image_id} " + " ".join(f"{t:.6f}" for t in r.times), file=out)
    if args.csv:
        try:
            with open(args.csv, "w", newline="") as fh:
                bench.write_csv(records, fh, phases=args.phases)
        except OSError as exc:
            raise _Fail(EXIT_OUTPUT, f"cannot write {args.csv}: {exc.strerror or exc}")
    return status


COMMANDS = {"threshold": cmd_threshold, "edges": cmd_edges, "baseline": cmd_baseline, "bench": cmd_bench}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"entroedge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _Fail as exc:
        print(f"entroedge: {exc}", file=sys.stderr)
        return exc.code
    except PGMParseError as exc:
        print(f"entroedge: {args.input}: malformed PGM: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DegenerateHistogramError as exc:
        print(f"entroedge: degenerate input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as exc:
        print(f"entroedge: unusable input: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
