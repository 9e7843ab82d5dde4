"""Command line entry point.

Exit status: 0 on success (or a positive match), 1 on domain errors and
negative match results, 2 on usage errors.
"""

import argparse
import json
import sys

from . import encoding, tree
from .bitstring import interpret, parse_bits, show_bits
from .collatz import ParityVector, occurrence
from .engine import matches, matches_value, sample, smallest_ancestor
from .mod3k import dlog_inv2, pi_sequence
from .oracle import cross_validate, pred_brute
from .regex import iter_text, to_tree
from .regexgen import build_reg, metrics


def natural(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a natural number, got {v}")
    return v


def build_parser():
    parser = argparse.ArgumentParser(
        prog="collatz-regex",
        description="Regular expressions for Collatz ancestors with a fixed odd-step budget.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print reg_k(x)")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)
    p.add_argument("--format", choices=("text", "paper", "tree"), default="text",
                   help="text notation ('paper' is an alias) or nested JSON tree")
    p.add_argument("--metrics", action="store_true")

    p = sub.add_parser("match", help="test a bit string against reg_k(x)")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)
    p.add_argument("bits")

    p = sub.add_parser("matchval", help="test a number (with bounded leading zeros)")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)
    p.add_argument("y", type=natural)

    p = sub.add_parser("sample", help="list members with bounded star repetitions")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)
    p.add_argument("--reps", type=natural, default=1)
    p.add_argument("--count", type=natural, default=10)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("smallest", help="smallest ancestor found within the star bound")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)
    p.add_argument("--reps", type=natural, default=2)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="cross-check reg_k(x) against brute force")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)
    p.add_argument("--max", type=natural, default=2**16)
    p.add_argument("--reps", type=natural, default=1)
    p.add_argument("--threads", type=natural, default=1)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("pred", help="brute-force ancestors up to a bound")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)
    p.add_argument("--max", type=natural, default=1000)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("pi", help="parity sequence of the units modulo 3^k")
    p.add_argument("k", type=natural)

    p = sub.add_parser("dlog", help="exponent i with x = (2^-1)^i modulo 3^k")
    p.add_argument("x", type=natural)
    p.add_argument("k", type=natural)

    p = sub.add_parser("encode", help="Collatz encoding of a d/l parity vector")
    p.add_argument("vector")

    p = sub.add_parser("decode", help="parity vector of a bit string")
    p.add_argument("bits")

    p = sub.add_parser("tree", help="print the first levels of the first-occurrence tree")
    p.add_argument("--depth", type=natural, default=3)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("occ", help="i-th occurrence of a parity vector")
    p.add_argument("vector")
    p.add_argument("i", type=natural)
    return parser


def _write(out, chunks):
    for c in chunks:
        out.write(c)


def run(args, out):
    cmd = args.command
    if cmd == "gen":
        reg = build_reg(args.x, args.k)
        if args.format in ("text", "paper"):
            _write(out, iter_text(reg))
            out.write("\n")
        else:
            json.dump(to_tree(reg), out, separators=(",", ":"))
            out.write("\n")
        if args.metrics:
            out.write(f"{metrics(reg)}\n")
        return 0
    if cmd == "match":
        ok = matches(build_reg(args.x, args.k), parse_bits(args.bits))
        out.write("yes\n" if ok else "no\n")
        return 0 if ok else 1
    if cmd == "matchval":
        ok = matches_value(build_reg(args.x, args.k), args.y, args.k)
        out.write("yes\n" if ok else "no\n")
        return 0 if ok else 1
    if cmd == "sample":
        words = sample(build_reg(args.x, args.k), args.reps, args.count)
        if args.json:
            json.dump([{"bits": w, "value": interpret(w)} for w in words], out)
            out.write("\n")
        else:
            for w in words:
                out.write(f"{show_bits(w)} {interpret(w)}\n")
        return 0
    if cmd == "smallest":
        y = smallest_ancestor(args.x, args.k, args.reps)
        if args.json:
            json.dump({"x": args.x, "k": args.k, "reps": args.reps, "smallest": y}, out)
            out.write("\n")
        else:
            out.write(f"{'none' if y is None else y} (reps<={args.reps})\n")
        return 0 if y is not None else 1
    if cmd == "verify":
        report = cross_validate(args.x, args.k, args.max, args.reps, threads=args.threads)
        if args.json:
            json.dump(report.as_dict(), out)
            out.write("\n")
        else:
            for line in report.lines():
                out.write(line + "\n")
        return 0 if report.ok else 1
    if cmd == "pred":
        ys = sorted(pred_brute(args.x, args.k, args.max))
        if args.json:
            json.dump(ys, out)
            out.write("\n")
        else:
            out.write(" ".join(map(str, ys)) + "\n")
        return 0
    if cmd == "pi":
        out.write(pi_sequence(args.k) + "\n")
        return 0
    if cmd == "dlog":
        out.write(f"{dlog_inv2(args.x, args.k)}\n")
        return 0
    if cmd == "encode":
        out.write(show_bits(encoding.encode(ParityVector.parse(args.vector))) + "\n")
        return 0
    if cmd == "decode":
        out.write(f"{encoding.decode(parse_bits(args.bits))}\n")
        return 0
    if cmd == "tree":
        lines = tree.render_dot(args.depth) if args.dot else tree.render_text(args.depth)
        for line in lines:
            out.write(line + "\n")
        return 0
    if cmd == "occ":
        out.write(f"{occurrence(ParityVector.parse(args.vector), args.i)}\n")
        return 0
    raise AssertionError(cmd)


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return run(args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
