"""
Command line front end.

    kirbybook --n 2 --p 4 --word "a(1,2) a(3,4)^-1"
    kirbybook --input knot.txt --emit-json ob.json --emit-svg ob.svg --emit-trace t.txt
    kirbybook --verify-only --input knot.txt --trace t.txt [--openbook ob.json]
    kirbybook --fuzz 1000 --seed 7

Exit codes: 0 success, 1 error or failed check, 2 the L(p,1) program's
hypothesis p > 2n-2 does not hold.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .braid import PlatInput, parse_input, parse_word
from .errors import HypothesisViolated, KirbyError
from .kirby import dump_trace, initial_diagram, load_trace, replay
from .openbook import extract, render_svg
from .pipeline import run
from .verify import Report, audit, h1, round_trip


def expected_h1(p):
    if p == 1:
        return []
    return [p]


def check(inp, d0, endpoint, trace, ob):
    report = Report()
    rt = round_trip(d0, trace, endpoint)
    report.checks.extend(rt.checks)
    report.divergence = rt.divergence
    report.checks.extend(audit(ob, endpoint).checks)
    got = h1(endpoint)
    report.add("H1 of endpoint", got == expected_h1(inp.p), f"{got}")
    return report


def _read_input(args):
    if args.input:
        return parse_input(Path(args.input).read_text(encoding="utf-8"))
    if args.n is None or args.p is None:
        raise KirbyError("give --input, or --n and --p (with an optional --word)")
    word = parse_word(f"n={args.n} {args.word or ''}")
    return PlatInput(word, args.p)


def build_parser():
    ap = argparse.ArgumentParser(prog="kirbybook", description=__doc__.split("\n\n")[0])
    ap.add_argument("--n", type=int, help="half the number of plat strands")
    ap.add_argument("--p", type=int, help="U is framed -p; 0 gives S^1 x S^2")
    ap.add_argument("--word", help='pure braid word, e.g. "a(1,2) a(2,3)^-1"')
    ap.add_argument("--input", help="input file: n=<int> p=<int> then syllables")
    ap.add_argument("--emit-json", metavar="PATH")
    ap.add_argument("--emit-svg", metavar="PATH")
    ap.add_argument("--emit-trace", metavar="PATH")
    ap.add_argument("--verify-only", action="store_true",
                    help="replay --trace on the input and run every check")
    ap.add_argument("--trace", metavar="PATH", help="trace to replay with --verify-only")
    ap.add_argument("--openbook", metavar="PATH",
                    help="with --verify-only, JSON open book to compare against")
    ap.add_argument("--fuzz", type=int, metavar="COUNT", help="self-test on random inputs")
    ap.add_argument("--seed", type=int, default=0)
    return ap


def _fuzz(count, seed, out):
    failures = 0
    for k, inp in enumerate(corpus.corpus(count, seed)):
        d0 = initial_diagram(inp)
        endpoint, trace = run(inp)
        report = check(inp, d0, endpoint, trace, extract(endpoint, trace))
        if not report:
            failures += 1
            print(f"case {k} ({inp.manifold}, n={inp.n}): " + "; ".join(report.lines()), file=out)
    print(f"fuzz: {count - failures}/{count} passed (seed {seed})", file=out)
    return 0 if failures == 0 else 1


def _verify_only(args, out, err):
    if not args.trace:
        print("--verify-only needs --trace", file=err)
        return 1
    inp = _read_input(args)
    d0 = initial_diagram(inp)
    trace = load_trace(Path(args.trace).read_text(encoding="utf-8"))
    try:
        endpoint = replay(d0, trace)
        ob = extract(endpoint, trace)
    except KirbyError as exc:
        report = round_trip(d0, trace)
        report.add("replay", False, str(exc))
    else:
        report = check(inp, d0, endpoint, trace, ob)
        if args.openbook:
            given = json.loads(Path(args.openbook).read_text(encoding="utf-8"))
            report.add("open book JSON matches replay", given == ob.to_dict())
    for line in report.lines():
        print(line, file=out)
    return 0 if report else 1


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.fuzz is not None:
            return _fuzz(args.fuzz, args.seed, out)
        if args.verify_only:
            return _verify_only(args, out, err)
        inp = _read_input(args)
        d0 = initial_diagram(inp)
        endpoint, trace = run(inp)
        ob = extract(endpoint, trace)
        report = check(inp, d0, endpoint, trace, ob)
    except HypothesisViolated as exc:
        print(f"error: {exc}", file=err)
        print("the L(p,1) construction requires p > 2n - 2", file=err)
        return 2
    except (KirbyError, OSError) as exc:
        tag = getattr(exc, "tag", None)
        print(f"error{f' [{tag}]' if tag else ''}: {exc}", file=err)
        return 1

    if args.emit_json:
        Path(args.emit_json).write_text(ob.to_json(), encoding="utf-8")
    if args.emit_svg:
        Path(args.emit_svg).write_text(render_svg(ob, trace), encoding="utf-8")
    if args.emit_trace:
        Path(args.emit_trace).write_text(dump_trace(trace), encoding="utf-8")
    out.write(ob.to_json())
    if not report:
        for line in report.lines():
            print(line, file=err)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
