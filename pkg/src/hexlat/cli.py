"""Command-line entry point: ``hexlat <command> ...``.

Exit codes: 0 success, 1 usage, 2 a mathematical check failed, 3 IO or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import classify as cl
from . import diagram as dg
from . import io_codec, render, smooth, synth
from . import variety_exact as vx
from .errors import (
    HexlatError, NumericError, ParseError, RangeError, ValidationError,
)

USAGE, MATH, IO = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


class Failed(Exception):
    """A check ran and came out negative."""


def parse_offset(text: str):
    """'X/Y,U/V' -> exact rational vector."""
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"offset must look like X/Y,U/V, got {text!r}")
    try:
        return tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational in offset {text!r}") from None


def _write(path, data: bytes):
    Path(path).write_bytes(data)


def _emit(args, obj, line):
    print(json.dumps(obj, indent=2) if getattr(args, "json", False) else line)


def _summary_line(d):
    inv = dg.invariants(d)
    return inv, f"b={inv.b}, g={inv.genus}"


# ---------------------------------------------------------------------------
# commands


def cmd_synth(args):
    d = synth.family(args.family, args.degree, method=args.method)
    _write(args.output, io_codec.save(d))
    inv, tail = _summary_line(d)
    print(f"({args.family.upper()})_{args.degree}: {tail}, written to {args.output}")


def cmd_classify(args):
    d = io_codec.load_file(args.file, check=False)
    verdict = cl.classify(d)
    if isinstance(verdict, cl.NotLattice):
        _emit(args, {"verdict": "NotLattice", "problems": verdict.report.violations}, str(verdict))
        raise Failed()
    inv = dg.invariants(d)
    _emit(args, {"verdict": str(verdict), "invariants": inv.as_dict()},
          f"{verdict}, b={inv.b}, g={inv.genus}")


def cmd_smooth(args):
    d1, d2 = io_codec.load_file(args.first), io_codec.load_file(args.second)
    o = smooth.overlay(dg.ensure_oriented(d1), dg.ensure_oriented(d2), args.offset)
    out = smooth.smooth_all(o)
    _write(args.output, io_codec.save(out))
    print(f"{len(o.crossings)} crossings smoothed, b={out.bridge_number}, written to {args.output}")


def cmd_recursion(args):
    log = []
    d = smooth.build_by_recursion(args.family, args.degree, log)
    target = synth.family(args.family, args.degree)
    same = dg.equivalent(d, target)
    if args.output:
        _write(args.output, io_codec.save(d))
    steps = [{"target": f"({s.target})_{s.degree}", "crossings": s.crossings, "expected": s.expected,
              "b": s.bridge_points} for s in log]
    if args.json:
        print(json.dumps({"steps": steps, "equivalent": same}, indent=2))
    else:
        for s in steps:
            print(f"{s['target']}: {s['crossings']} crossings, b={s['b']}")
        print(f"equivalent to ({args.family.upper()})_{args.degree}: {'yes' if same else 'no'}")
    if not same:
        raise Failed()


def cmd_variety(args):
    kind = vx.VarietyKind.parse(args.kind)
    d = vx.variety_arcs(kind, args.degree)
    if args.output:
        _write(args.output, io_codec.save(d, check=False))
    if not args.verify:
        print(f"{len(d.arcs)} arcs, b={d.bridge_number}")
        return
    fam = "A" if kind is vx.VarietyKind.V else "E"
    report = dg.validate(d)
    contacts = vx.interior_contacts(d)
    checks = {"valid": report.ok, "interior-disjoint": not contacts}
    if report.ok:
        ab = dg.invariants(d).ab
        want = (1, args.degree - 1) if fam == "A" else (args.degree - 1, 1)
        checks["ab class"] = (ab.p, ab.q) == want
        checks["equivalent"] = dg.equivalent(d, synth.family(fam, args.degree))
    if args.json:
        print(json.dumps(checks, indent=2))
    else:
        for name, ok in checks.items():
            if name != "equivalent":
                print(f"{name}: {'yes' if ok else 'no'}")
        print(f"equivalent to ({fam})_{args.degree}: {'yes' if checks.get('equivalent') else 'no'}")
    if not all(checks.values()) or "equivalent" not in checks:
        raise Failed()


def cmd_verify_appendix(args):
    rows = cl.enumerate_cases(args.range, workers=cl.threads())
    summary = cl.summarize(rows, args.range)
    if args.csv:
        Path(args.csv).write_text(cl.rows_to_csv(rows))
    verdict = "MATCH" if summary.ok else "MISMATCH"
    if args.json:
        print(cl.summary_to_json(summary))
    else:
        print(f"{len(summary.types)} surviving parametric types, {len(summary.classes)} classes: {verdict}")
        for p in summary.problems:
            print(f"  {p}")
    if not summary.ok:
        raise Failed()


def cmd_numeric(args):
    from . import variety_numeric as vn

    cfg = vn.ToleranceConfig(seed=args.seed)
    what = args.what
    if what == "arc":
        r = vn.arc_solution(args.t, cfg)
        obj = {"t": args.t, "r0": r.r0, "endpoint_deviation": r.endpoint_deviation,
               "max_residual": r.max_residual, "injectivity_violations": r.injectivity_violations}
        _emit(args, obj, f"r0={r.r0:.12g}, endpoint deviation {r.endpoint_deviation:.2e}, "
                         f"max residual {r.max_residual:.2e}, injectivity violations {r.injectivity_violations}")
        ok = r.ok and r.endpoint_deviation < cfg.match_tol
    elif what == "rd-slice":
        lo, hi = vn.rd_slice(args.d, args.s, cfg)
        _emit(args, {"d": args.d, "s": args.s, "interval": [lo, hi]}, f"[{lo:.12g}, {hi:.12g}]")
        ok = True
    elif what == "sigma":
        s = vn.sigma_points(args.d, cfg)
        _emit(args, {"d": args.d, "count": s.count, "max_deviation": s.max_deviation,
                     "points": s.numeric},
              f"{s.count} points on the central torus, max deviation from exact {s.max_deviation:.2e}")
        ok = True
    elif what == "trace":
        traces = vn.trace_h1_arcs(args.d, cfg)
        dev = max(t.endpoint_deviation for t in traces)
        sep = vn.min_separation(traces)
        res = max(t.max_residual for t in traces)
        if args.csv:
            Path(args.csv).write_text(vn.traces_to_csv(traces, args.d))
        if args.plot:
            from . import report

            report.plot_traces(traces, args.d, args.plot)
        _emit(args, {"d": args.d, "traces": len(traces), "endpoint_deviation": dev,
                     "min_separation": sep if sep != float("inf") else None, "max_residual": res},
              f"{len(traces)} traces, endpoint deviation {dev:.2e}, min separation {sep:.3g}, "
              f"max residual {res:.2e}")
        ok = dev < cfg.match_tol
    elif what == "smoothness":
        s = vn.smoothness_check(args.d, cfg, samples=args.samples)
        ok = s.min_gradient > cfg.grad_floor and s.critical_min_value > 0
        _emit(args, {"d": args.d, "samples": s.samples, "points": s.points,
                     "min_gradient": s.min_gradient, "max_residual": s.max_residual,
                     "min_critical_value": s.critical_min_value},
              f"min |df| = {s.min_gradient:.6g} over {s.points} points, "
              f"min |f| at critical points {s.critical_min_value:.6g}")
    elif what == "cone":
        counts = vn.cone_slice_counts(args.d, grid=args.grid, cfg=cfg)
        want = 2 * vx.sheet_count(args.d)
        bad = {k: v for k, v in counts.items() if v != want}
        ok = bool(counts) and not bad
        _emit(args, {"d": args.d, "slices": len(counts), "expected": want, "mismatches": len(bad)},
              f"{len(counts)} interior slices, {len(counts) - len(bad)} with {want} points")
        if args.plot:
            from . import report

            report.plot_region(args.d, args.plot)
    else:  # pragma: no cover - argparse restricts choices
        raise RangeError(what)
    if not ok:
        raise Failed()


def cmd_render(args):
    d = io_codec.load_file(args.file)
    _write(args.output, render.render_svg(d, domain=args.domain, show_foliation=args.foliation))
    print(f"{render.element_count(d, args.domain)} arc pieces drawn to {args.output}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hexlat", description="Hexagonal lattice diagrams on the central torus.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("synth", help="write a family diagram")
    s.add_argument("--family", required=True, choices=list("ABCDEFGHabcdefgh"))
    s.add_argument("--degree", required=True, type=int)
    s.add_argument("--method", default="regular", choices=["regular", "resolve"])
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(fn=cmd_synth)

    s = sub.add_parser("classify", help="invariants and family of a diagram file")
    s.add_argument("file")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("smooth", help="overlay two diagrams and smooth the crossings")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("--offset", required=True, type=parse_offset, help="X/Y,U/V")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(fn=cmd_smooth)

    s = sub.add_parser("recursion", help="build a family by repeated smoothing")
    s.add_argument("--family", required=True, choices=list("ABCDEFGHabcdefgh"))
    s.add_argument("--degree", required=True, type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_recursion)

    s = sub.add_parser("variety", help="exact diagram of V_d or V'_d")
    s.add_argument("--kind", required=True, choices=["v", "vprime"])
    s.add_argument("--degree", required=True, type=int)
    s.add_argument("-o", "--output")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_variety)

    s = sub.add_parser("verify-appendix", help="rerun the case enumeration and compare with the table")
    s.add_argument("--range", type=int, default=25)
    s.add_argument("--csv")
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_verify_appendix)

    s = sub.add_parser("numeric", help="floating-point checks of the variety picture")
    nsub = s.add_subparsers(dest="what", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true")
    common.add_argument("--seed", type=int, default=0)
    n = nsub.add_parser("arc", parents=[common])
    n.add_argument("--t", type=float, required=True)
    n = nsub.add_parser("rd-slice", parents=[common])
    n.add_argument("--d", type=int, required=True)
    n.add_argument("--s", type=float, required=True)
    n = nsub.add_parser("sigma", parents=[common])
    n.add_argument("--d", type=int, required=True)
    n = nsub.add_parser("trace", parents=[common])
    n.add_argument("--d", type=int, required=True)
    n.add_argument("--csv")
    n.add_argument("--plot", help="figure file (needs matplotlib)")
    n = nsub.add_parser("smoothness", parents=[common])
    n.add_argument("--d", type=int, required=True)
    n.add_argument("--samples", type=int, default=10_000)
    n = nsub.add_parser("cone", parents=[common])
    n.add_argument("--d", type=int, required=True)
    n.add_argument("--grid", type=int, default=20)
    n.add_argument("--plot", help="figure of R_d (needs matplotlib)")
    s.set_defaults(fn=cmd_numeric)

    s = sub.add_parser("render", help="draw a diagram file as SVG")
    s.add_argument("file")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--domain", default="square", choices=["square", "hexagon"])
    s.add_argument("--foliation", action="store_true")
    s.set_defaults(fn=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.fn(args)
    except Failed:
        return MATH
    except (ParseError, ValidationError, OSError) as e:
        print(f"hexlat: {e}", file=sys.stderr)
        return IO
    except RangeError as e:
        print(f"hexlat: {e}", file=sys.stderr)
        return USAGE
    except (HexlatError, NumericError) as e:
        print(f"hexlat: {type(e).__name__}: {e}", file=sys.stderr)
        return MATH
    return 0


def run():
    sys.exit(main())
