"""Command line front end.

Six subcommands over one file format (see fileformat):

  trace       boundary circles of a ribbon graph, with genus
  validate    surface invariants of an embedding
  poly        one polynomial, canonically printed
  identities  the cross-polynomial identity suite, RESULT lines
  states      the medial state sweep, RESULT lines
  classify    edge classes (bridge / quasi-bridge / quasi-loop / ordinary)

Commands that need a filled surface accept a bare rotation system and
close every boundary circle with a disc, noting so on stderr.  Exit
status: 0 all good, 1 a check failed, 2 bad input or unusable request.
"""

from __future__ import annotations

import argparse
import sys

from . import embedding as em
from . import fileformat as ff
from . import matroid as mt
from . import poly
from . import ribbon as rb
from . import states as st

_IO_NAMES = {rb.IN: "in", rb.OUT: "out"}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _embedded(parsed: ff.ParsedInput) -> em.EmbeddedGraph:
    if parsed.embedded is not None:
        return parsed.embedded
    print("note: no regions given; closing every circle with a disc",
          file=sys.stderr)
    return em.with_disc_regions(parsed.rotation)


def _parse_subset(text: str, rs: rb.RotationSystem) -> frozenset:
    if not text.strip():
        return frozenset()
    try:
        ids = frozenset(int(t) for t in text.split(","))
    except ValueError:
        raise ff.FormatError(f"bad subset {text!r}: comma-separated edge ids")
    stray = ids - rs.edge_set()
    if stray:
        raise ff.FormatError(f"subset names unknown edges {sorted(stray)}")
    return ids


def _fmt_visit(p) -> str:
    e, end, io = p
    return f"{e}.{end}/{_IO_NAMES[io]}"


def cmd_trace(args) -> int:
    parsed = ff.parse(_read_text(args.file))
    rs = parsed.rotation
    subset = rs.edge_set() if args.subset is None else _parse_subset(args.subset, rs)
    trace = rb.trace_boundary(rs, subset)
    print(f"f {trace.f}")
    print(f"euler-genus {rb.euler_genus(rs, subset)}")
    if args.subset is None:
        print(f"orientable {'yes' if rb.is_orientable(rs) else 'no'}")
    for i, circle in enumerate(trace.circles):
        if circle.home is not None:
            v, k = circle.home
            print(f"circle {i}: empty at vertex {v} sector {k}")
        else:
            print(f"circle {i}: " + " ".join(_fmt_visit(p) for p in circle.visits))
    return 0


def cmd_validate(args) -> int:
    emb = _embedded(ff.parse(_read_text(args.file)))
    report = em.validate(emb)
    print(f"components {report.components}")
    print(f"euler-characteristic {report.euler_characteristic}")
    print(f"euler-genus {report.euler_genus}")
    print(f"cellular {'yes' if report.cellular else 'no'}")
    return 0


_EXPANSION_ONLY = ("tutte", "br", "krushkal", "dichromatic")


def cmd_poly(args) -> int:
    parsed = ff.parse(_read_text(args.file))
    which, method, cap = args.which, args.method, args.cap
    if which in _EXPANSION_ONLY and method == "recursion":
        raise ff.FormatError(f"--which {which} only supports --method expansion")

    if which == "tutte":
        result = poly.tutte(mt.cycle_matroid(parsed.rotation.underlying()), cap)
    elif which == "dichromatic":
        result = poly.dichromatic(parsed.rotation.underlying(), cap)
    elif which == "br":
        result = poly.bollobas_riordan(parsed.rotation, cap)
    elif which == "lv":
        if parsed.embedded is not None and not em.validate(parsed.embedded).cellular:
            raise ff.FormatError(
                "not a cellular embedding; --which lv-ext handles these")
        result = poly.las_vergnas_cellular(parsed.rotation, method, cap)
    elif which == "lv-ext":
        result = poly.las_vergnas_embedded(_embedded(parsed), method, cap)
    elif which == "krushkal":
        result = poly.krushkal(_embedded(parsed), cap)
    else:  # pragma: no cover - argparse screens choices
        raise ff.FormatError(f"unknown polynomial {which!r}")
    print(result)
    return 0


def _print_results(results) -> int:
    failed = 0
    for res in results:
        print(res.line())
        if res.failed:
            failed += 1
    return 1 if failed else 0


def cmd_identities(args) -> int:
    emb = _embedded(ff.parse(_read_text(args.file)))
    results = []
    if args.suite in ("all", "poly"):
        results.extend(poly.verify_identities(emb, seed=args.seed,
                                              points=args.points, cap=args.cap))
    if args.suite in ("all", "states"):
        # State checks run on the rotation alone; inputs they cannot cover
        # (pinched, disconnected, over the sweep cap) skip rather than abort
        # so the polynomial half of the suite still reports.
        try:
            results.extend(st.run_state_checks(emb.rotation,
                                               sweep_cap=args.sweep_cap,
                                               cap=args.cap))
        except (st.StateError, rb.RibbonError, poly.CapError) as exc:
            results.append(poly.CheckResult("state-checks", "skip", str(exc)))
    return _print_results(results)


def cmd_states(args) -> int:
    parsed = ff.parse(_read_text(args.file))
    rs = parsed.rotation
    profile = st.noncrossing_profile(rs, args.cap)
    for k in sorted(profile):
        print(f"crossing-free curves {k}: {profile[k]}")
    results = st.run_state_checks(rs, sweep_cap=args.sweep_cap, cap=args.cap)
    return _print_results(results)


_CLASS_LABEL = {
    em.BRIDGE: "bridge",
    em.QUASI_BRIDGE_ONLY: "quasi-bridge",
    em.QUASI_LOOP: "quasi-loop",
    em.ORDINARY: "ordinary",
}


def cmd_classify(args) -> int:
    emb = _embedded(ff.parse(_read_text(args.file)))
    scheme = em.derive_dagger(emb)
    for e in emb.rotation.edges:
        print(f"edge {e}: {_CLASS_LABEL[em.classify_edge(emb, e, scheme)]}")
    return 0


def _add_file(p) -> None:
    p.add_argument("file", help="input file, or - for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topopoly",
        description="polynomials of graphs embedded in surfaces")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", help="boundary circles and genus")
    _add_file(p)
    p.add_argument("--subset", default=None,
                   help="comma-separated edge ids (default: all)")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("validate", help="surface invariants")
    _add_file(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("poly", help="compute one polynomial")
    _add_file(p)
    p.add_argument("--which", required=True,
                   choices=("tutte", "lv", "lv-ext", "br", "krushkal",
                            "dichromatic"))
    p.add_argument("--method", default="expansion",
                   choices=("expansion", "recursion"))
    p.add_argument("--cap", type=int, default=poly.EXPANSION_CAP,
                   help="edge cap on subset expansion "
                        f"(default {poly.EXPANSION_CAP})")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("identities", help="cross-polynomial identity suite")
    _add_file(p)
    p.add_argument("--suite", default="all", choices=("all", "poly", "states"),
                   help="which checks to run (default all)")
    p.add_argument("--seed", type=int, default=11)
    p.add_argument("--points", type=int, default=8,
                   help="sample points per numeric identity (default 8)")
    p.add_argument("--cap", type=int, default=poly.IDENTITY_CAP,
                   help=f"edge cap for the suite (default {poly.IDENTITY_CAP})")
    p.add_argument("--sweep-cap", type=int, default=st.STATE_SWEEP_CAP,
                   help="edge cap on the 3^e state sweep "
                        f"(default {st.STATE_SWEEP_CAP})")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("states", help="medial state sweep")
    _add_file(p)
    p.add_argument("--sweep-cap", type=int, default=st.STATE_SWEEP_CAP,
                   help="edge cap on the 3^e state sweep "
                        f"(default {st.STATE_SWEEP_CAP})")
    p.add_argument("--cap", type=int, default=poly.EXPANSION_CAP,
                   help="edge cap on subset expansions "
                        f"(default {poly.EXPANSION_CAP})")
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("classify", help="edge classes in the surface")
    _add_file(p)
    p.set_defaults(func=cmd_classify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
