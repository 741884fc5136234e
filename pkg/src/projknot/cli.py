"""projknot: command-line front end.

    projknot [--json] [--quiet] <info|group|homology|classify|lift|selflink> FILE...

With several files and --json, one JSON record is written per line.
Exit codes: 0 success, 2 parse or I/O error, 3 invalid diagram,
4 precondition failure (selflink on a knot with connected preimage).
"""

import argparse
import json
import sys

from projknot.classify import classify
from projknot.cover import lift_diagram, lift_table, orient, pd_code, self_linking
from projknot.diagram import checkerboard, components, homology_class, trace_faces
from projknot.errors import ParseError, PreconditionError, ValidationError
from projknot.homology import check_homology_dichotomy, h1_from_presentation
from projknot.pld import load_pld
from projknot.presentation import dehn_presentation
from projknot.tietze import SimplifyBudget, recognize, simplify

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_PRECONDITION = 0, 2, 3, 4


def _budget(args):
    return SimplifyBudget(max_passes=args.max_passes)


def cmd_info(d, args):
    faces = trace_faces(d)
    col = checkerboard(d, faces)
    comps = components(d)
    record = {
        "boundary_count": d.boundary_count,
        "crossings": len(d.crossings),
        "faces": [{"index": f.index, "symbol": f.symbol, "color": col[f.index]} for f in faces],
        "components": [
            {"index": c.index, "boundary_points": len(c.endpoints), "homology_class": homology_class(d, c)}
            for c in comps
        ],
    }
    lines = [
        f"boundary points: {d.boundary_count}",
        f"crossings: {len(d.crossings)}",
        f"faces: {len(faces)} ({' '.join(f'{f.symbol}:{col[f.index]}' for f in faces)})",
        f"components: {len(comps)}",
    ]
    for c in record["components"]:
        lines.append(f"  component {c['index']}: {c['boundary_points']} boundary points, "
                     f"homology class {c['homology_class']}")
    return record, lines


def cmd_group(d, args):
    p = dehn_presentation(d, merge_equal=args.merge_equal, classical=args.classical)
    steps = []
    if not args.raw:
        p = simplify(p, _budget(args), trace=steps if args.trace else None)
    record = {
        "mode": "raw" if args.raw else "simplified",
        "presentation": p.to_dict(),
        "text": p.to_text(),
        "recognized": recognize(p).kind,
        "incomplete": p.incomplete,
    }
    lines = []
    if args.trace:
        record["trace"] = [{"step": msg, "text": q.to_text()} for msg, q in steps]
        lines += [f"{msg}: {q.to_text()}" for msg, q in steps]
    lines.append(p.to_text())
    if p.incomplete:
        lines.append("incomplete: simplification budget exhausted")
    return record, lines


def cmd_homology(d, args):
    h1 = h1_from_presentation(dehn_presentation(d))
    record = {"h1": h1.to_dict(), "text": str(h1)}
    lines = [str(h1)]
    if len(components(d)) == 1:
        check = check_homology_dichotomy(d)
        record["dichotomy"] = {
            "homology_class": check["homology_class"],
            "expected": str(check["expected"]),
            "agree": check["agree"],
        }
        verdict = "agrees" if check["agree"] else "DISAGREES"
        lines.append(f"homology class {check['homology_class']}: expected {check['expected']}, {verdict}")
    return record, lines


def cmd_classify(d, args):
    v = classify(d, _budget(args))
    return v.to_dict(), [v.summary()] + [f"  {e['rule']} [{e['citation']}]" for e in v.evidence]


def cmd_lift(d, args):
    od = orient(lift_diagram(d))
    pd = [f"X({','.join(map(str, x))})" for x in pd_code(od)]
    table = lift_table(od)
    return {"pd": pd, "table": table}, pd + [json.dumps(table)]


def cmd_selflink(d, args):
    sl = self_linking(d)
    return {"self_linking": sl}, [str(sl)]


COMMANDS = {
    "info": cmd_info,
    "group": cmd_group,
    "homology": cmd_homology,
    "classify": cmd_classify,
    "lift": cmd_lift,
    "selflink": cmd_selflink,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="newline-delimited JSON records")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="no output on success, report only through the exit code")
    parser = argparse.ArgumentParser(prog="projknot", parents=[common],
                                     description="Invariants of projective link diagrams.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("files", nargs="+", metavar="FILE")
        if name in ("group", "classify"):
            sp.add_argument("--max-passes", type=int, default=SimplifyBudget().max_passes)
        if name == "group":
            mode = sp.add_mutually_exclusive_group()
            mode.add_argument("--raw", action="store_true", help="presentation before simplification")
            mode.add_argument("--simplified", action="store_true", help="simplified presentation (default)")
            sp.add_argument("--classical", action="store_true",
                            help="drop the exterior generator (diagrams without boundary points)")
            sp.add_argument("--merge-equal", action="store_true",
                            help="fold 'equal' boundary relations into the symbols")
            sp.add_argument("--trace", action="store_true", help="show every Tietze step")
    return parser


def run_one(path, args):
    try:
        d = load_pld(path)
        record, lines = COMMANDS[args.command](d, args)
        return EXIT_OK, record, lines
    except OSError as err:
        code, kind, msg = EXIT_PARSE, "io", f"{err.strerror or err}: {path}"
    except ParseError as err:
        code, kind, msg = EXIT_PARSE, "parse", str(err)
    except ValidationError as err:
        code, kind, msg = EXIT_INVALID, "validation", str(err)
    except PreconditionError as err:
        code, kind, msg = EXIT_PRECONDITION, "precondition", str(err)
    return code, {"error": {"kind": kind, "message": msg, "exit_code": code}}, [f"error: {msg}"]


def main(argv=None):
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)
    status = EXIT_OK
    many = len(args.files) > 1
    for path in args.files:
        code, record, lines = run_one(path, args)
        status = max(status, code)
        if as_json:
            if not quiet:
                out = {"file": path, "command": args.command}
                out.update(record)
                print(json.dumps(out))
            continue
        if code:
            print(f"{path}: {lines[0]}", file=sys.stderr)
            continue
        if quiet:
            continue
        if many:
            print(f"== {path}")
        for line in lines:
            print(line)
    return status


if __name__ == "__main__":
    sys.exit(main())
