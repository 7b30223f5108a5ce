"""Command line interface: ``colored-partitions <command> ...``.

Exit status: 0 success (or verification passed), 1 verification failed or
an internal check tripped, 2 bad input.  Diagnostics go to stderr as JSON.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bridge import bridge_report
from .colors import color
from .errors import InputError, InternalError
from .forest import dot_export, forest, forest_report, theta
from .bridge import index_split
from .identity import corollary12, default_jobs, verify_identity, verify_inequality
from .io import dump_json, load_json, parts_from_json, parts_to_json, trace_to_json
from .machines import phi_trace, psi_trace
from .partitions import enumerate_set
from .patterns import five_color_families, mine_optimal, symbolize


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _emit(obj, args):
    sys.stdout.write(dump_json(obj, pretty=args.pretty))


def _load_parts(args):
    return parts_from_json(load_json(args.input), args.colors)


def cmd_enumerate(args):
    C = None
    if args.color_product:
        try:
            C = tuple(int(v) for v in args.color_product.split(","))
        except ValueError:
            raise InputError("--color-product takes comma separated integers") from None
        if len(C) != args.colors or min(C) < 0:
            raise InputError("--color-product needs one non-negative exponent per primary color")
    rows = [parts_to_json(lam, args.pretty) for lam in enumerate_set(args.colors, args.size, args.set, C)]
    _emit({"set": args.set, "colors": args.colors, "size": args.size,
           "color_product": list(C) if C else None, "count": len(rows), "partitions": rows}, args)
    return 0


def _machine(args, run):
    parts, n = _load_parts(args)
    tr = run(parts, n)
    if args.trace:
        dump_json(trace_to_json(tr, args.pretty), args.trace, args.pretty)
    _emit({"colors": n, "input": parts_to_json(parts, args.pretty),
           "output": parts_to_json(tr.result, args.pretty)}, args)
    return 0


def cmd_phi(args):
    return _machine(args, phi_trace)


def cmd_psi(args):
    return _machine(args, psi_trace)


def cmd_bridge(args):
    parts, n = _load_parts(args)
    _emit(bridge_report(parts, n), args)
    return 0


def cmd_forest(args):
    parts, n = _load_parts(args)
    rep = forest_report(parts, n)
    if args.dot:
        ip = index_split(parts, n)
        with open(args.dot, "w") as fh:
            fh.write(dot_export(forest(ip, theta(parts, n)), ip))
    if args.json:
        dump_json(rep, args.json, args.pretty)
    _emit(rep, args)
    return 0


def cmd_mine(args):
    pivot = color(3, 4) if args.no_cd_moves else None
    if args.no_cd_moves and args.colors < 4:
        raise InputError("--no-cd-moves needs at least four colors")
    res = mine_optimal(args.colors, args.max_parts, args.max_size, pivot)
    pats = []
    for p in res.patterns:
        sym = symbolize(p)
        entry = {"parts": parts_to_json(p, args.pretty),
                 "word": sym.word() if sym else None,
                 "k": p[-1].size}
        if args.colors == 5:
            entry["families"] = five_color_families(p)
        pats.append(entry)
    doc = {"colors": args.colors, "max_parts": args.max_parts, "max_size": args.max_size,
           "no_cd_moves": bool(args.no_cd_moves), "count": len(pats),
           "families": res.families(), "patterns": pats}
    if args.out:
        dump_json(doc, args.out, args.pretty)
    _emit({k: doc[k] for k in ("colors", "max_parts", "max_size", "no_cd_moves", "count", "families")}, args)
    return 0


def cmd_verify(args):
    jobs = args.jobs or default_jobs()
    if args.inequality:
        rep = verify_inequality(args.colors, args.max_q, jobs)
    else:
        rep = verify_identity(args.colors, args.max_q, args.route, jobs)
    doc = rep.to_json()
    if args.json:
        dump_json(doc, args.json, args.pretty)
    summary = {k: doc[k] for k in ("kind", "colors", "max_q", "route", "ok", "checked", "witness")}
    summary["failures"] = doc["failures"][:20]
    _emit(summary, args)
    return 0 if rep.ok else 1


def cmd_corollary12(args):
    r = corollary12(args.size)
    _emit({"size": r["size"], "O": [list(p) for p in r["O"]], "E1": [list(p) for p in r["E1"]],
           "counts": {"O": len(r["O"]), "E1": len(r["E1"])}}, args)
    return 0 if len(r["O"]) == len(r["E1"]) else 1


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise InputError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise InputError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="colored-partitions", description=__doc__.splitlines()[0])
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent JSON and use letter color names")
    common.add_argument("--jobs", type=_positive, default=None, help="worker processes (verify)")
    sub = top.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions of one size")
    p.add_argument("--set", choices=["O", "E", "E2"], required=True)
    p.add_argument("--colors", type=_positive, required=True)
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--color-product", default=None, help="exponents, e.g. 1,0,2,1")
    p.set_defaults(run=cmd_enumerate)

    for name, fn in (("phi", cmd_phi), ("psi", cmd_psi)):
        p = sub.add_parser(name, parents=[common], help=f"run the {name} machine")
        p.add_argument("--input", required=True)
        p.add_argument("--colors", type=_positive, default=None)
        p.add_argument("--trace", default=None, help="write the step trace here")
        p.set_defaults(run=fn)

    p = sub.add_parser("bridge", parents=[common], help="bridges and image membership")
    p.add_argument("--input", required=True)
    p.add_argument("--colors", type=_positive, default=None)
    p.set_defaults(run=cmd_bridge)

    p = sub.add_parser("forest", parents=[common], help="final positions, Motzkin word, forest")
    p.add_argument("--input", required=True)
    p.add_argument("--colors", type=_positive, default=None)
    p.add_argument("--dot", default=None)
    p.add_argument("--json", default=None)
    p.set_defaults(run=cmd_forest)

    p = sub.add_parser("mine", parents=[common], help="search optimal forbidden patterns")
    p.add_argument("--colors", type=_positive, required=True)
    p.add_argument("--max-parts", type=_positive, required=True)
    p.add_argument("--max-size", type=_positive, required=True)
    p.add_argument("--no-cd-moves", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(run=cmd_mine)

    p = sub.add_parser("verify", parents=[common], help="check the identity or the inequality")
    p.add_argument("--colors", type=_positive, required=True)
    p.add_argument("--max-q", type=_positive, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--identity", action="store_true")
    g.add_argument("--inequality", action="store_true")
    p.add_argument("--route", choices=["cond2", "cond3", "roundtrip", "all"], default="all")
    p.add_argument("--json", default=None)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("corollary12", parents=[common], help="both sides of the mod 12 identity")
    p.add_argument("--size", type=_positive, required=True)
    p.set_defaults(run=cmd_corollary12)
    return top


def _fail(kind, message, code):
    sys.stderr.write(json.dumps({"error": kind, "message": str(message)}) + "\n")
    return code


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    if not argv:
        sys.stderr.write(parser.format_usage())
        return 2
    try:
        args = parser.parse_args(argv)
        if getattr(args, "run", None) is None:
            raise InputError("no command given")
        return args.run(args)
    except InputError as e:
        return _fail("input", e, 2)
    except InternalError as e:
        return _fail("internal", e, 1)
    except OSError as e:
        return _fail("io", e, 2)


if __name__ == "__main__":
    sys.exit(main())
