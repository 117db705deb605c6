"""Command-line surface.

Exit codes: 0 success, 1 usage, 2 input format, 3 precondition violated,
4 budget exceeded, 5 internal contradiction (a guaranteed construction failed
verification, which is always a bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from .automorphisms import (
    automorphisms,
    involution_free_reduction,
    orbits,
)
from .classify import classify
from .errors import (
    BudgetError,
    InputFormatError,
    InternalContradictionError,
    ParhomError,
    PreconditionError,
)
from .gadgets import parse_gadget, serialize_gadget, verify_hardness_gadget
from .gadgetfind import find_hardness_gadget
from .graphs import (
    edge_on_two_cycles,
    is_cactus,
    parse_graph,
    serialize_graph,
    to_dot,
)
from .homcount import (
    count_homs,
    count_homs_mod2,
    parse_pin_file,
    serialize_pin,
)
from .reduction import build_g_gamma, verify_reduction
from .selfcheck import FULL_SIZES, QUICK_SIZES, format_report, run_selfcheck

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_PRECONDITION = 3
EXIT_BUDGET = 4
EXIT_INTERNAL = 5


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str):
    return parse_graph(_read(path))


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
        return
    for key, value in payload.items():
        if isinstance(value, dict):
            print(f"{key}: " + " ".join(f"{a}={b}" for a, b in value.items()))
        elif isinstance(value, list) and all(isinstance(x, int) for x in value):
            print(f"{key}: " + " ".join(str(x) for x in value))
        elif isinstance(value, list):
            for idx, item in enumerate(value):
                print(f"{key}[{idx}]: {item}")
        else:
            print(f"{key}: {value}")


def _perm_text(perm) -> str:
    return " ".join(str(v) for v in perm)


# -- subcommand handlers -----------------------------------------------------------


def cmd_is_cactus(args) -> int:
    g = _load_graph(args.graph)
    ok = is_cactus(g)
    payload = {"cactus": ok}
    if not ok:
        payload["offending_edge"] = list(edge_on_two_cycles(g))
    _emit(payload, args.json)
    return 0


def cmd_reduce(args) -> int:
    g = _load_graph(args.graph)
    trace = involution_free_reduction(g)
    payload = {
        "steps": len(trace.steps),
        "involutions": [_perm_text(step.involution) for step in trace.steps],
        "final_n": trace.final.n,
        "final_m": trace.final.m,
        "final_edges": [f"{u} {v}" for u, v in trace.final.edges],
    }
    _emit(payload, args.json)
    return 0


def cmd_aut(args) -> int:
    g = _load_graph(args.graph)
    perms = automorphisms(g, cap=args.cap)
    _emit({"count": len(perms), "automorphisms": [_perm_text(p) for p in perms]}, args.json)
    return 0


def cmd_orbits(args) -> int:
    g = _load_graph(args.graph)
    parts = orbits(g, cap=args.cap)
    _emit({"orbits": [" ".join(map(str, sorted(o))) for o in parts]}, args.json)
    return 0


def cmd_count(args) -> int:
    g = _load_graph(args.source)
    h = _load_graph(args.target)
    pin = parse_pin_file(_read(args.pin)) if args.pin else None
    if args.mod2:
        value = count_homs_mod2(g, h, pin, method=args.method)
        _emit({"parity": value}, args.json)
    else:
        value = count_homs(g, h, pin, method=args.method)
        _emit({"count": value}, args.json)
    return 0


def cmd_find_gadget(args) -> int:
    h = _load_graph(args.graph)
    gadget = find_hardness_gadget(h)
    text = serialize_gadget(gadget)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        _emit({"written": args.out}, args.json)
    elif args.json:
        _emit(_gadget_payload(gadget), args.json)
    else:
        sys.stdout.write(text)
    return 0


def _gadget_payload(gadget) -> dict:
    return {
        "beta": gadget.beta,
        "s": gadget.s,
        "t": gadget.t,
        "i": gadget.i,
        "O": sorted(gadget.O),
        "K": sorted(gadget.K),
        "k": {str(u): gadget.k[u] for u in sorted(gadget.K)},
        "w": {str(u): gadget.w[u] for u in sorted(gadget.K)},
    }


def cmd_verify_gadget(args) -> int:
    h = _load_graph(args.graph)
    gadget = parse_gadget(_read(args.gadget))
    bad = verify_hardness_gadget(h, gadget)
    _emit({"ok": not bad, "violations": bad}, args.json)
    return 0 if not bad else EXIT_PRECONDITION


def _gadget_for(args, h):
    if args.gadget:
        gadget = parse_gadget(_read(args.gadget))
        bad = verify_hardness_gadget(h, gadget)
        if bad:
            raise PreconditionError(f"supplied gadget does not verify: {bad}")
        return gadget
    return find_hardness_gadget(h)


def cmd_build_reduction(args) -> int:
    g = _load_graph(args.source)
    h = _load_graph(args.target)
    gadget = _gadget_for(args, h)
    instance = build_g_gamma(g, h, gadget)
    graph_path = args.out + ".edges"
    pin_path = args.out + ".pins"
    with open(graph_path, "w") as fh:
        fh.write(serialize_graph(instance.graph))
    with open(pin_path, "w") as fh:
        fh.write(serialize_pin(instance.pin))
    _emit(
        {
            "vertices": instance.graph.n,
            "edges": instance.graph.m,
            "graph_file": graph_path,
            "pin_file": pin_path,
        },
        args.json,
    )
    return 0


def cmd_verify_reduction(args) -> int:
    g = _load_graph(args.source)
    h = _load_graph(args.target)
    gadget = _gadget_for(args, h)
    report = verify_reduction(g, h, gadget)
    _emit(
        {
            "independent_set_parity": report.lhs,
            "pinned_hom_parity": report.rhs,
            "verdict": "ok" if report.ok else "mismatch",
        },
        args.json,
    )
    return 0 if report.ok else EXIT_INTERNAL


def cmd_classify(args) -> int:
    h = _load_graph(args.graph)
    result = classify(h)
    payload = {
        "verdict": result.verdict,
        "reduction_steps": len(result.trace.steps),
        "reduction_vertices": result.trace.final.n,
    }
    if result.gadget is not None:
        payload.update(_gadget_payload(result.gadget))
        payload["witness_vertices"] = list(result.witness_vertices)
    _emit(payload, args.json)
    return 0


def cmd_dot(args) -> int:
    g = _load_graph(args.graph)
    sys.stdout.write(to_dot(g, root=args.root))
    return 0


def cmd_selfcheck(args) -> int:
    sizes = QUICK_SIZES if args.quick else FULL_SIZES
    results = run_selfcheck(seed=args.seed, sizes=sizes, jobs=args.jobs)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "name": r.name,
                        "ok": r.ok,
                        "seconds": round(r.seconds, 3),
                        "details": r.details,
                    }
                    for r in results
                ]
            )
        )
    else:
        print(format_report(results))
    if args.report:
        from .report import write_report

        paths = write_report(results, args.report)
        if not args.json:
            for path in paths:
                print(f"wrote: {path}")
    return 0 if all(r.ok for r in results) else EXIT_INTERNAL


# -- wiring -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="parhom",
        description="Parity homomorphism counting to cactus graphs: classify, "
        "count, find and verify hardness gadgets, build reductions.",
    )
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("is-cactus", help="test the every-edge-on-at-most-one-cycle condition")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_is_cactus)

    p = sub.add_parser("reduce", help="involution-free reduction with trace")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_reduce)

    p = sub.add_parser("aut", help="enumerate automorphisms")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=None, help="vertex cap for the search")
    p.set_defaults(fn=cmd_aut)

    p = sub.add_parser("orbits", help="orbit partition under the automorphism group")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("count", help="count homomorphisms source -> target")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--mod2", action="store_true")
    p.add_argument("--pin", help="pin file: lines 'v: h1 h2 ...'")
    p.add_argument("--method", choices=("auto", "brute", "treedec"), default="auto")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("find-gadget", help="construct a verified hardness gadget")
    p.add_argument("graph")
    p.add_argument("-o", "--out", help="write the gadget record here")
    p.set_defaults(fn=cmd_find_gadget)

    p = sub.add_parser("verify-gadget", help="check a gadget record against a graph")
    p.add_argument("graph")
    p.add_argument("gadget")
    p.set_defaults(fn=cmd_verify_gadget)

    p = sub.add_parser("build-reduction", help="emit the spliced graph and pin file")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--gadget", help="gadget record (default: find one)")
    p.add_argument("--out", required=True, help="output path prefix")
    p.set_defaults(fn=cmd_build_reduction)

    p = sub.add_parser("verify-reduction", help="check the reduction congruence")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("--gadget")
    p.set_defaults(fn=cmd_verify_reduction)

    p = sub.add_parser("classify", help="tractability verdict with witness")
    p.add_argument("graph")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("dot", help="DOT export for human inspection")
    p.add_argument("graph")
    p.add_argument("--root", type=int, default=None, help="double-circled vertex")
    p.set_defaults(fn=cmd_dot)

    p = sub.add_parser("selfcheck", help="run the acceptance suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--quick", action="store_true", help="reduced sizes")
    p.add_argument("--report", help="write report.csv and figures to this directory")
    p.set_defaults(fn=cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InputFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InternalContradictionError as exc:
        print(f"internal contradiction (bug): {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ParhomError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
