"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 instance refused (cap exceeded,
timeout, non-squarefree initial ideal), 4 invariant violation.
"""

import argparse
import json
import os
import sys

from . import fixtures
from .bounds import FormulaConflict, report
from .classes import classify
from .connectivity import vertex_connectivity
from .corpus import CorpusConfig, run_corpus, write_report
from .cutsets import enumerate_cutsets
from .errors import CapExceeded, GBEIError, GBTimeout, InvalidGraph, NotSquarefree
from .graph import components, free_vertices, invariants, is_connected, parse_graph
from .symbolic import (MonomialOrder, build_ideal, build_prime_component, default_order,
                       export_cas, groebner_basis, ideal_to_text, intersect_all)

EXIT_USAGE, EXIT_CAP, EXIT_VIOLATION = 2, 3, 4


class UsageError(Exception):
    pass


def load_graph(spec):
    """A fixture name, a path to a JSON/text graph file, or ``-`` for stdin."""
    if spec == "-":
        return parse_graph(sys.stdin.read())
    if os.path.exists(spec):
        with open(spec) as fh:
            return parse_graph(fh.read())
    try:
        return fixtures.get(spec)
    except KeyError:
        raise UsageError(f"{spec!r} is neither a file nor a fixture ({', '.join(fixtures.names())})")


def _order(name):
    return default_order() if name is None else MonomialOrder(name)


def _emit(obj):
    print(json.dumps(obj, indent=1, sort_keys=True))


def cmd_stats(args):
    g = load_graph(args.graph)
    inv = invariants(g)
    out = {"graph": json.loads(g.to_json()), "invariants": inv.as_dict(),
           "components": [sorted(c) for c in components(g)], "freeVertices": free_vertices(g)}
    if is_connected(g):
        res = vertex_connectivity(g)
        out["separator"] = sorted(res.witness_separator) if res.witness_separator else None
    _emit(out)


def cmd_classify(args):
    _emit(classify(load_graph(args.graph)).as_dict())


def cmd_bounds(args):
    rep = report(args.m, load_graph(args.graph), oracle=False if args.no_oracle else "auto")
    _emit(rep.as_dict())


def cmd_depth(args):
    g = load_graph(args.graph)
    rep = report(args.m, g, oracle=True if args.oracle else "auto", order=_order(args.order))
    if args.oracle:
        out = dict(rep.oracle)
        out["closedForm"] = None if rep.exact_source == "Oracle" else {
            "value": rep.exact, "source": rep.exact_source}
    else:
        out = {"depth": rep.exact, "source": rep.exact_source}
    _emit(out)


def cmd_cutsets(args):
    print(json.dumps(enumerate_cutsets(load_graph(args.graph)).to_json_obj()))


def cmd_decompose(args):
    g = load_graph(args.graph)
    order = _order(args.order)
    ideal = build_ideal(args.m, g, order)
    comps = [build_prime_component(args.m, g, T, order) for T in enumerate_cutsets(g).sets()]
    for pc in comps:
        print(f"# P_T, T = {sorted(pc.T)}, blocks = {pc.blocks}")
        sys.stdout.write(ideal_to_text(pc.generators, pc.ring, order))
    lhs = groebner_basis(ideal.generators, order)
    rhs = intersect_all([pc.generators for pc in comps], order)
    ok = lhs == rhs
    print(f"# verdict: J equals the intersection of the {len(comps)} components: {str(ok).lower()}")
    if not ok:
        return EXIT_VIOLATION
    return 0


def cmd_export(args):
    g = load_graph(args.graph)
    ideal = build_ideal(args.m, g)
    title = f"J_(K_{args.m},G), G on {g.n} vertices with edges {g.sorted_edges()}"
    sys.stdout.write(export_cas(ideal.generators, ideal.ring, args.dialect, title=title))


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"--n-range expects A..B, got {text!r}")
    lo, hi = int(lo), int(hi)
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    return lo, hi


def cmd_corpus(args):
    if args.exhaustive and args.n is None:
        raise UsageError("--exhaustive needs --n")
    cfg = CorpusConfig(m=args.m, n_range=_parse_range(args.n_range), count=args.count, seed=args.seed,
                       oracle=args.oracle, exhaustive_n=args.n if args.exhaustive else None,
                       timings=args.timings)
    rep = run_corpus(cfg)
    if args.out:
        csv_path = write_report(rep, args.out)
        print(f"{len(rep['records'])} records, {rep['violationCount']} violations -> {args.out}, {csv_path}")
    else:
        _emit(rep)
    return EXIT_VIOLATION if rep["violationCount"] else 0


def cmd_fixtures(args):
    if args.action == "list":
        for name in fixtures.names():
            print(name)
        return 0
    if not args.name:
        raise UsageError("fixtures show needs a name")
    g = load_graph(args.name)
    sys.stdout.write({"json": g.to_json() + "\n", "text": g.to_text(),
                      "dot": g.to_dot(args.name)}[args.format])


def build_parser():
    p = argparse.ArgumentParser(prog="gbei", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, m=False, help=None):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="fixture name, graph file (JSON or text), or -")
        if m:
            sp.add_argument("--m", type=int, required=True)
        sp.set_defaults(func=fn)
        return sp

    graph_cmd("stats", cmd_stats, help="graph invariants")
    graph_cmd("classify", cmd_classify, help="class recognizers with witnesses")
    sp = graph_cmd("bounds", cmd_bounds, m=True, help="lower/upper bounds and exact depth")
    sp.add_argument("--no-oracle", action="store_true",
                    help="do not fall back to the oracle when no closed form applies")
    sp = graph_cmd("depth", cmd_depth, m=True, help="exact depth (closed form or oracle)")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--order", choices=["lex", "degrevlex"])
    graph_cmd("cutsets", cmd_cutsets, help="cut sets with component counts")
    sp = graph_cmd("decompose", cmd_decompose, m=True, help="prime components and verification")
    sp.add_argument("--order", choices=["lex", "degrevlex"])
    sp = graph_cmd("export-cas", cmd_export, m=True, help="Macaulay2/Singular script")
    sp.add_argument("--dialect", choices=["macaulay2", "singular"], default="macaulay2")

    sp = sub.add_parser("corpus", help="property run over a graph corpus")
    sp.add_argument("--n-range", default="4..7")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--out")
    sp.add_argument("--oracle", action="store_true")
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--n", type=int)
    sp.add_argument("--timings", action="store_true", help="record wall times (breaks byte-determinism)")
    sp.set_defaults(func=cmd_corpus)

    sp = sub.add_parser("fixtures", help="named graphs")
    sp.add_argument("action", choices=["list", "show"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--format", choices=["json", "text", "dot"], default="json")
    sp.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "m", None) is not None and args.m < 2:
            raise UsageError("--m must be at least 2")
        return args.func(args) or 0
    except UsageError as exc:
        print(f"gbei: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapExceeded, GBTimeout, NotSquarefree) as exc:
        print(f"gbei: {exc}", file=sys.stderr)
        return EXIT_CAP
    except FormulaConflict as exc:
        print(f"gbei: invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (InvalidGraph, GBEIError, ValueError) as exc:
        print(f"gbei: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
