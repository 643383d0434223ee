"""Command-line interface.

One verb per invocation; JSON on stdout by default (``--text`` for a
human-readable rendering), diagnostics on stderr. Exit codes: 0 the verb
succeeded / the property holds, 1 the property fails, 2 usage or input
error (including exhausted search budgets), 3 a checked construction
assertion failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .burning import (
    burning_schedule_for_k,
    ceil_sqrt,
    check_conjecture,
    exact_burning_number,
    schedule_from_caterpillar,
)
from .caterpillar import build_spanning_caterpillar, is_caterpillar
from .errors import (
    BudgetExceeded,
    Error,
    ExceedsKMax,
    FallbackExhausted,
    FormatError,
    InternalProofViolation,
    NoStraightShortestPath,
    NotConnected,
    OrderingNotStraight,
)
from .generators import GenSpec, gen_chain, gen_staircase, generate
from .graph import BipartiteGraph, VertexId, is_connected
from .io import dumps_graph, format_edgelist, loads_graph, parse_edgelist
from .oracle import (
    DEFAULT_ORACLE_BUDGET,
    enumerate_trees,
    oracle_biconvex_scan,
    oracle_caterpillar_scan,
)
from .orderings import (
    DEFAULT_BUDGET,
    DualOrdering,
    find_biconvex_ordering,
    find_biconvex_s_ordering,
    is_biconvex,
    is_s_ordering,
)
from .spath import shortest_s_path

EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.text:
        for line in text_lines:
            print(line)
    else:
        print(json.dumps(doc, indent=2))


def _load_graph(args) -> tuple[BipartiteGraph, DualOrdering | None]:
    with open(args.input, "r", encoding="utf-8") as fh:
        text = fh.read()
    if args.format == "edgelist":
        return parse_edgelist(text), None
    return loads_graph(text)


def _straight_ordering(g: BipartiteGraph, d: DualOrdering | None, budget: int):
    """Use the file's ordering when present (it must verify), else search."""
    if d is not None:
        if not is_biconvex(g, d) or not is_s_ordering(g, d):
            raise OrderingNotStraight(
                "the supplied ordering is not a biconvex straight ordering"
            )
        return d
    return find_biconvex_s_ordering(g, budget=budget)


def _cmd_gen(args) -> int:
    spec = GenSpec(
        kind=args.kind,
        n_a=args.na,
        n_b=args.nb,
        density=args.density,
        seed=args.seed if args.seed is not None else 0,
    )
    if args.kind != "fig1" and args.seed is None:
        print("gen: --seed is required for generated kinds", file=sys.stderr)
        return EXIT_USAGE
    g, d = generate(spec)
    payload = format_edgelist(g) if args.format == "edgelist" else dumps_graph(g, d)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _ordering_doc(d: DualOrdering | None) -> dict:
    if d is None:
        return {"order_a": None, "order_b": None}
    return {"order_a": list(d.order_a), "order_b": list(d.order_b)}


def _cmd_recognize(args) -> int:
    g, _ = _load_graph(args)
    d = find_biconvex_ordering(g, budget=args.budget)
    doc = {"biconvex": d is not None, **_ordering_doc(d)}
    if args.exhaustive:
        scan = oracle_biconvex_scan(g)
        doc["oracle"] = {
            "biconvex": scan.ordering is not None,
            "pair_space": scan.pair_space,
        }
        if (scan.ordering is None) != (d is None):  # pragma: no cover
            raise InternalProofViolation("recognizer disagrees with the oracle scan")
    _emit(args, doc, [f"biconvex: {doc['biconvex']}"] if d is None else [
        f"biconvex: true",
        f"order_a: {' '.join(map(str, d.order_a))}",
        f"order_b: {' '.join(map(str, d.order_b))}",
    ])
    return EXIT_OK if d is not None else EXIT_PROPERTY_FAILS


def _cmd_sorder(args) -> int:
    g, _ = _load_graph(args)
    d = find_biconvex_s_ordering(g, budget=args.budget)
    doc = {"straight_biconvex": d is not None, **_ordering_doc(d)}
    _emit(args, doc, [f"straight biconvex ordering: {d is not None}"] if d is None else [
        f"order_a: {' '.join(map(str, d.order_a))}",
        f"order_b: {' '.join(map(str, d.order_b))}",
    ])
    return EXIT_OK if d is not None else EXIT_PROPERTY_FAILS


def _cmd_spath(args) -> int:
    g, d_file = _load_graph(args)
    d = _straight_ordering(g, d_file, args.budget)
    if d is None:
        print("spath: the graph is not connected-biconvex", file=sys.stderr)
        _emit(args, {"error": "not biconvex"}, ["not biconvex"])
        return EXIT_PROPERTY_FAILS
    u = VertexId.parse(getattr(args, "from"))
    v = VertexId.parse(args.to)
    path = shortest_s_path(g, d, u, v)
    names = [str(x) for x in path.vertices]
    doc = {"from": str(u), "to": str(v), "length": path.length, "path": names}
    _emit(args, doc, [" ".join(names)])
    return EXIT_OK


def _cmd_caterpillar(args) -> int:
    g, d_file = _load_graph(args)
    d = _straight_ordering(g, d_file, args.budget)
    if d is None:
        print("caterpillar: not biconvex", file=sys.stderr)
        _emit(args, {"error": "not biconvex"}, ["not biconvex"])
        return EXIT_PROPERTY_FAILS
    cat, trace = build_spanning_caterpillar(g, d)
    doc = {
        "spine": [str(v) for v in cat.spine],
        "legs": {str(leg): str(anchor) for leg, anchor in sorted(cat.legs.items())},
        "case": trace.case_label,
    }
    _emit(
        args,
        doc,
        [
            "spine: " + " ".join(doc["spine"]),
            "legs: " + " ".join(f"{k}->{v}" for k, v in doc["legs"].items()),
            f"case: {trace.case_label}",
        ],
    )
    return EXIT_OK


def _cmd_burn(args) -> int:
    g, d_file = _load_graph(args)
    if args.exact:
        k_max = args.kmax if args.kmax is not None else ceil_sqrt(g.n) + 2
        k, schedule = exact_burning_number(g, k_max=k_max)
        doc = {
            "n": g.n,
            "exact_b": k,
            "schedule": [str(v) for v in schedule.sources],
            "len": len(schedule),
        }
        _emit(args, doc, [f"exact burning number: {k}", f"schedule: {schedule}"])
        return EXIT_OK
    # --schedule: derive one through the spanning caterpillar
    d = _straight_ordering(g, d_file, args.budget)
    if d is None:
        print("burn: not biconvex", file=sys.stderr)
        _emit(args, {"error": "not biconvex"}, ["not biconvex"])
        return EXIT_PROPERTY_FAILS
    cat, _ = build_spanning_caterpillar(g, d)
    schedule = schedule_from_caterpillar(g, cat)
    doc = {
        "n": g.n,
        "bound": ceil_sqrt(g.n),
        "schedule": [str(v) for v in schedule.sources],
        "len": len(schedule),
    }
    _emit(args, doc, [f"schedule: {schedule} (bound {doc['bound']})"])
    return EXIT_OK


def _fuzz_instance(seed: int) -> tuple[BipartiteGraph, DualOrdering]:
    rng = random.Random(seed)
    n_a = rng.randint(1, 12)
    n_b = rng.randint(1, 12)
    maker = gen_staircase if seed % 2 == 0 else gen_chain
    return maker(n_a, n_b, seed)


def _cmd_check(args) -> int:
    if args.fuzz is not None:
        if args.seed is None:
            print("check: --fuzz requires an explicit --seed", file=sys.stderr)
            return EXIT_USAGE
        results = []
        violations = []
        for i in range(args.fuzz):
            seed = args.seed + i
            g, d = _fuzz_instance(seed)
            report = check_conjecture(g, d)
            results.append({"seed": seed, **report.to_json_dict()})
            if not report.ok:
                violations.append(seed)
        doc = {
            "instances": args.fuzz,
            "seed": args.seed,
            "passes": args.fuzz - len(violations),
            "violations": violations,
            "results": results,
        }
        _emit(
            args,
            doc,
            [f"{doc['passes']}/{args.fuzz} pass"]
            + [f"violation at seed {s}" for s in violations],
        )
        return EXIT_OK if not violations else EXIT_PROPERTY_FAILS
    g, d_file = _load_graph(args)
    d = _straight_ordering(g, d_file, args.budget)
    if d is None:
        print("check: not biconvex", file=sys.stderr)
        _emit(args, {"error": "not biconvex"}, ["not biconvex"])
        return EXIT_PROPERTY_FAILS
    report = check_conjecture(g, d)
    doc = report.to_json_dict()
    _emit(args, doc, [f"n={doc['n']} bound={doc['bound']} len={doc['len']} pass={doc['pass']}"])
    return EXIT_OK if report.ok else EXIT_PROPERTY_FAILS


def _cmd_oracle(args) -> int:
    if args.what == "trees":
        trees = enumerate_trees(args.n, up_to_isomorphism=args.distinct)
        caterpillars = sum(
            1 for t in trees if is_caterpillar(t, range(args.n))
        )
        doc = {"n": args.n, "count": len(trees), "caterpillars": caterpillars}
        _emit(args, doc, [f"{len(trees)} trees, {caterpillars} caterpillars"])
        return EXIT_OK
    g, _ = _load_graph(args)
    if args.what == "caterpillar":
        scan = oracle_caterpillar_scan(g, DEFAULT_ORACLE_BUDGET)
        doc = {
            "has_spanning_caterpillar": scan.found,
            "trees_examined": scan.trees_examined,
        }
        _emit(args, doc, [f"spanning caterpillar: {scan.found} ({scan.trees_examined} trees examined)"])
        return EXIT_OK if scan.found else EXIT_PROPERTY_FAILS
    scan = oracle_biconvex_scan(g)
    doc = {
        "biconvex": scan.ordering is not None,
        "pair_space": scan.pair_space,
        **_ordering_doc(scan.ordering),
    }
    _emit(args, doc, [f"biconvex: {doc['biconvex']} (pair space {scan.pair_space})"])
    return EXIT_OK if scan.ordering is not None else EXIT_PROPERTY_FAILS


def _add_io_flags(sub, needs_input=True):
    if needs_input:
        sub.add_argument("--input", required=True, help="graph file")
    sub.add_argument(
        "--format", choices=("json", "edgelist"), default="json", help="input format"
    )
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", dest="text", action="store_false", default=False)
    group.add_argument("--text", dest="text", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="biconvex",
        description="spanning caterpillars, straight orderings, and burning "
        "numbers of biconvex bipartite graphs",
    )
    parser.add_argument("--version", action="version", version=__version__)
    verbs = parser.add_subparsers(dest="verb", required=True)

    gen = verbs.add_parser("gen", help="generate a seeded instance")
    gen.add_argument("--kind", choices=GenSpec.KINDS, required=True)
    gen.add_argument("--na", type=int, default=1)
    gen.add_argument("--nb", type=int, default=1)
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--output", default=None)
    gen.add_argument("--format", choices=("json", "edgelist"), default="json")
    gen.set_defaults(handler=_cmd_gen, text=False)

    recognize = verbs.add_parser("recognize", help="search for a biconvex ordering")
    _add_io_flags(recognize)
    recognize.add_argument(
        "--exhaustive", action="store_true", help="cross-check with the oracle scan"
    )
    recognize.set_defaults(handler=_cmd_recognize)

    sorder = verbs.add_parser("sorder", help="search for a straight biconvex ordering")
    _add_io_flags(sorder)
    sorder.set_defaults(handler=_cmd_sorder)

    spath = verbs.add_parser("spath", help="shortest straight path between two vertices")
    _add_io_flags(spath)
    spath.add_argument("--from", required=True, help="source vertex, e.g. b1")
    spath.add_argument("--to", required=True, help="target vertex, e.g. b5")
    spath.set_defaults(handler=_cmd_spath)

    cater = verbs.add_parser("caterpillar", help="build and verify a spanning caterpillar")
    _add_io_flags(cater)
    cater.set_defaults(handler=_cmd_caterpillar)

    burn = verbs.add_parser("burn", help="burning number or caterpillar schedule")
    _add_io_flags(burn)
    mode = burn.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exact", action="store_true")
    mode.add_argument("--schedule", action="store_true")
    burn.add_argument("--kmax", type=int, default=None)
    burn.set_defaults(handler=_cmd_burn)

    check = verbs.add_parser("check", help="check the square-root burning bound")
    check.add_argument("--input", default=None)
    check.add_argument("--format", choices=("json", "edgelist"), default="json")
    check.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    check.add_argument("--fuzz", type=int, default=None, metavar="N")
    check.add_argument("--seed", type=int, default=None)
    group = check.add_mutually_exclusive_group()
    group.add_argument("--json", dest="text", action="store_false", default=False)
    group.add_argument("--text", dest="text", action="store_true")
    check.set_defaults(handler=_cmd_check)

    oracle = verbs.add_parser("oracle", help="brute-force ground truth")
    oracle.add_argument("what", choices=("caterpillar", "biconvex", "trees"))
    oracle.add_argument("--input", default=None)
    oracle.add_argument("--format", choices=("json", "edgelist"), default="json")
    oracle.add_argument("--n", type=int, default=6, help="tree order for 'trees'")
    oracle.add_argument("--distinct", action="store_true", help="deduplicate isomorphic trees")
    group = oracle.add_mutually_exclusive_group()
    group.add_argument("--json", dest="text", action="store_false", default=False)
    group.add_argument("--text", dest="text", action="store_true")
    oracle.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except InternalProofViolation as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (NotConnected, OrderingNotStraight, NoStraightShortestPath,
            ExceedsKMax, FallbackExhausted) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_PROPERTY_FAILS
    except (FormatError, BudgetExceeded, Error, ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
