"""qdecomp command line.

Exit codes: 0 success (or Possible), 1 verification failure or regression,
2 bad arguments, 3 Impossible, 4 Unknown.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize
from .automorphism import orbit_translates
from .constructions import combine, fundamental, p4
from .cube import make_hypercube
from .obstructions import IMPOSSIBLE, POSSIBLE, check_all
from .search import SearchConfig, find_decomposition
from .trees import LabeledTree
from .verify import ConstructionError, Cycle, Decomposition, parse_shape

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IMPOSSIBLE, EXIT_UNKNOWN = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"construct {args.what} needs " + ", ".join("--" + m for m in missing))


def _parse_tree(args) -> LabeledTree:
    pairs = []
    for tok in args.edges.split(","):
        try:
            a, b = tok.strip().split(":")
            pairs.append((int(a), int(b)))
        except ValueError as exc:
            raise UsageError(f"bad edge {tok!r}; expected u:v") from exc
    root = args.root if args.root is not None else pairs[0][0]
    if args.labels is None:
        return LabeledTree.bfs_labelled(pairs, root)
    labels = [int(x) for x in args.labels.split(",")]
    if len(labels) != len(pairs):
        raise UsageError("--labels needs one label per edge")
    return LabeledTree(tuple((a, b, lab) for (a, b), lab in zip(pairs, labels)), root)


def build(args) -> Decomposition:
    what = args.what
    if what == "p4":
        _need(args, "n")
        return p4.p4_divides_qn(args.n)
    if what == "lift":
        _need(args, "k")
        return p4.lift_p4(args.k)
    if what == "ham":
        _need(args, "k")
        return fundamental.hamiltonian_decomposition_as_pieces(args.k)
    if what == "fundham":
        _need(args, "k")
        cycle, group = fundamental.fundamental_hamiltonian_pow2(args.k)
        return Decomposition(make_hypercube(cycle.dim), tuple(orbit_translates(group, cycle.edges())),
                             Cycle(len(cycle)), f"fundamental Hamiltonian cycle of Q_{cycle.dim}").checked()
    if what == "tree":
        _need(args, "edges")
        t = _parse_tree(args)
        if args.n is not None:
            return combine.tree_divides_qn(t, args.n)
        return fundamental.tree_fundamental_decomposition(t)[2]
    if what == "cycle2n":
        _need(args, "n")
        return fundamental.double_run_cycle(args.n)[2]
    if what == "subcube":
        _need(args, "k", "n")
        return combine.subcube_decomposition(args.k, args.n)
    if what == "p2j":
        _need(args, "k", "n")
        return combine.p2j_divides_qn(args.k, args.n)
    if what == "mcycle":
        _need(args, "k", "n")
        return combine.m_cycle_divides_qn(args.k, args.n)
    if what == "piece":
        _need(args, "piece", "n")
        v = check_all(parse_shape(args.piece), args.n)
        if v.witness is None:
            raise UsageError(f"no witness for {args.piece} in Q_{args.n}: {v}")
        return v.witness
    raise UsageError(f"unknown construction {what!r}")


def _describe(d: Decomposition) -> str:
    host = f"Q_{d.host.dim}" if d.host.kind == "hypercube" else f"{d.host.kind} graph"
    return f"{len(d)} pieces of shape {d.shape} partitioning the {d.host.num_edges} edges of {host}"


def cmd_construct(args) -> int:
    d = build(args)
    report = d.verify()
    text = serialize.dumps(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        log = sys.stdout
    else:
        sys.stdout.write(text)
        log = sys.stderr
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(serialize.to_dot(d))
    print(f"{d.provenance}: {_describe(d)}; verification {report}", file=log)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    try:
        d = serialize.load(args.file)
    except (OSError, serialize.FormatError, ValueError) as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report = d.verify()
    if report.ok:
        print(f"OK: {_describe(d)}")
        return EXIT_OK
    print(report)
    return EXIT_FAIL


def _graph_arg(text: str):
    t = text.strip().lower()
    if t.startswith("q") and t[1:].isdigit():
        return make_hypercube(int(t[1:]))
    raise UsageError(f"unsupported graph {text!r}; use q<n>")


def _verdict_exit(status: str) -> int:
    return {POSSIBLE: EXIT_OK, IMPOSSIBLE: EXIT_IMPOSSIBLE}.get(status, EXIT_UNKNOWN)


def cmd_search(args) -> int:
    g = _graph_arg(args.graph)
    cfg = SearchConfig(budget=args.budget, symmetry=not args.no_symmetry)
    v = find_decomposition(g, parse_shape(args.piece), cfg)
    print(v)
    if v.witness is not None:
        text = serialize.dumps(v.witness)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    return _verdict_exit(v.status)


def cmd_obstruct(args) -> int:
    v = check_all(parse_shape(args.piece), args.n, construct=not args.rules_only)
    print(v)
    if v.witness is not None and args.out:
        serialize.save(v.witness, args.out)
    return _verdict_exit(v.status)


def cmd_export(args) -> int:
    try:
        d = serialize.load(args.file)
    except (OSError, serialize.FormatError, ValueError) as exc:
        print(f"cannot read {args.file}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = serialize.to_dot(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_summary(args) -> int:
    from .summary import run_summary

    failed = 0
    for line in run_summary():
        print(line)
        failed += not line.ok
    return EXIT_FAIL if failed else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qdecomp", description="Edge decompositions of hypercubes.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a decomposition and write it as JSON")
    c.add_argument("what", choices=["p4", "lift", "ham", "fundham", "tree", "cycle2n",
                                    "subcube", "p2j", "mcycle", "piece"])
    c.add_argument("--n", type=int)
    c.add_argument("--k", type=int)
    c.add_argument("--piece")
    c.add_argument("--edges", help='tree edges, e.g. "1:2,1:3,3:4"')
    c.add_argument("--labels", help="direction label per edge, e.g. 1,2,3")
    c.add_argument("--root", type=int)
    c.add_argument("--out")
    c.add_argument("--dot", help="also write a DOT rendering here")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="re-verify a decomposition file")
    v.add_argument("file")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive search on a small hypercube")
    s.add_argument("--graph", default="q3")
    s.add_argument("--piece", required=True)
    s.add_argument("--budget", type=lambda x: int(x.replace("_", "")), default=10_000_000)
    s.add_argument("--no-symmetry", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)

    o = sub.add_parser("obstruct", help="run the rules, then registered constructions")
    o.add_argument("--piece", required=True)
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--rules-only", action="store_true")
    o.add_argument("--out")
    o.set_defaults(func=cmd_obstruct)

    e = sub.add_parser("export", help="render a decomposition file as DOT")
    e.add_argument("file")
    e.add_argument("--dot", action="store_true", help="DOT output (the only format)")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)

    m = sub.add_parser("summary", help="re-derive the ten headline results")
    m.set_defaults(func=cmd_summary)
    return ap


def main(argv=None) -> int:
    ap = make_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qdecomp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"qdecomp: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except combine.UnknownConstructive as exc:
        print(f"qdecomp: unknown: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ConstructionError as exc:
        print(f"qdecomp: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
