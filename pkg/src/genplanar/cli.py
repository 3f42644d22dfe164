"""Command-line interface.

Subcommands: graph (DOT / edge-list export), planar (verdict with
certificate), alpha (profile table), verify (classification sweep),
props (property suite).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .catalog import corpus_up_to_15, group_from_spec, read_cayley_file, verify_theorem
from .genstats import alpha_profile, generation_probability
from .graphs import generating_graph, pruned_graph, to_dot, to_edge_list_text
from .planarity import is_planar
from .props import run_property_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genplanar",
        description="Generating graphs of finite groups: construction, "
        "exact generation statistics, and planarity with certificates.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("graph", help="emit the generating graph of a group")
    g.add_argument("spec", help="group spec, e.g. 'C:4 x C:2' or 'Dic:2'")
    g.add_argument("--pruned", action="store_true", help="drop isolated vertices")
    fmt = g.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="DOT output (default)")
    fmt.add_argument("--edges", action="store_true", help="edge-list output")

    p = sub.add_parser("planar", help="planarity verdict with certificate")
    p.add_argument("spec")

    a = sub.add_parser("alpha", help="alpha profile along a chief series")
    a.add_argument("spec")

    v = sub.add_parser("verify", help="classification sweep against the target list")
    v.add_argument(
        "--corpus",
        default="default",
        help="'default' (all groups of order <= 15) or dir:<path> of table files",
    )
    v.add_argument("--json", dest="json_out", metavar="OUT", help="write JSON report")
    v.add_argument("--quiet", action="store_true")

    pr = sub.add_parser("props", help="run the catalog property suite")
    pr.add_argument("--max-order", type=int, default=15)
    pr.add_argument("--seed", type=int, default=0, help="seed for random-graph tests")
    pr.add_argument("--graphs", type=int, default=60, help="random graph count")
    pr.add_argument("--extra", nargs="*", default=[], help="extra group specs")
    pr.add_argument("--quiet", action="store_true")
    return parser


def _cmd_graph(args) -> int:
    G = group_from_spec(args.spec)
    gamma = generating_graph(G)
    if args.pruned:
        gamma, _ = pruned_graph(gamma)
    if args.edges:
        sys.stdout.write(to_edge_list_text(gamma))
    else:
        sys.stdout.write(to_dot(gamma, name=G.name))
    return 0


def _cmd_planar(args) -> int:
    G = group_from_spec(args.spec)
    verdict = is_planar(generating_graph(G))
    payload: dict = {"group": G.name, "planar": verdict.planar}
    if verdict.planar:
        payload["embedding"] = verdict.embedding.rotations
    else:
        payload["witness"] = {
            "kind": verdict.witness.kind,
            "edges": [list(e) for e in verdict.witness.edges],
            "branch_vertices": verdict.witness.branch_vertices,
        }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if verdict.planar else 1


def _cmd_alpha(args) -> int:
    G = group_from_spec(args.spec)
    records = alpha_profile(G)
    p2 = generation_probability(G)
    print(f"group {G.name} (order {G.order}), P(2) = {p2}")
    print(f"{'level':>5} {'factor':>6} {'fiber':>6} {'alpha':>8} {'case':>14} {'p':>3} {'a':>3} {'c':>4}")
    product = 1
    for r in records:
        product *= r.alpha
        print(
            f"{r.level:>5} {r.factor_order:>6} {r.fiber_count:>6} "
            f"{str(r.alpha):>8} {r.alpha_case:>14} "
            f"{r.p if r.p is not None else '-':>3} "
            f"{r.a if r.a is not None else '-':>3} "
            f"{r.complement_count if r.complement_count is not None else '-':>4}"
        )
    print(f"product = {product} = |G| P(2) = {G.order * p2}")
    return 0


def _load_corpus(spec: str):
    if spec == "default":
        return corpus_up_to_15(), "default"
    if spec.startswith("dir:"):
        directory = Path(spec[4:])
        files = sorted(p for p in directory.iterdir() if p.is_file())
        if not files:
            raise ValueError(f"no table files in {directory}")
        return [read_cayley_file(p) for p in files], spec
    raise ValueError(f"--corpus must be 'default' or 'dir:<path>', got {spec!r}")


def _cmd_verify(args) -> int:
    groups, corpus_name = _load_corpus(args.corpus)
    report = verify_theorem(groups)
    if not args.quiet:
        for rec in report.records:
            line = f"{rec.name:>10} order={rec.order:<3}"
            if rec.note:
                line += f" note={rec.note}"
            else:
                line += (
                    f" planar={rec.planar}"
                    f" matched={rec.matched or '-'}"
                    f" delta=({rec.delta_vertices},{rec.delta_edges})"
                )
            print(line)
    print(
        f"summary: found {len(report.found)} planar 2-generated group(s); "
        f"match={report.match}"
    )
    if args.json_out:
        payload = report.as_dict(__version__, corpus_name)
        Path(args.json_out).write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n"
        )
    return 0 if report.match else 1


def _cmd_props(args) -> int:
    groups = [g for g in corpus_up_to_15() if g.order <= args.max_order]
    for spec in args.extra:
        groups.append(group_from_spec(spec))
    report = (lambda _msg: None) if args.quiet else print
    ok = run_property_suite(
        groups, seed=args.seed, random_graphs=args.graphs, report=report
    )
    print("props: all passed" if ok else "props: FAILURES")
    return 0 if ok else 1


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {
        "graph": _cmd_graph,
        "planar": _cmd_planar,
        "alpha": _cmd_alpha,
        "verify": _cmd_verify,
        "props": _cmd_props,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
