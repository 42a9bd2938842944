"""Command-line front door: compute reports, enumerate families, build TAR graphs,
run verification suites.

Graph sources: --g6, --stdin (graph6), --family (compositional mini-grammar:
path:n, cycle:n, complete:n, empty:n, cbip:p,q, star:1,q, comb:r, cmulti:n1,n2,...,
join(a,b,...), du(a,b,...)), or --fixture (named figure graphs).
Output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures
from .blocking import Provenance, designated_family, enumerate_family, minimal_members
from .closures import ClosureRule, derived_blocking_family, generators
from .errors import EngineError
from .graphs import (
    Graph,
    complete_multipartite,
    disjoint_union,
    family,
    join,
    parse_graph6,
)
from .irredundance import domination_chain, report
from .tar import KIND_X_SETS, KIND_XIR_SETS, build_tar, export_dot
from .verify import SUITE_NAMES, run_suite

SCHEMA_VERSION = 1

_PARAMS = {
    "standard": ClosureRule.STANDARD,
    "psd": ClosureRule.PSD,
    "skew": ClosureRule.SKEW,
    "domination": ClosureRule.DOMINATION,
    "vc": ClosureRule.VERTEX_COVER,
}


def _split_top_level(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced parentheses")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise ValueError("unbalanced parentheses")
    parts.append("".join(cur))
    # a bare integer continues the previous atom's parameter list (cbip:2,3)
    merged: list[str] = []
    for p in parts:
        p = p.strip()
        if merged and p.isdigit():
            merged[-1] += "," + p
        else:
            merged.append(p)
    return merged


def parse_family_spec(spec: str) -> Graph:
    """Parse the compositional family grammar into a graph."""
    spec = spec.strip()
    for head, op in (("join(", join), ("du(", disjoint_union)):
        if spec.startswith(head) and spec.endswith(")"):
            args = _split_top_level(spec[len(head):-1])
            if len(args) < 2:
                raise ValueError(f"{head[:-1]} needs at least two arguments")
            graphs = [parse_family_spec(a) for a in args]
            out = graphs[0]
            for h in graphs[1:]:
                out = op(out, h)
            return out
    if ":" not in spec:
        raise ValueError(f"bad family spec {spec!r}")
    name, _, params_text = spec.partition(":")
    try:
        params = [int(x) for x in params_text.split(",")]
    except ValueError:
        raise ValueError(f"bad parameters in {spec!r}") from None
    kinds = {
        "path": "path", "cycle": "cycle", "complete": "complete", "empty": "empty",
        "cbip": "complete_bipartite", "star": "star", "comb": "comb",
    }
    if name == "cmulti":
        return complete_multipartite(params)
    if name not in kinds:
        raise ValueError(f"unknown family {name!r}")
    return family(kinds[name], params)


def _load_graph(args: argparse.Namespace) -> Graph:
    sources = [
        s for s in ("g6", "family", "fixture", "stdin") if getattr(args, s, None)
    ]
    if len(sources) != 1:
        raise ValueError("exactly one of --g6/--family/--fixture/--stdin is required")
    if args.g6:
        return parse_graph6(args.g6)
    if args.family:
        return parse_family_spec(args.family)
    if args.fixture:
        fix = fixtures.FIXTURES.get(args.fixture)
        if fix is None:
            known = ", ".join(sorted(set(fixtures.FIXTURES)))
            raise ValueError(f"unknown fixture {args.fixture!r}; known: {known}")
        return fix.graph
    return parse_graph6(sys.stdin.read())


def _emit_json(payload: dict) -> None:
    print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2))


def _add_graph_source(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--g6", help="graph6 string")
    sub.add_argument("--family", help="family spec, e.g. path:7 or join(cycle:4,complete:2)")
    sub.add_argument("--fixture", help="named fixture graph (fig2..fig7, bull, paw, bc)")
    sub.add_argument("--stdin", action="store_true", help="read graph6 from stdin")
    sub.add_argument("--budget-n", type=int, default=16,
                     help="override the 2^n enumeration guard (default 16)")


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="irredundance",
        description="Exact irredundance computations over blocking families.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_compute = subs.add_parser("compute", help="four-number parameter report")
    _add_graph_source(p_compute)
    p_compute.add_argument("--param", choices=sorted(_PARAMS), required=True)
    p_compute.add_argument("--output", choices=("json", "text"), default="text")

    p_forts = subs.add_parser("forts", help="enumerate a blocking family")
    _add_graph_source(p_forts)
    p_forts.add_argument("--param", choices=sorted(_PARAMS), required=True)
    p_forts.add_argument(
        "--provenance",
        choices=("designated", "connected-psd", "closure-derived", "generators", "minimal"),
        default="designated",
    )
    p_forts.add_argument("--output", choices=("json", "text"), default="json")

    p_tar = subs.add_parser("tar", help="build a TAR reconfiguration graph")
    _add_graph_source(p_tar)
    p_tar.add_argument("--param", choices=sorted(_PARAMS), required=True)
    p_tar.add_argument("--kind", choices=("x-sets", "xir-sets"), default="xir-sets")
    p_tar.add_argument("--output", choices=("json", "dot"), default="dot")

    p_chain = subs.add_parser("chain", help="Extended Domination Chain report")
    _add_graph_source(p_chain)
    p_chain.add_argument("--output", choices=("json", "text"), default="text")

    p_verify = subs.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p_verify.add_argument("--max-n", type=int, default=None)
    p_verify.add_argument("--output", choices=("json", "text"), default="text")

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0

    try:
        return _dispatch(args)
    except (EngineError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "verify":
        result = run_suite(args.suite, args.max_n)
        if args.output == "json":
            _emit_json(result.to_json_dict())
        else:
            print(result.format_text())
        return 0 if result.passed else 1

    g = _load_graph(args)
    budget = args.budget_n

    if args.command == "compute":
        rep = report(g, _PARAMS[args.param], budget_n=budget)
        if args.output == "json":
            _emit_json(rep.to_json_dict())
        else:
            print(f"graph {rep.graph_g6}  parameter {rep.parameter.value}")
            print(f"  xir={rep.xir}  X={rep.x}  X_upper={rep.x_upper}  XIR={rep.xir_upper}")
        return 0

    if args.command == "forts":
        rule = _PARAMS[args.param]
        if args.provenance == "designated":
            if rule is ClosureRule.STANDARD:
                fam = enumerate_family(rule, Provenance.ENUMERATED_FORTS, g, budget)
            else:
                fam = designated_family(rule, g, budget)
        elif args.provenance == "connected-psd":
            fam = enumerate_family(rule, Provenance.CONNECTED_PSD_FORTS, g, budget)
        elif args.provenance == "closure-derived":
            fam = derived_blocking_family(rule, g, budget)
        elif args.provenance == "generators":
            fam = generators(derived_blocking_family(rule, g, budget))
        else:
            if rule is ClosureRule.PSD:
                base = enumerate_family(rule, Provenance.ENUMERATED_FORTS, g, budget)
            else:
                base = designated_family(rule, g, budget)
            fam = minimal_members(base)
        if args.output == "json":
            _emit_json(fam.to_json_dict())
        else:
            for members in fam.member_lists():
                print(members)
        return 0

    if args.command == "tar":
        kind = KIND_X_SETS if args.kind == "x-sets" else KIND_XIR_SETS
        t = build_tar(g, kind, _PARAMS[args.param], budget_n=budget)
        if args.output == "dot":
            sys.stdout.write(export_dot(t))
        else:
            _emit_json(t.to_json_dict())
        return 0

    if args.command == "chain":
        chain = domination_chain(g, budget_n=budget)
        if args.output == "json":
            _emit_json(chain.to_json_dict())
        else:
            print(f"graph {chain.graph_g6}")
            print(
                f"  dir={chain.dir} gamma={chain.gamma} lower_alpha={chain.lower_alpha} "
                f"alpha={chain.alpha} gamma_upper={chain.gamma_upper} "
                f"DIR={chain.DIR} VCIR={chain.VCIR}"
            )
            if chain.has_isolated:
                print("  note: graph has isolated vertices; the chain may not apply")
        return 0

    raise ValueError(f"unknown command {args.command!r}")


if __name__ == "__main__":
    raise SystemExit(main())
