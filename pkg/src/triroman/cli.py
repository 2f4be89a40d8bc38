"""Command-line front end.

Exit codes: 0 success, 1 labeling has violations, 2 I/O or format error,
3 a solver size guard or method precondition was violated.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import bounds, exact, families, graph, reduction
from .labeling import InvalidLabelingError, Labeling, verify_3rdf, verify_krdf
from .treedp import gamma_3R_tree

DEFAULT_SEED = 20170101

EXIT_OK, EXIT_VIOLATION, EXIT_FORMAT, EXIT_GUARD = 0, 1, 2, 3


class GuardViolation(Exception):
    pass


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _load_graph(path: str) -> tuple[graph.Graph, str]:
    text = _read(path)
    return graph.from_edge_list(text), text


def build_report(command: list[str], inputs: dict, results: dict, diagnostics: dict) -> dict:
    """Assemble a run report; ``digest`` covers everything except ``diagnostics``."""
    body = {"command": command, "inputs": inputs, "results": results}
    digest = _digest(json.dumps(body, sort_keys=True))
    return {**body, "digest": digest, "diagnostics": diagnostics}


def _emit(args, report: dict, human: str) -> None:
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(human)


# -- path / cycle recognition ---------------------------------------------


def _traversal(g: graph.Graph) -> tuple[str, list[int]] | None:
    """('path'|'cycle', vertex order) when g is a path or cycle on all its vertices."""
    if not graph.is_connected(g) or g.p < 2 or g.max_degree > 2:
        return None
    if g.q == g.p - 1:
        start = min(v for v in range(g.p) if g.degree(v) == 1)
        kind = "path"
    elif g.q == g.p:
        start = 0
        kind = "cycle"
    else:  # pragma: no cover
        return None
    order, prev, cur = [start], -1, start
    while len(order) < g.p:
        nxt = min(u for u in g.adjacency[cur] if u != prev)
        prev, cur = cur, nxt
        order.append(cur)
    return kind, order


def solve_closed_form(g: graph.Graph) -> exact.SolveResult:
    found = _traversal(g)
    if found is None:
        raise GuardViolation("closedform: graph is not a path or a cycle")
    kind, order = found
    value, lab = (families.gamma_path if kind == "path" else families.gamma_cycle)(g.p)
    values = [0] * g.p
    for pos, v in enumerate(order):
        values[v] = lab[pos]
    witness = Labeling(tuple(values), 3)
    assert witness.weight == value and not verify_krdf(g, witness, 3)
    comp = exact.ComponentResult(tuple(range(g.p)), value, 0)
    return exact.SolveResult(value, witness, exact.Method.CLOSEDFORM, 0, (comp,))


def solve(g: graph.Graph, method: str = "auto", threads: int = 1) -> exact.SolveResult:
    """Dispatch to a solver; ``auto`` prefers closed forms, then the tree DP, then BnB."""
    try:
        if method == "auto":
            if _traversal(g) is not None:
                return solve_closed_form(g)
            if graph.is_tree(g):
                return gamma_3R_tree(g)
            return exact.gamma_3R_bnb(g, threads=threads)
        if method == "closedform":
            return solve_closed_form(g)
        if method == "treedp":
            if not graph.is_tree(g):
                raise GuardViolation("treedp: graph is not a tree")
            return gamma_3R_tree(g)
        if method == "bruteforce":
            return exact.gamma_kR_bruteforce(g, 3)
        if method == "bnb":
            return exact.gamma_3R_bnb(g, threads=threads)
    except exact.SizeGuardError as exc:
        raise GuardViolation(str(exc)) from None
    raise ValueError(f"unknown method {method!r}")


# -- subcommands -----------------------------------------------------------


def cmd_verify(args) -> int:
    g, gtext = _load_graph(args.graph)
    ltext = _read(args.labeling)
    lab = Labeling.from_text(ltext, args.k)
    violations = verify_3rdf(g, lab) if args.k == 3 else verify_krdf(g, lab, args.k)
    results = {
        "k": args.k,
        "valid": not violations,
        "weight": lab.weight,
        "violations": [{"vertex": v.vertex, "required": v.required, "achieved": v.achieved} for v in violations],
    }
    report = build_report(
        ["verify", f"--k={args.k}"],
        {"graph_sha256": _digest(gtext), "labeling_sha256": _digest(ltext)},
        results,
        {},
    )
    if violations:
        lines = [f"INVALID [{args.k}]-RDF (weight {lab.weight})"]
        lines += [f"  vertex {v.vertex}: h(AN[v]) = {v.achieved} < {v.required}" for v in violations]
        human = "\n".join(lines)
    else:
        human = f"valid [{args.k}]-RDF, weight {lab.weight}"
    _emit(args, report, human)
    return EXIT_VIOLATION if violations else EXIT_OK


def _solve_results(res: exact.SolveResult) -> dict:
    return {
        "weight": res.weight,
        "method": res.method.value,
        "witness": list(res.witness.values),
        "components": [{"vertices": list(c.vertices), "weight": c.weight} for c in res.per_component],
        "disconnected_extension": len(res.per_component) > 1,
    }


def cmd_solve(args) -> int:
    g, gtext = _load_graph(args.graph)
    t0 = time.perf_counter()
    res = solve(g, args.method, args.threads)
    elapsed = time.perf_counter() - t0
    report = build_report(
        ["solve", f"--method={args.method}"],
        {"graph_sha256": _digest(gtext)},
        _solve_results(res),
        {"elapsed_s": elapsed, "nodes_explored": res.nodes_explored, "threads": args.threads},
    )
    human = f"gamma_3R = {res.weight} ({res.method.value})\nwitness: {res.witness.to_text().strip()}"
    _emit(args, report, human)
    return EXIT_OK


def cmd_bound(args) -> int:
    g, gtext = _load_graph(args.graph)
    t0 = time.perf_counter()
    rep = bounds.best_bounds(g)
    try:
        exact_value = solve(g, "auto").weight
    except GuardViolation:
        exact_value = None
    rand = None
    try:
        lab = bounds.randomized_3rdf(g, seed=args.seed, trials=args.trials)
        rand = {"seed": args.seed, "trials": args.trials, "weight": lab.weight, "labeling": list(lab.values)}
    except ValueError:
        pass
    entries = []
    for e in rep.entries:
        if not (e.applicable or args.list):
            continue
        d = e.to_dict()
        d["tight"] = bool(e.applicable and exact_value is not None and e.integer_value == exact_value)
        entries.append(d)
    results = {
        "best_lower": rep.best_lower,
        "best_upper": rep.best_upper,
        "exact": exact_value,
        "entries": entries,
        "randomized": rand,
    }
    report = build_report(
        ["bound", f"--seed={args.seed}", f"--trials={args.trials}"] + (["--list"] if args.list else []),
        {"graph_sha256": _digest(gtext)},
        results,
        {"elapsed_s": time.perf_counter() - t0},
    )
    lines = [f"{'bound':<20}{'kind':<7}{'value':>8}  note"]
    for d in entries:
        val = "-" if d["integer_value"] is None else str(d["integer_value"])
        note = d["reason"] + (" tight" if d["tight"] else "")
        lines.append(f"{d['name']:<20}{d['kind']:<7}{val:>8}  {note.strip()}")
    lines.append(f"best lower {rep.best_lower}, best upper {rep.best_upper}, exact {exact_value}")
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


def _pairs(items: list[str]) -> list[tuple[int, int]]:
    out = []
    for item in items:
        a, b = item.split("-")
        out.append((int(a), int(b)))
    return out


def _generate(args) -> graph.Graph:
    kind, ps = args.kind, args.params
    ints = [int(x) for x in ps] if kind != "gnp" else None
    if kind == "path":
        return graph.path(*ints)
    if kind == "cycle":
        return graph.cycle(*ints)
    if kind == "star":
        return graph.star(*ints)
    if kind == "double_star":
        return graph.double_star(*ints)
    if kind == "complete_bipartite":
        return graph.complete_bipartite(*ints)
    if kind == "spider":
        return graph.spider(ints)
    if kind == "random_tree":
        return graph.random_tree(*ints, seed=args.seed)
    if kind == "gnp":
        return graph.gnp(int(ps[0]), float(ps[1]), seed=args.seed)
    if kind == "family_F":
        attach = _pairs(args.hub_edges) if args.hub_edges else None
        return families.gen_family_F(ints[0], attach, seed=None if attach is not None else args.seed)
    if kind == "family_H":
        edges = _pairs(args.hub_edges) if args.hub_edges else None
        return families.gen_family_H(ints[0], edges, seed=None if edges is not None else args.seed)
    raise ValueError(f"unknown family {kind!r}")


def cmd_gen(args) -> int:
    g = _generate(args)
    text = graph.to_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_reduce(args) -> int:
    text = _read(args.x3c)
    inst = reduction.X3CInstance.from_text(text)
    g, gm = reduction.build_gadget(inst, args.variant)
    edge_text = graph.to_edge_list(g)
    if args.out:
        Path(args.out).write_text(edge_text)
        Path(args.out + ".roles.json").write_text(gm.to_json() + "\n")
    results = {
        "variant": gm.variant.value,
        "p": g.p,
        "q_edges": g.q,
        "threshold": gm.threshold,
        "gadget_sha256": _digest(edge_text),
    }
    report = build_report(["reduce", f"--variant={gm.variant.value}"], {"x3c_sha256": _digest(text)}, results, {})
    if args.json:
        _emit(args, report, "")
    elif args.out:
        print(f"gadget: {g.p} vertices, {g.q} edges, threshold k = {gm.threshold}")
    else:
        sys.stdout.write(f"# threshold {gm.threshold}\n" + edge_text)
    return EXIT_OK


def cmd_chain(args) -> int:
    g, gtext = _load_graph(args.graph)
    try:
        rep = exact.inequality_chain_report(g)
    except exact.SizeGuardError as exc:
        raise GuardViolation(str(exc)) from None
    results = {
        "gamma": rep.gamma,
        "gamma_R": rep.gamma_R,
        "gamma_dR": rep.gamma_dR,
        "gamma_3R": rep.gamma_3R,
        "checks": rep.checks,
        "chain_holds": rep.chain_holds,
    }
    report = build_report(["chain"], {"graph_sha256": _digest(gtext)}, results, {})
    human = (
        f"gamma={rep.gamma} gamma_R={rep.gamma_R} gamma_dR={rep.gamma_dR} gamma_3R={rep.gamma_3R} "
        f"chain {'holds' if rep.chain_holds else 'FAILS'}"
    )
    _emit(args, report, human)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triroman", description="Triple Roman domination toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a labeling")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.add_argument("--k", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", parents=[common], help="exact gamma_3R")
    p.add_argument("graph")
    p.add_argument("--method", default="auto", choices=["auto", "bruteforce", "bnb", "treedp", "closedform"])
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bound", parents=[common], help="every bound with applicability")
    p.add_argument("graph")
    p.add_argument("--list", action="store_true", help="include inapplicable bounds")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=64)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument(
        "kind",
        choices=[
            "path", "cycle", "star", "double_star", "complete_bipartite", "spider",
            "gnp", "random_tree", "family_F", "family_H",
        ],
    )
    p.add_argument("params", nargs="*")
    p.add_argument("--hub-edges", nargs="*", default=None, help="block pairs 'i-j' for family_F / family_H")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", parents=[common], help="build the X3C gadget")
    p.add_argument("x3c")
    p.add_argument("--variant", default="bipartite", choices=["bipartite", "chordal"])
    p.add_argument("--out", help="gadget edge list path; roles go to <out>.roles.json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("chain", parents=[common], help="gamma, gamma_R, gamma_dR, gamma_3R and their chain")
    p.add_argument("graph")
    p.set_defaults(func=cmd_chain)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (OSError, graph.GraphFormatError, InvalidLabelingError, reduction.X3CFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT


if __name__ == "__main__":
    sys.exit(main())
