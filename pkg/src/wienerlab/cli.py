"""Command-line front end.

Subcommands mirror the library modules: ``compute`` runs the BFS engine on
an edge-list file, ``family``/``ops``/``dendrimer``/``tree``/``coxeter``/
``wdist`` expose the closed forms next to their oracles, and ``verify-all``
runs the whole cross-validation matrix.  Every JSON payload carries
``"schema": "wienerlab/1"``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import coxeter_bridge, dendrimer, families, tree_identities, verify, wdistance
from .errors import FormatError, UnsupportedOp, WienerLabError
from .graph_core import Graph, parse_edge_list
from .graph_ops import GraphOp, OpStats, apply_op, closed_form_op_poly
from .polynomial import Poly, analyze_sequence, poly_to_json
from .wiener_engine import (
    ordered_wiener,
    relative_wiener,
    report_to_json,
    wiener_polynomial,
    wiener_report,
)

SCHEMA = "wienerlab/1"


def _load_graph(path: str) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return parse_edge_list(text)


def _coeffs(p: Poly) -> list:
    return poly_to_json(p)["coeffs"]


def _emit(payload: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}))
    else:
        for line in lines:
            print(line)


def _cmd_compute(args) -> int:
    g = _load_graph(args.file)
    report = wiener_report(g)
    payload = report_to_json(report)
    lines = [
        f"n = {report.n}, m = {report.m}, diameter = {report.diameter}",
        f"W(G;q)      = {report.wiener_poly}",
        f"W-bar(G;q)  = {report.ordered_poly}",
        f"W(G)        = {report.wiener_index}",
        "property checks: " + ", ".join(f"{k}={v}" for k, v in report.checks.as_dict().items()),
    ]
    if args.vertex is not None:
        rel = relative_wiener(g, args.vertex)
        payload["relative_vertex"] = args.vertex
        payload["relative_coeffs"] = _coeffs(rel)
        lines.append(f"W_v(G;q) at v={args.vertex}: {rel}")
    _emit(payload, lines, args.json)
    return 0


def _cmd_family(args) -> int:
    spec = families.parse_family_spec(args.spec)
    poly = families.closed_form_poly(spec)
    index = families.closed_form_index(spec)
    payload = {
        "command": "family",
        "spec": families.spec_to_text(spec),
        "coeffs": _coeffs(poly),
        "index": index,
    }
    lines = [f"{families.spec_to_text(spec)}: W = {poly}, index = {index}"]
    if args.check:
        oracle = wiener_polynomial(families.construct(spec))
        match = oracle == poly and oracle.derivative_at_one() == index
        payload["oracle_match"] = match
        lines.append(f"oracle match: {match}")
        if not match:
            _emit(payload, lines, args.json)
            return 1
    _emit(payload, lines, args.json)
    return 0


def _cmd_ops(args) -> int:
    op = GraphOp(args.op)
    g1, g2 = _load_graph(args.g1), _load_graph(args.g2)
    mode = "both"
    if args.formula:
        mode = "formula"
    elif args.oracle:
        mode = "oracle"
    ordered = op is GraphOp.CARTESIAN
    payload: dict = {"command": "ops", "op": op.value, "kind": "ordered" if ordered else "unordered"}
    lines = [f"operation {op.value} on n1={g1.n}, n2={g2.n} ({payload['kind']} polynomial)"]

    formula = oracle = None
    if mode in ("formula", "both"):
        stats = OpStats.from_graphs(g1, g2)
        try:
            formula = closed_form_op_poly(op, stats, wiener_polynomial(g1), wiener_polynomial(g2))
            payload["formula_coeffs"] = _coeffs(formula)
            lines.append(f"formula: {formula}")
        except WienerLabError as exc:
            if mode == "formula":
                raise
            payload["formula_error"] = exc.name
            lines.append(f"formula: unavailable ({exc.name})")
    if mode in ("oracle", "both"):
        product = apply_op(op, g1, g2)
        oracle = ordered_wiener(product) if ordered else wiener_polynomial(product)
        payload["oracle_coeffs"] = _coeffs(oracle)
        lines.append(f"oracle:  {oracle}")
    if formula is not None and oracle is not None:
        payload["match"] = formula == oracle
        lines.append(f"match: {payload['match']}")
    _emit(payload, lines, args.json)
    return 0


_LARGE_ORACLE_CUTOFF = 100_000


def _cmd_dendrimer(args) -> int:
    n, d = args.n, args.d
    poly = dendrimer.closed_form(n, d)
    payload: dict = {
        "command": "dendrimer",
        "n": n,
        "d": d,
        "coeffs": _coeffs(poly),
        "index": poly.derivative_at_one(),
    }
    lines = [f"dendrimer n={n}, d={d}", f"W = {poly}", f"index = {poly.derivative_at_one()}"]
    if n >= 2:
        lab = dendrimer.label(n, d)
        th = dendrimer.thresholds(d, lab.k)
        payload["label"] = list(lab.digits)
        payload["level"] = lab.k
        payload["thresholds"] = {"n_k": th.n_k, "m_k": th.m_k, "p_k": th.p_k, "n_next": th.n_next}
        lines.append(f"label {lab.digits} at level {lab.k}; thresholds n_k={th.n_k}, m_k={th.m_k}, p_k={th.p_k}")
    if args.profile:
        prof = dendrimer.unimodality_profile(n, d)
        payload["profile"] = {"peak_class": prof.peak_class, "peak_range": list(prof.peak_range)}
        lines.append(f"peak class: {prof.peak_class}, plateau exponents {prof.peak_range}")
    if args.oracle:
        if n > _LARGE_ORACLE_CUTOFF:
            total_ok = poly.evaluate(1) == n * (n - 1) // 2
            tele_ok = poly - dendrimer.closed_form(n - 1, d) == dendrimer.delta_wiener(n, d)
            payload["oracle_mode"] = "large-n"
            payload["oracle_match"] = total_ok and tele_ok
            lines.append(f"large-n checks (pair count, telescoping): {total_ok and tele_ok}")
        else:
            oracle = wiener_polynomial(dendrimer.build_dendrimer(n, d))
            payload["oracle_mode"] = "bfs"
            payload["oracle_match"] = oracle == poly
            lines.append(f"oracle match: {oracle == poly}")
        if not payload["oracle_match"]:
            _emit(payload, lines, args.json)
            return 1
    if args.gf:
        series = dendrimer.gf_expand(d, args.gf)
        payload["gf"] = [_coeffs(p) for p in series]
        lines.append("generating-function coefficients:")
        lines.extend(f"  z^{k}: {p}" for k, p in enumerate(series))
    _emit(payload, lines, args.json)
    return 0


def _cmd_tree(args) -> int:
    if args.enumerate is not None:
        n = args.enumerate
        ok = tree_identities.path_is_max(n)
        payload = {"command": "tree", "enumerate": n, "path_is_max": ok}
        lines = [f"paths maximize the distance sum over all {n}^{max(n - 2, 0)} labeled trees: {ok}"]
        _emit(payload, lines, args.json)
        return 0 if ok else 1
    t = _load_graph(args.file)
    cut = tree_identities.wiener_edge_cut(t)
    gut = tree_identities.wiener_gutman(t)
    oracle = tree_identities.tree_distance_sum(t)
    agree = cut == gut == oracle
    payload = {
        "command": "tree",
        "n": t.n,
        "edge_cut": cut,
        "triple_product": gut,
        "oracle": oracle,
        "agree": agree,
    }
    lines = [f"edge-cut = {cut}, triple-product = {gut}, oracle = {oracle}, agree = {agree}"]
    _emit(payload, lines, args.json)
    return 0 if agree else 1


def _cmd_coxeter(args) -> int:
    spec = coxeter_bridge.CoxeterSpec(args.family, args.rank)
    poly = coxeter_bridge.poincare_poly(spec)
    verdict = analyze_sequence(poly, 0)
    payload: dict = {
        "command": "coxeter",
        "family": spec.family,
        "rank": spec.rank,
        "exponents": list(coxeter_bridge.exponents(spec)),
        "coeffs": _coeffs(poly),
        "log_concave": verdict.log_concave,
        "unimodal": verdict.unimodal,
        "roots": [str(r) for r in verdict.neg_rational_roots or ()],
    }
    lines = [
        f"{spec.family}{spec.rank}: exponents {payload['exponents']}",
        f"Pi(q) = {poly}",
        f"log-concave: {verdict.log_concave}, unimodal: {verdict.unimodal}",
        f"roots: {payload['roots']}",
    ]
    if args.graph or args.verify:
        if spec.family != "A":
            raise UnsupportedOp("reflection graphs are materialized for family A only")
        n = spec.rank + 1
        if args.graph:
            g = coxeter_bridge.reflection_graph(n)
            from .graph_core import diameter as graph_diameter

            payload["graph"] = {"vertices": g.n, "edges": g.m, "diameter": graph_diameter(g)}
            lines.append(f"reflection graph: {g.n} vertices, {g.m} edges, diameter {payload['graph']['diameter']}")
        if args.verify:
            ok = coxeter_bridge.verify_wgw(n)
            payload["wgw_identity"] = ok
            lines.append(f"ordered-polynomial identity: {ok}")
            if not ok:
                _emit(payload, lines, args.json)
                return 1
    _emit(payload, lines, args.json)
    return 0


def _cmd_wdist(args) -> int:
    g = _load_graph(args.file)
    report = wdistance.w_wiener_poly(g, args.w, partial=args.partial)
    payload = {
        "command": "wdist",
        "w": args.w,
        "coeffs": _coeffs(report.poly),
        "feasible_pairs": report.feasible_pairs,
        "infeasible_pairs": [list(p) for p in report.infeasible_pairs],
    }
    lines = [
        f"W_{args.w}(G;q) = {report.poly}",
        f"feasible pairs: {report.feasible_pairs}, infeasible: {len(report.infeasible_pairs)}",
    ]
    _emit(payload, lines, args.json)
    return 0


def _cmd_verify_all(args) -> int:
    results: list[verify.CheckResult] = []

    def show(result: verify.CheckResult) -> None:
        if not args.json:
            status = "PASS" if result.passed else "FAIL"
            print(f"{status}  {result.name:<30} {result.detail}  [{result.seconds:.2f}s]")

    results = verify.run_all(seed=args.seed, budget=args.budget, progress=show)
    all_pass = all(r.passed for r in results)
    if args.json:
        print(
            json.dumps(
                {
                    "schema": SCHEMA,
                    "command": "verify-all",
                    "budget": args.budget,
                    "seed": args.seed,
                    "passed": all_pass,
                    "checks": [asdict(r) for r in results],
                }
            )
        )
    else:
        print(f"{'all checks passed' if all_pass else 'FAILURES PRESENT'} (budget={args.budget}, seed={args.seed})")
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wienerlab",
        description="Distance-distribution polynomials of graphs, with closed forms and a BFS oracle.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a single JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="BFS report for an edge-list file")
    p.add_argument("--file", required=True)
    p.add_argument("--vertex", type=int, default=None, help="also report the single-vertex distribution")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("family", parents=[common], help="closed forms for a named family member")
    p.add_argument("--spec", required=True, help='e.g. "K:7", "Kmn:3,4", "W:6", "P:10", "C:9", "Q:5", "petersen"')
    p.add_argument("--check", action="store_true", help="cross-check against the BFS oracle")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("ops", parents=[common], help="binary graph operations")
    p.add_argument("--op", required=True, choices=[op.value for op in GraphOp])
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--formula", action="store_true")
    group.add_argument("--oracle", action="store_true")
    group.add_argument("--both", action="store_true")
    p.set_defaults(func=_cmd_ops)

    p = sub.add_parser("dendrimer", parents=[common], help="greedily grown d-ary trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check the closed form")
    p.add_argument("--profile", action="store_true", help="report the coefficient peak class")
    p.add_argument("--gf", type=int, default=0, metavar="K", help="expand the generating function to level K")
    p.set_defaults(func=_cmd_dendrimer)

    p = sub.add_parser("tree", parents=[common], help="tree distance-sum identities")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--file", help="check the identities on this tree")
    group.add_argument("--enumerate", type=int, metavar="N", help="exhaustively confirm path maximality")
    p.add_argument("--check", choices=["identities"], default="identities")
    p.set_defaults(func=_cmd_tree)

    p = sub.add_parser("coxeter", parents=[common], help="reflection-length polynomials")
    p.add_argument("--family", required=True, choices=["A", "B", "D", "E", "F", "H", "I2"])
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--graph", action="store_true", help="materialize the reflection graph (family A)")
    p.add_argument("--verify", action="store_true", help="check the ordered-polynomial identity (family A)")
    p.set_defaults(func=_cmd_coxeter)

    p = sub.add_parser("wdist", parents=[common], help="width-w container distances")
    p.add_argument("--file", required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--partial", action="store_true", help="skip pairs with no width-w container")
    p.set_defaults(func=_cmd_wdist)

    p = sub.add_parser("verify-all", parents=[common], help="run the full cross-validation matrix")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--budget", choices=sorted(verify.BUDGETS), default="small")
    p.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WienerLabError as exc:
        error_obj = {"schema": SCHEMA, "error": {"name": exc.name, "message": str(exc)}}
        if getattr(args, "json", False):
            print(json.dumps(error_obj), file=sys.stderr)
        else:
            print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
