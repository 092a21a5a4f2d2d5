"""Command-line front end: ingestion, reports, figure data, verification.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Output is deterministic for a fixed input, seed and tool version; the tool
version rides in a separate header line (CSV) or field (JSON) so data lines
are stable.  CSV floats carry 17 significant digits to round-trip doubles.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .bounds import full_bound_report
from .centrality import centrality_report, DEFAULT_ZERO_TOL
from .corpus import er_corpus
from .graphs import Graph, generate, parse_graph, to_adjacency_text, to_edge_list_text
from .spectral import char_poly_exact, decompose, EXACT_POLY_LIMIT, SIGN_TOL
from .verification import env_threads, verify_corpus, verify_graph
from .weights import complement_coupling, weight_profile

SCHEMA_VERSION = 1


def _f(x: float) -> str:
    return format(float(x), ".17g")


def _read_graph(path: str, fmt: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), fmt)


def _analysis_document(g: Graph, m_max: int, seed: int | None) -> dict:
    dec = decompose(g)
    report = centrality_report(g, dec)
    profile = weight_profile(g, dec, m_max)
    br = full_bound_report(g, dec, profile)
    cp = char_poly_exact(g).coeffs if g.n <= EXACT_POLY_LIMIT else None
    return {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "seed": seed,
        "tolerances": {
            "mult_tol": dec.mult_tol,
            "sign_tol": SIGN_TOL,
            "zero_tol": DEFAULT_ZERO_TOL,
        },
        "graph": {
            "nodes": g.n,
            "links": g.num_links,
            "degrees": [int(d) for d in g.degrees],
            "connected": g.stats().connected,
            "labels": list(g.labels),
        },
        "spectrum": {
            "eigenvalues": [float(v) for v in dec.eigenvalues],
            "multiplicity_groups": [[k + 1 for k in grp] for grp in dec.groups],
            "char_poly": list(cp) if cp is not None else None,
        },
        "centrality": {
            "Y": [[float(v) for v in row] for row in report.Y],
            "method": [[str(t) for t in row] for row in report.method],
            "redundancy": [int(v) for v in report.redundancy],
            "max_residual_vs_eigensolver": float(report.residuals.max()),
        },
        "weights": {
            "w": [float(v) for v in profile.w],
            "phi": [float(v) for v in profile.phi],
            "s_X": profile.s_X,
            "s_X2": profile.s_X2,
            "closed_walks": list(profile.W),
            "total_walks": list(profile.Nw),
        },
        "bounds": {
            "entries": len(br.entries),
            "passed": br.pass_count,
            "failed": br.fail_count,
            "skipped": br.skip_count,
            "worst_slack": br.worst_slack,
        },
    }


def _document_csv_lines(doc: dict) -> list[str]:
    lines = [f"# spectramark {doc['tool_version']}"]
    lines.append(f"schema_version,{doc['schema_version']}")
    lines.append(f"seed,{doc['seed'] if doc['seed'] is not None else ''}")
    for key, val in doc["tolerances"].items():
        lines.append(f"tolerance,{key},{_f(val)}")
    gsec = doc["graph"]
    lines.append(f"graph,nodes,{gsec['nodes']}")
    lines.append(f"graph,links,{gsec['links']}")
    lines.append("graph,degrees," + ",".join(str(d) for d in gsec["degrees"]))
    lines.append(f"graph,connected,{int(gsec['connected'])}")
    lines.append("spectrum,eigenvalues," + ",".join(_f(v) for v in doc["spectrum"]["eigenvalues"]))
    if doc["spectrum"]["char_poly"] is not None:
        lines.append("spectrum,char_poly," + ",".join(str(c) for c in doc["spectrum"]["char_poly"]))
    for j, row in enumerate(doc["centrality"]["Y"], start=1):
        lines.append(f"centrality,Y,{j}," + ",".join(_f(v) for v in row))
    lines.append("centrality,redundancy," + ",".join(str(v) for v in doc["centrality"]["redundancy"]))
    lines.append("weights,w," + ",".join(_f(v) for v in doc["weights"]["w"]))
    lines.append("weights,phi," + ",".join(_f(v) for v in doc["weights"]["phi"]))
    lines.append(f"weights,s_X,{_f(doc['weights']['s_X'])}")
    lines.append(f"weights,s_X2,{_f(doc['weights']['s_X2'])}")
    b = doc["bounds"]
    lines.append(f"bounds,passed,{b['passed']}")
    lines.append(f"bounds,failed,{b['failed']}")
    lines.append(f"bounds,skipped,{b['skipped']}")
    lines.append(f"bounds,worst_slack,{_f(b['worst_slack'])}")
    return lines


def _cmd_analyze(args) -> int:
    g = _read_graph(args.input, args.format)
    doc = _analysis_document(g, args.mmax, None)
    if args.out == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(_document_csv_lines(doc)))
    return 0


def _cmd_verify(args) -> int:
    if args.random:
        n, p, count, seed = args.random
        graphs = er_corpus(int(count), 4, int(n), float(p), int(seed), connected_only=False)
        reports = verify_corpus(graphs, m_max=args.mmax, threads=env_threads())
    else:
        if not args.input:
            print("error: give an input path or --random N P COUNT SEED", file=sys.stderr)
            return 2
        g = _read_graph(args.input, args.format)
        reports = [verify_graph(g, args.input, m_max=args.mmax, corrupt=args.corrupt)]

    failed = 0
    skipped = 0
    for rep in reports:
        for c in rep.checks:
            if c.skipped:
                skipped += 1
                print(f"SKIP {rep.graph_label} :: {c.name} ({c.skipped})")
            elif c.passed:
                print(f"PASS {rep.graph_label} :: {c.name} value={c.value:.3e} tol={c.tol:.1e} [{c.anchor}]")
            else:
                failed += 1
                print(f"FAIL {rep.graph_label} :: {c.name} value={c.value:.3e} tol={c.tol:.1e} [{c.anchor}]")
    total = sum(len(r.checks) for r in reports)
    print(f"# checked {total} identities on {len(reports)} graph(s): {failed} failed, {skipped} skipped")
    if failed or (args.strict and skipped):
        return 1
    return 0


def _cmd_polynomials(args) -> int:
    g = _read_graph(args.input, args.format)
    if g.n > EXACT_POLY_LIMIT:
        print(f"error: exact polynomials limited to {EXACT_POLY_LIMIT} nodes", file=sys.stderr)
        return 2
    from .graphs import delete_node

    dec = decompose(g)
    lam = dec.eigenvalues
    if args.grid:
        try:
            lo_s, hi_s, steps_s = args.grid.split(":")
            lo, hi, steps = float(lo_s), float(hi_s), int(steps_s)
            if steps < 1:
                raise ValueError
        except ValueError:
            print("error: --grid expects lo:hi:steps", file=sys.stderr)
            return 2
    else:
        pad = 0.05 * (float(lam[0]) - float(lam[-1]))
        lo, hi, steps = float(lam[-1]) - pad, float(lam[0]) + pad, 201
    xs = np.linspace(lo, hi, steps)
    polys = [char_poly_exact(g)]
    if g.n >= 2:
        polys += [char_poly_exact(delete_node(g, j)) for j in range(1, g.n + 1)]
    cols = [p.eval_grid(xs) for p in polys]
    print(f"# spectramark {__version__}")
    print("# eigenvalues," + ",".join(_f(v) for v in lam))
    print("x,c_A," + ",".join(f"c_del_{j}" for j in range(1, len(polys))))
    for i, x in enumerate(xs):
        print(",".join([_f(x)] + [_f(c[i]) for c in cols]))
    return 0


def _cmd_centrality_grid(args) -> int:
    g = _read_graph(args.input, args.format)
    dec = decompose(g)
    report = centrality_report(g, dec)
    d = g.degrees.astype(float)
    norm_deg = d**2 / float(d @ d) if float(d @ d) > 0 else np.zeros(g.n)
    print(f"# spectramark {__version__}")
    print("# eigenvalues," + ",".join(_f(v) for v in dec.eigenvalues))
    print("node," + ",".join(f"y_k{k}" for k in range(1, g.n + 1)) + ",normalized_degree")
    for j in range(g.n):
        row = ",".join(_f(v) for v in report.Y[j])
        print(f"{g.labels[j]},{row},{_f(norm_deg[j])}")
    return 0


def _cmd_gen(args) -> int:
    g = generate(args.kind, args.params, args.seed)
    text = to_edge_list_text(g) if args.file_format == "edge_list" else to_adjacency_text(g)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(text)
    print(f"wrote {args.kind} graph with {g.n} nodes, {g.num_links} links to {args.out}")
    return 0


def _cmd_complement(args) -> int:
    import warnings

    g = _read_graph(args.input, args.format)
    dec = decompose(g)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        coup = complement_coupling(g, dec)
    live = coup.overlap_residual[~np.isnan(coup.overlap_residual)]
    sums = coup.sum_rule_k[~np.isnan(coup.sum_rule_k)]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "tool_version": __version__,
        "nodes": g.n,
        "theta": [float(v) for v in coup.theta],
        "overlap_residual_max": float(live.max()) if live.size else None,
        "sum_rule_residual_max": float(sums.max()) if sums.size else None,
        "generalized_residual": {str(k): float(v) for k, v in coup.generalized_residual.items()},
        "theta1_slack": coup.theta1_slack,
        "theta1_bound_holds": bool(coup.theta1_slack >= -1e-9),
        "orthogonality_residual": coup.orthogonality_residual,
        "skipped_pairs": coup.skipped_pairs,
        "is_regular": coup.is_regular,
        "regular_offdiag": coup.regular_offdiag,
    }
    print(json.dumps(doc, indent=2))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spectramark",
        description="Spectral graph analysis: centrality reports, identity "
        "verification, polynomial and figure data emission.",
    )
    ap.add_argument("--version", action="version", version=f"spectramark {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("input", help="graph file")
        p.add_argument("--format", choices=("edge_list", "adjacency_matrix"), default="edge_list")

    p = sub.add_parser("analyze", help="full analysis document for one graph")
    add_input(p)
    p.add_argument("--out", choices=("json", "csv"), default="json")
    p.add_argument("--mmax", type=int, default=6)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="machine-check every identity and bound")
    p.add_argument("input", nargs="?", help="graph file (omit when using --random)")
    p.add_argument("--format", choices=("edge_list", "adjacency_matrix"), default="edge_list")
    p.add_argument("--random", nargs=4, metavar=("N", "P", "COUNT", "SEED"),
                   help="verify a seeded random corpus instead of a file")
    p.add_argument("--strict", action="store_true", help="treat skipped checks as failures")
    p.add_argument("--mmax", type=int, default=6)
    p.add_argument("--corrupt", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("polynomials", help="sampled characteristic polynomials (figure data)")
    add_input(p)
    p.add_argument("--grid", help="lo:hi:steps sampling grid")
    p.set_defaults(func=_cmd_polynomials)

    p = sub.add_parser("centrality-grid", help="squared components with degree overlay (figure data)")
    add_input(p)
    p.set_defaults(func=_cmd_centrality_grid)

    p = sub.add_parser("gen", help="write a generated graph to a file")
    p.add_argument("kind", choices=("complete", "star", "path", "cycle", "complete_bipartite", "erdos_renyi"))
    p.add_argument("params", nargs="+", type=float, help="sizes (and p for erdos_renyi)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--file-format", choices=("edge_list", "adjacency_matrix"), default="edge_list")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("complement", help="complement-graph eigenvector coupling report")
    add_input(p)
    p.set_defaults(func=_cmd_complement)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
