"""Command-line front end.

Subcommands: gen, verify, analyze, construct, transform, oracle, encode,
experiment.  Every command prints one canonical-JSON command result to
stdout and exits 0 when the command succeeded, 1 when a checked property
failed (a verifier violation, a false rule check, an unachievable
decomposition), and 2 on bad input or an exceeded search budget.  All
behavior is controlled by flags; given equal files, flags and seeds, output
is byte-identical across runs.  ``--jobs`` is accepted on oracle and
experiment commands for interface stability; execution is sequential and
results never depend on it.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .construct import (
    achieve_labeling,
    bipartite_to_digraph,
    digraph_to_bipartite,
    layered_biclique_labeling,
    lift_to_digraph,
    project_to_bipartite,
    tree_radius_decomposition,
)
from .decomposition import (
    DEFAULT_BUDGET,
    SearchBudgetExceeded,
    check_hub_rule,
    check_p4_rule,
    check_strict_p4_rule,
    distinctness,
    hub_number,
    min_rule_decomposition,
)
from .families import (
    FIXTURE_NAMES,
    build_hadamard,
    build_radius_tree,
    load_fixture,
    sample_random_bipartite,
)
from .graphs import BipartiteGraph, Digraph, GraphError, is_c4_free, radius_center
from .labeling import LabelingError, encode_binary, verify_bipartite, verify_digraph
from .oracle import oracle_achieves, readability_witness
from .report import run_counting_experiment, write_report
from .serialize import (
    FormatError,
    canonical_json,
    decomposition_from_json,
    decomposition_to_json,
    edge_name,
    graph_from_json,
    graph_to_json,
    labeling_from_json,
    labeling_to_json,
    to_dot,
    vertex_name,
)

OK, VIOLATION, ERROR = "ok", "violation", "error"
_EXIT = {OK: 0, VIOLATION: 1, ERROR: 2}


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write_text(path: str, text: str) -> str:
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return path


def _load_bipartite(path: str) -> BipartiteGraph:
    g = graph_from_json(_read_json(path))
    if not isinstance(g, BipartiteGraph):
        raise FormatError(f"{path}: expected a bipartite graph")
    return g


def _load_digraph(path: str) -> Digraph:
    g = graph_from_json(_read_json(path))
    if not isinstance(g, Digraph):
        raise FormatError(f"{path}: expected a digraph")
    return g


def _violations_doc(result) -> list[dict]:
    return [
        {
            "u": vertex_name(v.u),
            "v": vertex_name(v.v),
            "kind": v.kind,
            "overlap": v.overlap,
        }
        for v in result.violations
    ]


def _rule_witness_doc(witness: dict | None) -> dict | None:
    if witness is None:
        return None
    doc = {}
    for key, value in witness.items():
        if key == "path" and value is not None:
            doc[key] = [edge_name(e) for e in value]
        elif key == "pair":
            doc[key] = [vertex_name(v) for v in value]
        elif key == "weights":
            doc[key] = list(value)
        else:
            doc[key] = value
    return doc


# ---------------------------------------------------------------------------
# command handlers: each returns (status, payload, diagnostics)


def cmd_gen(args) -> tuple[str, dict, list[str]]:
    payload: dict = {}
    if args.family == "hadamard":
        graph = build_hadamard(args.k)
    elif args.family == "radius-tree":
        graph, root = build_radius_tree(args.i)
        payload["root"] = vertex_name(root)
    elif args.family == "random":
        graph = sample_random_bipartite(args.n, args.p, args.seed)
    elif args.family == "fixture":
        fixture = load_fixture(args.name)
        graph = fixture.graph
        weights_out = args.weights_out or str(Path(args.out).with_suffix("")) + ".weights.json"
        _write_text(weights_out, canonical_json(decomposition_to_json(fixture.decomposition)))
        payload["weights_file"] = weights_out
        payload["expected"] = fixture.expected
    else:  # pragma: no cover - argparse restricts choices
        raise FormatError(f"unknown family {args.family!r}")
    _write_text(args.out, canonical_json(graph_to_json(graph)))
    payload["graph_file"] = args.out
    if isinstance(graph, BipartiteGraph):
        payload["vertices"] = graph.ns + graph.np
        payload["edges"] = len(graph.edges)
    else:
        payload["vertices"] = graph.n
        payload["arcs"] = len(graph.arcs)
    if args.dot:
        _write_text(args.dot, to_dot(graph))
        payload["dot_file"] = args.dot
    return OK, payload, []


def cmd_verify(args) -> tuple[str, dict, list[str]]:
    if args.model == "bipartite":
        graph = _load_bipartite(args.graph)
        result = verify_bipartite(graph, labeling_from_json(_read_json(args.labeling)))
    else:
        graph = _load_digraph(args.graph)
        result = verify_digraph(graph, labeling_from_json(_read_json(args.labeling)))
    payload = {"model": args.model, "valid": result.ok, "violations": _violations_doc(result)}
    return (OK if result.ok else VIOLATION), payload, list(result.warnings)


_BOOL_CHECKS = ("p4", "strict-p4", "hub", "c4-free")
_VALUE_CHECKS = ("distinctness", "hub-number", "radius", "min-decomposition")


def cmd_analyze(args) -> tuple[str, dict, list[str]]:
    graph = _load_bipartite(args.graph)
    w = decomposition_from_json(_read_json(args.decomposition)) if args.decomposition else None
    results = []
    failed = False
    for check in args.check:
        if check in ("p4", "strict-p4", "hub"):
            if w is None:
                raise FormatError(f"check {check!r} needs --decomposition")
            fn = {"p4": check_p4_rule, "strict-p4": check_strict_p4_rule, "hub": check_hub_rule}[check]
            verdict = fn(graph, w)
            results.append({"check": check, "ok": verdict.ok, "witness": _rule_witness_doc(verdict.witness)})
            failed |= not verdict.ok
        elif check == "c4-free":
            ok = is_c4_free(graph)
            results.append({"check": check, "ok": ok})
            failed |= not ok
        elif check == "distinctness":
            value, pair = distinctness(graph)
            results.append({"check": check, "value": value, "pair": [vertex_name(v) for v in pair]})
        elif check == "hub-number":
            mode = "upper_bound" if args.mode == "upper-bound" else "exact"
            results.append({"check": check, "mode": mode, "value": hub_number(graph, mode, args.budget)})
        elif check == "radius":
            radius, center, _ = radius_center(graph)
            results.append({"check": check, "value": radius, "center": vertex_name(center)})
        elif check == "min-decomposition":
            if not args.rule:
                raise FormatError("check 'min-decomposition' needs --rule")
            k, witness = min_rule_decomposition(graph, args.rule, args.budget)
            results.append(
                {"check": check, "rule": args.rule, "value": k,
                 "decomposition": decomposition_to_json(witness)}
            )
        else:  # pragma: no cover - argparse restricts choices
            raise FormatError(f"unknown check {check!r}")
    return (VIOLATION if failed else OK), {"checks": results}, []


def cmd_construct(args) -> tuple[str, dict, list[str]]:
    graph = _load_bipartite(args.graph)
    payload: dict = {"method": args.method}
    if args.method == "radius":
        w = tree_radius_decomposition(graph)
        if args.decomposition_out:
            _write_text(args.decomposition_out, canonical_json(decomposition_to_json(w)))
            payload["decomposition_file"] = args.decomposition_out
    else:
        if not args.decomposition:
            raise FormatError(f"method {args.method!r} needs --decomposition")
        w = decomposition_from_json(_read_json(args.decomposition))
    builder = layered_biclique_labeling if args.method == "bm" else achieve_labeling
    labeling, trace = builder(graph, w)
    _write_text(args.out, canonical_json(labeling_to_json(labeling)))
    payload.update({"labeling_file": args.out, "len": labeling.length,
                    "alphabet_size": len(labeling.alphabet)})
    if args.trace:
        _write_text(args.trace, canonical_json(_trace_doc(trace, labeling.alphabet)))
        payload["trace_file"] = args.trace
    return OK, payload, []


def _trace_doc(trace, alphabet) -> dict:
    def render(word):
        return "".join(alphabet[c] for c in word)

    steps = []
    if trace.kind == "achieve":
        for step in trace.steps:
            steps.append(
                {
                    "edge": edge_name(step.edge),
                    "weight": step.weight,
                    "filler": render(step.filler),
                    "labels": {vertex_name(v): render(w) for v, w in sorted(step.labels_after.items())},
                }
            )
    else:
        for step in trace.steps:
            steps.append(
                {
                    "layer": step.layer,
                    "bicliques": [
                        {
                            "vertices": [vertex_name(v) for v in rec.vertices],
                            "char": alphabet[rec.char],
                            "splice_edge": edge_name(rec.splice_edge) if rec.splice_edge else None,
                        }
                        for rec in step.bicliques
                    ],
                }
            )
    return {"kind": trace.kind, "steps": steps}


def cmd_transform(args) -> tuple[str, dict, list[str]]:
    payload: dict = {"op": args.op}
    if args.op == "phi":
        out_doc = graph_to_json(digraph_to_bipartite(_load_digraph(args.graph)))
    elif args.op == "psi":
        out_doc = graph_to_json(bipartite_to_digraph(_load_bipartite(args.graph)))
    elif args.op == "lift":
        graph = _load_bipartite(args.graph)
        if not args.labeling:
            raise FormatError("op 'lift' needs --labeling")
        lifted = lift_to_digraph(graph, labeling_from_json(_read_json(args.labeling)))
        out_doc = labeling_to_json(lifted)
        payload["len"] = lifted.length
    elif args.op == "project":
        graph = _load_digraph(args.graph)
        if not args.labeling:
            raise FormatError("op 'project' needs --labeling")
        projected = project_to_bipartite(graph, labeling_from_json(_read_json(args.labeling)))
        out_doc = labeling_to_json(projected)
        payload["len"] = projected.length
    else:  # pragma: no cover - argparse restricts choices
        raise FormatError(f"unknown op {args.op!r}")
    _write_text(args.out, canonical_json(out_doc))
    payload["out_file"] = args.out
    return OK, payload, []


def cmd_oracle(args) -> tuple[str, dict, list[str]]:
    graph = graph_from_json(_read_json(args.graph))
    if args.question == "readability":
        r, witness = readability_witness(graph, args.budget)
        payload = {"readability": r}
        if args.witness_out:
            _write_text(args.witness_out, canonical_json(labeling_to_json(witness)))
            payload["witness_file"] = args.witness_out
        return OK, payload, []
    if not isinstance(graph, BipartiteGraph):
        raise FormatError("oracle achieves expects a bipartite graph")
    w = decomposition_from_json(_read_json(args.decomposition))
    verdict = oracle_achieves(graph, w)
    payload = {"achievable": verdict.achievable}
    if verdict.achievable:
        if args.witness_out:
            _write_text(args.witness_out, canonical_json(labeling_to_json(verdict.witness)))
            payload["witness_file"] = args.witness_out
        return OK, payload, []
    payload["defects"] = [
        {k: (edge_name(v) if k == "edge" else v) for k, v in defect.items()}
        for defect in verdict.defects
    ]
    return VIOLATION, payload, []


def cmd_encode(args) -> tuple[str, dict, list[str]]:
    labeling = labeling_from_json(_read_json(args.labeling))
    encoded = encode_binary(labeling)
    _write_text(args.out, canonical_json(labeling_to_json(encoded)))
    return OK, {"out_file": args.out, "len": encoded.length}, []


def cmd_experiment(args) -> tuple[str, dict, list[str]]:
    payload = run_counting_experiment(args.n, args.samples, args.seed, args.budget)
    diagnostics = []
    if args.out_dir:
        files = write_report(payload, args.out_dir)
        payload["files"] = [str(f) for f in files]
        diagnostics.append(f"report written to {args.out_dir}")
    return OK, payload, diagnostics


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ovlab",
        description="Construct, verify and analyze overlap labelings of digraphs "
        "and balanced bipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate family graphs and fixtures")
    gen_sub = p_gen.add_subparsers(dest="family", required=True)
    g_h = gen_sub.add_parser("hadamard")
    g_h.add_argument("--k", type=int, required=True)
    g_t = gen_sub.add_parser("radius-tree")
    g_t.add_argument("--i", type=int, required=True)
    g_r = gen_sub.add_parser("random")
    g_r.add_argument("--n", type=int, required=True)
    g_r.add_argument("--p", type=float, required=True)
    g_r.add_argument("--seed", type=int, required=True)
    g_f = gen_sub.add_parser("fixture")
    g_f.add_argument("--name", choices=FIXTURE_NAMES, required=True)
    g_f.add_argument("--weights-out")
    for p in (g_h, g_t, g_r, g_f):
        p.add_argument("--out", required=True)
        p.add_argument("--dot")
        p.set_defaults(func=cmd_gen)

    p_verify = sub.add_parser("verify", help="check a labeling against a graph")
    p_verify.add_argument("--graph", required=True)
    p_verify.add_argument("--labeling", required=True)
    p_verify.add_argument("--model", choices=("bipartite", "digraph"), required=True)
    p_verify.set_defaults(func=cmd_verify)

    p_analyze = sub.add_parser("analyze", help="run structural checks and parameters")
    p_analyze.add_argument("--graph", required=True)
    p_analyze.add_argument("--decomposition")
    p_analyze.add_argument(
        "--check", action="append", required=True, choices=_BOOL_CHECKS + _VALUE_CHECKS
    )
    p_analyze.add_argument("--rule", choices=("p4", "strict_p4"))
    p_analyze.add_argument("--mode", choices=("exact", "upper-bound"), default="exact")
    p_analyze.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_analyze.set_defaults(func=cmd_analyze)

    p_construct = sub.add_parser("construct", help="build labelings from decompositions")
    p_construct.add_argument("--method", choices=("achieve", "bm", "radius"), required=True)
    p_construct.add_argument("--graph", required=True)
    p_construct.add_argument("--decomposition")
    p_construct.add_argument("--decomposition-out")
    p_construct.add_argument("--out", required=True)
    p_construct.add_argument("--trace")
    p_construct.set_defaults(func=cmd_construct)

    p_transform = sub.add_parser("transform", help="digraph/bipartite transformations")
    p_transform.add_argument("--op", choices=("phi", "psi", "lift", "project"), required=True)
    p_transform.add_argument("--graph", required=True)
    p_transform.add_argument("--labeling")
    p_transform.add_argument("--out", required=True)
    p_transform.set_defaults(func=cmd_transform)

    p_oracle = sub.add_parser("oracle", help="exact readability and achievability")
    oracle_sub = p_oracle.add_subparsers(dest="question", required=True)
    o_r = oracle_sub.add_parser("readability")
    o_a = oracle_sub.add_parser("achieves")
    o_a.add_argument("--decomposition", required=True)
    for p in (o_r, o_a):
        p.add_argument("--graph", required=True)
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--witness-out")
        p.set_defaults(func=cmd_oracle)

    p_encode = sub.add_parser("encode", help="binary-alphabet reduction of a labeling")
    p_encode.add_argument("--labeling", required=True)
    p_encode.add_argument("--out", required=True)
    p_encode.set_defaults(func=cmd_encode)

    p_exp = sub.add_parser("experiment", help="seeded random-graph experiments")
    exp_sub = p_exp.add_subparsers(dest="experiment", required=True)
    e_c = exp_sub.add_parser("counting")
    e_c.add_argument("--n", type=int, required=True)
    e_c.add_argument("--samples", type=int, default=200)
    e_c.add_argument("--seed", type=int, default=1)
    e_c.add_argument("--out-dir")
    e_c.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    e_c.add_argument("--jobs", type=int, default=1)
    e_c.set_defaults(func=cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        status, payload, diagnostics = args.func(args)
    except (
        GraphError,
        LabelingError,
        FormatError,
        SearchBudgetExceeded,
        OSError,
        json.JSONDecodeError,
    ) as exc:
        status = ERROR
        payload = {"error": str(exc), "error_type": type(exc).__name__}
        diagnostics = []
    sys.stdout.write(
        canonical_json({"status": status, "payload": payload, "diagnostics": diagnostics})
    )
    return _EXIT[status]


if __name__ == "__main__":
    raise SystemExit(main())
