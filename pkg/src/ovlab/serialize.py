"""File formats: canonical JSON for graphs, labelings, decompositions; DOT.

Vertex indices are 1-based in every format.  Vertex keys are ``"s<i>"`` and
``"p<j>"`` for bipartite graphs and plain ``"<i>"`` for digraphs.  Canonical
output sorts object keys and arrays so identical inputs always produce
byte-identical files.
"""

from __future__ import annotations

import json
import re

from .decomposition import Decomposition
from .graphs import BipartiteGraph, Digraph, GraphError, Vertex
from .labeling import Labeling, LabelingError


class FormatError(ValueError):
    """Input file does not match the expected schema."""


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def vertex_name(key) -> str:
    if isinstance(key, tuple):
        return f"{key[0]}{key[1]}"
    return str(key)


_VERTEX_RE = re.compile(r"^(?:(s|p)(\d+)|(\d+))$")


def parse_vertex_name(name: str):
    m = _VERTEX_RE.match(name)
    if not m:
        raise FormatError(f"bad vertex name {name!r}")
    if m.group(3) is not None:
        return int(m.group(3))
    return (m.group(1), int(m.group(2)))


# ---------------------------------------------------------------------------
# graphs


def graph_to_json(g: BipartiteGraph | Digraph) -> dict:
    if isinstance(g, BipartiteGraph):
        return {
            "kind": "bipartite",
            "ns": g.ns,
            "np": g.np,
            "edges": [list(e) for e in sorted(g.edges)],
        }
    return {"kind": "digraph", "n": g.n, "arcs": [list(a) for a in sorted(g.arcs)]}


def graph_from_json(doc: dict) -> BipartiteGraph | Digraph:
    try:
        kind = doc["kind"]
        if kind == "bipartite":
            return BipartiteGraph(doc["ns"], doc["np"], [tuple(e) for e in doc["edges"]])
        if kind == "digraph":
            return Digraph(doc["n"], [tuple(a) for a in doc["arcs"]])
    except (KeyError, TypeError, GraphError) as exc:
        raise FormatError(f"bad graph document: {exc}") from exc
    raise FormatError(f"unknown graph kind {doc.get('kind')!r}")


# ---------------------------------------------------------------------------
# labelings


def labeling_to_json(l: Labeling) -> dict:
    return {
        "len": l.length,
        "alphabet": list(l.alphabet),
        "labels": {vertex_name(k): l.string(k) for k in l.labels},
    }


def labeling_from_json(doc: dict) -> Labeling:
    try:
        labels = {parse_vertex_name(name): text for name, text in doc["labels"].items()}
        out = Labeling.from_strings(labels, doc["alphabet"])
    except (KeyError, TypeError, LabelingError) as exc:
        raise FormatError(f"bad labeling document: {exc}") from exc
    if out.length != doc.get("len", out.length):
        raise FormatError("labeling 'len' disagrees with the label strings")
    return out


# ---------------------------------------------------------------------------
# decompositions


def edge_name(edge, bipartite: bool = True) -> str:
    if bipartite:
        return f"s{edge[0]}-p{edge[1]}"
    return f"{edge[0]}-{edge[1]}"


_EDGE_RE = re.compile(r"^s(\d+)-p(\d+)$")


def decomposition_to_json(w: Decomposition) -> dict:
    return {
        "size": w.size,
        "weights": {edge_name(e): weight for e, weight in sorted(w.weights.items())},
    }


def decomposition_from_json(doc: dict) -> Decomposition:
    try:
        weights = {}
        for name, weight in doc["weights"].items():
            m = _EDGE_RE.match(name)
            if not m:
                raise FormatError(f"bad edge name {name!r}")
            weights[(int(m.group(1)), int(m.group(2)))] = int(weight)
        w = Decomposition(weights)
    except (KeyError, TypeError, GraphError) as exc:
        raise FormatError(f"bad decomposition document: {exc}") from exc
    if "size" in doc and doc["size"] != w.size:
        raise FormatError("decomposition 'size' disagrees with the weights")
    return w


# ---------------------------------------------------------------------------
# DOT export


def to_dot(g: BipartiteGraph | Digraph) -> str:
    lines = []
    if isinstance(g, BipartiteGraph):
        lines.append("graph overlap {")
        lines.append("  rankdir=LR;")
        for s in range(1, g.ns + 1):
            lines.append(f'  "s{s}" [shape=box];')
        for p in range(1, g.np + 1):
            lines.append(f'  "p{p}" [shape=ellipse];')
        for s, p in sorted(g.edges):
            lines.append(f'  "s{s}" -- "p{p}";')
    else:
        lines.append("digraph overlap {")
        for u in range(1, g.n + 1):
            lines.append(f'  "{u}";')
        for u, v in sorted(g.arcs):
            lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
