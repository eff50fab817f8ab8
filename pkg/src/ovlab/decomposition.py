"""Edge-weight decompositions and the rules a labeling's weights must obey.

A decomposition assigns every edge a positive integer weight; its size is the
maximum weight and its layer ``i`` collects the weight-``i`` edges.  Three
checkable rules constrain which decompositions can arise from overlap
labelings, and two exhaustive searches compute the smallest rule-satisfying
size.  Searches enumerate complete weight assignments in lexicographic order
over a fixed edge order, pruning a branch as soon as a fully-assigned
four-vertex path violates the rule, so the reported witness is the
lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping

from .graphs import (
    BipartiteGraph,
    Edge,
    GraphError,
    Vertex,
    edge_color_bipartite,
    enumerate_induced_p4s,
    is_c4_free,
    is_disjoint_union_of_bicliques,
    is_tree,
)


class SearchBudgetExceeded(RuntimeError):
    """Raised when an exhaustive search would exceed its candidate budget."""


DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class Decomposition:
    """Weight function ``edge -> positive int``; size is the max weight."""

    weights: Mapping[Edge, int]

    def __init__(self, weights: Mapping[Edge, int]):
        fixed = {}
        for e, w in weights.items():
            if int(w) < 1:
                raise GraphError(f"weight of {e!r} must be a positive integer, got {w!r}")
            fixed[(int(e[0]), int(e[1]))] = int(w)
        object.__setattr__(self, "weights", fixed)

    @property
    def size(self) -> int:
        return max(self.weights.values(), default=0)

    def layer(self, i: int) -> frozenset[Edge]:
        return frozenset(e for e, w in self.weights.items() if w == i)

    def __getitem__(self, edge: Edge) -> int:
        return self.weights[edge]


@dataclass(frozen=True)
class RuleVerdict:
    ok: bool
    witness: dict | None = None


def _require_complete(g: BipartiteGraph, w: Decomposition) -> None:
    if set(w.weights) != g.edges:
        raise GraphError("decomposition must weight exactly the edges of the graph")


def _p4_verdict(g: BipartiteGraph, w: Decomposition, strict: bool) -> RuleVerdict:
    _require_complete(g, w)
    for e1, mid, e3 in enumerate_induced_p4s(g):
        w1, wm, w3 = w[e1], w[mid], w[e3]
        if wm == max(w1, wm, w3):
            bad = wm <= w1 + w3 if strict else wm < w1 + w3
            if bad:
                return RuleVerdict(False, {"path": (e1, mid, e3), "weights": (w1, wm, w3)})
    return RuleVerdict(True)


def check_p4_rule(g: BipartiteGraph, w: Decomposition) -> RuleVerdict:
    """On every induced four-vertex path, a maximal middle weight must be at
    least the sum of the outer two."""
    return _p4_verdict(g, w, strict=False)


def check_strict_p4_rule(g: BipartiteGraph, w: Decomposition) -> RuleVerdict:
    """As :func:`check_p4_rule` but the inequality is strict."""
    return _p4_verdict(g, w, strict=True)


def _layer_graph(g: BipartiteGraph, edges: Iterable[Edge]) -> BipartiteGraph:
    return BipartiteGraph(g.ns, g.np, edges)


def check_hub_rule(g: BipartiteGraph, w: Decomposition) -> RuleVerdict:
    """Hierarchical-union-of-bicliques rule.

    Every layer must be a disjoint union of bicliques, and two vertices that
    are non-isolated twins in some layer must be twins in every lower layer.
    """
    _require_complete(g, w)
    k = w.size
    layers = [None] + [_layer_graph(g, w.layer(i)) for i in range(1, k + 1)]
    for i in range(1, k + 1):
        ok, path = is_disjoint_union_of_bicliques(layers[i])
        if not ok:
            return RuleVerdict(False, {"reason": "layer_not_bicliques", "layer": i, "path": path})
    for i in range(2, k + 1):
        gi = layers[i]
        for side, count in (("s", g.ns), ("p", g.np)):
            for a, b in combinations(range(1, count + 1), 2):
                na, nb = gi.neighbors((side, a)), gi.neighbors((side, b))
                if not na or na != nb:
                    continue
                for j in range(1, i):
                    gj = layers[j]
                    if gj.neighbors((side, a)) != gj.neighbors((side, b)):
                        return RuleVerdict(
                            False,
                            {
                                "reason": "hierarchy_breach",
                                "upper_layer": i,
                                "lower_layer": j,
                                "pair": ((side, a), (side, b)),
                            },
                        )
    return RuleVerdict(True)


def distinctness(g: BipartiteGraph) -> tuple[int, tuple[Vertex, Vertex]]:
    """Minimum over same-part pairs of the larger one-sided neighborhood
    difference, with one minimizing pair."""
    if g.ns < 2 or g.np < 2:
        raise GraphError("distinctness needs at least two vertices in each part")
    best: tuple[int, tuple[Vertex, Vertex]] | None = None
    for side, count in (("s", g.ns), ("p", g.np)):
        for a, b in combinations(range(1, count + 1), 2):
            na, nb = g.neighbors((side, a)), g.neighbors((side, b))
            dt = max(len(na - nb), len(nb - na))
            if best is None or dt < best[0]:
                best = (dt, ((side, a), (side, b)))
    assert best is not None
    return best


def hub_number(g: BipartiteGraph, mode: str = "exact", budget: int = DEFAULT_BUDGET) -> int:
    """Smallest size of a decomposition satisfying the hub rule.

    ``exact`` enumerates weight assignments level by level; a graph always
    decomposes into max-degree many matchings (Koenig's line coloring
    theorem) and matchings satisfy the rule, so the search never has to go
    past ``Delta`` and that level needs no enumeration.  ``upper_bound``
    just edge-colors and returns ``Delta``.  Edgeless graphs report 0.
    """
    if not g.edges:
        return 0
    if mode == "upper_bound":
        return max(edge_color_bipartite(g).values())
    if mode != "exact":
        raise GraphError(f"unknown hub_number mode: {mode!r}")
    if is_disjoint_union_of_bicliques(g)[0]:
        return 1
    delta = g.max_degree()
    edges = sorted(g.edges)
    m = len(edges)
    for k in range(2, delta):
        if k**m > budget:
            raise SearchBudgetExceeded(f"hub search at size {k} needs {k**m} candidates")
        for assignment in product(range(1, k + 1), repeat=m):
            w = Decomposition(dict(zip(edges, assignment)))
            if check_hub_rule(g, w).ok:
                return k
    return delta


def _ordered_edges(g: BipartiteGraph) -> list[Edge]:
    # central (high degree-sum) edges first so path constraints close early
    return sorted(g.edges, key=lambda e: (-(len(g.adj_s[e[0]]) + len(g.adj_p[e[1]])), e))


def min_rule_decomposition(
    g: BipartiteGraph, rule: str, budget: int = DEFAULT_BUDGET
) -> tuple[int, Decomposition]:
    """Smallest decomposition size satisfying the chosen path rule.

    ``p4`` mode requires a tree; ``strict_p4`` mode requires a C4-free graph.
    Exhaustive depth-first search over weight assignments for increasing
    size, pruning on the first violated fully-assigned path.
    """
    if rule == "p4":
        strict = False
        if not is_tree(g):
            raise GraphError("p4-rule minimization is supported for trees only")
    elif rule == "strict_p4":
        strict = True
        if not is_c4_free(g):
            raise GraphError("strict-p4-rule minimization requires a C4-free graph")
    else:
        raise GraphError(f"unknown rule: {rule!r}")

    edges = _ordered_edges(g)
    m = len(edges)
    if m == 0:
        return 0, Decomposition({})
    pos = {e: i for i, e in enumerate(edges)}
    triples_at: list[list[tuple[int, int, int]]] = [[] for _ in range(m)]
    for e1, mid, e3 in enumerate_induced_p4s(g):
        i1, im, i3 = pos[e1], pos[mid], pos[e3]
        triples_at[max(i1, im, i3)].append((i1, im, i3))

    assign = [0] * m

    def ok_at(depth: int) -> bool:
        for i1, im, i3 in triples_at[depth]:
            w1, wm, w3 = assign[i1], assign[im], assign[i3]
            if wm == max(w1, wm, w3):
                if (wm <= w1 + w3) if strict else (wm < w1 + w3):
                    return False
        return True

    def dfs(depth: int, k: int) -> bool:
        if depth == m:
            return True
        for t in range(1, k + 1):
            assign[depth] = t
            if ok_at(depth) and dfs(depth + 1, k):
                return True
        assign[depth] = 0
        return False

    k = 1
    while True:
        if k**m > budget:
            raise SearchBudgetExceeded(f"rule search at size {k} needs {k**m} candidates")
        if dfs(0, k):
            return k, Decomposition(dict(zip(edges, assign)))
        k += 1
