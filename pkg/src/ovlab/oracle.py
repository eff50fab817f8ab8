"""Exact desk-scale oracles: achievability of a weight function, readability.

The achievability oracle decides whether any labeling realizes a given
weight function exactly, by forced-merge refinement over a position grid.

Normalization lemma (bipartite): if any labeling realizes ``w``, one of
length ``L = max(w)`` does.  Proof: drop outer characters beyond the inner
``L`` positions; every overlap has length at most ``L``, is a relation
between inner affixes only, and those are untouched, so the overlap
structure is identical.  Hence the oracle works on the fixed ``L``-position
grid per vertex: it unions the position equalities forced by each edge's
overlap, assigns one fresh character per equivalence class (the maximally
refined labeling), and accepts iff that labeling realizes ``w``.  This is
sound and complete because any labeling realizing ``w`` is a coarsening of
the refined one, and coarsening can only add or shorten overlaps: a defect
(a short overlap on an edge, an overlap on a non-edge) therefore persists in
every candidate labeling.

Readability searches enumerate weight assignments depth-first in
lexicographic order over a fixed edge order.  The partial-assignment prune
is refinement-internal and monotone (unions only grow along a branch), so a
defect visible on a prefix rules out all of its completions; no rule checker
from the decomposition module is consulted, keeping this oracle an
independent route for the rule/readability cross-checks.

For digraphs the grid has one row of ``r`` positions per vertex and the
candidate arc weights range over ``1..r-1``; a labeling is accepted when it
is injective, realizes every arc weight exactly, and yields no proper
overlap on non-arcs (pairs with equal endpoints included).
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import DEFAULT_BUDGET, SearchBudgetExceeded
from .graphs import BipartiteGraph, Digraph, GraphError
from .labeling import Labeling, default_alphabet, ov


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            if ra < rb:
                self.parent[rb] = ra
            else:
                self.parent[ra] = rb

    def snapshot(self) -> list[int]:
        return self.parent.copy()

    def restore(self, saved: list[int]) -> None:
        self.parent = saved


def _canonical_labeling(words: dict, length: int) -> Labeling:
    """Rename equivalence classes to 0..m-1 in first-appearance order."""
    remap: dict[int, int] = {}
    out = {}
    for key in sorted(words):
        out[key] = tuple(remap.setdefault(c, len(remap)) for c in words[key])
    return Labeling(length, default_alphabet(len(remap)), out)


@dataclass(frozen=True)
class AchievesVerdict:
    achievable: bool
    witness: Labeling | None
    defects: tuple[dict, ...]


def oracle_achieves(g: BipartiteGraph, w) -> AchievesVerdict:
    """Decide whether some overlap labeling realizes ``w`` exactly."""
    if set(w.weights) != g.edges:
        raise GraphError("decomposition must weight exactly the edges of the graph")
    length = w.size
    words = _words_for_assignment(g, w.weights, length)
    defects = []
    for s in range(1, g.ns + 1):
        for p in range(1, g.np + 1):
            o = ov(words[("s", s)], words[("p", p)])
            if (s, p) in g.edges:
                if o != w[(s, p)]:
                    defects.append(
                        {"edge": (s, p), "kind": "short_overlap", "overlap": o, "expected": w[(s, p)]}
                    )
            elif o > 0:
                defects.append({"edge": (s, p), "kind": "unexpected_overlap", "overlap": o})
    if defects:
        return AchievesVerdict(False, None, tuple(defects))
    return AchievesVerdict(True, _canonical_labeling(words, length), ())


class _Grid:
    """Flat cell indexing for ``rows`` strings of ``width`` positions."""

    def __init__(self, rows: int, width: int):
        self.width = width
        self.total = rows * width

    def at(self, row: int, pos: int) -> int:
        return row * self.width + pos


def _search_bipartite(g: BipartiteGraph, k: int) -> Labeling | None:
    """Lexicographically least achievable weighting with max weight k, if any."""
    edges = sorted(
        g.edges, key=lambda e: (-(len(g.adj_s[e[0]]) + len(g.adj_p[e[1]])), e)
    )
    m = len(edges)
    pairs = [(s, p) for s in range(1, g.ns + 1) for p in range(1, g.np + 1)]
    edge_pos = {e: i for i, e in enumerate(edges)}
    cells = _Grid(g.ns + g.np, k)
    uf = _UnionFind(cells.total)
    assign = [0] * m

    def words_now() -> dict:
        out = {}
        for s in range(1, g.ns + 1):
            out[("s", s)] = tuple(uf.find(cells.at(s - 1, i)) for i in range(k))
        for p in range(1, g.np + 1):
            out[("p", p)] = tuple(uf.find(cells.at(g.ns + p - 1, i)) for i in range(k))
        return out

    def defective(done: int) -> bool:
        words = words_now()
        for s, p in pairs:
            o = ov(words[("s", s)], words[("p", p)])
            if (s, p) in g.edges:
                pos = edge_pos[(s, p)]
                if pos < done and o < assign[pos]:
                    return True
            elif o > 0:
                return True
        return False

    def dfs(depth: int) -> bool:
        if depth == m:
            return max(assign) == k
        s, p = edges[depth]
        for t in range(1, k + 1):
            assign[depth] = t
            saved = uf.snapshot()
            for i in range(t):
                uf.union(cells.at(s - 1, k - t + i), cells.at(g.ns + p - 1, i))
            if not defective(depth + 1) and dfs(depth + 1):
                return True
            uf.restore(saved)
        assign[depth] = 0
        return False

    if dfs(0):
        # the union-find is left in its successful state
        return _canonical_labeling(words_now(), k)
    return None


def _words_for_assignment(g: BipartiteGraph, weights: dict, length: int) -> dict:
    cells = _Grid(g.ns + g.np, length)
    uf = _UnionFind(cells.total)
    for (s, p), weight in sorted(weights.items()):
        for i in range(weight):
            uf.union(cells.at(s - 1, length - weight + i), cells.at(g.ns + p - 1, i))
    out = {}
    for s in range(1, g.ns + 1):
        out[("s", s)] = tuple(uf.find(cells.at(s - 1, i)) for i in range(length))
    for p in range(1, g.np + 1):
        out[("p", p)] = tuple(uf.find(cells.at(g.ns + p - 1, i)) for i in range(length))
    return out


def _readability_bipartite(g: BipartiteGraph, budget: int) -> tuple[int, Labeling]:
    if not g.edges:
        return 0, Labeling(0, (), {v: () for v in g.vertices()})
    m = len(g.edges)
    k = 1
    while True:
        if k**m > budget:
            raise SearchBudgetExceeded(
                f"readability search at length {k} needs {k**m} candidates"
            )
        witness = _search_bipartite(g, k)
        if witness is not None:
            return k, witness
        k += 1


def _search_digraph(d: Digraph, r: int) -> Labeling | None:
    arcs = sorted(d.arcs)
    m = len(arcs)
    cells = _Grid(d.n, r)
    uf = _UnionFind(cells.total)
    assign = [0] * m
    arc_pos = {a: i for i, a in enumerate(arcs)}

    def words_now() -> dict:
        return {
            u: tuple(uf.find(cells.at(u - 1, i)) for i in range(r))
            for u in range(1, d.n + 1)
        }

    def defective(done: int) -> bool:
        words = words_now()
        items = sorted(words.items())
        for i, (u, wu) in enumerate(items):
            for v, wv in items[i + 1 :]:
                if wu == wv:
                    return True
        for u in range(1, d.n + 1):
            for v in range(1, d.n + 1):
                o = ov(words[u], words[v])
                if (u, v) in d.arcs:
                    pos = arc_pos[(u, v)]
                    if pos < done and o < assign[pos]:
                        return True
                elif 0 < o < r:
                    return True
        return False

    def dfs(depth: int) -> bool:
        if depth == m:
            return True
        u, v = arcs[depth]
        for t in range(1, r):
            assign[depth] = t
            saved = uf.snapshot()
            for i in range(t):
                uf.union(cells.at(u - 1, r - t + i), cells.at(v - 1, i))
            if not defective(depth + 1) and dfs(depth + 1):
                return True
            uf.restore(saved)
        assign[depth] = 0
        return False

    if m == 0:
        if defective(0):
            return None
        return _canonical_labeling(words_now(), r)
    if dfs(0):
        return _canonical_labeling(words_now(), r)
    return None


def _readability_digraph(d: Digraph, budget: int) -> tuple[int, Labeling]:
    if d.n <= 1 and not d.arcs:
        return 0, Labeling(0, (), {u: () for u in range(1, d.n + 1)})
    m = len(d.arcs)
    r = 1
    while True:
        if m and r > 1 and (r - 1) ** m > budget:
            raise SearchBudgetExceeded(
                f"readability search at length {r} needs {(r - 1) ** m} candidates"
            )
        witness = _search_digraph(d, r)
        if witness is not None:
            return r, witness
        r += 1


def readability_witness(
    host: BipartiteGraph | Digraph, budget: int = DEFAULT_BUDGET
) -> tuple[int, Labeling]:
    """Exact readability together with a witnessing labeling."""
    if isinstance(host, BipartiteGraph):
        return _readability_bipartite(host, budget)
    if isinstance(host, Digraph):
        return _readability_digraph(host, budget)
    raise GraphError(f"unsupported input: {type(host).__name__}")


def oracle_readability(host: BipartiteGraph | Digraph, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest uniform label length realizing the graph's adjacency.

    Bipartite graphs use the suffix-to-prefix model (no injectivity, edges at
    any positive overlap); digraphs use the injective proper-overlap model.
    """
    return readability_witness(host, budget)[0]
