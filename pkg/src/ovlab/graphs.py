"""Graph types and structural predicates.

Two immutable graph kinds are used throughout:

* :class:`BipartiteGraph` with a distinguished suffix side (``s``) and prefix
  side (``p``); vertices are dense 1-based integers within each part.
* :class:`Digraph` on vertices ``1..n``, self-loops allowed, no parallel arcs.

Vertices of a bipartite graph are addressed as ``("s", i)`` / ``("p", j)``
pairs.  All derived views (adjacency, components, levels) are computed fresh
from the immutable edge set.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

Vertex = tuple[str, int]
Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input or a violated operation precondition."""


def _check_side(v: Vertex) -> None:
    if not (isinstance(v, tuple) and len(v) == 2 and v[0] in ("s", "p")):
        raise GraphError(f"not a bipartite vertex: {v!r}")


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with parts ``s`` (suffix side) and ``p`` (prefix side).

    ``edges`` holds ``(s_index, p_index)`` pairs, both 1-based.
    """

    ns: int
    np: int
    edges: frozenset[Edge]

    def __init__(self, ns: int, np: int, edges=()):
        if ns < 0 or np < 0:
            raise GraphError("part sizes must be nonnegative")
        es = set()
        for e in edges:
            s, p = e
            if not (1 <= s <= ns and 1 <= p <= np):
                raise GraphError(f"edge {e!r} out of range for parts ({ns},{np})")
            es.add((int(s), int(p)))
        object.__setattr__(self, "ns", int(ns))
        object.__setattr__(self, "np", int(np))
        object.__setattr__(self, "edges", frozenset(es))

    @cached_property
    def adj_s(self) -> tuple[frozenset[int], ...]:
        """adj_s[i] = p-neighbors of s-vertex i (index 0 unused)."""
        out: list[set[int]] = [set() for _ in range(self.ns + 1)]
        for s, p in self.edges:
            out[s].add(p)
        return tuple(frozenset(x) for x in out)

    @cached_property
    def adj_p(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.np + 1)]
        for s, p in self.edges:
            out[p].add(s)
        return tuple(frozenset(x) for x in out)

    def neighbors(self, v: Vertex) -> frozenset[int]:
        _check_side(v)
        side, i = v
        if side == "s":
            if not 1 <= i <= self.ns:
                raise GraphError(f"no such vertex: {v!r}")
            return self.adj_s[i]
        if not 1 <= i <= self.np:
            raise GraphError(f"no such vertex: {v!r}")
        return self.adj_p[i]

    def vertices(self) -> list[Vertex]:
        """All vertices, s-part first; this is the global tie-break order."""
        return [("s", i) for i in range(1, self.ns + 1)] + [
            ("p", j) for j in range(1, self.np + 1)
        ]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        if not self.edges:
            return 0
        return max(
            max((len(x) for x in self.adj_s[1:]), default=0),
            max((len(x) for x in self.adj_p[1:]), default=0),
        )

    def is_balanced(self) -> bool:
        return self.ns == self.np


@dataclass(frozen=True)
class Digraph:
    """Directed graph on vertices ``1..n``; self-loops allowed."""

    n: int
    arcs: frozenset[Edge]

    def __init__(self, n: int, arcs=()):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        store = set()
        for a in arcs:
            u, v = a
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"arc {a!r} out of range for n={n}")
            store.add((int(u), int(v)))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "arcs", frozenset(store))


# ---------------------------------------------------------------------------
# neighborhood predicates


def common_neighbors(g: BipartiteGraph, u: Vertex, v: Vertex) -> frozenset[int]:
    """Common neighbors of two same-part vertices (a set in the other part)."""
    _check_side(u)
    _check_side(v)
    if u[0] != v[0]:
        raise GraphError("common_neighbors requires two vertices in the same part")
    return g.neighbors(u) & g.neighbors(v)


NOT_TWINS = "not_twins"
ISOLATED_TWINS = "isolated_twins"
NON_ISOLATED_TWINS = "non_isolated_twins"


def twin_status(g: BipartiteGraph, u: Vertex, v: Vertex) -> str:
    """Classify a same-part pair as twins (equal neighborhoods) or not.

    Returns one of ``not_twins``, ``isolated_twins``, ``non_isolated_twins``.
    """
    if u == v:
        raise GraphError("twin_status needs two distinct vertices")
    if u[0] != v[0]:
        raise GraphError("twin_status requires two vertices in the same part")
    nu, nv = g.neighbors(u), g.neighbors(v)
    if nu != nv:
        return NOT_TWINS
    return NON_ISOLATED_TWINS if nu else ISOLATED_TWINS


def is_c4_free(g: BipartiteGraph) -> bool:
    """True iff no two same-part vertices share two or more neighbors."""
    for adj, size in ((g.adj_s, g.ns), (g.adj_p, g.np)):
        for i, j in combinations(range(1, size + 1), 2):
            if len(adj[i] & adj[j]) >= 2:
                return False
    return True


# ---------------------------------------------------------------------------
# induced four-vertex paths and biclique structure

P4 = tuple[Edge, Edge, Edge]


def enumerate_induced_p4s(g: BipartiteGraph) -> list[P4]:
    """Every induced four-vertex path, once, as ``(e1, middle, e3)``.

    A path and its reversal are the same item; the orientation with the
    lexicographically smaller outer edge first is kept.  Scans all 2+2 vertex
    subsets, which is fine at desk scale (n <= 32).
    """
    out: list[P4] = []
    for s1, s2 in combinations(range(1, g.ns + 1), 2):
        for p1, p2 in combinations(range(1, g.np + 1), 2):
            present = [
                (s, p)
                for s, p in ((s1, p1), (s1, p2), (s2, p1), (s2, p2))
                if p in g.adj_s[s]
            ]
            if len(present) != 3:
                continue
            # exactly one s-p pair missing: its endpoints are the path ends,
            # so the middle edge joins the two remaining vertices
            all4 = {(s1, p1), (s1, p2), (s2, p1), (s2, p2)}
            (miss,) = all4 - set(present)
            mid = (s1 + s2 - miss[0], p1 + p2 - miss[1])
            outer = sorted(e for e in present if e != mid)
            out.append((outer[0], mid, outer[1]))
    return out


def connected_components(g: BipartiteGraph) -> list[set[Vertex]]:
    seen: set[Vertex] = set()
    comps: list[set[Vertex]] = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            side, i = v
            other = "p" if side == "s" else "s"
            for j in g.neighbors(v):
                w = (other, j)
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def is_disjoint_union_of_bicliques(g: BipartiteGraph) -> tuple[bool, P4 | None]:
    """Decide whether every component is complete bipartite.

    On failure also returns one induced four-vertex path as witness.  The
    verdict is computed from component edge counts, independently of the
    induced-path scan used for the witness.
    """
    for comp in connected_components(g):
        cs = sum(1 for v in comp if v[0] == "s")
        cp = len(comp) - cs
        ne = sum(1 for s, p in g.edges if ("s", s) in comp)
        if ne != cs * cp:
            paths = enumerate_induced_p4s(g)
            return False, paths[0] if paths else None
    return True, None


# ---------------------------------------------------------------------------
# distances, radius, trees


def _bfs_levels(g: BipartiteGraph, start: Vertex) -> dict[Vertex, int]:
    dist = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        side, _ = v
        other = "p" if side == "s" else "s"
        for j in g.neighbors(v):
            w = (other, j)
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_connected(g: BipartiteGraph) -> bool:
    verts = g.vertices()
    if not verts:
        return True
    return len(_bfs_levels(g, verts[0])) == len(verts)


def is_forest(g: BipartiteGraph) -> bool:
    """True iff the graph has no cycle."""
    nv = g.ns + g.np
    return len(g.edges) == nv - len(connected_components(g))


def is_tree(g: BipartiteGraph) -> bool:
    return is_connected(g) and len(g.edges) == g.ns + g.np - 1


def radius_center(g: BipartiteGraph) -> tuple[int, Vertex, list[set[Vertex]]]:
    """Radius, a center vertex, and the BFS levels from that center.

    The center is the minimum-eccentricity vertex, ties broken by the global
    vertex order (s-part first, then index).  Requires a connected graph.
    """
    verts = g.vertices()
    if not verts:
        raise GraphError("radius of the empty graph is undefined")
    nv = len(verts)
    best: tuple[int, Vertex] | None = None
    best_dist: dict[Vertex, int] | None = None
    for v in verts:
        dist = _bfs_levels(g, v)
        if len(dist) != nv:
            raise GraphError("radius_center requires a connected graph")
        ecc = max(dist.values())
        if best is None or ecc < best[0]:
            best = (ecc, v)
            best_dist = dist
    assert best is not None and best_dist is not None
    radius, center = best
    levels: list[set[Vertex]] = [set() for _ in range(radius + 1)]
    for w, d in best_dist.items():
        levels[d].add(w)
    return radius, center, levels


# ---------------------------------------------------------------------------
# edge coloring (proper, Delta colors, bipartite)


def edge_color_bipartite(g: BipartiteGraph) -> dict[Edge, int]:
    """Properly color the edges with colors ``1..Delta`` by chain flipping.

    Every color class is a matching and the classes partition the edge set;
    bipartite graphs always admit exactly ``Delta`` classes.  Deterministic:
    edges are processed in sorted order and the smallest available colors are
    chosen.
    """
    if not g.edges:
        raise GraphError("edge coloring needs at least one edge")
    delta = g.max_degree()
    colors = range(1, delta + 1)
    # color_at[vertex][color] -> opposite endpoint
    at_s: list[dict[int, int]] = [dict() for _ in range(g.ns + 1)]
    at_p: list[dict[int, int]] = [dict() for _ in range(g.np + 1)]
    coloring: dict[Edge, int] = {}

    for s, p in sorted(g.edges):
        c = next((x for x in colors if x not in at_s[s] and x not in at_p[p]), None)
        if c is None:
            a = next(x for x in colors if x not in at_s[s])
            b = next(x for x in colors if x not in at_p[p])
            # walk the maximal a/b-alternating path from p; it cannot reach s
            # (s has no a-edge and s-side vertices are entered via a-edges)
            chain: list[tuple[Edge, int]] = []
            side, cur, want = "p", p, a
            while True:
                table = at_p[cur] if side == "p" else at_s[cur]
                if want not in table:
                    break
                nxt = table[want]
                edge = (nxt, cur) if side == "p" else (cur, nxt)
                chain.append((edge, want))
                side = "s" if side == "p" else "p"
                cur = nxt
                want = b if want == a else a
            for (cs, cp), old in chain:
                del at_s[cs][old]
                del at_p[cp][old]
            for (cs, cp), old in chain:
                new = b if old == a else a
                coloring[(cs, cp)] = new
                at_s[cs][new] = cp
                at_p[cp][new] = cs
            c = a
        coloring[(s, p)] = c
        at_s[s][c] = p
        at_p[p][c] = s
    return coloring
