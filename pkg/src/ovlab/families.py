"""Named graph families, counterexample fixtures, and seeded random graphs.

The random generator is a 64-bit linear congruential generator with the
constants

    state' = (6364136223846793005 * state + 1442695040888963407) mod 2**64

and uniform draws taken as ``(state' >> 11) / 2**53``, so any implementation
can reproduce the exact same graphs from a seed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decomposition import Decomposition
from .graphs import BipartiteGraph, GraphError, Vertex


class Lcg:
    """Deterministic 64-bit linear congruential generator."""

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_unit(self) -> float:
        """Uniform draw in [0, 1) from the top 53 bits of the new state."""
        self.state = (self.MULT * self.state + self.INC) & self.MASK
        return (self.state >> 11) / float(1 << 53)

    def next_int(self, bound: int) -> int:
        """Uniform draw from 0..bound-1."""
        return int(self.next_unit() * bound)


def build_biclique(ns: int, np: int) -> BipartiteGraph:
    return BipartiteGraph(ns, np, ((s, p) for s in range(1, ns + 1) for p in range(1, np + 1)))


def build_path(n: int) -> BipartiteGraph:
    """Path s1-p1-s2-p2-... on n vertices, alternating parts."""
    if n < 1:
        raise GraphError("a path needs at least one vertex")
    edges = []
    for i in range(1, n):
        half = (i + 1) // 2
        edges.append((half, half) if i % 2 else (half + 1, half))
    return BipartiteGraph((n + 1) // 2, n // 2, edges)


def build_cycle(n: int) -> BipartiteGraph:
    """Even cycle s1-p1-s2-...-pm-s1; edge order follows the cycle."""
    if n < 4 or n % 2:
        raise GraphError("a bipartite cycle needs an even number >= 4 of vertices")
    return BipartiteGraph(n // 2, n // 2, cycle_edges(n))


def cycle_edges(n: int) -> list[tuple[int, int]]:
    """The edges of :func:`build_cycle` in cyclic order."""
    m = n // 2
    out = []
    for i in range(1, m + 1):
        out.append((i, i))
        out.append((i + 1, i) if i < m else (1, m))
    return out


def build_hadamard(k: int) -> BipartiteGraph:
    """Bipartite graph on the nonzero k-bit vectors, edges at odd inner products.

    Vertex ``i`` of either part stands for the binary vector of ``i``; the
    graph has ``2*(2**k - 1)`` vertices, uniform degree ``2**(k-1)``, and
    ``(2**k - 1) * 2**(k-1)`` edges.
    """
    if not 1 <= k <= 12:
        raise GraphError("hadamard family is generated for 1 <= k <= 12")
    n = (1 << k) - 1
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if bin(i & j).count("1") % 2 == 1
    ]
    return BipartiteGraph(n, n, edges)


def build_radius_tree(i: int) -> tuple[BipartiteGraph, Vertex]:
    """The recursive tree family whose radius equals its index.

    ``T_0`` is a single vertex; ``T_i`` joins a new root to the roots of
    ``i`` disjoint copies of ``T_{i-1}``.  Returns the tree and its root
    (degree ``i``, eccentricity at most ``i``).  Parts follow depth parity,
    the root on the s side; identifiers are assigned in breadth-first order.
    """
    if not 0 <= i <= 6:
        raise GraphError("radius-tree family is generated for 0 <= i <= 6")

    counter = [0]
    edges_raw: list[tuple[int, int]] = []

    def make(depth_left: int) -> int:
        counter[0] += 1
        node = counter[0]
        for _ in range(depth_left):
            child = make(depth_left - 1)
            edges_raw.append((node, child))
        return node

    root_raw = make(i)
    adj: dict[int, list[int]] = {v: [] for v in range(1, counter[0] + 1)}
    for a, b in edges_raw:
        adj[a].append(b)
        adj[b].append(a)
    depth = {root_raw: 0}
    order = [root_raw]
    for v in order:
        for w in sorted(adj[v]):
            if w not in depth:
                depth[w] = depth[v] + 1
                order.append(w)
    names: dict[int, Vertex] = {}
    ns = np = 0
    for v in order:
        if depth[v] % 2 == 0:
            ns += 1
            names[v] = ("s", ns)
        else:
            np += 1
            names[v] = ("p", np)
    edges = []
    for a, b in edges_raw:
        sa, pa = (names[a], names[b]) if names[a][0] == "s" else (names[b], names[a])
        edges.append((sa[1], pa[1]))
    return BipartiteGraph(ns, np, edges), names[root_raw]


@dataclass(frozen=True)
class Fixture:
    """A bundled graph + decomposition with its expected check outcomes."""

    name: str
    graph: BipartiteGraph
    decomposition: Decomposition
    expected: dict[str, bool]


FIXTURE_NAMES = ("c6_paper", "fig1", "p4_453")


def load_fixture(name: str) -> Fixture:
    """Bundled counterexample fixtures.

    * ``c6_paper`` - the six-cycle with weights 2, 4, 2, 2, 3, 1 around the
      cycle: passes the path rule yet no labeling realizes those weights.
    * ``fig1`` - a six-vertex graph containing a four-cycle whose weights
      pass even the strict path rule yet cannot be realized.
    * ``p4_453`` - the four-vertex path weighted 4, 5, 3: passes the hub
      rule, fails the path rule, cannot be realized.
    """
    if name == "c6_paper":
        graph = build_cycle(6)
        weights = dict(zip(cycle_edges(6), (2, 4, 2, 2, 3, 1)))
        return Fixture(
            name,
            graph,
            Decomposition(weights),
            {"p4": True, "achievable": False},
        )
    if name == "fig1":
        # drawn with left column 1, 3, 5 (s1..s3) and right column 2, 4, 6
        # (p1..p3)
        graph = BipartiteGraph(
            3, 3, [(1, 1), (2, 1), (2, 2), (2, 3), (3, 2), (1, 2)]
        )
        weights = {
            (1, 1): 4,
            (2, 1): 3,
            (2, 2): 1,
            (2, 3): 2,
            (3, 2): 1,
            (1, 2): 3,
        }
        return Fixture(
            name,
            graph,
            Decomposition(weights),
            {"strict_p4": True, "achievable": False},
        )
    if name == "p4_453":
        graph = build_path(4)
        weights = {(1, 1): 4, (2, 1): 5, (2, 2): 3}
        return Fixture(
            name,
            graph,
            Decomposition(weights),
            {"hub": True, "p4": False, "achievable": False},
        )
    raise GraphError(f"unknown fixture {name!r}; known: {', '.join(FIXTURE_NAMES)}")


def sample_random_bipartite(n: int, p: float, seed: int) -> BipartiteGraph:
    """Each of the n*n candidate edges appears independently with probability p.

    Candidates are drawn in row order ``(s=1..n, p=1..n)`` from the seeded
    generator, so two runs with equal arguments yield the same graph.
    """
    if n < 0:
        raise GraphError("part size must be nonnegative")
    rng = Lcg(seed)
    edges = [
        (s, q)
        for s in range(1, n + 1)
        for q in range(1, n + 1)
        if rng.next_unit() < p
    ]
    return BipartiteGraph(n, n, edges)
