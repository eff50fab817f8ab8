"""Shared test helpers: tree enumeration, bipartite conversion, samplers."""

from __future__ import annotations

from collections import deque
from itertools import product

import pytest

from ovlab import BipartiteGraph, is_c4_free
from ovlab.families import Lcg


def prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence over [n] into the labeled tree's edges."""
    degree = [1] * (n + 1)
    for v in seq:
        degree[v] += 1
    import heapq

    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def tree_canonical(n: int, edges: list[tuple[int, int]]) -> str:
    """Isomorphism-invariant encoding: subtree forms rooted at the center(s)."""
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    if n == 1:
        return "()"
    degree = {v: len(adj[v]) for v in adj}
    removed: set[int] = set()
    layer = [v for v in adj if degree[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed.add(v)
            remaining -= 1
            for w in adj[v]:
                if w not in removed:
                    degree[w] -= 1
                    if degree[w] == 1:
                        nxt.append(w)
        layer = nxt
    centers = [v for v in adj if v not in removed]

    def encode(v: int, parent: int | None) -> str:
        subs = sorted(encode(w, v) for w in adj[v] if w != parent)
        return "(" + "".join(subs) + ")"

    if len(centers) == 1:
        return encode(centers[0], None)
    a, b = centers
    return min(encode(a, b) + encode(b, a), encode(b, a) + encode(a, b))


def all_trees_up_to(nmax: int) -> list[tuple[int, list[tuple[int, int]]]]:
    """One labeled representative per unlabeled tree on 1..nmax vertices."""
    out = []
    seen = set()
    for n in range(1, nmax + 1):
        if n == 1:
            candidates = [[]]
        elif n == 2:
            candidates = [[(1, 2)]]
        else:
            candidates = (
                prufer_edges(seq, n) for seq in product(range(1, n + 1), repeat=n - 2)
            )
        for edges in candidates:
            key = tree_canonical(n, edges)
            if key not in seen:
                seen.add(key)
                out.append((n, edges))
    return out


def tree_to_bipartite(n: int, edges: list[tuple[int, int]]) -> BipartiteGraph:
    """Two-color a tree (vertex 1 on the s side) and renumber per part."""
    adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    color = {1: 0}
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in color:
                color[w] = color[v] ^ 1
                queue.append(w)
    s_ids = {v: i + 1 for i, v in enumerate(sorted(v for v in color if color[v] == 0))}
    p_ids = {v: i + 1 for i, v in enumerate(sorted(v for v in color if color[v] == 1))}
    bedges = [
        (s_ids[a], p_ids[b]) if color[a] == 0 else (s_ids[b], p_ids[a])
        for a, b in edges
    ]
    return BipartiteGraph(len(s_ids), len(p_ids), bedges)


def sample_c4_free(seed: int, max_vertices: int = 8) -> BipartiteGraph:
    """Seeded random C4-free bipartite graph with at least one edge."""
    rng = Lcg(seed)
    half = max_vertices // 2
    ns = 2 + rng.next_int(half - 1)
    np = 2 + rng.next_int(half - 1)
    while ns + np > max_vertices:
        np = 2 + rng.next_int(half - 1)
    cells = [(s, p) for s in range(1, ns + 1) for p in range(1, np + 1)]
    target = 1 + rng.next_int(len(cells))
    order = sorted(cells, key=lambda _: rng.next_unit())
    edges: list[tuple[int, int]] = []
    for cell in order:
        if len(edges) >= target:
            break
        trial = edges + [cell]
        if is_c4_free(BipartiteGraph(ns, np, trial)):
            edges = trial
    if not edges:
        edges = [order[0]]
    return BipartiteGraph(ns, np, edges)


def random_words(seed: int, max_n: int = 6, max_len: int = 4, max_sigma: int = 6):
    """Seeded random uniform-length words: (n, length, sigma, list of words)."""
    rng = Lcg(seed)
    n = 1 + rng.next_int(max_n)
    length = rng.next_int(max_len + 1)
    sigma = 1 + rng.next_int(max_sigma)
    words = [
        tuple(rng.next_int(sigma) for _ in range(length)) for _ in range(n)
    ]
    return n, length, sigma, words


@pytest.fixture(scope="session")
def small_trees():
    return all_trees_up_to(7)
