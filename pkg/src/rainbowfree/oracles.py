"""Naive brute-force oracles.

Deliberately simple and slow: these re-derive answers by exhaustive
enumeration and share no search code with the production implementations
they cross-check.  Everything here is only meant for micro-scale inputs.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from .core import Host, SimpleGraph, flood, iter_bits


def oracle_rainbow_exists(host: Host, pattern) -> bool:
    """Try every injection of the pattern vertices into the host."""
    g = pattern.graph if hasattr(pattern, "graph") else pattern
    nv = host.vertex_count
    if g.n > nv:
        raise ValueError("pattern larger than host")
    for image in permutations(range(nv), g.n):
        colors = set()
        ok = True
        for u, v in g.edges:
            c = host.pair_color(image[u], image[v])
            if c is None or c in colors:
                ok = False
                break
            colors.add(c)
        if ok:
            return True
    return False


def oracle_vertex_connectivity(g: SimpleGraph) -> int:
    """Minimum size of a disconnecting vertex set, by ascending enumeration."""
    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    if n == 1:
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    full = (1 << n) - 1
    for size in range(0, n - 1):
        for cut in combinations(range(n), size):
            rest = full
            for v in cut:
                rest &= ~(1 << v)
            start = (rest & -rest).bit_length() - 1
            if flood(g.adj_bits, rest, start) != rest:
                return size
    return n - 1


def oracle_is_k_connected_bits(adj_bits, subset: int, k: int) -> bool:
    """k-connectivity of an induced subgraph: at least k+1 vertices and no
    (k-1)-subset whose removal disconnects the rest."""
    size = subset.bit_count()
    if size < k + 1:
        return False
    verts = list(iter_bits(subset))
    for cut in combinations(verts, k - 1):
        rest = subset
        for v in cut:
            rest &= ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if flood(adj_bits, rest, start) != rest:
            return False
    return True


def oracle_is_k_connected(g: SimpleGraph, k: int) -> bool:
    return oracle_is_k_connected_bits(g.adj_bits, (1 << g.n) - 1, k)


def oracle_largest_k_connected(g: SimpleGraph, k: int) -> int:
    """Optimum order by full subset enumeration."""
    best = 0
    for size in range(g.n, k, -1):
        for verts in combinations(range(g.n), size):
            subset = 0
            for v in verts:
                subset |= 1 << v
            if oracle_is_k_connected_bits(g.adj_bits, subset, k):
                best = size
                break
        if best:
            break
    return best


def oracle_longest_path_order(g: SimpleGraph) -> int:
    """Longest path order by plain recursive extension (no memoization)."""
    best = 1 if g.n else 0
    adj = g.adj

    def extend(last: int, visited: set[int]) -> None:
        nonlocal best
        best = max(best, len(visited))
        for w in adj[last]:
            if w not in visited:
                visited.add(w)
                extend(w, visited)
                visited.remove(w)

    for v in range(g.n):
        extend(v, {v})
    return best


def oracle_longest_cycle_length(g: SimpleGraph) -> int:
    """Longest cycle length (0 when acyclic) by recursive extension."""
    best = 0
    adj = g.adj

    def extend(anchor: int, last: int, visited: set[int]) -> None:
        nonlocal best
        if len(visited) >= 3 and anchor in adj[last]:
            best = max(best, len(visited))
        for w in adj[last]:
            if w > anchor and w not in visited:
                visited.add(w)
                extend(anchor, w, visited)
                visited.remove(w)

    for v in range(g.n):
        extend(v, v, {v})
    return best


def oracle_is_subgraph(small: SimpleGraph, big: SimpleGraph) -> bool:
    """Subgraph containment by trying every vertex injection."""
    if small.n > big.n:
        return False
    for image in permutations(range(big.n), small.n):
        if all(big.has_edge(image[u], image[v]) for u, v in small.edges):
            return True
    return False


def realizable_degree_sequences(n: int) -> set[tuple[int, ...]]:
    """All sorted-non-increasing degree sequences of simple graphs on n
    vertices, by enumerating every edge subset (vectorized; n <= 7 is instant).
    """
    if n < 1:
        raise ValueError("n must be positive")
    edges = list(combinations(range(n), 2))
    e = len(edges)
    masks = np.arange(1 << e, dtype=np.int64)
    degs = np.zeros((1 << e, n), dtype=np.int8)
    for idx, (u, v) in enumerate(edges):
        bit = ((masks >> idx) & 1).astype(np.int8)
        degs[:, u] += bit
        degs[:, v] += bit
    degs = np.sort(degs, axis=1)[:, ::-1]
    unique = np.unique(degs, axis=0)
    return {tuple(int(x) for x in row) for row in unique}
