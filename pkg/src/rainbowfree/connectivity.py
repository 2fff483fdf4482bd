"""Vertex connectivity, largest k-connected subgraphs under a color mask,
dense-subgraph extraction, and the largest-monochromatic-component floor.

Conventions: kappa(K_r) = r - 1, and "k-connected" requires at least k + 1
vertices.  Local connectivity between non-adjacent vertices is computed by
max-flow on the standard vertex-split network with unit vertex capacities.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .core import (
    Host,
    SimpleGraph,
    ceil_div,
    flood,
    induced_subgraph,
    iter_bits,
    normalize_mask,
    restrict,
    ColoredComplete,
)

_INF = 1 << 30


class CertificationError(RuntimeError):
    """An internal certificate failed: a bug trap, since the underlying
    statements are theorems on every valid input."""


@dataclass(frozen=True)
class ConnectivityReport:
    """Witness and certified bounds for the largest k-connected subgraph."""

    k: int
    mask: frozenset[int]
    witness: tuple[int, ...]
    lower: int
    upper: int
    exact: bool

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "mask": sorted(self.mask),
            "witness": list(self.witness),
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
        }


@dataclass(frozen=True)
class OrderCapResult:
    """Outcome of exhaustively refuting k-connected subgraphs above a cap."""

    ok: bool
    k: int
    mask: frozenset[int]
    cap: int
    subsets_checked: int
    counterexample: tuple[int, ...] | None = None


# ---------------------------------------------------------------------------
# bitmask primitives
# ---------------------------------------------------------------------------


def _components(adj_bits, active: int) -> list[int]:
    out = []
    remaining = active
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = flood(adj_bits, remaining, start)
        out.append(comp)
        remaining &= ~comp
    return out


def _peel_to_kcore(adj_bits, active: int, k: int) -> int:
    """Drop vertices of in-set degree < k until stable.

    Sound reduction: a k-connected subgraph of order > k has minimum degree
    >= k, which only shrinks when restricting to a subset.
    """
    changed = True
    while changed:
        changed = False
        for v in iter_bits(active):
            if (adj_bits[v] & active).bit_count() < k:
                active &= ~(1 << v)
                changed = True
    return active


def _split_flow(adj_bits, active: int, s: int, t: int, limit: int):
    """Max vertex-disjoint s-t paths (capped at limit) in the induced graph.

    s and t must be distinct, non-adjacent, inside active.  Returns
    (flow, reached) where reached is the residual-reachable node set from the
    last BFS (None when the cap stopped the search first); the minimum vertex
    cut is {v : v_in in reached, v_out not in reached}.
    """
    cap: dict[tuple[int, int], int] = {}
    nbr: dict[int, list[int]] = {}

    def add(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            cap[(a, b)] = 0
            cap[(b, a)] = cap.get((b, a), 0)
            nbr.setdefault(a, []).append(b)
            nbr.setdefault(b, []).append(a)
        cap[(a, b)] += c

    for v in iter_bits(active):
        add(2 * v, 2 * v + 1, 1)
        for u in iter_bits(adj_bits[v] & active):
            add(2 * v + 1, 2 * u, _INF)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        parent: dict[int, int | None] = {source: None}
        dq = deque([source])
        while dq:
            a = dq.popleft()
            if a == sink:
                break
            for b in nbr.get(a, ()):
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    dq.append(b)
        if sink not in parent:
            return flow, set(parent)
        aug = _INF
        node = sink
        while parent[node] is not None:
            prev = parent[node]
            aug = min(aug, cap[(prev, node)])
            node = prev
        node = sink
        while parent[node] is not None:
            prev = parent[node]
            cap[(prev, node)] -= aug
            cap[(node, prev)] += aug
            node = prev
        flow += aug
    return flow, None


def _cut_from_reached(active: int, reached: set[int]) -> int:
    cut = 0
    for v in iter_bits(active):
        if 2 * v in reached and 2 * v + 1 not in reached:
            cut |= 1 << v
    return cut


def _find_cut_below_k(adj_bits, active: int, k: int) -> int | None:
    """A vertex cut of size < k of the induced graph, or None if k-connected.

    The caller guarantees active has at least k + 1 vertices.  Checking flows
    from k fixed vertices to each of their non-neighbors suffices: any cut
    with fewer than k vertices misses one of the k anchors, which then lies
    in one component while some non-neighbor lies in another.
    """
    size = active.bit_count()
    for v in iter_bits(active):
        deg = (adj_bits[v] & active).bit_count()
        if deg < k:
            # its neighborhood separates v from the rest (non-empty by size)
            return adj_bits[v] & active
    anchors = []
    for v in iter_bits(active):
        anchors.append(v)
        if len(anchors) == k:
            break
    for v in anchors:
        non_nbrs = active & ~adj_bits[v] & ~(1 << v)
        for u in iter_bits(non_nbrs):
            f, reached = _split_flow(adj_bits, active, v, u, k)
            if f < k:
                return _cut_from_reached(active, reached)
    return None


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def vertex_connectivity(g: SimpleGraph) -> int:
    """Exact kappa(g); kappa(K_r) = r - 1 by convention."""
    n = g.n
    if n == 0:
        raise ValueError("empty graph has no connectivity")
    if n == 1:
        return 0
    full = (1 << n) - 1
    if flood(g.adj_bits, full, 0) != full:
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    v = min(range(n), key=g.degree)
    best = g.degree(v)
    for u in range(n):
        if u != v and not g.has_edge(u, v):
            f, _ = _split_flow(g.adj_bits, full, v, u, best)
            best = min(best, f)
    for x, y in combinations(sorted(g.adj[v]), 2):
        if not g.has_edge(x, y):
            f, _ = _split_flow(g.adj_bits, full, x, y, best)
            best = min(best, f)
    return best


def is_k_connected(g: SimpleGraph, k: int) -> bool:
    """True iff g has at least k + 1 vertices and kappa(g) >= k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n < k + 1:
        return False
    full = (1 << g.n) - 1
    return _find_cut_below_k(g.adj_bits, full, k) is None


def _greedy_descend(adj_bits, active: int, k: int) -> int:
    """Follow the largest side of successive cuts until certified or exhausted."""
    while True:
        active = _peel_to_kcore(adj_bits, active, k)
        if active.bit_count() < k + 1:
            return 0
        cut = _find_cut_below_k(adj_bits, active, k)
        if cut is None:
            return active
        comps = _components(adj_bits, active & ~cut)
        active = max(comps, key=lambda c: (c.bit_count(), -c)) | cut


def _max_k_connected(adj_bits, active0: int, k: int, depth_cap: int | None):
    """Branch and bound over cut splits, seeded by k-core peeling.

    Returns (best_mask, upper, capped) where upper >= the true optimum and
    capped marks whether any branch stopped at the depth cap.
    """
    best = 0
    pending_upper = 0
    capped = False
    seen: set[int] = set()
    stack: list[tuple[int, int]] = [(active0, 0)]
    while stack:
        S, depth = stack.pop()
        S = _peel_to_kcore(adj_bits, S, k)
        size = S.bit_count()
        if size < k + 1 or size <= best.bit_count():
            continue
        if S in seen:
            continue
        seen.add(S)
        cut = _find_cut_below_k(adj_bits, S, k)
        if cut is None:
            best = S
            continue
        if depth_cap is not None and depth >= depth_cap:
            capped = True
            pending_upper = max(pending_upper, size)
            greedy = _greedy_descend(adj_bits, S, k)
            if greedy.bit_count() > best.bit_count():
                best = greedy
            continue
        comps = _components(adj_bits, S & ~cut)
        comps.sort(key=lambda c: (c.bit_count(), -c))
        for comp in comps:
            stack.append((comp | cut, depth + 1))
    lower = best.bit_count()
    return best, max(lower, pending_upper), capped


HEURISTIC_DEPTH_CAP = 20


def largest_k_connected(host: Host, mask, k: int, mode: str = "exact") -> ConnectivityReport:
    """Largest vertex set whose mask-restricted induced graph is k-connected.

    A k-connected subgraph on a vertex set S exists iff the induced
    color-masked graph on S is k-connected, since adding edges never
    destroys k-connectivity.  Exact mode explores the full cut-split tree
    (exponential in the worst case; intended for small hosts or small k);
    heuristic mode caps the depth and reports certified lower/upper bounds.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if mode not in ("exact", "heuristic"):
        raise ValueError(f"unknown mode {mode!r}")
    allowed = normalize_mask(host, mask)
    g = restrict(host, allowed)
    full = (1 << g.n) - 1
    cap = None if mode == "exact" else HEURISTIC_DEPTH_CAP
    best, upper, _ = _max_k_connected(g.adj_bits, full, k, cap)
    witness = tuple(iter_bits(best))
    return ConnectivityReport(
        k=k,
        mask=allowed,
        witness=witness,
        lower=len(witness),
        upper=upper,
        exact=(mode == "exact"),
    )


def best_monochromatic(host: Host, k: int, mode: str = "exact"):
    """Maximize largest_k_connected over single colors; ties go to the
    smallest color id."""
    best: tuple[int, ConnectivityReport] | None = None
    for c in sorted(host.used_colors()):
        rep = largest_k_connected(host, {c}, k, mode)
        if best is None or rep.lower > best[1].lower:
            best = (c, rep)
    if best is None:
        raise ValueError("host uses no colors")
    return best


def best_two_colored(host: Host, k: int, mode: str = "exact"):
    """Maximize largest_k_connected over color masks of size at most two."""
    used = sorted(host.used_colors())
    masks = [(c,) for c in used] + list(combinations(used, 2))
    masks.sort()
    best: tuple[frozenset[int], ConnectivityReport] | None = None
    for mask in masks:
        rep = largest_k_connected(host, mask, k, mode)
        if best is None or rep.lower > best[1].lower:
            best = (frozenset(mask), rep)
    if best is None:
        raise ValueError("host uses no colors")
    return best


def verify_order_cap(host: Host, mask, k: int, cap: int) -> OrderCapResult:
    """Certify that no k-connected subgraph under ``mask`` has order > cap,
    by checking every vertex subset of size cap+1 .. n exactly."""
    allowed = normalize_mask(host, mask)
    g = restrict(host, allowed)
    n = g.n
    full = (1 << n) - 1
    low_degree = 0
    for v in range(n):
        if g.degree(v) < k:
            low_degree |= 1 << v
    checked = 0
    for size in range(n, cap, -1):
        for removed in combinations(range(n), n - size):
            S = full
            for v in removed:
                S &= ~(1 << v)
            checked += 1
            if S & low_degree:
                continue  # a vertex of total masked degree < k is in S
            if any((g.adj_bits[v] & S).bit_count() < k for v in iter_bits(S)):
                continue
            if _find_cut_below_k(g.adj_bits, S, k) is None:
                return OrderCapResult(
                    ok=False,
                    k=k,
                    mask=allowed,
                    cap=cap,
                    subsets_checked=checked,
                    counterexample=tuple(iter_bits(S)),
                )
    return OrderCapResult(ok=True, k=k, mask=allowed, cap=cap, subsets_checked=checked)


def mader_extract(g: SimpleGraph) -> SimpleGraph:
    """A ceil(alpha/4)-connected subgraph of a graph with average degree alpha.

    Strategy: peel at the fixed threshold alpha/2, certify; on failure split
    at a sub-k cut and keep the denser side; then a min-degree-deletion
    sweep; finally exact search for small graphs.  Every returned subgraph
    is re-verified, so a heuristic gap can only cause a later phase to run,
    never a wrong answer.  Raises CertificationError if nothing certifies,
    which would contradict the underlying theorem.
    """
    if g.n == 0 or g.edge_count == 0:
        raise ValueError("average degree must be positive")
    e0, n0 = g.edge_count, g.n
    k = ceil_div(e0, 2 * n0)  # ceil(alpha / 4) with alpha = 2 e0 / n0
    bits = g.adj_bits
    full = (1 << g.n) - 1

    def certified(S: int) -> bool:
        return S.bit_count() >= k + 1 and _find_cut_below_k(bits, S, k) is None

    # phase 1: delete vertices of degree <= alpha/2, threshold fixed from g
    S = full
    changed = True
    while changed and S:
        changed = False
        for v in iter_bits(S):
            if (bits[v] & S).bit_count() * n0 <= e0:
                S &= ~(1 << v)
                changed = True
    # phase 2: certify, splitting toward the denser side on failure
    seen = set()
    while S and S not in seen:
        seen.add(S)
        if certified(S):
            return induced_subgraph(g, iter_bits(S))
        if S.bit_count() < k + 1:
            break
        cut = _find_cut_below_k(bits, S, k)
        comps = _components(bits, S & ~cut)

        def density(c: int) -> Fraction:
            sub = c | cut
            edges = sum(
                (bits[v] & sub).bit_count() for v in iter_bits(sub)
            ) // 2
            return Fraction(edges, sub.bit_count())

        S = max(comps, key=lambda c: (density(c), c.bit_count(), -c)) | cut
    # phase 3: global min-degree-deletion sweep
    S = full
    while S.bit_count() >= k + 1:
        if certified(S):
            return induced_subgraph(g, iter_bits(S))
        v = min(iter_bits(S), key=lambda w: ((bits[w] & S).bit_count(), w))
        S &= ~(1 << v)
    # phase 4: exact search on small graphs
    if g.n <= 18:
        best, _, _ = _max_k_connected(bits, full, k, None)
        if best and certified(best):
            return induced_subgraph(g, iter_bits(best))
    raise CertificationError(
        f"could not certify a {k}-connected subgraph (n={g.n}, e={g.edge_count})"
    )


def gyarfas_floor(host: Host):
    """Largest monochromatic connected component, with its floor asserted:
    order >= ceil(n/(m-1)) on complete hosts and >= ceil((s+t)/m) on
    bipartite hosts.  Violation raises CertificationError (a theorem breach).
    """
    used = sorted(host.used_colors())
    if len(used) < 2:
        raise ValueError("host must use at least 2 colors")
    best_color, best_comp = -1, 0
    for c in used:
        g = restrict(host, {c})
        active = 0
        for v in range(g.n):
            if g.adj_bits[v]:
                active |= 1 << v
        for comp in _components(g.adj_bits, active):
            if comp.bit_count() > best_comp.bit_count():
                best_color, best_comp = c, comp
    n = host.vertex_count
    if isinstance(host, ColoredComplete):
        bound = ceil_div(n, host.m - 1)  # m >= 2 since two colors are used
    else:
        bound = ceil_div(n, host.m)
    order = best_comp.bit_count()
    if order < bound:
        raise CertificationError(
            f"largest monochromatic component has order {order} < floor {bound}"
        )
    return best_color, tuple(iter_bits(best_comp))
