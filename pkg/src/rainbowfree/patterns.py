"""Small pattern graphs: the name grammar, subgraph tests, and catalog sets.

The grammar names disjoint unions of eight base graphs:

    pattern := term ('u' term)*
    term    := [count] base
    base    := K2 | P3 | P4 | P5 | P6 | K3 | K1_3 | P4plus

"P4plus" is the 5-vertex tree with degree sequence 1,1,1,2,3.  Explicit
patterns are written "V:<n>;E:a-b,c-d,...".  Patterns never carry isolated
vertices and have at most 12 vertices.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

from .core import SimpleGraph, induced_subgraph

MAX_PATTERN_VERTICES = 12


def _path(k: int) -> SimpleGraph:
    return SimpleGraph(k, [(i, i + 1) for i in range(k - 1)])


def _star(leaves: int) -> SimpleGraph:
    return SimpleGraph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


BASE_GRAPHS: dict[str, SimpleGraph] = {
    "K2": _path(2),
    "P3": _path(3),
    "P4": _path(4),
    "P5": _path(5),
    "P6": _path(6),
    "K3": SimpleGraph(3, [(0, 1), (1, 2), (0, 2)]),
    "K1_3": _star(3),
    # path 0-1-2-3 with an extra leaf at vertex 2
    "P4plus": SimpleGraph(5, [(0, 1), (1, 2), (2, 3), (2, 4)]),
}

# display order for canonical names: by (order, edge count, label)
_BASE_ORDER = sorted(BASE_GRAPHS, key=lambda b: (BASE_GRAPHS[b].n, BASE_GRAPHS[b].edge_count, b))

_TERM_RE = re.compile(r"(\d*)(K1_3|K2|K3|P4plus|P3|P4|P5|P6)")


def disjoint_union(graphs: list[SimpleGraph]) -> SimpleGraph:
    n = 0
    edges: list[tuple[int, int]] = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return SimpleGraph(n, edges)


class Pattern:
    """A small graph to search for, paired with its canonical grammar name."""

    __slots__ = ("graph", "canonical_name")

    def __init__(self, graph: SimpleGraph):
        if graph.n > MAX_PATTERN_VERTICES:
            raise ValueError(f"pattern has {graph.n} > {MAX_PATTERN_VERTICES} vertices")
        if graph.n < 2:
            raise ValueError("pattern must have at least 2 vertices")
        if any(graph.degree(v) == 0 for v in range(graph.n)):
            raise ValueError("pattern must not contain isolated vertices")
        self.graph = graph
        self.canonical_name = _canonical_name(graph)

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def size(self) -> int:
        return self.graph.edge_count

    def component_count(self) -> int:
        return len(self.graph.components())

    def max_degree(self) -> int:
        return self.graph.max_degree()

    def __eq__(self, other) -> bool:
        return isinstance(other, Pattern) and is_isomorphic(self.graph, other.graph)

    def __hash__(self) -> int:
        g = self.graph
        return hash((g.n, g.edge_count, g.degree_sequence()))

    def __repr__(self) -> str:
        return f"Pattern({self.canonical_name!r})"


def parse_pattern(name: str) -> Pattern:
    """Parse a grammar or explicit-edge-list name into a Pattern."""
    name = name.strip()
    if name.startswith("V:"):
        return Pattern(_parse_explicit(name))
    pos = 0
    parts: list[SimpleGraph] = []
    while True:
        match = _TERM_RE.match(name, pos)
        if match is None:
            raise ValueError(f"bad pattern name {name!r} at position {pos}")
        count = int(match.group(1)) if match.group(1) else 1
        if count < 1:
            raise ValueError(f"zero count in pattern name {name!r}")
        parts.extend([BASE_GRAPHS[match.group(2)]] * count)
        pos = match.end()
        if pos == len(name):
            break
        if name[pos] != "u":
            raise ValueError(f"bad pattern name {name!r} at position {pos}")
        pos += 1
    return Pattern(disjoint_union(parts))


def _parse_explicit(name: str) -> SimpleGraph:
    m = re.fullmatch(r"V:(\d+);E:(.*)", name)
    if m is None:
        raise ValueError(f"bad explicit pattern {name!r}")
    n = int(m.group(1))
    edges = []
    spec = m.group(2).strip()
    if spec:
        for item in spec.split(","):
            em = re.fullmatch(r"(\d+)-(\d+)", item.strip())
            if em is None:
                raise ValueError(f"bad edge token {item!r} in {name!r}")
            edges.append((int(em.group(1)), int(em.group(2))))
    return SimpleGraph(n, edges)


def _canonical_name(graph: SimpleGraph) -> str:
    comps = [induced_subgraph(graph, c) for c in graph.components()]
    names = []
    for comp in comps:
        for base in _BASE_ORDER:
            if is_isomorphic(comp, BASE_GRAPHS[base]):
                names.append(base)
                break
        else:
            return _explicit_name(graph)
    counts: dict[str, int] = {}
    for b in names:
        counts[b] = counts.get(b, 0) + 1
    terms = []
    for base in _BASE_ORDER:
        if base in counts:
            c = counts[base]
            terms.append(f"{c}{base}" if c > 1 else base)
    return "u".join(terms)


def _explicit_name(graph: SimpleGraph) -> str:
    edges = ",".join(f"{u}-{v}" for u, v in sorted(graph.edges))
    return f"V:{graph.n};E:{edges}"


# ---------------------------------------------------------------------------
# Subgraph / isomorphism tests (exact backtracking; patterns are tiny)
# ---------------------------------------------------------------------------


def _as_graph(g) -> SimpleGraph:
    return g.graph if isinstance(g, Pattern) else g


def _embedding_order(g: SimpleGraph) -> list[int]:
    """Pattern vertex order: component by component, most-constrained first."""
    comps = sorted(
        g.components(),
        key=lambda c: (-len(c), -sum(1 for e in g.edges if e[0] in c), min(c)),
    )
    order: list[int] = []
    placed: set[int] = set()
    for comp in comps:
        start = max(comp, key=lambda v: (g.degree(v), -v))
        order.append(start)
        placed.add(start)
        pending = set(comp) - {start}
        while pending:
            nxt = max(
                pending,
                key=lambda v: (len(g.adj[v] & placed), g.degree(v), -v),
            )
            order.append(nxt)
            placed.add(nxt)
            pending.remove(nxt)
    return order


def is_subgraph(g, h) -> bool:
    """True iff g is isomorphic to a (not necessarily induced) subgraph of h."""
    G, H = _as_graph(g), _as_graph(h)
    if G.n > H.n or G.edge_count > H.edge_count:
        return False
    gd = sorted((G.degree(v) for v in range(G.n)), reverse=True)
    hd = sorted((H.degree(v) for v in range(H.n)), reverse=True)
    if any(a > b for a, b in zip(gd, hd)):
        return False
    order = _embedding_order(G)
    back = {v: [q for q in G.adj[v] if q in set(order[:i])] for i, v in enumerate(order)}
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        p = order[i]
        need = G.degree(p)
        for cand in range(H.n):
            if cand in used or H.degree(cand) < need:
                continue
            if all(H.has_edge(cand, image[q]) for q in back[p]):
                image[p] = cand
                used.add(cand)
                if extend(i + 1):
                    return True
                used.remove(cand)
                del image[p]
        return False

    return extend(0)


def is_isomorphic(g, h) -> bool:
    G, H = _as_graph(g), _as_graph(h)
    if G.n != H.n or G.edge_count != H.edge_count:
        return False
    if G.degree_sequence() != H.degree_sequence():
        return False
    # equal vertex and edge counts turn any subgraph embedding into an isomorphism
    return is_subgraph(G, H)


# ---------------------------------------------------------------------------
# Catalog sets
#
# G_SET: connected graphs whose forbidden-rainbow condition forces an almost
#        spanning k-connected monochromatic subgraph.
# H_SET: the disconnected analogue; H2_SET its two-component members.
# A_SET: union of the two.
# B_SET: the bipartite-host analogue.
#
# Each is the downward closure (order >= 3, no isolated vertices, and the
# per-set component-count rule) of a short list of maximal elements.
# ---------------------------------------------------------------------------

G_SET = "G"
H_SET = "H"
H2_SET = "H2"
A_SET = "A"
B_SET = "B"

_MAXIMAL = {
    G_SET: ["K3", "P6", "P4plus"],
    H_SET: ["P3uP4", "K2uP5", "K2u2P3", "2K2uK3", "2K2uP4plus", "3K2uK1_3"],
    B_SET: ["2P3", "2K2uK1_3"],
}


def _all_subpatterns(g: SimpleGraph) -> list[SimpleGraph]:
    """Every subgraph obtained by keeping a subset of edges, isolated vertices dropped."""
    edge_list = sorted(g.edges)
    out = []
    for r in range(1, len(edge_list) + 1):
        for chosen in combinations(edge_list, r):
            verts = sorted({v for e in chosen for v in e})
            index = {v: i for i, v in enumerate(verts)}
            out.append(
                SimpleGraph(len(verts), [(index[u], index[v]) for u, v in chosen])
            )
    return out


def _closure(maximal: list[str], keep) -> tuple[Pattern, ...]:
    found: list[Pattern] = []
    for name in maximal:
        top = parse_pattern(name).graph
        for sub in _all_subpatterns(top):
            if sub.n < 3 or not keep(sub):
                continue
            if not any(is_isomorphic(sub, p.graph) for p in found):
                found.append(Pattern(sub))
    found.sort(key=lambda p: (p.order, p.size, p.canonical_name))
    return tuple(found)


@lru_cache(maxsize=None)
def catalog_members(set_id: str) -> tuple[Pattern, ...]:
    """The members of a catalog set, without isomorphic duplicates."""
    if set_id == G_SET:
        return _closure(_MAXIMAL[G_SET], lambda g: g.is_connected())
    if set_id == H_SET:
        return _closure(_MAXIMAL[H_SET], lambda g: len(g.components()) >= 2)
    if set_id == H2_SET:
        return tuple(p for p in catalog_members(H_SET) if p.component_count() == 2)
    if set_id == A_SET:
        members = list(catalog_members(G_SET)) + list(catalog_members(H_SET))
        members.sort(key=lambda p: (p.order, p.size, p.canonical_name))
        return tuple(members)
    if set_id == B_SET:
        return _closure(_MAXIMAL[B_SET], lambda g: True)
    raise ValueError(f"unknown catalog set {set_id!r}")


def in_set(p: Pattern, set_id: str) -> bool:
    """Decide membership by isomorphism against the precomputed closure."""
    g = _as_graph(p)
    return any(is_isomorphic(g, member.graph) for member in catalog_members(set_id))
