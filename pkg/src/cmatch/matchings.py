"""Connected matchings and their generalized (vertex-or-edge) variant.

A connected matching is a set of pairwise disjoint edges such that every two
of them are joined by at least one edge of the host graph.  The generalized
variant also admits bare vertices as elements; every pair of chosen elements
must again be disjoint and joined by an edge.

Both maximization problems reduce to maximum clique in a derived "link graph"
whose nodes are the candidate elements and whose adjacency encodes
disjoint-and-joined.  Cliques there correspond exactly to valid families
here, so the budgeted clique engine does all the heavy lifting.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from . import cliques
from .graphs import Graph, GraphError, VertexSet, bits

#: An element of a generalized matching: an edge (u, v) with u < v, or a vertex.
Element = Union[tuple[int, int], int]

#: Link graphs beyond this many nodes refuse exact search; greedy still works.
MAX_LINK_NODES = 4096


def _element_mask(x: Element) -> VertexSet:
    if isinstance(x, int):
        return 1 << x
    u, v = x
    return 1 << u | 1 << v


def _element_reach(g: Graph, x: Element) -> VertexSet:
    # vertices adjacent to at least one endpoint of x
    if isinstance(x, int):
        return g.rows[x]
    u, v = x
    return g.rows[u] | g.rows[v]


def are_linked(g: Graph, x: Element, y: Element) -> bool:
    """True when disjoint elements x and y are joined by an edge of g.

    Elements are edges ``(u, v)`` or single vertices.  Overlapping elements
    are rejected: linkage is only defined for disjoint ones.
    """
    mx, my = _element_mask(x), _element_mask(y)
    if mx & my:
        raise GraphError(f"elements {x} and {y} overlap")
    return bool(_element_reach(g, x) & my)


def _compatible(g: Graph, x: Element, y: Element) -> bool:
    mx, my = _element_mask(x), _element_mask(y)
    return not mx & my and bool(_element_reach(g, x) & my)


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges of a host graph, kept in lexicographic order."""

    graph: Graph
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    def vertex_mask(self) -> VertexSet:
        m = 0
        for u, v in self.edges:
            m |= 1 << u | 1 << v
        return m


@dataclass(frozen=True)
class GeneralizedMatching:
    """Disjoint edges plus bare vertices; size counts every element."""

    graph: Graph
    edges: tuple[tuple[int, int], ...]
    singletons: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.edges) + len(self.singletons)

    def vertex_mask(self) -> VertexSet:
        m = 0
        for u, v in self.edges:
            m |= 1 << u | 1 << v
        for w in self.singletons:
            m |= 1 << w
        return m

    def elements(self) -> tuple[Element, ...]:
        return self.edges + self.singletons


@dataclass(frozen=True)
class MatchingResult:
    """Solver outcome: the best family found plus exactness bookkeeping.

    ``exact`` is True only when the search ran to completion, so the value is
    the true maximum; otherwise it is a valid lower bound.  ``expansions``
    counts branch-and-bound node expansions (0 for greedy results).
    """

    matching: Union[Matching, GeneralizedMatching]
    exact: bool
    expansions: int

    @property
    def value(self) -> int:
        return self.matching.size


@dataclass(frozen=True)
class LinkGraph:
    """Compatibility graph over matching elements.

    ``nodes[i]`` is an edge tuple or a vertex; ``rows[i]`` is the bitmask of
    nodes disjoint from and joined to node i.  Cliques in this graph are
    exactly the valid (generalized) connected matchings of the host.
    """

    host: Graph
    nodes: tuple[Element, ...]
    rows: tuple[int, ...]

    def decode(self, members: int) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
        edges = []
        singles = []
        for i in bits(members):
            node = self.nodes[i]
            if isinstance(node, int):
                singles.append(node)
            else:
                edges.append(node)
        return tuple(edges), tuple(singles)


def link_graph_nodes(g: Graph, include_singletons: bool = False) -> tuple[Element, ...]:
    """Element universe in canonical order: edges lexicographic, then vertices."""
    nodes: list[Element] = list(g.edges())
    if include_singletons:
        nodes.extend(range(g.n))
    return tuple(nodes)


def build_link_graph(g: Graph, include_singletons: bool = False) -> LinkGraph:
    """Materialize the full compatibility graph.

    Quadratic in the number of elements; refuses beyond MAX_LINK_NODES nodes
    since exact clique search there is hopeless anyway (use the greedy
    solver, which never builds this).
    """
    nodes = link_graph_nodes(g, include_singletons)
    if len(nodes) > MAX_LINK_NODES:
        raise GraphError(
            f"link graph has {len(nodes)} nodes (cap {MAX_LINK_NODES}); "
            "use the greedy solver for graphs this large"
        )
    k = len(nodes)
    masks = [_element_mask(x) for x in nodes]
    reach = [_element_reach(g, x) for x in nodes]
    rows = [0] * k
    for i in range(k):
        mi, ri = masks[i], reach[i]
        for j in range(i + 1, k):
            if not mi & masks[j] and ri & masks[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return LinkGraph(g, nodes, tuple(rows))


def max_connected_matching(
    g: Graph,
    *,
    budget: int | None = 10**7,
    target: int | None = None,
) -> MatchingResult:
    """Largest connected matching, via exact clique search on the link graph.

    ``budget`` caps branch-and-bound node expansions; on exhaustion the
    incumbent is returned with ``exact=False``.  ``target`` stops early once
    a matching of that size is found (the result is then a lower bound
    sufficient for a "size >= target" conclusion).
    """
    lg = build_link_graph(g, include_singletons=False)
    res = cliques.max_clique(lg.rows, budget=budget, target=target)
    edges, _ = lg.decode(res.members)
    return MatchingResult(Matching(g, edges), res.exact, res.expansions)


def max_generalized_matching(
    g: Graph,
    *,
    budget: int | None = 10**7,
    target: int | None = None,
) -> MatchingResult:
    """Largest generalized connected matching (edges and bare vertices)."""
    lg = build_link_graph(g, include_singletons=True)
    res = cliques.max_clique(lg.rows, budget=budget, target=target)
    edges, singles = lg.decode(res.members)
    return MatchingResult(GeneralizedMatching(g, edges, singles), res.exact, res.expansions)


def greedy_connected_matching(
    g: Graph,
    *,
    seed: int = 0,
    restarts: int = 64,
) -> MatchingResult:
    """Randomized-restart greedy lower bound for the connected matching number.

    Pass 0 runs in canonical element order; restart r >= 1 shuffles with
    ``random.Random(seed * 2**32 + r)``, so results are reproducible for a
    given seed.  Never materializes the link graph, so it scales past the
    exact solver's node cap.
    """
    nodes = list(link_graph_nodes(g, include_singletons=False))
    best: list[Element] = []
    for r in range(restarts + 1):
        order = list(nodes)
        if r > 0:
            random.Random((seed << 32) + r).shuffle(order)
        chosen: list[Element] = []
        cands = order
        while cands:
            x = cands[0]
            chosen.append(x)
            cands = [y for y in cands[1:] if _compatible(g, x, y)]
        if len(chosen) > len(best):
            best = chosen
    edges = tuple(sorted(best))
    return MatchingResult(Matching(g, edges), False, 0)


def validate_connected_matching(g: Graph, edges: tuple[tuple[int, int], ...]) -> str | None:
    """None when the edges form a connected matching of g, else a reason.

    The reason names the offending edge or pair, e.g. for use in CLI errors
    and witness self-checks.
    """
    seen = set()
    for e in edges:
        u, v = e
        if not (0 <= u < g.n and 0 <= v < g.n) or not g.adj(u, v):
            return f"({u},{v}) is not an edge of the graph"
        if e in seen:
            return f"edge ({u},{v}) appears twice"
        seen.add(e)
    for i, e in enumerate(edges):
        for f in edges[i + 1 :]:
            if _element_mask(e) & _element_mask(f):
                return f"edges {e} and {f} share a vertex"
            if not are_linked(g, e, f):
                return f"edges {e} and {f} are not joined by any edge"
    return None


def validate_generalized_matching(
    g: Graph, edges: tuple[tuple[int, int], ...], singletons: tuple[int, ...]
) -> str | None:
    """None when edges plus singletons form a generalized connected matching."""
    bad = validate_connected_matching(g, edges)
    if bad is not None:
        return bad
    elems: list[Element] = list(edges)
    for w in singletons:
        if not 0 <= w < g.n:
            return f"vertex {w} out of range"
        if w in elems[len(edges) :]:
            return f"vertex {w} appears twice"
        elems.append(w)
    for i in range(len(edges), len(elems)):
        for j in range(len(elems)):
            if i == j:
                continue
            x, y = elems[min(i, j)], elems[max(i, j)]
            if _element_mask(x) & _element_mask(y):
                return f"elements {x} and {y} share a vertex"
            if not are_linked(g, x, y):
                return f"elements {x} and {y} are not joined by any edge"
    return None


def is_dominating_matching(g: Graph, edges: tuple[tuple[int, int], ...]) -> bool:
    """True when every vertex outside the matching sees every matched edge.

    Each unmatched vertex must be adjacent to an endpoint of each edge
    separately; being adjacent to just one of the edges is not enough.
    Rejects input that is not a connected matching.
    """
    bad = validate_connected_matching(g, edges)
    if bad is not None:
        raise GraphError(bad)
    vm = 0
    for u, v in edges:
        vm |= 1 << u | 1 << v
    outside = g.full_mask & ~vm
    for u, v in edges:
        if outside & ~(g.rows[u] | g.rows[v]):
            return False
    return True


@dataclass(frozen=True)
class MinorCertificate:
    """Branch sets witnessing a complete minor of the host graph."""

    graph: Graph
    branch_sets: tuple[VertexSet, ...]

    @property
    def order(self) -> int:
        return len(self.branch_sets)


def complete_minor_certificate(g: Graph, m: Matching) -> MinorCertificate:
    """K_k minor from a connected matching of size k: each edge is a branch set."""
    return MinorCertificate(g, tuple(_element_mask(e) for e in m.edges))


def _connected_in(g: Graph, members: VertexSet) -> bool:
    if not members:
        return False
    seen = members & -members
    frontier = seen
    while frontier:
        grown = 0
        for u in bits(frontier):
            grown |= g.rows[u] & members
        frontier = grown & ~seen
        seen |= frontier
    return seen == members


def validate_minor_certificate(g: Graph, cert: MinorCertificate) -> str | None:
    """None when the branch sets witness a complete minor, else a reason."""
    sets = cert.branch_sets
    for i, s in enumerate(sets):
        if s & ~g.full_mask:
            return f"branch set {i} uses out-of-range vertices"
        if not _connected_in(g, s):
            return f"branch set {i} is empty or disconnected"
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] & sets[j]:
                return f"branch sets {i} and {j} overlap"
            joined = False
            for u in bits(sets[i]):
                if g.rows[u] & sets[j]:
                    joined = True
                    break
            if not joined:
                return f"branch sets {i} and {j} have no edge between them"
    return None


def witness_to_json(
    m: Union[Matching, GeneralizedMatching], exact: bool
) -> dict:
    """Stable JSON form of a (generalized) matching witness."""
    singles = m.singletons if isinstance(m, GeneralizedMatching) else ()
    return {
        "edges": [[u, v] for u, v in m.edges],
        "singletons": list(singles),
        "value": m.size,
        "exact": exact,
    }


def witness_from_json(g: Graph, data: dict) -> tuple[GeneralizedMatching, bool]:
    """Parse and re-validate a witness produced by witness_to_json."""
    edges = tuple((int(u), int(v)) for u, v in data["edges"])
    singles = tuple(int(w) for w in data.get("singletons", ()))
    bad = validate_generalized_matching(g, edges, singles)
    if bad is not None:
        raise GraphError(f"invalid witness: {bad}")
    gm = GeneralizedMatching(g, edges, singles)
    if gm.size != int(data["value"]):
        raise GraphError("witness value disagrees with its elements")
    return gm, bool(data["exact"])
