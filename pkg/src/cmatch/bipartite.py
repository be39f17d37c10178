"""Maximum bipartite matching and minimum vertex covers between two vertex sets.

The bipartite subgraph between the two sides is never materialized: adjacency
rows are masked with the opposite side on the fly, which keeps the harness's
hot loop allocation-free.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError, VertexSet, bits

_INF = 1 << 60


@dataclass(frozen=True)
class BipartiteMatching:
    """Vertex-disjoint edges between two sides of a host graph."""

    graph: Graph
    side_a: VertexSet
    side_b: VertexSet
    edges: tuple[tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def vertex_mask(self) -> VertexSet:
        m = 0
        for u, v in self.edges:
            m |= 1 << u | 1 << v
        return m


@dataclass(frozen=True)
class VertexCover:
    """Vertex set meeting every edge between the two sides."""

    members: VertexSet

    @property
    def size(self) -> int:
        return self.members.bit_count()


def max_bipartite_matching(g: Graph, a: VertexSet, b: VertexSet) -> BipartiteMatching:
    """Maximum matching in the bipartite subgraph induced by edges between a and b.

    Hopcroft-Karp with deterministic tie-breaking: a-vertices are processed
    in ascending index and neighbors explored in ascending index.
    """
    if a & b:
        raise GraphError("matching sides overlap")
    left = list(bits(a))
    pair_u = {u: -1 for u in left}
    pair_v: dict[int, int] = {}
    dist: dict[int, int] = {}
    rows = g.rows

    def bfs() -> bool:
        queue = deque()
        for u in left:
            if pair_u[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = _INF
        found = False
        while queue:
            u = queue.popleft()
            for v in bits(rows[u] & b):
                w = pair_v.get(v, -1)
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in bits(rows[u] & b):
            w = pair_v.get(v, -1)
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                pair_u[u] = v
                pair_v[v] = u
                return True
        dist[u] = _INF
        return False

    while bfs():
        for u in left:
            if pair_u[u] == -1:
                dfs(u)

    edges = tuple((u, pair_u[u]) for u in left if pair_u[u] != -1)
    return BipartiteMatching(g, a, b, edges)


def _alternating_reach(
    g: Graph, a: VertexSet, b: VertexSet, pair_u: dict[int, int], pair_v: dict[int, int]
) -> tuple[VertexSet, VertexSet, bool]:
    """Vertices reachable by alternating paths from unmatched a-vertices.

    Returns (reached_a, reached_b, augmenting) where ``augmenting`` reports
    whether an unmatched b-vertex was reached.
    """
    matched_a = 0
    for u in pair_u:
        matched_a |= 1 << u
    reached_a = a & ~matched_a
    reached_b = 0
    augmenting = False
    frontier = reached_a
    while frontier:
        grown = 0
        for u in bits(frontier):
            grown |= g.rows[u] & b
        grown &= ~reached_b
        reached_b |= grown
        frontier = 0
        for v in bits(grown):
            w = pair_v.get(v, -1)
            if w == -1:
                augmenting = True
            elif not reached_a >> w & 1:
                reached_a |= 1 << w
                frontier |= 1 << w
    return reached_a, reached_b, augmenting


def konig_cover(g: Graph, a: VertexSet, b: VertexSet, m: BipartiteMatching) -> VertexCover:
    """Minimum vertex cover matching the size of a maximum matching.

    Derived by alternating reachability from the unmatched a-vertices; the
    cover is (a minus reached) plus (b intersect reached). Rejects a
    non-maximum matching by detecting a leftover augmenting path.
    """
    if a & b:
        raise GraphError("cover sides overlap")
    pair_u: dict[int, int] = {}
    pair_v: dict[int, int] = {}
    used = 0
    for u, v in m.edges:
        if not (a >> u & 1 and b >> v & 1):
            raise GraphError(f"matching edge ({u},{v}) not between the given sides")
        if not g.adj(u, v):
            raise GraphError(f"matching edge ({u},{v}) absent from the graph")
        if used & (1 << u | 1 << v):
            raise GraphError(f"matching edge ({u},{v}) reuses a vertex")
        used |= 1 << u | 1 << v
        pair_u[u] = v
        pair_v[v] = u

    reached_a, reached_b, augmenting = _alternating_reach(g, a, b, pair_u, pair_v)
    if augmenting:
        raise GraphError("matching is not maximum: augmenting path exists")

    cover = (a & ~reached_a) | reached_b
    if __debug__:
        assert cover.bit_count() == len(m.edges)
        for u in bits(a):
            uncovered = g.rows[u] & b & ~cover
            assert not uncovered or cover >> u & 1, "cover misses an edge"
    return VertexCover(cover)
