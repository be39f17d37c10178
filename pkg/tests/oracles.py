"""Slow reference implementations the fast code is tested against.

Everything here favors obviousness over speed: plain sets and tuples,
recursion over subsets, no bitsets, no pruning beyond feasibility.  Callers
keep the sizes small.
"""

from itertools import combinations
import random

from cmatch import Graph


def edge_list(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj(u, v)]


def make_random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def brute_independence_number(g: Graph) -> int:
    for r in range(g.n, 0, -1):
        for sub in combinations(range(g.n), r):
            if all(not g.adj(u, v) for u, v in combinations(sub, 2)):
                return r
    return 0


def brute_clique_number(g: Graph) -> int:
    for r in range(g.n, 0, -1):
        for sub in combinations(range(g.n), r):
            if all(g.adj(u, v) for u, v in combinations(sub, 2)):
                return r
    return 0


def naive_common_neighbors(g: Graph, verts) -> set[int]:
    out = set(range(g.n))
    for v in verts:
        out &= {u for u in range(g.n) if g.adj(u, v)}
    return out


def naive_triangle_count(g: Graph) -> int:
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.adj(a, b) and g.adj(a, c) and g.adj(b, c)
    )


def _verts(elem) -> set[int]:
    return {elem} if isinstance(elem, int) else set(elem)


def elements_linked(g: Graph, x, y) -> bool:
    return any(g.adj(a, b) for a in _verts(x) for b in _verts(y))


def elements_compatible(g: Graph, x, y) -> bool:
    return not (_verts(x) & _verts(y)) and elements_linked(g, x, y)


def brute_connected_matching(g: Graph) -> int:
    """Maximum size over all subsets of edges, checked pairwise."""
    edges = edge_list(g)

    def grow(start: int, chosen: list) -> int:
        best = len(chosen)
        for i in range(start, len(edges)):
            if all(elements_compatible(g, edges[i], c) for c in chosen):
                chosen.append(edges[i])
                best = max(best, grow(i + 1, chosen))
                chosen.pop()
        return best

    return grow(0, [])


def brute_generalized_matching(g: Graph) -> int:
    """Like brute_connected_matching but over mixed edge/vertex families."""
    elems = edge_list(g) + list(range(g.n))

    def grow(start: int, chosen: list) -> int:
        best = len(chosen)
        for i in range(start, len(elems)):
            if all(elements_compatible(g, elems[i], c) for c in chosen):
                chosen.append(elems[i])
                best = max(best, grow(i + 1, chosen))
                chosen.pop()
        return best

    return grow(0, [])


def brute_bipartite_matching(g: Graph, a_verts, b_verts) -> int:
    """Max matching between disjoint vertex sets, memoized over (index, used B)."""
    a = sorted(a_verts)
    b = sorted(b_verts)
    memo: dict = {}

    def go(i: int, used: frozenset) -> int:
        if i == len(a):
            return 0
        key = (i, used)
        if key in memo:
            return memo[key]
        best = go(i + 1, used)
        for w in b:
            if w not in used and g.adj(a[i], w):
                best = max(best, 1 + go(i + 1, used | {w}))
        memo[key] = best
        return best

    return go(0, frozenset())


def all_cliques(g: Graph) -> list[frozenset]:
    """Every clique as a frozenset, the empty one included."""
    out = [frozenset()]

    def grow(start: int, cur: set) -> None:
        for v in range(start, g.n):
            if all(g.adj(v, u) for u in cur):
                cur.add(v)
                out.append(frozenset(cur))
                grow(v + 1, cur)
                cur.remove(v)

    grow(0, set())
    return out


def _anticomplete(g: Graph, s1, s2) -> bool:
    return not any(g.adj(u, v) for u in s1 for v in s2)


def brute_anticomplete_pair(g: Graph) -> int:
    cliques = all_cliques(g)
    best = 0
    for s1 in cliques:
        for s2 in cliques:
            if s1 & s2 or not _anticomplete(g, s1, s2):
                continue
            best = max(best, len(s1) + len(s2))
    return best


def brute_split_triple(g: Graph) -> int:
    """Max |S0|+|S1|+|S2|: cliques, S0 complete to S1 and S2, S1 anticomplete S2."""
    cliques = all_cliques(g)
    best = 0
    for s1 in cliques:
        for s2 in cliques:
            if s1 & s2 or not _anticomplete(g, s1, s2):
                continue
            rest = s1 | s2
            cand = [
                v for v in range(g.n)
                if v not in rest and all(g.adj(v, u) for u in rest)
            ]
            s0 = _clique_within(g, cand)
            best = max(best, s0 + len(s1) + len(s2))
    return best


def _clique_within(g: Graph, verts: list[int]) -> int:
    best = 0

    def grow(i: int, cur: set) -> None:
        nonlocal best
        best = max(best, len(cur))
        for j in range(i, len(verts)):
            v = verts[j]
            if all(g.adj(v, u) for u in cur):
                cur.add(v)
                grow(j + 1, cur)
                cur.remove(v)

    grow(0, set())
    return best


def brute_shielded_pair(g: Graph) -> int:
    """Max |S1|+|S2| over partitions (S1, S2, S3) of the vertices where S1 and
    S2 are anticomplete cliques and S2 is complete to S3."""
    verts = set(range(g.n))
    cliques = all_cliques(g)
    best = 0
    for s1 in cliques:
        for s2 in cliques:
            if s1 & s2 or not _anticomplete(g, s1, s2):
                continue
            s3 = verts - s1 - s2
            if all(g.adj(u, v) for u in s2 for v in s3):
                best = max(best, len(s1) + len(s2))
    return best


def brute_dominating_size(g: Graph, max_size: int):
    """Size of the smallest dominating connected matching up to max_size, or None.

    Dominating in the strong sense: every unmatched vertex is adjacent to an
    endpoint of every chosen edge.
    """
    edges = edge_list(g)
    for k in range(1, max_size + 1):
        for combo in combinations(edges, k):
            used: set[int] = set()
            clash = False
            for u, v in combo:
                if u in used or v in used:
                    clash = True
                    break
                used |= {u, v}
            if clash:
                continue
            if any(
                not elements_linked(g, e, f) for e, f in combinations(combo, 2)
            ):
                continue
            outside = set(range(g.n)) - used
            if all(
                g.adj(w, u) or g.adj(w, v) for (u, v) in combo for w in outside
            ):
                return k
    return None
