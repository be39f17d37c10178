"""Generators for graphs with independence number at most 2.

Every family here satisfies alpha <= 2 by construction, which the search
harness re-checks anyway.  The random family works in the complement: a
graph has alpha <= 2 exactly when its complement is triangle-free, so we
grow a random triangle-free complement and flip it.
"""

from __future__ import annotations

import random
from typing import Iterator

from .graphs import MAX_VERTICES, Graph, GraphError

#: Labeled enumeration beyond this many vertices is pointless (2^28 graphs).
ENUM_CAP = 8


def two_cliques(t: int) -> Graph:
    """Disjoint union of two cliques of size 2t-1.

    On its 4t-2 vertices the largest connected matching has size t-1: edges
    in different components are never joined, so a connected matching lives
    inside one clique, and a clique of size 2t-1 holds t-1 disjoint edges.
    """
    if t < 1:
        raise GraphError("t must be positive")
    k = 2 * t - 1
    rows = [0] * (2 * k)
    for u in range(k):
        for v in range(u + 1, k):
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            rows[u + k] |= 1 << (v + k)
            rows[v + k] |= 1 << (u + k)
    return Graph(2 * k, tuple(rows))


def two_cliques_plus(t: int) -> Graph:
    """two_cliques(t) plus one universal vertex, reaching 4t-1 vertices.

    The universal vertex lets one cross edge join everything, so the
    connected matching number rises to t.
    """
    base = two_cliques(t)
    n = base.n + 1
    w = base.n
    rows = [r | 1 << w for r in base.rows]
    rows.append(base.full_mask)
    return Graph(n, tuple(rows))


def random_alpha2(n: int, seed: int, density: float = 0.5) -> Graph:
    """Random n-vertex graph with alpha <= 2, deterministic in (n, seed, density).

    Visits all vertex pairs in a seeded random order; each is attempted with
    probability ``density`` as a complement edge and kept only if it closes
    no complement triangle.  The complement stays triangle-free, so the
    returned graph has no independent triple.  density=0 yields the complete
    graph; higher densities make the graph sparser.
    """
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"n must be between 0 and {MAX_VERTICES}")
    if not 0.0 <= density <= 1.0:
        raise GraphError("density must lie in [0, 1]")
    rng = random.Random(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    crows = [0] * n
    for u, v in pairs:
        if rng.random() >= density:
            continue
        if crows[u] & crows[v]:
            continue  # would close a triangle in the complement
        crows[u] |= 1 << v
        crows[v] |= 1 << u
    full = (1 << n) - 1
    rows = tuple(full & ~crows[u] & ~(1 << u) for u in range(n))
    return Graph._raw(n, rows)


def c5_blowup(sizes: tuple[int, int, int, int, int]) -> Graph:
    """Substitute cliques of the given sizes into the five vertices of a 5-cycle.

    Consecutive classes are complete to each other, non-consecutive ones
    anti-complete.  An independent set meets each class at most once and
    picks pairwise non-consecutive classes, so alpha = 2.  Unit sizes give
    the plain 5-cycle.
    """
    if len(sizes) != 5 or any(s < 1 for s in sizes):
        raise GraphError("sizes must be five positive integers")
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise GraphError(f"blowup has {n} vertices (cap {MAX_VERTICES})")
    offsets = [0]
    for s in sizes:
        offsets.append(offsets[-1] + s)
    class_mask = [
        ((1 << offsets[i + 1]) - 1) ^ ((1 << offsets[i]) - 1) for i in range(5)
    ]
    rows = [0] * n
    for i in range(5):
        block = class_mask[i] | class_mask[(i + 1) % 5] | class_mask[(i + 4) % 5]
        for u in range(offsets[i], offsets[i + 1]):
            rows[u] = block & ~(1 << u)
    return Graph(n, tuple(rows))


def enumerate_alpha2(n: int) -> Iterator[Graph]:
    """All labeled n-vertex graphs with alpha <= 2, in ascending edge-mask order.

    Edge masks index the lexicographic pair list (0,1),(0,2),...,(n-2,n-1);
    a mask survives iff every vertex triple contains at least one edge,
    checked with precomputed triple masks.  Capped at n = 8: the search
    space is 2^(n choose 2).
    """
    if n > ENUM_CAP:
        raise GraphError(f"labeled enumeration capped at n = {ENUM_CAP}")
    if n < 0:
        raise GraphError("n must be nonnegative")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    triple_masks = tuple(
        (1 << index[(i, j)]) | (1 << index[(i, k)]) | (1 << index[(j, k)])
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
    )
    for em in range(1 << len(pairs)):
        ok = True
        for tm in triple_masks:
            if not em & tm:
                ok = False
                break
        if not ok:
            continue
        rows = [0] * n
        rest = em
        while rest:
            p = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            u, v = pairs[p]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph._raw(n, tuple(rows))
