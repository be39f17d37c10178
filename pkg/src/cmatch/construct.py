"""Recursive construction of a size-t connected matching.

Works on graphs with 4t-1 vertices and independence number at most 2.  Each
level picks a vertex v and a neighbor u whose non-neighborhood inside
Y = V minus N[v] is smallest; when u misses at most 3 vertices of Y, removing
v, u and two further vertices (preferring the missed ones) leaves a
4(t-1)-1-vertex graph where every surviving vertex but at most one sees u or
v.  The edge uv therefore links to every edge of the recursively built
matching.  Levels where no such u exists fall back to the exact solver, then
to the greedy one, and finally emit a failure certificate carrying the
structural obstruction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from .graphs import Graph, GraphError, VertexSet, bits, induced_subgraph
from .matchings import (
    Matching,
    greedy_connected_matching,
    max_connected_matching,
    validate_connected_matching,
)

POLICIES = ("maxdeg", "first")


@dataclass(frozen=True)
class ConstructorConfig:
    policy: str = "maxdeg"
    base_t: int = 4
    exact_budget: Optional[int] = 10**7
    greedy_restarts: int = 64
    seed: int = 0


@dataclass(frozen=True)
class LevelRecord:
    """One recursion level; fields are None when the branch did not use them."""

    level: int
    branch: str  # recurse | base-exact | fallback-exact | fallback-greedy
    v: Optional[int] = None
    u: Optional[int] = None
    y_size: Optional[int] = None
    deficit: Optional[int] = None
    removed: tuple[int, ...] = ()

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "branch": self.branch,
            "v": self.v,
            "u": self.u,
            "y_size": self.y_size,
            "deficit": self.deficit,
            "removed": list(self.removed),
        }


@dataclass(frozen=True)
class ConstructionTrace:
    levels: tuple[LevelRecord, ...]

    def to_jsonl(self) -> str:
        return "".join(
            json.dumps(rec.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
            for rec in self.levels
        )


@dataclass(frozen=True)
class FailureCertificate:
    """Structural witness of a level where every branch failed.

    On a valid input (4t-1 vertices, alpha <= 2, t <= 22) producing one of
    these would contradict the established bound, so any appearance is
    treated as a build-failing event by the tests.
    """

    t: int
    alive: tuple[int, ...]
    reason: str
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "alive": list(self.alive),
            "reason": self.reason,
            "details": self.details,
        }


def _no_independent_triple(g: Graph, members: VertexSet) -> bool:
    for u in bits(members):
        non_u = members & ~g.rows[u] & ~((1 << (u + 1)) - 1)
        for v in bits(non_u):
            if non_u & ~g.rows[v] & ~((1 << (v + 1)) - 1):
                return False
    return True


def _pick_v(g: Graph, alive: VertexSet, policy: str) -> int:
    verts = list(bits(alive))
    if policy == "first":
        return verts[0]
    # maxdeg: highest degree inside the surviving set, lowest index on ties
    return max(verts, key=lambda v: ((g.rows[v] & alive).bit_count(), -v))


def _take_lowest(pool: VertexSet, k: int) -> tuple[list[int], int]:
    out = []
    for v in bits(pool):
        if len(out) == k:
            break
        out.append(v)
    return out, k - len(out)


def _solve_direct(
    g: Graph,
    t: int,
    alive: VertexSet,
    config: ConstructorConfig,
    records: list[LevelRecord],
    exact_branch: str,
) -> Union[list[tuple[int, int]], FailureCertificate]:
    sub, labels = induced_subgraph(g, alive)
    res = max_connected_matching(sub, budget=config.exact_budget, target=t)
    if res.value >= t:
        records.append(LevelRecord(t, exact_branch))
        return [
            (min(labels[a], labels[b]), max(labels[a], labels[b]))
            for a, b in res.matching.edges
        ]
    greedy = greedy_connected_matching(
        sub, seed=config.seed, restarts=config.greedy_restarts
    )
    if greedy.value >= t:
        records.append(LevelRecord(t, "fallback-greedy"))
        return [
            (min(labels[a], labels[b]), max(labels[a], labels[b]))
            for a, b in greedy.matching.edges
        ]
    return FailureCertificate(
        t,
        tuple(bits(alive)),
        "no connected matching of the required size found",
        {
            "best_exact": res.value,
            "exact_complete": res.exact,
            "best_greedy": greedy.value,
        },
    )


def _build(
    g: Graph,
    t: int,
    alive: VertexSet,
    config: ConstructorConfig,
    records: list[LevelRecord],
) -> Union[list[tuple[int, int]], FailureCertificate]:
    assert alive.bit_count() == 4 * t - 1
    assert _no_independent_triple(g, alive)
    if t <= config.base_t:
        return _solve_direct(g, t, alive, config, records, "base-exact")

    v = _pick_v(g, alive, config.policy)
    neighbors = g.rows[v] & alive
    fallback_details: dict = {"v": v}
    if neighbors:
        y = alive & ~g.rows[v] & ~(1 << v)
        u = -1
        deficit = -1
        for cand in bits(neighbors):
            d = (y & ~g.rows[cand]).bit_count()
            if deficit < 0 or d < deficit:
                u, deficit = cand, d
        fallback_details.update(y_size=y.bit_count(), best_u=u, deficit=deficit)
        if deficit <= 3:
            missed = y & ~g.rows[u]
            removed, need = _take_lowest(missed, 2)
            if need:
                more, need = _take_lowest(y & ~g.rows[u] ^ y, need)
                removed += more
            if need:
                pool = alive & ~(1 << v) & ~(1 << u) & ~y
                more, need = _take_lowest(pool & ~sum(1 << r for r in removed), need)
                removed += more
            assert not need
            next_alive = alive & ~(1 << v) & ~(1 << u)
            for r in removed:
                next_alive &= ~(1 << r)
            # the proof's linchpin: uv must see all but at most one survivor
            assert (missed & next_alive).bit_count() <= 1, (
                "more than one survivor misses both u and v"
            )
            records.append(
                LevelRecord(
                    t, "recurse", v=v, u=u,
                    y_size=y.bit_count(), deficit=deficit,
                    removed=tuple(removed),
                )
            )
            sub = _build(g, t - 1, next_alive, config, records)
            if not isinstance(sub, FailureCertificate):
                sub.append((min(u, v), max(u, v)))
                return sub
            del records[-1]
            fallback_details["inner_failure"] = sub.reason

    direct = _solve_direct(g, t, alive, config, records, "fallback-exact")
    if isinstance(direct, FailureCertificate):
        direct.details.update(fallback_details)
    return direct


def construct_connected_matching(
    g: Graph, t: int, config: Optional[ConstructorConfig] = None
) -> Union[tuple[Matching, ConstructionTrace], FailureCertificate]:
    """Build a connected matching of size >= t, with a per-level trace.

    Requires exactly 4t-1 vertices and no independent triple.  The result is
    validated before being returned; a FailureCertificate is returned only
    when the recursive step, the exact solver, and the greedy fallback all
    fail at some level.
    """
    config = config or ConstructorConfig()
    if config.policy not in POLICIES:
        raise GraphError(f"unknown policy {config.policy!r}; choose from {POLICIES}")
    if config.base_t < 1:
        raise GraphError("base_t must be positive")
    if t < 1:
        raise GraphError("t must be positive")
    if g.n != 4 * t - 1:
        raise GraphError(f"graph has {g.n} vertices; need 4t-1 = {4 * t - 1}")
    if not _no_independent_triple(g, g.full_mask):
        raise GraphError("graph has an independent triple (alpha > 2)")

    records: list[LevelRecord] = []
    built = _build(g, t, g.full_mask, config, records)
    if isinstance(built, FailureCertificate):
        return built
    matching = Matching(g, tuple(sorted(built)))
    bad = validate_connected_matching(g, matching.edges)
    assert bad is None, bad
    assert matching.size >= t
    return matching, ConstructionTrace(tuple(records))
