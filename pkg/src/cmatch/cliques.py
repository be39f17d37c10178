"""Budgeted exact maximum-clique search over bitmask adjacency rows.

One engine serves every clique-shaped question in the library: clique number
of a graph, maximum connected matchings (cliques of a link graph), and the
auxiliary "sided" graphs used by the structure verifiers. Budgets are counted
in node expansions so results are machine-independent and replayable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class CliqueResult:
    """Outcome of a clique search.

    ``exact`` is True only when the branch-and-bound ran to completion; a
    search stopped by budget exhaustion or by reaching ``target`` still
    returns a valid clique, flagged inexact.
    """

    size: int
    members: int
    exact: bool
    expansions: int


def greedy_clique(rows: Sequence[int]) -> int:
    """First-fit clique from every seed vertex; returns the best mask found."""
    best_mask = 0
    best_size = 0
    for s in range(len(rows)):
        mask = 1 << s
        size = 1
        cand = rows[s]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            mask |= low
            size += 1
            cand &= rows[v]
        if size > best_size:
            best_size = size
            best_mask = mask
    return best_mask


def max_clique(
    rows: Sequence[int],
    *,
    budget: Optional[int] = None,
    target: Optional[int] = None,
    initial: int = 0,
) -> CliqueResult:
    """Maximum clique of the graph given by adjacency ``rows``.

    Tomita-style branch and bound: candidates are greedily colored and
    explored in descending color order, pruning branches whose color bound
    cannot beat the incumbent.

    Args:
        rows: adjacency bitmask per vertex (symmetric, irreflexive).
        budget: cap on node expansions; exhaustion returns the incumbent
            flagged ``exact=False``.
        target: stop as soon as a clique of this size is found (the result
            is then a lower-bound witness, flagged ``exact=False``).
        initial: known clique mask used to seed the incumbent.
    """
    n = len(rows)
    if n == 0:
        return CliqueResult(0, 0, True, 0)

    best_mask = initial if initial else greedy_clique(rows)
    best_size = best_mask.bit_count()
    expansions = 0

    if target is not None and best_size >= target:
        return CliqueResult(best_size, best_mask, False, 0)

    def color_order(p: int) -> list[tuple[int, int]]:
        # Greedy sequential coloring; emits (vertex, color) in ascending color.
        order = []
        uncolored = p
        color = 0
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                order.append((v, color))
                avail &= ~rows[v] & ~low
                uncolored ^= low
        return order

    def expand(r_mask: int, r_size: int, p: int) -> bool:
        # Returns True to stop the whole search (budget or target hit).
        nonlocal best_mask, best_size, expansions
        expansions += 1
        if budget is not None and expansions > budget:
            return True
        order = color_order(p)
        for i in range(len(order) - 1, -1, -1):
            v, color = order[i]
            if r_size + color <= best_size:
                return False
            low = 1 << v
            if r_size + 1 > best_size:
                best_size = r_size + 1
                best_mask = r_mask | low
                if target is not None and best_size >= target:
                    return True
            child = p & rows[v]
            if child and expand(r_mask | low, r_size + 1, child):
                return True
            p &= ~low
        return False

    stopped = expand(0, 0, (1 << n) - 1)
    return CliqueResult(best_size, best_mask, not stopped, expansions)
