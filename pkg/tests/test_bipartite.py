import random

import pytest
from hypothesis import given, strategies as st

from cmatch import (
    BipartiteMatching,
    Graph,
    GraphError,
    bits,
    konig_cover,
    max_bipartite_matching,
)
from cmatch.graphs import mask_of

from conftest import graphs
import oracles


@st.composite
def graph_with_sides(draw, max_n: int = 12):
    g = draw(graphs(min_n=2, max_n=max_n))
    side = draw(st.lists(st.integers(0, 2), min_size=g.n, max_size=g.n))
    a = mask_of(v for v in range(g.n) if side[v] == 0)
    b = mask_of(v for v in range(g.n) if side[v] == 1)
    return g, a, b


@given(graph_with_sides())
def test_matching_size_matches_brute_force(case):
    g, a, b = case
    m = max_bipartite_matching(g, a, b)
    assert m.size == oracles.brute_bipartite_matching(g, set(bits(a)), set(bits(b)))


@given(graph_with_sides())
def test_matching_edges_are_sound(case):
    g, a, b = case
    m = max_bipartite_matching(g, a, b)
    seen = 0
    for u, v in m.edges:
        assert a >> u & 1 and b >> v & 1
        assert g.adj(u, v)
        em = 1 << u | 1 << v
        assert not seen & em
        seen |= em
    assert m.vertex_mask == seen


@given(graph_with_sides())
def test_konig_duality(case):
    g, a, b = case
    m = max_bipartite_matching(g, a, b)
    cover = konig_cover(g, a, b, m)
    assert cover.size == m.size
    for u in bits(a):
        for v in bits(b & g.rows[u]):
            assert cover.members & (1 << u | 1 << v), f"edge ({u},{v}) uncovered"


def test_overlapping_sides_rejected():
    g = Graph.complete(4)
    with pytest.raises(GraphError):
        max_bipartite_matching(g, 0b0011, 0b0110)


def test_deterministic_output():
    g = oracles.make_random_graph(random.Random(11), 14, 0.5)
    a, b = 0b0000000_1111111, 0b1111111_0000000
    first = max_bipartite_matching(g, a, b)
    second = max_bipartite_matching(g, a, b)
    assert first.edges == second.edges


def test_empty_sides():
    g = Graph.complete(4)
    assert max_bipartite_matching(g, 0, 0b1111).size == 0
    assert max_bipartite_matching(g, 0b0011, 0).size == 0


def test_konig_rejects_foreign_matchings():
    g = Graph.from_edges(4, [(0, 2), (1, 3), (0, 3)])
    a, b = 0b0011, 0b1100
    with pytest.raises(GraphError):
        konig_cover(g, a, b, BipartiteMatching(g, a, b, ((0, 1),)))  # not an edge a->b
    with pytest.raises(GraphError):
        konig_cover(g, a, b, BipartiteMatching(g, a, b, ((2, 0),)))  # sides swapped
    with pytest.raises(GraphError):
        # maximum is 2; a single edge must be refused as non-maximum
        konig_cover(g, a, b, BipartiteMatching(g, a, b, ((0, 3),)))


def test_saturation_on_complete_bipartite():
    g = Graph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)])
    m = max_bipartite_matching(g, 0b000111, 0b111000)
    assert m.size == 3
