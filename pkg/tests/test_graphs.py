import random

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from cmatch import (
    Graph,
    Graph6Error,
    GraphError,
    bits,
    clique_number,
    common_neighborhood,
    complement,
    encode_graph6,
    find_triangle,
    independence_at_most_2,
    induced_subgraph,
    is_anticomplete,
    is_clique,
    is_complete_between,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    triangle_count,
)
from cmatch.graphs import closed_neighborhood, mask_of, non_neighborhood

from conftest import graphs
import oracles


def test_from_edges_and_basic_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.adj(0, 1) and g.adj(1, 0)
    assert not g.adj(0, 2)
    assert g.degree(1) == 2
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count() == 3
    assert g.full_mask == 0b1111


def test_from_edges_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (0b10,))  # row count mismatch
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, (0b1,))  # self-loop bit
    with pytest.raises(GraphError):
        Graph.from_edges(200, [])


def test_standard_constructors():
    k4 = Graph.complete(4)
    assert k4.edge_count() == 6
    assert Graph.empty(5).edge_count() == 0
    c5 = Graph.cycle(5)
    assert c5.edge_count() == 5
    assert c5.adj(4, 0)
    assert Graph.cycle(2).edge_count() == 0  # degenerate cycles collapse


def test_edges_are_lexicographic():
    g = Graph.from_edges(5, [(3, 4), (0, 2), (0, 1), (1, 4)])
    assert g.edges() == [(0, 1), (0, 2), (1, 4), (3, 4)]


@given(graphs())
def test_graph6_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


@given(graphs())
def test_graph6_matches_networkx_encoder(g):
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edges())
    theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
    assert encode_graph6(g) == theirs


def test_graph6_cross_check_larger_sizes():
    rng = random.Random(7)
    for n in (63, 64, 90, 120, 128):
        h = nx.gnp_random_graph(n, 0.3, seed=rng.randint(0, 10**6))
        line = nx.to_graph6_bytes(h, header=False).decode().strip()
        g = parse_graph6(line)
        assert g.n == n
        assert g.edge_count() == h.number_of_edges()
        assert encode_graph6(g) == line


def test_graph6_optional_header():
    g = Graph.complete(4)
    assert parse_graph6(">>graph6<<" + encode_graph6(g)) == g


def test_graph6_errors_carry_offsets():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("C" + chr(40))  # byte below the printable range
    assert exc.value.offset == 1
    with pytest.raises(Graph6Error):
        parse_graph6("")
    with pytest.raises(Graph6Error):
        parse_graph6("C")  # truncated adjacency bits


def test_graph6_rejects_oversized_graphs():
    line = nx.to_graph6_bytes(nx.empty_graph(129), header=False).decode().strip()
    with pytest.raises(Graph6Error):
        parse_graph6(line)


def test_edge_list_round_trip():
    g = Graph.from_edges(5, [(0, 1), (2, 4)])
    text = "5 2\n0 1\n2 4\n"
    assert parse_edge_list(text) == g


@pytest.mark.parametrize(
    "text",
    [
        "",
        "x y",
        "3\n",
        "3 2\n0 1\n",  # fewer edge lines than promised
        "3 1\n0 1\n1 2\n",
        "3 1\n0 0\n",
        "3 1\n0 9\n",
        "300 0\n",
    ],
)
def test_edge_list_rejects_malformed(text):
    with pytest.raises(Graph6Error):
        parse_edge_list(text)


@given(graphs())
def test_complement_involution(g):
    assert complement(complement(g)) == g


@given(graphs(max_n=8))
def test_complement_partitions_pairs(g):
    co = complement(g)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert g.adj(u, v) != co.adj(u, v)


@given(graphs(max_n=9), st.integers(0, 2**9 - 1))
def test_induced_subgraph_preserves_adjacency(g, raw_mask):
    members = raw_mask & g.full_mask
    sub, labels = induced_subgraph(g, members)
    assert labels == sorted(labels)
    assert sub.n == len(labels)
    for i in range(sub.n):
        for j in range(sub.n):
            if i != j:
                assert sub.adj(i, j) == g.adj(labels[i], labels[j])


@given(graphs(max_n=10))
def test_independence_predicate_matches_brute_force(g):
    assert independence_at_most_2(g) == (oracles.brute_independence_number(g) <= 2)


@given(graphs(max_n=10))
def test_clique_number_matches_brute_force(g):
    assert clique_number(g) == oracles.brute_clique_number(g)


@given(graphs(max_n=9))
def test_triangle_count_matches_brute_force(g):
    assert triangle_count(g) == oracles.naive_triangle_count(g)


@given(graphs(min_n=1, max_n=9), st.data())
def test_common_neighborhood_matches_naive(g, data):
    size = data.draw(st.integers(1, g.n))
    verts = data.draw(st.sets(st.integers(0, g.n - 1), min_size=size, max_size=size))
    got = common_neighborhood(g, mask_of(verts))
    assert set(bits(got)) == oracles.naive_common_neighbors(g, verts)


def test_common_neighborhood_rejects_empty_set():
    with pytest.raises(GraphError):
        common_neighborhood(Graph.complete(3), 0)


def test_neighborhood_variants():
    g = Graph.from_edges(4, [(0, 1), (0, 2)])
    assert neighborhood(g, 0) == 0b0110
    assert closed_neighborhood(g, 0) == 0b0111
    assert non_neighborhood(g, 0) == 0b1000


def test_is_clique_boundaries():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2)])
    assert is_clique(g, 0)
    assert is_clique(g, 0b0001)
    assert is_clique(g, 0b0111)
    assert not is_clique(g, 0b1011)


def test_set_relations_and_overlap_errors():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert is_anticomplete(g, 0b0011, 0b1100)
    assert not is_complete_between(g, 0b0011, 0b1100)
    assert is_complete_between(g, 0b0001, 0b0010)
    assert is_anticomplete(g, 0, 0b1111)  # empty side is vacuous
    with pytest.raises(GraphError):
        is_anticomplete(g, 0b0011, 0b0110)
    with pytest.raises(GraphError):
        is_complete_between(g, 0b0001, 0b0001)


def test_find_triangle_is_lexicographic_least():
    assert find_triangle(Graph.complete(5)) == (0, 1, 2)
    assert find_triangle(Graph.cycle(5)) is None
    g = Graph.from_edges(6, [(1, 2), (2, 5), (1, 5), (3, 4)])
    assert find_triangle(g) == (1, 2, 5)
    # restricting to members that break the triangle
    assert find_triangle(g, 0b011110) is None


@given(graphs(max_n=9))
def test_find_triangle_agrees_with_count(g):
    assert (find_triangle(g) is None) == (triangle_count(g) == 0)
