import json

import pytest
from hypothesis import given, settings, strategies as st

from cmatch import (
    Graph,
    GraphError,
    HOLDS,
    INCONCLUSIVE,
    LEMMA_IDS,
    Matching,
    MatchingResult,
    VIOLATED,
    bits,
    c5_blowup,
    find_dominating_matching,
    greedy_connected_matching,
    is_dominating_matching,
    max_anticomplete_pair,
    max_connected_matching,
    random_alpha2,
    run_checker,
    two_cliques_plus,
)
from cmatch.verifiers import (
    _max_complete_split_triple,
    _max_shielded_pair,
    check_dominating_free,
    check_matching_bound,
    check_pair_bound,
)

from conftest import graphs
import oracles


def fake_cm(g: Graph, value: int, exact: bool = True) -> MatchingResult:
    """A MatchingResult claiming the given value, built from real edges.

    Lets tests drive the non-vacuous checker paths, which honest inputs
    cannot reach while the conjecture keeps holding on small cases.
    """
    edges = greedy_connected_matching(g).matching.edges[:value]
    assert len(edges) == value
    return MatchingResult(Matching(g, edges), exact, 0)


def checkers_for(t: int) -> list[str]:
    return [lem for lem in LEMMA_IDS if lem != "matching4" or t >= 5]


# ---------------------------------------------------------------------------
# Domain validation and vacuous verdicts
# ---------------------------------------------------------------------------


def test_domain_validation():
    g = two_cliques_plus(2)
    with pytest.raises(GraphError):
        run_checker("omega", g, 3)  # n mismatch
    with pytest.raises(GraphError):
        run_checker("omega", g, 0)
    with pytest.raises(GraphError):
        run_checker("omega", Graph.empty(7), 2)  # alpha way over 2
    with pytest.raises(GraphError):
        run_checker("nope", g, 2)
    with pytest.raises(GraphError):
        run_checker("matching4", g, 2)  # |B| = t-4 would be empty


@pytest.mark.parametrize("t", [2, 3])
def test_vacuous_holds_when_cm_reaches_t(t):
    g = two_cliques_plus(t)
    cm = max_connected_matching(g)
    assert cm.value == t
    for lemma in checkers_for(t):
        rep = run_checker(lemma, g, t, cm)
        assert rep.verdict == HOLDS
        assert rep.witness is None
        assert rep.exact
        assert rep.details.get("vacuous")


def test_report_schema():
    g = two_cliques_plus(2)
    rep = run_checker("t1", g, 2, max_connected_matching(g))
    data = rep.to_json()
    assert set(data) == {"lemma", "t", "verdict", "witness", "exact", "work"}
    json.dumps(data)  # serializable as-is


# ---------------------------------------------------------------------------
# Violated paths, driven by a planted cm value
# ---------------------------------------------------------------------------


def _assert_clique(g, verts):
    assert all(g.adj(u, v) for i, u in enumerate(verts) for v in verts[i + 1:])


def test_planted_violations_on_two_cliques_plus_5():
    g = two_cliques_plus(5)  # n = 19, omega = 10
    cm = fake_cm(g, 1)
    expected_violated = {"t1", "t2", "matching", "matching4", "3sets", "omega",
                         "dominating", "gcm"}
    for lemma in checkers_for(5):
        rep = run_checker(lemma, g, 5, cm)
        if lemma == "triangle":
            # every triangle here has at least t+2 common neighbors
            assert rep.verdict == HOLDS
            continue
        assert lemma in expected_violated
        assert rep.verdict == VIOLATED, lemma
        assert rep.exact
        assert rep.witness is not None
        assert rep.witness["cm"]["value"] == 1
        json.dumps(rep.to_json())


def test_violated_pair_witness_is_sound():
    g = two_cliques_plus(5)
    rep = check_pair_bound(g, 5, fake_cm(g, 1))
    assert rep.verdict == VIOLATED
    s1, s2 = rep.witness["s1"], rep.witness["s2"]
    assert rep.witness["total"] == len(s1) + len(s2) >= 2
    _assert_clique(g, s1)
    _assert_clique(g, s2)
    assert not set(s1) & set(s2)
    assert not any(g.adj(u, v) for u in s1 for v in s2)


def test_violated_matching_witness_carries_konig_cover():
    g = two_cliques_plus(5)
    rep = check_matching_bound(g, 5, fake_cm(g, 1), b_offset=1)
    assert rep.verdict == VIOLATED
    w = rep.witness
    assert len(w["a"]) <= len(w["b"]) == 4
    assert w["matching_size"] < len(w["a"])
    # Konig: the cover certifies the deficiency
    assert len(w["cover"]) == w["matching_size"]


def test_violated_dominating_witness_is_dominating():
    g = two_cliques_plus(5)
    rep = run_checker("dominating", g, 5, fake_cm(g, 1))
    assert rep.verdict == VIOLATED
    edges = tuple(tuple(e) for e in rep.witness["matching"]["edges"])
    assert is_dominating_matching(g, edges)


def test_violated_partition_witness_partitions_vertices():
    g = two_cliques_plus(5)
    rep = run_checker("3sets", g, 5, fake_cm(g, 1))
    assert rep.verdict == VIOLATED
    w = rep.witness
    parts = [set(w["s1"]), set(w["s2"]), set(w["s3"])]
    assert sum(len(p) for p in parts) == g.n
    assert set.union(*parts) == set(range(g.n))


def test_triangle_bound_violation_on_thin_blowup():
    g = c5_blowup((3, 1, 1, 1, 1))  # the triple's common neighborhood is tiny
    rep = run_checker("triangle", g, 2, fake_cm(g, 1))
    assert rep.verdict == VIOLATED
    assert rep.witness["common_size"] == len(rep.witness["common"]) == 2
    u, v, w = rep.witness["triangle"]
    assert g.adj(u, v) and g.adj(u, w) and g.adj(v, w)


def test_k7_mixes_verdicts_under_planted_cm():
    g = Graph.complete(7)
    cm = fake_cm(g, 1)
    verdicts = {lemma: run_checker(lemma, g, 2, cm).verdict for lemma in checkers_for(2)}
    assert verdicts["triangle"] == HOLDS      # common neighborhoods are large
    assert verdicts["matching"] == HOLDS      # complete graphs saturate everything
    for lemma in ("t1", "t2", "3sets", "omega", "dominating", "gcm"):
        assert verdicts[lemma] == VIOLATED, lemma


def test_inexact_cm_downgrades_violations():
    g = two_cliques_plus(5)
    cm = fake_cm(g, 1, exact=False)
    for lemma in ("t1", "omega", "gcm", "dominating"):
        rep = run_checker(lemma, g, 5, cm)
        assert rep.verdict == INCONCLUSIVE, lemma
        assert not rep.exact
        assert rep.witness is not None  # the structure is still reported


def test_minimality_gate_downgrades_large_t():
    g = two_cliques_plus(19)  # t-1 = 18 exceeds the known-true range
    cm = fake_cm(g, 1)
    gated = run_checker("t1", g, 19, cm, minimality_gate=True)
    assert gated.verdict == INCONCLUSIVE
    assert "minimality" in gated.details["reason"]
    ungated = run_checker("t1", g, 19, cm)
    assert ungated.verdict == VIOLATED
    # below the known-true range the gate changes nothing
    small = run_checker("t1", two_cliques_plus(5), 5, fake_cm(two_cliques_plus(5), 1),
                        minimality_gate=True)
    assert small.verdict == VIOLATED


def test_capped_dominating_search_is_inconclusive():
    g = two_cliques_plus(5)
    rep = check_dominating_free(g, 5, fake_cm(g, 1), max_size=0)
    assert rep.verdict == INCONCLUSIVE
    assert rep.witness is None


# ---------------------------------------------------------------------------
# Structure maximizers against brute force
# ---------------------------------------------------------------------------


@settings(max_examples=40)
@given(graphs(max_n=8))
def test_anticomplete_pair_matches_brute_force(g):
    pair = max_anticomplete_pair(g)
    assert pair.exact
    assert pair.total == oracles.brute_anticomplete_pair(g)
    # returned sets satisfy the definition
    s1, s2 = set(bits(pair.s1)), set(bits(pair.s2))
    assert not s1 & s2
    _assert_clique(g, sorted(s1))
    _assert_clique(g, sorted(s2))
    assert not any(g.adj(u, v) for u in s1 for v in s2)


@settings(max_examples=40)
@given(graphs(max_n=8), st.integers(0, 3))
def test_heuristic_pair_is_a_valid_lower_bound(g, seed):
    exact = max_anticomplete_pair(g)
    heur = max_anticomplete_pair(g, "heuristic", seed=seed, restarts=8)
    assert not heur.exact
    assert heur.total <= exact.total
    s1, s2 = set(bits(heur.s1)), set(bits(heur.s2))
    assert not s1 & s2
    assert not any(g.adj(u, v) for u in s1 for v in s2)


@settings(max_examples=25)
@given(graphs(max_n=7))
def test_split_triple_matches_brute_force(g):
    s0, s1, s2, total, exact, work = _max_complete_split_triple(g, "exact", 0, 0)
    assert exact
    assert total == oracles.brute_split_triple(g)


@settings(max_examples=40)
@given(graphs(max_n=8))
def test_shielded_pair_matches_brute_force(g):
    s1, s2, total, exact, work = _max_shielded_pair(g, "exact", 0, 0)
    assert exact
    assert total == oracles.brute_shielded_pair(g)


@settings(max_examples=40)
@given(graphs(max_n=8))
def test_structure_totals_nest(g):
    from cmatch import clique_number

    omega = clique_number(g)
    pair = max_anticomplete_pair(g).total
    triple = _max_complete_split_triple(g, "exact", 0, 0)[3]
    shielded = _max_shielded_pair(g, "exact", 0, 0)[2]
    # one empty side collapses each structure onto a smaller one
    assert pair >= omega
    assert triple >= pair
    assert omega <= shielded <= pair


@settings(max_examples=40)
@given(graphs(max_n=8))
def test_dominating_search_matches_brute_force(g):
    got = find_dominating_matching(g, 3)
    want = oracles.brute_dominating_size(g, 3)
    if want is None:
        assert got is None
    else:
        assert got is not None and got.size == want
        assert is_dominating_matching(g, got.edges)


def test_dominating_search_prefers_small_sizes():
    g = Graph.complete(6)
    m = find_dominating_matching(g, 3)
    assert m.size == 1


# ---------------------------------------------------------------------------
# Honest end-to-end verdicts on in-domain hosts
# ---------------------------------------------------------------------------


@settings(max_examples=15)
@given(st.integers(0, 500), st.sampled_from((0.0, 0.3, 0.6)))
def test_random_7_vertex_hosts_never_violate_at_t2(seed, density):
    g = random_alpha2(7, seed, density)
    cm = max_connected_matching(g, target=2)
    for lemma in checkers_for(2):
        rep = run_checker(lemma, g, 2, cm)
        assert rep.verdict in (HOLDS, INCONCLUSIVE)
        assert rep.verdict == HOLDS  # cm >= 2 is a theorem here, so vacuous
