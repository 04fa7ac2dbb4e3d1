"""Property tests: structural laws on random graphs, plus corpus sweeps for
the girth-based structure statements that only make sense over a corpus."""

import random

from hypothesis import given, settings, strategies as st

import oracles
from lmss import (
    Graph,
    VertexSet,
    alpha,
    canonical_key,
    closed_neighborhood,
    complete,
    corona,
    cycle,
    girth,
    has_pendant_perfect_matching,
    is_very_well_covered,
    is_well_covered,
    mu,
    neighborhood,
    parse_edge_list,
    path,
    psi_enumerate,
    serialize,
)
from lmss.corpus import connected_graphs_upto, nonisomorphic_graphs


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@given(graphs())
def test_neighborhood_laws(g):
    for mask in range(0, 1 << g.n, 7):
        s = VertexSet(g, mask & g.full_mask)
        nb = neighborhood(g, s)
        assert nb.bits & s.bits == 0
        assert closed_neighborhood(g, s).bits == s.bits | nb.bits


@given(graphs(max_n=6))
def test_serialize_roundtrip(g):
    assert parse_edge_list(serialize(g)) == g


@given(graphs(max_n=5), st.integers(min_value=0, max_value=2**30))
def test_canonical_key_invariant_under_relabeling(g, seed):
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    relabeled = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
    assert canonical_key(relabeled) == canonical_key(g)


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_psi_modes_agree(g):
    assert psi_enumerate(g, "auto").members == psi_enumerate(g, "oracle").members


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_alpha_mu_against_oracle(g):
    e = oracles.edges_of(g)
    assert alpha(g) == (oracles.alpha(g.n, e) if g.n else 0)
    assert mu(g) == (oracles.mu(g.n, e) if g.n else 0)


@given(st.lists(st.sampled_from([1, 2, 3]), min_size=1, max_size=4))
def test_corona_counts(sizes):
    base = path(len(sizes))
    hs = [complete(k) for k in sizes]
    if base.n + sum(sizes) > 16:
        return
    c = corona(base, hs)
    assert c.n == base.n + sum(h.n for h in hs)
    assert c.edge_count == base.edge_count + sum(h.edge_count + h.n for h in hs)


def test_corona_with_single_vertices_is_vwc():
    # the whole one-vertex-per-slot path family, then assorted other bases
    for k in range(1, 7):
        c = corona(path(k), [complete(1)] * k)
        assert is_very_well_covered(c)
    for base in (cycle(5), complete(3), nonisomorphic_graphs(4)[7]):
        c = corona(base, [complete(1)] * base.n)
        assert is_very_well_covered(c)
        assert has_pendant_perfect_matching(c)


def test_girth_structure_of_well_covered_graphs():
    """Corpus sweeps for the two girth-based structure statements.

    Girth >= 6, connected, not a 7-cycle, not a single vertex:
    well-covered exactly when a pendant perfect matching exists.
    Girth >= 5: very well-covered exactly when a pendant perfect
    matching exists.  Forests count as infinite girth.
    """
    corpus = connected_graphs_upto(8)
    for g in corpus:
        gi = girth(g)
        high_girth = gi is None or gi >= 6
        med_girth = gi is None or gi >= 5
        if med_girth:
            assert is_very_well_covered(g) == has_pendant_perfect_matching(g), g
        is_c7 = g.n == 7 and gi == 7 and all(g.degree(v) == 2 for v in range(g.n))
        if high_girth and not is_c7 and g.n > 1:
            assert is_well_covered(g) == has_pendant_perfect_matching(g), g


def test_very_well_covered_graphs_have_perfect_matchings():
    for g in connected_graphs_upto(7):
        if is_very_well_covered(g):
            assert mu(g) * 2 == g.n
