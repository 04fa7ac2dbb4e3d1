"""Build-time sanity checks: every fixture reproduces its documented traits.

The edge lists were transcribed from drawings, so each named graph is
pinned here against the properties that identify it, via the independent
oracles.
"""

import pytest

import oracles
from lmss import girth, is_connected
from lmss.fixtures import fixture, fixture_names, named_edges


def E(name):
    g = fixture(name)
    return g.n, oracles.edges_of(g)


def V(name, *labels):
    g = fixture(name)
    return {g.vertex(x) for x in labels}


def test_fixture_catalogue_complete():
    expected = {
        "fig1_G", "fig1_H", "fig2_G", "fig3_G", "fig3_H", "fig4_G", "fig4_H",
        "fig5_X", "fig5_G", "fig6_G1", "fig6_G2", "fig7_G1", "fig7_G2",
        "fig7_G3", "fig8_G1", "fig8_G2", "fig8_G3", "fig9_G1", "fig9_G2",
        "fig9_G3", "fig10_G",
    }
    assert set(fixture_names()) == expected
    for name in expected:
        g = fixture(name)
        assert g.n <= 16
        if name != "fig5_G":
            assert is_connected(g)


def test_fig1():
    n, e = E("fig1_G")
    m = [tuple(sorted((fixture("fig1_G").vertex(a), fixture("fig1_G").vertex(b))))
         for a, b in (("a", "b"), ("c", "d"), ("e", "f"))]
    assert len(m) == oracles.mu(n, e)
    assert oracles.alternating_cycles(n, e, m) == []

    n, e = E("fig1_H")
    assert len(oracles.simple_cycles(n, e)) == 1  # its unique cycle
    g = fixture("fig1_H")
    yv = tuple(sorted((g.vertex("y"), g.vertex("v"))))
    tx = tuple(sorted((g.vertex("t"), g.vertex("x"))))
    cycles = oracles.alternating_cycles(n, e, [yv, tx])
    assert len(cycles) == 1 and len(cycles[0][0]) == 4


def test_fig1_H_restricted_verdicts():
    g = fixture("fig1_H")
    n, e = E("fig1_H")
    uv = (g.vertex("u"), g.vertex("v"))
    xw = (g.vertex("x"), g.vertex("w"))
    xy = (g.vertex("x"), g.vertex("y"))
    tv = (g.vertex("t"), g.vertex("v"))
    assert oracles.is_uniquely_restricted(n, e, [uv, xw])
    assert not oracles.is_uniquely_restricted(n, e, [xy, tv])
    mm = oracles.maximum_matchings(n, e)
    assert frozenset(map(lambda p: tuple(sorted(p)), [uv, xw])) in map(frozenset, mm)


def test_fig2():
    n, e = E("fig2_G")
    assert oracles.alpha(n, e) == 3
    omega = oracles.maximum_stable_sets(n, e)
    assert frozenset(V("fig2_G", "a", "d", "f")) in omega
    assert frozenset(V("fig2_G", "b", "e", "g")) in omega
    for members, want in [
        (("a",), True), (("b",), False), (("e", "d"), True),
        (("a", "e"), False), (("a", "d", "f"), True), (("c", "f"), False),
    ]:
        assert oracles.psi_member(n, e, V("fig2_G", *members)) == want


def test_fig3():
    n, e = E("fig3_G")
    assert oracles.alpha(n, e) == 3
    assert len(oracles.perfect_matchings(n, e)) == 1
    assert oracles.is_greedoid(oracles.psi(n, e))
    assert oracles.is_bipartite(n, e)

    n, e = E("fig3_H")
    assert fixture("fig3_H") == fixture("fig1_H")
    assert oracles.mu(n, e) == 2
    assert not oracles.is_greedoid(oracles.psi(n, e))
    assert oracles.psi_member(n, e, V("fig3_H", "y", "t"))
    assert not oracles.psi_member(n, e, V("fig3_H", "y"))
    assert not oracles.psi_member(n, e, V("fig3_H", "t"))


def test_fig4():
    n, e = E("fig4_G")
    assert not oracles.is_greedoid(oracles.psi(n, e))
    assert oracles.is_koenig_egervary(n, e)
    assert oracles.psi_member(n, e, V("fig4_G", "b", "c"))
    ni, ei = oracles.induced(n, e, oracles.closed(oracles.adj_sets(n, e), V("fig4_G", "b", "c")))
    assert not oracles.is_koenig_egervary(ni, ei)

    n, e = E("fig4_H")
    assert oracles.is_greedoid(oracles.psi(n, e))
    assert oracles.is_koenig_egervary(n, e)
    assert not oracles.is_bipartite(n, e)
    assert all(
        oracles.is_uniquely_restricted(n, e, m) for m in oracles.maximum_matchings(n, e)
    )


def test_fig5():
    g = fixture("fig5_G")
    assert g.n == 16
    assert g.edge_count == 4 + (3 + 3) + (1 + 2) + (2 + 3) + (4 + 4)
    # the attached parts are not all complete, so the corona is not well-covered
    assert not oracles.is_well_covered(g.n, oracles.edges_of(g))


def test_fig6():
    n, e = E("fig6_G1")
    assert oracles.is_very_well_covered(n, e)
    assert len(oracles.perfect_matchings(n, e)) == 1
    adj = oracles.adj_sets(n, e)
    assert oracles.psi_member(n, e, V("fig6_G1", "a", "b"))
    assert len(oracles.nbhd(adj, V("fig6_G1", "b", "d"))) == 3
    assert len(oracles.nbhd(adj, V("fig6_G1", "b", "e"))) == 2
    assert oracles.psi_member(n, e, V("fig6_G1", "b", "e"))
    assert not oracles.psi_member(n, e, V("fig6_G1", "b", "d"))
    # the one-vertex growth pair: base {b} (a pendant), extended by a
    assert oracles.psi_member(n, e, V("fig6_G1", "b"))
    assert not oracles.psi_member(n, e, V("fig6_G1", "a"))

    n, e = E("fig6_G2")
    assert oracles.is_well_covered(n, e)
    assert not oracles.is_very_well_covered(n, e)
    assert not oracles.is_bipartite(n, e)
    assert oracles.psi_member(n, e, V("fig6_G2", "x", "y"))
    ni, ei = oracles.induced(n, e, oracles.closed(oracles.adj_sets(n, e), V("fig6_G2", "x", "y")))
    assert not oracles.is_koenig_egervary(ni, ei)


@pytest.mark.parametrize("name", ["fig7_G1", "fig7_G2", "fig7_G3"])
def test_fig7_all_vwc_with_many_matchings(name):
    n, e = E(name)
    assert oracles.is_very_well_covered(n, e)
    pms = oracles.perfect_matchings(n, e)
    assert len(pms) > 1
    for m in pms:
        squares = [
            c for c, _ in oracles.alternating_cycles(n, e, m)
            if len(c) == 4 and not oracles.cycle_has_chord(n, e, c)
        ]
        assert squares, f"{name}: {m} lacks a chordless alternating square"


def test_fig7_G3_is_k33_with_alternating_hexagon():
    n, e = E("fig7_G3")
    assert sorted(len(a) for a in oracles.adj_sets(n, e)) == [3] * 6
    assert oracles.is_bipartite(n, e)
    ne = named_edges("fig7_G3")
    m = [tuple(ne["e1"]), tuple(ne["e3"]), tuple(ne["e5"])]
    assert any(len(c) == 6 for c, _ in oracles.alternating_cycles(n, e, m))


def test_fig8():
    n, e = E("fig8_G1")
    g = fixture("fig8_G1")
    assert oracles.is_very_well_covered(n, e)
    pms = oracles.perfect_matchings(n, e)
    want = frozenset(
        tuple(sorted((g.vertex(a), g.vertex(b))))
        for a, b in (("r1", "r2"), ("p1", "p2"), ("q1", "q2"), ("p3", "q3"))
    )
    assert [frozenset(m) for m in pms] == [want]
    assert girth(g) == 3
    triangles = [c for c in oracles.simple_cycles(n, e) if len(c) == 3]
    assert triangles == [tuple(sorted(V("fig8_G1", "r2", "p2", "q2")))]
    # no triangle edge is matched; exactly one square edge is
    msets = {frozenset(p) for p in want}
    tri = triangles[0]
    assert all(frozenset((tri[i], tri[(i + 1) % 3])) not in msets for i in range(3))
    assert oracles.is_greedoid(oracles.psi(n, e))
    assert oracles.property_p(n, e, [tuple(p) for p in want])

    for name in ("fig8_G2", "fig8_G3"):
        n, e = E(name)
        assert oracles.is_very_well_covered(n, e)
        assert len(oracles.perfect_matchings(n, e)) > 1
        assert not oracles.is_greedoid(oracles.psi(n, e))


def test_fig9():
    n, e = E("fig9_G1")
    assert not oracles.is_well_covered(n, e)
    ne = named_edges("fig9_G1")
    m = [tuple(ne["e1"]), tuple(ne["e2"]), tuple(ne["e3"])]
    cycles = oracles.alternating_cycles(n, e, m)
    assert any(len(c) == 6 for c, _ in cycles)
    assert any(
        len(c) == 4 and not oracles.cycle_has_chord(n, e, c) for c, _ in cycles
    )

    n, e = E("fig9_G2")
    assert oracles.is_well_covered(n, e) and not oracles.is_very_well_covered(n, e)
    ne = named_edges("fig9_G2")
    m = [tuple(ne["e1"]), tuple(ne["e2"]), tuple(ne["e3"])]
    cycles = oracles.alternating_cycles(n, e, m)
    assert len(cycles) == 1 and len(cycles[0][0]) == 6

    n, e = E("fig9_G3")
    assert oracles.is_well_covered(n, e) and not oracles.is_very_well_covered(n, e)
    ne = named_edges("fig9_G3")
    m = [tuple(ne[k]) for k in ("e1", "e2", "e3", "e4")]
    assert len(m) == oracles.mu(n, e)
    squares = [c for c, _ in oracles.alternating_cycles(n, e, m) if len(c) == 4]
    assert squares
    assert all(oracles.cycle_has_chord(n, e, c) for c in squares)


def test_fig10():
    n, e = E("fig10_G")
    g = fixture("fig10_G")
    assert oracles.alpha(n, e) == 4
    assert oracles.is_well_covered(n, e)
    assert not oracles.is_very_well_covered(n, e)
    ne = named_edges("fig10_G")
    pms = oracles.perfect_matchings(n, e)
    assert [frozenset(m) for m in pms] == [
        frozenset(tuple(ne[k]) for k in ("e1", "e2", "e3", "e4", "e5"))
    ]
    assert oracles.psi_member(n, e, V("fig10_G", "x", "y"))
    assert not oracles.psi_member(n, e, V("fig10_G", "x"))
    assert not oracles.psi_member(n, e, V("fig10_G", "y"))
    assert not oracles.is_greedoid(oracles.psi(n, e))
    assert oracles.mu(n, e) == 5
    assert not oracles.property_p(n, e, [tuple(ne[k]) for k in ("e1", "e2", "e3", "e4", "e5")])


def test_named_edges_exist_in_graphs():
    for name in ("fig7_G3", "fig9_G1", "fig9_G2", "fig9_G3", "fig10_G"):
        g = fixture(name)
        for label, (u, v) in named_edges(name).items():
            assert g.adjacent(u, v), f"{name}.{label}"
    with pytest.raises(Exception):
        named_edges("fig2_G")
