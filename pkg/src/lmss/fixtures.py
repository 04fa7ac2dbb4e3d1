"""Named fixture graphs used throughout the test corpus.

Each fixture is a small graph with display labels; several carry named
edges (``e1``, ``e2``, ...) so matchings can be spelled the same way the
figures do.  Edge lists were transcribed from drawings and are pinned by
the regression tests in ``tests/test_fixtures.py``.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Edge, Graph, UsageError, complete, corona, cycle, path

# name -> (n, edges, labels or None, named edges or None)
_SPECS: dict[str, tuple] = {
    # seven vertices, pendant tail a-b and d, g hanging off the b-e-f-c square
    "fig1_G": (
        7,
        [(0, 1), (1, 2), (2, 3), (2, 6), (1, 4), (2, 5), (4, 5)],
        ("a", "b", "c", "d", "e", "f", "g"),
        None,
    ),
    # the one-cycle bipartite graph whose square v-y-x-t alternates with {yv,tx}
    "fig1_H": (
        6,
        [(0, 1), (1, 2), (1, 3), (3, 4), (4, 2), (4, 5)],
        ("u", "v", "t", "y", "x", "w"),
        None,
    ),
    # path a-b-c-d-g with the c-e-f-g detour
    "fig2_G": (
        7,
        [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (5, 6), (6, 4)],
        ("a", "b", "c", "d", "g", "e", "f"),
        None,
    ),
    # path a-b-c-d plus the square b-e-f-c; unique perfect matching {ab,cd,ef}
    "fig3_G": (
        6,
        [(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (4, 5)],
        ("a", "b", "c", "d", "e", "f"),
        None,
    ),
    "fig3_H": (
        6,
        [(0, 1), (1, 2), (1, 3), (3, 4), (4, 2), (4, 5)],
        ("u", "v", "t", "y", "x", "w"),
        None,
    ),
    # triangle-free Koenig-Egervary graph where N[{b,c}] induces a 5-cycle
    "fig4_G": (
        7,
        [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4), (4, 5), (4, 6)],
        ("a", "b", "c", "d", "e", "f", "g"),
        None,
    ),
    "fig4_H": (
        8,
        [(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (0, 5), (2, 6)],
        None,
        None,
    ),
    # corona of (P4 + chord v1v3) with K3, K2, P3, C4; built in fixture()
    "fig5_X": (
        4,
        [(0, 1), (1, 2), (2, 3), (0, 2)],
        ("v1", "v2", "v3", "v4"),
        None,
    ),
    # 12 vertices; only a..e are named in the drawing
    "fig6_G1": (
        12,
        [(5, 0), (0, 2), (2, 1), (2, 8), (2, 4), (2, 6), (4, 3), (3, 8),
         (6, 7), (6, 8), (8, 9), (8, 11), (10, 11)],
        ("a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"),
        None,
    ),
    "fig6_G2": (
        7,
        [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (2, 5), (3, 6)],
        ("x", "p1", "p2", "p3", "q1", "y", "q2"),
        None,
    ),
    "fig7_G1": (4, [(0, 1), (1, 2), (2, 3), (0, 3)], None, None),
    "fig7_G2": (
        6,
        [(0, 1), (1, 5), (0, 2), (2, 3), (0, 4), (4, 3), (1, 3)],
        ("a", "b", "c", "d", "e", "f"),
        None,
    ),
    # K_{3,3} drawn as a 6-cycle a1 b1 b2 a2 a3 b3 with the three long chords
    "fig7_G3": (
        6,
        [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5), (0, 5), (2, 3)],
        ("a1", "a2", "a3", "b1", "b2", "b3"),
        {"e1": (0, 3), "e2": (3, 4), "e3": (1, 4), "e4": (1, 2), "e5": (2, 5),
         "e6": (0, 5)},
    ),
    # unique perfect matching {r1r2, p1p2, q1q2, p3q3}; triangle r2-p2-q2
    "fig8_G1": (
        8,
        [(0, 1), (1, 6), (1, 3), (2, 3), (3, 4), (5, 6), (6, 7), (3, 6), (4, 7)],
        ("r1", "r2", "p1", "p2", "p3", "q1", "q2", "q3"),
        None,
    ),
    "fig8_G2": (4, [(0, 1), (1, 2), (2, 3), (0, 3)], None, None),
    "fig8_G3": (
        6,
        [(0, 1), (1, 5), (0, 2), (2, 3), (0, 4), (4, 3), (1, 3)],
        ("a", "b", "c", "d", "e", "f"),
        None,
    ),
    # the 2x3 grid (ladder)
    "fig9_G1": (
        6,
        [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)],
        ("a1", "a2", "a3", "b1", "b2", "b3"),
        {"e1": (3, 4), "e2": (0, 1), "e3": (2, 5)},
    ),
    "fig9_G2": (
        6,
        [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (4, 5), (2, 5), (5, 3)],
        ("v1", "v2", "v3", "v4", "u1", "u2"),
        {"e1": (0, 1), "e2": (4, 5), "e3": (2, 3)},
    ),
    "fig9_G3": (
        9,
        [(0, 1), (1, 2), (2, 3), (3, 4), (0, 5), (5, 6), (2, 6), (3, 7),
         (7, 8), (3, 8), (7, 4), (4, 8)],
        ("w1", "w2", "w3", "w4", "w5", "z1", "z2", "z3", "z4"),
        {"e1": (5, 6), "e2": (1, 2), "e3": (3, 7), "e4": (4, 8)},
    ),
    # well-covered, unique perfect matching {e1..e5}, but {x},{y} are not
    # locally maximum while {x,y} is
    "fig10_G": (
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 6), (6, 7), (7, 2),
         (3, 8), (5, 9), (8, 9)],
        ("x", "b", "c", "d", "e", "f", "a", "y", "g", "h"),
        {"e1": (6, 7), "e2": (0, 1), "e3": (2, 3), "e4": (4, 5), "e5": (8, 9)},
    ),
}

_FIG5_LABELS = (
    "v1", "v2", "v3", "v4",          # base graph
    "y", "y2", "y3",                  # K3 attached to v1
    "u", "u2",                        # K2 attached to v2
    "x", "x2", "z",                   # P3 attached to v3 (x - x2 - z)
    "t", "t2", "t3", "t4",            # C4 attached to v4
)


@lru_cache(maxsize=None)
def fixture(name: str) -> Graph:
    """Return the named fixture graph with its canonical labelling."""
    if name == "fig5_G":
        x = fixture("fig5_X")
        g = corona(x, [complete(3), complete(2), path(3), cycle(4)])
        return g.with_labels(_FIG5_LABELS)
    if name not in _SPECS:
        raise UsageError(f"unknown fixture {name!r}")
    n, edges, labels, _ = _SPECS[name]
    return Graph.from_edges(n, edges, labels)


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_SPECS)) + ("fig5_G",)


def named_edges(name: str) -> dict[str, Edge]:
    """Figure edge names (e1, e2, ...) for fixtures that carry them."""
    if name not in _SPECS or _SPECS[name][3] is None:
        raise UsageError(f"fixture {name!r} has no named edges")
    return {k: Edge.of(u, v) for k, (u, v) in _SPECS[name][3].items()}
