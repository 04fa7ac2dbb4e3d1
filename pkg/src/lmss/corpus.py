"""Corpus generation: exhaustive small graphs, trees, seeded random graphs, coronas.

Exhaustive generation augments the (n-1)-vertex catalogue by one vertex
with every possible neighbourhood and rejects isomorphs via a canonical
form: the minimum upper-triangle adjacency key over vertex orders that
respect an iterated-refinement colouring, with individualisation when the
colouring leaves large cells.  Feasible through n = 8; larger sizes are
sampled randomly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial

from .graphs import Graph, UsageError, bits, corona, is_connected
from .fixtures import fixture

EXHAUSTIVE_LIMIT = 8

# brute-force the minimum key once the cell permutation count drops to this
_BRUTE_CAP = 720


def _refine(n: int, adj: tuple[int, ...], seed_colors: list) -> list[list[int]]:
    """Stable colour refinement; returns cells ordered by canonical colour keys."""
    colors = seed_colors
    # renumber by sorted key so the ordering is order-independent
    palette = {k: i for i, k in enumerate(sorted(set(colors)))}
    colors = [palette[c] for c in colors]
    while True:
        keys = [
            (colors[v], tuple(sorted(colors[u] for u in bits(adj[v]))))
            for v in range(n)
        ]
        palette = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [palette[k] for k in keys]
        if new == colors:
            break
        colors = new
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [cells[c] for c in sorted(cells)]


def _key_of_order(n: int, adj: tuple[int, ...], order: list[int]) -> int:
    key = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            key = key << 1 | (row >> order[j] & 1)
    return key


def canonical_key(g: Graph) -> int:
    """Isomorphism-invariant upper-triangle adjacency key."""
    n, adj = g.n, g.adj
    if n <= 1:
        return 0
    m2 = sum(a.bit_count() for a in adj)
    if m2 == 0:
        return 0
    if m2 == n * (n - 1):
        return (1 << (n * (n - 1) // 2)) - 1
    best: int | None = None

    def descend(cells: list[list[int]]):
        nonlocal best
        perms = 1
        for c in cells:
            perms *= factorial(len(c))
        if perms <= _BRUTE_CAP:
            for combo in product(*(permutations(c) for c in cells)):
                order = [v for part in combo for v in part]
                key = _key_of_order(n, adj, order)
                if best is None or key < best:
                    best = key
            return
        i = next(idx for idx, c in enumerate(cells) if len(c) > 1)
        for v in cells[i]:
            colors: list = [None] * n
            for j, c in enumerate(cells):
                for w in c:
                    colors[w] = (j, 0 if (j == i and w == v) else 1)
            descend(_refine(n, adj, colors))

    descend(_refine(n, adj, [g.degree(v) for v in range(n)]))
    assert best is not None
    return best


def graph_from_key(n: int, key: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    total = len(pairs)
    edges = [
        pairs[idx] for idx in range(total) if key >> (total - 1 - idx) & 1
    ]
    return Graph.from_edges(n, edges)


def canonical_graph(g: Graph) -> Graph:
    return graph_from_key(g.n, canonical_key(g))


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, canonical and key-sorted."""
    if n > EXHAUSTIVE_LIMIT:
        raise UsageError(f"exhaustive generation is capped at n = {EXHAUSTIVE_LIMIT}")
    if n == 0:
        return (Graph(0, ()),)
    seen: set[int] = set()
    for g in nonisomorphic_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            adj = [g.adj[v] | ((mask >> v & 1) << (n - 1)) for v in range(n - 1)]
            adj.append(mask)
            seen.add(canonical_key(Graph(n, tuple(adj))))
    return tuple(graph_from_key(n, k) for k in sorted(seen))


def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in nonisomorphic_graphs(n) if is_connected(g))


def connected_graphs_upto(max_n: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs(n))
    return out


@lru_cache(maxsize=None)
def nonisomorphic_trees(n: int) -> tuple[Graph, ...]:
    """All trees on n vertices up to isomorphism, grown by leaf attachment."""
    if n == 0:
        return ()
    if n == 1:
        return (Graph(1, (0,)),)
    seen: set[int] = set()
    for t in nonisomorphic_trees(n - 1):
        for v in range(n - 1):
            adj = [t.adj[u] | ((1 << (n - 1)) if u == v else 0) for u in range(n - 1)]
            adj.append(1 << v)
            seen.add(canonical_key(Graph(n, tuple(adj))))
    return tuple(graph_from_key(n, k) for k in sorted(seen))


def trees_upto(max_n: int) -> list[Graph]:
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(nonisomorphic_trees(n))
    return out


def random_graph(n: int, edge_probability: float, rng: random.Random) -> Graph:
    edges = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    return Graph.from_edges(n, edges)


def random_graphs(count: int, n: int, edge_probability: float, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(n, edge_probability, rng) for _ in range(count)]


@dataclass(frozen=True)
class CorpusItem:
    """One graph of a corpus; coronas also carry their construction parts."""

    name: str
    graph: Graph
    base: Graph | None = None
    parts: tuple[Graph, ...] = ()


def corona_family(max_x: int = 3, max_h: int = 3, max_total: int = 12) -> list[CorpusItem]:
    """Every corona with base size <= max_x, part sizes <= max_h, total <= max_total."""
    bases = [g for n in range(1, max_x + 1) for g in nonisomorphic_graphs(n)]
    parts = [g for n in range(1, max_h + 1) for g in nonisomorphic_graphs(n)]
    items: list[CorpusItem] = []
    for x in bases:
        for hs in product(parts, repeat=x.n):
            if x.n + sum(h.n for h in hs) > max_total:
                continue
            items.append(
                CorpusItem(
                    name=f"corona_{len(items):04d}",
                    graph=corona(x, hs),
                    base=x,
                    parts=tuple(hs),
                )
            )
    return items


@dataclass(frozen=True)
class CorpusSpec:
    """What to generate: exhaustive | random | coronas | fixtures, plus a filter."""

    source: str
    max_n: int | None = None
    count: int | None = None
    n: int | None = None
    edge_probability: float | None = None
    seed: int | None = None
    fixtures: tuple[str, ...] = ()
    max_x: int = 3
    max_h: int = 3
    max_total: int = 12
    filter: str = "none"

    def __post_init__(self):
        if self.source not in ("exhaustive", "random", "coronas", "fixtures"):
            raise UsageError(f"unknown corpus source {self.source!r}")
        if self.source == "exhaustive" and not self.max_n:
            raise UsageError("exhaustive corpora need max_n")
        if self.source == "random":
            if self.seed is None:
                raise UsageError("random corpora need an explicit seed")
            if not self.count or not self.n or self.edge_probability is None:
                raise UsageError("random corpora need count, n and edge_probability")
        if self.source == "fixtures" and not self.fixtures:
            raise UsageError("fixture corpora need at least one fixture name")
        if self.filter not in ("none", "vwc", "bipartite", "forest", "connected"):
            raise UsageError(f"unknown corpus filter {self.filter!r}")

    def to_dict(self) -> dict:
        out = {"source": self.source, "filter": self.filter}
        if self.source == "exhaustive":
            out["max_n"] = self.max_n
        elif self.source == "random":
            out.update(
                count=self.count,
                n=self.n,
                edge_probability=self.edge_probability,
                seed=self.seed,
            )
        elif self.source == "coronas":
            out.update(max_x=self.max_x, max_h=self.max_h, max_total=self.max_total)
        else:
            out["fixtures"] = list(self.fixtures)
        return out


def _passes(g: Graph, name: str) -> bool:
    if name == "none":
        return True
    if name == "connected":
        return is_connected(g)
    from . import classifiers

    if name == "vwc":
        return classifiers.is_very_well_covered(g)
    if name == "bipartite":
        return classifiers.is_bipartite(g)
    if name == "forest":
        return classifiers.is_forest(g)
    raise UsageError(f"unknown corpus filter {name!r}")


def iter_corpus(spec: CorpusSpec) -> list[CorpusItem]:
    """Materialise the corpus a spec describes, deterministically."""
    items: list[CorpusItem]
    if spec.source == "exhaustive":
        items = [
            CorpusItem(name=f"g{n}_{i:05d}", graph=g)
            for n in range(1, spec.max_n + 1)
            for i, g in enumerate(connected_graphs(n))
        ]
    elif spec.source == "random":
        items = [
            CorpusItem(name=f"r{spec.n}_{i:05d}", graph=g)
            for i, g in enumerate(
                random_graphs(spec.count, spec.n, spec.edge_probability, spec.seed)
            )
        ]
    elif spec.source == "coronas":
        items = corona_family(spec.max_x, spec.max_h, spec.max_total)
    else:
        items = [CorpusItem(name=name, graph=fixture(name)) for name in spec.fixtures]
    return [it for it in items if _passes(it.graph, spec.filter)]
