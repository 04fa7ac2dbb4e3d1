"""Matchings, alternating cycles, and uniquely restricted matchings.

A matching M is *uniquely restricted* when it is the only perfect matching
of the subgraph induced by the vertices it saturates; equivalently, when
the graph has no M-alternating cycle.  The alternating-cycle route is the
implementation; the enumeration route stays available as an oracle.

All enumeration is exhaustive DFS over canonical edge order, exact and
deterministic at this scale (n <= 16).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    Edge,
    Graph,
    MismatchError,
    UsageError,
    VertexSet,
    bits,
)


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges of one graph."""

    graph: Graph
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))
        used = 0
        for e in self.edges:
            if not isinstance(e, Edge):
                raise UsageError("matching edges must be Edge values")
            if not self.graph.adjacent(e.u, e.v):
                raise MismatchError(f"edge {e} is not present in the graph")
            m = (1 << e.u) | (1 << e.v)
            if used & m:
                raise UsageError(f"edges share a vertex at {e}")
            used |= m

    @classmethod
    def of(cls, g: Graph, *pairs: tuple[int | str, int | str]) -> "Matching":
        return cls(g, tuple(Edge.of(g.vertex(a), g.vertex(b)) for a, b in pairs))

    @property
    def saturated_bits(self) -> int:
        m = 0
        for e in self.edges:
            m |= (1 << e.u) | (1 << e.v)
        return m

    def saturated(self) -> VertexSet:
        return VertexSet(self.graph, self.saturated_bits)

    def saturates(self, v: int | str) -> bool:
        return bool(self.saturated_bits >> self.graph.vertex(v) & 1)

    def is_perfect(self) -> bool:
        return self.saturated_bits == self.graph.full_mask

    def __len__(self) -> int:
        return len(self.edges)

    def __contains__(self, e: Edge) -> bool:
        return e in self.edges

    def __repr__(self):
        lab = self.graph.label_of
        return "{%s}" % ",".join(f"{lab(u)}{lab(v)}" for u, v in self.edges)


@dataclass(frozen=True)
class AlternatingCycle:
    """An even cycle whose edges alternate inside/outside a matching.

    ``vertices`` lists the cycle once; edge i runs vertices[i] ->
    vertices[i+1] (wrapping), and ``in_matching[i]`` flags whether that
    edge lies in the reference matching.
    """

    graph: Graph
    vertices: tuple[int, ...]
    in_matching: tuple[bool, ...]

    def __post_init__(self):
        k = len(self.vertices)
        if k < 4 or k % 2:
            raise ValueError("alternating cycles have even length >= 4")
        if len(set(self.vertices)) != k or len(self.in_matching) != k:
            raise ValueError("malformed cycle")
        for i in range(k):
            u, v = self.vertices[i], self.vertices[(i + 1) % k]
            if not self.graph.adjacent(u, v):
                raise ValueError(f"cycle step {u}-{v} is not an edge")
            if self.in_matching[i] == self.in_matching[(i + 1) % k]:
                raise ValueError("cycle edges do not alternate")

    @property
    def length(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[Edge, ...]:
        k = len(self.vertices)
        return tuple(
            Edge.of(self.vertices[i], self.vertices[(i + 1) % k]) for i in range(k)
        )

    def chords(self) -> tuple[Edge, ...]:
        """Graph edges joining non-consecutive cycle vertices."""
        k = len(self.vertices)
        out = []
        for i in range(k):
            for j in range(i + 2, k):
                if i == 0 and j == k - 1:
                    continue
                u, v = self.vertices[i], self.vertices[j]
                if self.graph.adjacent(u, v):
                    out.append(Edge.of(u, v))
        return tuple(out)

    def is_chordless(self) -> bool:
        return not self.chords()

    def __repr__(self):
        lab = self.graph.label_of
        return "(%s)" % "-".join(lab(v) for v in self.vertices)


def _check_matching(g: Graph, m: Matching) -> None:
    if m.graph != g:
        raise MismatchError("matching does not belong to this graph")


@lru_cache(maxsize=1024)
def _mu_table(g: Graph) -> tuple[int, ...]:
    """Maximum matching size of the induced subgraph on every vertex mask."""
    table = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        best = table[mask ^ low]
        for u in bits(g.adj[v] & mask):
            cand = 1 + table[mask ^ low ^ (1 << u)]
            if cand > best:
                best = cand
        table[mask] = best
    return tuple(table)


def mu(g: Graph) -> int:
    """Size of a maximum matching."""
    return _mu_table(g)[g.full_mask]


def enumerate_matchings(g: Graph) -> list[Matching]:
    """Every matching of g, the empty one included."""
    edges = g.edges()
    out = [Matching(g, ())]

    def grow(start: int, chosen: list[Edge], used: int):
        for i in range(start, len(edges)):
            e = edges[i]
            m = (1 << e.u) | (1 << e.v)
            if used & m:
                continue
            chosen.append(e)
            out.append(Matching(g, tuple(chosen)))
            grow(i + 1, chosen, used | m)
            chosen.pop()

    grow(0, [], 0)
    return out


def enumerate_maximum_matchings(g: Graph) -> list[Matching]:
    """All maximum matchings, in lexicographic edge order, no duplicates."""
    target = mu(g)
    table = _mu_table(g)
    out: list[Matching] = []

    def grow(avail: int, chosen: list[Edge], need: int):
        if need == 0:
            out.append(Matching(g, tuple(chosen)))
            return
        low = avail & -avail
        v = low.bit_length() - 1
        # v left unmatched
        if table[avail ^ low] >= need:
            grow(avail ^ low, chosen, need)
        for u in bits(g.adj[v] & avail):
            rest = avail ^ low ^ (1 << u)
            if table[rest] >= need - 1:
                chosen.append(Edge(v, u))
                grow(rest, chosen, need - 1)
                chosen.pop()

    grow(g.full_mask, [], target)
    return sorted(out, key=lambda m: m.edges)


def enumerate_perfect_matchings(g: Graph) -> list[Matching]:
    if g.n % 2:
        return []
    out: list[Matching] = []

    def grow(avail: int, chosen: list[Edge]):
        if not avail:
            out.append(Matching(g, tuple(chosen)))
            return
        low = avail & -avail
        v = low.bit_length() - 1
        for u in bits(g.adj[v] & avail):
            chosen.append(Edge(v, u))
            grow(avail ^ low ^ (1 << u), chosen)
            chosen.pop()

    grow(g.full_mask, [])
    return sorted(out, key=lambda m: m.edges)


def count_perfect_matchings(g: Graph) -> int:
    """Number of perfect matchings, by memoised recursion on the free-vertex mask."""
    if g.n == 0:
        return 1
    if g.n % 2:
        return 0
    memo: dict[int, int] = {0: 1}

    def count(avail: int) -> int:
        got = memo.get(avail)
        if got is not None:
            return got
        low = avail & -avail
        v = low.bit_length() - 1
        total = 0
        for u in bits(g.adj[v] & avail):
            total += count(avail ^ low ^ (1 << u))
        memo[avail] = total
        return total

    return count(g.full_mask)


def find_alternating_cycle(g: Graph, m: Matching) -> AlternatingCycle | None:
    """First alternating cycle with respect to m, or None.

    DFS over alternating walks, seeded at each matched edge in canonical
    order and extending through ascending neighbours, so the result is
    deterministic.
    """
    _check_matching(g, m)
    mate: dict[int, int] = {}
    for u, v in m.edges:
        mate[u] = v
        mate[v] = u
    for a, b in m.edges:
        path = _alt_dfs(g, mate, a, [a, b], (1 << a) | (1 << b))
        if path is not None:
            flags = tuple(i % 2 == 0 for i in range(len(path)))
            return AlternatingCycle(g, tuple(path), flags)
    return None


def _alt_dfs(g, mate, home, path, onpath):
    """Extend an alternating path (last step matched) and close it at ``home``."""
    x = path[-1]
    for u in bits(g.adj[x]):
        if mate.get(x) == u:
            continue
        if u == home:
            if len(path) >= 4:
                return path
            continue
        if onpath >> u & 1:
            continue
        w = mate.get(u)
        if w is None or onpath >> w & 1:
            continue
        got = _alt_dfs(g, mate, home, path + [u, w], onpath | (1 << u) | (1 << w))
        if got is not None:
            return got
    return None


def enumerate_alternating_cycles(g: Graph, m: Matching) -> list[AlternatingCycle]:
    """All distinct alternating cycles (distinct as edge sets)."""
    _check_matching(g, m)
    mate: dict[int, int] = {}
    for u, v in m.edges:
        mate[u] = v
        mate[v] = u
    found: dict[frozenset, AlternatingCycle] = {}

    def walk(home, path, onpath):
        x = path[-1]
        for u in bits(g.adj[x]):
            if mate.get(x) == u:
                continue
            if u == home:
                if len(path) >= 4:
                    flags = tuple(i % 2 == 0 for i in range(len(path)))
                    cyc = AlternatingCycle(g, tuple(path), flags)
                    found.setdefault(frozenset(cyc.edges()), cyc)
                continue
            if onpath >> u & 1:
                continue
            w = mate.get(u)
            if w is None or onpath >> w & 1:
                continue
            walk(home, path + [u, w], onpath | (1 << u) | (1 << w))

    for a, b in m.edges:
        walk(a, [a, b], (1 << a) | (1 << b))
    return list(found.values())


def is_uniquely_restricted(g: Graph, m: Matching) -> bool:
    """True when m has no alternating cycle (empty matchings vacuously qualify)."""
    return find_alternating_cycle(g, m) is None


def has_unique_perfect_matching(g: Graph) -> tuple[bool, Matching | None]:
    """(True, the matching) when exactly one perfect matching exists.

    Finds one perfect matching exhaustively, then asks whether it is
    uniquely restricted; on a perfect matching that equals uniqueness.
    """
    if g.n % 2:
        return False, None
    first = _first_perfect_matching(g)
    if first is None:
        return False, None
    if is_uniquely_restricted(g, first):
        return True, first
    return False, None


def _first_perfect_matching(g: Graph) -> Matching | None:
    if mu(g) * 2 != g.n:
        return None

    def grow(avail: int, chosen: list[Edge]):
        if not avail:
            return chosen
        low = avail & -avail
        v = low.bit_length() - 1
        for u in bits(g.adj[v] & avail):
            chosen.append(Edge(v, u))
            got = grow(avail ^ low ^ (1 << u), chosen)
            if got is not None:
                return got
            chosen.pop()
        return None

    res = grow(g.full_mask, [])
    return Matching(g, tuple(res)) if res is not None else None


def find_alternating_c4(g: Graph, m: Matching) -> AlternatingCycle | None:
    """First chordless alternating 4-cycle with respect to a maximum matching.

    A candidate uses two matched edges ab, xy joined by two non-matched
    edges; chordless means the remaining two vertex pairs are non-adjacent.
    """
    _check_matching(g, m)
    if len(m) != mu(g):
        raise UsageError("find_alternating_c4 needs a maximum matching")
    es = m.edges
    for i in range(len(es)):
        a, b = es[i]
        for j in range(i + 1, len(es)):
            x, y = es[j]
            for p, q in ((x, y), (y, x)):
                # cycle a-b .. b-p .. p-q .. q-a; diagonals a-p and b-q must be absent
                if (
                    g.adjacent(b, p)
                    and g.adjacent(q, a)
                    and not g.adjacent(a, p)
                    and not g.adjacent(b, q)
                ):
                    return AlternatingCycle(g, (a, b, p, q), (True, False, True, False))
    return None


def check_property_p(g: Graph, m: Matching) -> tuple[bool, Edge | None]:
    """Neighbourhood condition that characterises very well-covered graphs.

    For every matched edge xy: x and y share no neighbour, and every other
    neighbour of x is adjacent to every other neighbour of y.  Returns the
    violating edge when the check fails.
    """
    _check_matching(g, m)
    if not m.is_perfect():
        raise UsageError("check_property_p needs a perfect matching")
    for e in m.edges:
        x, y = e
        if g.adj[x] & g.adj[y]:
            return False, e
        others_y = g.adj[y] & ~(1 << x)
        for v in bits(g.adj[x] & ~(1 << y)):
            if others_y & ~g.adj[v]:
                return False, e
    return True, None


def pm_edge_cycle_exclusion(g: Graph, m: Matching) -> tuple[bool, list[int] | None]:
    """No perfect-matching edge of a very well-covered graph lies on a
    chordless cycle of length 3 or of length 5 and up.

    Exists to be property-tested: returns the verdict plus a counterexample
    cycle (as a vertex list) should one ever appear.
    """
    _check_matching(g, m)
    if not m.is_perfect():
        raise UsageError("pm_edge_cycle_exclusion needs a perfect matching")
    if __debug__:
        from .classifiers import is_very_well_covered

        if not is_very_well_covered(g):
            raise UsageError("pm_edge_cycle_exclusion needs a very well-covered graph")
    for x, y in m.edges:
        common = g.adj[x] & g.adj[y]
        if common:
            w = next(bits(common))
            return False, [x, y, w]
        long_path = _induced_path(g, x, y, min_edges=4)
        if long_path is not None:
            return False, long_path
    return True, None


def _induced_path(g: Graph, x: int, y: int, min_edges: int) -> list[int] | None:
    """An induced x..y path with >= min_edges edges whose only extra
    adjacency is the edge xy itself, else None.

    Closing such a path with the edge xy yields a chordless cycle, which is
    what the exclusion check is after.
    """

    def dfs(path, onpath):
        u = path[-1]
        interior = onpath & ~(1 << u)
        for w in bits(g.adj[u]):
            if w == y:
                # y may touch only x (the closing edge) and the path's end
                if len(path) >= min_edges and not g.adj[y] & interior & ~(1 << x):
                    return path + [y]
                continue
            if onpath >> w & 1:
                continue
            # keep the path induced: w may touch nothing before u
            if g.adj[w] & interior:
                continue
            got = dfs(path + [w], onpath | (1 << w))
            if got is not None:
                return got
        return None

    return dfs([x], 1 << x)
