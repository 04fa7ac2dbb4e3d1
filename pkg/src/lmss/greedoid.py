"""Set-system axioms and the greedoid decision for local maximum stable sets.

A greedoid is a non-empty set system satisfying accessibility (every
non-empty member loses some element and stays a member) and exchange
(a member one larger than another donates an element).  Chains bottom out
at singletons, whose predecessor is the empty set; the empty set therefore
counts as an implicit member during the accessibility check.

For very well-covered graphs the family of local maximum stable sets is a
greedoid exactly when the graph has a unique perfect matching, which gives
the fast decision route; the brute-force route checks the axioms on the
enumerated family and works on every graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import Edge, Graph, UsageError, VertexSet, bits, closed_neighborhood_bits
from .matching import (
    AlternatingCycle,
    Matching,
    _first_perfect_matching,
    find_alternating_cycle,
    has_unique_perfect_matching,
    mu,
)
from .stability import (
    StableSetFamily,
    _psi_member_bits,
    omega_enumerate,
    psi_enumerate,
)


@dataclass(frozen=True)
class SetSystem:
    """An explicit family of subsets of {0..ground_size-1}, ascending mask order."""

    ground_size: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not self.members:
            raise UsageError("set systems must be non-empty families")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be distinct and ascending")
        if self.members[-1] >> self.ground_size:
            raise ValueError("member outside the ground set")

    @classmethod
    def from_sets(cls, ground_size: int, sets: Iterable[Iterable[int]]) -> "SetSystem":
        masks = set()
        for s in sets:
            m = 0
            for v in s:
                m |= 1 << v
            masks.add(m)
        return cls(ground_size, tuple(sorted(masks)))

    @classmethod
    def from_family(cls, family: StableSetFamily) -> "SetSystem":
        return cls(family.graph.n, family.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self._member_set()

    def _member_set(self) -> frozenset:
        return frozenset(self.members)


def check_accessibility(f: SetSystem) -> tuple[bool, int | None]:
    """Every non-empty member must contain a one-smaller member.

    The empty set is treated as an implicit member, so singletons are
    always accessible.  Returns the first violating member otherwise.
    """
    have = f._member_set() | {0}
    for x in f.members:
        if x and not any(x ^ (1 << v) in have for v in bits(x)):
            return False, x
    return True, None


def check_exchange(f: SetSystem) -> tuple[bool, tuple[int, int] | None]:
    """For members X, Y with |X| = |Y|+1 some x in X-Y keeps Y+{x} a member."""
    have = f._member_set()
    by_size: dict[int, list[int]] = {}
    for m in f.members:
        by_size.setdefault(m.bit_count(), []).append(m)
    for k, ys in sorted(by_size.items()):
        xs = by_size.get(k + 1, ())
        for x in xs:
            for y in ys:
                if not any(y | (1 << v) in have for v in bits(x & ~y)):
                    return False, (x, y)
    return True, None


def is_greedoid(f: SetSystem) -> bool:
    return check_accessibility(f)[0] and check_exchange(f)[0]


def psi_accessibility_implies_greedoid_check(g: Graph) -> bool:
    """Accessibility of the local-maximum-stable-set family implies exchange.

    Property-test helper: evaluates the implication on g (expected to be
    vacuously or genuinely true on every graph).
    """
    f = SetSystem.from_family(psi_enumerate(g, mode="oracle"))
    if not check_accessibility(f)[0]:
        return True
    return check_exchange(f)[0]


@dataclass(frozen=True)
class AccessibilityChain:
    """Vertex insertion order x1..xk whose prefixes all stay in the family."""

    graph: Graph
    vertices: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("chain repeats a vertex")
        for v in self.vertices:
            if not 0 <= v < self.graph.n:
                raise ValueError(f"vertex {v} outside the graph")

    def prefixes(self) -> Iterator[VertexSet]:
        m = 0
        for v in self.vertices:
            m |= 1 << v
            yield VertexSet(self.graph, m)

    def __len__(self) -> int:
        return len(self.vertices)


def accessibility_chain(g: Graph, s: VertexSet) -> AccessibilityChain | None:
    """A chain from the empty set up to s with every prefix locally maximum.

    Deterministic: the lexicographically least vertex is tried first at
    every step, with backtracking.  None when no chain exists.
    """
    if s.graph != g:
        raise UsageError("vertex set does not belong to this graph")
    if not _psi_member_bits(g, s.bits):
        raise UsageError("accessibility chains start from local maximum stable sets")

    target = s.bits

    def grow(prefix: int, order: list[int]):
        if prefix == target:
            return order
        for v in bits(target & ~prefix):
            nxt = prefix | 1 << v
            if _psi_member_bits(g, nxt):
                got = grow(nxt, order + [v])
                if got is not None:
                    return got
        return None

    got = grow(0, [])
    return AccessibilityChain(g, tuple(got)) if got is not None else None


@dataclass(frozen=True)
class GreedoidVerdict:
    """Decision plus certificate for the local-maximum-stable-set family."""

    holds: bool
    mode: str  # "fast" or "bruteforce"
    unique_matching: Matching | None = None
    inaccessible_member: VertexSet | None = None
    exchange_violation: tuple[VertexSet, VertexSet] | None = None
    alternating_cycle: AlternatingCycle | None = None

    def __bool__(self) -> bool:
        return self.holds


def psi_is_greedoid(g: Graph, mode: str = "auto") -> GreedoidVerdict:
    """Decide whether the family of local maximum stable sets is a greedoid.

    ``bruteforce`` checks both axioms on the enumerated family and works on
    any graph.  ``fast`` applies only to very well-covered graphs and
    decides via the unique-perfect-matching criterion.  ``auto`` picks
    ``fast`` when the graph is very well-covered.  Verdicts always carry a
    certificate: the unique perfect matching, or an alternating cycle, an
    inaccessible member, or an exchange-violating pair.
    """
    from .classifiers import is_very_well_covered

    if mode not in ("auto", "fast", "bruteforce"):
        raise UsageError(f"unknown mode {mode!r}")
    if mode == "fast" and not is_very_well_covered(g):
        raise UsageError("fast mode needs a very well-covered graph")
    if mode == "auto":
        mode = "fast" if is_very_well_covered(g) else "bruteforce"

    if mode == "fast":
        if 2 * mu(g) != g.n:
            return GreedoidVerdict(False, "fast")
        unique, witness = has_unique_perfect_matching(g)
        if unique:
            return GreedoidVerdict(True, "fast", unique_matching=witness)
        pm = _first_perfect_matching(g)
        cyc = find_alternating_cycle(g, pm) if pm is not None else None
        return GreedoidVerdict(False, "fast", alternating_cycle=cyc)

    f = SetSystem.from_family(psi_enumerate(g, mode="oracle"))
    ok, bad = check_accessibility(f)
    if not ok:
        return GreedoidVerdict(False, "bruteforce", inaccessible_member=VertexSet(g, bad))
    ok, pair = check_exchange(f)
    if not ok:
        x, y = pair
        return GreedoidVerdict(
            False, "bruteforce", exchange_violation=(VertexSet(g, x), VertexSet(g, y))
        )
    unique, witness = has_unique_perfect_matching(g)
    return GreedoidVerdict(True, "bruteforce", unique_matching=witness if unique else None)


def matching_from_chains(g: Graph) -> Matching:
    """Rebuild the unique perfect matching of g from an accessibility chain.

    Walks the lexicographically least maximum stable set's chain; at every
    step the new vertex x sees exactly one neighbour y outside the closed
    neighbourhood of the previous prefix, and the pairs xy form the
    matching.  Requires a very well-covered graph whose family is a
    greedoid.
    """
    from .classifiers import is_very_well_covered

    if not is_very_well_covered(g):
        raise UsageError("matching_from_chains needs a very well-covered graph")
    if not psi_is_greedoid(g, mode="fast").holds:
        raise UsageError("matching_from_chains needs a greedoid family")
    omega = omega_enumerate(g)
    s = VertexSet(g, omega.members[0])
    chain = accessibility_chain(g, s)
    if chain is None:
        raise UsageError("no accessibility chain despite the greedoid property")
    edges = []
    prefix = 0
    for x in chain.vertices:
        fresh = g.adj[x] & ~closed_neighborhood_bits(g, prefix)
        if fresh.bit_count() != 1:
            raise UsageError("chain step does not expose exactly one new neighbour")
        y = next(bits(fresh))
        edges.append(Edge.of(x, y))
        prefix |= 1 << x
    return Matching(g, tuple(edges))
