"""Stable sets, the stability number, and local maximum stable sets.

A set S is a *local maximum stable set* when S is a maximum stable set of
the subgraph induced by its closed neighbourhood N[S].  The family of all
such sets (written ``psi`` here) always contains the empty set.

Two routes compute membership: the definitional oracle (stability number
of the induced neighbourhood subgraph) and, for very well-covered graphs
only, the counting shortcut |S| = |N(S)|.  They must agree wherever the
shortcut applies; the test suite enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graphs import (
    Graph,
    UsageError,
    VertexSet,
    bits,
    closed_neighborhood_bits,
    neighborhood_bits,
    require_member,
)


@lru_cache(maxsize=1024)
def _alpha_table(g: Graph) -> tuple[int, ...]:
    """alpha of the induced subgraph on every vertex mask, by subset DP.

    For the lowest vertex v of a mask: either v stays out (drop v) or v
    goes in (drop its closed neighbourhood).
    """
    closed = tuple(g.adj[v] | (1 << v) for v in range(g.n))
    table = [0] * (1 << g.n)
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        without = table[mask ^ low]
        with_v = 1 + table[mask & ~closed[v]]
        table[mask] = with_v if with_v > without else without
    return tuple(table)


@lru_cache(maxsize=1024)
def _stable_table(g: Graph) -> bytes:
    """stable[mask] flag for every vertex mask (1 byte each)."""
    table = bytearray(1 << g.n)
    table[0] = 1
    for mask in range(1, 1 << g.n):
        low = mask & -mask
        v = low.bit_length() - 1
        table[mask] = table[mask ^ low] and not g.adj[v] & mask
    return bytes(table)


def is_stable(g: Graph, s: VertexSet) -> bool:
    """True when no edge of g has both endpoints in s."""
    mask = require_member(g, s)
    return is_stable_bits(g, mask)


def is_stable_bits(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if g.adj[v] & mask:
            return False
    return True


def alpha(g: Graph) -> int:
    """Stability number: maximum cardinality of a stable set (0 for the empty graph)."""
    return _alpha_table(g)[g.full_mask]


@dataclass(frozen=True)
class StableSetFamily:
    """A family of stable sets of one graph, in ascending bitmask order."""

    graph: Graph
    members: tuple[int, ...]

    def __post_init__(self):
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("family members must be distinct and ascending")

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[VertexSet]:
        return (VertexSet(self.graph, m) for m in self.members)

    def __contains__(self, s: VertexSet | int) -> bool:
        mask = s.bits if isinstance(s, VertexSet) else s
        return mask in set(self.members)

    def sets(self) -> tuple[VertexSet, ...]:
        return tuple(self)


def omega_enumerate(g: Graph) -> StableSetFamily:
    """All maximum stable sets of g."""
    a = alpha(g)
    stable = _stable_table(g)
    members = tuple(
        m for m in range(1 << g.n) if m.bit_count() == a and stable[m]
    )
    return StableSetFamily(g, members)


def psi_member_oracle(g: Graph, s: VertexSet) -> bool:
    """Definitional membership test: s is a maximum stable set of g[N[s]]."""
    return _psi_member_bits(g, require_member(g, s))


def _psi_member_bits(g: Graph, mask: int) -> bool:
    if not is_stable_bits(g, mask):
        return False
    return mask.bit_count() == _alpha_table(g)[closed_neighborhood_bits(g, mask)]


def psi_member_vwc(g: Graph, s: VertexSet) -> bool:
    """Fast membership for very well-covered graphs: |S| = |N(S)|.

    Raises when s is not stable; very-well-coveredness of g is the
    caller's responsibility and is only asserted in debug runs.
    """
    mask = require_member(g, s)
    if not is_stable_bits(g, mask):
        raise UsageError("psi_member_vwc needs a stable set")
    if __debug__:
        from .classifiers import is_very_well_covered

        if not is_very_well_covered(g):
            raise UsageError("psi_member_vwc needs a very well-covered graph")
    return mask.bit_count() == neighborhood_bits(g, mask).bit_count()


def psi_enumerate(g: Graph, mode: str = "auto") -> StableSetFamily:
    """The family of all local maximum stable sets, empty set included.

    ``mode="oracle"`` always evaluates the definition; ``mode="auto"``
    switches to the |S| = |N(S)| test when the graph is very well-covered.
    Both return identical families.
    """
    if mode not in ("oracle", "auto"):
        raise UsageError(f"unknown mode {mode!r}")
    stable = _stable_table(g)
    fast = False
    if mode == "auto":
        from .classifiers import is_very_well_covered

        fast = is_very_well_covered(g)
    members = []
    if fast:
        for mask in range(1 << g.n):
            if stable[mask] and mask.bit_count() == neighborhood_bits(g, mask).bit_count():
                members.append(mask)
    else:
        table = _alpha_table(g)
        for mask in range(1 << g.n):
            if stable[mask] and mask.bit_count() == table[closed_neighborhood_bits(g, mask)]:
                members.append(mask)
    return StableSetFamily(g, tuple(members))


def extends_to_maximum(g: Graph, s: VertexSet) -> VertexSet | None:
    """Some maximum stable set containing s (first in ascending mask order).

    Only local maximum stable sets are accepted; for those an extension
    always exists.
    """
    mask = require_member(g, s)
    if not _psi_member_bits(g, mask):
        raise UsageError("extends_to_maximum needs a local maximum stable set")
    a = alpha(g)
    stable = _stable_table(g)
    for m in range(1 << g.n):
        if stable[m] and m.bit_count() == a and mask & ~m == 0:
            return VertexSet(g, m)
    return None


def check_chain_growth(g: Graph, b: VertexSet, v: int | str) -> bool:
    """One-vertex growth test for chains in a very well-covered graph.

    With b a local maximum stable set and a = b + {v} stable, a is again a
    local maximum stable set exactly when |N(a)| = |N(b)| + 1.
    """
    bmask = require_member(g, b)
    vi = g.vertex(v)
    if bmask >> vi & 1:
        raise UsageError("vertex already in the base set")
    amask = bmask | 1 << vi
    if not is_stable_bits(g, amask):
        raise UsageError("extended set is not stable")
    if not _psi_member_bits(g, bmask):
        raise UsageError("base set is not a local maximum stable set")
    if __debug__:
        from .classifiers import is_very_well_covered

        if not is_very_well_covered(g):
            raise UsageError("check_chain_growth needs a very well-covered graph")
    return (
        neighborhood_bits(g, amask).bit_count()
        == neighborhood_bits(g, bmask).bit_count() + 1
    )
