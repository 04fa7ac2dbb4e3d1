"""Verification rules: exact statements checked over generated corpora.

Each rule inspects one corpus item, applies only where its hypothesis
holds, and reports violations with enough context to reproduce them.
Wherever a statement equates two notions, the rule derives both sides
through independent code paths (enumeration vs. search, counting vs.
axioms) rather than trusting one implementation twice.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .graphs import Graph, UsageError, VertexSet, bits, induced_subgraph, serialize
from .stability import (
    _psi_member_bits,
    _stable_table,
    alpha,
    check_chain_growth,
    extends_to_maximum,
    omega_enumerate,
    psi_enumerate,
    psi_member_vwc,
)
from .matching import (
    Matching,
    count_perfect_matchings,
    enumerate_matchings,
    enumerate_maximum_matchings,
    enumerate_perfect_matchings,
    find_alternating_c4,
    find_alternating_cycle,
    has_unique_perfect_matching,
    check_property_p,
    is_uniquely_restricted,
    mu,
    pm_edge_cycle_exclusion,
)
from .classifiers import (
    has_isolated_vertices,
    is_bipartite,
    is_c4_free,
    is_forest,
    is_koenig_egervary,
    is_very_well_covered,
    is_well_covered,
    psi_neighborhoods_are_ke,
)
from .corpus import CorpusItem, CorpusSpec, iter_corpus
from .greedoid import SetSystem, check_accessibility, check_exchange, psi_is_greedoid


@dataclass(frozen=True)
class Violation:
    rule: str
    item: str
    detail: str
    edge_list: str

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "item": self.item,
            "detail": self.detail,
            "edge_list": self.edge_list,
        }


def _violation(rule: str, item: CorpusItem, detail: str) -> Violation:
    return Violation(rule, item.name, detail, serialize(item.graph))


def _unique_pm_of_saturated(g: Graph, m: Matching) -> bool:
    """Definitional uniquely-restricted test: count perfect matchings of the
    subgraph induced by the saturated vertices."""
    sub, _ = induced_subgraph(g, m.saturated())
    return count_perfect_matchings(sub) == 1


# ------------------------------------------------------------------ rules


def _check_th1(item: CorpusItem) -> list[Violation]:
    g = item.graph
    out = []
    for s in psi_enumerate(g, mode="oracle"):
        if extends_to_maximum(g, s) is None:
            out.append(_violation("th1", item, f"{s!r} extends to no maximum stable set"))
    return out


def _check_th2(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_forest(g):
        return []
    if not psi_is_greedoid(g, mode="bruteforce").holds:
        return [_violation("th2", item, "forest whose family fails the axioms")]
    return []


def _check_th3(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_very_well_covered(g):
        return []
    ok, witness = psi_neighborhoods_are_ke(g)
    if not ok:
        return [_violation("th3", item, f"N[{witness!r}] induces a non-Koenig-Egervary graph")]
    return []


def _check_th4(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_koenig_egervary(g):
        return []
    out = []
    omega = omega_enumerate(g)
    for m in enumerate_maximum_matchings(g):
        for s in omega.members:
            crossing = all((s >> u & 1) != (s >> v & 1) for u, v in m.edges)
            if not crossing:
                out.append(
                    _violation("th4", item, f"maximum matching {m!r} not inside the cut of {s:#x}")
                )
    a0, m0 = alpha(g), mu(g)
    bip = is_bipartite(g)
    for u, v in g.edges():
        reduced = Graph(
            g.n,
            tuple(
                row & ~(1 << v) if w == u else row & ~(1 << u) if w == v else row
                for w, row in enumerate(g.adj)
            ),
        )
        alpha_critical = alpha(reduced) > a0
        mu_critical = mu(reduced) < m0
        if alpha_critical and not mu_critical:
            out.append(_violation("th4", item, f"edge ({u},{v}) alpha-critical but not mu-critical"))
        if bip and mu_critical and not alpha_critical:
            out.append(_violation("th4", item, f"bipartite edge ({u},{v}) mu-critical but not alpha-critical"))
    return out


def _check_th7(item: CorpusItem) -> list[Violation]:
    g = item.graph
    f = SetSystem.from_family(psi_enumerate(g, mode="oracle"))
    if check_accessibility(f)[0] and not check_exchange(f)[0]:
        return [_violation("th7", item, "family is accessible but fails exchange")]
    return []


def _check_th8(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_very_well_covered(g):
        return []
    out = []
    brute = psi_is_greedoid(g, mode="bruteforce").holds
    unique = has_unique_perfect_matching(g)[0]
    if brute != unique:
        out.append(
            _violation("th8", item, f"axioms say {brute}, unique-perfect-matching says {unique}")
        )
    fast = psi_is_greedoid(g, mode="fast").holds
    if fast != brute:
        out.append(_violation("th8", item, f"fast verdict {fast} != brute-force verdict {brute}"))
    if unique != (count_perfect_matchings(g) == 1):
        out.append(_violation("th8", item, "unique-matching witness disagrees with enumeration"))
    return out


def _check_th9(item: CorpusItem) -> list[Violation]:
    g = item.graph
    out = []
    for m in enumerate_matchings(g):
        by_cycle = is_uniquely_restricted(g, m)
        by_count = _unique_pm_of_saturated(g, m)
        if by_cycle != by_count:
            out.append(
                _violation("th9", item, f"{m!r}: alternating-cycle route {by_cycle}, enumeration {by_count}")
            )
    return out


def _check_th10iv(item: CorpusItem) -> list[Violation]:
    if item.base is None:
        raise UsageError("th10iv needs a corona corpus")
    whole = psi_is_greedoid(item.graph, mode="bruteforce").holds
    parts = all(psi_is_greedoid(h, mode="bruteforce").holds for h in item.parts)
    if whole != parts:
        return [_violation("th10iv", item, f"corona verdict {whole}, attached-part verdict {parts}")]
    return []


def _check_th11(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if has_isolated_vertices(g):
        return []
    pms = enumerate_perfect_matchings(g)
    rhs = bool(pms) and all(check_property_p(g, m)[0] for m in pms)
    lhs = is_very_well_covered(g)
    if lhs != rhs:
        return [_violation("th11", item, f"very-well-covered {lhs}, perfect-matching property {rhs}")]
    return []


def _check_th22(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_bipartite(g):
        return []
    lhs = psi_is_greedoid(g, mode="bruteforce").holds
    rhs = all(_unique_pm_of_saturated(g, m) for m in enumerate_maximum_matchings(g))
    if lhs != rhs:
        return [_violation("th22", item, f"greedoid {lhs}, all-maximum-matchings-restricted {rhs}")]
    return []


def _check_th88iii(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if has_isolated_vertices(g):
        return []
    lhs = is_very_well_covered(g)
    rhs = is_well_covered(g) and is_koenig_egervary(g)
    if lhs != rhs:
        return [_violation("th88iii", item, f"very-well-covered {lhs}, well-covered+KE {rhs}")]
    return []


def _check_th88iv(item: CorpusItem) -> list[Violation]:
    if item.base is None:
        raise UsageError("th88iv needs a corona corpus")
    g = item.graph
    lhs = is_well_covered(g)
    rhs = all(2 * h.edge_count == h.n * (h.n - 1) for h in item.parts)
    if lhs != rhs:
        return [_violation("th88iv", item, f"well-covered {lhs}, all-parts-complete {rhs}")]
    return []


def _check_lem1(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_very_well_covered(g):
        return []
    out = []
    for m in enumerate_perfect_matchings(g):
        ok, cyc = pm_edge_cycle_exclusion(g, m)
        if not ok:
            out.append(
                _violation("lem1", item, f"matched edge on a chordless cycle {cyc} under {m!r}")
            )
    return out


def _check_lem2(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_very_well_covered(g):
        return []
    out = []
    for m in enumerate_maximum_matchings(g):
        any_cycle = find_alternating_cycle(g, m) is not None
        any_square = find_alternating_c4(g, m) is not None
        if any_cycle != any_square:
            out.append(
                _violation("lem2", item, f"{m!r}: alternating cycle {any_cycle}, chordless square {any_square}")
            )
    return out


def _check_lem3(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_very_well_covered(g):
        return []
    out = []
    stable = _stable_table(g)
    for mask in range(1 << g.n):
        if not stable[mask]:
            continue
        s = VertexSet(g, mask)
        if psi_member_vwc(g, s) != _psi_member_bits(g, mask):
            out.append(_violation("lem3", item, f"counting and oracle membership split on {s!r}"))
    return out


def _check_lem65(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_very_well_covered(g):
        return []
    out = []
    stable = _stable_table(g)
    for bmask in psi_enumerate(g, mode="oracle").members:
        for v in bits(g.full_mask & ~bmask):
            amask = bmask | 1 << v
            if not stable[amask]:
                continue
            grown = check_chain_growth(g, VertexSet(g, bmask), v)
            if grown != _psi_member_bits(g, amask):
                out.append(
                    _violation("lem65", item, f"growth test and oracle split on {bmask:#x}+{v}")
                )
    return out


def _check_equiv7(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not is_very_well_covered(g):
        return []
    mm = enumerate_maximum_matchings(g)
    restricted = [_unique_pm_of_saturated(g, m) for m in mm]
    cycle_free = [find_alternating_cycle(g, m) is None for m in mm]
    square_free = [find_alternating_c4(g, m) is None for m in mm]
    preds = {
        "greedoid": psi_is_greedoid(g, mode="bruteforce").holds,
        "some_restricted": any(restricted),
        "some_cycle_free": any(cycle_free),
        "some_square_free": any(square_free),
        "all_cycle_free": all(cycle_free),
        "all_square_free": all(square_free),
        "all_restricted": all(restricted),
    }
    if len(set(preds.values())) > 1:
        return [_violation("equiv7", item, f"the seven equivalents split: {preds}")]
    return []


def _check_c4free_corollary(item: CorpusItem) -> list[Violation]:
    g = item.graph
    if not (is_very_well_covered(g) and is_c4_free(g)):
        return []
    out = []
    if count_perfect_matchings(g) != 1:
        out.append(_violation("c4free-corollary", item, "no unique perfect matching"))
    if not psi_is_greedoid(g, mode="bruteforce").holds:
        out.append(_violation("c4free-corollary", item, "family is not a greedoid"))
    return out


@dataclass(frozen=True)
class Rule:
    name: str
    describe: str
    needs_corona: bool
    check: Callable[[CorpusItem], list[Violation]]


RULES: dict[str, Rule] = {
    r.name: r
    for r in [
        Rule("th1", "every local maximum stable set extends to a maximum stable set",
             False, _check_th1),
        Rule("th2", "forests produce greedoid families", False, _check_th2),
        Rule("th3", "in very well-covered graphs, closed neighbourhoods of local "
             "maximum stable sets induce Koenig-Egervary graphs", False, _check_th3),
        Rule("th4", "Koenig-Egervary: maximum matchings cross maximum stable sets; "
             "alpha-critical edges are mu-critical", False, _check_th4),
        Rule("th7", "accessibility of the family implies exchange", False, _check_th7),
        Rule("th8", "very well-covered: greedoid iff unique perfect matching",
             False, _check_th8),
        Rule("th9", "uniquely restricted iff alternating-cycle-free, for every matching",
             False, _check_th9),
        Rule("th10iv", "corona family is a greedoid iff every attached family is",
             True, _check_th10iv),
        Rule("th11", "no isolated vertices: very well-covered iff a perfect matching "
             "exists and all of them satisfy the neighbourhood property", False, _check_th11),
        Rule("th22", "bipartite: greedoid iff all maximum matchings uniquely restricted",
             False, _check_th22),
        Rule("th88iii", "very well-covered iff well-covered Koenig-Egervary "
             "(no isolated vertices)", False, _check_th88iii),
        Rule("th88iv", "corona is well-covered iff every attached graph is complete",
             True, _check_th88iv),
        Rule("lem1", "no perfect-matching edge lies on a chordless cycle of length "
             "3 or >= 5 in a very well-covered graph", False, _check_lem1),
        Rule("lem2", "very well-covered: alternating cycle exists iff a chordless "
             "alternating square exists", False, _check_lem2),
        Rule("lem3", "very well-covered membership shortcut |S| = |N(S)| agrees with "
             "the definition", False, _check_lem3),
        Rule("lem65", "one-vertex growth test agrees with the definition", False, _check_lem65),
        Rule("equiv7", "the seven uniquely-restricted equivalents agree", False, _check_equiv7),
        Rule("c4free-corollary", "very well-covered and square-free forces a unique "
             "perfect matching and a greedoid", False, _check_c4free_corollary),
    ]
}


@dataclass(frozen=True)
class RuleReport:
    rule: str
    checked: int
    violations: tuple[Violation, ...]

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "checked": self.checked,
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass(frozen=True)
class VerificationSummary:
    corpus: CorpusSpec
    reports: tuple[RuleReport, ...]

    @property
    def total_violations(self) -> int:
        return sum(len(r.violations) for r in self.reports)

    @property
    def passed(self) -> bool:
        return self.total_violations == 0

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "verification",
            "corpus": self.corpus.to_dict(),
            "rules": [r.to_dict() for r in self.reports],
            "total_violations": self.total_violations,
            "pass": self.passed,
        }


def verify(spec: CorpusSpec, rule_names: list[str], jobs: int = 1) -> VerificationSummary:
    """Run the named rules over the corpus; reports merge in corpus order."""
    for name in rule_names:
        if name not in RULES:
            raise UsageError(f"unknown rule {name!r}")
    items = iter_corpus(spec)
    reports = []
    for name in rule_names:
        rule = RULES[name]
        if rule.needs_corona and spec.source != "coronas":
            raise UsageError(f"rule {name!r} needs a corona corpus")
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                chunks = list(pool.map(rule.check, items))
        else:
            chunks = [rule.check(it) for it in items]
        violations = tuple(v for chunk in chunks for v in chunk)
        reports.append(RuleReport(name, len(items), violations))
    return VerificationSummary(spec, tuple(reports))
