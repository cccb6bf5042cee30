"""Cross-intersecting set-pair families and complete-subhypergraph detection.

From each selected simple pair (X, Y) the family takes A = X\\Y and
B = V\\(X union Y).  For a non-2-colorable hypergraph meeting the
simple-pair bound exactly, the family satisfies Bollobas's two-families
conditions, its sum hits 1, and the forced equality structure identifies
the vertex set of a complete n-graph on 2n-1 vertices.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BudgetExceeded, DegenerateBinomial, EqualityStructureViolated
from .hypergraph import (
    Hypergraph,
    SimplePair,
    covered_vertices,
    enumerate_simple_pairs,
)


@dataclass(frozen=True)
class SetPairFamily:
    """Indexed (A_i, B_i) pairs over ground set 0..ground_size-1."""

    ground_size: int
    members: tuple[tuple[frozenset[int], frozenset[int]], ...]
    provenance: tuple[SimplePair, ...] | None = None


@dataclass(frozen=True)
class BollobasVerdict:
    conditions_ok: bool
    violations: tuple[tuple[str, tuple[int, ...]], ...]
    sum: Fraction
    equality: bool
    common_B: frozenset[int] | None
    ground_U: frozenset[int] | None


def build_M(H: Hypergraph) -> list[SimplePair]:
    """One simple pair per distinct second edge Y, choosing the smallest first edge.

    Ties broken by canonical edge index (lexicographic on sorted vertex
    lists), so the selection is deterministic.
    """
    best: dict[int, SimplePair] = {}
    for sp in enumerate_simple_pairs(H):
        cur = best.get(sp.second)
        if cur is None or sp.first < cur.first:
            best[sp.second] = sp
    return [best[k] for k in sorted(best)]


def bollobas_family(H: Hypergraph, M: list[SimplePair]) -> SetPairFamily:
    """A_s = X\\Y and B_s = V\\(X union Y) for each selected pair s = (X, Y)."""
    ground = frozenset(range(H.p))
    members = []
    for sp in M:
        X = frozenset(H.edges[sp.first])
        Y = frozenset(H.edges[sp.second])
        members.append((X - Y, ground - (X | Y)))
    return SetPairFamily(ground_size=H.p, members=tuple(members), provenance=tuple(M))


def check_conditions(
    F: SetPairFamily,
) -> tuple[bool, list[tuple[str, tuple[int, ...]]]]:
    """Pairwise disjointness (A_i, B_i) and non-containment A_j not within A_i union B_i.

    Returns (ok, violations); each violation names its kind and the
    indices involved, sorted for deterministic reporting.
    """
    violations: list[tuple[str, tuple[int, ...]]] = []
    for i, (a, b) in enumerate(F.members):
        if a & b:
            violations.append(("disjointness", (i,)))
    for i, (ai, bi) in enumerate(F.members):
        blocked = ai | bi
        for j, (aj, _) in enumerate(F.members):
            if i != j and aj <= blocked:
                violations.append(("containment", (i, j)))
    violations.sort()
    return not violations, violations


def bollobas_sum(F: SetPairFamily) -> Fraction:
    """Exact rational sum of 1/C(p-|B_i|, |A_i|) over the family."""
    total = Fraction(0)
    for i, (a, b) in enumerate(F.members):
        n_choose = F.ground_size - len(b)
        if len(a) > n_choose:
            raise DegenerateBinomial(
                f"member {i}: |A| = {len(a)} exceeds p - |B| = {n_choose}"
            )
        total += Fraction(1, math.comb(n_choose, len(a)))
    return total


def detect_equality_structure(F: SetPairFamily) -> tuple[frozenset[int], frozenset[int]]:
    """Extract the structure forced at equality: common B, and A_i = all q-subsets of U.

    Callers must have established the two conditions and sum == 1; if the
    structure is nonetheless absent the conditions check was buggy, since
    the two-families theorem forbids this combination.
    """
    if not F.members:
        raise EqualityStructureViolated("empty family cannot sum to 1")
    b_sets = {b for _, b in F.members}
    if len(b_sets) != 1:
        raise EqualityStructureViolated(f"B sets are not all identical ({len(b_sets)} distinct)")
    (common_b,) = b_sets
    ground_u = frozenset(range(F.ground_size)) - common_b
    sizes = {len(a) for a, _ in F.members}
    if len(sizes) != 1:
        raise EqualityStructureViolated(f"A sets have mixed sizes {sorted(sizes)}")
    (q,) = sizes
    a_sets = {a for a, _ in F.members}
    if len(a_sets) != len(F.members):
        raise EqualityStructureViolated("A sets repeat")
    if any(not a <= ground_u for a in a_sets):
        raise EqualityStructureViolated("some A set leaves the ground minus B")
    if len(a_sets) != math.comb(len(ground_u), q):
        raise EqualityStructureViolated(
            f"{len(a_sets)} A sets but C({len(ground_u)},{q}) = "
            f"{math.comb(len(ground_u), q)} {q}-subsets exist"
        )
    return common_b, ground_u


def evaluate_family(F: SetPairFamily) -> BollobasVerdict:
    """Run conditions, sum, and equality detection into one verdict."""
    ok, violations = check_conditions(F)
    total = bollobas_sum(F)
    if ok:
        assert total <= 1, "two-families sum exceeded 1 despite valid conditions"
    equality = ok and total == 1
    common_b = ground_u = None
    if equality:
        common_b, ground_u = detect_equality_structure(F)
    return BollobasVerdict(
        conditions_ok=ok,
        violations=tuple(violations),
        sum=total,
        equality=equality,
        common_B=common_b,
        ground_U=ground_u,
    )


def second_meet_collisions(H: Hypergraph) -> list[tuple[int, int, tuple[int, ...]]]:
    """Second edges whose simple pairs reuse a meet vertex.

    Each entry is (second edge index, meet vertex, first edge indices).
    Guaranteed empty for non-2-colorable hypergraphs meeting the
    simple-pair bound exactly; general hypergraphs (even non-colorable
    ones, e.g. the 7-point plane) may collide.
    """
    groups: dict[tuple[int, int], list[int]] = {}
    for sp in enumerate_simple_pairs(H):
        groups.setdefault((sp.second, sp.meet), []).append(sp.first)
    out = [
        (second, meet, tuple(firsts))
        for (second, meet), firsts in sorted(groups.items())
        if len(firsts) >= 2
    ]
    return out


def _clique_via_equality(H: Hypergraph, need: int) -> frozenset[int] | None:
    """Derive the clique vertex set from the equality structure, verified."""
    try:
        F = bollobas_family(H, build_M(H))
        verdict = evaluate_family(F)
    except (DegenerateBinomial, EqualityStructureViolated):
        return None
    if not verdict.equality or verdict.ground_U is None:
        return None
    u = verdict.ground_U
    if len(u) != 2 * H.n - 1:
        return None
    edge_set = set(H.masks)
    um_edges = sum(
        1 for sub in combinations(sorted(u), H.n) if _mask(sub) in edge_set
    )
    return u if um_edges == need else None


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def find_clique(H: Hypergraph, subset_budget: int = 10_000_000) -> frozenset[int] | None:
    """Canonically smallest (2n-1)-set whose n-subsets are all edges, or None.

    Brute force scans candidate subsets in lexicographic order; candidates
    are covered vertices lying in at least C(2n-2, n-1) edges, a necessary
    degree for clique membership.  Above subset_budget candidate subsets
    the equality-structure shortcut is tried, else BudgetExceeded.
    """
    k = 2 * H.n - 1
    need = math.comb(k, H.n)
    if len(H.edges) < need:
        return None
    min_degree = math.comb(2 * H.n - 2, H.n - 1)
    degree = Counter(v for e in H.edges for v in e)
    candidates = sorted(v for v in covered_vertices(H) if degree[v] >= min_degree)
    if len(candidates) < k:
        return None
    if math.comb(len(candidates), k) > subset_budget:
        u = _clique_via_equality(H, need)
        if u is not None:
            return u
        raise BudgetExceeded(
            f"C({len(candidates)},{k}) candidate subsets exceed budget {subset_budget} "
            "and the equality shortcut does not apply"
        )
    edge_set = set(H.masks)
    for combo in combinations(candidates, k):
        um = _mask(combo)
        inside = sum(1 for em in H.masks if em & um == em)
        if inside == need:
            return frozenset(combo)
    return None
