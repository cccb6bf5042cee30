"""Small-case verification of the simple-pair bound and the extremal structure.

For n = 2 every labeled graph on up to max_p vertices is enumerated as a
bitmask over the C(p, 2) edge slots of the complete graph.  Degree counts,
simple-pair counts and triangle containment are evaluated vectorized over
whole chunks of masks; graphs not already proven non-bipartite by a
triangle get an exact BFS 2-coloring.  Every non-bipartite graph is then
checked against the bound (m2 >= 6) and the equality characterization
(m2 = 6 forces a triangle).  For n >= 3 exhaustive enumeration is out of
reach, so the run degrades to seeded rejection sampling plus the curated
fixture suite.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Collection

import numpy as np

from .coloring import Colorability, exhaustive_decide
from .errors import BudgetExceeded, CounterexampleFound, FixtureFailure
from .hypergraph import (
    Hypergraph,
    bound,
    complete_hypergraph,
    enumerate_simple_pairs,
    fano_plane,
    m2,
    pad,
    random_hypergraph,
    seymour_check,
)
from .separation import orderings_separating_multiple
from .setpairs import (
    bollobas_family,
    build_M,
    evaluate_family,
    find_clique,
    second_meet_collisions,
)

GRAPH_BUDGET_DEFAULT = 1 << 22
SAMPLE_BUDGET_DEFAULT = 200


@dataclass(frozen=True)
class SearchRecord:
    n: int
    p: int
    edge_count: int
    m2: int
    meets_bound: bool
    has_clique: bool
    canonical_form: str


def canonical_form(H: Hypergraph, max_factorial: int = 10_000) -> str:
    """Lexicographically minimal edge-list encoding over all vertex relabelings.

    The relabeling search runs only while p! <= max_factorial (p <= 7 by
    default); larger inputs fall back to the normalized edge list, which
    is canonical under labeling but not under isomorphism.
    """
    if math.factorial(H.p) <= max_factorial:
        edges = _canonical_edges(H.p, H.edges)
    else:
        edges = H.edges
    return _encode_edges(edges)


@lru_cache(maxsize=4096)
def _canonical_edges(p: int, edges: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    best = None
    for perm in permutations(range(p)):
        cand = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in edges))
        if best is None or cand < best:
            best = cand
    return best


def _encode_edges(edges) -> str:
    return ";".join(",".join(map(str, e)) for e in edges)


def is_bipartite(H: Hypergraph) -> bool:
    """BFS 2-coloring for graphs (n = 2); equivalent to two-colorability there."""
    if H.n != 2:
        raise ValueError("bipartiteness check applies to 2-graphs only")
    adj = [0] * H.p
    for u, v in H.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return _mask_bipartite(adj, H.p)


def _mask_bipartite(adj: list[int], p: int) -> bool:
    seen = 0
    color = 0
    for s in range(p):
        if not adj[s] or seen >> s & 1:
            continue
        seen |= 1 << s
        stack = [s]
        while stack:
            x = stack.pop()
            cx = color >> x & 1
            nb = adj[x]
            while nb:
                y = (nb & -nb).bit_length() - 1
                nb &= nb - 1
                if seen >> y & 1:
                    if (color >> y & 1) == cx:
                        return False
                else:
                    seen |= 1 << y
                    color |= (cx ^ 1) << y
                    stack.append(y)
    return True


# ---------------------------------------------------------------------------
# vectorized labeled-graph scan (n = 2)
# ---------------------------------------------------------------------------

_PC16 = None


def _popcount(a: np.ndarray) -> np.ndarray:
    global _PC16
    if _PC16 is None:
        _PC16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.int8)
    return (_PC16[a & 0xFFFF] + _PC16[(a >> 16) & 0xFFFF]).astype(np.int64)


@lru_cache(maxsize=16)
def _edge_slots(p: int) -> tuple[tuple[tuple[int, int], ...], tuple[int, ...]]:
    """Edge slots of K_p in lexicographic order and per-vertex incidence masks."""
    E = tuple(combinations(range(p), 2))
    inc = [0] * p
    for i, (u, v) in enumerate(E):
        inc[u] |= 1 << i
        inc[v] |= 1 << i
    return E, tuple(inc)


@lru_cache(maxsize=16)
def _triangle_slot_masks(p: int) -> tuple[int, ...]:
    E, _ = _edge_slots(p)
    slot = {e: i for i, e in enumerate(E)}
    masks = []
    for a, b, c in combinations(range(p), 3):
        masks.append((1 << slot[(a, b)]) | (1 << slot[(a, c)]) | (1 << slot[(b, c)]))
    return tuple(masks)


def _scan_graph_chunk(args: tuple[int, int, int]) -> dict:
    """Verify one contiguous mask range [lo, hi) of labeled graphs on p vertices.

    Returns chunk-level reductions only, so results merge deterministically
    regardless of which process handled which chunk.
    """
    p, lo, hi = args
    E, inc = _edge_slots(p)
    G = np.arange(lo, hi, dtype=np.int64)

    m2_arr = np.zeros(len(G), dtype=np.int64)
    covered = np.zeros(len(G), dtype=np.int64)
    pair_table = np.array([d * (d - 1) // 2 for d in range(p + 1)], dtype=np.int64)
    for v in range(p):
        dv = _popcount(G & inc[v])
        m2_arr += pair_table[dv]
        covered += dv > 0
    m2_arr *= 2
    edge_count = _popcount(G)

    tri_any = np.zeros(len(G), dtype=bool)
    for tm in _triangle_slot_masks(p):
        tri_any |= (G & tm) == tm

    # triangle implies an odd cycle; the rest get an exact BFS 2-coloring
    nonbip = tri_any.copy()
    for i in np.flatnonzero(~tri_any).tolist():
        mask = int(G[i])
        adj = [0] * p
        for s in range(len(E)):
            if mask >> s & 1:
                u, v = E[s]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        if not _mask_bipartite(adj, p):
            nonbip[i] = True

    prop_violation = nonbip & (m2_arr < 6)
    thm_violation = nonbip & (m2_arr == 6) & ~tri_any
    equality = nonbip & (m2_arr == 6)
    seymour_bad = nonbip & (edge_count < covered)

    profiles = Counter(
        zip(m2_arr.tolist(), nonbip.tolist(), tri_any.tolist())
    )
    return {
        "graphs": len(G),
        "non_colorable": int(nonbip.sum()),
        "min_m2_non_colorable": int(m2_arr[nonbip].min()) if nonbip.any() else None,
        "equality_masks": G[equality].tolist(),
        "counterexample_masks": G[prop_violation | thm_violation].tolist(),
        "seymour_violations": int(seymour_bad.sum()),
        "profiles": profiles,
    }


def _graph_from_mask(p: int, mask: int) -> Hypergraph:
    E, _ = _edge_slots(p)
    return Hypergraph(n=2, p=p, edges=tuple(E[i] for i in range(len(E)) if mask >> i & 1))


@lru_cache(maxsize=8)
def _slot_permutations(p: int) -> tuple[tuple[int, ...], ...]:
    """For each vertex permutation, where each edge slot of K_p lands."""
    E, _ = _edge_slots(p)
    slot = {e: i for i, e in enumerate(E)}
    out = []
    for perm in permutations(range(p)):
        out.append(tuple(slot[tuple(sorted((perm[u], perm[v])))] for u, v in E))
    return tuple(out)


def _isomorphism_classes(p: int, masks: Collection[int]) -> list[tuple[int, list[int]]]:
    """Group graph masks into isomorphism classes; one orbit scan per class.

    Returns (canonical mask, labeled members) pairs sorted by the
    canonical edge encoding.
    """
    E, _ = _edge_slots(p)
    remaining = set(masks)
    classes = []
    while remaining:
        rep = min(remaining)
        orbit = set()
        best_edges = None
        best_mask = None
        for sp in _slot_permutations(p):
            nm = 0
            m = rep
            while m:
                low = m & -m
                nm |= 1 << sp[low.bit_length() - 1]
                m ^= low
            if nm not in orbit:
                orbit.add(nm)
                edges = tuple(E[i] for i in range(len(E)) if nm >> i & 1)
                if best_edges is None or edges < best_edges:
                    best_edges, best_mask = edges, nm
        members = sorted(remaining & orbit)
        remaining -= orbit
        classes.append((best_mask, members))
    classes.sort(key=lambda cm: _encode_edges(_graph_from_mask(p, cm[0]).edges))
    return classes


def verify_bound_exhaustive(
    n: int,
    max_p: int,
    budget: int | None = None,
    seed=0,
    workers: int = 1,
    skip_p: Collection[int] = (),
    on_record: Callable[[SearchRecord], None] | None = None,
    on_p_done: Callable[[dict], None] | None = None,
) -> tuple[list[SearchRecord], dict]:
    """Check the simple-pair bound and equality characterization at desk scale.

    n = 2: full enumeration of all labeled graphs on p <= max_p vertices
    (max_p <= 7).  Every non-bipartite graph must have m2 >= 6 and, at
    m2 = 6, contain a triangle; a violation raises CounterexampleFound.
    One record per isomorphism class of equality cases is emitted.

    n >= 3: seeded rejection sampling (budget = sample count, p <= min(max_p, 8));
    every sampled non-colorable instance must satisfy m2 >= bound(n), and
    equality cases must contain the complete n-graph on 2n-1 vertices.

    The summary counts instances failing |E| >= |covered V|; that check is
    only a theorem for edge-minimal instances, so nonzero counts are
    expected (e.g. a triangle plus a disjoint edge) and do not abort.
    """
    if n == 2:
        return _verify_graphs(max_p, budget, workers, skip_p, on_record, on_p_done)
    if n >= 3:
        return _verify_sampled(n, max_p, budget, seed, on_record)
    raise ValueError(f"n must be >= 2, got {n}")


def _verify_graphs(max_p, budget, workers, skip_p, on_record, on_p_done):
    if max_p > 7:
        raise BudgetExceeded("full graph enumeration supports max_p <= 7")
    budget = GRAPH_BUDGET_DEFAULT if budget is None else budget
    ps = [p for p in range(1, max_p + 1) if p not in set(skip_p)]
    total_graphs = sum(1 << math.comb(p, 2) for p in ps)
    if total_graphs > budget:
        raise BudgetExceeded(f"{total_graphs} graphs exceed budget {budget}")

    records: list[SearchRecord] = []
    summary = {
        "mode": "enumeration",
        "n": 2,
        "max_p": max_p,
        "graphs": 0,
        "non_colorable": 0,
        "equality_labeled": 0,
        "equality_classes": 0,
        "counterexamples": 0,
        "seymour_violations": 0,
        "per_p": [],
    }
    for p in ps:
        total = 1 << math.comb(p, 2)
        chunk = 1 << 18
        args = [(p, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        if workers > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_scan_graph_chunk, args))
        else:
            results = [_scan_graph_chunk(a) for a in args]

        eq_masks: list[int] = []
        cex_masks: list[int] = []
        nonbip = 0
        seymour_bad = 0
        min_m2 = None
        for r in results:
            nonbip += r["non_colorable"]
            seymour_bad += r["seymour_violations"]
            eq_masks.extend(r["equality_masks"])
            cex_masks.extend(r["counterexample_masks"])
            if r["min_m2_non_colorable"] is not None:
                if min_m2 is None or r["min_m2_non_colorable"] < min_m2:
                    min_m2 = r["min_m2_non_colorable"]

        if cex_masks:
            H = _graph_from_mask(p, cex_masks[0])
            rec = SearchRecord(
                n=2, p=p, edge_count=len(H.edges), m2=m2(H),
                meets_bound=m2(H) == 6, has_clique=find_clique(H) is not None,
                canonical_form=canonical_form(H),
            )
            raise CounterexampleFound(
                f"graph on {p} vertices violates the bound or the equality "
                f"characterization: {rec.canonical_form}",
                record=rec,
            )

        p_records = []
        for canon_mask, members in _isomorphism_classes(p, eq_masks):
            H = _graph_from_mask(p, canon_mask)
            rec = SearchRecord(
                n=2, p=p, edge_count=len(H.edges), m2=6, meets_bound=True,
                has_clique=find_clique(H) is not None,
                canonical_form=_encode_edges(H.edges),
            )
            assert rec.has_clique, "equality case without a triangle must have aborted"
            p_records.append((rec, len(members)))

        p_summary = {
            "p": p,
            "graphs": total,
            "non_colorable": nonbip,
            "min_m2_non_colorable": min_m2,
            "equality_labeled": len(eq_masks),
            "equality_classes": len(p_records),
            "counterexamples": 0,
            "seymour_violations": seymour_bad,
        }
        for rec, _count in p_records:
            records.append(rec)
            if on_record:
                on_record(rec)
        if on_p_done:
            on_p_done(p_summary)
        summary["per_p"].append(p_summary)
        summary["graphs"] += total
        summary["non_colorable"] += nonbip
        summary["equality_labeled"] += len(eq_masks)
        summary["equality_classes"] += len(p_records)
        summary["seymour_violations"] += seymour_bad
    return records, summary


def _verify_sampled(n, max_p, budget, seed, on_record):
    samples = SAMPLE_BUDGET_DEFAULT if budget is None else budget
    p_hi = min(max_p, 8)
    p_lo = 2 * n - 1
    if p_hi < p_lo:
        raise BudgetExceeded(f"max_p = {max_p} below the {p_lo} vertices a non-colorable {n}-graph needs")
    rng = random.Random(f"sampling:{seed}")
    records: list[SearchRecord] = []
    summary = {
        "mode": "sampling",
        "n": n,
        "max_p": p_hi,
        "samples": samples,
        "non_colorable": 0,
        "undetermined": 0,
        "equality_cases": 0,
        "counterexamples": 0,
        "seymour_violations": 0,
    }
    b = bound(n)
    for s in range(samples):
        p = rng.randint(p_lo, p_hi)
        total_edges = math.comb(p, n)
        # dense draws: sparse n-graphs at this scale are almost always colorable
        m_edges = rng.randint(max(1, 3 * total_edges // 5), total_edges)
        H = random_hypergraph(n, p, m_edges, seed=f"{seed}:{s}")
        verdict, _ = exhaustive_decide(H)
        if verdict is Colorability.UNDETERMINED:
            summary["undetermined"] += 1
            continue
        if verdict is Colorability.YES:
            continue
        m2_val = m2(H)
        meets = m2_val == b
        clique = find_clique(H)
        rec = SearchRecord(
            n=n, p=p, edge_count=len(H.edges), m2=m2_val, meets_bound=meets,
            has_clique=clique is not None, canonical_form=canonical_form(H),
        )
        if m2_val < b or (meets and clique is None):
            raise CounterexampleFound(
                f"sampled non-colorable {n}-graph violates the bound or the "
                f"equality characterization: {rec.canonical_form}",
                record=rec,
            )
        summary["non_colorable"] += 1
        summary["equality_cases"] += meets
        summary["seymour_violations"] += not seymour_check(H)
        records.append(rec)
        if on_record:
            on_record(rec)
    return records, summary


def enumeration_profiles(p: int) -> Counter:
    """Fast-path profile census over all labeled graphs on p vertices.

    Profiles are (m2, non-colorable, has complete subgraph on 3 vertices);
    used as one side of the oracle-equivalence check against
    :func:`reference_profiles`.
    """
    total = 1 << math.comb(p, 2)
    out: Counter = Counter()
    chunk = 1 << 18
    for lo in range(0, total, chunk):
        r = _scan_graph_chunk((p, lo, min(lo + chunk, total)))
        out.update(r["profiles"])
    return out


def reference_profiles(p: int) -> Counter:
    """Slow no-shortcut census: object path, exponential decider, subset clique search."""
    if p > 5:
        raise BudgetExceeded("reference enumeration is budgeted at p <= 5")
    E = list(combinations(range(p), 2))
    out: Counter = Counter()
    for mask in range(1 << len(E)):
        H = Hypergraph(n=2, p=p, edges=tuple(E[i] for i in range(len(E)) if mask >> i & 1))
        verdict, _ = exhaustive_decide(H)
        profile = (m2(H), verdict is Colorability.NO, find_clique(H) is not None)
        out[profile] += 1
    return out


# ---------------------------------------------------------------------------
# curated fixture suite
# ---------------------------------------------------------------------------

_RANDOM_FIXTURE_SHAPE = {2: (6, 8), 3: (7, 25), 4: (8, 60)}


def _random_noncolorable(n: int, seed, attempts: int = 1000) -> Hypergraph:
    p, m_edges = _RANDOM_FIXTURE_SHAPE[n]
    for a in range(attempts):
        H = random_hypergraph(n, p, m_edges, seed=f"{seed}:{a}")
        verdict, _ = exhaustive_decide(H)
        if verdict is Colorability.NO:
            return H
    raise FixtureFailure(
        f"no non-2-colorable {n}-graph found in {attempts} rejection samples"
    )


def verify_fixture_suite(n: int, seed=0) -> dict:
    """Full pipeline on curated non-colorable fixtures for one uniformity.

    Asserts the simple-pair bound on every fixture and, on each fixture
    meeting it exactly, the whole extremal chain: distinct meet vertices
    per second edge, at most one separated pair per ordering (p <= 8),
    both set-pair conditions, sum exactly 1, the equality structure, and
    clique recovery.  Raises FixtureFailure naming fixture and assertion.
    """
    if n not in (2, 3, 4):
        raise ValueError("fixture suite covers n in {2, 3, 4}")
    K = complete_hypergraph(n)
    clique_verts = frozenset(range(2 * n - 1))
    fixtures: list[tuple[str, Hypergraph, frozenset | None]] = [
        ("complete", K, clique_verts),
        ("padded", pad(K, n, 1), clique_verts),
        ("padded_isolated", pad(K, n + 2, 1), clique_verts),
    ]
    if n == 3:
        fixtures.append(("fano", fano_plane(), None))
    fixtures.append(("random_noncolorable", _random_noncolorable(n, seed), None))

    b = bound(n)
    entries = []
    for name, H, expect_clique in fixtures:
        verdict, _ = exhaustive_decide(H)
        if verdict is not Colorability.NO:
            raise FixtureFailure(f"{name}: expected non-2-colorable, decider said {verdict.value}")
        m2_val = m2(H)
        if m2_val < b:
            raise FixtureFailure(f"{name}: m2 = {m2_val} below bound {b}")
        entry = {
            "name": name,
            "p": H.p,
            "edge_count": len(H.edges),
            "m2": m2_val,
            "bound": b,
            "meets_bound": m2_val == b,
            "seymour_ok": seymour_check(H),
            "clique": None,
            "bollobas_sum": None,
        }
        if m2_val == b:
            if second_meet_collisions(H):
                raise FixtureFailure(f"{name}: repeated meet vertex for one second edge")
            per_second = Counter(sp.second for sp in enumerate_simple_pairs(H))
            if any(c > n for c in per_second.values()):
                raise FixtureFailure(f"{name}: an edge is second in more than n simple pairs")
            M = build_M(H)
            if len(M) < math.comb(2 * n - 1, n):
                raise FixtureFailure(f"{name}: selection smaller than C(2n-1, n)")
            v = evaluate_family(bollobas_family(H, M))
            if not v.conditions_ok:
                raise FixtureFailure(f"{name}: set-pair conditions violated: {v.violations[:3]}")
            if v.sum != 1:
                raise FixtureFailure(f"{name}: set-pair sum {v.sum} != 1")
            if not v.equality or v.ground_U is None:
                raise FixtureFailure(f"{name}: equality structure not detected")
            clique = find_clique(H)
            if clique != v.ground_U:
                raise FixtureFailure(f"{name}: clique {clique} != ground minus common B {v.ground_U}")
            if expect_clique is not None and clique != expect_clique:
                raise FixtureFailure(f"{name}: clique {clique} != expected {expect_clique}")
            if H.p <= 8 and orderings_separating_multiple(H):
                raise FixtureFailure(f"{name}: some ordering separates two simple pairs")
            entry["clique"] = sorted(clique)
            entry["bollobas_sum"] = v.sum
        entries.append(entry)
    return {"n": n, "bound": b, "fixtures": entries, "ok": True}
