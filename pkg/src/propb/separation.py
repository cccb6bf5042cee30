"""Permutation separation: predicate, exact probabilities, full enumeration, Monte Carlo.

An ordering separates a simple pair (X, Y) with shared vertex y when all
of X minus y precedes y and y precedes all of Y minus y.  Exact paths use
Fraction throughout; only Monte Carlo summaries may be rendered as floats.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable

from .coloring import Ordering
from .errors import BudgetExceeded, InvalidOrdering, NotSimple
from .hypergraph import Hypergraph, enumerate_simple_pairs


@dataclass(frozen=True)
class SeparationStats:
    """Per-trial separated-pair counts aggregated over random orderings."""

    trials: int
    mean_separated: Fraction
    success_rate: Fraction
    histogram: dict[int, int]


def separates(pi: Ordering, X: Iterable[int], Y: Iterable[int]) -> bool:
    """Whether pi puts all of X\\{y} before the shared vertex y and all of Y\\{y} after."""
    xs, ys = frozenset(X), frozenset(Y)
    meet = xs & ys
    if len(meet) != 1:
        raise NotSimple(f"edges share {len(meet)} vertices, expected exactly 1")
    (y,) = meet
    ry = pi.rank(y)
    return all(pi.rank(u) < ry for u in xs - meet) and all(pi.rank(v) > ry for v in ys - meet)


def _pair_masks(H: Hypergraph) -> list[tuple[int, int, int]]:
    """(mask of X\\y, mask of Y\\y, y) per ordered simple pair."""
    out = []
    for sp in enumerate_simple_pairs(H):
        bit = 1 << sp.meet
        out.append((H.masks[sp.first] ^ bit, H.masks[sp.second] ^ bit, sp.meet))
    return out


def _count_with_prefix(pairs: list[tuple[int, int, int]], seq: Iterable[int], p: int) -> int:
    """Count separated pairs given the visit order, via prefix bitmasks."""
    before = [0] * p
    acc = 0
    for v in seq:
        before[v] = acc
        acc |= 1 << v
    count = 0
    for xo, yo, y in pairs:
        b = before[y]
        if xo & b == xo and yo & b == 0:
            count += 1
    return count


def count_separated(H: Hypergraph, pi: Ordering) -> int:
    """Number of ordered simple pairs of H separated by pi."""
    if len(pi.ranks) != H.p:
        raise InvalidOrdering(f"ordering covers {len(pi.ranks)} vertices, hypergraph has {H.p}")
    return _count_with_prefix(_pair_masks(H), pi.vertex_sequence(), H.p)


def exact_separation_probability(n: int) -> Fraction:
    """Closed form (n-1)!^2 / (2n-1)! for a random permutation separating a simple pair."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Fraction(math.factorial(n - 1) ** 2, math.factorial(2 * n - 1))


def enumerate_separation_probability(
    X: Iterable[int], Y: Iterable[int], max_union: int = 10
) -> Fraction:
    """Separation probability of one simple pair by enumerating all orders of X union Y.

    Only the relative order of X union Y matters, so enumerating its
    (2n-1)! arrangements gives the exact probability over full
    permutations of any larger ground set.
    """
    xs, ys = frozenset(X), frozenset(Y)
    meet = xs & ys
    if len(meet) != 1:
        raise NotSimple(f"edges share {len(meet)} vertices, expected exactly 1")
    union = sorted(xs | ys)
    if len(union) > max_union:
        raise BudgetExceeded(f"|X union Y| = {len(union)} exceeds enumeration budget {max_union}")
    (y,) = meet
    x_others = xs - meet
    y_others = ys - meet
    hits = 0
    for perm in permutations(union):
        pos = {v: i for i, v in enumerate(perm)}
        py = pos[y]
        if all(pos[u] < py for u in x_others) and all(pos[v] > py for v in y_others):
            hits += 1
    return Fraction(hits, math.factorial(len(union)))


def iter_ordering_counts(H: Hypergraph, max_vertices: int = 8):
    """Yield (visit order, separated-pair count) over all p! orderings of V."""
    if H.p > max_vertices:
        raise BudgetExceeded(f"p = {H.p} exceeds full-enumeration budget {max_vertices}")
    pairs = _pair_masks(H)
    for perm in permutations(range(H.p)):
        yield perm, _count_with_prefix(pairs, perm, H.p)


def exhaustive_separation_mean(H: Hypergraph, max_vertices: int = 8) -> Fraction:
    """Exact mean of count_separated over all p! orderings, as a reduced rational."""
    total = 0
    for _, count in iter_ordering_counts(H, max_vertices):
        total += count
    return Fraction(total, math.factorial(H.p))


def orderings_separating_multiple(
    H: Hypergraph, max_vertices: int = 8
) -> list[tuple[tuple[int, ...], int]]:
    """All visit orders separating two or more simple pairs.

    Expected empty exactly on the extremal instances (non-2-colorable with
    m2 equal to the bound); general hypergraphs may well populate it.
    """
    return [(perm, c) for perm, c in iter_ordering_counts(H, max_vertices) if c >= 2]


def monte_carlo_separation(H: Hypergraph, trials: int, seed=0) -> SeparationStats:
    """Sample uniform orderings and record separated-pair counts per trial.

    Trial t draws from its own PRNG stream seeded from (seed, t); identical
    arguments reproduce identical statistics.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    pairs = _pair_masks(H)
    hist: Counter[int] = Counter()
    total = 0
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        seq = list(range(H.p))
        rng.shuffle(seq)
        c = _count_with_prefix(pairs, seq, H.p)
        hist[c] += 1
        total += c
    return SeparationStats(
        trials=trials,
        mean_separated=Fraction(total, trials),
        success_rate=Fraction(hist.get(0, 0), trials),
        histogram=dict(sorted(hist.items())),
    )
