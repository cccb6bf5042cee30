"""Order-driven greedy two-coloring and exact two-colorability decision.

The greedy rule scans vertices in a given order and colors each Blue
unless that would complete an all-Blue edge, in which case it colors
Red.  By construction the output never contains an all-Blue edge, so a
failed run always exposes an all-Red edge, and from it a separated
simple pair can be read off.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import IncompleteColoring, InvalidOrdering
from .hypergraph import Hypergraph, SimplePair, covered_vertices


class Color(str, Enum):
    BLUE = "Blue"
    RED = "Red"


class Colorability(str, Enum):
    YES = "yes"
    NO = "no"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Ordering:
    """Bijection from vertex ids to ranks 1..p; ranks[v] is v's rank."""

    ranks: tuple[int, ...]

    def __post_init__(self):
        p = len(self.ranks)
        if sorted(self.ranks) != list(range(1, p + 1)):
            raise InvalidOrdering(f"ranks {self.ranks} are not a bijection onto 1..{p}")

    @classmethod
    def from_vertex_sequence(cls, seq) -> "Ordering":
        """Build from the visit order (first element gets rank 1)."""
        seq = list(seq)
        if sorted(seq) != list(range(len(seq))):
            raise InvalidOrdering(f"sequence {seq} is not a permutation of 0..{len(seq) - 1}")
        ranks = [0] * len(seq)
        for i, v in enumerate(seq):
            ranks[v] = i + 1
        return cls(tuple(ranks))

    @classmethod
    def identity(cls, p: int) -> "Ordering":
        return cls(tuple(range(1, p + 1)))

    @classmethod
    def random(cls, p: int, rng: random.Random) -> "Ordering":
        seq = list(range(p))
        rng.shuffle(seq)
        return cls.from_vertex_sequence(seq)

    def rank(self, v: int) -> int:
        return self.ranks[v]

    def vertex_sequence(self) -> tuple[int, ...]:
        """Vertices sorted by rank (the visit order)."""
        return tuple(sorted(range(len(self.ranks)), key=self.ranks.__getitem__))


@dataclass(frozen=True)
class Coloring:
    colors: tuple[Color, ...]
    proper: bool
    violating_edge: int | None


@dataclass(frozen=True)
class ColoringOutcome:
    """Greedy run result; on failure carries the separated simple pair."""

    coloring: Coloring
    separated_witness: SimplePair | None


def is_proper(H: Hypergraph, colors) -> int | None:
    """Index of the first monochromatic edge in canonical order, or None."""
    colors = tuple(colors)
    if len(colors) != H.p or any(c is None for c in colors):
        raise IncompleteColoring(f"coloring must assign all {H.p} vertices")
    for ei, e in enumerate(H.edges):
        first = colors[e[0]]
        if all(colors[v] == first for v in e[1:]):
            return ei
    return None


def greedy_color(H: Hypergraph, pi: Ordering) -> ColoringOutcome:
    """Sequential coloring in rank order: Blue unless that completes an all-Blue edge.

    If the result is improper, the violating edge Y is all-Red; taking its
    rank-minimal vertex y and the canonically first edge X containing y
    whose other vertices are Blue and precede y gives a simple pair (X, Y)
    separated by pi.  For n = 1 no simple pair exists, so improper runs
    carry no witness.
    """
    if len(pi.ranks) != H.p:
        raise InvalidOrdering(f"ordering covers {len(pi.ranks)} vertices, hypergraph has {H.p}")
    n = H.n
    vert_edges: list[list[int]] = [[] for _ in range(H.p)]
    for ei, e in enumerate(H.edges):
        for v in e:
            vert_edges[v].append(ei)

    blue_cnt = [0] * len(H.edges)
    colored_cnt = [0] * len(H.edges)
    colors: list[Color] = [Color.BLUE] * H.p
    for v in pi.vertex_sequence():
        forced = any(
            blue_cnt[ei] == n - 1 and colored_cnt[ei] == n - 1 for ei in vert_edges[v]
        )
        c = Color.RED if forced else Color.BLUE
        colors[v] = c
        for ei in vert_edges[v]:
            colored_cnt[ei] += 1
            if c is Color.BLUE:
                blue_cnt[ei] += 1

    violating = None
    for ei in range(len(H.edges)):
        if blue_cnt[ei] == 0 or blue_cnt[ei] == n:
            violating = ei
            break
    coloring = Coloring(colors=tuple(colors), proper=violating is None, violating_edge=violating)

    witness = None
    if violating is not None:
        assert blue_cnt[violating] == 0, "greedy rule never completes an all-Blue edge"
        if n >= 2:
            y = min(H.edges[violating], key=pi.rank)
            ry = pi.rank(y)
            for ei in vert_edges[y]:
                others = [u for u in H.edges[ei] if u != y]
                if all(colors[u] is Color.BLUE and pi.rank(u) < ry for u in others):
                    witness = SimplePair(first=ei, second=violating, meet=y)
                    break
            assert witness is not None, "a Red vertex always has a completing edge"
    return ColoringOutcome(coloring=coloring, separated_witness=witness)


def exhaustive_decide(
    H: Hypergraph, vertex_budget: int = 24
) -> tuple[Colorability, Coloring | None]:
    """Exact two-colorability by iterating all colorings of covered vertices.

    The first covered vertex is fixed Blue (color-swap symmetry), leaving
    2^(c-1) candidates evaluated in chunks with bitset monochromaticity
    tests.  Covered counts above vertex_budget return UNDETERMINED;
    uncovered vertices are colored Blue in any returned witness.
    """
    cov = sorted(covered_vertices(H))
    c = len(cov)
    if c == 0:
        colors = tuple([Color.BLUE] * H.p)
        return Colorability.YES, Coloring(colors=colors, proper=True, violating_edge=None)
    if c > vertex_budget:
        return Colorability.UNDETERMINED, None
    if c > 62:
        raise ValueError("vertex budgets above 62 are not supported")

    idx = {v: i for i, v in enumerate(cov)}
    comp_masks = np.array(
        [sum(1 << idx[v] for v in e) for e in H.edges], dtype=np.int64
    )
    total = 1 << (c - 1)
    chunk = 1 << 16
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        blue = (np.arange(lo, hi, dtype=np.int64) << 1) | 1
        ok = np.ones(hi - lo, dtype=bool)
        for em in comp_masks:
            x = blue & em
            ok &= (x != 0) & (x != em)
            if not ok.any():
                break
        hits = np.flatnonzero(ok)
        if hits.size:
            b = int(blue[hits[0]])
            colors = [Color.BLUE] * H.p
            for v, i in idx.items():
                colors[v] = Color.BLUE if b >> i & 1 else Color.RED
            return Colorability.YES, Coloring(
                colors=tuple(colors), proper=True, violating_edge=None
            )
    return Colorability.NO, None


def random_restart_color(
    H: Hypergraph, max_trials: int, seed=0
) -> tuple[Ordering, Coloring] | None:
    """Greedy coloring under fresh uniform random orders until one is proper.

    Trial t uses its own PRNG stream seeded from (seed, t), so results do
    not depend on evaluation order.  Returns the first successful
    (ordering, coloring) or None after max_trials failures.
    """
    if max_trials < 1:
        raise ValueError("max_trials must be >= 1")
    for t in range(max_trials):
        rng = random.Random(f"{seed}:{t}")
        pi = Ordering.random(H.p, rng)
        outcome = greedy_color(H, pi)
        if outcome.coloring.proper:
            return pi, outcome.coloring
    return None
