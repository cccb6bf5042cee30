"""Core n-uniform hypergraph representation and simple-pair counting.

Vertices are dense 0-based integer ids.  Every edge is kept both as a
sorted tuple (canonical order, I/O) and as an int bitset (hot loops);
Python ints are arbitrary-width, so the bitset path works at any p.

m2 counts ORDERED simple pairs, i.e. ordered pairs (X, Y) of distinct
edges with |X meet Y| = 1; the unordered count is exactly half of it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    InsufficientVertices,
    NonUniformEdge,
    TooManyEdges,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable n-uniform hypergraph on vertex ids 0..p-1.

    Invariants enforced on construction: every edge is a strictly
    increasing n-tuple of ids in [0, p); the edge list is sorted
    lexicographically with no duplicates.  Use :func:`normalize` to build
    one from unsorted/duplicated raw input.
    """

    n: int
    p: int
    edges: tuple[tuple[int, ...], ...]
    masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise NonUniformEdge(f"uniformity must be positive, got {self.n}")
        if self.p < 0:
            raise VertexOutOfRange(f"vertex count must be non-negative, got {self.p}")
        prev = None
        masks = []
        for e in self.edges:
            if len(e) != self.n or any(a >= b for a, b in zip(e, e[1:])):
                raise NonUniformEdge(f"edge {e} is not a sorted {self.n}-set")
            if e[0] < 0 or e[-1] >= self.p:
                raise VertexOutOfRange(f"edge {e} leaves vertex range [0, {self.p})")
            if prev is not None and e <= prev:
                raise NonUniformEdge(f"edge list not in canonical order at {e}")
            prev = e
            m = 0
            for v in e:
                m |= 1 << v
            masks.append(m)
        object.__setattr__(self, "masks", tuple(masks))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class SimplePair:
    """Ordered pair of edge indices whose edges share exactly one vertex."""

    first: int
    second: int
    meet: int


def normalize(raw_edges: Iterable[Iterable[int]], n: int, p: int) -> Hypergraph:
    """Validate, deduplicate and canonically order raw edge lists.

    Raises NonUniformEdge for a wrong-size edge or a repeated vertex
    within an edge, VertexOutOfRange for ids outside [0, p).
    """
    seen = set()
    out = []
    for raw in raw_edges:
        e = tuple(sorted(raw))
        if len(e) != n or len(set(e)) != n:
            raise NonUniformEdge(f"edge {tuple(raw)} is not an {n}-set of distinct vertices")
        if e and (e[0] < 0 or e[-1] >= p):
            raise VertexOutOfRange(f"edge {e} leaves vertex range [0, {p})")
        if e not in seen:
            seen.add(e)
            out.append(e)
    out.sort()
    return Hypergraph(n=n, p=p, edges=tuple(out))


def covered_vertices(H: Hypergraph) -> frozenset[int]:
    """Vertices that belong to at least one edge."""
    cov = 0
    for m in H.masks:
        cov |= m
    return frozenset(v for v in range(H.p) if cov >> v & 1)


def enumerate_simple_pairs(H: Hypergraph) -> list[SimplePair]:
    """All ordered pairs (X, Y) of distinct edges with |X meet Y| = 1.

    Both (i, j) and (j, i) appear when the pair is simple; the result is
    sorted by (first, second) and its length is m2(H).
    """
    pairs = []
    masks = H.masks
    for i in range(len(masks)):
        for j in range(len(masks)):
            if i == j:
                continue
            inter = masks[i] & masks[j]
            if inter.bit_count() == 1:
                pairs.append(SimplePair(first=i, second=j, meet=inter.bit_length() - 1))
    return pairs


def m2(H: Hypergraph) -> int:
    """Number of ordered simple pairs, counted without materializing them.

    Mirror twins (i, j)/(j, i) are simple together, so the count scans
    unordered index pairs and doubles.
    """
    masks = H.masks
    count = 0
    for i in range(len(masks)):
        mi = masks[i]
        for j in range(i + 1, len(masks)):
            if (mi & masks[j]).bit_count() == 1:
                count += 2
    return count


def bound(n: int) -> int:
    """The simple-pair threshold n*C(2n-1, n) in exact integer arithmetic."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return n * math.comb(2 * n - 1, n)


def complete_hypergraph(n: int) -> Hypergraph:
    """Complete n-graph on 2n-1 vertices: all C(2n-1, n) edges."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    p = 2 * n - 1
    return Hypergraph(n=n, p=p, edges=tuple(combinations(range(p), n)))


def fano_plane() -> Hypergraph:
    """The 7-point projective plane as a 3-graph (7 lines, pairwise meeting in one point)."""
    lines = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2)]
    return normalize(lines, n=3, p=7)


def pad(H: Hypergraph, extra_vertices: int, extra_disjoint_edges: int) -> Hypergraph:
    """Append fresh vertices and pairwise-disjoint edges on fresh vertices only.

    The new edges touch no old vertex and do not touch each other, so no
    new simple pair appears and m2 is unchanged.  Requires
    extra_vertices >= n * extra_disjoint_edges.
    """
    if extra_vertices < 0 or extra_disjoint_edges < 0:
        raise InsufficientVertices("padding counts must be non-negative")
    if extra_vertices < H.n * extra_disjoint_edges:
        raise InsufficientVertices(
            f"{extra_disjoint_edges} disjoint {H.n}-edges need "
            f"{H.n * extra_disjoint_edges} fresh vertices, got {extra_vertices}"
        )
    new_edges = list(H.edges)
    for k in range(extra_disjoint_edges):
        start = H.p + k * H.n
        new_edges.append(tuple(range(start, start + H.n)))
    return Hypergraph(n=H.n, p=H.p + extra_vertices, edges=tuple(new_edges))


def seymour_check(H: Hypergraph) -> bool:
    """Whether |edges| >= |covered vertices|.

    Necessary for non-2-colorability only of edge-MINIMAL hypergraphs
    (e.g. a triangle plus a disjoint edge is non-2-colorable with 4 edges
    on 5 covered vertices); isolated vertices are ignored.
    """
    return len(H.edges) >= len(covered_vertices(H))


def random_hypergraph(n: int, p: int, m: int, seed) -> Hypergraph:
    """m distinct uniformly random n-subsets of [0, p), deterministic given seed."""
    total = math.comb(p, n)
    if m > total:
        raise TooManyEdges(f"requested {m} edges but only C({p},{n})={total} exist")
    rng = random.Random(seed)
    if total <= 1 << 20:
        population = list(combinations(range(p), n))
        edges = rng.sample(population, m)
    else:
        chosen: set[tuple[int, ...]] = set()
        while len(chosen) < m:
            chosen.add(tuple(sorted(rng.sample(range(p), n))))
        edges = list(chosen)
    edges.sort()
    return Hypergraph(n=n, p=p, edges=tuple(edges))


def relabel(H: Hypergraph, mapping: Sequence[int]) -> Hypergraph:
    """Apply a vertex permutation (mapping[v] = new id) and renormalize."""
    if sorted(mapping) != list(range(H.p)):
        raise VertexOutOfRange("mapping must be a permutation of 0..p-1")
    return normalize([[mapping[v] for v in e] for e in H.edges], n=H.n, p=H.p)
