import random

import pytest

from propb import (
    Hypergraph,
    complete_hypergraph,
    fano_plane,
    normalize,
    random_hypergraph,
)


@pytest.fixture
def triangle() -> Hypergraph:
    return complete_hypergraph(2)


@pytest.fixture
def k35() -> Hypergraph:
    return complete_hypergraph(3)


@pytest.fixture
def k47() -> Hypergraph:
    return complete_hypergraph(4)


@pytest.fixture
def fano() -> Hypergraph:
    return fano_plane()


@pytest.fixture
def single_edge() -> Hypergraph:
    return normalize([[0, 1]], n=2, p=2)


@pytest.fixture
def disjoint_edges() -> Hypergraph:
    return normalize([[0, 1, 2], [3, 4, 5]], n=3, p=6)


def random_instances(count, seed, n_choices=(2, 3), p_max=12, m_max=None):
    """Seeded stream of (H, rng) pairs for property-style tests."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.choice(list(n_choices))
        p = rng.randint(n, p_max)
        import math

        cap = math.comb(p, n)
        m = rng.randint(0, min(cap, m_max if m_max is not None else cap))
        out.append(random_hypergraph(n, p, m, seed=rng.getrandbits(32)))
    return out


# independent set-based oracles, deliberately not sharing code with the package


def brute_simple_pairs(H) -> list[tuple[int, int, int]]:
    """All ordered (i, j, meet) by literal set intersection."""
    out = []
    for i, X in enumerate(H.edges):
        for j, Y in enumerate(H.edges):
            if i == j:
                continue
            inter = set(X) & set(Y)
            if len(inter) == 1:
                out.append((i, j, inter.pop()))
    return out


def brute_separates(order, X, Y) -> bool:
    """Separation by positional comparison on a visit order."""
    pos = {v: k for k, v in enumerate(order)}
    inter = set(X) & set(Y)
    assert len(inter) == 1
    (y,) = inter
    left = [pos[u] for u in set(X) - {y}]
    right = [pos[v] for v in set(Y) - {y}]
    return all(u < pos[y] for u in left) and all(v > pos[y] for v in right)
