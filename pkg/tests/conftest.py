"""Shared fixtures and independent oracles for the test suite.

The brute-force geodesic oracle below enumerates simple paths directly
(no BFS layering) so the production counting code is checked against an
implementation that shares none of its logic.
"""

from __future__ import annotations

import random

import pytest

from coopgraph import Multigraph, Partition, induced_subgraph, load_dataset


@pytest.fixture(scope="session")
def example1():
    return load_dataset("example1")


@pytest.fixture(scope="session")
def example2():
    return load_dataset("example2")


@pytest.fixture(scope="session")
def karate():
    return load_dataset("karate")


@pytest.fixture
def example1_split():
    return Partition([{"A", "B", "C"}, {"D", "E", "F"}])


def random_multigraph(rng: random.Random, n: int, edge_prob=0.4, max_mult=3, connected=False):
    """Seeded random multigraph on labels v0..v{n-1}; when connected, a
    random spanning tree is laid down first."""
    labels = [f"v{i}" for i in range(n)]
    edges = []
    present = set()
    if connected and n > 1:
        order = labels[:]
        rng.shuffle(order)
        for k in range(1, n):
            u, v = order[k], order[rng.randrange(k)]
            edges.append((u, v, rng.randint(1, max_mult)))
            present.add(frozenset((u, v)))
    for a in range(n):
        for b in range(a + 1, n):
            pair = frozenset((labels[a], labels[b]))
            if pair in present:
                continue
            if rng.random() < edge_prob:
                edges.append((labels[a], labels[b], rng.randint(1, max_mult)))
    return Multigraph(edges, nodes=labels)


def random_partition(rng: random.Random, labels):
    order = list(labels)
    rng.shuffle(order)
    blocks = []
    i = 0
    while i < len(order):
        size = rng.randint(1, len(order) - i)
        blocks.append(order[i : i + size])
        i += size
    return Partition(blocks)


def brute_force_profiles(g: Multigraph, coalition):
    """Geodesic counts by exhaustive simple-path enumeration.

    Returns (pair_counts, per_node): pair_counts[k-1] is the number of
    length-k geodesics over unordered pairs inside the coalition, with a
    path's weight the product of its link multiplicities; per_node[u][k-1]
    counts the geodesics containing u.
    """
    h = induced_subgraph(g, coalition)
    adj = h.adjacency
    n = h.n
    geodesics = []  # (length, weight, node index tuple)
    for i in range(n):
        for j in range(i + 1, n):
            found = []
            stack = [(i, (i,), 1)]
            while stack:
                v, path, weight = stack.pop()
                for w, mult in adj[v].items():
                    if w == j:
                        found.append((len(path), weight * mult, path + (j,)))
                    elif w not in path:
                        stack.append((w, path + (w,), weight * mult))
            if not found:
                continue
            shortest = min(f[0] for f in found)
            geodesics.extend(f for f in found if f[0] == shortest)
    length = max((d for d, _, _ in geodesics), default=0)
    counts = [0] * length
    per_node = {u: [0] * length for u in h.labels}
    for d, weight, nodes in geodesics:
        counts[d - 1] += weight
        for v in nodes:
            per_node[h.label_of(v)][d - 1] += weight
    return tuple(counts), {u: tuple(vec) for u, vec in per_node.items()}
