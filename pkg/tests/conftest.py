"""Shared fixtures: the six named example graphs and independent oracles.

The oracles here deliberately avoid the library's own algorithms: rank is
checked against row-span enumeration, isomorphism against exhaustive
bijection search.
"""

from __future__ import annotations

import random
from itertools import permutations

import pytest

from lyapgraph import (
    LyapunovGraph,
    Singularity,
    SinkOrbit,
    SourceOrbit,
    Ssft,
    build_graph,
    label_code,
)


# -- named example graphs ------------------------------------------------------

def make_hopf() -> LyapunovGraph:
    """Source orbit feeding a sink orbit along one torus level set."""
    return build_graph(
        [("R", SourceOrbit()), ("A", SinkOrbit())],
        [("R", "A", 1)],
        name="hopf",
    )


def make_lorenz() -> LyapunovGraph:
    """A single saddle with the full-shift-like matrix [[1,1],[1,1]] (k=0)."""
    return build_graph(
        [("R", SourceOrbit()), ("v", Ssft([[1, 1], [1, 1]])), ("A", SinkOrbit())],
        [("R", "v", 1), ("v", "A", 1)],
        name="lorenz",
    )


def make_equality() -> LyapunovGraph:
    """A single saddle with matrix [[1,2],[2,1]] (k=2), so k = e+ + e-."""
    return build_graph(
        [("R", SourceOrbit()), ("v", Ssft([[1, 2], [2, 1]])), ("A", SinkOrbit())],
        [("R", "v", 1), ("v", "A", 1)],
        name="equality",
    )


def make_parallel() -> LyapunovGraph:
    """Two saddles joined by two parallel unit-weight edges (torus regime)."""
    swap = Ssft([[0, 1], [1, 0]])
    return build_graph(
        [("R", SourceOrbit()), ("v", swap), ("w", swap), ("A", SinkOrbit())],
        [("R", "v", 1), ("v", "w", 1), ("v", "w", 1), ("w", "A", 1)],
        name="parallel",
    )


def make_sphere() -> LyapunovGraph:
    """Two saddles joined by a weight-0 and a weight-2 edge (sphere regime)."""
    swap = Ssft([[0, 1], [1, 0]])
    return build_graph(
        [("R", SourceOrbit()), ("v", swap), ("w", swap), ("A", SinkOrbit())],
        [("R", "v", 1), ("v", "w", 0), ("v", "w", 2), ("w", "A", 1)],
        name="sphere",
    )


def make_gradient() -> LyapunovGraph:
    """Index-3 rest point flowing to an index-0 rest point across a sphere."""
    return build_graph(
        [("S", Singularity(3)), ("A", Singularity(0))],
        [("S", "A", 0)],
        name="gradient",
    )


@pytest.fixture
def hopf():
    return make_hopf()


@pytest.fixture
def lorenz():
    return make_lorenz()


@pytest.fixture
def equality():
    return make_equality()


@pytest.fixture
def parallel():
    return make_parallel()


@pytest.fixture
def sphere():
    return make_sphere()


@pytest.fixture
def gradient():
    return make_gradient()


# -- independent oracles -------------------------------------------------------

def rank_oracle(matrix) -> int:
    """GF(2) rank via row-span enumeration: |span| = 2^rank."""
    bits = [sum((int(x) & 1) << j for j, x in enumerate(row)) for row in matrix]
    span = {0}
    for r in bits:
        span |= {x ^ r for x in span}
    size = len(span)
    rank = 0
    while size > 1:
        size //= 2
        rank += 1
    return rank


def k_oracle(matrix) -> int:
    """k = m - rank(I - A mod 2), rank from the span oracle."""
    m = len(matrix)
    i_minus_b = [
        [((1 if i == j else 0) - matrix[i][j]) % 2 for j in range(m)] for i in range(m)
    ]
    return m - rank_oracle(i_minus_b)


def random_matrix(rng: random.Random, size: int, max_entry: int):
    return tuple(
        tuple(rng.randint(0, max_entry) for _ in range(size)) for _ in range(size)
    )


def random_irreducible(rng: random.Random, max_size: int, max_entry: int):
    """Rejection-sample an irreducible matrix (strong connectivity checked
    by brute-force reachability, independent of the library)."""
    while True:
        size = rng.randint(1, max_size)
        matrix = random_matrix(rng, size, max_entry)
        if _strongly_connected(matrix) and any(x for row in matrix for x in row):
            return matrix


def _strongly_connected(matrix) -> bool:
    n = len(matrix)
    reach = [[matrix[i][j] > 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        reach[i][i] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return all(reach[i][j] for i in range(n) for j in range(n))


def brute_force_isomorphic(g1: LyapunovGraph, g2: LyapunovGraph) -> bool:
    """Label-preserving isomorphism by exhaustive bijection search."""
    ids1 = sorted(v for v, _ in g1.vertices)
    ids2 = sorted(v for v, _ in g2.vertices)
    if len(ids1) != len(ids2) or len(g1.edges) != len(g2.edges):
        return False
    codes1 = [label_code(g1.labels[v]) for v in ids1]
    codes2 = [label_code(g2.labels[v]) for v in ids2]
    if sorted(codes1) != sorted(codes2):
        return False
    edges1 = sorted((e.start, e.end, e.weight) for e in g1.edges)
    for perm in permutations(range(len(ids2))):
        if any(codes1[i] != codes2[perm[i]] for i in range(len(ids1))):
            continue
        mapping = {ids1[i]: ids2[perm[i]] for i in range(len(ids1))}
        mapped = sorted(
            (mapping[a], mapping[b], w) for a, b, w in edges1
        )
        if mapped == sorted((e.start, e.end, e.weight) for e in g2.edges):
            return True
    return False
