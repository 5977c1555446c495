"""Structural computations on Lyapunov graphs.

Betti number, tree test, extraction of the unique cycle of a
first-Betti-number-one graph, enumeration of down-set cuts (the
graph-level shadow of regular level sets of a Lyapunov function) and the
Euler-characteristic balance those cuts must satisfy for flows without
rest points: every regular level of such a flow has total Euler
characteristic zero, so each cut must satisfy sum(2 - 2g) = 0 over its
crossing edges.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import NotBettiOneError, TooLargeError
from .model import Edge, LyapunovGraph

EXHAUSTIVE_CUT_CAP = 20
SAMPLED_CUTS = 10_000
SAMPLE_SEED = 0


def betti1(graph: LyapunovGraph) -> int:
    """First Betti number |E| - |V| + 1 of a connected graph."""
    return len(graph.edges) - len(graph.vertices) + 1


def is_tree(graph: LyapunovGraph) -> bool:
    return betti1(graph) == 0


@dataclass(frozen=True)
class CycleStep:
    """One edge of the cycle, with its orientation class.

    ``forward`` is True when the anchored traversal crosses the edge in
    its own direction.
    """

    edge: Edge
    forward: bool


@dataclass(frozen=True)
class CycleData:
    """The unique simple cycle of a graph with first Betti number one."""

    steps: tuple[CycleStep, ...]

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(s.edge for s in self.steps)

    @property
    def edge_ids(self) -> frozenset[str]:
        return frozenset(s.edge.id for s in self.steps)

    def orientation(self, edge_id: str) -> bool:
        for s in self.steps:
            if s.edge.id == edge_id:
                return s.forward
        raise KeyError(f"edge {edge_id!r} is not on the cycle")


def unique_cycle(graph: LyapunovGraph) -> CycleData:
    """Extract the unique simple cycle with deterministic anchoring.

    The traversal starts at the smallest vertex id on the cycle and leaves
    along the incident cycle edge with the smallest id, so the forward /
    backward classes do not depend on declaration order.
    """
    if betti1(graph) != 1:
        raise NotBettiOneError(
            f"unique_cycle needs first Betti number 1, got {betti1(graph)}"
        )

    # Iteratively strip degree-1 vertices; the 2-core is the cycle.
    degree: dict[str, int] = {v: 0 for v, _ in graph.vertices}
    incident: dict[str, list[Edge]] = {v: [] for v, _ in graph.vertices}
    for e in graph.edges:
        degree[e.start] += 1
        degree[e.end] += 1
        incident[e.start].append(e)
        incident[e.end].append(e)
    alive = {v for v, _ in graph.vertices}
    removed_edges: set[str] = set()
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            live = [e for e in incident[v] if e.id not in removed_edges]
            if len(live) == 1:
                removed_edges.add(live[0].id)
                alive.discard(v)
                changed = True
            elif not live:
                alive.discard(v)
                changed = True

    cycle_edges = {
        e.id: e for e in graph.edges if e.id not in removed_edges
    }
    anchor = min(alive)
    start_edge = min(
        (e for e in cycle_edges.values() if anchor in (e.start, e.end)),
        key=lambda e: e.id,
    )

    steps: list[CycleStep] = []
    used: set[str] = set()
    current = anchor
    edge = start_edge
    while True:
        forward = edge.start == current
        steps.append(CycleStep(edge=edge, forward=forward))
        used.add(edge.id)
        current = edge.end if forward else edge.start
        if current == anchor:
            break
        edge = next(
            e
            for e in sorted(cycle_edges.values(), key=lambda e: e.id)
            if e.id not in used and current in (e.start, e.end)
        )
    return CycleData(steps=tuple(steps))


@dataclass(frozen=True)
class DownSetCut:
    """A proper nonempty successor-closed vertex set with its crossing edges.

    Every regular value of a compatible Lyapunov function separates the
    graph into such a lower part and its complement; all crossing edges
    run from the upper part into the lower part.
    """

    lower: tuple[str, ...]
    cut_edges: tuple[Edge, ...]


def _cuts_from_lower_sets(graph: LyapunovGraph, lowers) -> list[DownSetCut]:
    cuts = []
    for lower in lowers:
        lower_set = set(lower)
        crossing = tuple(
            e
            for e in sorted(graph.edges, key=lambda e: e.id)
            if e.end in lower_set and e.start not in lower_set
        )
        cuts.append(DownSetCut(lower=tuple(sorted(lower)), cut_edges=crossing))
    cuts.sort(key=lambda c: (len(c.lower), c.lower))
    return cuts


def down_set_cuts(
    graph: LyapunovGraph, cap: int = EXHAUSTIVE_CUT_CAP
) -> list[DownSetCut]:
    """Enumerate every proper nonempty successor-closed vertex subset.

    Exhaustive up to ``cap`` vertices; beyond that raises
    :class:`TooLargeError` (use :func:`sample_down_set_cuts` instead).
    """
    ids = sorted(v for v, _ in graph.vertices)
    n = len(ids)
    if n > cap:
        raise TooLargeError(
            f"{n} vertices exceed the exhaustive cut cap of {cap}"
        )
    successors = {v: {e.end for e in graph.out_edges[v]} for v in ids}
    lowers = []
    for size in range(1, n):
        for subset in combinations(ids, size):
            chosen = set(subset)
            if all(successors[v] <= chosen for v in subset):
                lowers.append(subset)
    return _cuts_from_lower_sets(graph, lowers)


def sample_down_set_cuts(
    graph: LyapunovGraph,
    count: int = SAMPLED_CUTS,
    seed: int = SAMPLE_SEED,
) -> list[DownSetCut]:
    """Fixed-seed sample of down-set cuts for graphs above the cap.

    Draws ``count`` random subsets, closes each under successors and keeps
    the proper nonempty distinct ones.  Not exhaustive.
    """
    rng = random.Random(seed)
    ids = sorted(v for v, _ in graph.vertices)
    n = len(ids)
    successors = {v: [e.end for e in graph.out_edges[v]] for v in ids}
    seen: set[tuple[str, ...]] = set()
    for _ in range(count):
        size = rng.randint(1, max(1, n - 1))
        seedset = rng.sample(ids, size)
        closed = set(seedset)
        frontier = list(seedset)
        while frontier:
            v = frontier.pop()
            for w in successors[v]:
                if w not in closed:
                    closed.add(w)
                    frontier.append(w)
        if 0 < len(closed) < n:
            seen.add(tuple(sorted(closed)))
    return _cuts_from_lower_sets(graph, sorted(seen))


@dataclass(frozen=True)
class CutBalance:
    cut: DownSetCut
    chi_sum: int

    @property
    def balanced(self) -> bool:
        return self.chi_sum == 0


@dataclass(frozen=True)
class CutBalanceReport:
    entries: tuple[CutBalance, ...]

    @property
    def all_balanced(self) -> bool:
        return all(e.balanced for e in self.entries)


def euler_cut_balance(
    graph: LyapunovGraph, cap: int = EXHAUSTIVE_CUT_CAP
) -> CutBalanceReport:
    """Per-cut sum of chi = 2 - 2*weight over crossing edges.

    A flow without rest points forces every cut to balance to zero.
    """
    entries = tuple(
        CutBalance(cut=c, chi_sum=sum(2 - 2 * e.weight for e in c.cut_edges))
        for c in down_set_cuts(graph, cap=cap)
    )
    return CutBalanceReport(entries=entries)
