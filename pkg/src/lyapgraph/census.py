"""Exhaustive census of small abstract Lyapunov graphs.

The enumerator emits exactly one representative per isomorphism class of
dynamically consistent graphs within the given bounds, classifies each
under every flow model, and doubles as the brute-force oracle for the
cross-model properties (acceptance implication, regime disjointness,
cut balance, singular-vertex bounds).

Dynamic consistency, beyond graph validity, means the labels match the
local edge structure the dynamics forces: an attractor vertex (sink
orbit, index-0 rest point) carries at most one edge and only incoming
ones, a repeller at most one outgoing, and a saddle vertex has at least
one edge on each side.  Every realizability checker imposes these
conditions anyway, so no acceptable graph is excluded; leaving them out
would only flood the census with universally rejected rows.

Isomorphism is label-preserving isomorphism of oriented weighted
multigraphs; saddle matrices are compared entry-wise after simultaneous
row/column permutation minimization.  Enumeration order and the canonical
keys are deterministic, so censuses are bit-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb
from typing import Iterator

from .analysis import betti1
from .dynamics import is_irreducible
from .errors import BoundsTooLargeError
from .gf2 import Matrix
from .model import (
    Edge,
    LyapunovGraph,
    Singularity,
    SinkOrbit,
    SourceOrbit,
    Ssft,
    VertexLabel,
    build_graph,
    label_code,
)
from .realizability import (
    check_ns_s1s2,
    check_ns_s1s2_s2,
    check_ns_s1s2_separable,
    check_ns_s1s2_t2,
    check_ns_s3,
    check_smale_s3,
    singular_forced_count,
)

KNOWN_KINDS = (
    "sink-orbit",
    "source-orbit",
    "ssft",
    "singularity-0",
    "singularity-1",
    "singularity-2",
    "singularity-3",
)

DEFAULT_KINDS = ("sink-orbit", "source-orbit", "ssft")

CSV_COLUMNS = (
    "key",
    "beta1",
    "ns_s3",
    "smale_s3",
    "s1s2",
    "regime",
    "singular_forced_count",
)

_MATRIX_UNIVERSE_CAP = 1_000_000
_STRUCTURE_SPACE_CAP = 2_000_000


@dataclass(frozen=True)
class CensusBounds:
    """Size limits for the enumeration.

    ``max_parallel_edges`` bounds the number of parallel edges between one
    ordered vertex pair; ``kinds`` lists the admitted label kinds (see
    ``KNOWN_KINDS``).  ``max_candidates`` is the ceiling on the estimated
    number of candidate graphs before :class:`BoundsTooLargeError`.
    """

    max_vertices: int
    max_parallel_edges: int = 2
    max_matrix_size: int = 2
    max_matrix_entry: int = 2
    max_weight: int = 2
    kinds: tuple[str, ...] = DEFAULT_KINDS
    max_candidates: int = 2_000_000

    def __post_init__(self):
        for name in ("max_vertices", "max_parallel_edges", "max_matrix_size", "max_matrix_entry"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.max_weight < 0:
            raise ValueError("max_weight must be >= 0")
        unknown = [k for k in self.kinds if k not in KNOWN_KINDS]
        if unknown:
            raise ValueError(f"unknown label kinds: {', '.join(unknown)}")
        object.__setattr__(
            self, "kinds", tuple(sorted(set(self.kinds), key=KNOWN_KINDS.index))
        )


@dataclass(frozen=True)
class CensusRow:
    """Classification of one isomorphism class.

    ``regime`` is the dispatcher's regime name or "-".  The three
    standalone regime verdicts are kept alongside the dispatcher's.
    """

    key: str
    beta1: int
    ns_s3: bool
    smale_s3: bool
    s1s2: bool
    regime: str
    singular_forced_count: int
    t2: bool
    s2: bool
    separable: bool


@dataclass(frozen=True)
class CensusSummary:
    total: int
    ns_s3_accepted: int
    smale_s3_accepted: int
    s1s2_accepted: int
    regime_counts: tuple[tuple[str, int], ...]

    def to_text(self) -> str:
        lines = [
            f"classes: {self.total}",
            f"accepted ns-s3: {self.ns_s3_accepted}",
            f"accepted smale-s3: {self.smale_s3_accepted}",
            f"accepted ns-s1xs2: {self.s1s2_accepted}",
        ]
        for regime, count in self.regime_counts:
            lines.append(f"  regime {regime}: {count}")
        return "\n".join(lines)


@dataclass(frozen=True)
class CensusResult:
    rows: tuple[CensusRow, ...]
    summary: CensusSummary


# -- label universe -----------------------------------------------------------

def matrix_canonical(matrix: Matrix) -> Matrix:
    """Minimum over simultaneous row/column permutations."""
    n = len(matrix)
    best = None
    for p in permutations(range(n)):
        cand = tuple(tuple(matrix[p[i]][p[j]] for j in range(n)) for i in range(n))
        if best is None or cand < best:
            best = cand
    return best


def ssft_universe(max_size: int, max_entry: int) -> tuple[Matrix, ...]:
    """All irreducible matrices within bounds, one per permutation class."""
    total = sum((max_entry + 1) ** (m * m) for m in range(1, max_size + 1))
    if total > _MATRIX_UNIVERSE_CAP:
        raise BoundsTooLargeError(
            f"matrix universe has {total} candidates", estimate=total
        )
    seen: set[Matrix] = set()
    for m in range(1, max_size + 1):
        for flat in product(range(max_entry + 1), repeat=m * m):
            matrix = tuple(tuple(flat[i * m + j] for j in range(m)) for i in range(m))
            if not is_irreducible(matrix):
                continue
            seen.add(matrix_canonical(matrix))
    return tuple(sorted(seen, key=lambda mat: (len(mat), mat)))


def _label_universe(bounds: CensusBounds) -> tuple[tuple[str, VertexLabel], ...]:
    out: list[tuple[str, VertexLabel]] = []
    if "sink-orbit" in bounds.kinds:
        out.append(("sink-orbit", SinkOrbit()))
    if "source-orbit" in bounds.kinds:
        out.append(("source-orbit", SourceOrbit()))
    for r in range(4):
        if f"singularity-{r}" in bounds.kinds:
            out.append((f"singularity{r}", Singularity(r)))
    if "ssft" in bounds.kinds:
        for matrix in ssft_universe(bounds.max_matrix_size, bounds.max_matrix_entry):
            label = Ssft(matrix)
            out.append((label_code(label), label))
    return tuple(out)


def _allowed_label_indices(
    universe, e_in: int, e_out: int
) -> tuple[int, ...]:
    allowed = []
    for idx, (_, label) in enumerate(universe):
        if isinstance(label, SinkOrbit):
            ok = e_out == 0 and e_in <= 1
        elif isinstance(label, SourceOrbit):
            ok = e_in == 0 and e_out <= 1
        elif isinstance(label, Singularity):
            if label.index == 0:
                ok = e_out == 0 and e_in <= 1
            elif label.index == 3:
                ok = e_in == 0 and e_out <= 1
            else:
                ok = True
        else:
            ok = e_in >= 1 and e_out >= 1
        if ok:
            allowed.append(idx)
    return tuple(allowed)


# -- structures ---------------------------------------------------------------

ArcClass = tuple[int, int, int]  # (start, end, multiplicity)


def _permute_arcs(arcs: tuple[ArcClass, ...], p) -> tuple[ArcClass, ...]:
    return tuple(sorted((p[a], p[b], m) for a, b, m in arcs))


def _is_acyclic(n: int, arcs: tuple[ArcClass, ...]) -> bool:
    adjacency = {v: [] for v in range(n)}
    indegree = {v: 0 for v in range(n)}
    for a, b, _ in arcs:
        adjacency[a].append(b)
        indegree[b] += 1
    queue = [v for v in range(n) if indegree[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in adjacency[v]:
            indegree[w] -= 1
            if indegree[w] == 0:
                queue.append(w)
    return seen == n


def _is_connected(n: int, arcs: tuple[ArcClass, ...]) -> bool:
    if n == 1:
        return True
    neighbors = {v: set() for v in range(n)}
    for a, b, _ in arcs:
        neighbors[a].add(b)
        neighbors[b].add(a)
    reached = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in neighbors[v]:
            if w not in reached:
                reached.add(w)
                frontier.append(w)
    return len(reached) == n


def _structures(n: int, max_parallel: int) -> list[tuple[ArcClass, ...]]:
    """Connected DAG multigraph structures on n vertices, one per class."""
    if n == 1:
        return [()]
    pair_options = []
    for a, b in combinations(range(n), 2):
        options: list[ArcClass | None] = [None]
        for mult in range(1, max_parallel + 1):
            options.append((a, b, mult))
            options.append((b, a, mult))
        pair_options.append(options)

    perms = list(permutations(range(n)))
    canonical: set[tuple[ArcClass, ...]] = set()
    for combo in product(*pair_options):
        arcs = tuple(sorted(c for c in combo if c is not None))
        if not arcs:
            continue
        if not _is_connected(n, arcs):
            continue
        if not _is_acyclic(n, arcs):
            continue
        canonical.add(min(_permute_arcs(arcs, p) for p in perms))
    return sorted(canonical)


def _structure_automorphisms(n: int, arcs: tuple[ArcClass, ...]):
    reference = tuple(sorted(arcs))
    return [
        p for p in permutations(range(n)) if _permute_arcs(reference, p) == reference
    ]


def _permute_labels(codes: tuple[str, ...], p) -> tuple[str, ...]:
    out = [""] * len(codes)
    for i, code in enumerate(codes):
        out[p[i]] = code
    return tuple(out)


# -- enumeration --------------------------------------------------------------

def _weight_options(max_weight: int, mult: int) -> list[tuple[int, ...]]:
    return list(combinations_with_replacement(range(max_weight + 1), mult))


def _prepare(bounds: CensusBounds):
    universe = _label_universe(bounds)
    all_structures: dict[int, list[tuple[ArcClass, ...]]] = {}
    estimate = 0
    for n in range(1, bounds.max_vertices + 1):
        pair_count = n * (n - 1) // 2
        space = (2 * bounds.max_parallel_edges + 1) ** pair_count
        if space > _STRUCTURE_SPACE_CAP:
            raise BoundsTooLargeError(
                f"structure space for {n} vertices has {space} candidates",
                estimate=space,
            )
        structures = _structures(n, bounds.max_parallel_edges)
        all_structures[n] = structures
        weight_choices = {
            mult: comb(bounds.max_weight + mult, mult)
            for mult in range(1, bounds.max_parallel_edges + 1)
        }
        for arcs in structures:
            e_in = [0] * n
            e_out = [0] * n
            for a, b, mult in arcs:
                e_out[a] += mult
                e_in[b] += mult
            label_combos = 1
            for v in range(n):
                label_combos *= len(
                    _allowed_label_indices(universe, e_in[v], e_out[v])
                )
            if label_combos == 0:
                continue
            weight_combos = 1
            for _, _, mult in arcs:
                weight_combos *= weight_choices[mult]
            estimate += label_combos * weight_combos
    if estimate > bounds.max_candidates:
        raise BoundsTooLargeError(
            f"estimated {estimate} candidate graphs exceed the ceiling of"
            f" {bounds.max_candidates}",
            estimate=estimate,
        )
    return universe, all_structures


def _build_census_graph(
    n: int,
    arcs: tuple[ArcClass, ...],
    weights: tuple[tuple[int, ...], ...],
    labels: tuple[VertexLabel, ...],
    name: str,
) -> LyapunovGraph:
    vertices = [(f"v{i}", labels[i]) for i in range(n)]
    edges = []
    counter = 0
    for (a, b, _), ws in zip(arcs, weights):
        for w in ws:
            edges.append(Edge(id=f"e{counter}", start=f"v{a}", end=f"v{b}", weight=w))
            counter += 1
    return build_graph(vertices, edges, name=name)


def enumerate_graphs(bounds: CensusBounds) -> Iterator[LyapunovGraph]:
    """Stream one representative per isomorphism class, in a fixed order."""
    universe, all_structures = _prepare(bounds)
    codes = [code for code, _ in universe]
    labels = [label for _, label in universe]
    index = 0
    for n in range(1, bounds.max_vertices + 1):
        for arcs in all_structures[n]:
            e_in = [0] * n
            e_out = [0] * n
            for a, b, mult in arcs:
                e_out[a] += mult
                e_in[b] += mult
            allowed = [
                _allowed_label_indices(universe, e_in[v], e_out[v]) for v in range(n)
            ]
            if any(not options for options in allowed):
                continue
            st_auts = _structure_automorphisms(n, arcs)
            nontrivial_st_auts = [p for p in st_auts if p != tuple(range(n))]
            weight_options = [
                _weight_options(bounds.max_weight, mult) for _, _, mult in arcs
            ]
            for weights in product(*weight_options):
                weighted = tuple(
                    (a, b, mult, ws) for (a, b, mult), ws in zip(arcs, weights)
                )
                reference = tuple(sorted(weighted))
                if nontrivial_st_auts:
                    permuted = [
                        tuple(sorted((p[a], p[b], m, ws) for a, b, m, ws in weighted))
                        for p in nontrivial_st_auts
                    ]
                    if any(cand < reference for cand in permuted):
                        continue
                    w_auts = [
                        p
                        for p, cand in zip(nontrivial_st_auts, permuted)
                        if cand == reference
                    ]
                else:
                    w_auts = []
                for choice in product(*allowed):
                    label_codes = tuple(codes[i] for i in choice)
                    if w_auts and any(
                        _permute_labels(label_codes, p) < label_codes for p in w_auts
                    ):
                        continue
                    graph = _build_census_graph(
                        n,
                        arcs,
                        weights,
                        tuple(labels[i] for i in choice),
                        name=f"c{index}",
                    )
                    index += 1
                    yield graph


def canonical_key(graph: LyapunovGraph) -> str:
    """Isomorphism-invariant key; equal exactly for isomorphic graphs.

    Minimizes the (label codes, edge triples) encoding over all vertex
    permutations.  Intended for small graphs (at most 10 vertices).
    """
    ids = sorted(v for v, _ in graph.vertices)
    n = len(ids)
    if n > 10:
        raise ValueError("canonical_key supports at most 10 vertices")
    pos = {v: i for i, v in enumerate(ids)}
    codes = tuple(label_code(graph.labels[v]) for v in ids)
    edges = [(pos[e.start], pos[e.end], e.weight) for e in graph.edges]
    best = None
    for p in permutations(range(n)):
        cand = (
            _permute_labels(codes, p),
            tuple(sorted((p[a], p[b], w) for a, b, w in edges)),
        )
        if best is None or cand < best:
            best = cand
    label_part, edge_part = best
    edges_text = "|".join(f"{a}>{b}w{w}" for a, b, w in edge_part)
    return "V=" + "|".join(label_part) + ";E=" + edges_text


def classify_graph(graph: LyapunovGraph) -> CensusRow:
    """Run every checker on one graph and assemble its census row."""
    dispatched = check_ns_s1s2(graph)
    return CensusRow(
        key=canonical_key(graph),
        beta1=betti1(graph),
        ns_s3=check_ns_s3(graph).accepted,
        smale_s3=check_smale_s3(graph).accepted,
        s1s2=dispatched.accepted,
        regime=dispatched.regime.value if dispatched.regime is not None else "-",
        singular_forced_count=singular_forced_count(graph),
        t2=check_ns_s1s2_t2(graph).accepted,
        s2=check_ns_s1s2_s2(graph).accepted,
        separable=check_ns_s1s2_separable(graph).accepted,
    )


def iter_census(bounds: CensusBounds) -> Iterator[tuple[LyapunovGraph, CensusRow]]:
    for graph in enumerate_graphs(bounds):
        yield graph, classify_graph(graph)


def run_census(bounds: CensusBounds) -> CensusResult:
    """Materialize the census with its summary table."""
    rows = tuple(row for _, row in iter_census(bounds))
    regimes: dict[str, int] = {}
    for row in rows:
        if row.s1s2:
            regimes[row.regime] = regimes.get(row.regime, 0) + 1
    summary = CensusSummary(
        total=len(rows),
        ns_s3_accepted=sum(1 for r in rows if r.ns_s3),
        smale_s3_accepted=sum(1 for r in rows if r.smale_s3),
        s1s2_accepted=sum(1 for r in rows if r.s1s2),
        regime_counts=tuple(sorted(regimes.items())),
    )
    return CensusResult(rows=rows, summary=summary)


def census_csv_lines(rows) -> Iterator[str]:
    """The census table: fixed column order, comma separated."""
    yield ",".join(CSV_COLUMNS)
    for row in rows:
        yield ",".join(
            (
                row.key,
                str(row.beta1),
                "true" if row.ns_s3 else "false",
                "true" if row.smale_s3 else "false",
                "true" if row.s1s2 else "false",
                row.regime if row.s1s2 else "-",
                str(row.singular_forced_count),
            )
        )
