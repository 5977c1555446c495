"""Realizability checkers for abstract Lyapunov graphs.

Each checker evaluates the full condition list of one flow model and
returns a :class:`Verdict`: accepted exactly when no condition is
violated, otherwise a deterministic list of violations, each carrying a
condition code from the closed vocabulary below, the vertex or edge
involved, and the numbers that broke the condition.

Condition codes
---------------
``LABEL-IRRED``  a saddle vertex label is not an irreducible matrix
``NS-SING``      a singularity label under a nonsingular-flow model
``T2.4(1/2)``    nonsingular flow on the 3-sphere: tree/orbit/weight
                 structure, saddle vertex inequalities
``T2.41(1/2/3)`` flow with rest points on the 3-sphere: tree structure,
                 saddle inequalities with weight sums, index balance
``T2.5``         first Betti number exceeds that of the target manifold
``T5.1(1/2)``    torus-level regime on the twisted product: cycle
                 structure with unit weights, saddle inequalities
``T5.2(1*/2*)``  sphere-level regime: cycle weight/orientation rules and
                 the three-way saddle case split
``T5.5(1/2/3)``  separable regime: tree structure, relaxed saddle
                 inequalities, at most one extremal vertex

All checkers are pure functions; violations are sorted by (code,
subject), so verdicts do not depend on declaration order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .analysis import betti1, unique_cycle
from .dynamics import is_irreducible
from .errors import NegativeDimensionError
from .gf2 import Matrix, k_invariant
from .model import (
    LyapunovGraph,
    Singularity,
    SinkOrbit,
    SourceOrbit,
    Ssft,
    VertexContext,
    vertex_context,
)


class Model(str, Enum):
    NS_S3 = "ns-s3"
    SMALE_S3 = "smale-s3"
    NS_S1XS2 = "ns-s1xs2"


class Regime(str, Enum):
    SEPARABLE = "separable"
    INSEPARABLE_T2 = "inseparable-t2"
    INSEPARABLE_S2 = "inseparable-s2"


CONDITION_CODES = frozenset(
    {
        "LABEL-IRRED",
        "NS-SING",
        "T2.4(1)",
        "T2.4(2)",
        "T2.41(1)",
        "T2.41(2)",
        "T2.41(3)",
        "T2.5",
        "T5.1(1)",
        "T5.1(2)",
        "T5.2(1)",
        "T5.2(1a)",
        "T5.2(1b)",
        "T5.2(1c)",
        "T5.2(2)",
        "T5.2(2a)",
        "T5.2(2b)",
        "T5.2(2c)",
        "T5.5(1)",
        "T5.5(2)",
        "T5.5(3)",
    }
)


@dataclass(frozen=True)
class Violation:
    """One broken condition: code, subject id, numbers, and the rule text."""

    code: str
    subject: str | None
    detail: str
    citation: str


@dataclass(frozen=True)
class Verdict:
    model: Model
    accepted: bool
    regime: Regime | None
    violations: tuple[Violation, ...]


def _verdict(
    model: Model, violations: list[Violation], regime: Regime | None = None
) -> Verdict:
    ordered = tuple(
        sorted(violations, key=lambda v: (v.code, v.subject or "", v.detail))
    )
    accepted = not ordered
    return Verdict(
        model=model,
        accepted=accepted,
        regime=regime,
        violations=ordered,
    )


@lru_cache(maxsize=4096)
def _k_of(matrix: Matrix) -> int:
    return k_invariant(matrix).k


@lru_cache(maxsize=4096)
def _irreducible(matrix: Matrix) -> bool:
    return is_irreducible(matrix)


def _sorted_vertices(graph: LyapunovGraph):
    return sorted(graph.vertices, key=lambda item: item[0])


def _saddle_vertices(graph: LyapunovGraph):
    for v, label in _sorted_vertices(graph):
        if isinstance(label, Ssft):
            yield v, label.matrix, vertex_context(graph, v), _k_of(label.matrix)


def _admission_violations(
    graph: LyapunovGraph, allow_singularities: bool
) -> list[Violation]:
    out = []
    for v, label in _sorted_vertices(graph):
        if isinstance(label, Ssft) and not _irreducible(label.matrix):
            out.append(
                Violation(
                    code="LABEL-IRRED",
                    subject=v,
                    detail=f"matrix_size={len(label.matrix)}",
                    citation="saddle vertex labels must be irreducible matrices",
                )
            )
        if isinstance(label, Singularity) and not allow_singularities:
            out.append(
                Violation(
                    code="NS-SING",
                    subject=v,
                    detail=f"index={label.index}",
                    citation="a nonsingular flow admits no rest points",
                )
            )
    return out


def _tree_violations(graph: LyapunovGraph, code: str) -> list[Violation]:
    b = betti1(graph)
    if b == 0:
        return []
    return [
        Violation(
            code=code,
            subject=None,
            detail=f"beta1={b}",
            citation="the underlying graph must be a tree",
        )
    ]


def _betti_one_violations(graph: LyapunovGraph, code: str) -> list[Violation]:
    b = betti1(graph)
    if b == 1:
        return []
    return [
        Violation(
            code=code,
            subject=None,
            detail=f"beta1={b}",
            citation="the underlying graph must have first Betti number 1",
        )
    ]


def _orbit_rule_violations(
    graph: LyapunovGraph, code: str, include_extreme_singularities: bool = False
) -> list[Violation]:
    """Attractors carry exactly one incoming edge, repellers one outgoing."""
    out = []
    for v, label in _sorted_vertices(graph):
        sink_like = isinstance(label, SinkOrbit) or (
            include_extreme_singularities
            and isinstance(label, Singularity)
            and label.index == 0
        )
        source_like = isinstance(label, SourceOrbit) or (
            include_extreme_singularities
            and isinstance(label, Singularity)
            and label.index == 3
        )
        if not (sink_like or source_like):
            continue
        ctx = vertex_context(graph, v)
        if sink_like and not (ctx.e_plus == 1 and ctx.e_minus == 0):
            out.append(
                Violation(
                    code=code,
                    subject=v,
                    detail=f"e_plus={ctx.e_plus} e_minus={ctx.e_minus}",
                    citation="an attractor vertex has exactly one edge, incoming",
                )
            )
        if source_like and not (ctx.e_minus == 1 and ctx.e_plus == 0):
            out.append(
                Violation(
                    code=code,
                    subject=v,
                    detail=f"e_plus={ctx.e_plus} e_minus={ctx.e_minus}",
                    citation="a repeller vertex has exactly one edge, outgoing",
                )
            )
    return out


def _unit_weight_violations(graph: LyapunovGraph, code: str) -> list[Violation]:
    out = []
    for e in sorted(graph.edges, key=lambda e: e.id):
        if e.weight != 1:
            out.append(
                Violation(
                    code=code,
                    subject=e.id,
                    detail=f"weight={e.weight}",
                    citation="every edge weight must be 1 (torus level sets)",
                )
            )
    return out


def _saddle_bound_violations(
    vertex: str, ctx: VertexContext, k: int, code: str, lower_gap: int
) -> list[Violation]:
    """The inequalities 0 < e+ <= k+1, 0 < e- <= k+1, k+1-lower_gap <= e+ + e-.

    ``lower_gap`` 0 gives the strict saddle bounds, 1 the relaxed bound
    k <= e+ + e- used by the separable regime.
    """
    out = []
    numbers = f"e_plus={ctx.e_plus} e_minus={ctx.e_minus} k={k}"
    if not 0 < ctx.e_plus <= k + 1:
        out.append(
            Violation(
                code=code,
                subject=vertex,
                detail=f"0 < e_plus <= k+1 fails: {numbers}",
                citation="saddle vertices satisfy 0 < e_plus <= k+1",
            )
        )
    if not 0 < ctx.e_minus <= k + 1:
        out.append(
            Violation(
                code=code,
                subject=vertex,
                detail=f"0 < e_minus <= k+1 fails: {numbers}",
                citation="saddle vertices satisfy 0 < e_minus <= k+1",
            )
        )
    bound = k + 1 - lower_gap
    if not bound <= ctx.e_plus + ctx.e_minus:
        rule = "k+1 <= e_plus+e_minus" if lower_gap == 0 else "k <= e_plus+e_minus"
        out.append(
            Violation(
                code=code,
                subject=vertex,
                detail=f"{rule} fails: {numbers}",
                citation=f"saddle vertices satisfy {rule}",
            )
        )
    return out


def check_ns_s3(graph: LyapunovGraph) -> Verdict:
    """Nonsingular flow on the 3-sphere.

    Accepted iff the graph is a tree with unit edge weights, attractor and
    repeller orbits carry exactly one edge, there are no singularity
    labels, and every saddle vertex satisfies 0 < e+ <= k+1,
    0 < e- <= k+1 and k+1 <= e+ + e-.
    """
    violations = _admission_violations(graph, allow_singularities=False)
    violations += _tree_violations(graph, "T2.4(1)")
    violations += _orbit_rule_violations(graph, "T2.4(1)")
    violations += _unit_weight_violations(graph, "T2.4(1)")
    for v, _, ctx, k in _saddle_vertices(graph):
        violations += _saddle_bound_violations(v, ctx, k, "T2.4(2)", lower_gap=0)
    return _verdict(Model.NS_S3, violations)


def _index_balance(ctx: VertexContext) -> int:
    return ctx.e_plus - ctx.e_minus - sum(ctx.g_plus) + sum(ctx.g_minus)


def check_smale_s3(graph: LyapunovGraph) -> Verdict:
    """Flow with possible rest points on the 3-sphere.

    Tree structure with one edge at each attractor/repeller (closed orbit
    or rest point of index 0/3); saddle vertices satisfy the weighted
    inequalities; every vertex satisfies the index balance
    (-1)^r = e+ - e- - sum(g+) + sum(g-) with r read as the singularity
    index, and 0 for orbits and saddles.
    """
    violations = _admission_violations(graph, allow_singularities=True)
    violations += _tree_violations(graph, "T2.41(1)")
    violations += _orbit_rule_violations(
        graph, "T2.41(1)", include_extreme_singularities=True
    )

    for v, _, ctx, k in _saddle_vertices(graph):
        numbers = (
            f"e_plus={ctx.e_plus} e_minus={ctx.e_minus} k={k} "
            f"sum_g_plus={sum(ctx.g_plus)} sum_g_minus={sum(ctx.g_minus)}"
        )
        if not (ctx.e_plus > 0 and ctx.e_minus > 0):
            violations.append(
                Violation(
                    code="T2.41(2)",
                    subject=v,
                    detail=f"e_plus > 0 and e_minus > 0 fail: {numbers}",
                    citation="saddle vertices have entering and exiting edges",
                )
            )
        if not (k + 1 - sum(ctx.g_minus) <= ctx.e_plus <= k + 1):
            violations.append(
                Violation(
                    code="T2.41(2)",
                    subject=v,
                    detail=f"k+1-sum(g_minus) <= e_plus <= k+1 fails: {numbers}",
                    citation="saddle vertices satisfy k+1-sum(g-) <= e+ <= k+1",
                )
            )
        if not (k + 1 - sum(ctx.g_plus) <= ctx.e_minus <= k + 1):
            violations.append(
                Violation(
                    code="T2.41(2)",
                    subject=v,
                    detail=f"k+1-sum(g_plus) <= e_minus <= k+1 fails: {numbers}",
                    citation="saddle vertices satisfy k+1-sum(g+) <= e- <= k+1",
                )
            )

    for v, label in _sorted_vertices(graph):
        ctx = vertex_context(graph, v)
        balance = _index_balance(ctx)
        expected = (-1) ** label.index if isinstance(label, Singularity) else 0
        if balance != expected:
            violations.append(
                Violation(
                    code="T2.41(3)",
                    subject=v,
                    detail=(
                        f"index balance {balance} != {expected}: "
                        f"e_plus={ctx.e_plus} e_minus={ctx.e_minus} "
                        f"sum_g_plus={sum(ctx.g_plus)} sum_g_minus={sum(ctx.g_minus)}"
                    ),
                    citation=(
                        "every vertex satisfies the index balance "
                        "e+ - e- - sum(g+) + sum(g-) = (-1)^r, with 0 for orbits"
                        " and saddles"
                    ),
                )
            )
    return _verdict(Model.SMALE_S3, violations)


def check_ns_s1s2_t2(graph: LyapunovGraph) -> Verdict:
    """Twisted-product model, regime with an inseparable torus level set."""
    violations = _admission_violations(graph, allow_singularities=False)
    violations += _betti_one_violations(graph, "T5.1(1)")
    violations += _orbit_rule_violations(graph, "T5.1(1)")
    violations += _unit_weight_violations(graph, "T5.1(1)")
    for v, _, ctx, k in _saddle_vertices(graph):
        violations += _saddle_bound_violations(v, ctx, k, "T5.1(2)", lower_gap=0)
    return _verdict(Model.NS_S1XS2, violations, regime=Regime.INSEPARABLE_T2)


def check_ns_s1s2_s2(graph: LyapunovGraph) -> Verdict:
    """Twisted-product model, regime with an inseparable sphere level set.

    Cycle edges carry weights 0 or 2 with at least one of each, the two
    weights use opposite orientation classes of the cycle, all other
    edges have weight 1, and each saddle vertex satisfies the case split
    on its incident weight-0 / weight-2 edges.
    """
    violations = _admission_violations(graph, allow_singularities=False)
    violations += _orbit_rule_violations(graph, "T5.2(1)")

    if betti1(graph) != 1:
        violations += _betti_one_violations(graph, "T5.2(1)")
        return _verdict(Model.NS_S1XS2, violations, regime=Regime.INSEPARABLE_S2)

    cycle = unique_cycle(graph)
    cycle_ids = cycle.edge_ids

    weights_on_cycle = {e.weight for e in cycle.edges}
    for step in cycle.steps:
        if step.edge.weight not in (0, 2):
            violations.append(
                Violation(
                    code="T5.2(1a)",
                    subject=step.edge.id,
                    detail=f"weight={step.edge.weight}",
                    citation="cycle edges carry weight 0 or 2",
                )
            )
    for needed in (0, 2):
        if needed not in weights_on_cycle:
            violations.append(
                Violation(
                    code="T5.2(1a)",
                    subject=None,
                    detail=f"missing_cycle_weight={needed}",
                    citation="the cycle carries at least one weight-0 and one"
                    " weight-2 edge",
                )
            )

    classes_w0 = {s.forward for s in cycle.steps if s.edge.weight == 0}
    classes_w2 = {s.forward for s in cycle.steps if s.edge.weight == 2}
    if classes_w0 & classes_w2:
        violations.append(
            Violation(
                code="T5.2(1b)",
                subject=None,
                detail="a weight-0 and a weight-2 cycle edge share an"
                " orientation class",
                citation="weight-0 cycle edges run against weight-2 cycle edges",
            )
        )

    for e in sorted(graph.edges, key=lambda e: e.id):
        if e.id not in cycle_ids and e.weight != 1:
            violations.append(
                Violation(
                    code="T5.2(1c)",
                    subject=e.id,
                    detail=f"weight={e.weight}",
                    citation="every edge off the cycle has weight 1",
                )
            )

    for v, _, ctx, k in _saddle_vertices(graph):
        numbers = f"e_plus={ctx.e_plus} e_minus={ctx.e_minus} k={k}"
        if not 0 < ctx.e_plus <= k + 1:
            violations.append(
                Violation(
                    code="T5.2(2)",
                    subject=v,
                    detail=f"0 < e_plus <= k+1 fails: {numbers}",
                    citation="saddle vertices satisfy 0 < e_plus <= k+1",
                )
            )
        if not 0 < ctx.e_minus <= k + 1:
            violations.append(
                Violation(
                    code="T5.2(2)",
                    subject=v,
                    detail=f"0 < e_minus <= k+1 fails: {numbers}",
                    citation="saddle vertices satisfy 0 < e_minus <= k+1",
                )
            )

        starts = {e.weight for e in graph.out_edges[v]}
        ends = {e.weight for e in graph.in_edges[v]}
        case_a = 0 in starts and 0 in ends
        case_b = 2 in starts and 2 in ends
        total = ctx.e_plus + ctx.e_minus
        if case_a:
            # If both cases hold (possible only on malformed weight data,
            # already flagged by 1c), the stricter bound applies.
            note = " (weight-2 case also present)" if case_b else ""
            if not k + 2 <= total:
                violations.append(
                    Violation(
                        code="T5.2(2a)",
                        subject=v,
                        detail=f"k+2 <= e_plus+e_minus fails: {numbers}{note}",
                        citation="a vertex with weight-0 edges both entering"
                        " and exiting satisfies k+2 <= e+ + e-",
                    )
                )
        elif case_b:
            if not k <= total:
                violations.append(
                    Violation(
                        code="T5.2(2b)",
                        subject=v,
                        detail=f"k <= e_plus+e_minus fails: {numbers}",
                        citation="a vertex with weight-2 edges both entering"
                        " and exiting satisfies k <= e+ + e-",
                    )
                )
        else:
            if not k + 1 <= total:
                violations.append(
                    Violation(
                        code="T5.2(2c)",
                        subject=v,
                        detail=f"k+1 <= e_plus+e_minus fails: {numbers}",
                        citation="other saddle vertices satisfy k+1 <= e+ + e-",
                    )
                )

    return _verdict(Model.NS_S1XS2, violations, regime=Regime.INSEPARABLE_S2)


def check_ns_s1s2_separable(graph: LyapunovGraph) -> Verdict:
    """Twisted-product model, regime where every level set separates."""
    violations = _admission_violations(graph, allow_singularities=False)
    violations += _tree_violations(graph, "T5.5(1)")
    violations += _orbit_rule_violations(graph, "T5.5(1)")
    violations += _unit_weight_violations(graph, "T5.5(1)")

    extremal: list[str] = []
    for v, _, ctx, k in _saddle_vertices(graph):
        violations += _saddle_bound_violations(v, ctx, k, "T5.5(2)", lower_gap=1)
        if k == ctx.e_plus + ctx.e_minus:
            extremal.append(v)
    if len(extremal) > 1:
        violations.append(
            Violation(
                code="T5.5(3)",
                subject=None,
                detail=f"extremal_vertices={','.join(extremal)}",
                citation="at most one vertex satisfies k = e+ + e-",
            )
        )
    return _verdict(Model.NS_S1XS2, violations, regime=Regime.SEPARABLE)


def check_ns_s1s2(graph: LyapunovGraph) -> Verdict:
    """Dispatch to the regime checker a graph could only belong to.

    Trees go to the separable checker; first-Betti-number-one graphs with
    unit weights to the torus regime, otherwise to the sphere regime
    (the only regime admitting non-unit weights); graphs with first Betti
    number 2 or more are rejected outright, since the target manifold has
    first Betti number 1.
    """
    b = betti1(graph)
    if b >= 2:
        violations = _admission_violations(graph, allow_singularities=False)
        violations.append(
            Violation(
                code="T2.5",
                subject=None,
                detail=f"beta1={b}",
                citation="the graph's first Betti number is bounded by the"
                " manifold's, which is 1",
            )
        )
        return _verdict(Model.NS_S1XS2, violations, regime=None)
    if b == 0:
        return check_ns_s1s2_separable(graph)
    if all(e.weight == 1 for e in graph.edges):
        return check_ns_s1s2_t2(graph)
    return check_ns_s1s2_s2(graph)


def classify_singular_vertices(graph: LyapunovGraph) -> tuple[tuple[str, bool], ...]:
    """Flag saddle vertices that cannot sit in a link-complement neighborhood.

    A saddle vertex is forced singular when it breaks one of
    0 < e+ <= k+1, 0 < e- <= k+1, k+1 <= e+ + e-.  Orbit and rest-point
    vertices are never flagged.
    """
    flags = []
    for v, label in _sorted_vertices(graph):
        flagged = False
        if isinstance(label, Ssft):
            ctx = vertex_context(graph, v)
            k = _k_of(label.matrix)
            flagged = not (
                0 < ctx.e_plus <= k + 1
                and 0 < ctx.e_minus <= k + 1
                and k + 1 <= ctx.e_plus + ctx.e_minus
            )
        flags.append((v, flagged))
    return tuple(flags)


def singular_forced_count(graph: LyapunovGraph) -> int:
    return sum(1 for _, flagged in classify_singular_vertices(graph) if flagged)


# -- homological bounds ------------------------------------------------------

@dataclass(frozen=True)
class HomologyBoundsInput:
    """Vertex counts plus user-supplied mod-2 homology dimensions.

    ``y`` refers to the piece above the vertex's level, ``z`` to the piece
    below; the library never computes manifold homology itself.
    """

    e_plus: int
    e_minus: int
    k: int
    dim_h1_m: int
    dim_h1_y: int
    dim_h2_y: int
    dim_h1_z: int
    dim_h2_z: int

    def __post_init__(self):
        for name in (
            "e_plus",
            "e_minus",
            "k",
            "dim_h1_m",
            "dim_h1_y",
            "dim_h2_y",
            "dim_h1_z",
            "dim_h2_z",
        ):
            if getattr(self, name) < 0:
                raise NegativeDimensionError(f"{name} must be >= 0")


@dataclass(frozen=True)
class BoundCheck:
    code: str
    description: str
    lhs: int
    rhs: int
    passed: bool


@dataclass(frozen=True)
class BoundsReport:
    checks: tuple[BoundCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)


def _bound(code: str, description: str, lhs: int, rhs: int) -> BoundCheck:
    return BoundCheck(
        code=code, description=description, lhs=lhs, rhs=rhs, passed=lhs <= rhs
    )


def homological_bounds(inp: HomologyBoundsInput) -> BoundsReport:
    """The four filtration-pair inequalities relating e+, e-, k and the
    homology of the pieces above and below a saddle level."""
    checks = (
        _bound(
            "P3.3(1)",
            "e_plus <= k + 1 + dimH2(Z) + dimH2(Y)",
            inp.e_plus,
            inp.k + 1 + inp.dim_h2_z + inp.dim_h2_y,
        ),
        _bound(
            "P3.3(2)",
            "e_minus <= k + 1 + dimH2(Z) + dimH2(Y)",
            inp.e_minus,
            inp.k + 1 + inp.dim_h2_z + inp.dim_h2_y,
        ),
        _bound(
            "P3.3(3)",
            "k <= e_plus - 1 + dimH1(M) + dimH1(Z) - dimH2(Z)",
            inp.k,
            inp.e_plus - 1 + inp.dim_h1_m + inp.dim_h1_z - inp.dim_h2_z,
        ),
        _bound(
            "P3.3(4)",
            "k <= e_minus - 1 + dimH1(M) + dimH1(Y) - dimH2(Y)",
            inp.k,
            inp.e_minus - 1 + inp.dim_h1_m + inp.dim_h1_y - inp.dim_h2_y,
        ),
    )
    return BoundsReport(checks=checks)


def knot_complement_input(
    e_plus: int, e_minus: int, k: int, dim_h1_m: int
) -> HomologyBoundsInput:
    """Preset: every piece above and below is a knot complement.

    A knot complement has first mod-2 homology of dimension 1 and trivial
    second homology, and exactly one boundary torus, so the upper piece
    has e+ components and the lower one e-.
    """
    return HomologyBoundsInput(
        e_plus=e_plus,
        e_minus=e_minus,
        k=k,
        dim_h1_m=dim_h1_m,
        dim_h1_y=e_plus,
        dim_h2_y=0,
        dim_h1_z=e_minus,
        dim_h2_z=0,
    )


def knot_complement_bounds(
    e_plus: int, e_minus: int, k: int, dim_h1_m: int
) -> BoundsReport:
    """The four inequalities under the knot-complement preset plus the
    specialized corollary bounds they reduce to."""
    inp = knot_complement_input(e_plus, e_minus, k, dim_h1_m)
    base = homological_bounds(inp)
    extra = (
        _bound("C3.5(1)", "e_plus <= k + 1", e_plus, k + 1),
        _bound("C3.5(2)", "e_minus <= k + 1", e_minus, k + 1),
        _bound(
            "C3.5(3)",
            "k + 1 <= e_plus + e_minus + dimH1(M)",
            k + 1,
            e_plus + e_minus + dim_h1_m,
        ),
    )
    return BoundsReport(checks=base.checks + extra)


# -- weight obstruction ------------------------------------------------------

@dataclass(frozen=True)
class WeightBoundReport:
    summands: int
    max_weight: int
    beta1: int
    weight_ok: bool
    betti_ok: bool

    @property
    def passed(self) -> bool:
        return self.weight_ok and self.betti_ok


def weight_bound_check(graph: LyapunovGraph, summands: int) -> WeightBoundReport:
    """Necessary conditions on edge weights for a manifold with the given
    number of twisted-product connected summands.

    A genus-g level set needs g-1 summands, so every weight is at most
    summands+1 and the first Betti number is at least max_weight - 1.
    """
    if summands < 0:
        raise ValueError("summands must be >= 0")
    max_weight = max((e.weight for e in graph.edges), default=0)
    b = betti1(graph)
    return WeightBoundReport(
        summands=summands,
        max_weight=max_weight,
        beta1=b,
        weight_ok=max_weight <= summands + 1,
        betti_ok=b >= max_weight - 1,
    )
