"""Acceptance suite: one test per criterion, each printing a PASS line.

Criteria 2-5 share a single streaming pass over the standard census
(at most 4 vertices, 2 parallel edges, 2x2 matrices with entries up to 2,
weights up to 2); the pass also performs the round-trip half of
criterion 9.  Run with ``pytest tests/test_acceptance.py -v -s``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

import pytest

from lyapgraph import (
    BudgetExhaustedError,
    CensusBounds,
    LgdParseError,
    LyapunovGraph,
    bowen_franks_mod2,
    canonical_key,
    check_ns_s1s2,
    check_ns_s1s2_separable,
    check_ns_s3,
    check_smale_s3,
    euler_cut_balance,
    down_set_cuts,
    is_irreducible,
    iter_census,
    k_invariant,
    normalize_matrix,
    out_split,
    parse_lgd,
    rank_gf2,
    serialize_lgd,
    unique_cycle,
    verify_certificate,
)
from conftest import (
    make_equality,
    make_gradient,
    make_hopf,
    make_lorenz,
    make_parallel,
    make_sphere,
    random_irreducible,
    random_matrix,
    rank_oracle,
)

CENSUS_BOUNDS = CensusBounds(
    max_vertices=4,
    max_parallel_edges=2,
    max_matrix_size=2,
    max_matrix_entry=2,
    max_weight=2,
)

# Hand count of the census classes at the standard bounds.
# n=1: sink, source = 2.  n=2: one arc, weight 0..2 = 3 (double arcs would
# give an orbit two edges).  n=3: chain source->saddle->sink, both arcs
# simple, 9 weight pairs x 23 saddle labels = 207.  n=4: chain with middle
# multiplicity 1 or 2 (81 weightings x 529 label pairs = 42849) plus the
# two-source and two-sink stars (18 weightings x 23 labels = 414 each).
EXPECTED_CLASSES = 2 + 3 + 207 + (81 * 529 + 414 + 414)


def announce(criterion: str, detail: str) -> None:
    print(f"ACCEPTANCE {criterion}: PASS [{detail}]")


@dataclass
class CensusAudit:
    total: int = 0
    elapsed: float = 0.0
    accepted_any: int = 0
    implication_failures: list[str] = field(default_factory=list)
    disjointness_failures: list[str] = field(default_factory=list)
    unbalanced: list[str] = field(default_factory=list)
    s2_cut_mismatches: list[str] = field(default_factory=list)
    dispatcher_singular: list[str] = field(default_factory=list)
    unit_weight_singular: list[str] = field(default_factory=list)
    roundtrip_failures: list[str] = field(default_factory=list)
    named_rows: dict = field(default_factory=dict)


def _audit_cut_structure(graph: LyapunovGraph, row, audit: CensusAudit) -> None:
    report = euler_cut_balance(graph)
    if not report.all_balanced:
        audit.unbalanced.append(row.key)
    if row.s2:
        cycle = unique_cycle(graph)
        weight_of = {s.edge.id: s.edge.weight for s in cycle.steps}
        for cut in down_set_cuts(graph):
            zeros = sum(
                1 for e in cut.cut_edges if e.id in weight_of and e.weight == 0
            )
            twos = sum(
                1 for e in cut.cut_edges if e.id in weight_of and e.weight == 2
            )
            if zeros != twos:
                audit.s2_cut_mismatches.append(row.key)
                break


@pytest.fixture(scope="module")
def census_audit() -> CensusAudit:
    named_keys = {
        canonical_key(make_hopf()): "hopf",
        canonical_key(make_lorenz()): "lorenz",
        canonical_key(make_equality()): "equality",
        canonical_key(make_parallel()): "parallel",
        canonical_key(make_sphere()): "sphere",
    }
    audit = CensusAudit()
    start = time.monotonic()
    for graph, row in iter_census(CENSUS_BOUNDS):
        audit.total += 1

        if parse_lgd(serialize_lgd(graph)) != graph:
            audit.roundtrip_failures.append(row.key)

        if row.ns_s3 and not row.separable:
            audit.implication_failures.append(row.key)

        if (row.t2 + row.s2 + row.separable) >= 2:
            audit.disjointness_failures.append(row.key)

        accepted = row.ns_s3 or row.smale_s3 or row.t2 or row.s2 or row.separable
        if accepted:
            audit.accepted_any += 1
            _audit_cut_structure(graph, row, audit)

        if row.s1s2 and row.singular_forced_count > 1:
            audit.dispatcher_singular.append(row.key)
        if (row.t2 or row.ns_s3) and row.singular_forced_count != 0:
            audit.unit_weight_singular.append(row.key)

        if row.key in named_keys:
            audit.named_rows[named_keys[row.key]] = row
    audit.elapsed = time.monotonic() - start
    return audit


def test_criterion_1_named_examples():
    start = time.monotonic()
    hopf, lorenz, equality = make_hopf(), make_lorenz(), make_equality()
    parallel, sphere, gradient = make_parallel(), make_sphere(), make_gradient()

    assert check_ns_s3(hopf).accepted

    assert check_ns_s3(lorenz).accepted
    assert check_ns_s1s2_separable(lorenz).accepted

    equality_ns = check_ns_s3(equality)
    assert not equality_ns.accepted
    assert [v.code for v in equality_ns.violations] == ["T2.4(2)"]
    assert check_ns_s1s2_separable(equality).accepted

    parallel_verdict = check_ns_s1s2(parallel)
    assert parallel_verdict.accepted
    assert parallel_verdict.regime.value == "inseparable-t2"

    sphere_verdict = check_ns_s1s2(sphere)
    assert sphere_verdict.accepted
    assert sphere_verdict.regime.value == "inseparable-s2"

    assert check_smale_s3(gradient).accepted

    elapsed = time.monotonic() - start
    assert elapsed < 1.0
    announce("criterion 1 (named examples)", f"6 graphs, {elapsed:.3f}s")


def test_criterion_2_implication_over_census(census_audit):
    assert census_audit.total == EXPECTED_CLASSES
    assert census_audit.implication_failures == []
    assert census_audit.elapsed < 300.0
    announce(
        "criterion 2 (NS-S3 implies separable)",
        f"0 counterexamples over {census_audit.total} classes,"
        f" census pass {census_audit.elapsed:.1f}s",
    )


def test_criterion_3_regime_disjointness(census_audit):
    assert census_audit.disjointness_failures == []
    announce(
        "criterion 3 (regime disjointness)",
        f"0 doubly accepted graphs over {census_audit.total} classes",
    )


def test_criterion_4_euler_cut_balance(census_audit):
    assert census_audit.unbalanced == []
    assert census_audit.s2_cut_mismatches == []
    announce(
        "criterion 4 (cut balance)",
        f"{census_audit.accepted_any} accepted graphs balanced,"
        " sphere-regime cuts pair weight-0 with weight-2 edges",
    )


def test_criterion_5_singular_vertex_bound(census_audit):
    assert census_audit.dispatcher_singular == []
    assert census_audit.unit_weight_singular == []
    announce(
        "criterion 5 (singular vertex bound)",
        "dispatcher-accepted graphs have at most 1 forced-singular vertex;"
        " unit-weight accepted graphs have 0",
    )


def test_criterion_6_gf2_correctness():
    rng = random.Random(2024)
    for _ in range(1000):
        size = rng.randint(1, 8)
        bits = tuple(
            tuple(rng.randint(0, 1) for _ in range(size)) for _ in range(size)
        )
        assert rank_gf2(bits) == rank_oracle(bits)
    for _ in range(1000):
        matrix = random_matrix(rng, rng.randint(1, 8), 6)
        pair = bowen_franks_mod2(matrix)
        assert pair[0] == pair[1]
        assert k_invariant(matrix).k == k_invariant(tuple(zip(*matrix))).k
    announce(
        "criterion 6 (GF(2) correctness)",
        "1000 rank-oracle matches, 1000 transpose/pair checks",
    )


def test_criterion_7_splitting_invariance():
    rng = random.Random(777)
    checked = 0
    while checked < 1000:
        matrix = random_irreducible(rng, 5, 3)
        state = rng.randrange(len(matrix))
        row = matrix[state]
        if sum(row) >= 2:
            split_point = rng.randint(1, sum(row) - 1)
            first = list(row)
            remaining = sum(row) - split_point
            second = [0] * len(row)
            j = len(row) - 1
            while remaining > 0 and j >= 0:
                take = min(first[j], remaining)
                first[j] -= take
                second[j] += take
                remaining -= take
                j -= 1
            blocks = (tuple(first), tuple(second))
            if not any(first):
                blocks = (tuple(row),)
        else:
            blocks = (tuple(row),)
        result, step = out_split(matrix, state, blocks)
        assert k_invariant(result).k == k_invariant(matrix).k
        assert bowen_franks_mod2(result) == bowen_franks_mod2(matrix)
        assert is_irreducible(result)
        checked += 1
    announce("criterion 7 (splitting invariance)", "1000 out-splits preserve k, bf2")


def test_criterion_8_normalization_soundness():
    rng = random.Random(4242)
    exhausted = 0
    succeeded = 0
    for _ in range(50):
        matrix = random_irreducible(rng, 3, 2)
        try:
            result, cert = normalize_matrix(matrix, 2)
        except BudgetExhaustedError:
            exhausted += 1
            continue
        succeeded += 1
        assert verify_certificate(matrix, result, cert)
        assert all(x > 2 for row in result for x in row)
        assert all(
            result[i][j] % 2 == 0
            for i in range(len(result))
            for j in range(len(result))
            if i != j
        )
        assert k_invariant(result).k == k_invariant(matrix).k
    assert exhausted + succeeded == 50
    announce(
        "criterion 8 (normalization soundness)",
        f"{succeeded} verified successes, {exhausted} spent budgets, no third"
        " outcome",
    )


def test_criterion_9_format_robustness(census_audit):
    assert census_audit.roundtrip_failures == []
    rng = random.Random(31337)
    for _ in range(100_000):
        text = rng.randbytes(rng.randint(0, 40)).decode("latin-1")
        try:
            result = parse_lgd(text)
        except LgdParseError:
            continue
        assert isinstance(result, LyapunovGraph)
    announce(
        "criterion 9 (format robustness)",
        f"round trip on {census_audit.total} census graphs, 100000 fuzz"
        " inputs without a crash",
    )


def test_criterion_10_cli_contract(tmp_path):
    import subprocess
    import sys

    def run(*args):
        return subprocess.run(
            [sys.executable, "-m", "lyapgraph", *args], capture_output=True
        )

    hopf_file = tmp_path / "hopf.lgd"
    hopf_file.write_text(serialize_lgd(make_hopf()), encoding="utf-8")
    equality_file = tmp_path / "equality.lgd"
    equality_file.write_text(serialize_lgd(make_equality()), encoding="utf-8")
    broken_file = tmp_path / "broken.lgd"
    broken_file.write_text("vertex ???\n", encoding="utf-8")

    script = [
        (("check", "--model", "ns-s3", str(hopf_file)), 0),
        (("check", "--model", "ns-s1xs2", str(equality_file)), 0),
        (("check", "--model", "ns-s3", str(equality_file)), 1),
        (("check", "--model", "ns-s3", str(broken_file)), 2),
        (("check", "--model", "ns-s3", str(tmp_path / "missing.lgd")), 2),
        (("matrix", "k", "1,2;2,1"), 0),
        (("matrix", "k", "1,2;2"), 2),
        (("normalize", "--target", "0", "1,2;2,1"), 0),
        (("normalize", "--target", "3", "0,1;1,0"), 3),
        (("cuts", str(hopf_file)), 0),
        (("singular", str(equality_file)), 1),
        (("bounds", "--e-plus", "1", "--e-minus", "1", "--k", "1",
          "--knot-complement", "--dim-h1-m", "1"), 0),
        (("frobnicate",), 2),
    ]
    outputs = []
    for args, expected in script:
        result = run(*args)
        assert result.returncode == expected, (args, result.stderr)
        outputs.append(result.stdout)
    for (args, expected), first_output in zip(script, outputs):
        rerun = run(*args)
        assert rerun.returncode == expected
        assert rerun.stdout == first_output
    announce(
        "criterion 10 (CLI contract)",
        f"{len(script)} scripted invocations, byte-identical reruns",
    )
