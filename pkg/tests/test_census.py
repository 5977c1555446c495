"""Census enumeration: class counts, dedup, determinism, table format."""

from __future__ import annotations

import pytest

from lyapgraph import (
    BoundsTooLargeError,
    CensusBounds,
    canonical_key,
    census_csv_lines,
    classify_graph,
    enumerate_graphs,
    iter_census,
    run_census,
    ssft_universe,
)
from conftest import (
    brute_force_isomorphic,
    make_equality,
    make_gradient,
    make_hopf,
    make_lorenz,
    make_parallel,
    make_sphere,
)


def test_two_vertex_hand_enumeration():
    # With sink/source kinds and one edge of weight <= 1, the only
    # two-vertex classes are source -> sink with weight 0 or 1.
    bounds = CensusBounds(
        max_vertices=2,
        max_parallel_edges=1,
        max_weight=1,
        kinds=("sink-orbit", "source-orbit"),
    )
    rows = run_census(bounds).rows
    two_vertex = [r for r in rows if r.key.count("|") == 1]
    assert len(two_vertex) == 2
    assert {r.key for r in two_vertex} == {
        "V=sink-orbit|source-orbit;E=1>0w0",
        "V=sink-orbit|source-orbit;E=1>0w1",
    }
    # The single-vertex classes are census citizens too (rejected by all).
    assert len(rows) == 4


def test_single_sink_census():
    bounds = CensusBounds(max_vertices=1, kinds=("sink-orbit",))
    result = run_census(bounds)
    assert len(result.rows) == 1
    row = result.rows[0]
    assert not (row.ns_s3 or row.smale_s3 or row.s1s2)


def test_empty_kinds_give_empty_census():
    bounds = CensusBounds(max_vertices=2, kinds=())
    assert run_census(bounds).rows == ()


def test_invalid_bounds():
    with pytest.raises(ValueError):
        CensusBounds(max_vertices=0)
    with pytest.raises(ValueError):
        CensusBounds(max_vertices=2, kinds=("nope",))


def test_bounds_too_large():
    bounds = CensusBounds(max_vertices=3, max_candidates=5)
    with pytest.raises(BoundsTooLargeError):
        list(enumerate_graphs(bounds))


def test_ssft_universe_small_counts():
    # Size 1: [1], [2].  Size 2: strong connectivity forces both
    # off-diagonal entries positive; 36 matrices fold to 21 under the swap.
    universe = ssft_universe(2, 2)
    assert len(universe) == 23
    ones = [m for m in universe if len(m) == 1]
    assert ones == [((1,),), ((2,),)]
    assert ((1, 2), (2, 1)) in universe


def test_enumeration_deterministic():
    bounds = CensusBounds(max_vertices=3)
    first = [canonical_key(g) for g in enumerate_graphs(bounds)]
    second = [canonical_key(g) for g in enumerate_graphs(bounds)]
    assert first == second


def test_no_duplicate_classes_brute_force():
    bounds = CensusBounds(max_vertices=3)
    graphs = list(enumerate_graphs(bounds))
    assert len(graphs) <= 500
    keys = [canonical_key(g) for g in graphs]
    assert len(set(keys)) == len(keys)
    for i in range(len(graphs)):
        for j in range(i + 1, len(graphs)):
            assert not brute_force_isomorphic(graphs[i], graphs[j])


def test_canonical_key_matches_census_rows():
    bounds = CensusBounds(max_vertices=3)
    for graph, row in iter_census(bounds):
        assert canonical_key(graph) == row.key


def test_rows_agree_with_direct_checks():
    bounds = CensusBounds(max_vertices=3)
    for graph, row in iter_census(bounds):
        assert row == classify_graph(graph)


def test_named_graphs_appear_with_stated_verdicts():
    bounds = CensusBounds(max_vertices=4)
    wanted = {
        canonical_key(make_hopf()): ("hopf", True, True, "separable"),
        canonical_key(make_lorenz()): ("lorenz", True, True, "separable"),
        canonical_key(make_equality()): ("equality", False, True, "separable"),
        canonical_key(make_parallel()): ("parallel", False, True, "inseparable-t2"),
        canonical_key(make_sphere()): ("sphere", False, True, "inseparable-s2"),
    }
    found = {}
    for _, row in iter_census(bounds):
        if row.key in wanted:
            found[row.key] = row
    assert set(found) == set(wanted)
    for key, (name, ns, s1s2, regime) in wanted.items():
        row = found[key]
        assert row.ns_s3 is ns, name
        assert row.s1s2 is s1s2, name
        assert row.regime == regime, name


def test_gradient_appears_in_singularity_census():
    bounds = CensusBounds(
        max_vertices=2, max_weight=2, kinds=("singularity-0", "singularity-3")
    )
    key = canonical_key(make_gradient())
    rows = {row.key: row for _, row in iter_census(bounds)}
    assert key in rows
    assert rows[key].smale_s3
    assert not rows[key].ns_s3


def test_csv_format():
    bounds = CensusBounds(
        max_vertices=2,
        max_parallel_edges=1,
        max_weight=1,
        kinds=("sink-orbit", "source-orbit"),
    )
    lines = list(census_csv_lines(run_census(bounds).rows))
    assert lines[0] == "key,beta1,ns_s3,smale_s3,s1s2,regime,singular_forced_count"
    for line in lines[1:]:
        assert len(line.split(",")) == 7


def test_summary_counts():
    bounds = CensusBounds(max_vertices=3)
    result = run_census(bounds)
    assert result.summary.total == len(result.rows)
    assert result.summary.ns_s3_accepted == sum(1 for r in result.rows if r.ns_s3)
    regimes = dict(result.summary.regime_counts)
    assert sum(regimes.values()) == result.summary.s1s2_accepted
