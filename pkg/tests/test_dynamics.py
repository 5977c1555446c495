"""State splittings, certificates and the normalization search."""

from __future__ import annotations

import random

import pytest

from lyapgraph import (
    BudgetExhaustedError,
    EmptyBlockError,
    IndexOutOfRangeError,
    NotAPartitionError,
    NotIrreducibleError,
    SplitCertificate,
    bowen_franks_mod2,
    in_split,
    is_irreducible,
    k_invariant,
    normalize_matrix,
    out_split,
    parse_matrix_literal,
    verify_certificate,
)
from lyapgraph.dynamics import matrix_literal
from conftest import random_irreducible


def test_irreducibility_hand_cases():
    assert is_irreducible([[0, 1], [1, 0]])
    assert not is_irreducible([[1, 1], [0, 1]])
    assert not is_irreducible([[0]])
    assert is_irreducible([[1]])
    assert is_irreducible([[2]])


def test_out_split_full_shift():
    # Splitting the two self-arcs of [[2]] into singletons gives the
    # standard two-state presentation of the same shift.
    result, step = out_split([[2]], 0, [(1,), (1,)])
    assert result == ((1, 1), (1, 1))
    assert step.kind == "out"
    assert verify_certificate([[2]], result, SplitCertificate((step,)))


def test_out_split_single_block_is_identity():
    for matrix in ([[2]], [[0, 1], [1, 0]], [[1, 2], [2, 1]]):
        result, _ = out_split(matrix, 0, [tuple(matrix[0])])
        assert result == tuple(tuple(row) for row in matrix)


def test_out_split_golden_mean():
    # Hand replay of the definition: state 0 of [[1,1],[1,0]] split into
    # its two outgoing arcs; copies receive duplicated incoming columns.
    result, _ = out_split([[1, 1], [1, 0]], 0, [(1, 0), (0, 1)])
    assert result == ((1, 1, 0), (0, 0, 1), (1, 1, 0))


def test_out_split_grows_size_per_block():
    matrix = [[1, 2], [2, 1]]
    result, _ = out_split(matrix, 0, [(1, 0), (0, 1), (0, 1)])
    assert len(result) == 4


def test_split_validation_errors():
    with pytest.raises(IndexOutOfRangeError):
        out_split([[2]], 1, [(1,), (1,)])
    with pytest.raises(EmptyBlockError):
        out_split([[2]], 0, [(2,), (0,)])
    with pytest.raises(NotAPartitionError):
        out_split([[2]], 0, [(1,), (2,)])
    with pytest.raises(NotAPartitionError):
        out_split([[2]], 0, [])
    with pytest.raises(NotAPartitionError):
        out_split([[2]], 0, [(1, 0), (1, 0)])


def test_in_split_is_transpose_dual():
    matrix = [[1, 2], [2, 1]]
    direct, _ = in_split(matrix, 0, [(1, 0), (0, 2)])
    transposed = tuple(zip(*matrix))
    dual, _ = out_split(transposed, 0, [(1, 0), (0, 2)])
    assert direct == tuple(zip(*dual))


def test_verify_certificate_empty():
    assert verify_certificate([[2]], [[2]], SplitCertificate())
    result = verify_certificate([[2]], [[3]], SplitCertificate())
    assert not result
    assert result.failed_step == 0


def test_verify_certificate_detects_tampering():
    result, step = out_split([[2]], 0, [(1,), (1,)])
    tampered = step.__class__(
        kind=step.kind, state=step.state, blocks=step.blocks, result=((1, 1), (1, 2))
    )
    replay = verify_certificate([[2]], ((1, 1), (1, 2)), SplitCertificate((tampered,)))
    assert not replay
    assert replay.failed_step == 0
    assert "differs" in replay.reason


def test_certificate_text_round_trip():
    m1, s1 = out_split([[1, 2], [2, 1]], 0, [(1, 0), (0, 2)])
    m2, s2 = in_split(m1, 1, [(1, 0, 0), (0, 0, 2)])
    cert = SplitCertificate((s1, s2))
    parsed = SplitCertificate.from_text(cert.to_text())
    assert parsed == cert
    assert verify_certificate([[1, 2], [2, 1]], m2, parsed)


def test_matrix_literal_round_trip():
    for text in ("0,1;1,0", "2", "1,2,0;0,1,1;3,0,1"):
        assert matrix_literal(parse_matrix_literal(text)) == text


def test_split_preserves_invariants_randomized():
    rng = random.Random(11)
    for _ in range(400):
        matrix = random_irreducible(rng, 5, 3)
        size = len(matrix)
        state = rng.randrange(size)
        row = matrix[state]
        partitions = _all_two_block_partitions(row)
        blocks = rng.choice(partitions) if partitions else (tuple(row),)
        split, step = out_split(matrix, state, blocks)
        assert k_invariant(split).k == k_invariant(matrix).k
        assert bowen_franks_mod2(split) == bowen_franks_mod2(matrix)
        assert is_irreducible(split)
        assert verify_certificate(matrix, split, SplitCertificate((step,)))


def _all_two_block_partitions(row):
    from itertools import product as iproduct

    total = tuple(row)
    out = []
    for first in iproduct(*[range(x + 1) for x in total]):
        second = tuple(t - f for t, f in zip(total, first))
        if any(first) and any(second):
            out.append((first, second))
    return out


def test_normalize_already_normal():
    result, cert = normalize_matrix([[1, 2], [2, 1]], 0)
    assert result == ((1, 2), (2, 1))
    assert len(cert) == 0


def test_normalize_trivial_one_by_one():
    result, cert = normalize_matrix([[2]], 0)
    assert result == ((2,),)
    assert verify_certificate([[2]], result, cert)
    assert k_invariant(result).k == k_invariant([[2]]).k == 0


def test_normalize_zero_budget_exhausts():
    with pytest.raises(BudgetExhaustedError):
        normalize_matrix([[0, 1], [1, 0]], 3, budget=0)


def test_normalize_requires_irreducible():
    with pytest.raises(NotIrreducibleError):
        normalize_matrix([[1, 1], [0, 1]], 0)


def test_normalize_odd_off_diagonal_shortcut():
    # An odd off-diagonal entry survives every splitting, so the search
    # reports immediately instead of burning its budget.
    with pytest.raises(BudgetExhaustedError) as info:
        normalize_matrix([[2, 1], [1, 2]], 0, budget=10_000)
    assert info.value.moves == 0


def test_normalize_periodic_shortcut():
    with pytest.raises(BudgetExhaustedError) as info:
        normalize_matrix([[0, 2], [2, 0]], 0)
    assert info.value.moves == 0


def test_normalize_search_runs_and_stays_sound():
    # All-even off-diagonals with a too-small diagonal: the bounded search
    # has genuine work to do; either outcome must respect the contract.
    try:
        result, cert = normalize_matrix([[2, 4], [4, 2]], 2, budget=500)
    except BudgetExhaustedError as err:
        assert err.moves <= 500
    else:
        assert verify_certificate([[2, 4], [4, 2]], result, cert)
        assert all(x > 2 for row in result for x in row)


def test_normalize_deterministic():
    outcomes = []
    for _ in range(2):
        try:
            outcomes.append(normalize_matrix([[2, 2], [2, 2]], 1, budget=300))
        except BudgetExhaustedError as err:
            outcomes.append(("exhausted", err.moves))
    assert outcomes[0] == outcomes[1]
