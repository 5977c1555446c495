"""Subshift matrices: irreducibility, state splitting, normal-form search.

An elementary out-splitting partitions the outgoing arc multiset of one
state of the arc digraph of a nonnegative integer matrix; the split state
is replaced by one copy per block, arcs into the state are duplicated to
every copy.  The subshift of the result is topologically conjugate to the
original, so every invariant computed by :mod:`lyapgraph.gf2` is
preserved.  In-splitting is the same move on the transpose.

Chains of splittings are recorded as replayable certificates: trust comes
from replaying the definition against the recorded intermediates, not
from the search strategy that produced the chain.

Two facts shape :func:`normalize_matrix`.  Splittings never increase any
matrix entry (new rows are partition blocks of old rows, new columns are
copies of old columns), and an odd off-diagonal entry survives every
splitting (an odd count splits into at least one odd block and copies
stay odd).  The search therefore reports a spent budget as soon as the
requested normal form is provably out of reach of splittings, and
otherwise runs a bounded breadth-first search.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .errors import (
    BudgetExhaustedError,
    EmptyBlockError,
    IndexOutOfRangeError,
    NotAPartitionError,
    NotIrreducibleError,
)
from .gf2 import Matrix, MatrixLike, as_matrix, k_invariant, require_square_nonneg

Blocks = tuple[tuple[int, ...], ...]

DEFAULT_BUDGET = 10_000


def is_irreducible(a: MatrixLike) -> bool:
    """True iff the arc digraph (arc i->j iff a_ij > 0) is strongly
    connected and has at least one arc.

    A 1x1 matrix [a] is irreducible iff a >= 1.
    """
    m = as_matrix(a)
    require_square_nonneg(m)
    n = len(m)
    if all(x == 0 for row in m for x in row):
        return False

    def reachable(adj: Matrix) -> bool:
        seen = {0}
        frontier = [0]
        while frontier:
            v = frontier.pop()
            for w in range(n):
                if adj[v][w] > 0 and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        return len(seen) == n

    return reachable(m) and reachable(tuple(zip(*m)))


def _period(a: Matrix) -> int:
    """Period of a strongly connected arc digraph (gcd of cycle lengths)."""
    n = len(a)
    level = {0: 0}
    queue = deque([0])
    g = 0
    while queue:
        u = queue.popleft()
        for v in range(n):
            if a[u][v] > 0:
                if v not in level:
                    level[v] = level[u] + 1
                    queue.append(v)
                else:
                    g = math.gcd(g, level[u] + 1 - level[v])
    return abs(g) if g else 0


@dataclass(frozen=True)
class SplitStep:
    """One elementary splitting: kind, split state, blocks, and result.

    ``blocks`` partition the outgoing ("out") or incoming ("in") arc
    multiset of ``state``; each block is a count vector over the states of
    the matrix the step was applied to.
    """

    kind: str
    state: int
    blocks: Blocks
    result: Matrix


@dataclass(frozen=True)
class SplitCertificate:
    """A replayable chain of elementary splittings."""

    steps: tuple[SplitStep, ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def to_text(self) -> str:
        """One line per move: kind, state, blocks and resulting matrix."""
        lines = []
        for s in self.steps:
            blocks = "|".join(",".join(str(x) for x in b) for b in s.blocks)
            lines.append(
                f"{s.kind}-split state={s.state} blocks={blocks} "
                f"result={matrix_literal(s.result)}"
            )
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "SplitCertificate":
        steps = []
        pattern = re.compile(
            r"^(out|in)-split state=(\d+) blocks=(\S+) result=(\S+)$"
        )
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            m = pattern.match(line)
            if m is None:
                raise ValueError(f"bad certificate line: {line!r}")
            kind, state, blocks_text, result_text = m.groups()
            blocks = tuple(
                tuple(int(x) for x in b.split(",")) for b in blocks_text.split("|")
            )
            steps.append(
                SplitStep(
                    kind=kind,
                    state=int(state),
                    blocks=blocks,
                    result=parse_matrix_literal(result_text),
                )
            )
        return cls(steps=tuple(steps))


def matrix_literal(a: MatrixLike) -> str:
    """Render a matrix in the shared literal syntax: rows ';', entries ','."""
    m = as_matrix(a)
    return ";".join(",".join(str(x) for x in row) for row in m)


def parse_matrix_literal(text: str) -> Matrix:
    """Parse the literal syntax, e.g. "0,1;1,0"."""
    try:
        rows = tuple(
            tuple(int(x) for x in row.split(",")) for row in text.split(";")
        )
    except ValueError as err:
        raise ValueError(f"bad matrix literal {text!r}: {err}") from None
    return as_matrix(rows)


def _check_blocks(vector: Sequence[int], blocks: Blocks, m: int) -> None:
    if not blocks:
        raise NotAPartitionError("a partition needs at least one block")
    for b in blocks:
        if len(b) != m:
            raise NotAPartitionError(
                f"block {b!r} must list a count per state ({m} entries)"
            )
        if any(x < 0 for x in b):
            raise NotAPartitionError(f"block {b!r} has a negative count")
        if all(x == 0 for x in b):
            raise EmptyBlockError("every block must contain at least one arc")
    for j in range(m):
        total = sum(b[j] for b in blocks)
        if total != vector[j]:
            raise NotAPartitionError(
                f"blocks cover {total} arcs toward state {j}, expected {vector[j]}"
            )


def _out_split_matrix(a: Matrix, state: int, blocks: Blocks) -> Matrix:
    m = len(a)
    p = len(blocks)

    def new_index(i: int) -> int:
        return i if i < state else i + p - 1

    n = m + p - 1
    out = [[0] * n for _ in range(n)]
    for i in range(m):
        if i == state:
            continue
        for j in range(m):
            if j == state:
                continue
            out[new_index(i)][new_index(j)] = a[i][j]
        for t in range(p):
            out[new_index(i)][state + t] = a[i][state]
    for t in range(p):
        for j in range(m):
            if j == state:
                continue
            out[state + t][new_index(j)] = blocks[t][j]
        for u in range(p):
            out[state + t][state + u] = blocks[t][state]
    return tuple(tuple(row) for row in out)


def _apply_split(a: Matrix, kind: str, state: int, blocks: Blocks) -> Matrix:
    m = len(a)
    if not 0 <= state < m:
        raise IndexOutOfRangeError(f"state {state} out of range for size {m}")
    if kind == "out":
        _check_blocks(a[state], blocks, m)
        return _out_split_matrix(a, state, blocks)
    if kind == "in":
        at = tuple(zip(*a))
        _check_blocks(at[state], blocks, m)
        return tuple(zip(*_out_split_matrix(at, state, blocks)))
    raise ValueError(f"unknown split kind {kind!r}")


def out_split(
    a: MatrixLike, state: int, blocks: Sequence[Sequence[int]]
) -> tuple[Matrix, SplitStep]:
    """Split ``state``'s outgoing arcs into the given blocks.

    Each block is a count vector over states; blocks must be nonempty and
    cover the outgoing arc multiset exactly.  Returns the split matrix
    (size grows by one per extra block) and the recorded step.
    """
    m = as_matrix(a)
    require_square_nonneg(m)
    bl = tuple(tuple(int(x) for x in b) for b in blocks)
    result = _apply_split(m, "out", state, bl)
    return result, SplitStep(kind="out", state=state, blocks=bl, result=result)


def in_split(
    a: MatrixLike, state: int, blocks: Sequence[Sequence[int]]
) -> tuple[Matrix, SplitStep]:
    """Split ``state``'s incoming arcs; the out-splitting of the transpose."""
    m = as_matrix(a)
    require_square_nonneg(m)
    bl = tuple(tuple(int(x) for x in b) for b in blocks)
    result = _apply_split(m, "in", state, bl)
    return result, SplitStep(kind="in", state=state, blocks=bl, result=result)


@dataclass(frozen=True)
class ReplayResult:
    """Outcome of a certificate replay; falsy when the replay failed."""

    ok: bool
    failed_step: int | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_certificate(
    initial: MatrixLike, final: MatrixLike, cert: SplitCertificate
) -> ReplayResult:
    """Replay ``cert`` from ``initial`` and check it reproduces ``final``.

    Every recorded intermediate must match the replayed one exactly.
    """
    current = as_matrix(initial)
    target = as_matrix(final)
    for i, step in enumerate(cert.steps):
        try:
            replayed = _apply_split(current, step.kind, step.state, step.blocks)
        except Exception as err:
            return ReplayResult(ok=False, failed_step=i, reason=str(err))
        if replayed != step.result:
            return ReplayResult(
                ok=False,
                failed_step=i,
                reason="recorded result differs from replayed matrix",
            )
        current = replayed
    if current != target:
        return ReplayResult(
            ok=False,
            failed_step=len(cert.steps),
            reason="replayed chain does not end at the final matrix",
        )
    return ReplayResult(ok=True)


def _in_normal_form(a: Matrix, threshold: int) -> bool:
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] <= threshold:
                return False
            if i != j and a[i][j] % 2 == 1:
                return False
    return True


def _two_block_partitions(vector: Sequence[int]) -> Iterator[Blocks]:
    """All ordered splittings of a count vector into two nonempty blocks."""
    ranges = [range(x + 1) for x in vector]
    total = tuple(vector)
    for first in product(*ranges):
        if all(x == 0 for x in first):
            continue
        second = tuple(t - f for t, f in zip(total, first))
        if all(x == 0 for x in second):
            continue
        yield (first, second)


def _neighbor_moves(a: Matrix) -> Iterator[tuple[str, int, Blocks]]:
    m = len(a)
    at = tuple(zip(*a))
    for kind, source in (("out", a), ("in", at)):
        for state in range(m):
            for blocks in _two_block_partitions(source[state]):
                yield kind, state, blocks


def normalize_matrix(
    a: MatrixLike, target: int, budget: int = DEFAULT_BUDGET
) -> tuple[Matrix, SplitCertificate]:
    """Search for a split-conjugate matrix with all entries > ``target``
    and even off-diagonal entries.

    Returns the normalized matrix and a certificate that replays from the
    input.  Raises :class:`BudgetExhaustedError` when the bounded search
    fails; that is a statement about the search, not about existence,
    except where a shortcut message records a provable obstruction
    (entries never grow under splittings, odd off-diagonal parity is
    split-invariant, and an all-positive matrix cannot be conjugate to a
    matrix of period > 1).
    """
    m = as_matrix(a)
    require_square_nonneg(m)
    if target < 0:
        raise ValueError("target must be >= 0")
    if budget < 0:
        raise ValueError("budget must be >= 0")
    if not is_irreducible(m):
        raise NotIrreducibleError("normalize_matrix requires an irreducible matrix")

    start_k = k_invariant(m).k

    def finish(result: Matrix, steps: tuple[SplitStep, ...]) -> tuple[Matrix, SplitCertificate]:
        cert = SplitCertificate(steps=steps)
        replay = verify_certificate(m, result, cert)
        if not replay:
            raise AssertionError(f"internal: certificate replay failed: {replay.reason}")
        if k_invariant(result).k != start_k:
            raise AssertionError("internal: splitting chain changed the k invariant")
        return result, cert

    if _in_normal_form(m, target):
        return finish(m, ())

    if max(max(row) for row in m) <= target:
        raise BudgetExhaustedError(
            "no splitting can produce an entry above the current maximum", 0
        )
    if any(
        m[i][j] % 2 == 1 for i in range(len(m)) for j in range(len(m)) if i != j
    ):
        raise BudgetExhaustedError(
            "odd off-diagonal entries persist under every splitting", 0
        )
    if _period(m) > 1:
        raise BudgetExhaustedError(
            "a matrix of period > 1 is never split-conjugate to an all-positive one",
            0,
        )

    visited: set[Matrix] = {m}
    parents: dict[Matrix, tuple[Matrix, SplitStep]] = {}
    queue: deque[Matrix] = deque([m])
    moves = 0

    def chain_to(result: Matrix) -> tuple[SplitStep, ...]:
        steps: list[SplitStep] = []
        cur = result
        while cur != m:
            prev, step = parents[cur]
            steps.append(step)
            cur = prev
        steps.reverse()
        return tuple(steps)

    while queue:
        current = queue.popleft()
        for kind, state, blocks in _neighbor_moves(current):
            if moves >= budget:
                raise BudgetExhaustedError("move budget spent", moves)
            moves += 1
            nxt = _apply_split(current, kind, state, blocks)
            if nxt in visited:
                continue
            visited.add(nxt)
            parents[nxt] = (
                current,
                SplitStep(kind=kind, state=state, blocks=blocks, result=nxt),
            )
            if _in_normal_form(nxt, target):
                return finish(nxt, chain_to(nxt))
            queue.append(nxt)

    raise BudgetExhaustedError("no unexplored splittings remain", moves)
