"""State splittings, replayable certificates and the normal-form search.

An out-splitting partitions the outgoing arcs of one state; the subshift
of the result is conjugate to the original, so k and the homology pair
never move.  Chains of splittings are recorded as certificates that
anyone can replay; trust the replay, not the search that found the chain.
"""

from lyapgraph import (
    BudgetExhaustedError,
    SplitCertificate,
    bowen_franks_mod2,
    in_split,
    k_invariant,
    normalize_matrix,
    out_split,
    verify_certificate,
)

# The full 2-shift [[2]] out-splits into its familiar two-state picture.
start = [[2]]
step1_matrix, step1 = out_split(start, 0, [(1,), (1,)])
print("out-split of [[2]]:", step1_matrix)

# Splitting further and then in-splitting keeps every invariant pinned.
step2_matrix, step2 = out_split(step1_matrix, 1, [(1, 0), (0, 1)])
step3_matrix, step3 = in_split(step2_matrix, 0, [(1, 0, 0), (0, 1, 0)])
cert = SplitCertificate((step1, step2, step3))

print("chain of 3 moves reaches:", step3_matrix)
print("replay verifies:", bool(verify_certificate(start, step3_matrix, cert)))
print("k along the chain:", [k_invariant(m).k for m in (start, step1_matrix, step3_matrix)])
print("homology pairs:   ", [bowen_franks_mod2(m) for m in (start, step1_matrix, step3_matrix)])
print()
print("certificate text:")
print(cert.to_text())
print()

# A certificate is rejected as soon as any recorded intermediate lies.
bad = SplitCertificate((step1, step2))
replay = verify_certificate(start, step3_matrix, bad)
print("truncated certificate verifies:", bool(replay), "|", replay.reason)
print()

# The normal-form search: already-normal inputs come back with an empty
# certificate, and provably unreachable targets fail fast with the
# obstruction in the message.  Splittings never increase an entry, and an
# odd off-diagonal entry survives every splitting.
result, empty_cert = normalize_matrix([[1, 2], [2, 1]], 0)
print("normalize [[1,2],[2,1]] above 0:", result, f"({len(empty_cert)} moves)")

for matrix, target in ([[2, 1], [1, 2]], 0), ([[0, 1], [1, 0]], 3):
    try:
        normalize_matrix(matrix, target)
    except BudgetExhaustedError as err:
        print(f"normalize {matrix} above {target}: {err.reason}")
