"""The mod-2 invariants every vertex condition consumes.

For a nonnegative integer matrix A with mod-2 reduction B, the number
k = dim ker(I - B) over GF(2) controls how many edges a saddle vertex can
carry.  The pair returned by bowen_franks_mod2 gives the dimensions of
the two nontrivial relative homology groups of the matrix's filtration
pair; they are always equal.
"""

from lyapgraph import bowen_franks_mod2, is_irreducible, k_invariant, reduce_mod2

samples = [
    [[1]],
    [[2]],
    [[0, 1], [1, 0]],
    [[1, 1], [1, 1]],
    [[1, 2], [2, 1]],
    [[1, 1], [0, 1]],
    [[2, 1, 0], [0, 1, 1], [1, 0, 1]],
]

for matrix in samples:
    summary = k_invariant(matrix)
    print(f"A = {matrix}")
    print(f"  B = A mod 2          -> {reduce_mod2(matrix).to_rows()}")
    print(f"  rank(I - B) over GF2 -> {summary.rank_i_minus_b}")
    print(f"  k = dim ker(I - B)   -> {summary.k}")
    print(f"  homology dims        -> {bowen_franks_mod2(matrix)}")
    print(f"  irreducible          -> {is_irreducible(matrix)}")
    print()

# Parity is all that matters: adding 2 to any entry never changes k.
base = [[1, 1], [1, 1]]
bumped = [[3, 1], [1, 3]]
print("parity invariance:", k_invariant(base).k == k_invariant(bumped).k)
