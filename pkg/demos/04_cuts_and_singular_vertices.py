"""Down-set cuts, Euler balance, forced-singular vertices, homology bounds.

Every regular value of a Lyapunov function splits the graph into an upper
part and a successor-closed lower part; for a flow without rest points
the crossing surfaces carry total Euler characteristic zero, so each cut
must satisfy sum(2 - 2 * weight) = 0.
"""

from lyapgraph import (
    SinkOrbit,
    SourceOrbit,
    Ssft,
    build_graph,
    classify_singular_vertices,
    down_set_cuts,
    euler_cut_balance,
    knot_complement_bounds,
    weight_bound_check,
)

swap = Ssft([[0, 1], [1, 0]])
sphere = build_graph(
    [("R", SourceOrbit()), ("v", swap), ("w", swap), ("A", SinkOrbit())],
    [("R", "v", 1), ("v", "w", 0), ("v", "w", 2), ("w", "A", 1)],
    name="sphere",
)

print("down-set cuts of the sphere-regime graph:")
for cut in down_set_cuts(sphere):
    print(f"  lower part {cut.lower}, crossed by {[e.id for e in cut.cut_edges]}")

report = euler_cut_balance(sphere)
for entry in report.entries:
    print(f"  cut below {entry.cut.lower}: chi sum {entry.chi_sum}")
print("all cuts balanced:", report.all_balanced)
print()

# A weight-0 edge on its own level cannot balance: the level would be a
# single sphere, impossible without rest points.
flat = build_graph(
    [("R", SourceOrbit()), ("A", SinkOrbit())], [("R", "A", 0)], name="flat"
)
print("weight-0 single level balanced:", euler_cut_balance(flat).all_balanced)
print()

# The saddle of the extremal graph fails the link-complement inequalities,
# so any realizing flow must place it in a more exotic neighborhood.
extremal = build_graph(
    [("R", SourceOrbit()), ("v", Ssft([[1, 2], [2, 1]])), ("A", SinkOrbit())],
    [("R", "v", 1), ("v", "A", 1)],
    name="extremal",
)
print("forced-singular flags:", classify_singular_vertices(extremal))
print()

# Homological bounds for a vertex whose neighboring pieces are all knot
# complements, on a manifold with one-dimensional first mod-2 homology.
bounds = knot_complement_bounds(e_plus=1, e_minus=1, k=1, dim_h1_m=1)
for check in bounds.checks:
    state = "pass" if check.passed else "fail"
    print(f"  {check.code}: {check.description}: {check.lhs} <= {check.rhs}: {state}")
print()

# Weight obstruction: a genus-2 level set needs one twisted-product
# summand, and forces a cycle in the graph.
print("sphere graph vs 1 summand:", weight_bound_check(sphere, summands=1).passed)
tree_w2 = build_graph(
    [("R", SourceOrbit()), ("v", Ssft([[1, 1], [1, 1]])), ("A", SinkOrbit())],
    [("R", "v", 1), ("v", "A", 2)],
    name="w2tree",
)
print("weight-2 tree vs 1 summand:", weight_bound_check(tree_w2, summands=1).passed)
