"""Build the six workhorse graphs and check them against every flow model.

Each graph is a small abstract Lyapunov graph: an oriented multigraph
without directed cycles, vertices labeled by their local dynamics, edges
weighted by the genus of the level-set surface they stand for.
"""

from lyapgraph import (
    Singularity,
    SinkOrbit,
    SourceOrbit,
    Ssft,
    build_graph,
    check_ns_s1s2,
    check_ns_s3,
    check_smale_s3,
    emit_report,
)

# The simplest nonsingular picture: one repelling orbit flowing to one
# attracting orbit across a single torus.
hopf = build_graph(
    [("R", SourceOrbit()), ("A", SinkOrbit())],
    [("R", "A", 1)],
    name="hopf",
)

# One saddle with matrix [[1,1],[1,1]] (k = 0) between the two orbits.
lorenz = build_graph(
    [("R", SourceOrbit()), ("v", Ssft([[1, 1], [1, 1]])), ("A", SinkOrbit())],
    [("R", "v", 1), ("v", "A", 1)],
    name="lorenz",
)

# Same shape, but the saddle matrix [[1,2],[2,1]] has k = 2, which tips
# the vertex into the extremal case k = e+ + e-.
equality = build_graph(
    [("R", SourceOrbit()), ("v", Ssft([[1, 2], [2, 1]])), ("A", SinkOrbit())],
    [("R", "v", 1), ("v", "A", 1)],
    name="equality",
)

# Two saddles joined by parallel unit-weight edges: the unique cycle makes
# the graph unrealizable on the 3-sphere but fine on the twisted product.
swap = Ssft([[0, 1], [1, 0]])
parallel = build_graph(
    [("R", SourceOrbit()), ("v", swap), ("w", swap), ("A", SinkOrbit())],
    [("R", "v", 1), ("v", "w", 1), ("v", "w", 1), ("w", "A", 1)],
    name="parallel",
)

# The cycle now mixes a sphere (weight 0) with a genus-2 surface: the
# sphere-level regime of the twisted product.
sphere = build_graph(
    [("R", SourceOrbit()), ("v", swap), ("w", swap), ("A", SinkOrbit())],
    [("R", "v", 1), ("v", "w", 0), ("v", "w", 2), ("w", "A", 1)],
    name="sphere",
)

# A gradient picture with two rest points; only the model with rest
# points can accept it.
gradient = build_graph(
    [("S", Singularity(3)), ("A", Singularity(0))],
    [("S", "A", 0)],
    name="gradient",
)

for graph in (hopf, lorenz, equality, parallel, sphere, gradient):
    print("=" * 60)
    print(f"graph {graph.name}")
    for verdict in (
        check_ns_s3(graph),
        check_smale_s3(graph),
        check_ns_s1s2(graph),
    ):
        print(emit_report(verdict, mode="human"), end="")
