"""The .lgd text format: parsing, positioned errors, canonical output.

Declarations may appear in any order; '#' comments to end of line; every
parse failure carries a 1-based line and column.
"""

from lyapgraph import (
    LgdParseError,
    check_ns_s1s2,
    emit_report,
    parse_lgd,
    parse_machine_report,
    serialize_lgd,
)

document = """
# The sphere-regime example, edges first just to show order is free.
edge R -> v weight 1
edge v -> w weight 0
edge v -> w weight 2
edge w -> A weight 1
graph sphere
vertex R source-orbit
vertex v ssft [0,1;1,0]
vertex w ssft [0,1;1,0]
vertex A sink-orbit
"""

graph = parse_lgd(document)
print("parsed graph:", graph)
print()
print("canonical serialization:")
print(serialize_lgd(graph))

print("round trip equal:", parse_lgd(serialize_lgd(graph)) == graph)
print()

broken_documents = [
    "vertex v whirlpool",
    "vertex v ssft [0,1;1]",
    "graph g\nvertex A sink-orbit\nedge A -> Z weight 1",
    "graph g\nvertex A sink-orbit\nvertex B sink-orbit\nedge A -> B weight 1\nedge B -> A weight 1",
]
for text in broken_documents:
    try:
        parse_lgd(text)
    except LgdParseError as err:
        print(f"line {err.line}, col {err.col}: {err.args[0].split(': ', 1)[1]}")
print()

# Machine-readable verdicts round-trip into a structured summary.
verdict = check_ns_s1s2(graph)
machine = emit_report(verdict, mode="machine")
print(machine)
summary = parse_machine_report(machine)
print("parsed back:", summary.model, summary.accepted, summary.regime)
