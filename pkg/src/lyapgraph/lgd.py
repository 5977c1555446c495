"""The LGD text format and verdict reports.

An ``.lgd`` document is a line-based description of one Lyapunov graph.
Tokens are whitespace separated, ``#`` starts a comment to end of line,
and declarations may appear in any order (parsing is two-pass):

    graph IDENT
    vertex IDENT sink-orbit | source-orbit | singularity INT
    vertex IDENT ssft [ROW;ROW;...]        rows are "a,b,..." of integers
    edge IDENT -> IDENT weight INT

Identifiers are ``[A-Za-z0-9_]+``; integers are unsigned decimals.  Every
failure is reported with a 1-based line and column; arbitrary byte input
either parses to a graph or raises a positioned :class:`LgdParseError`.

The canonical serializer sorts vertices by id and edges by
(start, end, weight, id); parsing its output yields an equal graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import (
    BadMatrixShapeError,
    DisconnectedGraphError,
    DuplicateVertexIdError,
    LgdParseError,
    LgdSyntaxError,
    OrientedCycleError,
    UnknownKindError,
)
from .model import (
    Edge,
    LyapunovGraph,
    Singularity,
    SinkOrbit,
    SourceOrbit,
    Ssft,
    VertexLabel,
    build_graph,
)
from .realizability import Verdict

_IDENT = re.compile(r"[A-Za-z0-9_]+\Z")
_INT = re.compile(r"[0-9]+\Z")
_TOKEN = re.compile(r"\S+")
_MATRIX = re.compile(r"\[(.*)\]\Z", re.DOTALL)


@dataclass(frozen=True)
class SourcePos:
    line: int
    col: int


@dataclass
class LgdDocument:
    """A parsed document with per-declaration source positions."""

    text: str
    graph: LyapunovGraph
    graph_pos: SourcePos | None
    vertex_positions: dict[str, SourcePos]
    edge_positions: dict[str, SourcePos]


def _tokenize(text: str):
    """Yield (line_number, [(token, col), ...]) for nonempty lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(body)]
        if tokens:
            yield lineno, tokens


def _require_ident(token: str, line: int, col: int, what: str) -> str:
    if not _IDENT.match(token):
        raise LgdSyntaxError(f"{what} must match [A-Za-z0-9_]+, got {token!r}", line, col)
    return token


def _require_int(token: str, line: int, col: int, what: str) -> int:
    if not _INT.match(token):
        raise LgdSyntaxError(f"{what} must be an unsigned integer, got {token!r}", line, col)
    return int(token)


def _parse_ssft_matrix(tokens, line: int) -> Ssft:
    if not tokens:
        raise LgdSyntaxError("ssft needs a matrix like [0,1;1,0]", line, 1)
    col = tokens[0][1]
    literal = "".join(tok for tok, _ in tokens)
    m = _MATRIX.match(literal)
    if m is None:
        raise LgdSyntaxError(
            f"ssft matrix must be bracketed, got {literal!r}", line, col
        )
    rows = []
    for row_text in m.group(1).split(";"):
        entries = row_text.split(",")
        row = []
        for entry in entries:
            if not _INT.match(entry):
                raise LgdSyntaxError(
                    f"matrix entry must be an unsigned integer, got {entry!r}",
                    line,
                    col,
                )
            row.append(int(entry))
        rows.append(tuple(row))
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise BadMatrixShapeError("ragged matrix rows", line, col)
    if len(rows) != width:
        raise BadMatrixShapeError(
            f"ssft matrix must be square, got {len(rows)}x{width}", line, col
        )
    return Ssft(tuple(rows))


def parse_lgd_document(text: str) -> LgdDocument:
    """Parse an LGD document, retaining source positions per declaration."""
    name: str | None = None
    graph_pos: SourcePos | None = None
    vertices: list[tuple[str, VertexLabel]] = []
    vertex_positions: dict[str, SourcePos] = {}
    edge_specs: list[tuple[Edge, SourcePos, int]] = []

    for line, tokens in _tokenize(text):
        head, head_col = tokens[0]
        if head == "graph":
            if len(tokens) != 2:
                raise LgdSyntaxError("expected: graph IDENT", line, head_col)
            if name is not None:
                raise LgdSyntaxError("duplicate graph declaration", line, head_col)
            name = _require_ident(tokens[1][0], line, tokens[1][1], "graph name")
            graph_pos = SourcePos(line, head_col)
        elif head == "vertex":
            if len(tokens) < 3:
                raise LgdSyntaxError("expected: vertex IDENT KIND", line, head_col)
            vid = _require_ident(tokens[1][0], line, tokens[1][1], "vertex id")
            kind, kind_col = tokens[2]
            if kind == "sink-orbit" or kind == "source-orbit":
                if len(tokens) != 3:
                    raise LgdSyntaxError(
                        f"unexpected tokens after {kind}", line, tokens[3][1]
                    )
                label: VertexLabel = (
                    SinkOrbit() if kind == "sink-orbit" else SourceOrbit()
                )
            elif kind == "singularity":
                if len(tokens) != 4:
                    raise LgdSyntaxError("expected: singularity INT", line, kind_col)
                index = _require_int(
                    tokens[3][0], line, tokens[3][1], "singularity index"
                )
                try:
                    label = Singularity(index)
                except ValueError as err:
                    raise LgdSyntaxError(str(err), line, tokens[3][1]) from None
            elif kind == "ssft":
                label = _parse_ssft_matrix(tokens[3:], line)
            else:
                raise UnknownKindError(f"unknown vertex kind {kind!r}", line, kind_col)
            if vid in vertex_positions:
                raise LgdParseError(f"duplicate vertex id {vid!r}", line, tokens[1][1])
            vertices.append((vid, label))
            vertex_positions[vid] = SourcePos(line, head_col)
        elif head == "edge":
            if (
                len(tokens) != 6
                or tokens[2][0] != "->"
                or tokens[4][0] != "weight"
            ):
                raise LgdSyntaxError(
                    "expected: edge IDENT -> IDENT weight INT", line, head_col
                )
            start = _require_ident(tokens[1][0], line, tokens[1][1], "edge start")
            end = _require_ident(tokens[3][0], line, tokens[3][1], "edge end")
            weight = _require_int(tokens[5][0], line, tokens[5][1], "edge weight")
            eid = f"e{len(edge_specs)}"
            edge_specs.append(
                (Edge(id=eid, start=start, end=end, weight=weight), SourcePos(line, head_col), line)
            )
        else:
            raise LgdSyntaxError(f"unknown declaration {head!r}", line, head_col)

    if not vertices:
        raise LgdParseError("document declares no vertices", 1, 1)

    for edge, pos, line in edge_specs:
        for endpoint in (edge.start, edge.end):
            if endpoint not in vertex_positions:
                raise LgdParseError(
                    f"edge references undeclared vertex {endpoint!r}", line, pos.col
                )
        if edge.start == edge.end:
            raise LgdParseError(f"self-loop at {edge.start!r}", line, pos.col)

    edge_positions = {edge.id: pos for edge, pos, _ in edge_specs}
    try:
        graph = build_graph(
            vertices, [edge for edge, _, _ in edge_specs], name=name or "g"
        )
    except OrientedCycleError as err:
        pos = _cycle_position(err.cycle, edge_specs)
        raise LgdParseError(str(err), pos.line, pos.col) from err
    except DisconnectedGraphError as err:
        raise LgdParseError(str(err), 1, 1) from err
    except DuplicateVertexIdError as err:
        raise LgdParseError(str(err), 1, 1) from err

    return LgdDocument(
        text=text,
        graph=graph,
        graph_pos=graph_pos,
        vertex_positions=vertex_positions,
        edge_positions=edge_positions,
    )


def _cycle_position(cycle: tuple[str, ...], edge_specs) -> SourcePos:
    pairs = {
        (cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))
    }
    positions = [
        pos for edge, pos, _ in edge_specs if (edge.start, edge.end) in pairs
    ]
    if positions:
        return min(positions, key=lambda p: (p.line, p.col))
    return SourcePos(1, 1)


def parse_lgd(text: str) -> LyapunovGraph:
    """Parse an LGD document into a validated graph."""
    return parse_lgd_document(text).graph


def _label_text(label: VertexLabel) -> str:
    if isinstance(label, SinkOrbit):
        return "sink-orbit"
    if isinstance(label, SourceOrbit):
        return "source-orbit"
    if isinstance(label, Singularity):
        return f"singularity {label.index}"
    body = ";".join(",".join(str(x) for x in row) for row in label.matrix)
    return f"ssft [{body}]"


def serialize_lgd(graph: LyapunovGraph) -> str:
    """Canonical LGD text: vertices sorted by id, edges by (start, end,
    weight, id).  Parsing the output yields an equal graph."""
    if not _IDENT.match(graph.name):
        raise ValueError(f"graph name {graph.name!r} is not an LGD identifier")
    lines = [f"graph {graph.name}"]
    for vid, label in sorted(graph.vertices, key=lambda item: item[0]):
        if not _IDENT.match(vid):
            raise ValueError(f"vertex id {vid!r} is not an LGD identifier")
        lines.append(f"vertex {vid} {_label_text(label)}")
    for e in sorted(graph.edges, key=lambda e: (e.start, e.end, e.weight, e.id)):
        lines.append(f"edge {e.start} -> {e.end} weight {e.weight}")
    return "\n".join(lines) + "\n"


# -- verdict reports ----------------------------------------------------------

def emit_report(verdict: Verdict, mode: str = "human") -> str:
    """Render a verdict; ``mode`` is "human" or "machine".

    The machine format is one key=value record per line with the stable
    key set {model, accepted, regime, violation.N.code,
    violation.N.subject, violation.N.detail}.
    """
    if mode == "human":
        lines = [
            f"model: {verdict.model.value}",
            f"verdict: {'accepted' if verdict.accepted else 'rejected'}",
        ]
        if verdict.regime is not None:
            lines.append(f"regime: {verdict.regime.value}")
        for v in verdict.violations:
            subject = f" at {v.subject}" if v.subject else ""
            lines.append(f"violation: {v.code}{subject}: {v.detail} [{v.citation}]")
        return "\n".join(lines) + "\n"
    if mode == "machine":
        lines = [
            f"model={verdict.model.value}",
            f"accepted={'true' if verdict.accepted else 'false'}",
            f"regime={verdict.regime.value if verdict.regime is not None else '-'}",
        ]
        for i, v in enumerate(verdict.violations):
            lines.append(f"violation.{i}.code={v.code}")
            lines.append(f"violation.{i}.subject={v.subject if v.subject else '-'}")
            lines.append(f"violation.{i}.detail={v.detail}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report mode {mode!r}")


@dataclass(frozen=True)
class MachineVerdict:
    """Summary parsed back from a machine-mode report."""

    model: str
    accepted: bool
    regime: str | None
    violations: tuple[tuple[str, str | None, str], ...]


def parse_machine_report(text: str) -> MachineVerdict:
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"bad machine report line: {line!r}")
        key, value = line.split("=", 1)
        fields[key] = value
    model = fields["model"]
    accepted = fields["accepted"] == "true"
    regime = None if fields["regime"] == "-" else fields["regime"]
    violations = []
    i = 0
    while f"violation.{i}.code" in fields:
        subject = fields[f"violation.{i}.subject"]
        violations.append(
            (
                fields[f"violation.{i}.code"],
                None if subject == "-" else subject,
                fields[f"violation.{i}.detail"],
            )
        )
        i += 1
    return MachineVerdict(
        model=model, accepted=accepted, regime=regime, violations=tuple(violations)
    )
