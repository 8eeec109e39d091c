"""Edge-list text format and DOT export.

Format::

    graph <V>
    # label <i> <name>
    <u> <v>
    ...

Vertices are 0-indexed, edges are written in canonical sorted order. Blank
lines and other ``#`` comments are ignored on input.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from skewcert.graph import Edge, Graph, GraphError


class ParseError(GraphError):
    """Malformed edge-list input; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def format_edgelist(g: Graph) -> str:
    lines = [f"graph {g.vertex_count}"]
    if g.labels is not None:
        for v in g.vertices():
            if g.labels[v] is not None:
                lines.append(f"# label {v} {g.labels[v]}")
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def _column(raw: str, token: str, start: int = 0) -> int:
    return raw.index(token, start) + 1


def parse_edgelist(text: str) -> Graph:
    n: int | None = None
    labels: dict[int, str] = {}
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            parts = stripped[1:].split()
            if parts and parts[0] == "label":
                if len(parts) != 3:
                    raise ParseError("label comment needs an index and a name", lineno, 1)
                try:
                    idx = int(parts[1])
                except ValueError:
                    raise ParseError(f"bad vertex index {parts[1]!r}", lineno, _column(raw, parts[1])) from None
                labels[idx] = parts[2]
            continue
        tokens = stripped.split()
        if n is None:
            if tokens[0] != "graph" or len(tokens) != 2:
                raise ParseError("expected header 'graph <V>'", lineno, _column(raw, tokens[0]))
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno, _column(raw, tokens[1])) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno, _column(raw, tokens[1]))
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {stripped!r}", lineno, _column(raw, tokens[0]))
        ends = []
        pos = 0
        for tok in tokens:
            col = _column(raw, tok, pos)
            pos = col
            try:
                x = int(tok)
            except ValueError:
                raise ParseError(f"bad vertex {tok!r}", lineno, col) from None
            if not 0 <= x < n:
                raise ParseError(f"vertex {x} out of range 0..{n - 1}", lineno, col)
            ends.append(x)
        if ends[0] == ends[1]:
            raise ParseError(f"self-loop at vertex {ends[0]}", lineno, _column(raw, tokens[0]))
        edges.append((ends[0], ends[1]))
    if n is None:
        raise ParseError("missing 'graph <V>' header", 1, 1)
    for idx in labels:
        if not 0 <= idx < n:
            raise ParseError(f"label for vertex {idx} out of range", 1, 1)
    label_list = [labels.get(v) for v in range(n)] if labels else None
    return Graph(n, edges, label_list)


def read_edgelist(stream: TextIO) -> Graph:
    return parse_edgelist(stream.read())


def to_dot(g: Graph, highlight: Iterable[Edge] = (), name: str = "G") -> str:
    """Undirected DOT source; ``highlight`` edges are drawn bold and dashed."""
    marked = {tuple(sorted(e)) for e in highlight}
    lines = [f"graph {name} {{"]
    for v in g.vertices():
        lines.append(f'  {v} [label="{g.label(v)}"];')
    for a, b in g.edges:
        style = ' [style="bold,dashed"]' if (a, b) in marked else ""
        lines.append(f"  {a} -- {b}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_weights(text: str, g: Graph) -> dict[Edge, int]:
    """Edge weights as ``u v w`` lines for edges of ``g``; ``#`` starts a comment."""
    weights: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        tokens = stripped.split()
        if len(tokens) != 3:
            raise ParseError(f"expected 'u v w', got {stripped!r}", lineno, _column(raw, tokens[0]))
        values = []
        pos = 0
        for tok in tokens:
            col = _column(raw, tok, pos)
            pos = col
            try:
                values.append(int(tok))
            except ValueError:
                raise ParseError(f"bad integer {tok!r}", lineno, col) from None
        a, b, wt = values
        if not g.has_edge(a, b):
            raise ParseError(f"({a}, {b}) is not an edge of the graph", lineno, _column(raw, tokens[0]))
        e = (min(a, b), max(a, b))
        if e in weights:
            raise ParseError(f"edge ({a}, {b}) weighted twice", lineno, _column(raw, tokens[0]))
        weights[e] = wt
    return weights


def format_weights(weights: dict[Edge, int]) -> str:
    return "".join(f"{a} {b} {wt}\n" for (a, b), wt in sorted(weights.items()))
