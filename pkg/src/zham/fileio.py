"""Text edge-list format and DOT export.

Format, bit-exact: the first non-comment line is a header ``D <n>`` (digraph),
``B <n>`` (balanced bipartite, part size n) or ``G <n>`` (undirected); every
following non-comment line is ``u v`` — an arc u->v for D, the edge x_u—y_v
for B, the edge u—v for G.  ``#`` starts a comment line, indices are 1-based,
encoding is UTF-8 with LF line endings.  Serialization always emits edges in
ascending order, so parse-serialize is a normalizing round trip.
"""

from __future__ import annotations

from pathlib import Path

from .core import (
    BipartiteGraph,
    Digraph,
    Graph,
    GraphError,
    SelfLoopError,
    VertexRangeError,
)

_HEADER_KINDS = {"D": Digraph, "B": BipartiteGraph, "G": Graph}


class ParseError(ValueError):
    """Malformed edge-list text; carries the 1-based offending line number."""

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        suffix = f" at line {line_no}" if line_no is not None else ""
        super().__init__(message + suffix)


def _content_lines(text):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


def parse_graph_text(text: str):
    """Parse edge-list text into a Digraph, BipartiteGraph, or Graph.

    Raises ``ParseError`` for syntax problems and the core validation errors
    (self-loop, out-of-range endpoint) with the offending line named.
    """
    lines = _content_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise ParseError("missing header line") from None
    fields = header.split()
    if len(fields) != 2 or fields[0] not in _HEADER_KINDS:
        raise ParseError(
            f"header must be 'D <n>', 'B <n>' or 'G <n>', got {header!r}", header_no
        )
    try:
        n = int(fields[1])
    except ValueError:
        raise ParseError(f"vertex count {fields[1]!r} is not an integer", header_no) from None
    kind = fields[0]

    pairs = []
    for line_no, line in lines:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line_no)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", line_no) from None
        if not 1 <= u <= n or not 1 <= v <= n:
            raise VertexRangeError(f"endpoint out of range 1..{n} at line {line_no}")
        if kind != "B" and u == v:
            raise SelfLoopError(f"self-loop at line {line_no}")
        pairs.append((u, v))

    try:
        return _HEADER_KINDS[kind](n, frozenset(pairs))
    except GraphError as exc:  # pragma: no cover - per-line checks catch these first
        raise GraphError(f"{exc} (while building {kind} {n})") from exc


def parse_graph_file(path):
    return parse_graph_text(Path(path).read_text(encoding="utf-8"))


def serialize_graph(obj) -> str:
    """Canonical text form: header plus ascending edge lines, LF-terminated."""
    if isinstance(obj, Digraph):
        kind, n, pairs = "D", obj.n, sorted(obj.arcs)
    elif isinstance(obj, BipartiteGraph):
        kind, n, pairs = "B", obj.n, sorted(obj.edges)
    elif isinstance(obj, Graph):
        kind, n, pairs = "G", obj.n, sorted(obj.edges)
    else:
        raise GraphError(f"cannot serialize {type(obj).__name__}")
    lines = [f"{kind} {n}"] + [f"{u} {v}" for u, v in pairs]
    return "\n".join(lines) + "\n"


def write_graph_file(path, obj):
    Path(path).write_text(serialize_graph(obj), encoding="utf-8", newline="\n")


def to_dot(obj) -> str:
    """DOT rendering; bipartite x vertices draw as boxes, y vertices as circles."""
    if isinstance(obj, Digraph):
        body = "".join(f"  {u} -> {v};\n" for u, v in sorted(obj.arcs))
        return "digraph {\n" + body + "}\n"
    if isinstance(obj, BipartiteGraph):
        lines = ["graph {", "  rankdir=LR;", "  node [shape=box];"]
        lines += [f"  x{i};" for i in range(1, obj.n + 1)]
        lines.append("  node [shape=circle];")
        lines += [f"  y{j};" for j in range(1, obj.n + 1)]
        lines += [f"  x{i} -- y{j};" for i, j in sorted(obj.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if isinstance(obj, Graph):
        body = "".join(f"  {u} -- {v};\n" for u, v in sorted(obj.edges))
        return "graph {\n" + body + "}\n"
    raise GraphError(f"cannot render {type(obj).__name__}")
