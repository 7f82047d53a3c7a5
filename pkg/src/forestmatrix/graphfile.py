"""Plain-text graph files.

Grammar (UTF-8, LF or CRLF):

    graph <directed|undirected> <n>
    <u> <v> <w>
    ...

`u` and `v` are 1-based vertex labels; `w` is an integer, an exact decimal
(0.25 means exactly 1/4) or `p/q` with positive q. `#` starts a comment to
end of line; blank lines are ignored. Duplicate (u, v) lines are parallel
instances, preserved in file order.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import AnyGraph, GraphValidationError, Multidigraph, Multigraph

__all__ = ["GraphParseError", "parse_graph", "format_graph"]


class GraphParseError(ValueError):
    """Malformed graph file; carries the 1-based offending line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _significant_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line_no, line


def _parse_vertex(token: str, n: int, line_no: int) -> int:
    try:
        v = int(token)
    except ValueError:
        raise GraphParseError(line_no, f"vertex label {token!r} is not an integer") from None
    if not (1 <= v <= n):
        raise GraphValidationError(f"line {line_no}: vertex {v} out of range 1..{n}")
    return v - 1


def _parse_weight(token: str, line_no: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphParseError(line_no, f"weight {token!r} is not a rational literal") from None


def parse_graph(text: str) -> AnyGraph:
    """Parse a graph file into a Multigraph or Multidigraph (0-based internally)."""
    lines = _significant_lines(text)
    try:
        header_no, header = next(lines)
    except StopIteration:
        raise GraphParseError(1, "missing 'graph <directed|undirected> <n>' header") from None
    tokens = header.split()
    if len(tokens) != 3 or tokens[0] != "graph" or tokens[1] not in ("directed", "undirected"):
        raise GraphParseError(header_no, f"bad header {header!r}")
    try:
        n = int(tokens[2])
    except ValueError:
        raise GraphParseError(header_no, f"vertex count {tokens[2]!r} is not an integer") from None
    if n < 0:
        raise GraphValidationError(f"line {header_no}: vertex count must be >= 0, got {n}")

    directed = tokens[1] == "directed"
    instances = []
    for line_no, line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise GraphParseError(line_no, f"expected '<u> <v> <w>', got {line!r}")
        u = _parse_vertex(parts[0], n, line_no)
        v = _parse_vertex(parts[1], n, line_no)
        if u == v:
            raise GraphValidationError(f"line {line_no}: self-loop at vertex {u + 1}")
        instances.append((u, v, _parse_weight(parts[2], line_no)))
    if directed:
        return Multidigraph(n, tuple(instances))
    return Multigraph(n, tuple(instances))


def format_graph(graph: AnyGraph) -> str:
    """Serialize a graph back to the file format (parse(format(g)) == g)."""
    directed = isinstance(graph, Multidigraph)
    lines = [f"graph {'directed' if directed else 'undirected'} {graph.n}"]
    for a, b, w in graph.instances:
        lines.append(f"{a + 1} {b + 1} {w}")
    return "\n".join(lines) + "\n"
