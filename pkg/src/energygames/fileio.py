"""Text formats for game graphs and energy functions.

Game files are DIMACS-flavored and diff-friendly::

    # comment lines start with '#', blank lines are ignored
    p eg <n> <m>
    v <id> <A|B>        (one per node, ids 0..n-1)
    e <src> <dst> <w>   (one per edge, in order)

Energy files carry one ``v <id> <value>`` line per node, ids ascending, with
the literal ``inf`` for infinite energies.  Emitters produce canonical files
(no comments, ids ascending, edges in stored order); parsing a canonical file
and re-emitting it is byte-identical.
"""

from __future__ import annotations

from .core import ALICE, BOB, INF, Edge, EnergyFn, GameGraph


class GameFileError(ValueError):
    """A malformed game or energy file; carries the offending line number."""

    def __init__(self, line_no: int, message: str) -> None:
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _significant_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, line


def parse_game(text: str) -> GameGraph:
    lines = list(_significant_lines(text))
    if not lines:
        raise GameFileError(0, "empty file: expected a 'p eg <n> <m>' header")
    line_no, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "eg":
        raise GameFileError(line_no, f"expected 'p eg <n> <m>', got {header!r}")
    try:
        n, m = int(parts[2]), int(parts[3])
    except ValueError:
        raise GameFileError(line_no, f"non-integer counts in header {header!r}") from None
    if n < 1 or m < 0:
        raise GameFileError(line_no, f"invalid counts in header {header!r}")

    owners: list[str | None] = [None] * n
    edges: list[Edge] = []
    seen_edges: set[Edge] = set()
    for line_no, line in lines[1:]:
        parts = line.split()
        if parts[0] == "v":
            if len(parts) != 3:
                raise GameFileError(line_no, f"expected 'v <id> <A|B>', got {line!r}")
            try:
                node = int(parts[1])
            except ValueError:
                raise GameFileError(line_no, f"non-integer node id in {line!r}") from None
            if not 0 <= node < n:
                raise GameFileError(line_no, f"node id {node} out of range 0..{n - 1}")
            if owners[node] is not None:
                raise GameFileError(line_no, f"duplicate declaration of node {node}")
            if parts[2] not in (ALICE, BOB):
                raise GameFileError(line_no, f"owner must be A or B, got {parts[2]!r}")
            owners[node] = parts[2]
        elif parts[0] == "e":
            if len(parts) != 4:
                raise GameFileError(line_no, f"expected 'e <src> <dst> <w>', got {line!r}")
            try:
                src, dst, weight = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise GameFileError(line_no, f"non-integer field in {line!r}") from None
            if not 0 <= src < n:
                raise GameFileError(line_no, f"edge source {src} out of range 0..{n - 1}")
            if not 0 <= dst < n:
                raise GameFileError(line_no, f"edge target {dst} out of range 0..{n - 1}")
            edge = (src, dst, weight)
            if edge in seen_edges:
                raise GameFileError(line_no, f"duplicate edge line {line!r}")
            seen_edges.add(edge)
            edges.append(edge)
        else:
            raise GameFileError(line_no, f"unknown record {parts[0]!r}")

    missing = [v for v, owner in enumerate(owners) if owner is None]
    if missing:
        raise GameFileError(0, f"missing node declarations for {missing}")
    if len(edges) != m:
        raise GameFileError(0, f"header promised {m} edges, found {len(edges)}")
    return GameGraph(tuple(owners), tuple(edges))  # type: ignore[arg-type]


def emit_game(graph: GameGraph) -> str:
    lines = [f"p eg {graph.n} {graph.m}"]
    lines.extend(f"v {v} {graph.owners[v]}" for v in range(graph.n))
    lines.extend(f"e {src} {dst} {weight}" for src, dst, weight in graph.edges)
    return "\n".join(lines) + "\n"


def parse_energies(text: str, n: int) -> EnergyFn:
    values: list[int | float | None] = [None] * n
    expected = 0
    for line_no, line in _significant_lines(text):
        parts = line.split()
        if len(parts) != 3 or parts[0] != "v":
            raise GameFileError(line_no, f"expected 'v <id> <value|inf>', got {line!r}")
        try:
            node = int(parts[1])
        except ValueError:
            raise GameFileError(line_no, f"non-integer node id in {line!r}") from None
        if not 0 <= node < n:
            raise GameFileError(line_no, f"node id {node} out of range 0..{n - 1}")
        if node != expected:
            raise GameFileError(line_no, f"node ids must ascend from 0; expected {expected}")
        expected += 1
        if parts[2] == "inf":
            values[node] = INF
        else:
            try:
                value = int(parts[2])
            except ValueError:
                raise GameFileError(
                    line_no, f"energy must be a non-negative integer or 'inf', got {parts[2]!r}"
                ) from None
            if value < 0:
                raise GameFileError(line_no, f"energy must be non-negative, got {value}")
            values[node] = value
    if expected != n:
        raise GameFileError(0, f"expected {n} energy lines, found {expected}")
    return tuple(values)  # type: ignore[arg-type]


def emit_energies(energies: EnergyFn) -> str:
    lines = [
        f"v {v} {'inf' if value == INF else value}" for v, value in enumerate(energies)
    ]
    return "\n".join(lines) + "\n"
