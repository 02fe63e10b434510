"""Text formats: edge lists, hypergraph files, PACE-style decompositions.

Graph and hypergraph files are 0-based.  Decomposition files follow the
PACE-2017 .td syntax and are therefore 1-based (bag ids and vertices);
parsing and emission translate at the boundary.
"""

from __future__ import annotations

from typing import Iterable

from .chordal import TreeDecomposition
from .core import SpinedError
from .graph import Graph, from_edges
from .hypergraph import Hypergraph


class FormatError(SpinedError):
    """Malformed input file."""


def _data_lines(text: str, keep_blank: bool = False) -> list[str]:
    out = []
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        if not stripped and not keep_blank:
            continue
        out.append(stripped)
    return out


def parse_edge_list(text: str) -> Graph:
    """``n m`` header then m ``u v`` lines; blanks and ``#`` comments ignored."""
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty graph file")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected edge 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise FormatError(f"bad edge {line!r}") from exc
    try:
        return from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """``n m`` header then m hyperedge lines (an empty line is the empty edge)."""
    lines = _data_lines(text, keep_blank=True)
    while lines and not lines[0]:
        lines.pop(0)
    if not lines:
        raise FormatError("empty hypergraph file")
    header = lines[0].split()
    if len(header) != 2:
        raise FormatError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise FormatError(f"bad header {lines[0]!r}") from exc
    body = lines[1:]
    if len(body) < m:
        raise FormatError(f"expected {m} hyperedge lines, found {len(body)}")
    if any(body[m:]):
        raise FormatError("unexpected trailing content after the hyperedges")
    edges = []
    for line in body[:m]:
        try:
            edges.append([int(tok) for tok in line.split()])
        except ValueError as exc:
            raise FormatError(f"bad hyperedge {line!r}") from exc
    try:
        return Hypergraph(
            n,
            tuple(sorted({sum(1 << v for v in _checked(edge, n)) for edge in edges})),
        )
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _checked(edge: Iterable[int], n: int) -> Iterable[int]:
    for v in edge:
        if not 0 <= v < n:
            raise FormatError(f"hyperedge vertex {v} out of range for n={n}")
        yield v


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"{h.n} {len(h.edges)}"]
    for e in h.edges:
        lines.append(" ".join(str(v) for v in range(h.n) if e >> v & 1))
    return "\n".join(lines) + "\n"


def format_pace(td: TreeDecomposition, n: int) -> str:
    """PACE-2017 .td text: ``s td <#bags> <width+1> <n>``, 1-based throughout."""
    lines = [f"s td {len(td.bags)} {td.width + 1} {n}"]
    for i, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(i + 1)] + [str(v + 1) for v in bag]))
    for a, b in td.tree.edges:
        lines.append(f"{a + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def parse_pace(text: str) -> tuple[TreeDecomposition, int, int]:
    """Parse a .td file; returns (decomposition, declared width+1, declared n)."""
    bags: dict[int, tuple[int, ...]] = {}
    tree_edges = []
    header = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise FormatError("duplicate solution header")
            if len(parts) != 5 or parts[1] != "td":
                raise FormatError(f"bad solution header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]), int(parts[4]))
            except ValueError as exc:
                raise FormatError(f"bad solution header {line!r}") from exc
        elif parts[0] == "b":
            try:
                idx = int(parts[1])
                verts = tuple(sorted(int(v) - 1 for v in parts[2:]))
            except (ValueError, IndexError) as exc:
                raise FormatError(f"bad bag line {line!r}") from exc
            if idx in bags:
                raise FormatError(f"duplicate bag id {idx}")
            bags[idx] = verts
        else:
            if len(parts) != 2:
                raise FormatError(f"bad tree edge {line!r}")
            try:
                tree_edges.append((int(parts[0]) - 1, int(parts[1]) - 1))
            except ValueError as exc:
                raise FormatError(f"bad tree edge {line!r}") from exc
    if header is None:
        raise FormatError("missing solution header")
    count, width_plus_one, n = header
    if sorted(bags) != list(range(1, count + 1)):
        raise FormatError("bag ids must be 1..#bags")
    ordered = tuple(bags[i] for i in range(1, count + 1))
    try:
        td = TreeDecomposition(from_edges(count, tree_edges), ordered)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    return td, width_plus_one, n


def decomposition_dict(td: TreeDecomposition, n: int) -> dict:
    """JSON-ready mirror of the PACE structure."""
    return {
        "bags": [list(bag) for bag in td.bags],
        "tree_edges": [list(e) for e in td.tree.edges],
        "width": td.width,
        "object_vertices": n,
    }
