"""Edge-list text format, label sidecars and DOT export.

Edge-list format: a header line ``n m`` followed by ``m`` lines ``u v`` with
0-based vertex ids. Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional

from .errors import EdgeListParseError, InvalidGraphError
from .graph import Graph, build_graph


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise EdgeListParseError(lineno, f"expected {count} integers, got {line.strip()!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise EdgeListParseError(lineno, f"non-integer token in {line.strip()!r}") from None


def parse_edge_list(text: str, labels: Optional[list[str]] = None) -> Graph:
    rows = [(i + 1, raw.split("#", 1)[0]) for i, raw in enumerate(text.splitlines())]
    rows = [(i, line) for i, line in rows if line.strip()]
    if not rows:
        raise EdgeListParseError(1, "missing 'n m' header")
    header_line, header = rows[0]
    n, m = _ints(header, header_line, 2)
    if n < 0 or m < 0:
        raise EdgeListParseError(header_line, "negative vertex or edge count")
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else header_line
        raise EdgeListParseError(last, f"header announces {m} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(lineno, f"vertex id out of range 0..{n - 1} in edge {u} {v}")
        if u == v:
            raise EdgeListParseError(lineno, f"self-loop {u} {v}")
        edges.append((u, v))
    if labels is not None and len(labels) != n:
        raise InvalidGraphError(f"label sidecar has {len(labels)} entries for {n} vertices")
    return build_graph(n, edges, labels)


def render_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def label_sidecar(g: Graph) -> str:
    return json.dumps({str(v): g.label(v) for v in g.vertices()}, indent=2) + "\n"


def read_graph(path: str | Path) -> Graph:
    """Read an edge list, picking up ``<path>.labels.json`` when present."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    sidecar = path.with_name(path.name + ".labels.json")
    labels = None
    if sidecar.exists():
        raw = json.loads(sidecar.read_text(encoding="utf-8"))
        labels = [raw[str(v)] for v in range(len(raw))]
    return parse_edge_list(text, labels)


def write_graph(g: Graph, path: str | Path) -> None:
    path = Path(path)
    path.write_text(render_edge_list(g), encoding="utf-8")
    path.with_name(path.name + ".labels.json").write_text(label_sidecar(g), encoding="utf-8")


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {_dot_id(name)} {{"]
    lines += [f"  {_dot_id(g.label(v))};" for v in g.vertices()]
    lines += [f"  {_dot_id(g.label(u))} -- {_dot_id(g.label(v))};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
