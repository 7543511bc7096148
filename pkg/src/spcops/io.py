"""The canonical graph file format: {"n": <int>, "edges": [[a, b], ...]}."""
from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph, normalize_edge


class GraphFileError(ValueError):
    pass


def graph_from_obj(obj) -> Graph:
    if not isinstance(obj, dict):
        raise GraphFileError("graph document must be a JSON object")
    if "n" not in obj or "edges" not in obj:
        raise GraphFileError('graph document needs "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphFileError('"n" must be a non-negative integer')
    edges = obj["edges"]
    if not isinstance(edges, list):
        raise GraphFileError('"edges" must be a list of pairs')
    seen = set()
    norm = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFileError(f"edges[{i}]: expected a pair of integers, got {e!r}")
        a, b = e
        if a == b:
            raise GraphFileError(f"edges[{i}]: self-loop at vertex {a}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFileError(f"edges[{i}]: endpoint out of range for n={n}")
        key = normalize_edge(a, b)
        if key in seen:
            raise GraphFileError(f"edges[{i}]: duplicate edge {a}-{b}")
        seen.add(key)
        norm.append(key)
    return Graph.from_edges(n, norm)


def load_graph(path: str | Path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphFileError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFileError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return graph_from_obj(obj)


def graph_to_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()]}


def dump_graph(g: Graph) -> str:
    return json.dumps(graph_to_obj(g), indent=2)
