"""Text and JSON serialization of signed graphs.

Text format::

    # comment
    name handcuff        (optional)
    v 2
    e 0 1 +
    e 0 0 -

JSON format: ``{"name": ..., "vertices": n, "edges": [{"u": 0, "v": 1, "sign": "+"}]}``
(``sign`` may also be ``1``/``-1``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .graph import GraphError, SignedGraph

_SIGNS = {"+": 1, "-": -1, "+1": 1, "-1": -1, "1": 1}


class ParseError(ValueError):
    def __init__(self, line: Optional[int], message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class GraphDocument:
    graph: SignedGraph
    name: Optional[str] = None


def _sign(token, line: Optional[int]) -> int:
    key = str(token).strip()
    if key not in _SIGNS:
        raise ParseError(line, f"bad sign token {token!r}; expected + or -")
    return _SIGNS[key]


def parse_graph_document(text: str) -> GraphDocument:
    name = None
    n: Optional[int] = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "name":
            name = line[len("name"):].strip() or None
        elif tag == "v":
            if n is not None:
                raise ParseError(lineno, "duplicate 'v' line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(lineno, "expected 'v <vertex count>'")
            n = int(parts[1])
        elif tag == "e":
            if n is None:
                raise ParseError(lineno, "'e' line before the 'v' line")
            if len(parts) != 4:
                raise ParseError(lineno, "expected 'e <u> <v> <+|->'")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(lineno, "endpoints must be integers") from None
            for x in (u, v):
                if not 0 <= x < n:
                    raise ParseError(lineno, f"endpoint {x} out of range 0..{n - 1}")
            edges.append((u, v, _sign(parts[3], lineno)))
        else:
            raise ParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise ParseError(None, "missing 'v <vertex count>' line")
    try:
        return GraphDocument(SignedGraph(n, tuple(edges)), name)
    except GraphError as exc:
        raise ParseError(None, str(exc)) from None


def parse_graph(text: str) -> SignedGraph:
    return parse_graph_document(text).graph


def parse_graph_json(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise ParseError(None, "JSON graph needs a 'vertices' field")
    n = data["vertices"]
    if not isinstance(n, int) or n < 0:
        raise ParseError(None, "'vertices' must be a nonnegative integer")
    edges = []
    for i, rec in enumerate(data.get("edges", [])):
        try:
            u, v, s = rec["u"], rec["v"], rec["sign"]
        except (KeyError, TypeError):
            raise ParseError(None, f"edge {i} needs fields u, v, sign") from None
        if not (isinstance(u, int) and isinstance(v, int) and 0 <= u < n and 0 <= v < n):
            raise ParseError(None, f"edge {i} has an endpoint out of range 0..{n - 1}")
        edges.append((u, v, _sign(s, None)))
    return GraphDocument(SignedGraph(n, tuple(edges)), data.get("name"))


def render_graph(g: SignedGraph, name: Optional[str] = None) -> str:
    lines = [f"name {name}"] if name else []
    lines.append(f"v {g.vertex_count}")
    lines += [f"e {u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def render_graph_json(g: SignedGraph, name: Optional[str] = None) -> str:
    data = {"vertices": g.vertex_count, "edges": [
        {"u": u, "v": v, "sign": "+" if s > 0 else "-"} for u, v, s in g.edges
    ]}
    if name:
        data = {"name": name, **data}
    return json.dumps(data, indent=2) + "\n"


def load_graph(path) -> GraphDocument:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return parse_graph_json(text)
    return parse_graph_document(text)
