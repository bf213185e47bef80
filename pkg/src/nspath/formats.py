"""Graph documents: plain edge-list text and a JSON document.

Edge-list text::

    # comments and blank lines are ignored
    n u v
    a b
    a b
    ...

The JSON document carries the same fields by name, plus the optional
``name``, ``targets``, ``h`` and ``parts`` used by the ``forest`` command.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError, build_graph

EDGELIST = "edgelist"
DOC = "doc"


class ParseError(GraphError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass
class GraphDocument:
    n: int
    edges: list[tuple[int, int]]
    u: int
    v: int
    name: Optional[str] = None
    targets: Optional[list[tuple[int, int, Optional[int]]]] = None
    h: Optional[int] = None
    parts: Optional[list[list[int]]] = field(default=None)

    def graph(self) -> Graph:
        return build_graph(self.n, self.edges)


def _dedupe(edges):
    seen = set()
    out = []
    for a, b in edges:
        key = (min(a, b), max(a, b))
        if key not in seen:
            seen.add(key)
            out.append((a, b))
    return out


def _check(doc: GraphDocument, where=None) -> GraphDocument:
    if doc.n < 1:
        raise ParseError(f"vertex count must be positive, got {doc.n}", where)
    for x, label in ((doc.u, "u"), (doc.v, "v")):
        if not 0 <= x < doc.n:
            raise ParseError(f"{label}={x} is not a vertex of a {doc.n}-vertex graph", where)
    return doc


def parse_graph(text: str, fmt: str = EDGELIST) -> GraphDocument:
    if fmt == EDGELIST:
        return _parse_edgelist(text)
    if fmt == DOC:
        return _parse_doc(text)
    raise ParseError(f"unknown format {fmt!r}")


def _parse_edgelist(text: str) -> GraphDocument:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if header is None:
            if len(values) != 3:
                raise ParseError("header must be 'n u v'", lineno)
            header = values
            n = values[0]
            if n < 1:
                raise ParseError(f"vertex count must be positive, got {n}", lineno)
            continue
        if len(values) != 2:
            raise ParseError("edge lines must be 'a b'", lineno)
        a, b = values
        if a == b:
            raise ParseError(f"self-loop ({a}, {b})", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"edge ({a}, {b}) out of range for n={n}", lineno)
        edges.append((a, b))
    if header is None:
        raise ParseError("missing 'n u v' header")
    n, u, v = header
    return _check(GraphDocument(n, _dedupe(edges), u, v), 1)


def _parse_doc(text: str) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    for key in ("n", "edges", "u", "v"):
        if key not in data:
            raise ParseError(f"missing field {key!r}")
    n = data["n"]
    edges = []
    for pair in data["edges"]:
        if len(pair) != 2:
            raise ParseError(f"bad edge {pair!r}")
        a, b = int(pair[0]), int(pair[1])
        if a == b:
            raise ParseError(f"self-loop ({a}, {b})")
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"edge ({a}, {b}) out of range for n={n}")
        edges.append((a, b))
    targets = data.get("targets")
    if targets is not None:
        targets = [(int(t[0]), int(t[1]), None if len(t) < 3 or t[2] is None else int(t[2]))
                   for t in targets]
    parts = data.get("parts")
    if parts is not None:
        parts = [[int(x) for x in p] for p in parts]
    doc = GraphDocument(int(n), _dedupe(edges), int(data["u"]), int(data["v"]),
                        data.get("name"), targets, data.get("h"), parts)
    return _check(doc)


def serialize(doc: GraphDocument, fmt: str = EDGELIST) -> str:
    if fmt == EDGELIST:
        lines = [f"{doc.n} {doc.u} {doc.v}"]
        lines += [f"{a} {b}" for a, b in doc.edges]
        return "\n".join(lines) + "\n"
    if fmt == DOC:
        data = {"name": doc.name, "n": doc.n, "u": doc.u, "v": doc.v,
                "edges": [list(e) for e in doc.edges]}
        if doc.targets is not None:
            data["targets"] = [list(t) for t in doc.targets]
        if doc.h is not None:
            data["h"] = doc.h
        if doc.parts is not None:
            data["parts"] = doc.parts
        return json.dumps(data, sort_keys=True) + "\n"
    raise ParseError(f"unknown format {fmt!r}")


def from_graph(G: Graph, u: int, v: int, name: Optional[str] = None) -> GraphDocument:
    return GraphDocument(G.n, G.edges(), u, v, name)
