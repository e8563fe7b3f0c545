"""Reading and writing presentation graphs.

Text format, one item per line::

    # comment
    v a          declare a vertex
    a b 3        edge a–b with label 3 (endpoints are declared implicitly)

JSON format::

    {"name": "...", "vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 3}]}
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GraphInputError
from .graph import PresentationGraph, check_label


@dataclass(frozen=True)
class GraphDocument:
    graph: PresentationGraph
    path: str | None = None
    format: str = "text"
    lines: dict = field(default_factory=dict, compare=False)  # vertex/edge -> source line


def parse_text(text: str, name: str | None = None, path=None) -> GraphDocument:
    vertices: list[str] = []
    declared: set[str] = set()
    edges = []
    where: dict = {}
    seen_pairs: dict = {}

    def declare(v, lineno):
        if v not in declared:
            declared.add(v)
            vertices.append(v)
            where[v] = lineno

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if len(tok) == 2 and tok[0] == "v":
            declare(tok[1], lineno)
        elif len(tok) == 3:
            u, v, m = tok
            try:
                m = int(m)
            except ValueError:
                raise GraphInputError(f"label {tok[2]!r} is not an integer", lineno) from None
            if u == v:
                raise GraphInputError(f"self-loop at {u!r}", lineno)
            try:
                check_label(m)
            except GraphInputError as exc:
                raise GraphInputError(str(exc), lineno) from None
            pair = frozenset((u, v))
            if pair in seen_pairs:
                raise GraphInputError(
                    f"duplicate edge {u}–{v} (first given on line {seen_pairs[pair]})", lineno)
            seen_pairs[pair] = lineno
            declare(u, lineno)
            declare(v, lineno)
            edges.append((u, v, m))
            where[pair] = lineno
        else:
            raise GraphInputError(
                f"expected 'v <name>' or '<u> <v> <label>', got {line!r}", lineno)
    return GraphDocument(PresentationGraph(vertices, edges, name=name), path, "text", where)


def graph_from_json(d) -> PresentationGraph:
    if not isinstance(d, dict) or "vertices" not in d:
        raise GraphInputError("graph JSON must be an object with a 'vertices' list")
    edges = []
    seen = set()
    for i, e in enumerate(d.get("edges", [])):
        try:
            u, v, m = e["u"], e["v"], e["m"]
        except (KeyError, TypeError):
            raise GraphInputError(f"edge #{i} must have keys u, v, m") from None
        pair = frozenset((u, v))
        if pair in seen:
            raise GraphInputError(f"duplicate edge {u}–{v} (edge #{i})")
        seen.add(pair)
        edges.append((u, v, m))
    return PresentationGraph(d["vertices"], edges, name=d.get("name"))


def parse_json(text: str, path=None) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return GraphDocument(graph_from_json(data), path, "json")


def parse(text: str, fmt: str | None = None, name=None, path=None) -> GraphDocument:
    """Parse either format; ``fmt=None`` sniffs JSON by a leading brace."""
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "text"
    if fmt == "json":
        doc = parse_json(text, path)
        if name and doc.graph.name is None:
            doc = GraphDocument(doc.graph.with_name(name), path, "json")
        return doc
    return parse_text(text, name=name, path=path)


def load(path) -> GraphDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphInputError(f"cannot read {path}: {exc.strerror}") from None
    fmt = "json" if path.suffix == ".json" else None
    return parse(text, fmt, name=path.stem, path=str(path))


def graph_to_json(g: PresentationGraph) -> dict:
    out = {}
    if g.name is not None:
        out["name"] = g.name
    out["vertices"] = list(g.vertices)
    out["edges"] = [{"u": u, "v": v, "m": m} for u, v, m in g.edges()]
    return out


def render_text(g: PresentationGraph) -> str:
    lines = []
    if g.name:
        lines.append(f"# {g.name}")
    lines += [f"v {v}" for v in g.vertices]
    lines += [f"{u} {v} {m}" for u, v, m in g.edges()]
    return "\n".join(lines) + "\n"


def render_json(g: PresentationGraph) -> str:
    return json.dumps(graph_to_json(g), indent=2, ensure_ascii=False) + "\n"


def _dot_id(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: PresentationGraph, highlight_odd: bool = False) -> str:
    lines = [f"graph {_dot_id(g.name or 'G')} {{"]
    for v in g.vertices:
        lines.append(f"  {_dot_id(v)};")
    for u, v, m in g.edges():
        attrs = [f"label={m}"]
        if highlight_odd and m % 2:
            attrs += ["color=red", "penwidth=2"]
        lines.append(f"  {_dot_id(u)} -- {_dot_id(v)} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
