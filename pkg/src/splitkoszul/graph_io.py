"""JSON input and output for graphs, surfaces and simplicial complexes.

Three document shapes are recognised::

    {"vertices": [{"id": "a", "level": 1}, ...], "edges": [["a", "*"], ...]}
    {"faces": [["1", "2", "3"], ...]}                          # closed surface
    {"ground": [1, 2, 3], "faces": [[1, 2], [2, 3], ...]}     # simplicial complex

An optional ``"kind"`` key ("graph", "surface" or "simplicial") overrides
detection.  Writers emit a canonical layout so output is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .builders import SimplicialComplex, Surface2D, _sort_key, build_simplicial, build_surface
from .graph_core import LayeredGraph, validate_graph

KINDS = ("graph", "surface", "simplicial")


class ParseError(ValueError):
    """Malformed input; ``where`` is a line number or a field path."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass
class Loaded:
    kind: str
    graph: LayeredGraph
    source: Any  # Surface2D, SimplicialComplex, or None for plain graphs


def parse_json(text: str, name: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{name} line {exc.lineno} column {exc.colno}") from exc


def detect_kind(doc: Any) -> str:
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "$")
    kind = doc.get("kind")
    if kind is not None:
        if kind not in KINDS:
            raise ParseError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", "$.kind")
        return kind
    if "vertices" in doc:
        return "graph"
    if "ground" in doc:
        return "simplicial"
    if "faces" in doc:
        return "surface"
    raise ParseError("cannot tell the format: expected 'vertices', 'faces' or 'ground'", "$")


def _list(doc: dict, key: str) -> list:
    val = doc.get(key)
    if not isinstance(val, list):
        raise ParseError("missing or not a list", f"$.{key}")
    return val


def _atom(x, where: str):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"expected a string or integer, got {type(x).__name__}", where)
    return x


def graph_from_doc(doc: dict) -> LayeredGraph:
    levels, edges = {}, []
    for i, v in enumerate(_list(doc, "vertices")):
        where = f"$.vertices[{i}]"
        if not isinstance(v, dict) or "id" not in v or "level" not in v:
            raise ParseError("each vertex needs 'id' and 'level'", where)
        vid, lvl = v["id"], v["level"]
        if not isinstance(vid, str):
            raise ParseError("id must be a string", where + ".id")
        if isinstance(lvl, bool) or not isinstance(lvl, int):
            raise ParseError("level must be an integer", where + ".level")
        if vid in levels:
            raise ParseError(f"duplicate vertex {vid!r}", where + ".id")
        levels[vid] = lvl
    for i, e in enumerate(_list(doc, "edges")):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)):
            raise ParseError("each edge is a [tail, head] pair of ids", f"$.edges[{i}]")
        edges.append((e[0], e[1]))
    return validate_graph(levels, edges, meta={"kind": "graph"})


def surface_from_doc(doc: dict) -> Surface2D:
    faces = []
    for i, f in enumerate(_list(doc, "faces")):
        if not isinstance(f, list):
            raise ParseError("each face is a list of vertex ids", f"$.faces[{i}]")
        faces.append([str(_atom(x, f"$.faces[{i}][{j}]")) for j, x in enumerate(f)])
    return Surface2D.from_faces(faces)


def simplicial_from_doc(doc: dict, strict: bool = False) -> SimplicialComplex:
    ground = [_atom(x, f"$.ground[{i}]") for i, x in enumerate(_list(doc, "ground"))]
    faces = []
    for i, f in enumerate(_list(doc, "faces")):
        if not isinstance(f, list):
            raise ParseError("each face is a list of ground elements", f"$.faces[{i}]")
        faces.append([_atom(x, f"$.faces[{i}][{j}]") for j, x in enumerate(f)])
    return SimplicialComplex.from_faces(faces, ground=ground, strict=strict)


def load_doc(doc: Any, strict: bool = False, add_top: bool = False) -> Loaded:
    """Build the layered graph described by a parsed document.

    ``add_top`` only applies to simplicial complexes.
    """
    kind = detect_kind(doc)
    if kind == "graph":
        return Loaded(kind, graph_from_doc(doc), None)
    if kind == "surface":
        s = surface_from_doc(doc)
        return Loaded(kind, build_surface(s), s)
    delta = simplicial_from_doc(doc, strict=strict)
    return Loaded(kind, build_simplicial(delta, add_top=add_top), delta)


def load(path: str | Path, strict: bool = False, add_top: bool = False) -> Loaded:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return load_doc(parse_json(text, str(path)), strict=strict, add_top=add_top)


# writers

def graph_to_doc(g: LayeredGraph) -> dict:
    return {
        "vertices": [{"id": v, "level": g.levels[v]} for v in sorted(g.levels, key=lambda v: (g.levels[v], v))],
        "edges": [list(e) for e in sorted(g.edges, key=lambda e: (-g.levels[e[0]], e))],
    }


def surface_to_doc(s: Surface2D) -> dict:
    return {"faces": [list(f) for f in s.faces]}


def simplicial_to_doc(delta: SimplicialComplex) -> dict:
    faces = [f for f in delta.faces if f]
    order = lambda f: (len(f), [_sort_key(x) for x in sorted(f, key=_sort_key)])  # noqa: E731
    return {
        "ground": sorted(delta.ground, key=_sort_key),
        "faces": [sorted(f, key=_sort_key) for f in sorted(faces, key=order)],
    }


def dumps(doc: Any) -> str:
    """Canonical text: two-space indent, short lists kept on one line."""
    return _render(doc, 0) + "\n"


def _render(x: Any, depth: int) -> str:
    pad = "  " * (depth + 1)
    if isinstance(x, dict):
        if not x:
            return "{}"
        if all(not isinstance(v, (dict, list)) for v in x.values()) and len(x) <= 4:
            return json.dumps(x, ensure_ascii=False)
        body = ",\n".join(f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {_render(v, depth + 1)}"
                          for k, v in x.items())
        return "{\n" + body + "\n" + "  " * depth + "}"
    if isinstance(x, list):
        if all(not isinstance(v, (dict, list)) for v in x):
            return json.dumps(x, ensure_ascii=False)
        return "[\n" + ",\n".join(pad + _render(v, depth + 1) for v in x) + "\n" + "  " * depth + "]"
    return json.dumps(x, ensure_ascii=False)


def save(doc: Any, path: str | Path) -> None:
    Path(path).write_text(dumps(doc), encoding="utf-8")

