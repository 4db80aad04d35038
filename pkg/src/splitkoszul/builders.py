"""Constructors turning combinatorial data into layered graphs."""

from __future__ import annotations

import warnings
from collections import defaultdict, deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Hashable, Iterable, Mapping, Sequence

from .graph_core import BOTTOM, GraphValidationError, LayeredGraph, Violation, validate_graph


class BuildError(ValueError):
    """Input data rejected by a builder; ``kind`` names the failed check."""

    def __init__(self, kind: str, detail: str = ""):
        self.kind = kind
        super().__init__(f"{kind}: {detail}" if detail else kind)


# complete layered graphs

def build_complete(sizes: Sequence[int]) -> LayeredGraph:
    """Every vertex of level i covers every vertex of level i - 1."""
    if not sizes or sizes[0] != 1:
        raise BuildError("BadBottom", f"sizes[0] must be 1, got {list(sizes)[:1]}")
    if any(n < 1 for n in sizes):
        raise BuildError("BadSizes", f"level sizes must be positive: {list(sizes)}")
    names = [[BOTTOM]] + [[f"{i}.{j}" for j in range(1, n + 1)] for i, n in enumerate(sizes) if i]
    levels = {v: i for i, row in enumerate(names) for v in row}
    edges = [(t, h) for i in range(1, len(names)) for t in names[i] for h in names[i - 1]]
    return validate_graph(levels, edges, meta={"kind": "complete", "sizes": list(sizes)})


# simplicial complexes

def face_id(face: Iterable) -> str:
    items = sorted(face, key=_sort_key)
    return ",".join(str(x) for x in items) if items else BOTTOM


def _sort_key(x):
    return (0, x, "") if isinstance(x, (int, float)) else (1, 0, str(x))


@dataclass(frozen=True)
class SimplicialComplex:
    """Abstract simplicial complex: a downward-closed family of finite sets."""

    ground: frozenset
    faces: frozenset  # of frozensets, the empty face included

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[Hashable]], ground: Iterable | None = None,
                   strict: bool = False, warn: bool = True) -> "SimplicialComplex":
        """Build from generating faces.

        With ``strict`` the family must already be downward closed and contain
        every singleton of ``ground``; otherwise it is completed (with a
        warning when anything had to be added).
        """
        given = {frozenset(f) for f in faces}
        gset = frozenset(ground) if ground is not None else frozenset().union(*given) if given else frozenset()
        stray = frozenset().union(*given) - gset if given else frozenset()
        if stray:
            raise BuildError("FaceOutsideGround", f"{sorted(stray, key=_sort_key)}")
        closed = set()
        for f in given | {frozenset([x]) for x in gset} | {frozenset()}:
            for r in range(len(f) + 1):
                closed.update(frozenset(c) for c in combinations(sorted(f, key=_sort_key), r))
        # the empty face is always implied and never counts as missing
        missing = closed - given - {frozenset()}
        if missing:
            witness = min(missing, key=lambda s: (len(s), sorted(map(str, s))))
            if strict:
                raise BuildError("NotDownwardClosed", f"missing face {set(witness)}")
            if warn:
                warnings.warn(f"completed simplicial complex with {len(missing)} faces", stacklevel=2)
        return cls(gset, frozenset(closed))

    @classmethod
    def simplex(cls, n: int) -> "SimplicialComplex":
        """Δ_n: all subsets of {1, ..., n}."""
        return cls.from_faces([range(1, n + 1)], warn=False)

    @classmethod
    def simplex_boundary(cls, n: int) -> "SimplicialComplex":
        """All proper subsets of {1, ..., n}."""
        full = list(range(1, n + 1))
        return cls.from_faces([c for c in combinations(full, n - 1)], ground=full, warn=False)

    def by_size(self, i: int) -> list[frozenset]:
        return sorted((f for f in self.faces if len(f) == i), key=lambda s: sorted(s, key=_sort_key))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1


def build_simplicial(delta: SimplicialComplex, add_top: bool = False) -> LayeredGraph:
    """Face poset of Δ: level = cardinality, edges S -> S minus {s}.

    The result has no unique top in general; ``add_top`` appends one vertex
    ``M`` over all maximal faces (they must all have the same size).
    """
    for f in delta.faces:
        for s in f:
            if f - {s} not in delta.faces:
                raise BuildError("NotDownwardClosed", f"{set(f)} present but {set(f - {s}) or '{}'} missing")
    levels = {face_id(f): len(f) for f in delta.faces}
    edges = [(face_id(f), face_id(f - {s})) for f in delta.faces for s in f]
    meta = {"kind": "simplicial", "faces": {face_id(f): f for f in delta.faces},
            "f_vector": [len(delta.by_size(i)) for i in range(delta.dimension + 2)]}
    g = validate_graph(levels, edges, meta=meta)
    if add_top:
        maxima = g.maximal
        if len({g.levels[m] for m in maxima}) != 1:
            raise BuildError("RankViolation", "maximal faces of different sizes")
        g = g.with_top("M")
    return g


# surfaces

@dataclass(frozen=True)
class Surface2D:
    """Closed oriented surface given by its faces as cyclic vertex lists.

    After :meth:`from_faces`, ``faces`` holds the consistently oriented
    cycles (the first face keeps its given order), ``edges`` the unordered
    endpoint pairs as sorted tuples, and ``edge_faces`` the two face indices
    on each edge.
    """

    faces: tuple[tuple[str, ...], ...]
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    edge_faces: Mapping[tuple[str, str], tuple[int, int]] = field(repr=False)

    @property
    def g(self) -> int:
        return len(self.vertices)

    @property
    def h(self) -> int:
        return len(self.edges)

    @property
    def f(self) -> int:
        return len(self.faces)

    @property
    def u(self) -> int:
        return self.g + self.f

    @property
    def chi(self) -> int:
        return self.g - self.h + self.f

    @staticmethod
    def face_edges(face: Sequence[str]) -> list[tuple[str, str]]:
        """Directed boundary edges (a, b) of a cyclic face, in order."""
        return [(face[i], face[(i + 1) % len(face)]) for i in range(len(face))]

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[Hashable]]) -> "Surface2D":
        cycles = [tuple(str(x) for x in f) for f in faces]
        if not cycles:
            raise BuildError("Empty", "no faces")
        for i, c in enumerate(cycles):
            if len(c) < 3:
                raise BuildError("ShortFace", f"face {i} has {len(c)} vertices")
            for a, b in cls.face_edges(c):
                if a == b:
                    raise BuildError("LoopEdge", f"face {i} has an edge from {a} to itself")
            if len(set(c)) != len(c):
                raise BuildError("FaceRepeatsVertex", f"face {i}: {c}")

        incidence: dict[tuple[str, str], list[int]] = defaultdict(list)
        for i, c in enumerate(cycles):
            for a, b in cls.face_edges(c):
                incidence[tuple(sorted((a, b)))].append(i)
        for e, fs in sorted(incidence.items()):
            if len(fs) != 2 or fs[0] == fs[1]:
                raise BuildError("EdgeNotOnTwoFaces", f"edge {e} lies on faces {fs}")

        # BFS over face adjacency; a shared edge must be traversed in opposite directions
        flip: dict[int, bool] = {0: False}
        queue = deque([0])
        while queue:
            i = queue.popleft()
            ci = cycles[i][::-1] if flip[i] else cycles[i]
            for a, b in cls.face_edges(ci):
                other = next(j for j in incidence[tuple(sorted((a, b)))] if j != i)
                same = (a, b) in cls.face_edges(cycles[other])
                want = same  # other must run b -> a, so reverse it iff it runs a -> b
                if other in flip:
                    if flip[other] != want:
                        raise BuildError("NonOrientable", f"faces {i} and {other} disagree along {a}-{b}")
                else:
                    flip[other] = want
                    queue.append(other)
        if len(flip) != len(cycles):
            unreached = sorted(set(range(len(cycles))) - set(flip))
            raise BuildError("Disconnected", f"faces {unreached[:5]} not reachable from face 0")

        oriented = tuple(c[::-1] if flip[i] else c for i, c in enumerate(cycles))
        verts = tuple(sorted({x for c in cycles for x in c}))
        edges = tuple(sorted(incidence))
        return cls(oriented, verts, edges, {e: tuple(incidence[e]) for e in edges})

    def incidence_sign(self, face: int, edge: tuple[str, str]) -> int:
        """+1 if the oriented face runs along ``edge`` from its tail edge[0] to its head edge[1].

        Edge tails are the lexicographically smaller endpoint.
        """
        for a, b in self.face_edges(self.faces[face]):
            if (a, b) == edge:
                return 1
            if (b, a) == edge:
                return -1
        raise KeyError(f"edge {edge} not on face {face}")


def surface_ids(s: Surface2D) -> dict:
    """Vertex ids used by :func:`build_surface` for cells of ``s``."""
    return {
        "vertex": {v: f"v:{v}" for v in s.vertices},
        "edge": {e: f"e:{e[0]}|{e[1]}" for e in s.edges},
        "face": {i: f"F{i}" for i in range(s.f)},
    }


def build_surface(s: Surface2D) -> LayeredGraph:
    """Five-level graph * < vertices < edges < faces < M with boundary covers."""
    ids = surface_ids(s)
    levels = {BOTTOM: 0, "M": 4}
    edges = []
    for v, vid in ids["vertex"].items():
        levels[vid] = 1
        edges.append((vid, BOTTOM))
    for e, eid in ids["edge"].items():
        levels[eid] = 2
        edges += [(eid, ids["vertex"][e[0]]), (eid, ids["vertex"][e[1]])]
    for i, fid in ids["face"].items():
        levels[fid] = 3
        edges.append(("M", fid))
        for a, b in Surface2D.face_edges(s.faces[i]):
            edges.append((fid, ids["edge"][tuple(sorted((a, b)))]))
    meta = {"kind": "surface", "surface": s, "g": s.g, "h": s.h, "f": s.f, "u": s.u,
            "chi": s.chi, "ids": ids}
    return validate_graph(levels, edges, meta=meta)


def build_cell_poset(cells: Mapping[str, tuple[int, Sequence[str]]], dim: int) -> LayeredGraph:
    """Cell poset with an appended top ``M`` and bottom ``*``.

    ``cells`` maps a cell id to ``(dimension, boundary cell ids)``; boundary
    cells must have dimension one less.  Cells get level dimension + 1, the
    top gets ``dim + 2`` and covers the maximal cells, which must all have
    dimension ``dim``.
    """
    levels = {BOTTOM: 0, "M": dim + 2}
    edges = []
    counts = defaultdict(int)
    covered = set()
    for c, (d, boundary) in cells.items():
        if c in levels:
            raise BuildError("ReservedId", c)
        if not 0 <= d <= dim:
            raise BuildError("RankViolation", f"cell {c} has dimension {d} outside 0..{dim}")
        levels[c] = d + 1
        counts[d] += 1
        if d == 0:
            if boundary:
                raise BuildError("RankViolation", f"0-cell {c} has a boundary")
            edges.append((c, BOTTOM))
    for c, (d, boundary) in cells.items():
        for b in boundary:
            if b not in cells:
                raise BuildError("UnknownCell", f"{b} in boundary of {c}")
            if cells[b][0] != d - 1:
                raise BuildError("RankViolation", f"{c} (dim {d}) covers {b} (dim {cells[b][0]})")
            edges.append((c, b))
            covered.add(b)
    for c, (d, _) in cells.items():
        if c not in covered:
            if d != dim:
                raise BuildError("RankViolation", f"maximal cell {c} has dimension {d} < {dim}")
            edges.append(("M", c))
    chi = sum((-1) ** d * n for d, n in counts.items())
    try:
        return validate_graph(levels, edges, meta={"kind": "cells", "chi": chi})
    except GraphValidationError as exc:
        raise BuildError("RankViolation", str(exc)) from exc


def build_cassidy_shelton() -> LayeredGraph:
    """The 11-vertex height-4 uniform graph whose algebra is not Koszul."""
    levels = {"u": 4, BOTTOM: 0}
    edges = []
    for i in (1, 2, 3):
        levels[f"w{i}"], levels[f"x{i}"], levels[f"y{i}"] = 3, 2, 1
        edges += [("u", f"w{i}"), (f"y{i}", BOTTOM)]
        for j in (1, 2, 3):
            if i != j:
                edges += [(f"w{i}", f"x{j}"), (f"x{i}", f"y{j}")]
    return validate_graph(levels, edges, meta={"kind": "cassidy-shelton"})


# named surface fixtures

def tetrahedron() -> Surface2D:
    return Surface2D.from_faces([(1, 2, 3), (1, 4, 2), (2, 4, 3), (3, 4, 1)])


def cube() -> Surface2D:
    # vertices 0..7 as binary xyz
    return Surface2D.from_faces([
        (0, 2, 3, 1), (4, 5, 7, 6), (0, 1, 5, 4), (2, 6, 7, 3), (0, 4, 6, 2), (1, 3, 7, 5)])


def octahedron() -> Surface2D:
    # poles N, S around the equator a b c d
    eq = ["a", "b", "c", "d"]
    faces = []
    for i in range(4):
        x, y = eq[i], eq[(i + 1) % 4]
        faces += [("N", x, y), ("S", y, x)]
    return Surface2D.from_faces(faces)


def square_pyramid() -> Surface2D:
    return Surface2D.from_faces([(1, 2, 3, 4), (1, 5, 2), (2, 5, 3), (3, 5, 4), (4, 5, 1)])


def grid_torus(rows: int = 3, cols: int = 3) -> Surface2D:
    """rows x cols squares with opposite sides glued.

    Needs rows, cols >= 3 for the decomposition to be good.
    """
    def v(i, j):
        return f"{i % rows}_{j % cols}"
    return Surface2D.from_faces(
        [(v(i, j), v(i, j + 1), v(i + 1, j + 1), v(i + 1, j)) for i in range(rows) for j in range(cols)])


def surface_fixtures() -> dict[str, Surface2D]:
    return {
        "tetrahedron": tetrahedron(),
        "cube": cube(),
        "octahedron": octahedron(),
        "square_pyramid": square_pyramid(),
        "torus3x3": grid_torus(3, 3),
        "torus3x4": grid_torus(3, 4),
    }


def surface_to_cells(s: Surface2D) -> dict[str, tuple[int, list[str]]]:
    """Express a surface as cell-poset input using the ids of :func:`build_surface`."""
    ids = surface_ids(s)
    cells = {vid: (0, []) for vid in ids["vertex"].values()}
    for e, eid in ids["edge"].items():
        cells[eid] = (1, [ids["vertex"][e[0]], ids["vertex"][e[1]]])
    for i, fid in ids["face"].items():
        cells[fid] = (2, [ids["edge"][tuple(sorted(p))] for p in Surface2D.face_edges(s.faces[i])])
    return cells
