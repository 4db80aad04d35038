"""Signed orbit bases for surface graphs.

A context (v, w) is a pair of vertices with level(v) - level(w) >= 2.  Its
admissible monomials are the cover chains from v that end on a vertex
covering w and can be altered at every interior position.  Changing one
position of such a chain to the only other possible vertex is a
conjugation; the orbits of the group these generate, with suitable signs,
span the deletion kernel of the context.

For the graph of a closed oriented surface the signs come from two local
incidence numbers:

* ``s(F, e) = +1`` when the oriented face F runs along e from tail to head
  (tails are the lexicographically smaller endpoint);
* ``d(e, x) = +1`` when x is the head of e and ``-1`` when it is the tail.

The sign of a chain is s(F, e) if both F and e occur on it (the bottom
vertex included), times d(e, x) if both e and x occur.  Each conjugation
flips exactly one factor: swapping a face flips s, swapping an endpoint
flips d, and swapping the edge at a corner flips both s and d on that edge
in opposite ways, so their product changes sign.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .builders import Surface2D
from .dual_algebra import Monomial, alternatives, deletion_system, enumerate_admissible, enumerate_linked, prune
from .exact import ExactMatrix, kernel_dim
from .graph_core import LayeredGraph


class NotSurfaceGraph(ValueError):
    pass


class NotAdmissible(ValueError):
    pass


class NonUniqueConjugate(ValueError):
    pass


class NoOrientation(ValueError):
    pass


class InternalCheckError(AssertionError):
    pass


@dataclass(frozen=True)
class Orientation:
    """Local incidence signs of an oriented surface graph.

    ``face_edge[(F, e)]`` is s(F, e) and ``edge_vertex[(e, x)]`` is d(e, x),
    both keyed by graph vertex ids.
    """

    graph: LayeredGraph = field(repr=False)
    face_edge: dict
    edge_vertex: dict

    def sign(self, m: Monomial, w: str) -> int:
        """Sign of the chain ``m`` followed by the bottom ``w``."""
        chain = tuple(m) + (w,)
        lv = self.graph.levels
        by_level = {lv[x]: x for x in chain}
        face, edge, vert = by_level.get(3), by_level.get(2), by_level.get(1)
        o = 1
        if face is not None and edge is not None:
            o *= self.face_edge[face, edge]
        if edge is not None and vert is not None:
            o *= self.edge_vertex[edge, vert]
        return o

    __call__ = sign

    def signs(self, v: str, w: str) -> dict[Monomial, int]:
        return {m: self.sign(m, w) for m in enumerate_admissible(self.graph, v, bottom=w)}


def _surface_of(g: LayeredGraph) -> Surface2D:
    s = g.meta.get("surface") if g.meta else None
    if g.meta.get("kind") != "surface" or not isinstance(s, Surface2D):
        raise NotSurfaceGraph("graph was not built from surface data")
    return s


def orient_surface(g: LayeredGraph) -> Orientation:
    s = _surface_of(g)
    ids = g.meta["ids"]
    face_edge, edge_vertex = {}, {}
    for e, eid in ids["edge"].items():
        tail, head = e
        edge_vertex[eid, ids["vertex"][head]] = 1
        edge_vertex[eid, ids["vertex"][tail]] = -1
        for i in s.edge_faces[e]:
            face_edge[ids["face"][i], eid] = s.incidence_sign(i, e)
    return Orientation(g, face_edge, edge_vertex)


def conjugate(g: LayeredGraph, m: Monomial, k: int, bottom: str) -> Monomial:
    """The monomial differing from ``m`` exactly at position ``k``."""
    alts = alternatives(g, tuple(m), k, bottom)
    if not alts:
        raise NotAdmissible(f"no alternative at position {k} of {m}")
    if len(alts) > 1:
        raise NonUniqueConjugate(f"{len(alts)} alternatives at position {k} of {m}: {sorted(alts)}")
    return m[:k] + (alts[0],) + m[k + 1:]


def context_kernel_dim(g: LayeredGraph, v: str, w: str, modular: bool = False) -> int:
    """Deletion kernel inside the span of chains from v over w."""
    l = g.levels[v] - g.levels[w]
    cols = prune(enumerate_linked(g, v, bottom=w), range(1, l))
    if not cols:
        return 0
    return kernel_dim(deletion_system(cols, l), modular=modular)


@dataclass
class OrbitDecomposition:
    v: str
    w: str
    monomials: list
    orbits: list  # of lists of monomials, each sorted
    sums: list | None  # signed orbit sums, when an orientation was supplied
    kernel_dim: int

    @property
    def matches(self) -> bool:
        return len(self.orbits) == self.kernel_dim


def orbit_decomposition(g: LayeredGraph, v: str, w: str, orientation: Orientation | None = None,
                        signed: bool | None = None, check: bool = True) -> OrbitDecomposition:
    """Partition the admissible chains of (v, w) into conjugation orbits.

    ``signed`` defaults to whether an orientation is given; asking for signed
    sums without one raises :class:`NoOrientation`.  With ``check`` the orbit
    count must equal the deletion-kernel dimension of the context.
    """
    if signed is None:
        signed = orientation is not None
    if signed and orientation is None:
        raise NoOrientation(f"signed orbit sums for ({v}, {w}) need an orientation")
    l = g.levels[v] - g.levels[w]
    if l < 2:
        raise ValueError(f"context ({v}, {w}) has level gap {l} < 2")
    mons = sorted(enumerate_admissible(g, v, bottom=w))
    seen: set = set()
    orbits = []
    for start in mons:
        if start in seen:
            continue
        seen.add(start)
        orbit, queue = [], deque([start])
        while queue:
            m = queue.popleft()
            orbit.append(m)
            for k in range(1, l):
                c = conjugate(g, m, k, w)
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        orbits.append(sorted(orbit))
    sums = None
    if signed:
        sums = [{m: orientation.sign(m, w) for m in orb} for orb in orbits]
    kd = context_kernel_dim(g, v, w)
    out = OrbitDecomposition(v, w, mons, orbits, sums, kd)
    if check and not out.matches:
        raise InternalCheckError(f"({v}, {w}): {len(orbits)} orbits but kernel dimension {kd}")
    return out


def contexts(g: LayeredGraph) -> list[tuple[str, str]]:
    """Every (v, w) with v a generator and level gap at least 2, in vertex order."""
    lv = g.levels
    return [(v, w) for v in g.order for w in g.order
            if lv[v] >= 1 and lv[v] - lv[w] >= 2 and w in g.closure.below(v)]


def surface_contexts(g: LayeredGraph) -> list[tuple[str, str]]:
    """The contexts (F, *), (M, w) for every w two or more levels down, and (M, *)."""
    _surface_of(g)
    faces = [(f, g.min_vertex) for f in g.by_level[3]]
    tops = [("M", w) for w in g.order if g.levels[w] <= 2]
    return faces + tops


def transitivity_check(g: LayeredGraph) -> bool:
    """Does every surface context consist of a single orbit?"""
    for v, w in surface_contexts(g):
        if len(orbit_decomposition(g, v, w, check=False).orbits) != 1:
            return False
    return True


@dataclass(frozen=True)
class FunctionalSpan:
    dim_G: int
    g_count: int
    dim_q: int
    contained: bool

    @property
    def holds(self) -> bool:
        """Both the containment and the count dim G = g - 1."""
        return self.contained and self.dim_G == self.g_count - 1


def functional_span_check(g: LayeredGraph, orientation: Orientation | None = None) -> FunctionalSpan:
    """Edge functionals killed by every face constraint versus the vertex functionals.

    G is the solution space of sum_e s(F, e) a(e) = 0 over all faces F, and
    q_x = sum over edges with tail x of e* minus sum over edges with head x.
    Every q_x lies in G; ``contained`` reports whether G is spanned by them.
    """
    orientation = orientation or orient_surface(g)
    edges = list(g.by_level[2])
    verts = list(g.by_level[1])
    constraints = {}
    for f in g.by_level[3]:
        constraints[f] = {e: orientation.face_edge[f, e] for e in g.down[f]}
    G = ExactMatrix(edges, constraints).nullspace()
    q = []
    for x in verts:
        q.append({e: -orientation.edge_vertex[e, x] for e in g.up[x]})
    dim_G, dim_q = len(G), ExactMatrix.from_vectors(q, edges).rank()
    both = ExactMatrix.from_vectors(list(q) + [{e: Fraction(c) for e, c in vec.items()} for vec in G], edges).rank()
    return FunctionalSpan(dim_G, len(verts), dim_q, contained=both == dim_q)


def orbit_table(g: LayeredGraph, ctxs: Iterable[tuple[str, str]] | None = None) -> list[dict]:
    """Rows (v, w, |A|, orbits, kernel dim, match) for reporting."""
    rows = []
    for v, w in (surface_contexts(g) if ctxs is None else ctxs):
        d = orbit_decomposition(g, v, w, check=False)
        rows.append({"v": v, "w": w, "admissible": len(d.monomials), "orbits": len(d.orbits),
                     "kernel_dim": d.kernel_dim, "match": d.matches})
    return rows
