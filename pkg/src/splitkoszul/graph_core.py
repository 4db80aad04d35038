"""Layered graphs: the data model, validation, reachability and Möbius values.

A layered graph is the Hasse diagram of a ranked poset with a unique
minimal element ``*``.  Every edge ``(tail, head)`` drops exactly one level.
Vertex ids are strings so graphs serialize to JSON without translation.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Iterable, Iterator, Mapping

BOTTOM = "*"


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: object

    def __str__(self) -> str:
        return f"{self.kind}: {self.witness!r}"


class GraphValidationError(ValueError):
    """Raised when raw vertex/edge data is not a valid layered graph.

    ``violations`` lists every failed invariant, not just the first one.
    """

    def __init__(self, violations: list[Violation]):
        self.violations = list(violations)
        lines = "\n  ".join(str(v) for v in self.violations)
        super().__init__(f"invalid layered graph:\n  {lines}")

    @property
    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}


class NotComparable(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class LayeredGraph:
    """Immutable layered graph.  Build it with :func:`validate_graph`.

    ``order`` lists vertices by ascending (level, id); ``index`` inverts it.
    ``down[v]`` is the tuple of vertices covered by ``v`` (S_-(v)) and
    ``up[v]`` the vertices covering ``v``.
    """

    levels: Mapping[str, int]
    edges: frozenset
    min_vertex: str
    meta: dict = field(default_factory=dict, compare=False, repr=False)

    @cached_property
    def order(self) -> tuple[str, ...]:
        return tuple(sorted(self.levels, key=lambda v: (self.levels[v], v)))

    @cached_property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.order)}

    @cached_property
    def down(self) -> dict[str, tuple[str, ...]]:
        d = defaultdict(list)
        for t, h in self.edges:
            d[t].append(h)
        return {v: tuple(sorted(d[v], key=self.index.__getitem__)) for v in self.order}

    @cached_property
    def up(self) -> dict[str, tuple[str, ...]]:
        d = defaultdict(list)
        for t, h in self.edges:
            d[h].append(t)
        return {v: tuple(sorted(d[v], key=self.index.__getitem__)) for v in self.order}

    @property
    def height(self) -> int:
        return max(self.levels.values())

    @cached_property
    def by_level(self) -> tuple[tuple[str, ...], ...]:
        rows = [[] for _ in range(self.height + 1)]
        for v in self.order:
            rows[self.levels[v]].append(v)
        return tuple(tuple(r) for r in rows)

    def level(self, v: str) -> int:
        return self.levels[v]

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.order

    @property
    def generators(self) -> tuple[str, ...]:
        """Vertices of level >= 1 (the generating space V)."""
        return tuple(v for v in self.order if self.levels[v] > 0)

    @cached_property
    def maximal(self) -> tuple[str, ...]:
        return tuple(v for v in self.order if not self.up[v])

    @property
    def top(self) -> str | None:
        m = self.maximal
        return m[0] if len(m) == 1 else None

    @cached_property
    def closure(self) -> "CoverClosure":
        return closure(self)

    def covers(self, a: str, b: str) -> bool:
        return self.levels[a] == self.levels[b] + 1 and b in self.down[a]

    def __eq__(self, other):
        if not isinstance(other, LayeredGraph):
            return NotImplemented
        return (dict(self.levels) == dict(other.levels) and self.edges == other.edges
                and self.min_vertex == other.min_vertex)

    def __hash__(self):
        return hash((frozenset(self.levels.items()), self.edges))

    def __repr__(self) -> str:
        sizes = tuple(len(r) for r in self.by_level)
        return f"LayeredGraph(levels={sizes}, edges={len(self.edges)})"

    def relabel(self, mapping: Mapping[str, str]) -> "LayeredGraph":
        """Rename vertices; ids missing from ``mapping`` keep their name."""
        name = lambda v: mapping.get(v, v)  # noqa: E731
        levels = {name(v): lv for v, lv in self.levels.items()}
        edges = [(name(t), name(h)) for t, h in self.edges]
        return validate_graph(levels, edges)

    def with_top(self, name: str = "M") -> "LayeredGraph":
        """Return a copy with a new vertex covering every maximal vertex.

        All maximal vertices must sit on the top level.
        """
        if name in self.levels:
            raise ValueError(f"vertex id {name!r} already used")
        levels = dict(self.levels)
        levels[name] = self.height + 1
        edges = list(self.edges) + [(name, m) for m in self.maximal]
        return validate_graph(levels, edges, meta=dict(self.meta))


@dataclass(frozen=True)
class CoverClosure:
    """Transitive closure of the cover relation as per-vertex bitsets.

    Bit ``i`` of ``bits[v]`` is set iff ``graph.order[i] < v``.
    """

    graph: LayeredGraph
    bits: Mapping[str, int]

    def below(self, v: str) -> Iterator[str]:
        b = self.bits[v]
        order = self.graph.order
        while b:
            low = b & -b
            yield order[low.bit_length() - 1]
            b ^= low

    def reach(self, v: str) -> frozenset[str]:
        return frozenset(self.below(v))

    def gt(self, v: str, w: str) -> bool:
        """True iff v > w strictly."""
        return bool(self.bits[v] >> self.graph.index[w] & 1)

    def ge(self, v: str, w: str) -> bool:
        return v == w or self.gt(v, w)

    def size(self) -> int:
        return sum(b.bit_count() for b in self.bits.values())


def validate_graph(levels: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]],
                   edges: Iterable[tuple[Hashable, Hashable]],
                   meta: dict | None = None) -> LayeredGraph:
    """Build a :class:`LayeredGraph`, collecting every violated invariant.

    ``levels`` maps vertex id to level (or is an iterable of pairs).  Raises
    :class:`GraphValidationError` naming all violations with witnesses.
    """
    violations: list[Violation] = []
    lv: dict[str, int] = {}
    items = levels.items() if isinstance(levels, Mapping) else levels
    for v, level in items:
        v = str(v)
        if v in lv:
            violations.append(Violation("DuplicateVertex", v))
            continue
        if isinstance(level, bool) or not isinstance(level, int) or level < 0:
            violations.append(Violation("BadLevel", (v, level)))
            continue
        lv[v] = level

    edge_set: set[tuple[str, str]] = set()
    for e in edges:
        t, h = (str(x) for x in e)
        if (t, h) in edge_set:
            violations.append(Violation("DuplicateEdge", (t, h)))
            continue
        missing = [x for x in (t, h) if x not in lv]
        if missing:
            violations.append(Violation("UnknownVertex", (t, h)))
            continue
        if lv[t] != lv[h] + 1:
            violations.append(Violation("NonLayeredEdge", (t, h)))
            continue
        edge_set.add((t, h))

    minima = sorted(v for v, level in lv.items() if level == 0)
    if len(minima) != 1:
        violations.append(Violation("MultipleMinima", minima))

    has_out = {t for t, _ in edge_set}
    for v in sorted(lv):
        if lv[v] >= 1 and v not in has_out:
            violations.append(Violation("DanglingVertex", v))

    if lv:
        present = set(lv.values())
        empty = [i for i in range(max(present) + 1) if i not in present]
        if empty:
            violations.append(Violation("EmptyLevel", empty))

    if violations:
        raise GraphValidationError(violations)
    return LayeredGraph(levels=dict(lv), edges=frozenset(edge_set),
                        min_vertex=minima[0], meta=dict(meta or {}))


def closure(g: LayeredGraph) -> CoverClosure:
    """One pass in ascending level order: reach(v) = OR over covers w of {w} | reach(w)."""
    bits: dict[str, int] = {}
    idx = g.index
    for v in g.order:
        b = 0
        for w in g.down[v]:
            b |= (1 << idx[w]) | bits[w]
        bits[v] = b
    return CoverClosure(g, bits)


def is_uniform(g: LayeredGraph) -> tuple[bool, tuple | None]:
    """Uniformity test.

    For each ``v`` of level >= 2 the covers ``u, w`` of ``v`` are joined when
    their own cover sets meet; uniform means one class per ``v``.  Returns
    ``(True, None)`` or ``(False, (v, class_a, class_b))``.
    """
    for v in g.order:
        if g.levels[v] < 2:
            continue
        cov = g.down[v]
        parent = {u: u for u in cov}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        owner: dict[str, str] = {}
        for u in cov:
            for x in g.down[u]:
                if x in owner:
                    parent[find(u)] = find(owner[x])
                else:
                    owner[x] = u
        classes = defaultdict(list)
        for u in cov:
            classes[find(u)].append(u)
        if len(classes) > 1:
            a, b = sorted(classes.values())[:2]
            return False, (v, frozenset(a), frozenset(b))
    return True, None


def mobius_from(g: LayeredGraph, y: str) -> dict[str, int]:
    """μ(y, x) for every x >= y, by μ(y,y)=1 and Σ_{y<=z<=x} μ(y,z) = 0."""
    cl = g.closure
    mu = {y: 1}
    above = [x for x in g.order if cl.gt(x, y)]
    for x in above:
        mu[x] = -sum(mu[z] for z in cl.below(x) if z in mu)
    return mu


def mobius(g: LayeredGraph, x: str, y: str) -> int:
    """Möbius value μ(y, x) of the interval [y, x]; requires x >= y."""
    if not g.closure.ge(x, y):
        raise NotComparable(f"{x!r} is not >= {y!r}")
    return mobius_from(g, y)[x]


def isomorphic(g1: LayeredGraph, g2: LayeredGraph) -> bool:
    """Level-preserving isomorphism test (delegates to networkx VF2)."""
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher

    if sorted(map(len, g1.by_level)) != sorted(map(len, g2.by_level)) or len(g1.edges) != len(g2.edges):
        return False

    def nxg(g):
        d = nx.DiGraph()
        for v, level in g.levels.items():
            d.add_node(v, level=level)
        d.add_edges_from(g.edges)
        return d

    m = DiGraphMatcher(nxg(g1), nxg(g2), node_match=lambda a, b: a["level"] == b["level"])
    return m.is_isomorphic()
