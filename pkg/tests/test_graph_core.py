import pytest
from hypothesis import given, settings

import oracles
from splitkoszul import builders
from splitkoszul.graph_core import (BOTTOM, GraphValidationError, NotComparable, closure, is_uniform, isomorphic,
                                    mobius, mobius_from, validate_graph)


def chain_graph(n):
    levels = {BOTTOM: 0, **{f"c{i}": i for i in range(1, n + 1)}}
    edges = [(f"c{i}", f"c{i - 1}" if i > 1 else BOTTOM) for i in range(1, n + 1)]
    return validate_graph(levels, edges)


def test_basic_accessors():
    g = builders.build_cassidy_shelton()
    assert g.height == 4
    assert g.top == "u"
    assert g.min_vertex == BOTTOM
    assert len(g.generators) == 10
    assert set(g.down["w1"]) == {"x2", "x3"}
    assert set(g.up["y1"]) == {"x2", "x3"}
    assert [len(r) for r in g.by_level] == [1, 3, 3, 3, 1]


@pytest.mark.parametrize("levels, edges, kind", [
    ({"*": 0, "a": 1, "b": 1}, [("a", "*")], "DanglingVertex"),
    ({"*": 0, "o": 0, "a": 1}, [("a", "*")], "MultipleMinima"),
    ({"*": 0, "a": 2}, [("a", "*")], "NonLayeredEdge"),
    ({"*": 0, "a": 1}, [("a", "*"), ("a", "*")], "DuplicateEdge"),
    ({"*": 0, "a": 1}, [("a", "*"), ("a", "zz")], "UnknownVertex"),
    ({"*": 0, "a": -1}, [], "BadLevel"),
    ({"*": 0, "a": 2, "b": 3}, [("b", "a")], "EmptyLevel"),
])
def test_validation_errors(levels, edges, kind):
    with pytest.raises(GraphValidationError) as exc:
        validate_graph(levels, edges)
    assert kind in exc.value.kinds


def test_validation_reports_all_violations():
    with pytest.raises(GraphValidationError) as exc:
        validate_graph({"*": 0, "a": 1, "b": 1, "c": 3}, [("a", "*"), ("c", "a")])
    assert {"DanglingVertex", "NonLayeredEdge"} <= exc.value.kinds


def test_duplicate_vertex_pairs():
    with pytest.raises(GraphValidationError) as exc:
        validate_graph([("*", 0), ("a", 1), ("a", 1)], [("a", "*")])
    assert "DuplicateVertex" in exc.value.kinds


@settings(max_examples=40, deadline=None)
@given(oracles.layered_graphs(max_vertices=20))
def test_closure_matches_dfs(g):
    cl = closure(g)
    for v in g.levels:
        assert set(cl.below(v)) == oracles.dfs_below(g, v)
    assert cl.size() == sum(len(oracles.dfs_below(g, v)) for v in g.levels)


@settings(max_examples=30, deadline=None)
@given(oracles.layered_graphs(max_vertices=14, max_height=4))
def test_mobius_matches_hall(g):
    for y in g.levels:
        mu = mobius_from(g, y)
        for x, val in mu.items():
            assert val == oracles.brute_mobius(g, y, x)


def test_mobius_chain_and_boolean():
    g = chain_graph(4)
    assert mobius(g, "c1", BOTTOM) == -1
    assert mobius(g, "c3", BOTTOM) == 0
    assert mobius(g, BOTTOM, BOTTOM) == 1
    # boolean lattice of rank 3: mu(empty, full) = (-1)^3
    d = builders.build_simplicial(builders.SimplicialComplex.simplex(3))
    assert mobius(d, "1,2,3", BOTTOM) == -1


def test_mobius_requires_comparable():
    g = builders.build_cassidy_shelton()
    with pytest.raises(NotComparable):
        mobius(g, "y1", "x1")


def test_uniformity():
    assert is_uniform(builders.build_cassidy_shelton())[0]
    # two disjoint edges under one top: the covers of the top split into two classes
    g = validate_graph({"*": 0, "a": 1, "b": 1, "c": 1, "d": 1, "ab": 2, "cd": 2, "M": 3},
                       [("a", "*"), ("b", "*"), ("c", "*"), ("d", "*"), ("ab", "a"), ("ab", "b"),
                        ("cd", "c"), ("cd", "d"), ("M", "ab"), ("M", "cd")])
    ok, witness = is_uniform(g)
    assert not ok and witness[0] == "M"
    assert {witness[1], witness[2]} == {frozenset({"ab"}), frozenset({"cd"})}


def test_isomorphism_and_relabel():
    g = builders.build_cassidy_shelton()
    h = g.relabel({v: v.upper() for v in g.levels if v != BOTTOM})
    assert isomorphic(g, h)
    assert not isomorphic(g, builders.build_complete([1, 3, 3, 3]))
    assert g == builders.build_cassidy_shelton() and hash(g) == hash(builders.build_cassidy_shelton())


def test_surface_graph_equals_cell_poset():
    s = builders.cube()
    a = builders.build_surface(s)
    b = builders.build_cell_poset(builders.surface_to_cells(s), 2)
    assert isomorphic(a, b)
    assert b.meta["chi"] == 2


def test_with_top():
    g = builders.build_simplicial(builders.SimplicialComplex.simplex_boundary(3))
    assert g.top is None
    t = g.with_top()
    assert t.top == "M" and t.height == 3
