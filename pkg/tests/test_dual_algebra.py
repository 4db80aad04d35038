import random
from itertools import combinations
from math import comb

import pytest

import oracles
from splitkoszul import builders, dual_algebra as da
from splitkoszul.exact import kernel_dim


@pytest.fixture(scope="module")
def cs():
    return builders.build_cassidy_shelton()


def test_cassidy_shelton_dual(cs):
    assert da.dual_hilbert(cs) == [1, 10, 8, 1]
    assert da.dual_dims(cs) == {0: 1, 1: 10, 2: 8, 3: 1, 4: 0}
    # degree 2: one relation per pair of covers
    assert da.dual_component_dim(cs, "u", 2) == 2
    assert da.dual_component_dim(cs, "w1", 2) == 1
    assert da.dual_component_dim(cs, "u", 3) == 1
    assert da.dual_component_dim(cs, "w1", 3) == 0


def test_dense_oracle_on_random_graphs():
    rng = random.Random(7)
    for _ in range(25):
        g = oracles.random_layered_graph(rng, max_vertices=13, max_height=4)
        for v in g.generators:
            for k in range(2, g.levels[v] + 1):
                assert da.dual_component_dim(g, v, k) == oracles.dense_dual_component_dim(g, v, k), (v, k)


def test_dense_oracle_on_surfaces():
    tet = builders.build_surface(builders.tetrahedron())
    assert da.dual_component_dim(tet, "M", 4) == oracles.dense_dual_component_dim(tet, "M", 4) == 1
    torus = builders.build_surface(builders.grid_torus(3, 3))
    # cocycles of the torus: g - 1 plus two independent loops
    assert da.dual_component_dim(torus, "M", 3) == oracles.dense_dual_component_dim(torus, "M", 3) == 10


def test_enumeration(cs):
    assert len(da.enumerate_linked(cs, "u", 4)) == 3 * 2 * 2
    assert len(da.enumerate_linked(cs, "u", bottom="x1")) == 2  # u w2 / u w3
    assert all(len(m) == 2 for m in da.enumerate_linked(cs, "u", bottom="x1"))
    with pytest.raises(da.LengthExceedsLevel):
        da.enumerate_linked(cs, "w1", 4)


def test_admissibility_and_alternatives(cs):
    m = ("u", "w1", "x2")
    assert da.alternatives(cs, m, 1) == ["w3"]
    assert sorted(da.alternatives(cs, m, 2)) == ["x3"]
    assert da.is_admissible(cs, m)
    # in a chain graph nothing has an alternative
    from test_graph_core import chain_graph
    g = chain_graph(3)
    assert da.enumerate_admissible(g, "c3", 3) == []


def test_pruning_preserves_kernel(cs):
    for v in cs.generators:
        for k in range(2, cs.levels[v] + 1):
            mons = da.enumerate_linked(cs, v, k)
            full = kernel_dim(da.deletion_system(mons, k))
            pruned = da.prune(mons, range(1, k))
            assert len(pruned) <= len(mons)
            assert (kernel_dim(da.deletion_system(pruned, k)) if pruned else 0) == full
            one_pass = da.enumerate_admissible(cs, v, k)
            assert set(pruned) <= set(one_pass)


def test_dimension_bounded_by_admissible(cs):
    for v in cs.generators:
        for k in range(2, cs.levels[v] + 1):
            assert da.dual_component_dim(cs, v, k) <= len(da.enumerate_admissible(cs, v, k))


def test_membership(cs):
    assert da.membership(cs, {("u", "w1"): 1, ("u", "w2"): -1})
    assert not da.membership(cs, {("u", "w1"): 1})
    assert not da.membership(cs, {("u", "x1"): 1, ("u", "x2"): -1})  # not linked
    with pytest.raises(da.MixedTopVertex):
        da.membership(cs, {("u", "w1"): 1, ("w1", "x2"): -1})
    with pytest.raises(da.MixedLengths):
        da.membership(cs, {("u", "w1"): 1, ("u", "w1", "x2"): -1})
    assert da.membership(cs, {})


def test_deletion_system_rejects_mixed_lengths():
    with pytest.raises(da.MixedLengths):
        da.deletion_system([("a", "b"), ("a", "b", "c")], 2)


def test_modular_path_agrees(cs):
    tor = builders.build_surface(builders.grid_torus(3, 4))
    for g in (cs, tor):
        assert da.dual_dims(g, modular=True) == da.dual_dims(g)


def test_nonuniform_warns():
    from splitkoszul.graph_core import validate_graph
    g = validate_graph({"*": 0, "a": 1, "b": 1, "c": 1, "d": 1, "ab": 2, "cd": 2, "M": 3},
                       [("a", "*"), ("b", "*"), ("c", "*"), ("d", "*"), ("ab", "a"), ("ab", "b"),
                        ("cd", "c"), ("cd", "d"), ("M", "ab"), ("M", "cd")])
    with pytest.warns(UserWarning, match="not uniform"):
        da.dual_hilbert(g)


# simplicial complexes

@pytest.mark.parametrize("delta", [
    builders.SimplicialComplex.simplex(3), builders.SimplicialComplex.simplex(4),
    builders.SimplicialComplex.simplex_boundary(4),
    builders.SimplicialComplex.from_faces([[1, 2, 3], [2, 3, 4], [4, 5]], warn=False),
], ids=["simplex3", "simplex4", "boundary4", "mixed"])
def test_binomial_formula(delta):
    g = builders.build_simplicial(delta)
    assert da.dual_hilbert(g) == da.simplicial_dual_formula(delta)


def test_sab_elements_and_basis():
    delta = builders.SimplicialComplex.simplex(4)
    g = builders.build_simplicial(delta)
    A = frozenset({1, 2, 3, 4})
    for k in range(1, 5):
        for B in combinations(sorted(A), k):
            assert da.membership(g, da.simplicial_sab(A, B))
        basis = da.sab_basis(A, k)
        assert len(basis) == comb(3, k - 1)
        from splitkoszul.exact import span_rank
        assert span_rank(basis) == len(basis) == da.dual_component_dim(g, "1,2,3,4", k)


def test_sab_explicit():
    assert da.simplicial_sab({1, 2}, [1, 2]) == {("1,2", "2"): 1, ("1,2", "1"): -1}
    with pytest.raises(ValueError):
        da.simplicial_sab({1, 2}, [3])
