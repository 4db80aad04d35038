import warnings

import pytest

from splitkoszul import builders
from splitkoszul.builders import BuildError, SimplicialComplex, Surface2D
from splitkoszul.graph_core import BOTTOM


def test_complete_graph_shape():
    g = builders.build_complete([1, 3, 2, 2])
    assert [len(r) for r in g.by_level] == [1, 3, 2, 2]
    assert len(g.edges) == 3 + 6 + 4
    with pytest.raises(BuildError, match="BadBottom"):
        builders.build_complete([2, 2])


def test_simplicial_completion_warns_and_strict_rejects():
    with pytest.warns(UserWarning, match="completed"):
        d = SimplicialComplex.from_faces([[1, 2, 3]])
    assert len(d.faces) == 8
    with pytest.raises(BuildError, match="NotDownwardClosed"):
        SimplicialComplex.from_faces([[1, 2]], strict=True)
    full = SimplicialComplex.from_faces([[1], [2], [1, 2]], strict=True)
    assert full.dimension == 1


def test_named_complexes_do_not_warn():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert len(SimplicialComplex.simplex(4).faces) == 16
        assert len(SimplicialComplex.simplex_boundary(4).faces) == 15


def test_face_outside_ground():
    with pytest.raises(BuildError, match="FaceOutsideGround"):
        SimplicialComplex.from_faces([[1, 5]], ground=[1, 2])


def test_simplicial_graph_and_top():
    d = SimplicialComplex.simplex_boundary(4)
    g = builders.build_simplicial(d)
    assert g.meta["f_vector"] == [1, 4, 6, 4]
    assert g.top is None
    assert builders.build_simplicial(d, add_top=True).top == "M"
    mixed = SimplicialComplex.from_faces([[1, 2, 3], [3, 4]], warn=False)
    with pytest.raises(BuildError, match="RankViolation"):
        builders.build_simplicial(mixed, add_top=True)


@pytest.mark.parametrize("name, counts", [
    ("tetrahedron", (4, 6, 4)), ("cube", (8, 12, 6)), ("octahedron", (6, 12, 8)),
    ("square_pyramid", (5, 8, 5)), ("torus3x3", (9, 18, 9)), ("torus3x4", (12, 24, 12)),
])
def test_surface_counts(name, counts):
    s = builders.surface_fixtures()[name]
    assert (s.g, s.h, s.f) == counts
    assert s.chi == (0 if name.startswith("torus") else 2)


def test_surface_orientation_is_consistent():
    for s in builders.surface_fixtures().values():
        for e, (i, j) in s.edge_faces.items():
            assert s.incidence_sign(i, e) == -s.incidence_sign(j, e)


def test_surface_reorients_flipped_faces():
    faces = [(1, 2, 3), (1, 2, 4), (2, 4, 3), (3, 4, 1)]  # second face given backwards
    s = Surface2D.from_faces(faces)
    assert s.faces[1] == ("4", "2", "1")


@pytest.mark.parametrize("faces, kind", [
    ([(1, 2)], "ShortFace"),
    ([(1, 1, 2)], "LoopEdge"),
    ([(1, 2, 3, 2)], "FaceRepeatsVertex"),
    ([(1, 2, 3)], "EdgeNotOnTwoFaces"),
    ([(1, 2, 3), (1, 2, 3), (4, 5, 6), (4, 5, 6)], "Disconnected"),
])
def test_surface_errors(faces, kind):
    with pytest.raises(BuildError, match=kind):
        Surface2D.from_faces(faces)


def test_nonorientable_is_rejected():
    # six-vertex projective plane: antipodal quotient of the icosahedron
    faces = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 6, 2),
             (2, 3, 5), (3, 4, 6), (4, 5, 2), (5, 6, 3), (6, 2, 4)]
    with pytest.raises(BuildError, match="NonOrientable"):
        Surface2D.from_faces(faces)


def test_surface_graph_levels():
    g = builders.build_surface(builders.tetrahedron())
    assert [len(r) for r in g.by_level] == [1, 4, 6, 4, 1]
    assert g.top == "M" and g.min_vertex == BOTTOM


def test_cell_poset_errors():
    with pytest.raises(BuildError, match="UnknownCell"):
        builders.build_cell_poset({"a": (0, []), "e": (1, ["a", "b"])}, 1)
    with pytest.raises(BuildError, match="RankViolation"):
        builders.build_cell_poset({"a": (0, []), "b": (0, []), "F": (2, ["a"])}, 2)
    with pytest.raises(BuildError, match="ReservedId"):
        builders.build_cell_poset({"M": (0, [])}, 0)


def test_cassidy_shelton_graph():
    g = builders.build_cassidy_shelton()
    assert len(g.levels) == 11
    assert all(len(g.down[v]) == 2 for v in g.levels if g.levels[v] in (2, 3))
    assert len(g.down["u"]) == 3
