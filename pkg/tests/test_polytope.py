"""Hull construction, face lattices, and the basic polytope operations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cube, octahedron, product_polytope, simplex, skewtet
from toric_bott import (
    dilate,
    face_lattice,
    from_vertices,
    is_simple,
    minkowski_sum,
    smallest_face,
)
from toric_bott.binom import binomial
from toric_bott.errors import (
    DimensionMismatch,
    Empty,
    LowDimensional,
    NonPositiveDilation,
)
from toric_bott.intlinalg import affine_rank


class TestFromVertices:
    def test_unit_triangle(self):
        p = from_vertices([(0, 0), (1, 0), (0, 1)])
        assert len(p.vertices) == 3
        assert len(p.facets) == 3

    def test_unit_square(self):
        p = from_vertices([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(p.vertices) == 4
        assert len(p.facets) == 4

    def test_skew_tetrahedron(self):
        p = skewtet(1)
        assert len(p.vertices) == 4
        assert len(p.facets) == 4

    def test_redundant_points_dropped(self):
        p = from_vertices([(0, 0), (2, 0), (0, 2), (1, 0), (1, 1)])
        assert sorted(p.vertices) == [(0, 0), (0, 2), (2, 0)]

    def test_empty_input(self):
        with pytest.raises(Empty):
            from_vertices([])

    def test_low_dimensional_input(self):
        with pytest.raises(LowDimensional):
            from_vertices([(0, 0), (1, 1), (2, 2)])

    def test_non_integer_coordinates_rejected(self):
        with pytest.raises(TypeError):
            from_vertices([(0, 0), (1, 0), (0.5, 1)])

    def test_facets_inward_oriented_and_primitive(self):
        for p in (cube(3), skewtet(3), octahedron()):
            for h in p.facets:
                slacks = [h.evaluate(v) for v in p.vertices]
                assert all(s >= 0 for s in slacks)
                tight = [v for v in p.vertices if h.evaluate(v) == 0]
                assert affine_rank(tight) == p.dim - 1


class TestFaceLattice:
    def test_triangle_f_vector(self):
        assert face_lattice(simplex(2)).f_vector == (3, 3, 1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_simplex_face_counts(self, n):
        f = face_lattice(simplex(n)).f_vector
        for j in range(n + 1):
            assert f[n - j] == binomial(n + 1, j)

    def test_cube_f_vector(self):
        assert face_lattice(cube(3)).f_vector == (8, 12, 6, 1)

    def test_octahedron_f_vector(self):
        assert face_lattice(octahedron()).f_vector == (6, 12, 8, 1)

    def test_euler_relation(self, corpus_polytopes):
        for name, p in corpus_polytopes + [("octahedron", octahedron())]:
            f = face_lattice(p).f_vector
            assert sum((-1) ** k * fk for k, fk in enumerate(f)) == 1, name

    def test_closed_under_intersection(self):
        lattice = face_lattice(cube(3))
        vsets = [frozenset(f.vertex_ids) for f in lattice]
        for a in vsets:
            for b in vsets:
                c = a & b
                assert not c or c in vsets

    def test_face_dims_match_vertex_spans(self):
        p = skewtet(2)
        for f in face_lattice(p):
            coords = [p.vertices[i] for i in f.vertex_ids]
            assert affine_rank(coords) == f.dim

    def test_simple_faces_have_codim_many_tight_facets(self):
        for p in (cube(3), simplex(4), skewtet(2)):
            for f in face_lattice(p):
                assert len(f.tight_facets) == p.dim - f.dim


class TestIsSimple:
    def test_cube_is_simple(self):
        assert is_simple(cube(3))

    def test_octahedron_is_not(self):
        assert not is_simple(octahedron())

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_skew_tetrahedron_is_simple(self, m):
        p = skewtet(m)
        # derived: every vertex lies on exactly 3 of the 4 facets
        for v in p.vertices:
            assert sum(1 for h in p.facets if h.evaluate(v) == 0) == 3
        assert is_simple(p)

    def test_vertices_lie_on_at_least_n_facets(self, corpus_polytopes):
        for name, p in corpus_polytopes + [("octahedron", octahedron())]:
            for v in p.vertices:
                assert sum(1 for h in p.facets if h.evaluate(v) == 0) >= p.dim, name


class TestDilate:
    def test_square_by_two(self):
        p = dilate(cube(2), 2)
        assert sorted(p.vertices) == [(0, 0), (0, 2), (2, 0), (2, 2)]

    def test_triangle_by_three(self):
        p = dilate(simplex(2), 3)
        assert sorted(p.vertices) == [(0, 0), (0, 3), (3, 0)]

    def test_skew_tetrahedron_scaling(self):
        p = dilate(skewtet(2), 2)
        assert sorted(p.vertices) == [(0, 0, 0), (0, 2, 0), (2, 0, 0), (2, 2, 4)]

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveDilation):
            dilate(cube(2), 0)
        with pytest.raises(NonPositiveDilation):
            dilate(cube(2), -1)

    def test_combinatorics_preserved(self, corpus_polytopes):
        for name, p in corpus_polytopes[:8]:
            lattice = face_lattice(p)
            for k in (2, 3):
                dl = face_lattice(dilate(p, k))
                assert dl.f_vector == lattice.f_vector, name
                assert [f.vertex_ids for f in dl] == [f.vertex_ids for f in lattice]

    def test_dilate_matches_hull_of_scaled_points(self):
        p = skewtet(3)
        q = dilate(p, 4)
        assert q == from_vertices([tuple(4 * x for x in v) for v in p.vertices])


class TestMinkowskiSum:
    def test_segments_make_square(self):
        # degenerate summands are passed as raw vertex sets
        p = minkowski_sum([(0, 0), (1, 0)], [(0, 0), (0, 1)])
        assert p == cube(2)

    def test_triangle_plus_triangle_is_double(self):
        t = simplex(2)
        assert minkowski_sum(t, t) == dilate(t, 2)

    def test_square_plus_triangle_is_pentagon(self):
        p = minkowski_sum(cube(2), simplex(2))
        assert sorted(p.vertices) == [(0, 0), (0, 2), (1, 2), (2, 0), (2, 1)]

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            minkowski_sum(cube(2), cube(3))

    def test_homothety_recursion(self):
        for p in (simplex(2), cube(2), skewtet(1)):
            for k in (1, 2, 3):
                assert minkowski_sum(p, dilate(p, k)) == dilate(p, k + 1)


class TestSmallestFace:
    def test_edge_point(self):
        from fractions import Fraction

        sq = cube(2)
        f = smallest_face(sq, (Fraction(1, 2), 0))
        assert f.dim == 1
        assert [sq.vertices[i] for i in f.vertex_ids] == [(0, 0), (1, 0)]

    def test_interior_point(self):
        from fractions import Fraction

        f = smallest_face(cube(2), (Fraction(1, 2), Fraction(1, 2)))
        assert f.dim == 2

    def test_vertex_point(self):
        sq = cube(2)
        f = smallest_face(sq, (0, 0))
        assert f.dim == 0
        assert [sq.vertices[i] for i in f.vertex_ids] == [(0, 0)]

    def test_outside_point(self):
        assert smallest_face(cube(2), (2, 0)) is None
        from fractions import Fraction

        assert smallest_face(cube(2), (Fraction(-1, 3), 0)) is None


@st.composite
def random_point_set(draw):
    dim = draw(st.integers(2, 3))
    count = draw(st.integers(dim + 1, 7))
    pts = [
        tuple(draw(st.integers(-3, 3)) for _ in range(dim)) for _ in range(count)
    ]
    return dim, pts


@settings(max_examples=60, deadline=None)
@given(random_point_set())
def test_hull_invariants_on_random_points(data):
    dim, pts = data
    if affine_rank(pts) < dim:
        return
    p = from_vertices(pts)
    # every input point satisfies every facet inequality
    for point in pts:
        assert all(h.evaluate(point) >= 0 for h in p.facets)
    assert set(p.vertices) <= set(pts)
    f = face_lattice(p).f_vector
    assert sum((-1) ** k * fk for k, fk in enumerate(f)) == 1
    assert f[dim] == 1
    # vertices of the hull are exactly the input points that are faces
    for v in p.vertices:
        face = smallest_face(p, v)
        assert face.dim == 0
