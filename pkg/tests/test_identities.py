"""Binomial identity windows and the two face-count identities."""

import pytest

from conftest import cube, octahedron, simplex, skewtet
from toric_bott import (
    appendix_identity,
    count_table,
    dehn_sommerville,
    dilate,
    face_duality,
    identity_a1,
    identity_a2,
    identity_b1,
    identity_b2,
)
from toric_bott.binom import binomial
from toric_bott.errors import NotSimple


class TestParametricIdentities:
    def test_a1_examples(self):
        assert identity_a1(3, 2).left == 1
        assert identity_a1(5, 0).left == 1
        assert identity_a1(2, 1).left == 1

    def test_b1_examples(self):
        r = identity_b1(2, 1, 2)
        assert (r.left, r.right) == (3, 3)
        r = identity_b1(4, 0, 3)
        assert r.left == r.right == binomial(7, 3)
        r = identity_b1(2, 2, 3)
        assert r.left == r.right == 1

    def test_a2_examples(self):
        assert identity_a2(2, 1).left == 1
        assert identity_a2(4, 4).left == 1
        assert identity_a2(3, 1).left == 1

    def test_b2_examples(self):
        assert identity_b2(2, 1, 2).left == identity_b2(2, 1, 2).right == 3
        r = identity_b2(4, 0, 1)
        assert r.left == r.right == 5
        r = identity_b2(3, 2, 4)
        assert r.left == r.right == 15

    def test_appendix_examples(self):
        assert appendix_identity(3, 1, 2).left == appendix_identity(3, 1, 2).right == 1
        assert appendix_identity(4, 4, 2).left == binomial(4, 2)
        r = appendix_identity(3, 0, 2)
        assert r.left == r.right == 0

    def test_small_window_exhaustive(self):
        for n in range(1, 7):
            for p in range(n + 1):
                assert identity_a1(n, p).holds
                assert identity_a2(n, p).holds
                for s in range(n + 1):
                    assert appendix_identity(n, s, p).holds
                for k in range(1, 7):
                    assert identity_b1(n, p, k).holds
                    assert identity_b2(n, p, k).holds


class TestFaceIdentities:
    def test_cube_dehn_sommerville_middle(self):
        r = dehn_sommerville(cube(3), 1)
        assert r.left == r.right == -3

    def test_dehn_sommerville_corpus(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            for q in range(p.dim + 1):
                assert dehn_sommerville(p, q).holds, name

    def test_double_square_face_duality(self):
        r = face_duality(dilate(cube(2), 2), 1)
        assert r.left == r.right == 6

    def test_face_duality_corpus(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            for q in range(p.dim + 1):
                assert face_duality(p, q).holds, name

    def test_octahedron_rejected(self):
        with pytest.raises(NotSimple):
            face_duality(octahedron(), 1)
        with pytest.raises(NotSimple):
            dehn_sommerville(octahedron(), 1)

    def test_octahedron_identity_genuinely_fails(self):
        # recompute both sides by hand: simplicity is load-bearing
        table = count_table(octahedron())
        n = 3
        p = 1
        left = sum(
            (-1) ** j * binomial(n - j, p - j) * table.codim_point_sums[j]
            for j in range(p + 1)
        )
        right = sum(
            binomial(s, p) * table.dim_interior_sums[s] for s in range(p, n + 1)
        )
        assert left == -3
        assert right == 3
        assert left != right

    def test_p_zero_is_partition_identity(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            r = face_duality(p, 0)
            assert r.holds
            assert r.left == count_table(p).total, name

    def test_p_top_is_inclusion_exclusion(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            r = face_duality(p, p.dim)
            assert r.holds
            assert r.right == count_table(p).dim_interior_sums[p.dim], name
