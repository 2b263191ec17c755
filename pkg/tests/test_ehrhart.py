"""Dilation-count polynomials: interpolation, duality, leading terms."""

from fractions import Fraction

import pytest

from conftest import cube, octahedron, simplex, skewtet
from toric_bott import (
    UniPoly,
    bott1_untwisted,
    bott2_twisted,
    dilate,
    hilbert_ehrhart,
    leading_coefficient_check,
    reciprocity_check,
    volume,
)
from toric_bott.binom import binomial
from toric_bott.errors import NotSimple


def skewtet_expected(m):
    """The four closed-form polynomials of the m-family, exact."""
    return {
        0: UniPoly((1, Fraction(12 - m, 6), 1, Fraction(m, 6))),
        1: UniPoly((-1, Fraction(-m, 2), 1, Fraction(m, 2))),
        2: UniPoly((1, Fraction(-m, 2), -1, Fraction(m, 2))),
        3: UniPoly((-1, Fraction(12 - m, 6), -1, Fraction(m, 6))),
    }


class TestHilbertEhrhart:
    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_skew_tetrahedron_family(self, m):
        p = skewtet(m)
        expected = skewtet_expected(m)
        for q in range(4):
            assert hilbert_ehrhart(p, q) == expected[q]

    def test_unit_square_middle(self):
        assert hilbert_ehrhart(cube(2), 1) == UniPoly((-2, 0, 2))

    def test_matches_counts_beyond_nodes(self, corpus_polytopes):
        for name, p in corpus_polytopes[:10]:
            n = p.dim
            for q in range(n + 1):
                poly = hilbert_ehrhart(p, q)
                for k in (n + 3, n + 4):
                    assert poly(k) == bott2_twisted(dilate(p, k), q), name

    def test_value_at_zero_is_signed_diagonal(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            diag = bott1_untwisted(p).diagonal
            for q in range(p.dim + 1):
                assert hilbert_ehrhart(p, q)(0) == (-1) ** q * diag[q], name

    def test_constant_term_of_point_count_poly(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            assert hilbert_ehrhart(p, 0)(0) == 1, name

    def test_degree_bound_and_integrality(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            for q in range(p.dim + 1):
                poly = hilbert_ehrhart(p, q)
                assert poly.degree <= p.dim, name
                assert poly.is_integer_valued(), name

    def test_not_simple_rejected(self):
        with pytest.raises(NotSimple):
            hilbert_ehrhart(octahedron(), 0)


class TestReciprocity:
    def test_unit_square_self_dual(self):
        for k in (1, 2, 3, 5):
            r = reciprocity_check(cube(2), 1, k)
            assert r.holds
            assert r.lhs == 2 * k * k - 2

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_skew_tetrahedron_at_one(self, m):
        r = reciprocity_check(skewtet(m), 0, 1)
        assert r.holds
        assert r.lhs == Fraction(-m, 6) + 1 - Fraction(12 - m, 6) + 1

    def test_point_count_vs_interior_count(self, corpus_polytopes):
        # duality pairs the point-count polynomial with interior counts
        for name, p in corpus_polytopes[:12]:
            n = p.dim
            poly = hilbert_ehrhart(p, 0)
            from toric_bott import count_table

            for k in (1, 2, 3):
                interior = count_table(dilate(p, k)).dim_interior_sums[n]
                assert poly(-k) == (-1) ** n * interior, name

    def test_full_window(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            n = p.dim
            for q in range(n + 1):
                for k in range(1, 2 * n + 3):
                    assert reciprocity_check(p, q, k).holds, (name, q, k)

    def test_palindromic_coefficient_pairing(self, corpus_polytopes):
        for name, p in corpus_polytopes[:10]:
            n = p.dim
            for q in range(n + 1):
                lhs = hilbert_ehrhart(p, q).compose_negated()
                rhs = hilbert_ehrhart(p, n - q) * ((-1) ** n)
                assert lhs == rhs, name

    def test_rejects_bad_k(self):
        with pytest.raises(ValueError):
            reciprocity_check(cube(2), 0, 0)


class TestLeadingCoefficient:
    def test_unit_square(self):
        r = leading_coefficient_check(cube(2), 1)
        assert r.holds and r.lhs == 2

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
    def test_skew_tetrahedron(self, m):
        r = leading_coefficient_check(skewtet(m), 1)
        assert r.holds
        assert r.lhs == Fraction(m, 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_simplex_point_count_leads_with_volume(self, n):
        r = leading_coefficient_check(simplex(n), 0)
        assert r.holds
        assert r.lhs == volume(simplex(n))

    def test_everywhere_on_corpus(self, corpus_polytopes):
        for name, p in corpus_polytopes:
            vol = volume(p)
            for q in range(p.dim + 1):
                r = leading_coefficient_check(p, q)
                assert r.holds, name
                assert r.rhs == binomial(p.dim, q) * vol
