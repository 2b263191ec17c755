"""Kernel equivalence: pure scan, compiled scan, and the naive oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import naive_tight_histogram
from toric_bott import scan

CASES = [
    # (lo, hi, normals, offsets) hand-picked shapes
    ((0, 0), (4, 4), ((1, 0), (0, 1), (-1, -1)), (0, 0, -4)),  # dilated triangle
    ((0, 0), (3, 3), ((1, 0), (0, 1), (-1, 0), (0, -1)), (0, 0, -3, -3)),  # box
    ((-2, -2, -2), (2, 2, 2), ((1, 1, 1), (-1, 1, 1)), (0, -1)),  # cone slab
    ((0, 0, 0), (6, 6, 6), ((1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -1)), (0, 0, 0, -6)),
    ((0,), (7,), ((1,), (-1,)), (2, -5)),  # segment [2, 5]
    ((1, 1), (0, 4), (), ()),  # empty box
    ((0, 0), (2, 2), (), ()),  # no constraints
]


@pytest.mark.parametrize("lo,hi,normals,offsets", CASES)
def test_pure_matches_naive(lo, hi, normals, offsets):
    expected = naive_tight_histogram(lo, hi, normals, offsets)
    assert scan.tight_histogram_pure(lo, hi, normals, offsets) == expected


@pytest.mark.parametrize("lo,hi,normals,offsets", CASES)
def test_dispatch_matches_naive(lo, hi, normals, offsets):
    expected = naive_tight_histogram(lo, hi, normals, offsets)
    assert scan.tight_histogram(lo, hi, normals, offsets) == expected


@pytest.mark.skipif(scan._fastscan is None, reason="extension not built")
@pytest.mark.parametrize("lo,hi,normals,offsets", CASES)
def test_compiled_matches_naive(lo, hi, normals, offsets):
    if not lo:
        pytest.skip("compiled path needs n >= 1")
    expected = naive_tight_histogram(lo, hi, normals, offsets)
    assert scan._fastscan.tight_histogram_i64(lo, hi, normals, offsets) == expected


def test_zero_dimensional_box():
    assert scan.tight_histogram((), (), (), ()) == {0: 1}


def test_huge_coefficients_fall_back_to_pure():
    big = 1 << 70
    hist = scan.tight_histogram((0,), (3,), ((big,),), (big,))
    # x >= 1/... big*x >= big means x >= 1
    assert hist == {1: 1, 0: 2}


@st.composite
def scan_instance(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    lo = tuple(draw(st.integers(-3, 2)) for _ in range(n))
    hi = tuple(l + draw(st.integers(0, 4)) for l in lo)
    m = draw(st.integers(0, 4))
    normals = tuple(
        tuple(draw(st.integers(-3, 3)) for _ in range(n)) for _ in range(m)
    )
    offsets = tuple(draw(st.integers(-6, 6)) for _ in range(m))
    return lo, hi, normals, offsets


@settings(max_examples=150, deadline=None)
@given(scan_instance())
def test_kernels_agree_on_random_systems(instance):
    lo, hi, normals, offsets = instance
    expected = naive_tight_histogram(lo, hi, normals, offsets)
    assert scan.tight_histogram_pure(lo, hi, normals, offsets) == expected
    assert scan.tight_histogram(lo, hi, normals, offsets) == expected
