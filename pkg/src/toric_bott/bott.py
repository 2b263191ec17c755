"""Cohomology dimensions of twisted and untwisted p-forms from face data.

For a simple lattice n-polytope the diagonal dimensions h^p of untwisted
p-forms come from the f-vector alone, in two equivalent ways (an
alternating sum over codimensions, or over dimensions); the twisted global
section counts come from per-face lattice point totals, again in two
equivalent ways (closed counts per codimension, or interior counts per
dimension).  Both pairs agreeing on every input is one of the package's
standing cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binom import binomial
from .counting import count_table
from .polynomial import UniPoly
from .polytope import Polytope, face_lattice, require_simple


@dataclass(frozen=True)
class CohomologyTable:
    """Dimensions h^q of twisted/untwisted p-forms for 0 <= p, q <= n."""

    n: int
    entries: tuple  # ((p, q, value), ...) with zero entries included
    twisted: bool

    def h(self, p: int, q: int) -> int:
        for pp, qq, value in self.entries:
            if (pp, qq) == (p, q):
                return value
        raise KeyError((p, q))

    @property
    def diagonal(self):
        return tuple(self.h(p, p) for p in range(self.n + 1))


def _untwisted_table(n: int, diagonal) -> CohomologyTable:
    entries = tuple(
        (p, q, diagonal[p] if p == q else 0)
        for p in range(n + 1)
        for q in range(n + 1)
    )
    return CohomologyTable(n=n, entries=entries, twisted=False)


def _check_p(polytope: Polytope, p: int):
    if not 0 <= p <= polytope.dim:
        raise ValueError(f"p must lie in 0..{polytope.dim}, got {p}")


def bott1_untwisted(polytope: Polytope) -> CohomologyTable:
    """Diagonal h^p via the codimension form: an alternating f-vector sum."""
    require_simple(polytope)
    n = polytope.dim
    f = face_lattice(polytope).f_vector
    diag = [
        sum(
            (-1) ** (p - j) * binomial(n - j, p - j) * f[n - j]
            for j in range(p + 1)
        )
        for p in range(n + 1)
    ]
    return _untwisted_table(n, diag)


def bott2_untwisted(polytope: Polytope) -> CohomologyTable:
    """Diagonal h^p via the dimension form of the same count."""
    require_simple(polytope)
    n = polytope.dim
    f = face_lattice(polytope).f_vector
    diag = [
        sum((-1) ** (s + p) * binomial(s, p) * f[s] for s in range(p, n + 1))
        for p in range(n + 1)
    ]
    return _untwisted_table(n, diag)


def bott1_twisted(polytope: Polytope, p: int) -> int:
    """h^0 of twisted p-forms from closed face counts per codimension."""
    require_simple(polytope)
    _check_p(polytope, p)
    n = polytope.dim
    sums = count_table(polytope).codim_point_sums
    return sum(
        (-1) ** j * binomial(n - j, p - j) * sums[j] for j in range(p + 1)
    )


def bott2_twisted(polytope: Polytope, p: int) -> int:
    """Same dimension from interior face counts per dimension."""
    require_simple(polytope)
    _check_p(polytope, p)
    n = polytope.dim
    sums = count_table(polytope).dim_interior_sums
    return sum(binomial(s, p) * sums[s] for s in range(p, n + 1))


def generating_polys(polytope: Polytope):
    """Generating polynomials of the diagonal and twisted dimensions.

    The first is sum_p h^p(untwisted) y^p, computed as
    sum_j f_j (y-1)^j; the second is sum_p h^0(twisted) y^p, computed as
    sum_s (interior count total in dimension s) (y+1)^s.  Both closed
    forms are cross-checked coefficient-wise against the direct sums.
    """
    require_simple(polytope)
    n = polytope.dim
    f = face_lattice(polytope).f_vector
    y_minus_1 = UniPoly((-1, 1))
    first = UniPoly.zero()
    for j in range(n + 1):
        first = first + y_minus_1 ** j * f[j]

    interior = count_table(polytope).dim_interior_sums
    y_plus_1 = UniPoly((1, 1))
    second = UniPoly.zero()
    for s in range(n + 1):
        second = second + y_plus_1 ** s * interior[s]

    diag = bott1_untwisted(polytope).diagonal
    for p in range(n + 1):
        assert first.coefficient(p) == diag[p]
        assert second.coefficient(p) == bott1_twisted(polytope, p)
    return first, second


def pn_oracle(n: int, p: int, q: int, k: int) -> int:
    """Closed-form dimension for projective n-space; test oracle only."""
    if n < 1 or not (0 <= p <= n) or not (0 <= q <= n):
        raise ValueError(f"bad parameters (n, p, q) = {(n, p, q)}")
    if k == 0:
        return 1 if p == q else 0
    if q == 0 and k > p:
        return binomial(n + k - p, k) * binomial(k - 1, p)
    if q == n and k < p - n:
        return binomial(-k + p, -k) * binomial(-k - 1, n - p)
    return 0
