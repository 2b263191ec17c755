"""Dilation-count polynomials and their duality/leading-coefficient laws.

For each p the counts of twisted p-form sections on the k-fold dilate grow
polynomially in k with degree <= n.  We recover the polynomial exactly by
Lagrange interpolation on k = 1..n+1 and verify it on the extra node
k = n+2, so a silent degree violation turns into a hard error instead of
a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .binom import binomial
from .bott import bott2_twisted
from .counting import volume
from .errors import InterpolationInconsistent
from .polynomial import UniPoly, lagrange_interpolate
from .polytope import Polytope, dilate, require_simple


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exact two-sided check, with both witness values."""

    holds: bool
    lhs: Fraction
    rhs: Fraction
    label: str = ""


@lru_cache(maxsize=None)
def hilbert_ehrhart(polytope: Polytope, p: int) -> UniPoly:
    """The degree-<=n polynomial matching the twisted counts on dilates."""
    require_simple(polytope)
    n = polytope.dim
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got {p}")
    nodes = [(k, bott2_twisted(dilate(polytope, k), p)) for k in range(1, n + 2)]
    poly = lagrange_interpolate(nodes)
    probe = n + 2
    expected = bott2_twisted(dilate(polytope, probe), p)
    if poly(probe) != expected:
        raise InterpolationInconsistent(
            f"p={p}: interpolant gives {poly(probe)} at k={probe}, "
            f"direct count gives {expected}"
        )
    return poly


def reciprocity_check(polytope: Polytope, p: int, k: int) -> CheckResult:
    """Compare L_p(-k) against (-1)^n L_{n-p}(k), exactly."""
    require_simple(polytope)
    n = polytope.dim
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    lhs = hilbert_ehrhart(polytope, p)(-k)
    rhs = (-1) ** n * hilbert_ehrhart(polytope, n - p)(k)
    return CheckResult(lhs == rhs, lhs, rhs, label=f"reciprocity p={p} k={k}")


def leading_coefficient_check(polytope: Polytope, p: int) -> CheckResult:
    """Degree-n coefficient of L_p against C(n, p) * volume."""
    require_simple(polytope)
    n = polytope.dim
    lhs = hilbert_ehrhart(polytope, p).coefficient(n)
    rhs = binomial(n, p) * volume(polytope)
    return CheckResult(lhs == rhs, lhs, rhs, label=f"leading coefficient p={p}")
