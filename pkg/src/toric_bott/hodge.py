"""Hodge-theoretic counts for an ample hypersurface cut out of the polytope.

``phi`` turns interior counts of dilated faces into the per-face
building block; from it come the Euler numbers e^p of the hypersurface,
the Euler characteristic of log-pole p-forms (computed by two independent
routes that must agree), and the primitive middle Hodge numbers.

The primitive numbers are recovered from the Euler numbers as

    h0(p, n-1-p) = (-1)^(n-1) * (e^p - T^p),

where T^p counts the ambient (p, p) classes the hypersurface inherits:
the untwisted diagonal dimension at min(p, n-1-p).  Published face-sum
statements of this result drop the per-face sign inside e^p and replace
T^p by the diagonal at p+1; both slips are invisible over ambient spaces
whose diagonal is identically 1 (plane curves, surfaces in projective
space) but wreck symmetry and positivity elsewhere -- the unsigned form
gives 13 instead of genus 1 for the plane cubic, and the diagonal-at-p+1
form gives genus 1 for the bidegree-(1,1) rational curve.  The
``*_printed`` diagnostics keep the uncorrected face sum reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binom import binomial
from .bott import bott1_untwisted, bott2_twisted
from .counting import count_interior
from .errors import NegativeEntry, RouteMismatch
from .polytope import Face, Polytope, dilate, face_lattice, require_simple


@dataclass(frozen=True)
class HodgeVector:
    """Primitive middle Hodge numbers h^(p, n-1-p) for p = 0..n-1."""

    n: int
    values: tuple

    def __iter__(self):
        return iter(self.values)


def phi(polytope: Polytope, face: Face, i: int) -> int:
    """Alternating-binomial transform of interior counts of face dilates.

    Zero for i <= 0 (empty sum).  The k-fold dilate of the face is read
    off the dilated polytope, where faces keep their vertex ids.
    """
    face_lattice(polytope).index(face)  # raises UnknownFace
    if i <= 0:
        return 0
    d = face.dim
    return sum(
        (-1) ** (i - k)
        * binomial(d + 1, i - k)
        * count_interior(dilate(polytope, k), face)
        for k in range(1, i + 1)
    )


def euler_ep(polytope: Polytope, p: int) -> int:
    """Euler number e^p of the ample hypersurface with this support polytope."""
    require_simple(polytope)
    n = polytope.dim
    if not 0 <= p <= n - 1:
        raise ValueError(f"p must lie in 0..{n - 1}, got {p}")
    lattice = face_lattice(polytope)
    f = lattice.f_vector
    ambient = (-1) ** (p + 1) * sum(
        (-1) ** k * binomial(k, p + 1) * f[k] for k in range(n + 1)
    )
    faces = sum(
        (-1) ** g.dim * phi(polytope, g, g.dim - p) for g in lattice
    )
    return ambient - faces


def chi_log(polytope: Polytope, q: int) -> int:
    """Euler characteristic of q-forms with log poles along the hypersurface.

    Route A telescopes the twisted-form resolution (differences of section
    counts on dilates); route B is the closed per-face form.  They are
    computed independently and must agree, else :class:`RouteMismatch`.
    """
    require_simple(polytope)
    n = polytope.dim
    if not 0 <= q <= n:
        raise ValueError(f"q must lie in 0..{n}, got {q}")
    if q == 0:
        return 1

    route_a = bott2_twisted(polytope, q)
    for k in range(1, n - q + 1):
        diff = bott2_twisted(dilate(polytope, k + 1), q + k) - bott2_twisted(
            dilate(polytope, k), q + k
        )
        route_a += (-1) ** k * diff

    route_b = (-1) ** q * sum(
        (-1) ** g.dim * phi(polytope, g, g.dim - q + 1)
        for g in face_lattice(polytope)
    )
    if route_a != route_b:
        raise RouteMismatch(
            f"q={q}: telescoped route gives {route_a}, face route gives {route_b}"
        )
    return route_a


def chi_log_printed(polytope: Polytope, q: int) -> int:
    """Diagnostic only: the unsigned closed form found in print.

    Disagrees with :func:`chi_log` (e.g. 9 instead of -1 for q=1 on the
    triple-dilated triangle); kept to make the discrepancy reproducible.
    """
    require_simple(polytope)
    n = polytope.dim
    total = 0
    for k in range(1, n - q + 1):
        dilated = dilate(polytope, k)
        inner = sum(
            binomial(g.dim + 1, q + k) * count_interior(dilated, g)
            for g in face_lattice(polytope)
        )
        total += (-1) ** (k + 1) * inner
    return total


def _hodge_values(polytope: Polytope, signed: bool):
    n = polytope.dim
    lattice = face_lattice(polytope)
    values = []
    for p in range(n):
        total = 0
        for g in lattice:
            term = phi(polytope, g, g.dim - p)
            if signed:
                term *= (-1) ** g.dim
            total += term
        values.append((-1) ** n * total)
    return tuple(values)


def primitive_hodge(polytope: Polytope) -> HodgeVector:
    """Primitive middle Hodge numbers of the ample hypersurface.

    Raises :class:`NegativeEntry` when an entry is negative (a hypothesis
    violation); the palindromic symmetry of the result is asserted.
    """
    require_simple(polytope)
    n = polytope.dim
    if n < 2:
        raise ValueError(f"need ambient dimension >= 2, got {n}")
    values = _hodge_values(polytope, signed=True)
    for p, value in enumerate(values):
        if value < 0:
            raise NegativeEntry(f"h^({p},{n - 1 - p}) = {value} < 0")
    assert values == values[::-1], f"asymmetric Hodge vector {values}"
    return HodgeVector(n=n, values=values)


def primitive_hodge_printed(polytope: Polytope) -> tuple:
    """Diagnostic only: the unsigned face sum, without validation."""
    require_simple(polytope)
    if polytope.dim < 2:
        raise ValueError(f"need ambient dimension >= 2, got {polytope.dim}")
    return _hodge_values(polytope, signed=False)
