"""Numeric verification of the standalone binomial and face-count identities.

Each function evaluates both sides of one identity independently and
returns an :class:`IdentityReport`; nothing here shares code with the
formula implementations it corroborates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binom import binomial
from .counting import count_table
from .polytope import Polytope, face_lattice, require_simple


@dataclass(frozen=True)
class IdentityReport:
    name: str
    params: tuple
    left: int
    right: int

    @property
    def holds(self) -> bool:
        return self.left == self.right


def identity_a1(n: int, p: int) -> IdentityReport:
    """Alternating codimension sum over simplex face counts equals 1."""
    left = sum(
        (-1) ** (p - j) * binomial(n - j, p - j) * binomial(n + 1, j)
        for j in range(p + 1)
    )
    return IdentityReport("a1", (n, p), left, 1)


def identity_b1(n: int, p: int, k: int) -> IdentityReport:
    """Codimension form of the dilated-simplex section count."""
    left = sum(
        (-1) ** j
        * binomial(n - j, p - j)
        * binomial(n + k - j, k)
        * binomial(n + 1, j)
        for j in range(p + 1)
    )
    right = binomial(n + k - p, k) * binomial(k - 1, p)
    return IdentityReport("b1", (n, p, k), left, right)


def identity_a2(n: int, p: int) -> IdentityReport:
    """Alternating dimension sum over simplex face counts equals 1."""
    left = sum(
        (-1) ** (p + s) * binomial(s, p) * binomial(n + 1, n - s)
        for s in range(p, n + 1)
    )
    return IdentityReport("a2", (n, p), left, 1)


def identity_b2(n: int, p: int, k: int) -> IdentityReport:
    """Dimension form of the dilated-simplex section count."""
    left = sum(
        binomial(s, p) * binomial(k - 1, s) * binomial(n + 1, n - s)
        for s in range(p, n + 1)
    )
    right = binomial(n + k - p, k) * binomial(k - 1, p)
    return IdentityReport("b2", (n, p, k), left, right)


def appendix_identity(n: int, s: int, p: int) -> IdentityReport:
    """Signed sum over faces above a fixed s-face, in binomial form."""
    left = sum(
        (-1) ** j * binomial(n - j, p) * binomial(n - s, j)
        for j in range(n - s + 1)
    )
    return IdentityReport("appendix", (n, s, p), left, binomial(s, n - p))


def dehn_sommerville(polytope: Polytope, p: int) -> IdentityReport:
    """Both f-vector forms of the diagonal dimension, for a simple polytope."""
    require_simple(polytope)
    n = polytope.dim
    f = face_lattice(polytope).f_vector
    left = sum(
        (-1) ** j * binomial(n - j, p - j) * f[n - j] for j in range(p + 1)
    )
    right = sum((-1) ** s * binomial(s, p) * f[s] for s in range(p, n + 1))
    return IdentityReport("dehn-sommerville", (n, p), left, right)


def face_duality(polytope: Polytope, p: int) -> IdentityReport:
    """Closed counts per codimension versus interior counts per dimension."""
    require_simple(polytope)
    n = polytope.dim
    table = count_table(polytope)
    left = sum(
        (-1) ** j * binomial(n - j, p - j) * table.codim_point_sums[j]
        for j in range(p + 1)
    )
    right = sum(
        binomial(s, p) * table.dim_interior_sums[s] for s in range(p, n + 1)
    )
    return IdentityReport("face-duality", (n, p), left, right)
