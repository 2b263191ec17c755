"""Section dimensions of the weight-filtration pieces of log-pole p-forms.

The filtration level k contributes, for each face G of codimension s <= k,
the twisted (p-s)-form section count of the polytope G itself -- evaluated
purely inside the ambient face lattice, since faces of G are exactly the
faces of the polytope contained in G.  Levels above p add nothing (the
filtration tops out), so k is clamped to p.
"""

from __future__ import annotations

from .binom import binomial
from .counting import count_table
from .polytope import Polytope, face_lattice, require_simple


def _face_section_count(lattice, table, outer, p: int) -> int:
    """Twisted p-form section count of the face ``outer`` from its subfaces."""
    d = outer.dim
    total = 0
    for j in range(p + 1):
        coeff = (-1) ** j * binomial(d - j, p - j)
        inner = sum(
            table.l(f)
            for f in lattice.subfaces(outer)
            if f.dim == d - j
        )
        total += coeff * inner
    return total


def h0_weighted(polytope: Polytope, p: int, k: int) -> int:
    """Sections of the k-th weight piece of twisted log p-forms."""
    require_simple(polytope)
    n = polytope.dim
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got {p}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    lattice = face_lattice(polytope)
    table = count_table(polytope)
    total = 0
    for s in range(min(k, p) + 1):
        for outer in lattice.faces_of_dim(n - s):
            total += _face_section_count(lattice, table, outer, p - s)
    return total
