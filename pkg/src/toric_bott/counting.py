"""Exact lattice-point counts per face, and normalized volume.

The scan kernel buckets every lattice point of the polytope by the set of
facets it lies on; that set is exactly the tight-facet set of the smallest
face containing the point.  So one scan yields l*(F) for every face at
once, and the closed counts come from l(F) = sum of l* over subfaces.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import scan
from .errors import LowDimensional
from .intlinalg import int_det
from .polytope import Face, FaceLattice, Polytope, face_lattice


class FaceCountTable:
    """Per-face point counts plus the two aggregate sequences.

    ``codim_point_sums[j]`` is the total of l(F) over faces of codimension
    j, and ``dim_interior_sums[s]`` the total of l*(F) over faces of
    dimension s; both run over index 0..n.
    """

    def __init__(self, lattice: FaceLattice, l_by_face, l_star_by_face):
        self.lattice = lattice
        self._l = l_by_face
        self._l_star = l_star_by_face
        n = lattice.polytope.dim
        codim = [0] * (n + 1)
        interior = [0] * (n + 1)
        for face in lattice:
            codim[n - face.dim] += self._l[face]
            interior[face.dim] += self._l_star[face]
        self.codim_point_sums = tuple(codim)
        self.dim_interior_sums = tuple(interior)

    def l(self, face: Face) -> int:
        self.lattice.index(face)  # raises UnknownFace for foreign faces
        return self._l[face]

    def l_star(self, face: Face) -> int:
        self.lattice.index(face)
        return self._l_star[face]

    @property
    def total(self) -> int:
        return self.codim_point_sums[0]


@lru_cache(maxsize=None)
def _tight_histogram(polytope: Polytope):
    lo, hi = polytope.bounding_box()
    normals = tuple(h.normal for h in polytope.facets)
    offsets = tuple(h.offset for h in polytope.facets)
    return scan.tight_histogram(lo, hi, normals, offsets)


@lru_cache(maxsize=None)
def count_table(polytope: Polytope) -> FaceCountTable:
    """Count l and l* for every face of the polytope in one scan."""
    lattice = face_lattice(polytope)
    hist = _tight_histogram(polytope)

    l_star = {}
    for face in lattice:
        mask = 0
        for f in face.tight_facets:
            mask |= 1 << f
        l_star[face] = hist.get(mask, 0)
    # every lattice point lies in the relative interior of exactly one face
    assert sum(hist.values()) == sum(l_star.values())

    vsets = [frozenset(face.vertex_ids) for face in lattice]
    l = {}
    for i, face in enumerate(lattice):
        l[face] = sum(
            l_star[g] for g, s in zip(lattice.faces, vsets) if s <= vsets[i]
        )
    return FaceCountTable(lattice, l, l_star)


def count(polytope: Polytope, face: Face) -> int:
    """Number of lattice points in the closed face."""
    return count_table(polytope).l(face)


def count_interior(polytope: Polytope, face: Face) -> int:
    """Number of lattice points in the relative interior of the face."""
    return count_table(polytope).l_star(face)


def count_points(polytope: Polytope) -> int:
    """Total lattice points of the polytope (no face lattice required)."""
    return sum(_tight_histogram(polytope).values())


def _triangulate(lattice: FaceLattice, face: Face):
    """Vertex-id simplices triangulating the face (cone from first vertex)."""
    if face.dim == 0:
        return [face.vertex_ids]
    apex = face.vertex_ids[0]
    outer = frozenset(face.vertex_ids)
    simplices = []
    for g in lattice.faces:
        if g.dim != face.dim - 1 or apex in g.vertex_ids:
            continue
        if not frozenset(g.vertex_ids) <= outer:
            continue
        for s in _triangulate(lattice, g):
            simplices.append(s + (apex,))
    return simplices


def volume(polytope: Polytope) -> Fraction:
    """Euclidean volume, normalized so the unit lattice cube has volume 1."""
    n = polytope.dim
    if n == 0:
        return Fraction(1)
    if not polytope.facets:
        raise LowDimensional("degenerate polytope has no volume")
    lattice = face_lattice(polytope)
    total = 0
    for simplex in _triangulate(lattice, lattice.top):
        base = polytope.vertices[simplex[0]]
        rows = [
            tuple(x - y for x, y in zip(polytope.vertices[i], base))
            for i in simplex[1:]
        ]
        total += abs(int_det(rows))
    return Fraction(total, factorial(n))
