"""Exact lattice polytopes: hulls, facets, faces, and basic operations.

Polytopes are full-dimensional convex hulls of integer points, stored with
both a vertex list and the complete facet system ``<normal, x> >= offset``
(inward primitive normals).  Everything is integer arithmetic; rational
coordinates only ever appear in point-location queries.

Hull construction is the exhaustive hyperplane search over n-subsets of
input points.  That is O(|V|^n), fine at desk scale (n <= ~5, a few dozen
points) and keeps the package dependency-free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    Empty,
    LowDimensional,
    NonPositiveDilation,
    NotSimple,
    UnknownFace,
)
from .intlinalg import affine_rank, dot, hyperplane_normal, int_rank


@dataclass(frozen=True)
class Halfspace:
    """Facet inequality ``<normal, x> >= offset`` holding on the polytope."""

    normal: tuple
    offset: int

    def evaluate(self, point):
        """Slack ``<normal, point> - offset`` (0 means the point is on it)."""
        return dot(self.normal, point) - self.offset


@dataclass(frozen=True)
class Face:
    """A face, identified by its vertices and its full tight-facet set."""

    vertex_ids: tuple
    tight_facets: tuple
    dim: int


@dataclass(frozen=True)
class Polytope:
    """Full-dimensional lattice polytope with vertices and facets.

    Instances are immutable and hashable; construct through
    :func:`from_vertices` (or :func:`dilate` / :func:`minkowski_sum`),
    which establish the invariants: irredundant lattice vertices,
    full-dimensionality, primitive inward facet normals.
    """

    dim: int
    vertices: tuple
    facets: tuple

    def face_lattice(self) -> "FaceLattice":
        return face_lattice(self)

    def is_simple(self) -> bool:
        return is_simple(self)

    def bounding_box(self):
        lo = tuple(min(v[i] for v in self.vertices) for i in range(self.dim))
        hi = tuple(max(v[i] for v in self.vertices) for i in range(self.dim))
        return lo, hi

    def __repr__(self):
        return (
            f"Polytope(dim={self.dim}, {len(self.vertices)} vertices, "
            f"{len(self.facets)} facets)"
        )


class FaceLattice:
    """All faces of a polytope, dimensions 0..n, with containment.

    Faces are sorted by (dimension, vertex ids), so indices are stable for
    a given polytope.  Containment between faces is vertex-set inclusion.
    """

    def __init__(self, polytope: Polytope, faces):
        self.polytope = polytope
        self.faces = tuple(faces)
        self._index = {f: i for i, f in enumerate(self.faces)}
        self._by_tight = {f.tight_facets: f for f in self.faces}
        self._vsets = [frozenset(f.vertex_ids) for f in self.faces]

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def index(self, face: Face) -> int:
        try:
            return self._index[face]
        except KeyError:
            raise UnknownFace(f"{face} is not a face of {self.polytope}") from None

    def by_tight_facets(self, tight) -> Face:
        return self._by_tight[tuple(tight)]

    @property
    def f_vector(self):
        counts = [0] * (self.polytope.dim + 1)
        for f in self.faces:
            counts[f.dim] += 1
        return tuple(counts)

    def faces_of_dim(self, d):
        return [f for f in self.faces if f.dim == d]

    def contains(self, inner: Face, outer: Face) -> bool:
        return self._vsets[self.index(inner)] <= self._vsets[self.index(outer)]

    def subfaces(self, face: Face):
        """All faces contained in ``face`` (including ``face`` itself)."""
        outer = self._vsets[self.index(face)]
        return [f for f, s in zip(self.faces, self._vsets) if s <= outer]

    @property
    def top(self) -> Face:
        return self.faces[-1]


def _check_points(points):
    pts = []
    for p in points:
        t = tuple(p)
        for x in t:
            if not isinstance(x, int):
                raise TypeError(f"lattice points need integer coordinates, got {x!r}")
        pts.append(t)
    if not pts:
        raise Empty("no points given")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionMismatch("points of mixed dimensions")
    # dedupe, preserving nothing in particular; output order is canonical
    return n, sorted(set(pts))


def from_vertices(points) -> Polytope:
    """Convex hull of integer points as a :class:`Polytope`.

    Raises :class:`Empty` for an empty input and :class:`LowDimensional`
    when the affine hull is a proper subspace of the ambient space.
    """
    n, pts = _check_points(points)
    if n == 0:
        return Polytope(dim=0, vertices=((),), facets=())
    if affine_rank(pts) < n:
        raise LowDimensional(
            f"points span a {affine_rank(pts)}-dimensional affine hull in R^{n}"
        )

    halfspaces = {}
    for subset in itertools.combinations(pts, n):
        normal = hyperplane_normal(subset)
        if normal is None:
            continue
        offset = dot(normal, subset[0])
        slacks = [dot(normal, p) - offset for p in pts]
        if all(s >= 0 for s in slacks):
            halfspaces[(normal, offset)] = None
        elif all(s <= 0 for s in slacks):
            neg = tuple(-x for x in normal)
            halfspaces[(neg, -offset)] = None

    facets = tuple(
        Halfspace(normal, offset) for normal, offset in sorted(halfspaces)
    )

    vertices = []
    for p in pts:
        tight = [h.normal for h in facets if h.evaluate(p) == 0]
        if len(tight) >= n and int_rank(tight) == n:
            vertices.append(p)
    return Polytope(dim=n, vertices=tuple(vertices), facets=facets)


@lru_cache(maxsize=None)
def face_lattice(polytope: Polytope) -> FaceLattice:
    """All faces of the polytope, built bottom-up from facet vertex sets.

    Faces are the intersections of facet vertex sets, closed under
    intersection, plus the polytope itself as the unique top face.  Each
    face records the *complete* set of facets containing it, which is what
    the interior-point classification keys on.
    """
    all_ids = frozenset(range(len(polytope.vertices)))
    facet_sets = []
    for h in polytope.facets:
        facet_sets.append(
            frozenset(
                i for i, v in enumerate(polytope.vertices) if h.evaluate(v) == 0
            )
        )

    found = {all_ids}
    frontier = set(facet_sets)
    found.update(frontier)
    while frontier:
        new = set()
        for a in frontier:
            for b in facet_sets:
                c = a & b
                if c and c not in found:
                    new.add(c)
        found.update(new)
        frontier = new

    faces = []
    for vset in found:
        tight = tuple(
            f for f, fset in enumerate(facet_sets) if vset <= fset
        )
        coords = [polytope.vertices[i] for i in sorted(vset)]
        faces.append(
            Face(
                vertex_ids=tuple(sorted(vset)),
                tight_facets=tight,
                dim=affine_rank(coords),
            )
        )
    faces.sort(key=lambda f: (f.dim, f.vertex_ids))
    return FaceLattice(polytope, faces)


def _vertex_facet_counts(polytope: Polytope):
    counts = []
    for v in polytope.vertices:
        counts.append(sum(1 for h in polytope.facets if h.evaluate(v) == 0))
    return counts


def is_simple(polytope: Polytope) -> bool:
    """True iff every vertex lies on exactly n facets."""
    return all(c == polytope.dim for c in _vertex_facet_counts(polytope))


def require_simple(polytope: Polytope):
    """Raise :class:`NotSimple` naming an offending vertex, if any."""
    for v, c in zip(polytope.vertices, _vertex_facet_counts(polytope)):
        if c != polytope.dim:
            raise NotSimple(
                f"vertex {v} lies on {c} facets, expected {polytope.dim}"
            )


def dilate(polytope: Polytope, k: int) -> Polytope:
    """The dilation k*P, k >= 1.  Combinatorially identical to P.

    Vertices keep their indices and facets their order, so faces of the
    dilate are matched to faces of P by equal vertex-id sets.
    """
    if not isinstance(k, int) or k < 1:
        raise NonPositiveDilation(f"dilation factor must be a positive integer, got {k}")
    vertices = tuple(tuple(k * x for x in v) for v in polytope.vertices)
    facets = tuple(Halfspace(h.normal, k * h.offset) for h in polytope.facets)
    return Polytope(dim=polytope.dim, vertices=vertices, facets=facets)


def _vertex_set(operand):
    """Vertices of a Polytope, or a raw point sequence taken verbatim.

    Raw sequences let callers sum lower-dimensional pieces (segments,
    faces) that the full-dimensional Polytope type cannot hold, as long
    as the *result* is full-dimensional.
    """
    if isinstance(operand, Polytope):
        return operand.vertices
    pts = [tuple(p) for p in operand]
    if not pts:
        raise Empty("no points given")
    return pts


def minkowski_sum(p, q) -> Polytope:
    """Minkowski sum, as the hull of all pairwise vertex sums.

    Operands are polytopes or plain point sequences; the sum must be
    full-dimensional.
    """
    pv, qv = _vertex_set(p), _vertex_set(q)
    if len(pv[0]) != len(qv[0]):
        raise DimensionMismatch(
            f"cannot add polytopes of dimensions {len(pv[0])} and {len(qv[0])}"
        )
    sums = [tuple(a + b for a, b in zip(u, v)) for u in pv for v in qv]
    return from_vertices(sums)


def smallest_face(polytope: Polytope, point):
    """Smallest face containing the (rational) point, or None if outside."""
    x = tuple(Fraction(c) for c in point)
    if len(x) != polytope.dim:
        raise DimensionMismatch(
            f"point has {len(x)} coordinates, polytope lives in R^{polytope.dim}"
        )
    tight = []
    for f, h in enumerate(polytope.facets):
        s = h.evaluate(x)
        if s < 0:
            return None
        if s == 0:
            tight.append(f)
    return face_lattice(polytope).by_tight_facets(tight)
