"""Weighted joins of polytopes and section counts on the projectivized sum.

A tuple of lattice polytopes over a common base dimension plays the role
of a direct sum of ample line bundles.  Section counts of the k-th twist
decompose over integer weight vectors lambda (one weight per summand,
summing to k): each weight vector contributes the lattice points of the
weighted Minkowski sum it selects.  Relative p-form sections are the
alternating sum of these counts over which summands are forced to carry
positive weight.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .counting import count_points
from .errors import EmptyPolytope, OutOfRange
from .polytope import Halfspace, Polytope, from_vertices, require_simple


@dataclass(frozen=True)
class BundleData:
    """Summand polytopes over a common base dimension (at least two)."""

    base_dim: int
    summands: tuple

    def __post_init__(self):
        if len(self.summands) < 2:
            raise ValueError("need at least two summand polytopes")
        for q in self.summands:
            if q.dim != self.base_dim:
                raise ValueError(
                    f"summand of dimension {q.dim} in a base of dimension {self.base_dim}"
                )
            require_simple(q)

    @property
    def s(self) -> int:
        """Fiber dimension: number of summands minus one."""
        return len(self.summands) - 1


def _compositions(total: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def _weighted_vertex_candidates(summands, weights):
    """Candidate vertices of sum_j weights[j] * summands[j] (any signs)."""
    pts = {(0,) * summands[0].dim}
    for q, c in zip(summands, weights):
        if c == 0:
            continue
        pts = {
            tuple(a + c * b for a, b in zip(u, v))
            for u in pts
            for v in q.vertices
        }
    return pts


@lru_cache(maxsize=None)
def _fiber_count(summands, weights) -> int:
    """Lattice points of the weighted Minkowski sum; 1 for the zero sum."""
    candidates = _weighted_vertex_candidates(summands, weights)
    if len(candidates) == 1:
        return 1
    return count_points(from_vertices(candidates))


def cayley_count(bundle: BundleData, forced, k: int) -> int:
    """Lattice points of the weighted join at twist k.

    ``forced`` is the set of summand indices whose weight must be >= 1;
    the remaining weights are >= 0 and all weights sum to k.  Infeasible
    constraint sets (k < |forced|) count zero.
    """
    forced = frozenset(forced)
    if not forced <= set(range(bundle.s + 1)):
        raise OutOfRange(f"forced indices {sorted(forced)} out of range")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k < len(forced):
        return 0
    total = 0
    for base in _compositions(k - len(forced), bundle.s + 1):
        weights = tuple(
            b + (1 if j in forced else 0) for j, b in enumerate(base)
        )
        total += _fiber_count(bundle.summands, weights)
    return total


def nabla(bundle: BundleData, k: int, lower_bounds) -> Polytope:
    """The support polytope of the k-th twist in fiber-times-base space.

    Coordinates are (weights 1..s, base point); weight 0 is eliminated via
    the sum constraint.  Built as the convex hull of the per-extreme-weight
    fibers (the weighted-join construction).  With the weight simplex
    collapsed to a point (k + sum of lower bounds = 0) the result is a
    degenerate slice that supports lattice-point counting only.
    """
    s = bundle.s
    lower_bounds = tuple(lower_bounds)
    if len(lower_bounds) != s + 1:
        raise ValueError(f"need {s + 1} lower bounds, got {len(lower_bounds)}")
    slack = k + sum(lower_bounds)
    if slack < 0:
        raise EmptyPolytope(f"no weight vectors: k + sum(bounds) = {slack} < 0")

    if slack == 0:
        # all weights forced to their lower bounds: a single fiber
        weights = tuple(-b for b in lower_bounds)
        head = weights[1:]
        candidates = _weighted_vertex_candidates(bundle.summands, weights)
        if len(candidates) == 1:
            (point,) = candidates
            return Polytope(
                dim=s + bundle.base_dim,
                vertices=(head + point,),
                facets=(),
            )
        fiber = from_vertices(candidates)
        lifted = tuple(
            Halfspace(normal=(0,) * s + h.normal, offset=h.offset)
            for h in fiber.facets
        )
        return Polytope(
            dim=s + bundle.base_dim,
            vertices=tuple(head + v for v in fiber.vertices),
            facets=lifted,
        )

    points = []
    for j in range(s + 1):
        weights = tuple(
            slack - lower_bounds[j] if i == j else -lower_bounds[i]
            for i in range(s + 1)
        )
        head = weights[1:]
        for v in _weighted_vertex_candidates(bundle.summands, weights):
            points.append(head + v)
    return from_vertices(points)


def h0_relative(bundle: BundleData, p: int, k: int) -> int:
    """Relative p-form section count at twist k (alternating join counts).

    Exact agreement with the closed projective-space form is only
    guaranteed for k > p; callers probing k <= p are in the warning zone.
    """
    if not 0 <= p <= bundle.s:
        raise OutOfRange(f"p must lie in 0..{bundle.s}, got {p}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    total = 0
    for t in range(p + 1):
        sign = (-1) ** (p - t)
        for subset in itertools.combinations(range(bundle.s + 1), t):
            total += sign * cayley_count(bundle, subset, k)
    return total
