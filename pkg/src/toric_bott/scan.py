"""Lattice-point scan kernel with compiled fast path.

The one hot loop in this package enumerates the integer points of a box
and classifies each point that satisfies a system ``<a_f, x> >= b_f`` by
the bitmask of inequalities it meets with equality (its "tight mask").
Every downstream count -- l(F), l*(F), volumes of nothing, Ehrhart data --
is a sum over that histogram.

Two interchangeable implementations exist:

* ``_fastscan`` -- a Cython extension using int64 arithmetic.  Selected at
  import when it built successfully, per-call guarded by an overflow bound
  so exactness is never at risk.
* the pure-Python scan below -- arbitrary precision, always available.

Set the environment variable ``TORIC_BOTT_PURE=1`` to force the pure path
(used by the test suite and the benchmark).
"""

from __future__ import annotations

import os

try:
    from . import _fastscan
except ImportError:  # extension not built; pure fallback only
    _fastscan = None

_FORCE_PURE = bool(os.environ.get("TORIC_BOTT_PURE"))

#: Name of the kernel the dispatcher will prefer ("compiled" or "pure").
KERNEL = "compiled" if (_fastscan is not None and not _FORCE_PURE) else "pure"

# int64 safety margin for the compiled path; partial dot products must
# stay strictly inside this bound at every intermediate step.
_I64_LIMIT = 1 << 61


def tight_histogram_pure(lo, hi, normals, offsets):
    """Histogram {tight mask: count} over the box, pure Python.

    Scans the integer box ``lo[i] <= x_i <= hi[i]`` (bounds inclusive),
    keeps the points with ``<normals[f], x> >= offsets[f]`` for every f,
    and buckets them by the bitmask of indices f met with equality.

    The scan recurses over coordinates keeping per-inequality partial
    sums; subtrees that cannot reach feasibility are pruned via
    precomputed best-case tails, and the innermost coordinate iterates
    only over its exactly-computed feasible interval.
    """
    n = len(lo)
    m = len(normals)
    if any(l > h for l, h in zip(lo, hi)):
        return {}
    if n == 0:
        return {0: 1}

    # max_tail[d][f]: best-case contribution of coordinates d..n-1 to row f.
    max_tail = [[0] * m for _ in range(n + 1)]
    for d in range(n - 1, -1, -1):
        for f in range(m):
            c = normals[f][d]
            best = max(c * lo[d], c * hi[d])
            max_tail[d][f] = max_tail[d + 1][f] + best

    hist: dict[int, int] = {}
    partial = [0] * m
    last = n - 1

    def rec(d, partial):
        if d == last:
            xlo, xhi = lo[d], hi[d]
            forced = 0  # mask of rows tight independently of x (c == 0)
            for f in range(m):
                c = normals[f][d]
                rem = offsets[f] - partial[f]
                if c > 0:
                    # c*x >= rem
                    q = -((-rem) // c)  # ceil division
                    if q > xlo:
                        xlo = q
                elif c < 0:
                    q = rem // c  # floor of rem/c for the <= bound
                    if q < xhi:
                        xhi = q
                else:
                    if rem > 0:
                        return
                    if rem == 0:
                        forced |= 1 << f
                if xlo > xhi:
                    return
            for x in range(xlo, xhi + 1):
                mask = forced
                for f in range(m):
                    c = normals[f][d]
                    if c != 0 and partial[f] + c * x == offsets[f]:
                        mask |= 1 << f
                hist[mask] = hist.get(mask, 0) + 1
            return
        tail = max_tail[d + 1]
        for x in range(lo[d], hi[d] + 1):
            nxt = [partial[f] + normals[f][d] * x for f in range(m)]
            if all(nxt[f] + tail[f] >= offsets[f] for f in range(m)):
                rec(d + 1, nxt)

    rec(0, partial)
    return hist


def _fits_int64(lo, hi, normals, offsets) -> bool:
    if len(normals) > 63:
        return False
    for f, row in enumerate(normals):
        worst = abs(offsets[f])
        for c, l, h in zip(row, lo, hi):
            worst += max(abs(c * l), abs(c * h))
        if worst >= _I64_LIMIT:
            return False
    return True


def tight_histogram(lo, hi, normals, offsets):
    """Dispatch to the compiled kernel when safe, else the pure scan."""
    lo, hi = tuple(lo), tuple(hi)
    normals = tuple(tuple(row) for row in normals)
    offsets = tuple(offsets)
    if (
        KERNEL == "compiled"
        and len(lo) > 0
        and _fits_int64(lo, hi, normals, offsets)
    ):
        hist = _fastscan.tight_histogram_i64(lo, hi, normals, offsets)
        if hist is not None:
            return hist
    return tight_histogram_pure(lo, hi, normals, offsets)
