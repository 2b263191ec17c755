"""Small exact linear algebra helpers over the integers.

Everything here works on plain Python ints (arbitrary precision), so there
is no overflow and no rounding anywhere.  Matrices are lists/tuples of row
tuples.  Sizes are tiny (ambient dimension <= ~6), so the cubic algorithms
below are more than enough.
"""

from __future__ import annotations

from math import gcd


def int_det(rows) -> int:
    """Determinant of a square integer matrix (Bareiss, fraction-free)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: exact division is guaranteed.
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def int_rank(rows) -> int:
    """Rank over Q of an integer matrix (fraction-free elimination)."""
    if not rows:
        return 0
    m = [list(r) for r in rows]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for i in range(row, nrows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        for i in range(row + 1, nrows):
            if m[i][col] == 0:
                continue
            a, b = m[row][col], m[i][col]
            for j in range(col, ncols):
                m[i][j] = m[i][j] * a - m[row][j] * b
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def affine_rank(points) -> int:
    """Dimension of the affine hull of a set of integer points."""
    pts = list(points)
    if not pts:
        return -1
    base = pts[0]
    diffs = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
    return int_rank(diffs)


def primitive(vec):
    """Divide an integer vector by the gcd of its entries (gcd(0) kept)."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def hyperplane_normal(points):
    """Integer normal of the hyperplane through n points in Z^n, or None.

    Uses the generalized cross product: entry j is the signed (n-1)-minor
    of the difference matrix with column j removed.  Returns a primitive
    vector, or None when the points do not span a hyperplane.
    """
    pts = [tuple(p) for p in points]
    n = len(pts[0])
    if len(pts) != n:
        raise ValueError("need exactly n points in dimension n")
    if n == 1:
        return (1,)
    base = pts[0]
    diff = [tuple(x - y for x, y in zip(p, base)) for p in pts[1:]]
    normal = []
    sign = 1
    for j in range(n):
        minor = [[row[c] for c in range(n) if c != j] for row in diff]
        normal.append(sign * int_det(minor))
        sign = -sign
    if all(x == 0 for x in normal):
        return None
    return primitive(normal)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))
