import itertools
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from toric_bott import dilate, from_vertices


def simplex(n):
    """Unit n-simplex conv{0, e_1, ..., e_n}."""
    points = [(0,) * n] + [
        tuple(1 if j == i else 0 for j in range(n)) for i in range(n)
    ]
    return from_vertices(points)


def cube(n):
    return from_vertices([tuple(b) for b in itertools.product((0, 1), repeat=n)])


def skewtet(m):
    """Tetrahedron (0,0,0), (1,0,0), (0,1,0), (1,1,m); volume m/6."""
    return from_vertices([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, m)])


def octahedron():
    pts = []
    for i in range(3):
        for sign in (1, -1):
            pts.append(tuple(sign if j == i else 0 for j in range(3)))
    return from_vertices(pts)


def product_polytope(p, q):
    """Cartesian product, as the hull of concatenated vertex pairs."""
    return from_vertices([u + v for u in p.vertices for v in q.vertices])


def corpus():
    """The standing test corpus: (name, polytope) pairs, all simple."""
    items = []
    for n in range(1, 5):
        for k in range(1, 5):
            items.append((f"simplex{n}x{k}", dilate(simplex(n), k)))
    for n in range(1, 4):
        for k in range(1, 4):
            items.append((f"cube{n}x{k}", dilate(cube(n), k)))
    items.append(("prism", product_polytope(simplex(1), simplex(2))))
    items.append(("s2xs2", product_polytope(simplex(2), simplex(2))))
    for m in range(1, 6):
        items.append((f"skewtet{m}", skewtet(m)))
    return items


@pytest.fixture(scope="session")
def corpus_polytopes():
    return corpus()
