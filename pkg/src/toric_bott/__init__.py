"""Exact combinatorics of simple lattice polytopes.

Cohomology-dimension formulas over faces, dilation-count polynomials with
their reciprocity and leading-coefficient laws, binomial identities, Hodge
numbers of ample hypersurfaces, weighted log-form filtrations, and section
counts on projectivized sums -- all in exact integer/rational arithmetic.
"""

from .bott import (
    CohomologyTable,
    bott1_twisted,
    bott1_untwisted,
    bott2_twisted,
    bott2_untwisted,
    generating_polys,
    pn_oracle,
)
from .bundle import BundleData, cayley_count, h0_relative, nabla
from .counting import (
    FaceCountTable,
    count,
    count_interior,
    count_points,
    count_table,
    volume,
)
from .ehrhart import (
    CheckResult,
    hilbert_ehrhart,
    leading_coefficient_check,
    reciprocity_check,
)
from .hodge import (
    HodgeVector,
    chi_log,
    chi_log_printed,
    euler_ep,
    phi,
    primitive_hodge,
    primitive_hodge_printed,
)
from .identities import (
    IdentityReport,
    appendix_identity,
    dehn_sommerville,
    face_duality,
    identity_a1,
    identity_a2,
    identity_b1,
    identity_b2,
)
from .polynomial import UniPoly, lagrange_interpolate
from .polytope import (
    Face,
    FaceLattice,
    Halfspace,
    Polytope,
    dilate,
    face_lattice,
    from_vertices,
    is_simple,
    minkowski_sum,
    require_simple,
    smallest_face,
)
from .weighted import h0_weighted

__version__ = "1.0.0"

__all__ = [
    "BundleData",
    "CheckResult",
    "CohomologyTable",
    "Face",
    "FaceCountTable",
    "FaceLattice",
    "Halfspace",
    "HodgeVector",
    "IdentityReport",
    "Polytope",
    "UniPoly",
    "appendix_identity",
    "bott1_twisted",
    "bott1_untwisted",
    "bott2_twisted",
    "bott2_untwisted",
    "cayley_count",
    "chi_log",
    "chi_log_printed",
    "count",
    "count_interior",
    "count_points",
    "count_table",
    "dehn_sommerville",
    "dilate",
    "euler_ep",
    "face_duality",
    "face_lattice",
    "from_vertices",
    "generating_polys",
    "h0_relative",
    "h0_weighted",
    "hilbert_ehrhart",
    "identity_a1",
    "identity_a2",
    "identity_b1",
    "identity_b2",
    "is_simple",
    "lagrange_interpolate",
    "leading_coefficient_check",
    "minkowski_sum",
    "nabla",
    "phi",
    "pn_oracle",
    "primitive_hodge",
    "primitive_hodge_printed",
    "reciprocity_check",
    "require_simple",
    "smallest_face",
    "volume",
]
