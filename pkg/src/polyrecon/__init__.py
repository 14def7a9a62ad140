"""Reconstruct a simple polytope's face lattice from its graph.

The 2-faces are found as a maximum facoidal system of walks and certified
by an acyclic orientation of equal H2-sum; facets and the full lattice
follow from the 2-faces.
"""

from .errors import PolyreconError
from .graph import (
    PolytopeGraph,
    cube,
    dodecahedron,
    from_edges,
    generate,
    polygon,
    prism,
    product,
    read_graph,
    segment,
    simplex,
    validate,
)
from .orientations import Orientation, h2_sum, h_sum, kalai_aofs, orient_by_order
from .reconstruct import FaceLattice, TwoFaceSet, VertexFacetIncidence, face_lattice, facets_from_twofaces
from .solver import (
    Certificate,
    GapReport,
    SolverConfig,
    kalai_reconstruct,
    reconstruct_full,
    solve,
    verify_certificate,
)
from .walks import FacoidalSystem, find_facoidal, validate_facoidal

__version__ = "0.1.0"
