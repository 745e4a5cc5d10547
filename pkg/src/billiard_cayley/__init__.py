"""Cayley graphs of dihedral groups on rational billiard surfaces."""

__version__ = "0.1.0"

from .cayley import (
    Circuit,
    CayleyGraph,
    build_cayley,
    enumerate_identity_words,
    girth,
    has_length4_circuit,
)
from .dihedral import (
    DihedralElement,
    TriangleTriple,
    compose,
    element_order,
    evaluate_word,
    generator_element,
    inverse,
    pair_generates,
)
from .embedding import (
    FaceTrace,
    GenusReport,
    RotationSystem,
    canonical_rotation,
    genus_of_rotation,
    maximal_rotation_search,
    predicted_genus,
    trace_faces,
    verified_genus,
)
from .errors import (
    BilliardCayleyError,
    ConsistencyError,
    InvalidOperandError,
    InvalidTripleError,
    PreconditionError,
    ResourceError,
)
from .surface import SurfaceComplex, build_surface, cone_points, dual_graph, fagnano_check, surface_genus
from .witness import (
    K33Witness,
    generic_k33_search,
    isosceles_even_embedding,
    isosceles_odd_witness,
    right_triangle_witness,
    verify_k33_subdivision,
)
