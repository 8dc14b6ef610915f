"""Algebraic and combinatorial shifting of simplicial complexes.

Core objects: bitmask faces, immutable simplicial complexes, graded
Betti tables of Stanley-Reisner ideals, combinatorial shifting, and
exterior generic initial ideals over GF(p).
"""

from .complexes import (
    DegreeSlice,
    SimplicialComplex,
    f_vector,
    from_facets,
    from_faces,
    from_json,
    full_simplex,
    ideal_degree_slice,
    ideal_slices,
    is_shifted,
    m_leq,
    minimal_nonfaces,
    restriction,
    to_json,
)
from .exterior import GenericMatrix, gin, m_leq_via_rank, phi_image_matrix, random_gl
from .faces import binom, lex_compare, mask_of, members_of, revlex_compare
from .homology import (
    BettiTable,
    betti_leq,
    boundary_matrix,
    hochster_betti,
    reduced_homology_dims,
    shifted_betti,
)
from .lexsegment import delta_lex
from .section4 import (
    EXPECTED_QSEQUENCES,
    section4_build,
    section4_enumerate_and_classify,
    section4_negative_results,
)
from .shifting import enumerate_shifted, replay, s_ij_zero, shift_ij, shift_to_shifted
from .verify import VerificationReport, random_complex, verify_theorems

__all__ = [
    "DegreeSlice",
    "SimplicialComplex",
    "BettiTable",
    "GenericMatrix",
    "VerificationReport",
    "EXPECTED_QSEQUENCES",
    "binom",
    "betti_leq",
    "boundary_matrix",
    "delta_lex",
    "enumerate_shifted",
    "f_vector",
    "from_facets",
    "from_faces",
    "from_json",
    "full_simplex",
    "gin",
    "hochster_betti",
    "ideal_degree_slice",
    "ideal_slices",
    "is_shifted",
    "lex_compare",
    "m_leq",
    "m_leq_via_rank",
    "mask_of",
    "members_of",
    "minimal_nonfaces",
    "phi_image_matrix",
    "random_complex",
    "random_gl",
    "reduced_homology_dims",
    "replay",
    "restriction",
    "revlex_compare",
    "s_ij_zero",
    "section4_build",
    "section4_enumerate_and_classify",
    "section4_negative_results",
    "shift_ij",
    "shift_to_shifted",
    "shifted_betti",
    "to_json",
    "verify_theorems",
]
