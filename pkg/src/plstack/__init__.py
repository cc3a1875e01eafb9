"""Stellar subdivisions as cobordisms, stackedness, face vectors, integral
homology and perfect-group presentations."""

from .cobordism import (
    PyramidAttachment,
    ScheduleResult,
    SubdivisionSchedule,
    attach_pyramid,
    disk_extension_by_cone,
    run_schedule,
    verify_stack_lemma,
)
from .complex import (
    BoundaryDecomposition,
    SimplicialComplex,
    boundary,
    boundary_decomposition,
    cone,
    fresh_vertex,
    is_closed_pseudomanifold,
    is_strongly_connected,
    link,
    simplex,
    simplex_boundary,
    star,
    stellar_subdivide,
)
from .errors import *  # noqa: F401,F403
from .fvectors import (
    FaceVectorBundle,
    StackednessReport,
    f_vector,
    face_vectors,
    g3_boundary_check,
    g_full,
    g_vector,
    h_vector,
    is_k_stacked,
)
from .homology import (
    HomologyProfile,
    IntegerMatrix,
    SNFResult,
    boundary_matrix,
    homology,
    is_homology_sphere,
    smith_normal_form,
)
from .presentations import (
    AbelianGroup,
    GroupPresentation,
    PermutationGroupTable,
    a5_presentation,
    abelianization,
    count_homomorphisms,
    exponent_matrix,
    is_balanced,
    is_perfect,
    power_presentation,
    presentation_cellular_homology,
    presentation_complex_simplicial,
    product_presentation,
)

__version__ = "0.1.0"
