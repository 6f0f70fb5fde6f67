"""Structural properties of finite simplicial complexes: vertex
decomposability, Cohen-Macaulayness, shellability and relatives, plus an
exhaustive checker for facet-count thresholds on small vertex sets."""

from .bounds import (
    MonomialIdeal,
    VerificationReport,
    enumerate_pure,
    generate_tight_example,
    has_linear_resolution,
    meets_main_theorem,
    purity_threshold,
    sr_export,
    vd_threshold,
    verify,
)
from .classify import is_extremal, is_matroid, is_shifted, kruskal_katona_min_shadow
from .complex import (
    Complex,
    ComplexError,
    alexander_dual,
    antifacet_count,
    antifacets,
    codimension,
    cone_apex,
    deletion,
    dimension,
    f_vector,
    facet_count,
    from_facets,
    is_pure,
    link,
    minimal_nonfaces,
    skeleton,
)
from .decomp import (
    Decision,
    ShellingOrder,
    is_shedding,
    is_shellable,
    is_shelling_completable,
    is_vertex_decomposable,
    shedding_vertices,
    verify_certificate,
)
from .homology import HomologyProfile, boundary_matrix, is_cohen_macaulay, is_connected, reduced_homology_ranks

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "ComplexError",
    "Decision",
    "HomologyProfile",
    "MonomialIdeal",
    "ShellingOrder",
    "VerificationReport",
    "__version__",
    "alexander_dual",
    "antifacet_count",
    "antifacets",
    "boundary_matrix",
    "codimension",
    "cone_apex",
    "deletion",
    "dimension",
    "enumerate_pure",
    "f_vector",
    "facet_count",
    "from_facets",
    "generate_tight_example",
    "has_linear_resolution",
    "is_cohen_macaulay",
    "is_connected",
    "is_extremal",
    "is_matroid",
    "is_pure",
    "is_shedding",
    "is_shellable",
    "is_shelling_completable",
    "is_shifted",
    "is_vertex_decomposable",
    "kruskal_katona_min_shadow",
    "link",
    "meets_main_theorem",
    "minimal_nonfaces",
    "purity_threshold",
    "reduced_homology_ranks",
    "shedding_vertices",
    "skeleton",
    "sr_export",
    "vd_threshold",
    "verify",
    "verify_certificate",
]
