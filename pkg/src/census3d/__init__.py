"""Enumeration and analysis of small triangulated 2-spheres, closed
3-manifolds and 3-balls: censuses, symmetry groups, homology classification,
bistellar certification, and shellability / vertex-decomposability /
constructibility testing."""

from .balls import balls_from_sphere, cone, enumerate_balls, sandwich_check, sphere_from_ball
from .bistellar import BistellarMove, applicable_moves, apply_move, certifies_sphere, random_moves, reduce
from .canonical import (
    GroupFingerprint,
    are_isomorphic,
    automorphism_group,
    automorphisms,
    canonical_facets,
    canonical_form,
    nontrivial_group_census,
)
from .complexes import (
    Complex,
    boundary_complex,
    closed_fvector_ok,
    delete_star,
    f_vector,
    is_ball2,
    is_ball3,
    is_closed_3manifold,
    is_closed_pseudomanifold3,
    is_orientable,
    is_sphere2,
    link,
    simplex,
    simplex_boundary,
    star,
)
from .decompose import (
    constructibility_certificate,
    free_facets,
    is_extendably_shellable,
    is_shellable,
    is_vertex_decomposable,
    nonshellable_census,
    verify_shelling,
)
from .homology import HomologyProfile, classify, homology, smith_invariants, walkup_check
from .manifolds import (
    CensusRecord,
    PartialComplex,
    build_link_catalog,
    enumerate_2spheres,
    enumerate_3manifold_forms,
    enumerate_3manifolds,
    fvector_histogram,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
