"""Triangulated 3-balls derived from the sphere census.

Every 3-ball with m vertices arises by deleting a vertex star from some
3-sphere with m+1 vertices, and coning over the boundary inverts the
construction.  This gives both the complete ball catalog and the counting
inequality relating the two censuses.
"""

from __future__ import annotations

from .canonical import canonical_facets
from .complexes import Complex, boundary_complex, delete_star, is_closed_3manifold
from .homology import S3, classify


def balls_from_sphere(S: Complex, verify: bool = True):
    """The n star deletions of a 3-sphere, relabeled to 1..n-1.

    Surviving vertices are compacted preserving their order, so the results
    can be canonicalized and deduplicated directly.
    """
    if verify and not (is_closed_3manifold(S) and classify(S) == S3):
        raise ValueError("star deletion yields balls only for 3-spheres")
    return [delete_star(S, v).compacted() for v in S.vertices]


def enumerate_balls(m: int, spheres) -> list:
    """Isomorphism classes of 3-balls with m vertices.

    ``spheres`` must be the full census of 3-spheres with m+1 vertices
    (sphere-bundle census entries must not be passed in).  Returns canonical
    complexes sorted by facet list.
    """
    found = set()
    for S in spheres:
        if S.n != m + 1:
            raise ValueError(f"expected {m + 1}-vertex spheres, got n={S.n}")
        for B in balls_from_sphere(S, verify=False):
            found.add(canonical_facets(B.facets))
    return [Complex(f) for f in sorted(found)]


def sphere_from_ball(B: Complex) -> Complex:
    """Close a 3-ball by coning a fresh vertex over its boundary sphere."""
    bd = boundary_complex(B)
    apex = max(B.vertices) + 1
    S = Complex(list(B.facets) + [(f + (apex,)) for f in bd.facets], dim=3)
    if not is_closed_3manifold(S) or classify(S) != S3:
        raise ValueError("input was not a 3-ball: the closed-up complex is not a 3-sphere")
    return S


def cone(K: Complex) -> Complex:
    """Join a fresh apex vertex to every facet of K."""
    apex = max(K.vertices) + 1
    return Complex([f + (apex,) for f in K.facets], dim=K.dim + 1)


def sandwich_check(m: int, ball_count: int, sphere_count: int) -> bool:
    """Counting inequality tying m-vertex balls to (m+1)-vertex spheres."""
    return sphere_count <= ball_count <= (m + 1) * sphere_count
