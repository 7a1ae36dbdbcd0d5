"""Shared fixtures and independent brute-force oracles for the tests.

The oracles deliberately share no code with the enumeration engine or the
canonical-form search: subsets are scanned directly and relabelings are
enumerated in full.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, permutations

from census3d.canonical import canonical_facets
from census3d.complexes import Complex, is_closed_3manifold, is_sphere2


def boundary_4simplex():
    return Complex(combinations(range(1, 6), 4))


def single_tet():
    return Complex([(1, 2, 3, 4)])


def octahedron():
    return Complex([(1, 2, 5), (1, 2, 6), (1, 3, 5), (1, 3, 6),
                    (2, 4, 5), (2, 4, 6), (3, 4, 5), (3, 4, 6)])


def torus_7():
    """The 7-vertex torus: triangles (i, i+1, i+3) and (i, i+2, i+3) mod 7."""
    tri = []
    for i in range(7):
        tri.append(tuple(sorted((i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1))))
        tri.append(tuple(sorted((i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1))))
    return Complex(tri)


def suspension_sphere_6():
    """Two cones over the boundary of the tetrahedron: 6 vertices, 8 facets."""
    base = list(combinations(range(1, 5), 3))
    return Complex([t + (5,) for t in base] + [t + (6,) for t in base])


def join_sphere_6():
    """Join of two triangle boundaries: 6 vertices, 9 facets."""
    return Complex([(a, b, c, d)
                    for a, b in combinations((1, 2, 3), 2)
                    for c, d in combinations((4, 5, 6), 2)])


def relabel_randomly(K, rng):
    perm = list(K.vertices)
    rng.shuffle(perm)
    return K.relabeled(dict(zip(K.vertices, perm)))


# ---------------------------------------------------------------------------
# oracles

def brute_canonical(facets):
    """Minimum sorted facet list over all n! relabelings."""
    verts = sorted({v for f in facets for v in f})
    best = None
    for perm in permutations(range(1, len(verts) + 1)):
        mapping = dict(zip(verts, perm))
        cand = tuple(sorted(tuple(sorted(mapping[v] for v in f)) for f in facets))
        if best is None or cand < best:
            best = cand
    return best


def brute_automorphism_count(K):
    verts = K.vertices
    fset = set(K.facets)
    count = 0
    for perm in permutations(verts):
        mapping = dict(zip(verts, perm))
        if all(tuple(sorted(mapping[v] for v in f)) in fset for f in K.facets):
            count += 1
    return count


def brute_2spheres(n):
    """Every subset of triangles on n labels that closes to a 2-sphere."""
    triangles = list(combinations(range(1, n + 1), 3))
    size = 2 * n - 4
    found = set()
    for sub in combinations(triangles, size):
        usage = Counter()
        for t in sub:
            for e in combinations(t, 2):
                usage[e] += 1
        if any(c != 2 for c in usage.values()):
            continue
        if len({v for t in sub for v in t}) != n:
            continue
        K = Complex(sub)
        if is_sphere2(K):
            found.add(canonical_facets(K.facets))
    return sorted(found)


def brute_3manifolds_subsets(n):
    """Every facet subset on n labels closing to a 3-manifold (n <= 6)."""
    tets = list(combinations(range(1, n + 1), 4))
    found = set()
    hi = n * (n - 1) // 2 - n
    for size in range(1, hi + 1):
        for sub in combinations(tets, size):
            usage = Counter()
            for f in sub:
                for t in combinations(f, 3):
                    usage[t] += 1
            if any(c != 2 for c in usage.values()):
                continue
            if len({v for f in sub for v in f}) != n:
                continue
            K = Complex(sub)
            if is_closed_3manifold(K):
                found.add(canonical_facets(K.facets))
    return sorted(found)


def closure_3manifolds(n):
    """Closed 3-manifolds on exactly n labels, grown from the facet (1,2,3,4).

    Independent generator for the oracle at n = 7: closes the smallest open
    triangle by every vertex, pruning only on triangles used more than twice.
    Every isomorphism class has a labeling containing (1,2,3,4), so scanning
    those complexes and deduplicating by canonical form is exhaustive.
    """
    found = set()
    labels = range(1, n + 1)
    usage = Counter()
    facets = set()

    def triangles(f):
        return combinations(f, 3)

    def close(t):
        for x in labels:
            if x in t:
                continue
            f = tuple(sorted(t + (x,)))
            if f in facets:
                continue
            if any(usage[u] >= 2 for u in triangles(f) if u != t):
                continue
            facets.add(f)
            for u in triangles(f):
                usage[u] += 1
            open_tris = sorted(u for u, c in usage.items() if c == 1)
            if open_tris:
                close(open_tris[0])
            else:
                if len({v for g in facets for v in g}) == n:
                    K = Complex(sorted(facets))
                    if is_closed_3manifold(K):
                        found.add(canonical_facets(K.facets))
            for u in triangles(f):
                usage[u] -= 1
            facets.discard(f)

    start = (1, 2, 3, 4)
    facets.add(start)
    for u in triangles(start):
        usage[u] += 1
    close((1, 2, 3))
    return sorted(found)
