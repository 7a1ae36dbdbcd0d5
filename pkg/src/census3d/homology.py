"""Integral simplicial homology via Smith normal form, and the
homology-based classifier for the three manifold types that occur at
these vertex counts."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .complexes import Complex


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers and torsion coefficients per dimension 0..dim."""

    betti: tuple
    torsion: tuple  # one tuple of coefficients (each dividing the next) per dim

    def reduced_trivial(self):
        return self.betti[0] == 1 and all(b == 0 for b in self.betti[1:]) and all(
            not t for t in self.torsion
        )


def boundary_matrix(faces_low, faces_high):
    """Matrix of the boundary map from span(faces_high) to span(faces_low).

    Faces are sorted vertex tuples; entry signs follow the usual alternating
    convention on the sorted vertex order.
    """
    index = {f: i for i, f in enumerate(faces_low)}
    rows = [[0] * len(faces_high) for _ in faces_low]
    for j, f in enumerate(faces_high):
        for i in range(len(f)):
            sub = f[:i] + f[i + 1:]
            rows[index[sub]][j] = (-1) ** i
    return rows


def smith_invariants(mat):
    """Invariant factors of an integer matrix (positive, each dividing the next).

    Exact arithmetic on Python integers; pivots are chosen of minimal
    absolute value, which keeps intermediate entries small.
    """
    A = [list(r) for r in mat]
    m = len(A)
    n = len(A[0]) if m else 0
    inv = []
    t = 0
    while t < min(m, n):
        # locate a nonzero entry of minimal absolute value in A[t:, t:]
        pi = pj = -1
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                a = Ai[j]
                if a and (best is None or abs(a) < best):
                    best = abs(a)
                    pi, pj = i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if best is None:
            break
        A[t], A[pi] = A[pi], A[t]
        if pj != t:
            for row in A:
                row[t], row[pj] = row[pj], row[t]
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
        p = A[t][t]
        dirty = False
        for i in range(t + 1, m):
            if A[i][t]:
                q = A[i][t] // p
                if q:
                    Ai, At = A[i], A[t]
                    for j in range(t, n):
                        Ai[j] -= q * At[j]
                if A[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if A[t][j]:
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    dirty = True
        if dirty:
            continue
        # column and row are clear; make the pivot divide the rest
        witness = None
        for i in range(t + 1, m):
            Ai = A[i]
            for j in range(t + 1, n):
                if Ai[j] % p:
                    witness = i
                    break
            if witness is not None:
                break
        if witness is not None:
            At, Aw = A[t], A[witness]
            for j in range(t, n):
                At[j] += Aw[j]
            continue
        inv.append(p)
        t += 1
    return inv


def _all_faces(K):
    faces = [set() for _ in range(K.dim + 1)]
    for f in K.facets:
        for p in range(K.dim + 1):
            faces[p].update(combinations(f, p + 1))
    return [sorted(fs) for fs in faces]


def homology(K: Complex) -> HomologyProfile:
    """Integral homology of K in dimensions 0..dim."""
    if not K.facets:
        raise ValueError("homology of the empty complex")
    faces = _all_faces(K)
    d = K.dim
    invariants = [[] for _ in range(d + 2)]  # invariants[p] for boundary map C_p -> C_{p-1}
    for p in range(1, d + 1):
        invariants[p] = smith_invariants(boundary_matrix(faces[p - 1], faces[p]))
    betti = []
    torsion = []
    for p in range(d + 1):
        rank_p = len(invariants[p]) if p >= 1 else 0
        rank_up = len(invariants[p + 1]) if p + 1 <= d else 0
        betti.append(len(faces[p]) - rank_p - rank_up)
        tor = tuple(x for x in (invariants[p + 1] if p + 1 <= d else []) if x > 1)
        torsion.append(tor)
    return HomologyProfile(tuple(betti), tuple(torsion))


S3 = "S3"
S2XS1 = "S2xS1"
S2TWISTS1 = "S2twistS1"
OTHER = "other"


def classify(K: Complex) -> str:
    """Topological type of a closed 3-manifold with at most 10 vertices.

    At these vertex counts the homology profile separates the three types
    that can occur; anything else is reported as ``other`` and signals a bug
    in the enumeration.
    """
    if K.dim != 3:
        raise ValueError("expected a 3-dimensional complex")
    prof = homology(K)
    flat = all(not t for t in prof.torsion)
    if prof.betti == (1, 0, 0, 1) and flat:
        return S3
    if prof.betti == (1, 1, 1, 1) and flat:
        return S2XS1
    if prof.betti == (1, 1, 0, 0) and prof.torsion == ((), (), (2,), ()):
        return S2TWISTS1
    return OTHER


_GAMMA = {S3: -10, S2XS1: 0, S2TWISTS1: 0}


def walkup_check(K: Complex, topo_type: str) -> bool:
    """Edge-count lower bound f1 >= 4*n + gamma for the given type."""
    if topo_type not in _GAMMA:
        raise ValueError(f"no edge bound known for type {topo_type!r}")
    fv = K.f_vector()
    return fv[1] >= 4 * fv[0] + _GAMMA[topo_type]


def determinant_divisors_invariants(mat):
    """Invariant factors computed from gcds of k x k minors.

    Exponential in the matrix size; used as an independent oracle for
    :func:`smith_invariants` on small matrices.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    prev = 1
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, _det([[mat[i][j] for j in cols] for i in rows]))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def _det(sq):
    k = len(sq)
    if k == 1:
        return sq[0][0]
    total = 0
    for j in range(k):
        if sq[0][j]:
            minor = [row[:j] + row[j + 1:] for row in sq[1:]]
            total += (-1) ** j * sq[0][j] * _det(minor)
    return total
