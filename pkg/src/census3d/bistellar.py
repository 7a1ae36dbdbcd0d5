"""Local moves on triangulated closed 3-manifolds and a randomized
simplifier used to certify 3-spheres.

The four move kinds exchange the star of a face for the complementary
configuration: a facet is split four ways around a new vertex (1-4), two
facets sharing a triangle become three around a new edge (2-3), and the two
inverse moves (3-2, 4-1).  All moves preserve the homeomorphism type, so a
complex that reduces to the boundary of the 4-simplex is certified to be a
topological 3-sphere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from random import Random

from .complexes import Complex, is_simplex_boundary


@dataclass(frozen=True)
class BistellarMove:
    kind: str  # "1-4", "2-3", "3-2" or "4-1"
    pivot: tuple  # facet, triangle, edge or single vertex respectively


def _cofacets(K):
    by_face = {}
    for f in K.facets:
        for r in range(1, len(f)):
            for sub in combinations(f, r):
                by_face.setdefault(sub, []).append(f)
    return by_face


def applicable_moves(K: Complex):
    """All legal moves on a closed 3-manifold.

    Legality means the replaced star is the standard one and the replacement
    introduces no face that already exists.
    """
    if K.dim != 3:
        raise ValueError("expected a 3-dimensional complex")
    by_face = _cofacets(K)
    faces = set(by_face)
    moves = [BistellarMove("1-4", f) for f in K.facets]
    for tri in (f for f in faces if len(f) == 3):
        cof = by_face[tri]
        if len(cof) == 2:
            a, b = (next(v for v in c if v not in tri) for c in cof)
            if (min(a, b), max(a, b)) not in faces:
                moves.append(BistellarMove("2-3", tri))
    for edge in (f for f in faces if len(f) == 2):
        cof = by_face[edge]
        if len(cof) == 3:
            opp = tuple(sorted({v for c in cof for v in c if v not in edge}))
            if len(opp) == 3 and opp not in faces:
                moves.append(BistellarMove("3-2", edge))
    for v in K.vertices:
        cof = by_face[(v,)]
        if len(cof) == 4:
            opp = tuple(sorted({w for c in cof for w in c if w != v}))
            if len(opp) == 4 and opp not in K.facets:
                moves.append(BistellarMove("4-1", (v,)))
    return moves


def apply_move(K: Complex, move: BistellarMove) -> Complex:
    pivot = tuple(sorted(move.pivot))
    ps = set(pivot)
    cof = [f for f in K.facets if ps <= set(f)]
    rest = [f for f in K.facets if not ps <= set(f)]
    if move.kind == "1-4":
        (f,) = cof
        w = max(K.vertices) + 1
        new = [tuple(sorted(set(f) - {v} | {w})) for v in f]
    elif move.kind == "2-3":
        a, b = sorted(next(v for v in c if v not in ps) for c in cof)
        new = [tuple(sorted(set(e) | {a, b})) for e in combinations(pivot, 2)]
    elif move.kind == "3-2":
        opp = tuple(sorted({v for c in cof for v in c if v not in ps}))
        new = [tuple(sorted(set(opp) | {u})) for u in pivot]
    elif move.kind == "4-1":
        new = [tuple(sorted({w for c in cof for w in c if w not in ps}))]
    else:
        raise ValueError(f"unknown move kind {move.kind!r}")
    return Complex(rest + new, dim=3)


def random_moves(K: Complex, steps: int, seed: int) -> Complex:
    """Apply ``steps`` uniformly random legal moves (reproducible by seed)."""
    rng = Random(seed)
    for _ in range(steps):
        K = apply_move(K, rng.choice(applicable_moves(K)))
    return K


def reduce(K: Complex, budget: int = 10000, seed: int = 0,
           plateau: float = 0.3, worsen: float = 0.05) -> Complex:
    """Randomized greedy simplification of a closed 3-manifold.

    Facet-reducing moves (4-1, then 3-2) are always taken when available;
    otherwise a 2-3 move is accepted with probability ``plateau`` and a 1-4
    move with probability ``worsen`` to escape local minima.  Returns the
    best complex reached (lexicographically smallest f-vector) within the
    move budget.  A return value equal to the boundary of the 4-simplex
    certifies that K is a 3-sphere; anything else certifies nothing.
    """
    rng = Random(seed)
    cur = best = K
    for _ in range(budget):
        if is_simplex_boundary(cur):
            return cur
        moves = applicable_moves(cur)
        down4 = [m for m in moves if m.kind == "4-1"]
        down3 = [m for m in moves if m.kind == "3-2"]
        if down4:
            move = rng.choice(down4)
        elif down3:
            move = rng.choice(down3)
        else:
            up2 = [m for m in moves if m.kind == "2-3"]
            up1 = [m for m in moves if m.kind == "1-4"]
            r = rng.random()
            if up2 and r < plateau:
                move = rng.choice(up2)
            elif up1 and r < plateau + worsen:
                move = rng.choice(up1)
            elif up2:
                move = rng.choice(up2)
            elif up1:
                move = rng.choice(up1)
            else:
                break
        cur = apply_move(cur, move)
        if cur.f_vector() < best.f_vector():
            best = cur
    return best


def certifies_sphere(K: Complex) -> bool:
    """True iff K is (combinatorially) the boundary of the 4-simplex."""
    return K.dim == 3 and is_simplex_boundary(K)
