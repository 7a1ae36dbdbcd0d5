"""Shellability, vertex-decomposability and constructibility testers.

Shellability is decided by reverse shelling: repeatedly removing a *free*
facet (one meeting the current boundary in a disc made of some but not all
of its ridges, with no extra boundary contact), memoizing on the set of
remaining facets.  A sphere is peeled after first removing an arbitrary
facet, which then closes the shelling.  Witnesses are replayed by an
independent checker that implements the textbook definition directly.

Vertex-decomposability follows the recursive definition: some vertex star
can be removed leaving a vertex-decomposable ball, with the vertex link
itself vertex-decomposable (a sphere requires a sphere link; a ball allows
either).  The recursion is memoized on canonical forms across calls.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations

from .canonical import canonical_facets
from .complexes import (
    Complex,
    delete_star,
    is_ball1,
    is_ball2,
    is_ball3,
    is_closed_3manifold,
    is_sphere1,
    is_sphere2,
    link,
)
from .homology import S3, classify

_VD_CACHE = {}
_BALL3_CACHE = {}
_SPHERE3_CACHE = {}


def clear_caches():
    _VD_CACHE.clear()
    _BALL3_CACHE.clear()
    _SPHERE3_CACHE.clear()


def _subfaces(face):
    out = []
    for r in range(1, len(face)):
        out.extend(combinations(face, r))
    return out


class _PeelState:
    """Ridge usage and boundary bookkeeping for reverse shellings."""

    def __init__(self, facets):
        self.facets = list(facets)
        self.width = len(self.facets[0])
        self.ridges = [tuple(combinations(f, self.width - 1)) for f in self.facets]
        self.ridge_use = Counter()
        self.bdry = Counter()  # face -> number of current boundary ridges containing it
        self.active = set(range(len(self.facets)))
        for rs in self.ridges:
            for r in rs:
                self.ridge_use[r] += 1
        for r, c in self.ridge_use.items():
            if c == 1:
                self._bdry_shift(r, 1)

    def _bdry_shift(self, ridge, delta):
        self.bdry[ridge] += delta
        for f in _subfaces(ridge):
            self.bdry[f] += delta

    def boundary_ridges(self, i):
        return [r for r in self.ridges[i] if self.ridge_use[r] == 1]

    def free(self, i):
        """Removal of facet i keeps the complex a ball.

        The boundary ridges of facet i must form a nonempty proper subset of
        its ridges, and no other face of the facet may lie on the boundary
        (a pinch).
        """
        bd = self.boundary_ridges(i)
        if not 1 <= len(bd) < self.width:
            return False
        allowed = set(bd)
        for r in bd:
            allowed.update(_subfaces(r))
        bdry = self.bdry
        for f in _subfaces(self.facets[i]):
            if f not in allowed and bdry.get(f):
                return False
        return True

    def remove(self, i):
        self.active.discard(i)
        for r in self.ridges[i]:
            c = self.ridge_use[r] = self.ridge_use[r] - 1
            if c == 1:
                self._bdry_shift(r, 1)
            else:
                self._bdry_shift(r, -1)

    def restore(self, i):
        self.active.add(i)
        for r in self.ridges[i]:
            c = self.ridge_use[r] = self.ridge_use[r] + 1
            if c == 2:
                self._bdry_shift(r, -1)
            else:
                self._bdry_shift(r, 1)


def free_facets(B: Complex):
    """Facets whose removal leaves a ball."""
    if len(B.facets) < 2:
        raise ValueError("free facets are undefined for a single-facet complex")
    state = _PeelState(B.facets)
    return [B.facets[i] for i in range(len(B.facets)) if state.free(i)]


def _peel_search(facets, skip=None, dead=None):
    """Removal order peeling one free facet at a time, or None."""
    state = _PeelState(facets)
    if dead is None:
        dead = set()
    remaining = (1 << len(facets)) - 1
    prefix = []
    if skip is not None:
        state.remove(skip)
        remaining ^= 1 << skip
        prefix = [skip]
    order = []

    def peel(mask, count):
        if count == 1:
            order.append(mask.bit_length() - 1)
            return True
        if mask in dead:
            return False
        m = mask
        while m:
            b = m & (-m)
            m ^= b
            i = b.bit_length() - 1
            if state.free(i):
                state.remove(i)
                order.append(i)
                if peel(mask ^ b, count - 1):
                    return True
                order.pop()
                state.restore(i)
        dead.add(mask)
        return False

    count = remaining.bit_count()
    if count == 0 or peel(remaining, count):
        return prefix + order
    return None


def is_shellable(K: Complex):
    """A shelling witness (facet order) if one exists, else None.

    Supports balls and spheres of dimension 2 and 3 and cones one dimension
    up (dimension 4 balls).
    """
    if K.dim not in (2, 3, 4):
        raise ValueError("shellability supported in dimensions 2..4 only")
    facets = K.facets
    if len(facets) == 1:
        return (facets[0],)
    use = Counter()
    for f in facets:
        for r in combinations(f, len(f) - 1):
            use[r] += 1
    closed = all(c == 2 for c in use.values())
    if closed and K.dim == 4:
        raise ValueError("closed 4-dimensional complexes are unsupported")
    if closed:
        dead = set()
        for start in range(len(facets)):
            order = _peel_search(facets, skip=start, dead=dead)
            if order is not None:
                return tuple(facets[i] for i in reversed(order))
        return None
    order = _peel_search(facets)
    if order is None:
        return None
    return tuple(facets[i] for i in reversed(order))


def verify_shelling(K: Complex, order) -> bool:
    """Replay a facet order against the shelling condition.

    Independent of the search: builds the union face set step by step and
    checks that each facet meets it in a nonempty pure union of its own
    ridges (the last facet of a sphere may attach along its full boundary).
    """
    order = tuple(tuple(f) for f in order)
    if sorted(order) != list(K.facets):
        return False
    width = K.dim + 1
    use = Counter()
    for f in K.facets:
        for r in combinations(f, width - 1):
            use[r] += 1
    closed = all(c == 2 for c in use.values())
    union_faces = set()
    for j, F in enumerate(order):
        faces_F = _subfaces(F)
        if j:
            shared = [r for r in combinations(F, width - 1) if r in union_faces]
            if not shared:
                return False
            if len(shared) == width and not (closed and j == len(order) - 1):
                return False
            allowed = set(shared)
            for r in shared:
                allowed.update(_subfaces(r))
            for f in faces_F:
                if f in union_faces and f not in allowed:
                    return False
        union_faces.update(faces_F)
        union_faces.add(F)
    return True


def is_extendably_shellable(B: Complex) -> bool:
    """Every partial shelling of the ball B extends to a full shelling.

    Decided over the reachable partial-shelling states (sets of placed
    facets), memoizing completability.
    """
    facets = B.facets
    m = len(facets)
    if m == 1:
        return True
    width = B.dim + 1
    cover = {}
    for i, f in enumerate(facets):
        for sub in _subfaces(f):
            cover[sub] = cover.get(sub, 0) | (1 << i)

    def valid_step(mask, i):
        F = facets[i]
        shared = [r for r in combinations(F, width - 1) if cover[r] & mask]
        if not shared or len(shared) == width:
            return False
        allowed = set(shared)
        for r in shared:
            allowed.update(_subfaces(r))
        for f in _subfaces(F):
            if f not in allowed and cover[f] & mask:
                return False
        return True

    full = (1 << m) - 1
    can = {full: True}

    def can_complete(mask):
        got = can.get(mask)
        if got is None:
            got = can[mask] = any(
                valid_step(mask, i) and can_complete(mask | (1 << i))
                for i in range(m) if not mask >> i & 1
            )
        return got

    reachable = {1 << i for i in range(m)}
    queue = list(reachable)
    while queue:
        mask = queue.pop()
        for i in range(m):
            if not mask >> i & 1 and valid_step(mask, i):
                nxt = mask | (1 << i)
                if nxt not in reachable:
                    reachable.add(nxt)
                    queue.append(nxt)
    return all(can_complete(mask) for mask in reachable)


def _is_ball(X: Complex, d: int) -> bool:
    if X.dim != d or not X.facets:
        return False
    if d == 0:
        return len(X.facets) == 1
    if d == 1:
        return is_ball1(X)
    if d == 2:
        return is_ball2(X)
    if d == 3:
        key = canonical_facets(X.facets)
        got = _BALL3_CACHE.get(key)
        if got is None:
            got = _BALL3_CACHE[key] = is_ball3(Complex(key))
        return got
    if d == 4:
        # only cones over 3-complexes occur here; peel a cone apex
        apex = set(X.facets[0])
        for f in X.facets[1:]:
            apex &= set(f)
        for a in sorted(apex):
            base = Complex([tuple(v for v in f if v != a) for f in X.facets], dim=3)
            if _is_ball(base, 3) or _is_sphere(base, 3):
                return True
        if not apex:
            raise ValueError("4-dimensional ball test supports cones only")
        return False
    raise ValueError(f"no ball test for dimension {d}")


def _is_sphere(X: Complex, d: int) -> bool:
    if X.dim != d or not X.facets:
        return False
    if d == 0:
        return len(X.facets) == 2
    if d == 1:
        return is_sphere1(X)
    if d == 2:
        return is_sphere2(X)
    if d == 3:
        key = canonical_facets(X.facets)
        got = _SPHERE3_CACHE.get(key)
        if got is None:
            got = _SPHERE3_CACHE[key] = bool(
                is_closed_3manifold(Complex(key)) and classify(Complex(key)) == S3)
        return got
    raise ValueError(f"no sphere test for dimension {d}")


def is_vertex_decomposable(K: Complex) -> bool:
    """Recursive vertex-decomposability for balls and spheres of dim <= 4."""
    d = K.dim
    if not K.facets:
        raise ValueError("vertex-decomposability of the empty complex")
    if len(K.facets) == 1:
        return True
    if d == 0:
        return len(K.facets) <= 2
    key = canonical_facets(K.facets)
    got = _VD_CACHE.get(key)
    if got is not None:
        return got
    use = Counter()
    for f in K.facets:
        for r in combinations(f, d):
            use[r] += 1
    closed = all(c == 2 for c in use.values())
    result = False
    for v in K.vertices:
        rest = delete_star(K, v)
        if rest.dim != d:
            continue
        lk = link(K, (v,))
        if closed:
            if not _is_sphere(lk, d - 1):
                continue
        elif not (_is_sphere(lk, d - 1) or _is_ball(lk, d - 1)):
            continue
        if not _is_ball(rest, d):
            continue
        if is_vertex_decomposable(rest) and is_vertex_decomposable(lk):
            result = True
            break
    _VD_CACHE[key] = result
    return result


def _facet_adjacency(facets):
    width = len(facets[0])
    by_ridge = {}
    for i, f in enumerate(facets):
        for r in combinations(f, width - 1):
            by_ridge.setdefault(r, []).append(i)
    adj = [0] * len(facets)
    for members in by_ridge.values():
        for i in members:
            for j in members:
                if i != j:
                    adj[i] |= 1 << j
    return adj, by_ridge


def _connected_mask(mask, adj):
    start = mask & (-mask)
    seen = start
    queue = [start.bit_length() - 1]
    while queue:
        i = queue.pop()
        new = adj[i] & mask & ~seen
        while new:
            b = new & (-new)
            new ^= b
            seen |= b
            queue.append(b.bit_length() - 1)
    return seen == mask


def constructibility_certificate(B: Complex):
    """A constructibility witness for a 3-ball, or None.

    A shellable ball is constructible outright.  Otherwise facet
    bipartitions are searched, smallest interface first, for a split into
    two shellable balls meeting in a disc; a None result does not prove
    non-constructibility.
    """
    witness = is_shellable(B)
    if witness is not None:
        return ("shellable", witness)
    facets = B.facets
    m = len(facets)
    adj, by_ridge = _facet_adjacency(facets)
    interior = [tuple(v) for v in by_ridge.values() if len(v) == 2]
    faces_of = [set(_subfaces(f)) for f in facets]

    candidates = []
    for half in range(1 << (m - 1)):
        mask1 = (half << 1) | 1
        mask2 = ((1 << m) - 1) ^ mask1
        if not mask2:
            continue
        if not _connected_mask(mask1, adj) or not _connected_mask(mask2, adj):
            continue
        crossing = sum(1 for i, j in interior if (mask1 >> i & 1) != (mask1 >> j & 1))
        candidates.append((crossing, mask1, mask2))
    candidates.sort()

    for _, mask1, mask2 in candidates:
        part1 = [facets[i] for i in range(m) if mask1 >> i & 1]
        part2 = [facets[i] for i in range(m) if mask2 >> i & 1]
        faces1 = set()
        faces2 = set()
        for i in range(m):
            (faces1 if mask1 >> i & 1 else faces2).update(faces_of[i])
        inter = faces1 & faces2
        tris = [f for f in inter if len(f) == 3]
        if not tris:
            continue
        allowed = set(tris)
        for t in tris:
            allowed.update(_subfaces(t))
        if any(f not in allowed for f in inter):
            continue
        interface = Complex(tris, dim=2)
        if not is_ball2(interface):
            continue
        K1, K2 = Complex(part1, dim=3), Complex(part2, dim=3)
        if not (_is_ball(K1, 3) and _is_ball(K2, 3)):
            continue
        w1 = is_shellable(K1)
        if w1 is None:
            continue
        w2 = is_shellable(K2)
        if w2 is None:
            continue
        return ("split", K1, K2, w1, w2, interface)
    return None


def nonshellable_census(balls, shellable_flags=None):
    """Summary of the non-shellable members of a ball census.

    Returns a dict with the count, the strongly non-shellable count (no free
    facet at all), the facet-count histogram and the specimen with the
    fewest facets.
    """
    if shellable_flags is None:
        shellable_flags = [is_shellable(B) is not None for B in balls]
    bad = [B for B, ok in zip(balls, shellable_flags) if not ok]
    strong = [B for B in bad if not free_facets(B)]
    histogram = Counter(len(B.facets) for B in bad)
    specimen = min(bad, key=lambda B: (len(B.facets), B.facets), default=None)
    return {
        "count": len(bad),
        "strongly_nonshellable": len(strong),
        "facet_counts": dict(sorted(histogram.items())),
        "min_specimen": specimen,
        "min_specimen_fvector": specimen.f_vector() if specimen else None,
    }
