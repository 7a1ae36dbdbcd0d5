"""Pure simplicial complexes over small positive integer vertex labels.

Everything in this package passes around :class:`Complex` values: immutable,
lexicographically sorted facet lists.  Faces are generated on demand from the
facets; at the sizes handled here (dimension <= 4, at most a few dozen facets)
that is cheaper than keeping a face lattice around.
"""

from __future__ import annotations

from collections import Counter, deque
from itertools import combinations


class Complex:
    """A pure simplicial complex given by its maximal faces.

    Vertex labels are positive integers and need not be contiguous: links and
    star deletions keep the labels of the parent complex.  ``vertices`` holds
    exactly the labels that occur in some facet.  Instances are treated as
    immutable values; all operations on them are pure functions.
    """

    __slots__ = ("facets", "dim", "vertices")

    def __init__(self, facets, dim=None):
        seen = set()
        for f in facets:
            t = tuple(sorted(f))
            if not t:
                raise ValueError("empty facet")
            if len(set(t)) != len(t):
                raise ValueError(f"facet with a repeated vertex: {f!r}")
            if not all(isinstance(v, int) for v in t) or t[0] < 1:
                raise ValueError(f"vertex labels must be positive integers: {f!r}")
            seen.add(t)
        facs = tuple(sorted(seen))
        if facs:
            width = len(facs[0])
            if any(len(f) != width for f in facs):
                raise ValueError("not a pure complex: facets of mixed size")
            if dim is not None and dim != width - 1:
                raise ValueError(f"dim={dim} does not match facets of size {width}")
            self.dim = width - 1
        else:
            self.dim = -1 if dim is None else dim
        self.facets = facs
        vs = set()
        for f in facs:
            vs.update(f)
        self.vertices = tuple(sorted(vs))

    @property
    def n(self):
        """Number of vertices actually used."""
        return len(self.vertices)

    def faces(self, p):
        """All p-dimensional faces, as sorted vertex tuples."""
        out = set()
        for f in self.facets:
            out.update(combinations(f, p + 1))
        return out

    def f_vector(self):
        """Face counts (f0, ..., f_dim)."""
        if not self.facets:
            return ()
        counts = [set() for _ in range(self.dim + 1)]
        for f in self.facets:
            for p in range(self.dim + 1):
                counts[p].update(combinations(f, p + 1))
        return tuple(len(c) for c in counts)

    def has_face(self, face):
        fs = frozenset(face)
        return any(fs <= frozenset(f) for f in self.facets)

    def relabeled(self, mapping):
        """Apply a vertex relabeling given as a dict old -> new."""
        return Complex([tuple(mapping[v] for v in f) for f in self.facets], dim=self.dim)

    def compacted(self):
        """Relabel vertices to 1..n preserving their order."""
        mapping = {v: i + 1 for i, v in enumerate(self.vertices)}
        return Complex([tuple(mapping[v] for v in f) for f in self.facets], dim=self.dim)

    def __eq__(self, other):
        return isinstance(other, Complex) and self.facets == other.facets and self.dim == other.dim

    def __hash__(self):
        return hash((self.dim, self.facets))

    def __len__(self):
        return len(self.facets)

    def __repr__(self):
        return f"Complex(dim={self.dim}, n={self.n}, facets={len(self.facets)})"


def simplex(d):
    """The d-simplex on vertices 1..d+1 (a single facet)."""
    return Complex([tuple(range(1, d + 2))])


def simplex_boundary(d):
    """The boundary of the d-simplex: all d-subsets of 1..d+1."""
    return Complex(combinations(range(1, d + 2), d))


def is_simplex_boundary(K):
    """True iff K is the boundary complex of a simplex (of K's dimension)."""
    d = K.dim
    return K.n == d + 2 and len(K.facets) == d + 2


def f_vector(K):
    """Face-count vector of K, low dimension first."""
    return K.f_vector()


def closed_fvector_ok(fv):
    """Check the linear relations every closed 3-manifold f-vector satisfies."""
    if len(fv) != 4:
        return False
    f0, f1, f2, f3 = fv
    return f2 == 2 * f1 - 2 * f0 and f3 == f1 - f0 and f0 - f1 + f2 - f3 == 0


def link(K, face):
    """The link of ``face`` in K: faces disjoint from it whose join lies in K."""
    face = tuple(sorted(face))
    fs = frozenset(face)
    cof = [tuple(v for v in f if v not in fs) for f in K.facets if fs <= frozenset(f)]
    if not cof:
        raise ValueError(f"{face} is not a face of the complex")
    cof = [c for c in cof if c]
    return Complex(cof, dim=K.dim - len(face))


def star(K, v):
    """All facets of K containing the vertex v."""
    fac = [f for f in K.facets if v in f]
    if not fac:
        raise ValueError(f"vertex {v} does not occur in the complex")
    return Complex(fac, dim=K.dim)


def delete_star(K, v):
    """All facets of K not containing the vertex v; labels are preserved."""
    if not any(v in f for f in K.facets):
        raise ValueError(f"vertex {v} does not occur in the complex")
    return Complex([f for f in K.facets if v not in f], dim=K.dim)


def _ridge_usage(K):
    usage = Counter()
    for f in K.facets:
        d = len(f)
        for i in range(d):
            usage[f[:i] + f[i + 1:]] += 1
    return usage


def boundary_complex(K):
    """The (d-1)-faces lying in exactly one facet of K.

    Raises if some (d-1)-face lies in three or more facets.
    """
    usage = _ridge_usage(K)
    if any(c > 2 for c in usage.values()):
        raise ValueError("a face of codimension one lies in three or more facets")
    return Complex([r for r, c in usage.items() if c == 1], dim=K.dim - 1)


def _facet_graph_connected(K):
    """Connectivity of the facet adjacency graph (facets sharing a ridge)."""
    m = len(K.facets)
    if m == 0:
        return False
    by_ridge = {}
    for i, f in enumerate(K.facets):
        for j in range(len(f)):
            by_ridge.setdefault(f[:j] + f[j + 1:], []).append(i)
    seen = {0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        f = K.facets[i]
        for j in range(len(f)):
            for other in by_ridge[f[:j] + f[j + 1:]]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    return len(seen) == m


def _skeleton_connected(K):
    if K.n == 0:
        return False
    adj = {v: set() for v in K.vertices}
    for f in K.facets:
        for a, b in combinations(f, 2):
            adj[a].add(b)
            adj[b].add(a)
    start = K.vertices[0]
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == K.n


def _require_dim3(K):
    if K.dim != 3 or not K.facets:
        raise ValueError("expected a nonempty pure 3-dimensional complex")


def is_closed_pseudomanifold3(K):
    """Every triangle in exactly two facets, and facet graph connected."""
    _require_dim3(K)
    usage = _ridge_usage(K)
    if any(c != 2 for c in usage.values()):
        return False
    return _facet_graph_connected(K)


def is_sphere2(K):
    """Combinatorial test for triangulated 2-spheres."""
    if K.dim != 2:
        raise ValueError("expected a 2-dimensional complex")
    if not K.facets:
        return False
    usage = _ridge_usage(K)
    if any(c != 2 for c in usage.values()):
        return False
    for v in K.vertices:
        if not _vertex_link_single_cycle(K, v):
            return False
    if not _skeleton_connected(K):
        return False
    f0, f1, f2 = K.f_vector()
    return f0 - f1 + f2 == 2


def _vertex_link_graph(K, v):
    """Edges of the link of v, for a 2-complex: pairs (a, b) per triangle (v, a, b)."""
    edges = []
    for f in K.facets:
        if v in f:
            edges.append(tuple(w for w in f if w != v))
    return edges


def _vertex_link_single_cycle(K, v):
    edges = _vertex_link_graph(K, v)
    deg = Counter()
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if any(d != 2 for d in deg.values()):
        return False
    if len(edges) != len(deg):
        return False
    return _graph_connected(deg.keys(), edges)


def _vertex_link_single_path(K, v):
    edges = _vertex_link_graph(K, v)
    deg = Counter()
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if any(d > 2 for d in deg.values()):
        return False
    ends = sum(1 for d in deg.values() if d == 1)
    if ends != 2 or len(edges) != len(deg) - 1:
        return False
    return _graph_connected(deg.keys(), edges)


def _graph_connected(vertices, edges):
    vertices = list(vertices)
    if not vertices:
        return False
    adj = {v: [] for v in vertices}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    seen = {vertices[0]}
    queue = deque([vertices[0]])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(vertices)


def is_closed_3manifold(K):
    """Closed pseudomanifold whose vertex links are all 2-spheres."""
    _require_dim3(K)
    if not is_closed_pseudomanifold3(K):
        return False
    return all(is_sphere2(link(K, (v,))) for v in K.vertices)


def is_ball2(K):
    """Combinatorial test for triangulated discs."""
    if K.dim != 2 or not K.facets:
        return False
    usage = _ridge_usage(K)
    if any(c > 2 for c in usage.values()):
        return False
    boundary = [e for e, c in usage.items() if c == 1]
    if not boundary:
        return False
    if not _facet_graph_connected(K):
        return False
    for v in K.vertices:
        if not (_vertex_link_single_cycle(K, v) or _vertex_link_single_path(K, v)):
            return False
    deg = Counter()
    for a, b in boundary:
        deg[a] += 1
        deg[b] += 1
    if any(d != 2 for d in deg.values()) or not _graph_connected(deg.keys(), boundary):
        return False
    f0, f1, f2 = K.f_vector()
    return f0 - f1 + f2 == 1


def is_sphere1(K):
    """Single cycle."""
    if K.dim != 1 or not K.facets:
        return False
    deg = Counter()
    for a, b in K.facets:
        deg[a] += 1
        deg[b] += 1
    if any(d != 2 for d in deg.values()) or len(K.facets) != len(deg):
        return False
    return _graph_connected(deg.keys(), K.facets)


def is_ball1(K):
    """Single path."""
    if K.dim != 1 or not K.facets:
        return False
    deg = Counter()
    for a, b in K.facets:
        deg[a] += 1
        deg[b] += 1
    if any(d > 2 for d in deg.values()):
        return False
    if sum(1 for d in deg.values() if d == 1) != 2 or len(K.facets) != len(deg) - 1:
        return False
    return _graph_connected(deg.keys(), K.facets)


def is_ball3(K):
    """Combinatorial 3-ball test.

    Criterion: connected manifold with boundary, boundary a 2-sphere, and
    trivial reduced homology.  Constructively produced balls (star deletions,
    reverse shellings) always satisfy this; the test is taken as exact at the
    vertex counts handled here.
    """
    _require_dim3(K)
    usage = _ridge_usage(K)
    if any(c > 2 for c in usage.values()):
        return False
    if not _facet_graph_connected(K):
        return False
    for v in K.vertices:
        lk = link(K, (v,))
        if lk.dim != 2:
            return False
        if not (is_sphere2(lk) or is_ball2(lk)):
            return False
    bd = Complex([r for r, c in usage.items() if c == 1], dim=2)
    if not bd.facets or not is_sphere2(bd):
        return False
    from .homology import homology

    prof = homology(K)
    return prof.betti == (1, 0, 0, 0) and all(not t for t in prof.torsion)


def is_orientable(K):
    """Coherent orientability of a closed 3-pseudomanifold.

    Decided by propagating facet orientations across the facet adjacency
    graph and checking consistency.
    """
    if not is_closed_pseudomanifold3(K):
        raise ValueError("input is not a closed 3-pseudomanifold")
    by_ridge = {}
    for i, f in enumerate(K.facets):
        for j in range(len(f)):
            by_ridge.setdefault(f[:j] + f[j + 1:], []).append((i, j))
    sign = {0: 1}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        f = K.facets[i]
        for j in range(len(f)):
            pair = by_ridge[f[:j] + f[j + 1:]]
            for other, oj in pair:
                if other == i:
                    continue
                induced = sign[i] * (-1) ** j
                required = -induced * (-1) ** oj
                if other in sign:
                    if sign[other] != required:
                        return False
                else:
                    sign[other] = required
                    queue.append(other)
    return True
