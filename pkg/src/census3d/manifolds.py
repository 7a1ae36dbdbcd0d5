"""Isomorph-free backtracking enumeration of triangulated closed manifolds.

One engine serves two dimensions.  A run is seeded with the star of vertex 1,
the cone over a catalog link (a 2-sphere for the 3-dimensional enumeration, a
cycle one dimension down).  The search then repeatedly closes the
lexicographically smallest open ridge (a triangle contained in exactly one
chosen facet) with every admissible vertex, backtracking on violations.

Seed links are processed in decreasing size k, and during a run every vertex
degree is capped at k.  A completed complex is emitted only when no vertex
has a link that comes earlier in the catalog than the seed, so each
isomorphism class is owned by exactly one seed; a global canonical-form store
double-checks that no class is ever produced by two different seeds.

Vertex sets are manipulated as bitmasks (labels fit in well under 16 bits
here); facet order is the lexicographic order of the sorted vertex tuples.
"""

from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .canonical import GroupFingerprint, automorphism_group, canonical_facets
from .complexes import (
    Complex,
    closed_fvector_ok,
    is_closed_3manifold,
    is_sphere2,
)
from .homology import classify


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; results cannot be trusted."""


class CheckpointMismatch(RuntimeError):
    """A checkpoint file does not belong to the requested run."""


def _mask(face):
    m = 0
    for v in face:
        m |= 1 << v
    return m


def _tuple_of(mask):
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


class PartialComplex:
    """Mutable search state: chosen facets plus ridge usage bookkeeping.

    ``add`` validates the pruning rules and applies the facet (undoing it
    again if a vertex link closes up into something other than a sphere);
    ``pop`` reverses the most recent successful ``add``.
    """

    __slots__ = (
        "n", "dim", "s", "k", "cap", "usage", "open_ridges", "adj", "openc",
        "vfacets", "present", "facets", "max_used", "trail", "rank",
        "fbits", "fridges", "rbits",
    )

    def __init__(self, n, dim, link_bound, seed_facets):
        self.n = n
        self.dim = dim
        self.s = dim + 1
        self.k = link_bound
        # f_dim of a closed manifold on n vertices is forced linearly by n
        # and the edge count, which is at most C(n, 2)
        self.cap = n * (n - 1) // 2 - n if dim == 3 else 2 * n - 4
        self.usage = bytearray(1 << (n + 1))
        self.open_ridges = set()
        self.adj = [0] * (n + 1)
        self.openc = [0] * (n + 1)
        self.vfacets = [[] for _ in range(n + 1)]
        self.present = set()
        self.facets = []
        self.max_used = 0
        self.trail = []
        self.rank = [0] * (1 << (n + 1))
        self.rbits = {}
        for r, face in enumerate(sorted(combinations(range(1, n + 1), self.s - 1))):
            mask = _mask(face)
            self.rank[mask] = r
            self.rbits[mask] = face
        self.fbits = {}
        self.fridges = {}
        for face in combinations(range(1, n + 1), self.s):
            mask = _mask(face)
            self.fbits[mask] = face
            self.fridges[mask] = tuple(mask ^ (1 << v) for v in face)
        for f in seed_facets:
            if not self.add(_mask(f)):
                raise InvariantViolation(f"seed facet rejected: {f}")

    def can_add(self, m):
        """Pruning rules for a candidate facet mask.

        Rejects when the facet is already present, a ridge would exceed two
        cofacets, a vertex with a completed link would be touched, a vertex
        degree would exceed the seed link size, or the facet count would
        exceed what the f-vector relations allow.
        """
        if len(self.facets) >= self.cap or m in self.present:
            return False
        usage = self.usage
        for r in self.fridges[m]:
            if usage[r] >= 2:
                return False
        adj = self.adj
        openc = self.openc
        k = self.k
        for v in self.fbits[m]:
            a = adj[v]
            if a:
                if openc[v] == 0:
                    return False
                if (a | (m ^ (1 << v))).bit_count() > k:
                    return False
        return True

    def add(self, m):
        # validation inlined from can_add to keep the hot path flat
        if len(self.facets) >= self.cap or m in self.present:
            return False
        usage = self.usage
        fridges = self.fridges[m]
        for r in fridges:
            if usage[r] >= 2:
                return False
        adj = self.adj
        openc = self.openc
        k = self.k
        bits = self.fbits[m]
        for v in bits:
            a = adj[v]
            if a:
                if openc[v] == 0:
                    return False
                if (a | (m ^ (1 << v))).bit_count() > k:
                    return False
        # apply
        open_ridges = self.open_ridges
        rbits = self.rbits
        vfacets = self.vfacets
        old_adj = []
        for v in bits:
            old_adj.append(adj[v])
            adj[v] |= m ^ (1 << v)
            vfacets[v].append(m)
        old_max = self.max_used
        if bits[-1] > old_max:
            self.max_used = bits[-1]
        self.present.add(m)
        self.facets.append(m)
        closed = None
        for r in fridges:
            u = usage[r]
            usage[r] = u + 1
            if u == 0:
                open_ridges.add(r)
                for w in rbits[r]:
                    openc[w] += 1
            else:
                open_ridges.discard(r)
                for w in rbits[r]:
                    openc[w] -= 1
                    if not openc[w]:
                        if closed is None:
                            closed = [w]
                        else:
                            closed.append(w)
        self.trail.append((m, bits, old_adj, old_max))
        if closed is not None:
            for w in closed:
                if not self._closed_link_is_sphere(w):
                    self.pop()
                    return False
        return True

    def pop(self):
        m, bits, old_adj, old_max = self.trail.pop()
        usage = self.usage
        open_ridges = self.open_ridges
        openc = self.openc
        rbits = self.rbits
        self.present.discard(m)
        self.facets.pop()
        self.max_used = old_max
        for v, a in zip(bits, old_adj):
            self.adj[v] = a
            self.vfacets[v].pop()
        for r in self.fridges[m]:
            u = usage[r]
            usage[r] = u - 1
            if u == 1:
                open_ridges.discard(r)
                for w in rbits[r]:
                    openc[w] -= 1
            else:
                open_ridges.add(r)
                for w in rbits[r]:
                    openc[w] += 1

    def _closed_link_is_sphere(self, v):
        # all ridges at v have two cofacets: the link is a closed
        # (s-2)-manifold and must be a sphere (connected, and chi = 2 in the
        # surface case; a connected closed 1-manifold is already a circle)
        vb = 1 << v
        tris = [m ^ vb for m in self.vfacets[v]]
        first = tris[0]
        seen = {first}
        stack = [first]
        share = self.s - 2
        while stack:
            a = stack.pop()
            for b in tris:
                if b not in seen and (a & b).bit_count() == share:
                    seen.add(b)
                    stack.append(b)
        if len(seen) != len(tris):
            return False
        if self.s == 4:
            edges = set()
            for t in tris:
                tt = t
                while tt:
                    b = tt & (-tt)
                    tt ^= b
                    edges.add(t ^ b)
            return self.adj[v].bit_count() - len(edges) + len(tris) == 2
        return True

    def smallest_open(self):
        if not self.open_ridges:
            return None
        return min(self.open_ridges, key=self.rank.__getitem__)

    def closers(self, r):
        hi = self.max_used + 1
        if hi > self.n:
            hi = self.n
        return [r | (1 << x) for x in range(2, hi + 1) if not r & (1 << x)]

    def facet_tuples(self):
        return tuple(sorted(_tuple_of(m) for m in self.facets))


def _dfs(P, sink):
    r = P.smallest_open()
    if r is None:
        sink(P)
        return
    add = P.add
    pop = P.pop
    for m in P.closers(r):
        if add(m):
            _dfs(P, sink)
            pop()


def _seed_star(link_facets):
    """Cone over a canonically labeled link: apex 1, link shifted to 2..k+1."""
    return [(1,) + tuple(v + 1 for v in f) for f in link_facets]


class _LinkCanonCache(dict):
    def get_canonical(self, key):
        got = self.get(key)
        if got is None:
            got = self[key] = canonical_facets(key)
        return got


def _run(n, dim, link_canon, first_move=None, link_cache=None):
    """Execute one seeded run (or one work unit of it); yields canonical forms.

    ``link_canon`` is the canonically labeled seed link facet tuple; the
    degree cap k is its vertex count.
    """
    k = len({v for f in link_canon for v in f})
    cache = link_cache if link_cache is not None else _LinkCanonCache()
    out = []

    def sink(P):
        if P.max_used != n:
            return
        if dim == 3:
            for v in range(2, n + 1):
                if P.adj[v].bit_count() == k:
                    vb = 1 << v
                    lk = tuple(sorted(_tuple_of(m ^ vb) for m in P.vfacets[v]))
                    if cache.get_canonical(lk) < link_canon:
                        return
        facets = P.facet_tuples()
        K = Complex(facets)
        ok = is_closed_3manifold(K) if dim == 3 else is_sphere2(K)
        if not ok:
            raise InvariantViolation("completed complex fails the manifold check")
        out.append(canonical_facets(facets))

    P = PartialComplex(n, dim, k, _seed_star(link_canon))
    if first_move is not None:
        r0 = P.smallest_open()
        m = _mask(first_move)
        if not (r0 is not None and (m & ~r0).bit_count() == 1 and P.add(m)):
            raise InvariantViolation(f"work unit replay failed: {first_move}")
        _dfs(P, sink)
    else:
        _dfs(P, sink)
    return out


def _root_moves(n, dim, link_canon):
    """First extension facets of a seeded run: the work-unit fan-out."""
    k = len({v for f in link_canon for v in f})
    P = PartialComplex(n, dim, k, _seed_star(link_canon))
    r0 = P.smallest_open()
    moves = []
    for m in P.closers(r0):
        if P.add(m):
            moves.append(_tuple_of(m))
            P.pop()
    return moves


# ---------------------------------------------------------------------------
# 2-sphere enumeration (the vertex-link catalog)

def _cycle_canon(m):
    return canonical_facets([(i, i + 1) for i in range(1, m)] + [(1, m)])


@lru_cache(maxsize=None)
def enumerate_2spheres(n):
    """All isomorphism classes of triangulated 2-spheres with n vertices."""
    if not 4 <= n <= 9:
        raise ValueError("2-sphere enumeration supports 4..9 vertices")
    found = {}
    for m in range(n - 1, 2, -1):
        for canon in _run(n, 2, _cycle_canon(m)):
            prev = found.setdefault(canon, m)
            if prev != m:
                raise InvariantViolation("2-sphere produced by two different seeds")
    return [Complex(c) for c in sorted(found)]


@lru_cache(maxsize=None)
def _catalog_cached():
    catalog = []
    for n in range(9, 3, -1):
        catalog.extend(enumerate_2spheres(n))
    return tuple(catalog)


def build_link_catalog():
    """All 73 triangulated 2-spheres with 4..9 vertices, largest first."""
    return list(_catalog_cached())


# ---------------------------------------------------------------------------
# 3-manifold enumeration

@dataclass
class CensusRecord:
    """One isomorphism class of the census with its computed annotations."""

    complex: Complex
    f_vector: tuple
    topo_type: str
    group: GroupFingerprint
    shellable: bool | None = None
    vertex_decomposable: bool | None = None


def _catalog_hash(seeds):
    h = hashlib.sha1()
    for L in seeds:
        h.update(repr(L).encode())
    return h.hexdigest()[:12]


def _unit_key(seed_idx, first):
    return f"seed={seed_idx} first={','.join(map(str, first))}"


def _facets_str(facets):
    return ";".join(" ".join(map(str, f)) for f in facets)


def _facets_parse(s):
    return tuple(tuple(map(int, p.split())) for p in s.split(";"))


def _run_unit_task(args):
    n, seed_idx, link_canon, first = args
    canons = _run(n, 3, link_canon, first_move=first)
    return seed_idx, first, [_facets_str(c) for c in canons]


def iter_manifold_units(n, catalog=None):
    """The deterministic work-unit list for an n-vertex enumeration."""
    if catalog is None:
        catalog = build_link_catalog()
    seeds = [K.facets for K in catalog if K.n <= n - 1]
    units = []
    for idx, link_canon in enumerate(seeds):
        for first in _root_moves(n, 3, link_canon):
            units.append((n, idx, link_canon, first))
    return seeds, units


def enumerate_3manifold_forms(n, *, jobs=1, checkpoint=None, catalog=None,
                              progress=None):
    """Canonical facet lists of all closed 3-manifold types on n vertices.

    Returns a sorted list of canonical facet tuples.  With ``checkpoint`` set
    to a path prefix, completed work units are persisted and skipped on
    resume; interruption at any point leaves the final output unchanged.
    """
    if not 5 <= n <= 10:
        raise ValueError("3-manifold enumeration supports 5..10 vertices")
    seeds, units = iter_manifold_units(n, catalog)
    cat_hash = _catalog_hash(seeds)
    header = f"# enum3 n={n} units={len(units)} catalog={cat_hash}"

    done = set()
    found = {}

    def note(seed_idx, canon_str):
        prev = found.setdefault(canon_str, seed_idx)
        if prev != seed_idx:
            raise InvariantViolation(
                "manifold produced by two different seeds; emission rule broken")

    units_fh = results_fh = None
    if checkpoint:
        units_path = checkpoint + ".units"
        results_path = checkpoint + ".results"
        if os.path.exists(units_path):
            with open(units_path) as fh:
                first_line = fh.readline().rstrip("\n")
                if first_line != header:
                    raise CheckpointMismatch(
                        f"checkpoint header {first_line!r} does not match {header!r}")
                done = {line.strip() for line in fh if line.strip()}
            if os.path.exists(results_path):
                with open(results_path) as fh:
                    for line in fh:
                        seed_idx, canon_str = line.rstrip("\n").split("\t")
                        note(int(seed_idx), canon_str)
        else:
            with open(units_path, "w") as fh:
                fh.write(header + "\n")
        units_fh = open(units_path, "a")
        results_fh = open(results_path, "a")

    todo = [u for u in units if _unit_key(u[1], u[3]) not in done]

    def consume(seed_idx, first, canon_strs):
        for c in canon_strs:
            note(seed_idx, c)
        if results_fh:
            for c in canon_strs:
                results_fh.write(f"{seed_idx}\t{c}\n")
            results_fh.flush()
            os.fsync(results_fh.fileno())
            units_fh.write(_unit_key(seed_idx, first) + "\n")
            units_fh.flush()
            os.fsync(units_fh.fileno())
        if progress:
            progress(seed_idx, first, len(found))

    try:
        if jobs > 1 and len(todo) > 1:
            import multiprocessing as mp

            with mp.get_context("fork").Pool(jobs) as pool:
                for seed_idx, first, canon_strs in pool.imap_unordered(
                        _run_unit_task, todo, chunksize=1):
                    consume(seed_idx, first, canon_strs)
        else:
            for unit in todo:
                consume(*_run_unit_task(unit))
    finally:
        if results_fh:
            results_fh.close()
            units_fh.close()

    forms = [_facets_parse(s) for s in found]
    forms.sort(key=lambda f: (len({v for t in f for v in t}) + len(f), f))
    return forms


def build_record(facets, shellable=None, vertex_decomposable=None):
    """Annotate one canonical facet list with its census record fields."""
    K = Complex(facets)
    fv = K.f_vector()
    if not closed_fvector_ok(fv):
        raise InvariantViolation(f"census entry violates the f-vector relations: {fv}")
    return CensusRecord(
        complex=K,
        f_vector=fv,
        topo_type=classify(K),
        group=automorphism_group(K),
        shellable=shellable,
        vertex_decomposable=vertex_decomposable,
    )


def enumerate_3manifolds(n, *, jobs=1, checkpoint=None, catalog=None,
                         progress=None):
    """All isomorphism classes of closed 3-manifolds on n vertices.

    Records are sorted by (edge count, canonical facet list) and carry the
    f-vector, the topological type and the symmetry-group fingerprint.
    """
    forms = enumerate_3manifold_forms(
        n, jobs=jobs, checkpoint=checkpoint, catalog=catalog, progress=progress)
    return [build_record(f) for f in forms]


def fvector_histogram(records):
    """Per-f-vector, per-type counts of a census slice."""
    table = {}
    for rec in records:
        row = table.setdefault(rec.f_vector, {})
        row[rec.topo_type] = row.get(rec.topo_type, 0) + 1
    return dict(sorted(table.items()))
