"""Canonical labeling, isomorphism testing and combinatorial automorphism
groups of small complexes.

The canonical form of a complex is the lexicographically least facet list
over all vertex relabelings.  It is computed by building that list one
position at a time: at each step every still-unplaced facet is scored by the
smallest label tuple it could possibly receive (assigned labels kept, unused
slots filled with the next free labels), the minimum is appended to the
stream, and all label assignments realizing it are kept as a tie set.  Label
assignments can only grow a facet's score, so the greedy stream is exact.
The tie set that survives to the end is precisely the set of optimal
labelings, i.e. one coset of the automorphism group, which therefore comes
out of the same search.  No factorial scan is ever performed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import lcm

from .complexes import Complex


def _canonical_search(facets):
    """Return (lex-least facet list, list of all labelings achieving it).

    Labelings are dicts mapping original vertices to 1..n.
    """
    facets = [tuple(sorted(f)) for f in facets]
    m = len(facets)
    if m == 0:
        return (), [{}]
    entries = [({}, 0)]  # (partial labeling, bitmask of placed facets)
    stream = []
    for _ in range(m):
        best = None
        chosen = []
        for ei, (sig, used) in enumerate(entries):
            t = len(sig)
            for gi in range(m):
                if used >> gi & 1:
                    continue
                img = sorted(sig[v] for v in facets[gi] if v in sig)
                u = len(facets[gi]) - len(img)
                if u:
                    img.extend(range(t + 1, t + 1 + u))
                img = tuple(img)
                if best is None or img < best:
                    best = img
                    chosen = [(ei, gi)]
                elif img == best:
                    chosen.append((ei, gi))
        stream.append(best)
        nxt = {}
        for ei, gi in chosen:
            sig, used = entries[ei]
            t = len(sig)
            used2 = used | (1 << gi)
            free = [v for v in facets[gi] if v not in sig]
            if free:
                for perm in permutations(free):
                    sig2 = dict(sig)
                    for i, v in enumerate(perm):
                        sig2[v] = t + 1 + i
                    nxt.setdefault((frozenset(sig2.items()), used2), (sig2, used2))
            else:
                nxt.setdefault((frozenset(sig.items()), used2), (sig, used2))
        entries = list(nxt.values())
    return tuple(stream), [sig for sig, _ in entries]


def canonical_facets(facets):
    """Lexicographically least facet list over all vertex relabelings."""
    return _canonical_search(facets)[0]


def canonical_form(K: Complex) -> Complex:
    """The canonically labeled representative of K's isomorphism class."""
    return Complex(canonical_facets(K.facets), dim=K.dim)


def are_isomorphic(K1: Complex, K2: Complex) -> bool:
    if K1.dim != K2.dim or K1.n != K2.n or len(K1.facets) != len(K2.facets):
        return False
    return canonical_facets(K1.facets) == canonical_facets(K2.facets)


def automorphisms(K: Complex):
    """All vertex permutations fixing the facet set.

    Returned as sorted tuples ``p`` with ``p[i]`` the image of
    ``K.vertices[i]``.  Optimal labelings differ exactly by automorphisms, so
    the group is read off the canonical search's tie set.
    """
    _, sigmas = _canonical_search(K.facets)
    verts = K.vertices
    sig0 = sigmas[0]
    perms = []
    for sig in sigmas:
        inv = {lab: v for v, lab in sig.items()}
        perms.append(tuple(inv[sig0[v]] for v in verts))
    perms.sort()
    return perms


def _compose(p, q, index):
    # (p o q)(v) = p(q(v)); permutations stored as image tuples over K.vertices
    return tuple(p[index[x]] for x in q)


def _perm_order(p, verts):
    index = {v: i for i, v in enumerate(verts)}
    total = 1
    seen = set()
    for v in verts:
        if v in seen:
            continue
        length = 0
        x = v
        while x not in seen:
            seen.add(x)
            x = p[index[x]]
            length += 1
        total = lcm(total, length)
    return total


@dataclass(frozen=True)
class GroupFingerprint:
    """Structural invariants of an automorphism group.

    The group itself is recorded as a generating set of vertex permutations,
    not by an abstract name.
    """

    order: int
    generators: tuple
    transitive: bool
    abelian: bool
    cyclic: bool
    orbit_sizes: tuple

    @property
    def trivial(self):
        return self.order == 1


def automorphism_group(K: Complex) -> GroupFingerprint:
    """The full combinatorial symmetry group of K, as a fingerprint."""
    perms = automorphisms(K)
    verts = list(K.vertices)
    index = {v: i for i, v in enumerate(verts)}
    order = len(perms)
    identity = tuple(verts)

    generators = []
    generated = {identity}
    for p in perms:
        if p in generated:
            continue
        generators.append(p)
        queue = [p]
        generated.add(p)
        while queue:
            q = queue.pop()
            for g in generators:
                for r in (_compose(g, q, index), _compose(q, g, index)):
                    if r not in generated:
                        generated.add(r)
                        queue.append(r)
        if len(generated) == order:
            break

    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for p in generators:
        for v in verts:
            a, b = find(v), find(p[index[v]])
            if a != b:
                parent[a] = b
    orbits = {}
    for v in verts:
        orbits.setdefault(find(v), []).append(v)
    orbit_sizes = tuple(sorted(len(o) for o in orbits.values()))

    abelian = all(
        _compose(a, b, index) == _compose(b, a, index)
        for i, a in enumerate(generators)
        for b in generators[i + 1:]
    )
    cyclic = order == 1 or any(_perm_order(p, verts) == order for p in perms)
    return GroupFingerprint(
        order=order,
        generators=tuple(generators),
        transitive=len(orbit_sizes) == 1 and orbit_sizes[0] == len(verts),
        abelian=abelian,
        cyclic=cyclic,
        orbit_sizes=orbit_sizes,
    )


def nontrivial_group_census(complexes):
    """Count complexes with a nontrivial symmetry group.

    Returns ``(count, histogram)`` where ``histogram`` maps group order to
    the number of isomorphism types realizing it (trivial groups included).
    """
    histogram = {}
    count = 0
    for K in complexes:
        order = automorphism_group(K).order
        histogram[order] = histogram.get(order, 0) + 1
        if order > 1:
            count += 1
    return count, histogram
