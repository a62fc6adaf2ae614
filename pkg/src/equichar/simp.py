"""Finite simplicial complexes, flag complexes, and admissible group actions.

Vertices are strings; a simplex is a sorted tuple of vertices.  Every
declared vertex is kept as a 0-simplex, so the vertex list and the
0-skeleton always agree.  The empty complex has no vertices and no
simplices; the empty simplex () is never stored but is accepted by link().
"""

from .errors import InputError, PreconditionError
from .exactlin import ChainComplexZ, IntegerMatrix, cohomology, homology, homology_mod_p
from .permgrp import (FiniteGroup, Permutation, QuotientGroup, Subgroup,
                      _as_subgroup, normalizer)


class SimplicialComplex:

    __slots__ = ("vertices", "simplices")

    def __init__(self, vertices, simplices, check=True):
        self.vertices = tuple(sorted(set(vertices)))
        self.simplices = frozenset(tuple(s) for s in simplices)
        if check:
            self._validate()

    def _validate(self):
        vset = set(self.vertices)
        for s in self.simplices:
            if not s:
                raise InputError("the empty simplex is implicit; do not store it")
            if list(s) != sorted(set(s)):
                raise InputError("simplex %r is not a sorted duplicate-free tuple" % (s,))
            if not set(s) <= vset:
                raise InputError("simplex %r uses undeclared vertices" % (s,))
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                if face and face not in self.simplices:
                    raise InputError("face %r of %r is missing" % (face, s))
        for v in self.vertices:
            if (v,) not in self.simplices:
                raise InputError("vertex %r has no 0-simplex" % v)

    @classmethod
    def empty(cls):
        return cls((), (), check=False)

    @classmethod
    def from_maximal_simplices(cls, vertices, facets):
        """Close the facet list under faces; isolated vertices stay as points."""
        vset = set(vertices)
        simplices = set((v,) for v in vset)
        for facet in facets:
            s = tuple(sorted(set(facet)))
            if not set(s) <= vset:
                raise InputError("facet %r uses undeclared vertices" % (facet,))
            if not s:
                continue
            stack = [s]
            while stack:
                t = stack.pop()
                if t in simplices and len(t) == 1:
                    continue
                if t not in simplices:
                    simplices.add(t)
                    for i in range(len(t)):
                        face = t[:i] + t[i + 1:]
                        if face and face not in simplices:
                            stack.append(face)
        return cls(vset, simplices, check=False)

    @classmethod
    def flag_from_graph(cls, vertices, edges):
        """The flag complex of a graph: simplices are the cliques."""
        vset = set(vertices)
        adj = {v: set() for v in vset}
        for e in edges:
            pair = tuple(sorted(set(e)))
            if len(pair) != 2:
                raise InputError("edge %r must join two distinct vertices" % (e,))
            a, b = pair
            if a not in vset or b not in vset:
                raise InputError("edge %r uses undeclared vertices" % (e,))
            adj[a].add(b)
            adj[b].add(a)
        simplices = set()
        order = sorted(vset)

        def extend(clique, candidates):
            for i, v in enumerate(candidates):
                s = clique + (v,)
                simplices.add(s)
                extend(s, [w for w in candidates[i + 1:] if w in adj[v]])

        extend((), order)
        return cls(vset, simplices, check=False)

    @property
    def dim(self):
        if not self.simplices:
            return -1
        return max(len(s) for s in self.simplices) - 1

    @property
    def is_empty(self):
        return not self.vertices

    def simplices_of_dim(self, d):
        return sorted(s for s in self.simplices if len(s) == d + 1)

    def f_vector(self):
        """(f_0, f_1, ..., f_dim)."""
        out = [0] * (self.dim + 1)
        for s in self.simplices:
            out[len(s) - 1] += 1
        return tuple(out)

    def euler_characteristic(self):
        return sum((-1) ** (len(s) - 1) for s in self.simplices)

    def degree(self, v):
        if (v,) not in self.simplices:
            raise InputError("no vertex %r" % (v,))
        return sum(1 for s in self.simplices if len(s) == 2 and v in s)

    def edges(self):
        return self.simplices_of_dim(1)

    def is_flag(self):
        """Whether every clique of the 1-skeleton is a simplex."""
        adj = {v: set() for v in self.vertices}
        for a, b in self.edges():
            adj[a].add(b)
            adj[b].add(a)

        def extend(clique, candidates):
            for i, v in enumerate(candidates):
                s = clique + (v,)
                if len(s) > 2 and s not in self.simplices:
                    return False
                if not extend(s, [w for w in candidates[i + 1:] if w in adj[v]]):
                    return False
            return True

        return extend((), sorted(self.vertices))

    def contains(self, simplex):
        s = tuple(sorted(simplex))
        return s == () or s in self.simplices

    def link(self, simplex):
        """Link of a simplex; the empty simplex gives the complex itself."""
        s = tuple(sorted(set(simplex)))
        if s == ():
            return self
        if s not in self.simplices:
            raise InputError("simplex %r not in complex" % (s,))
        sset = set(s)
        simplices = set()
        for t in self.simplices:
            tset = set(t)
            if tset & sset:
                continue
            if tuple(sorted(tset | sset)) in self.simplices:
                simplices.add(t)
        verts = set(v for t in simplices for v in t)
        return SimplicialComplex(verts, simplices, check=False)

    def full_subcomplex(self, vertex_subset):
        """All simplices whose vertices lie in the subset."""
        sub = set(vertex_subset)
        if not sub <= set(self.vertices):
            raise InputError("subset contains undeclared vertices")
        simplices = {s for s in self.simplices if set(s) <= sub}
        return SimplicialComplex(sub, simplices, check=False)

    def chain_complex(self, augmented=False):
        """Simplicial chain complex; augmented adds Z in degree -1."""
        if self.is_empty:
            if augmented:
                return ChainComplexZ({-1: 1}, {}, labels={-1: ("*",)}, check=False)
            return ChainComplexZ({}, {}, check=False)
        by_dim = {d: self.simplices_of_dim(d) for d in range(self.dim + 1)}
        ranks = {d: len(by_dim[d]) for d in by_dim}
        labels = {d: tuple("|".join(s) for s in by_dim[d]) for d in by_dim}
        index = {d: {s: i for i, s in enumerate(by_dim[d])} for d in by_dim}
        boundaries = {}
        for d in range(1, self.dim + 1):
            mat = IntegerMatrix(ranks[d - 1], ranks[d])
            for j, s in enumerate(by_dim[d]):
                for i in range(len(s)):
                    face = s[:i] + s[i + 1:]
                    mat[index[d - 1][face], j] = (-1) ** i
            boundaries[d] = mat
        if augmented:
            ranks[-1] = 1
            labels[-1] = ("*",)
            boundaries[0] = IntegerMatrix(1, ranks[0], [[1] * ranks[0]])
        return ChainComplexZ(ranks, boundaries, labels=labels, check=False)

    def reduced_homology(self):
        """{degree: HomologyGroup} of the augmented chain complex."""
        return homology(self.chain_complex(augmented=True))

    def reduced_cohomology(self):
        return cohomology(self.chain_complex(augmented=True))

    def reduced_homology_mod_p(self, p):
        return homology_mod_p(self.chain_complex(augmented=True), p)

    def barycentric_subdivision(self):
        """Flag complex on the simplices, with chains of faces as simplices."""
        simps = sorted(self.simplices)
        names = {s: "|".join(s) for s in simps}
        pairs = [(names[a], names[b]) for a in simps for b in simps
                 if len(a) < len(b) and set(a) < set(b)]
        return complex_of_chains([names[s] for s in simps], pairs)

    def relabel(self, mapping):
        """Rename vertices along an injective map."""
        if len(set(mapping.values())) != len(mapping):
            raise InputError("relabeling must be injective")
        verts = [mapping[v] for v in self.vertices]
        simplices = {tuple(sorted(mapping[v] for v in s)) for s in self.simplices}
        return SimplicialComplex(verts, simplices, check=False)

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex)
                and self.vertices == other.vertices
                and self.simplices == other.simplices)

    def __hash__(self):
        return hash((self.vertices, self.simplices))

    def __repr__(self):
        return "SimplicialComplex(%d vertices, dim %d)" % (len(self.vertices), self.dim)


def complex_of_chains(labels, strict_pairs):
    """Order complex of a strict relation: simplices are the chains.

    labels lists the vertices; strict_pairs are (smaller, larger) pairs of
    an irreflexive transitive relation.
    """
    below = {v: set() for v in labels}
    for a, b in strict_pairs:
        below[b].add(a)
    order = sorted(labels)
    simplices = set()

    def grow(chain, candidates):
        for i, v in enumerate(candidates):
            s = tuple(sorted(chain + (v,)))
            simplices.add(s)
            grow(chain + (v,), [w for w in candidates[i + 1:]
                                if v in below[w] or w in below[v]])

    grow((), order)
    return SimplicialComplex(labels, simplices, check=False)


class GroupAction:
    """A simplicial action of a finite group on a complex.

    generator_images maps each group generator to a permutation of the
    complex's vertices; omit it when the group already permutes the
    vertices.  Images of all elements are built by closing products, which
    checks that the assignment is a homomorphism; each generator image
    must carry simplices to simplices.
    """

    def __init__(self, complex, group, generator_images=None):
        self.complex = complex
        self.group = group
        verts = complex.vertices
        if generator_images is None:
            if tuple(sorted(group.points)) != verts:
                raise InputError("group points differ from complex vertices; "
                                 "supply generator images")
            generator_images = {g: g for g in group.generators}
        images = {group.identity.key: Permutation.identity(verts)}
        frontier = [group.identity]
        pairs = [(g, generator_images[g]) for g in group.generators]
        for g, img in pairs:
            if img.points != verts:
                raise InputError("image of %s does not permute the vertices" % g)
        while frontier:
            nxt = []
            for g, img in pairs:
                for h in frontier:
                    prod = g * h
                    pimg = img * images[h.key]
                    if prod.key in images:
                        if images[prod.key] != pimg:
                            raise InputError("generator images do not define "
                                             "a homomorphism")
                    else:
                        images[prod.key] = pimg
                        nxt.append(prod)
            frontier = nxt
        if len(images) != group.order:
            raise InputError("generators do not generate the group")
        self.images = images
        for g, img in pairs:
            for s in complex.simplices:
                t = tuple(sorted(img(v) for v in s))
                if t not in complex.simplices:
                    raise InputError("generator %s breaks simplex %r" % (g, s))
        self._admissible = None

    def image(self, g):
        if g.key not in self.images:
            raise InputError("element lies outside the acting group")
        return self.images[g.key]

    def is_admissible(self):
        """Every setwise-fixed simplex is pointwise fixed."""
        if self._admissible is None:
            self._admissible = self.admissibility_witness() is None
        return self._admissible

    def admissibility_witness(self):
        """A (group element, simplex) pair violating admissibility, or None."""
        for g in self.group.elements:
            img = self.images[g.key]
            for s in self.complex.simplices:
                if len(s) == 1:
                    continue
                t = tuple(sorted(img(v) for v in s))
                if t == s and any(img(v) != v for v in s):
                    return g, s
        return None

    def require_admissible(self):
        if not self.is_admissible():
            g, s = self.admissibility_witness()
            raise PreconditionError(
                "action is not admissible: %s fixes %r setwise but not "
                "pointwise" % (g, s))

    def _subgroup_elements(self, h):
        if isinstance(h, (Subgroup, FiniteGroup)):
            elems = h.elements
        else:
            elems = tuple(h)
        for g in elems:
            if g.key not in self.images:
                raise InputError("subgroup lies outside the acting group")
        return elems

    def fixed_vertices(self, h):
        elems = self._subgroup_elements(h)
        return tuple(v for v in self.complex.vertices
                     if all(self.images[g.key](v) == v for g in elems))

    def fixed_subcomplex(self, h):
        """Full subcomplex on the vertices fixed by every element of h."""
        self.require_admissible()
        return self.complex.full_subcomplex(self.fixed_vertices(h))

    def vertex_stabilizer(self, v):
        elems = [g for g in self.group.elements if self.images[g.key](v) == v]
        return Subgroup(self.group, elems)

    def quotient_action(self, h):
        """Action of N(h)/h on the fixed subcomplex of h.

        Well defined because h fixes its subcomplex pointwise and the
        normalizer preserves it.
        """
        self.require_admissible()
        if not isinstance(h, Subgroup):
            h = _as_subgroup(h)
        n = normalizer(self.group, h)
        q = QuotientGroup(n, h)
        fixed = self.fixed_subcomplex(h)
        fverts = fixed.vertices
        gen_images = {}
        for qg in q.generators:
            src = q.section_of(qg)
            img = self.images[src.key]
            gen_images[qg] = Permutation(fverts, {v: img(v) for v in fverts})
        return GroupAction(fixed, q, gen_images)


class Embedding:
    """An isomorphism from a pattern complex onto a full subcomplex of a host."""

    __slots__ = ("pattern", "host", "mapping")

    def __init__(self, pattern, host, mapping):
        if set(mapping) != set(pattern.vertices):
            raise InputError("mapping must cover the pattern vertices")
        if len(set(mapping.values())) != len(mapping):
            raise InputError("mapping must be injective")
        image = host.full_subcomplex(mapping.values())
        if pattern.relabel(mapping) != image:
            raise InputError("image is not a full copy of the pattern")
        self.pattern = pattern
        self.host = host
        self.mapping = dict(mapping)

    def image_complex(self):
        return self.host.full_subcomplex(self.mapping.values())

    def __repr__(self):
        return "Embedding(%r)" % (self.mapping,)


def find_full_subcomplex_isomorphic(host, pattern):
    """First embedding of the pattern as a full subcomplex, or None.

    Backtracking over pattern vertices in sorted order against host
    vertices in sorted order, so the result is deterministic.  Partial
    maps must match edges exactly (the image is induced); a completed map
    is accepted only if the full subcomplex on the image equals the
    relabeled pattern in all dimensions.
    """
    if len(pattern.vertices) > 8:
        raise PreconditionError("pattern too large for backtracking search")
    if pattern.is_empty:
        return Embedding(pattern, host, {})
    pverts = list(pattern.vertices)
    hverts = list(host.vertices)
    padj = {v: set() for v in pverts}
    for a, b in pattern.edges():
        padj[a].add(b)
        padj[b].add(a)
    hadj = {v: set() for v in hverts}
    for a, b in host.edges():
        hadj[a].add(b)
        hadj[b].add(a)
    assign = {}
    used = set()

    def place(k):
        if k == len(pverts):
            image = {assign[v] for v in pverts}
            if pattern.relabel(assign) == host.full_subcomplex(image):
                return True
            return False
        p = pverts[k]
        for hv in hverts:
            if hv in used or len(hadj[hv]) < len(padj[p]):
                continue
            ok = True
            for q in pverts[:k]:
                if (q in padj[p]) != (assign[q] in hadj[hv]):
                    ok = False
                    break
            if not ok:
                continue
            assign[p] = hv
            used.add(hv)
            if place(k + 1):
                return True
            del assign[p]
            used.discard(hv)
        return False

    if place(0):
        return Embedding(pattern, host, assign)
    return None
