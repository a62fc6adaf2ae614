"""Finite permutation groups by explicit enumeration.

Groups here are small (orders in the tens), so everything is done by brute
force: closure by breadth-first products, subgroup lattices by joining
cyclic subgroups, normalizers and centralizers by scanning.  Elements sort
by their image tuple on the sorted point list, which makes every listing
deterministic; the identity always sorts first.
"""

from .errors import InputError, PreconditionError, ResourceLimitError
from .exactlin import is_prime, prime_power_base

DEFAULT_ORDER_BOUND = 20000


class Permutation:
    """A permutation of a fixed finite set of named points."""

    __slots__ = ("points", "mapping", "key")

    def __init__(self, points, mapping):
        points = tuple(sorted(points))
        if set(mapping) != set(points):
            raise InputError("permutation domain does not match point set")
        if set(mapping.values()) != set(points):
            raise InputError("permutation is not a bijection")
        self.points = points
        self.mapping = dict(mapping)
        self.key = tuple(mapping[p] for p in points)

    @classmethod
    def identity(cls, points):
        return cls(points, {p: p for p in points})

    @classmethod
    def from_cycles(cls, points, text):
        """Parse disjoint cycle notation like "(1 2)(3 4)"; "()" is the identity."""
        points = tuple(sorted(points))
        body = text.strip()
        if body in ("", "()"):
            return cls.identity(points)
        if not body.startswith("(") or not body.endswith(")"):
            raise InputError("cycle notation must be parenthesized: %r" % text)
        mapping = {p: p for p in points}
        seen = set()
        for chunk in body[1:-1].split(")("):
            names = chunk.replace(",", " ").split()
            if len(names) < 2:
                raise InputError("cycle needs at least two points: %r" % chunk)
            for name in names:
                if name not in mapping:
                    raise InputError("unknown point %r in %r" % (name, text))
                if name in seen:
                    raise InputError("point %r repeated; cycles must be disjoint" % name)
                seen.add(name)
            for a, b in zip(names, names[1:]):
                mapping[a] = b
            mapping[names[-1]] = names[0]
        return cls(points, mapping)

    def __call__(self, x):
        return self.mapping[x]

    def __mul__(self, other):
        """Composition: (g * h)(x) = g(h(x))."""
        if self.points != other.points:
            raise InputError("permutations act on different point sets")
        return Permutation(self.points, {p: self.mapping[other.mapping[p]] for p in self.points})

    def inverse(self):
        return Permutation(self.points, {v: k for k, v in self.mapping.items()})

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = Permutation.identity(self.points)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    @property
    def is_identity(self):
        return all(k == v for k, v in self.mapping.items())

    def order(self):
        n = 1
        g = self
        while not g.is_identity:
            g = g * self
            n += 1
        return n

    def fixed_points(self):
        return tuple(p for p in self.points if self.mapping[p] == p)

    def cycles(self):
        """Non-singleton cycles, each starting at its least point."""
        seen = set()
        out = []
        for p in self.points:
            if p in seen or self.mapping[p] == p:
                continue
            cyc = [p]
            seen.add(p)
            q = self.mapping[p]
            while q != p:
                cyc.append(q)
                seen.add(q)
                q = self.mapping[q]
            out.append(tuple(cyc))
        return out

    def __str__(self):
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(c) + ")" for c in cycs)

    def __repr__(self):
        return "Permutation(%s)" % self

    def __eq__(self, other):
        return (isinstance(other, Permutation)
                and self.points == other.points and self.key == other.key)

    def __hash__(self):
        return hash((self.points, self.key))

    def __lt__(self, other):
        return self.key < other.key


def _close_under_products(points, generators, bound):
    ident = Permutation.identity(points)
    elements = {ident.key: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in generators:
            for h in frontier:
                prod = g * h
                if prod.key not in elements:
                    elements[prod.key] = prod
                    nxt.append(prod)
                    if len(elements) > bound:
                        raise ResourceLimitError(
                            "group closure exceeded bound %d" % bound)
        frontier = nxt
    return tuple(sorted(elements.values()))


class FiniteGroup:
    """A permutation group given by its full (or generated) element list."""

    def __init__(self, points, generators, elements=None,
                 max_order=DEFAULT_ORDER_BOUND, check=True):
        self.points = tuple(sorted(points))
        gens = []
        for g in generators:
            if g.points != self.points:
                raise InputError("generator acts on the wrong point set")
            if not g.is_identity:
                gens.append(g)
        self.generators = tuple(gens)
        if elements is None:
            self.elements = _close_under_products(self.points, self.generators, max_order)
        else:
            self.elements = tuple(sorted(set(elements)))
            if check:
                self._verify_closed()
        self.identity = Permutation.identity(self.points)
        self._index = {g.key: g for g in self.elements}
        if self.identity.key not in self._index:
            raise InputError("element list omits the identity")

    def _verify_closed(self):
        keys = {g.key for g in self.elements}
        for g in self.elements:
            if g.points != self.points:
                raise InputError("element acts on the wrong point set")
            if g.inverse().key not in keys:
                raise InputError("element list is not closed under inverses")
        for g in self.elements:
            for h in self.elements:
                if (g * h).key not in keys:
                    raise InputError("element list is not closed under products")

    @property
    def order(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return isinstance(g, Permutation) and g.key in self._index

    def subgroup(self, elements):
        return Subgroup(self, elements)

    def subgroup_generated(self, gens):
        gens = list(gens)
        for g in gens:
            if g not in self:
                raise InputError("generator lies outside the group")
        elems = _close_under_products(self.points, gens, self.order)
        return Subgroup(self, elems)

    def whole(self):
        return Subgroup(self, self.elements)

    def trivial_subgroup(self):
        return Subgroup(self, (self.identity,))

    def __repr__(self):
        return "FiniteGroup(order=%d, points=%r)" % (self.order, list(self.points))


def group_from_generators(points, generators, max_order=DEFAULT_ORDER_BOUND):
    """Close a generator list into a FiniteGroup; the bound guards runaways."""
    return FiniteGroup(points, generators, max_order=max_order)


class Subgroup:
    """A subgroup of a FiniteGroup, stored as its sorted element tuple."""

    __slots__ = ("group", "elements", "key")

    def __init__(self, group, elements):
        self.group = group
        elems = sorted(set(elements))
        for g in elems:
            if g not in group:
                raise InputError("subgroup element lies outside the group")
        self.elements = tuple(elems)
        self.key = tuple(g.key for g in self.elements)
        if not elems or not elems[0].is_identity:
            raise InputError("subgroup must contain the identity")

    @property
    def order(self):
        return len(self.elements)

    @property
    def is_trivial(self):
        return self.order == 1

    def element_keys(self):
        return frozenset(self.key)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return isinstance(g, Permutation) and any(g == h for h in self.elements)

    def __le__(self, other):
        return set(self.key) <= set(other.key)

    def __lt__(self, other):
        return set(self.key) < set(other.key)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def conjugate(self, g):
        """The subgroup g^-1 H g."""
        gi = g.inverse()
        return Subgroup(self.group, tuple(gi * h * g for h in self.elements))

    def generating_set(self):
        """Greedy deterministic generating list (empty for the trivial subgroup)."""
        gens = []
        have = {self.group.identity.key}
        for g in self.elements:
            if g.key not in have:
                gens.append(g)
                have = {e.key for e in
                        _close_under_products(self.group.points, gens, self.order)}
                if len(have) == self.order:
                    break
        return tuple(gens)

    def describe(self):
        """Readable name: "1" for trivial, else generators in cycle notation."""
        if self.is_trivial:
            return "1"
        return "⟨" + ", ".join(str(g) for g in self.generating_set()) + "⟩"

    def as_group(self, check=False):
        """View this subgroup as a standalone FiniteGroup on the same points."""
        return FiniteGroup(self.group.points, self.generating_set(),
                           elements=self.elements, check=check)

    def __repr__(self):
        return "Subgroup(order=%d, %s)" % (self.order, self.describe())


def _carrier(g):
    """Element tuple of a FiniteGroup or Subgroup."""
    if isinstance(g, Subgroup):
        return g.elements
    return g.elements


def _parent(g):
    return g.group if isinstance(g, Subgroup) else g


def _as_subgroup(g):
    if isinstance(g, Subgroup):
        return g
    return g.whole()


def _check_contained(g, h):
    big = set(k.key for k in _carrier(g))
    if not all(x.key in big for x in _carrier(h)):
        raise InputError("not a subgroup of the ambient group")


def all_subgroups(g):
    """Every subgroup, sorted by (order, element keys).

    Built as joins of cyclic subgroups: seed with all <x>, then repeatedly
    join members of the frontier with cyclic subgroups until nothing new
    appears.  Every subgroup is a join of its own cyclic subgroups, so the
    sweep reaches all of them.
    """
    parent = _parent(g)
    elements = _carrier(g)
    order = len(elements)
    ident = parent.identity
    cyclic = {}
    for x in elements:
        if x.is_identity:
            continue
        elems = []
        y = x
        while not y.is_identity:
            elems.append(y)
            y = y * x
        elems.append(ident)
        key = tuple(sorted(e.key for e in elems))
        cyclic.setdefault(key, tuple(sorted(elems)))
    found = {(ident.key,): (ident,)}
    found.update(cyclic)
    frontier = list(cyclic.values())
    cyc_list = list(cyclic.values())
    while frontier:
        fresh = []
        for a in frontier:
            for c in cyc_list:
                gens = list(a) + list(c)
                joined = _close_under_products(parent.points, gens, order)
                key = tuple(e.key for e in joined)
                if key not in found:
                    found[key] = joined
                    fresh.append(joined)
        frontier = fresh
    subs = [Subgroup(parent, elems) for elems in found.values()]
    subs = [s for s in subs if set(s.key) <= {e.key for e in elements}]
    subs.sort(key=lambda s: (s.order, s.key))
    return subs


class SubgroupClass:
    """A conjugacy class of subgroups; rep is the lexicographically least member."""

    __slots__ = ("rep", "members")

    def __init__(self, rep, members):
        self.rep = rep
        self.members = tuple(members)

    @property
    def size(self):
        return len(self.members)

    def __repr__(self):
        return "SubgroupClass(size=%d, rep=%s)" % (self.size, self.rep.describe())


def conjugacy_classes_of_subgroups(g):
    """Conjugacy classes of subgroups of g, sorted by (order, rep key)."""
    parent = _parent(g)
    elements = _carrier(g)
    classes = []
    seen = set()
    for h in all_subgroups(g):
        if h.key in seen:
            continue
        members = {}
        for x in elements:
            hx = h.conjugate(x)
            members[hx.key] = hx
        ordered = sorted(members.values(), key=lambda s: s.key)
        classes.append(SubgroupClass(ordered[0], ordered))
        seen.update(members)
    return classes


def normalizer(g, h):
    """N_g(h) = {x in g : h^x = h}, as a Subgroup of g's parent group."""
    _check_contained(g, h)
    hkeys = set(h.key)
    parent = _parent(g)
    elems = []
    for x in _carrier(g):
        xi = x.inverse()
        if all((xi * y * x).key in hkeys for y in h.elements):
            elems.append(x)
    return Subgroup(parent, elems)


def centralizer(g, h):
    """C_g(h) = {x in g : xy = yx for all y in h}."""
    _check_contained(g, h)
    parent = _parent(g)
    elems = [x for x in _carrier(g)
             if all((x * y).key == (y * x).key for y in h.elements)]
    return Subgroup(parent, elems)


def center(g):
    return centralizer(g, _as_subgroup(g))


def is_normal(n, h):
    """Whether h is normal in n (both must sit in a common parent)."""
    _check_contained(n, h)
    hkeys = set(h.key)
    for x in _carrier(n):
        xi = x.inverse()
        if any((xi * y * x).key not in hkeys for y in h.elements):
            return False
    return True


class QuotientGroup(FiniteGroup):
    """The quotient N/H realized as a permutation group on coset labels.

    N acts on the left cosets of H by left multiplication; since H is
    normal in N the kernel of that action is exactly H, so the label
    permutations form a faithful copy of N/H.  Extra bookkeeping keeps the
    projection from N, a section picking the least representative of each
    coset, and preimages of subgroups.
    """

    def __init__(self, source, kernel):
        source = _as_subgroup(source)
        _check_contained(source, kernel)
        if not is_normal(source, kernel):
            raise InputError("kernel is not normal in the source group")
        self.source = source
        self.kernel = kernel
        cosets = {}
        for x in source.elements:
            members = tuple(sorted(x * y for y in kernel.elements))
            cosets.setdefault(members[0].key, members)
        ordered = sorted(cosets.values(), key=lambda c: c[0].key)
        labels = tuple("c%d" % i for i in range(len(ordered)))
        coset_of = {}
        for lab, members in zip(labels, ordered):
            for m in members:
                coset_of[m.key] = lab
        perms = {}
        for x in source.elements:
            mapping = {lab: coset_of[(x * members[0]).key]
                       for lab, members in zip(labels, ordered)}
            perms[x.key] = Permutation(labels, mapping)
        elements = sorted({p.key: p for p in perms.values()}.values())
        gens = source.generating_set()
        super().__init__(labels, [perms[g.key] for g in gens],
                         elements=elements, check=False)
        self.cosets = tuple(ordered)
        self.project = {k: perms[k] for k in perms}
        self.section = {}
        for lab, members in zip(labels, ordered):
            self.section[perms[members[0].key].key] = members[0]
        if self.order * kernel.order != source.order:
            raise InputError("coset action is not faithful; kernel not normal")

    def project_element(self, x):
        if x.key not in self.project:
            raise InputError("element lies outside the source group")
        return self.project[x.key]

    def section_of(self, q):
        """Least source representative of a quotient element."""
        if q.key not in self.section:
            raise InputError("not an element of the quotient")
        return self.section[q.key]

    def preimage(self, sub):
        """Preimage in the source of a subgroup of the quotient."""
        want = set(sub.key)
        elems = [x for x in self.source.elements
                 if self.project[x.key].key in want]
        return Subgroup(self.source.group, elems)


def quotient(n, h):
    """The quotient group n/h; h must be normal in n."""
    return QuotientGroup(n, h)


def is_p_group(h, p):
    if not is_prime(p):
        raise InputError("p must be prime, got %r" % (p,))
    n = len(_carrier(h))
    while n % p == 0:
        n //= p
    return n == 1


def is_cyclic(h):
    n = len(_carrier(h))
    return any(x.order() == n for x in _carrier(h))


def is_abelian(h):
    elems = _carrier(h)
    return all((x * y).key == (y * x).key for x in elems for y in elems)


def is_nilpotent(h):
    """Decided by the ascending central series: take centers and quotients
    until the group is exhausted or a center goes trivial."""
    g = _as_subgroup(h).as_group()
    while g.order > 1:
        z = center(g)
        if z.is_trivial:
            return False
        g = QuotientGroup(g.whole(), z)
    return True


def is_elementary_abelian(h, p):
    """Abelian with every element of order dividing p; trivial counts."""
    if not is_prime(p):
        raise InputError("p must be prime, got %r" % (p,))
    elems = _carrier(h)
    if any(x.order() not in (1, p) for x in elems):
        return False
    return is_abelian(h)


def _squarefree(n):
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


def is_elementary_abelian_any(h):
    """Nontrivial abelian with squarefree exponent: a direct product of
    prime-order cyclic groups, possibly over different primes.  Within a
    p-group this is the usual notion of elementary abelian subgroup."""
    elems = _carrier(h)
    if len(elems) == 1:
        return False
    if any(not _squarefree(x.order()) for x in elems):
        return False
    return is_abelian(h)


def elementary_abelian_rank(h, p):
    if not is_elementary_abelian(h, p):
        raise InputError("group is not elementary abelian for p=%d" % p)
    n = len(_carrier(h))
    rank = 0
    while n > 1:
        n //= p
        rank += 1
    return rank


def require_p_group(k):
    """Return the prime p with |k| a power of p (None for the trivial group)."""
    n = len(_carrier(k))
    if n == 1:
        return None
    p = prime_power_base(n)
    if p is None:
        raise PreconditionError("group of order %d is not a p-group" % n)
    return p
