"""Exact integer linear algebra: Smith normal form and chain complex homology.

Everything runs over Python integers and fractions.Fraction, so results are
exact.  Arbitrary-precision arithmetic means entry growth can never wrap;
the smallest-magnitude pivot rule keeps it tame in practice.
"""

from fractions import Fraction

from .errors import ConsistencyError, InputError

Rational = Fraction


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power_base(n):
    """Return p if n = p^k with k >= 1 and p prime, else None."""
    if n < 2:
        return None
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
        p += 1
    return n


class IntegerMatrix:
    """Dense matrix with integer entries, stored as a list of rows."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows, cols, entries=None):
        if rows < 0 or cols < 0:
            raise InputError("matrix dimensions must be non-negative")
        if entries is None:
            entries = [[0] * cols for _ in range(rows)]
        else:
            if len(entries) != rows:
                raise InputError("row count does not match shape")
            fixed = []
            for row in entries:
                row = list(row)
                if len(row) != cols:
                    raise InputError("column count does not match shape")
                for v in row:
                    if not isinstance(v, int):
                        raise InputError("matrix entries must be integers")
                fixed.append(row)
            entries = fixed
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        nc = len(rows[0]) if rows else 0
        return cls(len(rows), nc, rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.entries[i][j] = v

    def __eq__(self, other):
        return (isinstance(other, IntegerMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.entries)))

    def __repr__(self):
        return "IntegerMatrix(%d, %d, %r)" % (self.rows, self.cols, self.entries)

    def copy(self):
        return IntegerMatrix(self.rows, self.cols, [row[:] for row in self.entries])

    def transpose(self):
        return IntegerMatrix(self.cols, self.rows,
                             [[self.entries[i][j] for i in range(self.rows)]
                              for j in range(self.cols)])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise InputError("matrix shapes do not compose")
        out = IntegerMatrix(self.rows, other.cols)
        for i in range(self.rows):
            row = self.entries[i]
            orow = out.entries[i]
            for k in range(self.cols):
                v = row[k]
                if v:
                    oth = other.entries[k]
                    for j in range(other.cols):
                        orow[j] += v * oth[j]
        return out

    def is_zero(self):
        return all(v == 0 for row in self.entries for v in row)


def _smallest_nonzero(a, t, nr, nc):
    best = None
    best_abs = None
    for i in range(t, nr):
        row = a[i]
        for j in range(t, nc):
            v = row[j]
            if v:
                av = abs(v)
                if best is None or av < best_abs:
                    best = (i, j)
                    best_abs = av
                    if av == 1:
                        return best
    return best


def smith_normal_form(m):
    """Diagonalize by unimodular row and column operations.

    Returns (diagonal, rank): diagonal has length min(rows, cols), starts
    with the positive invariant factors d1 | d2 | ... | dr and is padded
    with zeros; rank = r.  The pivot is always a smallest-magnitude nonzero
    entry of the remaining block, which limits entry growth.
    """
    a = [row[:] for row in m.entries]
    nr, nc = m.rows, m.cols
    limit = min(nr, nc)
    t = 0
    while t < limit:
        pivot = _smallest_nonzero(a, t, nr, nc)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        if a[t][t] < 0:
            a[t] = [-v for v in a[t]]
        piv = a[t][t]
        # Clear column t, then row t.  A surviving remainder is strictly
        # smaller than the pivot, so looping back terminates.
        dirty = False
        for i in range(t + 1, nr):
            if a[i][t]:
                q = a[i][t] // piv
                if q:
                    at = a[t]
                    a[i] = [x - q * y for x, y in zip(a[i], at)]
                if a[i][t]:
                    dirty = True
        if dirty:
            continue
        for j in range(t + 1, nc):
            if a[t][j]:
                q = a[t][j] // piv
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # Enforce divisibility: fold in a row holding a non-multiple.
        off = None
        for i in range(t + 1, nr):
            row = a[i]
            for j in range(t + 1, nc):
                if row[j] % piv:
                    off = i
                    break
            if off is not None:
                break
        if off is not None:
            a[t] = [x + y for x, y in zip(a[t], a[off])]
            continue
        t += 1
    diagonal = [abs(a[i][i]) for i in range(t)] + [0] * (limit - t)
    return diagonal, t


def rank_mod_p(m, p):
    """Rank over the field with p elements, by Gaussian elimination."""
    if not is_prime(p):
        raise InputError("p must be prime, got %r" % (p,))
    a = [[v % p for v in row] for row in m.entries]
    nr, nc = m.rows, m.cols
    rank = 0
    for j in range(nc):
        piv = None
        for i in range(rank, nr):
            if a[i][j]:
                piv = i
                break
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][j], p - 2, p)
        a[rank] = [(v * inv) % p for v in a[rank]]
        for i in range(nr):
            if i != rank and a[i][j]:
                c = a[i][j]
                ar = a[rank]
                a[i] = [(v - c * w) % p for v, w in zip(a[i], ar)]
        rank += 1
        if rank == nr:
            break
    return rank


class HomologyGroup:
    """A finitely generated abelian group Z^betti + Z/d1 + ... + Z/dk.

    Torsion divisors satisfy d1 | d2 | ... | dk with every di > 1.
    """

    __slots__ = ("betti", "torsion")

    def __init__(self, betti=0, torsion=()):
        torsion = tuple(int(d) for d in torsion)
        if betti < 0:
            raise ConsistencyError("negative betti number")
        for d in torsion:
            if d < 2:
                raise ConsistencyError("torsion divisor must exceed 1")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ConsistencyError("torsion divisors must form a chain")
        self.betti = betti
        self.torsion = torsion

    @property
    def is_trivial(self):
        return self.betti == 0 and not self.torsion

    @property
    def is_torsion_free(self):
        return not self.torsion

    def __eq__(self, other):
        return (isinstance(other, HomologyGroup)
                and self.betti == other.betti and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.betti, self.torsion))

    def __repr__(self):
        if self.is_trivial:
            return "0"
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti:
            parts.append("Z^%d" % self.betti)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts)


TRIVIAL_GROUP = HomologyGroup()


class ChainComplexZ:
    """A bounded chain complex of free Z-modules over contiguous degrees.

    ranks maps degree -> rank; boundaries maps degree d -> the matrix of
    the map from degree d to degree d - 1, required for every degree above
    the lowest.  Composition of successive boundaries is checked to vanish.
    """

    __slots__ = ("ranks", "boundaries", "labels")

    def __init__(self, ranks, boundaries, labels=None, check=True):
        degrees = sorted(ranks)
        for a, b in zip(degrees, degrees[1:]):
            if b != a + 1:
                raise InputError("degrees must be contiguous")
        self.ranks = dict(ranks)
        self.boundaries = dict(boundaries)
        self.labels = {d: tuple(v) for d, v in labels.items()} if labels else {}
        if check:
            self._validate()

    def _validate(self):
        degs = self.degrees()
        for d, lab in self.labels.items():
            if len(lab) != self.ranks.get(d, 0):
                raise InputError("label count mismatch in degree %d" % d)
        if not degs:
            if self.boundaries:
                raise InputError("boundary map without degrees")
            return
        lo = degs[0]
        for d in degs:
            if d == lo:
                if d in self.boundaries and not self.boundaries[d].is_zero():
                    raise InputError("nonzero boundary out of the lowest degree")
                continue
            b = self.boundaries.get(d)
            if b is None:
                raise InputError("missing boundary map in degree %d" % d)
            if b.rows != self.ranks[d - 1] or b.cols != self.ranks[d]:
                raise InputError("boundary shape mismatch in degree %d" % d)
        for d in degs:
            if d - 1 > lo and d in self.boundaries:
                if not (self.boundaries[d - 1] * self.boundaries[d]).is_zero():
                    raise ConsistencyError("boundary composition is nonzero at degree %d" % d)

    def degrees(self):
        return sorted(self.ranks)

    def rank(self, d):
        return self.ranks.get(d, 0)

    def boundary(self, d):
        """Matrix of the map degree d -> degree d - 1 (zero if absent)."""
        b = self.boundaries.get(d)
        if b is None:
            return IntegerMatrix(self.rank(d - 1), self.rank(d))
        return b

    def __eq__(self, other):
        if not isinstance(other, ChainComplexZ):
            return NotImplemented
        if self.ranks != other.ranks or self.labels != other.labels:
            return False
        return all(self.boundary(d) == other.boundary(d) for d in self.degrees())

    def __hash__(self):
        return hash(tuple(sorted(self.ranks.items())))


def _snf_by_degree(c):
    degs = c.degrees()
    out = {}
    for d in degs:
        out[d] = smith_normal_form(c.boundary(d))
    return out


def homology(c):
    """Homology groups by Smith normal form, as {degree: HomologyGroup}."""
    snf = _snf_by_degree(c)
    out = {}
    for d in c.degrees():
        r_here = snf[d][1]
        diag_up, r_up = snf.get(d + 1, ([], 0))
        betti = c.rank(d) - r_here - r_up
        torsion = tuple(v for v in diag_up if v > 1)
        out[d] = HomologyGroup(betti, torsion)
    return out


def cohomology(c):
    """Cohomology of the dual complex Hom(C, Z).

    Free parts agree with homology; the torsion of H^d equals the torsion
    of H_(d-1), read off the same Smith normal forms.
    """
    snf = _snf_by_degree(c)
    out = {}
    for d in c.degrees():
        diag_here, r_here = snf[d]
        r_up = snf.get(d + 1, ([], 0))[1]
        betti = c.rank(d) - r_here - r_up
        torsion = tuple(v for v in diag_here if v > 1)
        out[d] = HomologyGroup(betti, torsion)
    return out


def homology_mod_p(c, p):
    """Dimensions of homology with coefficients in the field of order p."""
    if not is_prime(p):
        raise InputError("p must be prime, got %r" % (p,))
    ranks = {d: rank_mod_p(c.boundary(d), p) for d in c.degrees()}
    out = {}
    for d in c.degrees():
        out[d] = c.rank(d) - ranks[d] - ranks.get(d + 1, 0)
        if out[d] < 0:
            raise ConsistencyError("negative mod-p dimension")
    return out
