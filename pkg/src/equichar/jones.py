"""Equivariant chain complexes over a cyclic group, and acyclic extensions.

A Moore complex M(Z/q, m) is a point, one cell c in degree m and one cell
l in degree m + 1 with boundary q.c.  For a cyclic group of prime-to-q
order p acting trivially on it, the extension adds a free orbit of cells
s_0 .. s_(p-1) in degree m + 1 with boundary c and a free orbit t_0 ..
t_(p-1) in degree m + 2 with boundary l - (s_i + s_(i+1) + ... +
s_(i+q-1)), indices mod p.  Acyclicity of the result is always checked by
computing reduced homology, never assumed: when gcd(p, q) > 1 the window
sums become degenerate and the construction genuinely fails.
"""

from dataclasses import dataclass
from math import gcd

from .errors import ConsistencyError, InputError, PreconditionError
from .exactlin import (ChainComplexZ, HomologyGroup, IntegerMatrix, homology,
                       homology_mod_p)


def moore_complex(m, q):
    """Cells pt (degree 0), c (degree m), l (degree m + 1); boundary of l is q.c."""
    if m < 1:
        raise InputError("degree m must be at least 1")
    if q < 2:
        raise InputError("torsion order q must be at least 2")
    ranks = {d: 0 for d in range(m + 2)}
    ranks[0] = 1
    ranks[m] = 1
    ranks[m + 1] = 1
    labels = {d: () for d in range(m + 2)}
    labels[0] = ("pt",)
    labels[m] = ("c",)
    labels[m + 1] = ("l",)
    boundaries = {}
    for d in range(1, m + 2):
        boundaries[d] = IntegerMatrix(ranks[d - 1], ranks[d])
    boundaries[m + 1] = IntegerMatrix.from_rows([[q]])
    return ChainComplexZ(ranks, boundaries, labels=labels)


def rp2_complex():
    """The classic three-cell model: moore_complex(1, 2)."""
    return moore_complex(1, 2)


class EquivariantComplex:
    """A chain complex with a degree-wise cell action of a cyclic group.

    orbits[d] lists ("fixed", label) and ("free", labels) descriptors; a
    free orbit has exactly p cells, cyclically shifted by the generator.
    The generator's permutation must commute with the boundary maps.
    """

    __slots__ = ("complex", "p", "orbits", "generator_perm")

    def __init__(self, complex, p, orbits):
        self.complex = complex
        self.p = p
        self.orbits = {d: tuple(orbits.get(d, ())) for d in complex.degrees()}
        perms = {}
        for d in complex.degrees():
            labels = complex.labels.get(d, ())
            index = {lab: i for i, lab in enumerate(labels)}
            seen = []
            perm = [None] * len(labels)
            for orbit in self.orbits[d]:
                kind, cells = orbit
                if kind == "fixed":
                    cells = (cells,) if isinstance(cells, str) else tuple(cells)
                    if len(cells) != 1:
                        raise InputError("fixed orbit must hold one cell")
                    perm[index[cells[0]]] = index[cells[0]]
                elif kind == "free":
                    cells = tuple(cells)
                    if len(cells) != p:
                        raise InputError("free orbit must hold exactly p cells")
                    for a, b in zip(cells, cells[1:] + cells[:1]):
                        perm[index[a]] = index[b]
                else:
                    raise InputError("unknown orbit kind %r" % (kind,))
                seen.extend(cells)
            if sorted(seen) != sorted(labels):
                raise InputError("orbits must partition the cells of degree %d" % d)
            perms[d] = tuple(perm)
        self.generator_perm = perms
        self._check_equivariance()

    def _check_equivariance(self):
        for d in self.complex.degrees():
            if d - 1 not in self.generator_perm:
                continue
            b = self.complex.boundary(d)
            pd = self.generator_perm[d]
            pd1 = self.generator_perm[d - 1]
            for j in range(b.cols):
                for i in range(b.rows):
                    if b[i, j] != b[pd1[i], pd[j]]:
                        raise InputError("boundary is not equivariant at "
                                         "degree %d" % d)

    def fixed_indices(self, d):
        out = []
        labels = self.complex.labels.get(d, ())
        index = {lab: i for i, lab in enumerate(labels)}
        for kind, cells in self.orbits.get(d, ()):
            if kind == "fixed":
                cell = cells if isinstance(cells, str) else cells[0]
                out.append(index[cell])
        return sorted(out)


def fixed_part(equiv):
    """Subcomplex spanned by the fixed cells, trimmed of empty end degrees.

    Boundaries of fixed cells must already lie in the fixed span; anything
    else means the orbit data is inconsistent.
    """
    c = equiv.complex
    idx = {d: equiv.fixed_indices(d) for d in c.degrees()}
    ranks = {d: len(idx[d]) for d in c.degrees()}
    labels = {d: tuple(c.labels[d][i] for i in idx[d]) for d in c.degrees()}
    boundaries = {}
    degs = c.degrees()
    for d in degs:
        if d == degs[0]:
            continue
        b = c.boundary(d)
        keep_rows = set(idx[d - 1])
        for j in idx[d]:
            for i in range(b.rows):
                if b[i, j] and i not in keep_rows:
                    raise ConsistencyError("boundary of a fixed cell leaves "
                                           "the fixed span at degree %d" % d)
        boundaries[d] = IntegerMatrix(ranks[d - 1], ranks[d],
                                      [[b[i, j] for j in idx[d]] for i in idx[d - 1]])
    keep = list(degs)
    while keep and ranks[keep[-1]] == 0:
        boundaries.pop(keep[-1], None)
        ranks.pop(keep[-1])
        labels.pop(keep[-1])
        keep.pop()
    while keep and ranks[keep[0]] == 0:
        d = keep.pop(0)
        ranks.pop(d)
        labels.pop(d)
        boundaries.pop(d, None)
        if keep:
            boundaries.pop(keep[0], None)
    return ChainComplexZ(ranks, boundaries, labels=labels)


def _augment(c):
    """Add Z in degree -1 with the all-ones augmentation out of degree 0."""
    ranks = dict(c.ranks)
    boundaries = dict(c.boundaries)
    labels = dict(c.labels)
    ranks[-1] = 1
    labels[-1] = ("*",)
    boundaries[0] = IntegerMatrix(1, ranks.get(0, 0), [[1] * ranks.get(0, 0)])
    return ChainComplexZ(ranks, boundaries, labels=labels, check=False)


def reduced_homology_of(c):
    return homology(_augment(c))


def verify_acyclic(c):
    """Whether all reduced homology of the complex vanishes."""
    if isinstance(c, EquivariantComplex):
        c = c.complex
    return all(g.is_trivial for g in reduced_homology_of(c).values())


@dataclass
class ExtensionResult:
    equivariant: EquivariantComplex
    acyclic: bool
    witness: dict  # nonzero reduced homology when the check fails

    @property
    def complex(self):
        return self.equivariant.complex


def cyclic_extension(m, q, p):
    """Extend moore_complex(m, q) by free orbits for a cyclic group of order p.

    Requires gcd(p, q) = 1.  The acyclicity of the result is verified and
    reported, not asserted; a failing check returns the offending homology.
    """
    if p < 2:
        raise InputError("group order p must be at least 2")
    base = moore_complex(m, q)
    if gcd(p, q) != 1:
        raise PreconditionError("gcd(p, q) must be 1, got gcd(%d, %d) = %d"
                                % (p, q, gcd(p, q)))
    ranks = dict(base.ranks)
    labels = {d: list(base.labels[d]) for d in base.degrees()}
    s_cells = ["s%d" % i for i in range(p)]
    t_cells = ["t%d" % i for i in range(p)]
    ranks[m + 1] += p
    labels[m + 1].extend(s_cells)
    ranks[m + 2] = p
    labels[m + 2] = t_cells
    boundaries = {d: base.boundary(d) for d in range(1, m + 1)}
    # l and every s_i kill c with multiplicity q and 1 respectively
    boundaries[m + 1] = IntegerMatrix.from_rows([[q] + [1] * p])
    # column of t_i: +1 on l, -1 on the window s_i, s_(i+1), ..., s_(i+q-1)
    # window entries accumulate: for q > p a cell can be hit more than once
    mat = IntegerMatrix(1 + p, p)
    for i in range(p):
        mat[0, i] = 1
        for off in range(q):
            r = 1 + (i + off) % p
            mat[r, i] = mat[r, i] - 1
    boundaries[m + 2] = mat
    total = ChainComplexZ(ranks, boundaries,
                          labels={d: tuple(v) for d, v in labels.items()})
    orbits = {0: (("fixed", "pt"),), m: (("fixed", "c"),),
              m + 1: (("fixed", "l"), ("free", tuple(s_cells))),
              m + 2: (("free", tuple(t_cells)),)}
    for d in range(1, m):
        orbits[d] = ()
    equiv = EquivariantComplex(total, p, orbits)
    hom = reduced_homology_of(total)
    witness = {d: g for d, g in hom.items() if not g.is_trivial}
    return ExtensionResult(equiv, not witness, witness)


def moore_mod_q_signature(m, q):
    """Mod-q homology dimensions of the Moore complex, for prime q."""
    return homology_mod_p(moore_complex(m, q), q)
