"""Equivariant Euler characteristics for K acting on a flag complex L.

The ambient group is the semidirect product of a finite p-group K with the
right-angled Artin group on L; its classifying-space Euler characteristic
decomposes over conjugacy classes of subgroups of K with exact rational
coefficients.  Two independent routes are implemented: the general
weighted-sum formula (euler_class) and a telescope for cyclic K
(euler_class_cyclic); they must agree on cyclic inputs.
"""

from fractions import Fraction
from math import comb

from .errors import InputError, PreconditionError
from .exactlin import prime_power_base
from .permgrp import (Subgroup, all_subgroups, conjugacy_classes_of_subgroups,
                      elementary_abelian_rank, is_cyclic,
                      is_elementary_abelian_any, normalizer, require_p_group)


class EulerClass:
    """A formal rational combination of cosets [G/H] over class representatives."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = {h: Fraction(c) for h, c in coefficients.items()}

    def entries(self):
        """(subgroup, coefficient) pairs, smallest subgroups first."""
        return sorted(self.coefficients.items(), key=lambda hc: (hc[0].order, hc[0].key))

    def coefficient(self, h):
        return self.coefficients.get(h, Fraction(0))

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coefficients.values())

    def __eq__(self, other):
        if not isinstance(other, EulerClass):
            return NotImplemented
        keys = set(self.coefficients) | set(other.coefficients)
        return all(self.coefficient(h) == other.coefficient(h) for h in keys)

    def __hash__(self):
        return hash(frozenset((h.key, c) for h, c in self.coefficients.items()))

    def format_text(self, include_zero=True):
        parts = []
        for h, c in self.entries():
            if c == 0 and not include_zero:
                continue
            parts.append((c, "[Γ/%s]" % h.describe()))
        if not parts:
            return "0"
        out = ["%s·%s" % (parts[0][0], parts[0][1])]
        for c, name in parts[1:]:
            sign = " + " if c >= 0 else " - "
            out.append("%s%s·%s" % (sign, abs(c), name))
        return "".join(out)

    def __repr__(self):
        return "EulerClass(%s)" % self.format_text()


def elementary_abelian_classes(k):
    """Conjugacy classes of elementary abelian subgroups, trivial included."""
    return [cls for cls in conjugacy_classes_of_subgroups(k)
            if cls.rep.is_trivial or is_elementary_abelian_any(cls.rep)]


def _chi_lookup(table, cls):
    if cls.rep in table:
        return table[cls.rep]
    for member in cls.members:
        if member in table:
            return table[member]
    raise InputError("chi table is missing the class of %s" % cls.rep.describe())


def free_coefficient(k, chi):
    """Weighted sum over elementary abelian classes of k.

    chi maps class representatives (any member works) to integers, usually
    Euler characteristics of centralizer pieces.  Each class of rank n for
    the prime p contributes (-1)^n p^(n choose 2) / |N_k(H)| times its chi
    value; the rank 0 and 1 classes carry no power of p.
    """
    require_p_group(k)
    total = Fraction(0)
    for cls in elementary_abelian_classes(k):
        h = cls.rep
        if h.is_trivial:
            weight = Fraction(1, len(k.elements))
        else:
            p = prime_power_base(h.order)
            n = elementary_abelian_rank(h, p)
            nrm = normalizer(k, h)
            weight = Fraction((-1) ** n * p ** comb(n, 2), nrm.order)
        total += weight * _chi_lookup(chi, cls)
    return total


def vanishing_identity(k):
    """Sum of the signed elementary abelian weights; zero for nontrivial k.

    This is free_coefficient with every chi value set to 1, which must
    vanish whenever k is a nontrivial p-group.
    """
    if len(k.elements) == 1:
        raise PreconditionError("identity holds only for nontrivial groups")
    require_p_group(k)
    classes = elementary_abelian_classes(k)
    return free_coefficient(k, {cls.rep: 1 for cls in classes})


def chi_fixed_table(action):
    """Euler characteristics of fixed subcomplexes, one per subgroup class."""
    action.require_admissible()
    table = {}
    for cls in conjugacy_classes_of_subgroups(action.group):
        table[cls.rep] = action.fixed_subcomplex(cls.rep).euler_characteristic()
    return table


def euler_class_coefficient(action, h):
    """Coefficient of the class of h; any member of the class may be passed.

    With W the quotient of the normalizer of h by h acting on the fixed
    complex of h: if W is trivial the coefficient is 1 - chi(fixed);
    otherwise it is the free coefficient of W against the table of
    1 - chi of the W-fixed complexes.
    """
    action.require_admissible()
    k = action.group
    if not isinstance(h, Subgroup):
        if h is not k:
            raise InputError("h must be a subgroup of the acting group")
        h = k.whole()
    n = normalizer(k, h)
    if n.order == h.order:
        fixed = action.fixed_subcomplex(h)
        return Fraction(1 - fixed.euler_characteristic())
    qact = action.quotient_action(h)
    w = qact.group
    table = {}
    for cls in elementary_abelian_classes(w):
        fixed = qact.fixed_subcomplex(cls.rep)
        table[cls.rep] = 1 - fixed.euler_characteristic()
    return free_coefficient(w, table)


def euler_class(action):
    """Equivariant Euler class of a p-group action, over all subgroup classes."""
    action.require_admissible()
    require_p_group(action.group)
    coeffs = {}
    for cls in conjugacy_classes_of_subgroups(action.group):
        coeffs[cls.rep] = euler_class_coefficient(action, cls.rep)
    return EulerClass(coeffs)


def euler_class_cyclic(action):
    """Telescoped Euler class for a cyclic p-group K = <x> of order p^n.

    With K_i = <x^(p^i)>: the top class K_0 = K carries 1 - chi(fixed of K);
    each K_i below carries (chi of the fixed complex of K_(i-1) minus chi
    of the fixed complex of K_i) / p^i.
    """
    action.require_admissible()
    k = action.group
    p = require_p_group(k)
    if not is_cyclic(k):
        raise PreconditionError("group of order %d is not cyclic" % k.order)
    if p is None:
        fixed = action.fixed_subcomplex(k.whole())
        return EulerClass({k.whole(): Fraction(1 - fixed.euler_characteristic())})
    x = min((g for g in k.elements if g.order() == k.order), key=lambda g: g.key)
    n = 0
    m = k.order
    while m > 1:
        m //= p
        n += 1
    towers = [k.subgroup_generated([x ** (p ** i)]) for i in range(n + 1)]
    chis = [action.fixed_subcomplex(t).euler_characteristic() for t in towers]
    coeffs = {towers[0]: Fraction(1 - chis[0])}
    for i in range(1, n + 1):
        coeffs[towers[i]] = Fraction(chis[i - 1] - chis[i], p ** i)
    return EulerClass(coeffs)


def euler_class_cyclic_abstract(table):
    """Evaluate the cyclic-case formula from user-supplied characteristics.

    table is a list of (label, chi_weyl, q_terms) triples, one per class:
    chi_weyl is the Euler characteristic attached to the class itself and
    q_terms lists (q_label, chi_value) pairs for the elementary abelian
    classes below it.  Returns [(label, coefficient)] in input order.
    """
    out = []
    for entry in table:
        try:
            label, chi_w, q_terms = entry
        except (TypeError, ValueError):
            raise InputError("table entries must be (label, chi, q_terms) triples")
        if chi_w is None:
            raise InputError("missing chi value for %r" % (label,))
        coeff = Fraction(chi_w)
        for q_label, chi_q in q_terms:
            if chi_q is None:
                raise InputError("missing chi value for %r under %r" % (q_label, label))
            coeff -= Fraction(chi_q)
        out.append((label, coeff))
    return out


class AcyclicityReport:
    """Outcome of the vertex-cover criterion for one-dimensional acyclicity."""

    __slots__ = ("holds", "uncovered", "scope")

    def __init__(self, holds, uncovered, scope):
        self.holds = holds
        self.uncovered = tuple(uncovered)
        self.scope = scope

    def __repr__(self):
        if self.holds:
            return "AcyclicityReport(holds, scope=%s)" % self.scope
        return "AcyclicityReport(fails, uncovered=%r)" % (list(self.uncovered),)


def acyclicity_condition(action, force=False):
    """Check that every vertex is fixed by a nontrivial proper subgroup of K.

    By default K must be elementary abelian of rank 2 (the theorem scope);
    with force any p-group is accepted and the report is marked as remark
    scope.  Returns the verdict and the sorted uncovered vertices.
    """
    action.require_admissible()
    k = action.group
    p = require_p_group(k)
    if p is None:
        raise PreconditionError("acting group is trivial")
    if not force:
        if not (is_elementary_abelian_any(k.whole())
                and elementary_abelian_rank(k.whole(), p) == 2):
            raise PreconditionError(
                "criterion needs an elementary abelian group of rank 2; "
                "pass force for the general p-group variant")
        scope = "theorem"
    else:
        scope = "remark"
    proper = [h for h in all_subgroups(k)
              if not h.is_trivial and h.order < k.order]
    uncovered = []
    for v in action.complex.vertices:
        stab = set(action.vertex_stabilizer(v).key)
        if not any(set(q.key) <= stab for q in proper):
            uncovered.append(v)
    return AcyclicityReport(not uncovered, sorted(uncovered), scope)
