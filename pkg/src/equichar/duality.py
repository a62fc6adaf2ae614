"""Cohen-Macaulay tests, duality criteria, and the doubling construction.

A complex of dimension n is Cohen-Macaulay when the reduced homology of
every link (the empty simplex included) is concentrated in top degree
n - dim(simplex) - 1.  For a flag complex this decides whether the
associated right-angled Artin group is a duality group.  The graded
cohomology profile records, for each degree k, which simplices contribute
reduced link cohomology in degree k - dim(simplex) - 2; for a duality
group everything lands in a single k.
"""

from dataclasses import dataclass

from .errors import InputError, PreconditionError
from .permgrp import conjugacy_classes_of_subgroups, group_from_generators
from .simp import GroupAction, Permutation, SimplicialComplex


@dataclass
class CMReport:
    dimension: int
    failures: tuple  # (simplex, degree, HomologyGroup) triples

    @property
    def is_cm(self):
        return not self.failures


def _links_with_empty(x):
    yield (), x
    for s in sorted(x.simplices):
        yield s, x.link(s)


def cohen_macaulay(x):
    """Check top-degree concentration of all link homologies."""
    if x.is_empty:
        raise InputError("the empty complex has no dimension to test against")
    n = x.dim
    failures = []
    for s, lk in _links_with_empty(x):
        allowed = n - len(s)
        hom = lk.reduced_homology()
        for d in sorted(hom):
            if d != allowed and not hom[d].is_trivial:
                failures.append((s, d, hom[d]))
    return CMReport(n, tuple(failures))


@dataclass
class DualityReport:
    is_duality: bool
    cm: CMReport


def flag_duality(x):
    """Whether the Artin group of the flag complex x is a duality group."""
    if not x.is_flag():
        raise PreconditionError("complex is not flag")
    report = cohen_macaulay(x)
    return DualityReport(report.is_cm, report)


@dataclass
class GradedProfile:
    max_degree: int
    entries: dict  # degree -> tuple of (simplex, HomologyGroup)

    @property
    def all_torsion_free(self):
        return all(group.is_torsion_free
                   for row in self.entries.values() for _, group in row)

    def degrees_with_entries(self):
        return sorted(d for d, row in self.entries.items() if row)


def graded_cohomology_profile(x, max_degree=None):
    """Reduced link cohomology contributions per global degree.

    For each simplex s (the empty one included) and degree k up to
    max_degree (default dim + 1), record the reduced cohomology of the
    link of s in degree k - dim(s) - 2 when it is nonzero.
    """
    if x.is_empty:
        raise InputError("profile of the empty complex is empty; nothing to do")
    if max_degree is None:
        max_degree = x.dim + 1
    if max_degree < 0:
        raise InputError("max_degree must be non-negative")
    rows = {k: [] for k in range(max_degree + 1)}
    for s, lk in _links_with_empty(x):
        coh = lk.reduced_cohomology()
        for k in range(max_degree + 1):
            d = k - len(s) - 1
            group = coh.get(d)
            if group is not None and not group.is_trivial:
                rows[k].append((s, group))
    entries = {k: tuple(sorted(row, key=lambda sg: sg[0])) for k, row in rows.items()}
    return GradedProfile(max_degree, entries)


def double_along(x, a):
    """Two copies of x glued along a full subcomplex, plus the swap action.

    a may be a SimplicialComplex (checked to be full in x) or an iterable
    of vertices.  Second-copy vertices get a trailing apostrophe.  The swap
    is always admissible: no simplex meets both copies outside the glued
    part, so a setwise-fixed simplex lies in it.
    """
    if isinstance(a, SimplicialComplex):
        averts = set(a.vertices)
        if not averts <= set(x.vertices):
            raise InputError("subcomplex vertices do not lie in the complex")
        if x.full_subcomplex(averts) != a:
            raise PreconditionError("subcomplex is not full; doubling would "
                                    "break flagness")
    else:
        averts = set(a)
        if not averts <= set(x.vertices):
            raise InputError("subset contains undeclared vertices")
    rename = {}
    for v in x.vertices:
        rename[v] = v if v in averts else v + "'"
        if rename[v] != v and rename[v] in x.vertices:
            raise InputError("vertex name %r collides with the copy" % rename[v])
    verts = list(x.vertices) + [rename[v] for v in x.vertices if v not in averts]
    simplices = set(x.simplices)
    for s in x.simplices:
        simplices.add(tuple(sorted(rename[v] for v in s)))
    doubled = SimplicialComplex(verts, simplices, check=False)
    swap = {}
    for v in x.vertices:
        swap[v] = rename[v]
        swap[rename[v]] = v
    gen = Permutation(doubled.vertices, swap)
    group = group_from_generators(doubled.vertices, [gen])
    return doubled, GroupAction(doubled, group)


@dataclass
class ClassObstruction:
    subgroup: object
    fixed_vertices: tuple
    cm: CMReport | None
    obstructed: bool
    note: str


@dataclass
class ObstructionReport:
    classes: tuple

    @property
    def obstructed_at(self):
        return tuple(c.subgroup for c in self.classes if c.obstructed)

    @property
    def any_obstruction(self):
        return any(c.obstructed for c in self.classes)


def duality_obstruction_scan(action):
    """Scan fixed complexes of all subgroup classes for Cohen-Macaulay failures.

    A non-CM fixed complex obstructs equivariant duality; a clean scan
    proves nothing and is reported as such.  An empty fixed complex passes
    (the associated centralizer factor is trivial).
    """
    action.require_admissible()
    out = []
    for cls in conjugacy_classes_of_subgroups(action.group):
        h = cls.rep
        fixed = action.fixed_subcomplex(h)
        if fixed.is_empty:
            out.append(ClassObstruction(h, (), None, False,
                                        "empty fixed complex; trivial factor"))
            continue
        report = cohen_macaulay(fixed)
        note = "" if report.is_cm else "fixed complex is not Cohen-Macaulay"
        out.append(ClassObstruction(h, fixed.vertices, report,
                                    not report.is_cm, note))
    return ObstructionReport(tuple(out))
