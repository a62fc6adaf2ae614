"""From a non-duality complex to an equivariant obstruction, end to end.

A flag complex whose Artin group is a duality group must be Cohen-Macaulay.
Doubling a sphere along a carefully chosen subcomplex produces a complex
that IS Cohen-Macaulay while the fixed complex of the swap is not, so the
obstruction only appears equivariantly.
"""

from equichar import (SimplicialComplex, cohen_macaulay, double_along,
                      duality_obstruction_scan, find_full_subcomplex_isomorphic,
                      flag_duality, graded_cohomology_profile)

# two triangles sharing one vertex: flag, contractible, but not CM
t = SimplicialComplex.from_maximal_simplices(
    ["u", "v1", "v2", "w1", "w2"],
    [("u", "v1", "w1"), ("u", "v2", "w2")])
report = cohen_macaulay(t)
print("T Cohen-Macaulay:", report.is_cm)
for s, d, g in report.failures:
    print("  failure: link of {%s} has %s in degree %d" % (",".join(s), g, d))

prof = graded_cohomology_profile(t)
print("graded cohomology profile of T:")
for k in prof.degrees_with_entries():
    for s, g in prof.entries[k]:
        print("  degree %d: {%s} contributes %s" % (k, ",".join(s), g))

# the barycentric subdivision of the tetrahedron boundary is a flag
# 2-sphere containing a full copy of T
tetra = SimplicialComplex.from_maximal_simplices(
    ["a", "b", "c", "d"],
    [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")])
sphere = tetra.barycentric_subdivision()
emb = find_full_subcomplex_isomorphic(sphere, t)
print("copy of T inside the subdivided sphere:")
for k in sorted(emb.mapping):
    print("  %s -> %s" % (k, emb.mapping[k]))

doubled, swap = double_along(sphere, emb.mapping.values())
print("doubled complex: %d vertices, flag: %s"
      % (len(doubled.vertices), doubled.is_flag()))
print("doubled complex is a duality complex:",
      flag_duality(doubled).is_duality)

# the swap fixes exactly the glued copy of T, which is not CM
scan = duality_obstruction_scan(swap)
for cls in scan.classes:
    state = "OBSTRUCTED" if cls.obstructed else "passes"
    print("  class %-24s %s" % (cls.subgroup.describe(), state))
