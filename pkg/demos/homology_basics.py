"""Exact homology from simplicial data: spheres, a projective plane, links."""

from equichar import SimplicialComplex, smith_normal_form, IntegerMatrix

# the octahedron is the flag complex on K_{2,2,2}: every pair of vertices
# is joined except the three antipodal ones
verts = ["1", "2", "3", "4", "5", "6"]
antipodal = {("1", "6"), ("2", "5"), ("3", "4")}
edges = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]
         if (a, b) not in antipodal]
octa = SimplicialComplex.flag_from_graph(verts, edges)

print("octahedron f-vector:", octa.f_vector())
print("octahedron Euler characteristic:", octa.euler_characteristic())
for d, g in sorted(octa.reduced_homology().items()):
    print("  reduced H_%d = %s" % (d, g))

# the link of any vertex is an equatorial 4-cycle
link = octa.link(("1",))
print("link of a vertex: f-vector %s, reduced H_1 = %s"
      % (link.f_vector(), link.reduced_homology()[1]))

# a 6-vertex triangulation of the real projective plane has 2-torsion
rp2 = SimplicialComplex.from_maximal_simplices(
    [str(i) for i in range(1, 7)],
    ["125", "126", "134", "136", "145", "234", "235", "246", "356", "456"])
print("projective plane reduced homology:")
for d, g in sorted(rp2.reduced_homology().items()):
    if not g.is_trivial:
        print("  degree %d: %s" % (d, g))
print("mod-2 betti numbers:", rp2.reduced_homology_mod_p(2))

# the homology engine is Smith normal form over the integers
diag, rank = smith_normal_form(IntegerMatrix.from_rows([[2, 4], [6, 8]]))
print("SNF diagonal of [[2,4],[6,8]]:", diag, "rank", rank)

# barycentric subdivision preserves the homeomorphism type
bary = octa.barycentric_subdivision()
print("subdivided octahedron: %d vertices, still a 2-sphere: H_2 = %s"
      % (len(bary.vertices), bary.reduced_homology()[2]))
