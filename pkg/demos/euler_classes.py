"""Equivariant Euler classes of p-group actions, computed two ways."""

from equichar import (GroupAction, Permutation, SimplicialComplex,
                      acyclicity_condition, euler_class, euler_class_cyclic,
                      group_from_generators, vanishing_identity)


def action(x, *cycles):
    gens = [Permutation.from_cycles(x.vertices, t) for t in cycles]
    return GroupAction(x, group_from_generators(x.vertices, gens))


# two disjoint edges with the swap: the smallest action with a nonzero class
edges = SimplicialComplex.flag_from_graph(
    ["1", "2", "3", "4"], [("1", "2"), ("3", "4")])
act = action(edges, "(1 3)(2 4)")
print("two disjoint edges, C2 swap:")
print("  general formula:", euler_class(act).format_text())
print("  cyclic telescope:", euler_class_cyclic(act).format_text())

# a star K_{1,4}: every fixed complex is a subtree, so every class vanishes
star = SimplicialComplex.flag_from_graph(
    ["1", "2", "3", "4", "5"],
    [("1", "5"), ("2", "5"), ("3", "5"), ("4", "5")])
for cycles in (("(1 3)",), ("(1 2 3 4)",), ("(1 2 3 4)", "(1 3)")):
    cls = euler_class(action(star, *cycles))
    print("star with %-22s is zero: %s" % (" ".join(cycles), cls.is_zero))

# the class coefficients rest on a rational identity over the elementary
# abelian subgroup classes; it vanishes for every nontrivial p-group
d8 = group_from_generators(("1", "2", "3", "4"),
                           [Permutation.from_cycles(("1", "2", "3", "4"), t)
                            for t in ("(1 2 3 4)", "(1 3)")])
print("vanishing identity for the dihedral group:", vanishing_identity(d8))

# acyclicity criterion: every vertex must be fixed by a nontrivial proper
# subgroup; one Klein group covers the star, the other leaves the leaves bare
for cycles in (("(1 2)", "(3 4)"), ("(1 2)(3 4)", "(1 3)(2 4)")):
    report = acyclicity_condition(action(star, *cycles))
    verdict = "holds" if report.holds else (
        "fails, uncovered: %s" % ", ".join(report.uncovered))
    print("criterion for <%s>: %s" % (", ".join(cycles), verdict))
