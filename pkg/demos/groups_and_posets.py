"""Subgroup lattices, their order complexes, and two poset comparisons."""

from equichar import (Permutation, all_subgroups, group_from_generators,
                      conjugacy_classes_of_subgroups, subgroup_poset,
                      quillen_thevenaz_check, weyl_poset_check)

PTS = ("1", "2", "3", "4")
d8 = group_from_generators(PTS, [Permutation.from_cycles(PTS, "(1 2 3 4)"),
                                 Permutation.from_cycles(PTS, "(1 3)")])

print("dihedral group of order", d8.order)
print("subgroups:", [h.order for h in all_subgroups(d8)])
for cls in conjugacy_classes_of_subgroups(d8):
    print("  class of %s (size %d)" % (cls.rep.describe(), cls.size))

# four named filters produce four subgroup posets
for which in ("nontrivial", "nilpotent", "elementary-abelian",
              "proper-nontrivial"):
    poset = subgroup_poset(d8, which)
    print("%-22s %2d elements, augmented Euler %d"
          % (which, len(poset), poset.augmented_euler()))

# the nilpotent and elementary abelian posets carry the same reduced
# homology; for a symmetric group the posets differ but the homology agrees
s4 = group_from_generators(PTS, [Permutation.from_cycles(PTS, "(1 2)"),
                                 Permutation.from_cycles(PTS, "(1 2 3 4)")])
res = quillen_thevenaz_check(s4)
print("S4 nilpotent poset: %d elements, elementary abelian: %d, homology %s"
      % (res.left_size, res.right_size,
         "matches" if res.equal else "differs"))

# for a p-group, the subgroups strictly above H look like the nontrivial
# subgroup poset of the quotient N(H)/H
for cls in conjugacy_classes_of_subgroups(d8):
    rep = weyl_poset_check(d8, cls.rep)
    print("above %-12s left %d right %d %s"
          % (cls.rep.describe(), rep.comparison.left_size,
             rep.comparison.right_size,
             "ok" if rep.comparison.equal else "MISMATCH"))
