"""Killing the homology of a Moore complex with free orbits of cells."""

from equichar import (cyclic_extension, fixed_part, moore_complex,
                      reduced_homology_of, verify_acyclic)

# three cells: a point, c in degree m, l in degree m+1 with boundary q.c
moore = moore_complex(1, 2)
print("Moore complex M(Z/2, 1):", {d: moore.rank(d) for d in moore.degrees()})
print("reduced homology:", {d: str(g) for d, g in
                            reduced_homology_of(moore).items()
                            if not g.is_trivial})

# a cyclic group of coprime order acts trivially on the Moore cells; adding
# one free orbit of s-cells and one of t-cells makes everything acyclic,
# while the fixed cells still form the original Moore complex
for m, q, p in ((1, 2, 3), (1, 2, 5), (2, 2, 3), (1, 3, 2)):
    res = cyclic_extension(m, q, p)
    fixed = fixed_part(res.equivariant)
    print("extension (m=%d, q=%d, p=%d): acyclic %s, fixed part is M(Z/%d,%d): %s"
          % (m, q, p, res.acyclic, q, m, fixed == moore_complex(m, q)))

print("verify_acyclic on the bare Moore complex:", verify_acyclic(moore))

# coprimality is essential: with gcd(p, q) > 1 the window boundaries
# degenerate, and the constructor refuses rather than report a bogus result
try:
    cyclic_extension(1, 2, 2)
except Exception as exc:
    print("p = q = 2 is rejected:", exc)
