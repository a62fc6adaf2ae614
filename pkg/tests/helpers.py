"""Shared builders and independent oracles for the test suite.

The oracles recompute ranks, minors, closures, chain counts and betti
numbers from first principles so that library results are checked against
code that shares none of the library's internals.
"""

import re
from fractions import Fraction
from itertools import combinations
from math import gcd

from equichar import Permutation, SimplicialComplex, group_from_generators


# ---------------------------------------------------------------- groups


def group(*cycle_texts):
    pts = sorted({c for t in cycle_texts for c in re.findall(r"\w+", t)},
                 key=lambda s: (len(s), s))
    gens = [Permutation.from_cycles(pts, t) for t in cycle_texts]
    return group_from_generators(pts, gens)


def group_on(x, *cycle_texts):
    """Group of permutations of the vertex set of the complex x."""
    pts = x.vertices
    gens = [Permutation.from_cycles(pts, t) for t in cycle_texts]
    return group_from_generators(pts, gens)


def cyclic(n):
    return group("(%s)" % " ".join(str(i) for i in range(1, n + 1)))


def elem_ab(p, n):
    texts = []
    start = 1
    for _ in range(n):
        texts.append("(%s)" % " ".join(str(i) for i in range(start, start + p)))
        start += p
    return group(*texts)


def d8():
    return group("(1 2 3 4)", "(1 3)")


def q8():
    return group("(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)")


def c4xc2():
    return group("(1 2 3 4)", "(5 6)")


def s3():
    return group("(1 2)", "(1 2 3)")


def s4():
    return group("(1 2)", "(1 2 3 4)")


def a4():
    return group("(1 2 3)", "(1 2)(3 4)")


def d12():
    return group("(1 2 3 4 5 6)", "(2 6)(3 5)")


# p-groups named in the vanishing-identity and poset criteria
def pgroup_corpus():
    return {
        "C2": cyclic(2), "C4": cyclic(4), "C8": cyclic(8),
        "C2xC2": elem_ab(2, 2), "C2xC2xC2": elem_ab(2, 3),
        "C4xC2": c4xc2(), "D8": d8(), "Q8": q8(),
        "C3": cyclic(3), "C9": cyclic(9), "C3xC3": elem_ab(3, 2),
    }


# ------------------------------------------------------------- complexes


def two_edges():
    return SimplicialComplex.flag_from_graph(
        ["1", "2", "3", "4"], [("1", "2"), ("3", "4")])


def star5():
    return SimplicialComplex.flag_from_graph(
        ["1", "2", "3", "4", "5"],
        [("1", "5"), ("2", "5"), ("3", "5"), ("4", "5")])


def t_complex():
    return SimplicialComplex.from_maximal_simplices(
        ["u", "v1", "v2", "w1", "w2"],
        [("u", "v1", "w1"), ("u", "v2", "w2")])


def octahedron():
    verts = ["1", "2", "3", "4", "5", "6"]
    skip = {frozenset(("1", "6")), frozenset(("2", "5")), frozenset(("3", "4"))}
    edges = [(a, b) for a, b in combinations(verts, 2)
             if frozenset((a, b)) not in skip]
    return SimplicialComplex.flag_from_graph(verts, edges)


def tetra_boundary():
    return SimplicialComplex.from_maximal_simplices(
        ["a", "b", "c", "d"],
        [("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")])


def rp2_triangulation():
    facets = ["125", "126", "134", "136", "145", "234", "235", "246",
              "356", "456"]
    return SimplicialComplex.from_maximal_simplices(
        [str(i) for i in range(1, 7)], [tuple(f) for f in facets])


def complex_corpus():
    return {
        "two_edges": two_edges(), "star5": star5(), "T": t_complex(),
        "octahedron": octahedron(), "tetra_boundary": tetra_boundary(),
        "rp2": rp2_triangulation(),
    }


# ----------------------------------------------------- linear algebra oracles


def rational_rank(rows):
    """Rank over Q by plain Gaussian elimination with Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = Fraction(1) / m[rank][c]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(nr):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def modp_rank(rows, p):
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for i in range(nr):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


def det_int(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * det_int(minor)
    return total


def minors_gcd(rows, k):
    """gcd of all k x k minors; 0 when every minor vanishes."""
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    g = 0
    for ri in combinations(range(nr), k):
        for ci in combinations(range(nc), k):
            sub = [[rows[i][j] for j in ci] for i in ri]
            g = gcd(g, det_int(sub))
    return g


def matrix_rows(m):
    return [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]


# ------------------------------------------------------------ group oracles


def brute_subgroups(g):
    """Element-key sets of all subgroups, via closures of subsets of size <= 3.

    Valid for the test groups, whose subgroups all need at most three
    generators; closure is done by repeated pairwise multiplication.
    """
    elems = list(g.elements)
    found = set()
    for r in (0, 1, 2, 3):
        for combo in combinations(elems, r):
            cur = {Permutation.identity(g.points)}
            cur.update(combo)
            while True:
                nxt = {a * b for a in cur for b in cur}
                if nxt <= cur:
                    break
                cur |= nxt
            found.add(frozenset(x.key for x in cur))
    return found


# ------------------------------------------------------------ poset oracles


def count_chains(n, lt_pairs):
    """Number of k-element chains for each k, by DFS over the raw relation."""
    above = {i: [j for j in range(n) if (i, j) in lt_pairs] for i in range(n)}
    counts = {}

    def extend(i, length):
        counts[length] = counts.get(length, 0) + 1
        for j in above[i]:
            extend(j, length + 1)

    for i in range(n):
        extend(i, 1)
    return counts


def mobius_euler(n, lt_pairs):
    """Reduced Euler characteristic of the order complex via the Mobius
    function of the poset with a bottom and top adjoined: chi-tilde equals
    mu(bottom, top).  No chain enumeration involved."""
    below = {i: [j for j in range(n) if (j, i) in lt_pairs] for i in range(n)}
    mu = {}
    order = sorted(range(n), key=lambda i: len(below[i]))
    for i in order:
        mu[i] = -1 - sum(mu[j] for j in below[i])
    return -1 - sum(mu.values())


# -------------------------------------------------------- simplicial oracles


def simplicial_reduced_betti(x, d):
    """Reduced betti number recomputed from the face data alone."""
    by_dim = {-1: [()]}
    for s in x.simplices:
        by_dim.setdefault(len(s) - 1, []).append(s)
    for k in by_dim:
        by_dim[k] = sorted(by_dim[k])

    def boundary(k):
        rows = by_dim.get(k - 1, [])
        cols = by_dim.get(k, [])
        idx = {s: i for i, s in enumerate(rows)}
        m = [[0] * len(cols) for _ in rows]
        for j, s in enumerate(cols):
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                m[idx[face]][j] = (-1) ** i
        return m

    cells = len(by_dim.get(d, []))
    return cells - rational_rank(boundary(d)) - rational_rank(boundary(d + 1))
