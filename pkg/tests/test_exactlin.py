"""Integer linear algebra: Smith normal form, homology engines."""

import random

import pytest

import helpers
from equichar import (ChainComplexZ, ConsistencyError, HomologyGroup,
                      InputError, IntegerMatrix, cohomology, homology,
                      homology_mod_p, is_prime, prime_power_base,
                      rank_mod_p, smith_normal_form)


def test_is_prime():
    assert [n for n in range(2, 30) if is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert not is_prime(0)
    assert not is_prime(-7)


def test_prime_power_base():
    assert prime_power_base(8) == 2
    assert prime_power_base(27) == 3
    assert prime_power_base(5) == 5
    assert prime_power_base(12) is None
    assert prime_power_base(1) is None


def test_snf_single_entry():
    diag, rank = smith_normal_form(IntegerMatrix.from_rows([[2]]))
    assert diag == [2]
    assert rank == 1


def test_snf_empty():
    diag, rank = smith_normal_form(IntegerMatrix(0, 0))
    assert diag == []
    assert rank == 0


def test_snf_forces_divisibility():
    diag, rank = smith_normal_form(IntegerMatrix.from_rows([[2, 0], [0, 3]]))
    assert diag == [1, 6]
    assert rank == 2


def test_snf_zero_matrix():
    diag, rank = smith_normal_form(IntegerMatrix(3, 2))
    assert rank == 0
    assert diag == [0, 0]


def _random_matrices():
    rng = random.Random(20240811)
    out = []
    for _ in range(40):
        nr = rng.randrange(1, 5)
        nc = rng.randrange(1, 6)
        rows = [[rng.randrange(-9, 10) for _ in range(nc)] for _ in range(nr)]
        out.append(rows)
    return out


def test_snf_divisibility_chain_and_rank():
    for rows in _random_matrices():
        diag, rank = smith_normal_form(IntegerMatrix.from_rows(rows))
        nonzero = [d for d in diag if d]
        assert len(nonzero) == rank
        assert all(d > 0 for d in nonzero)
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        assert diag[rank:] == [0] * (len(diag) - rank)
        assert rank == helpers.rational_rank(rows)


def test_snf_matches_determinantal_divisors():
    for rows in _random_matrices():
        diag, rank = smith_normal_form(IntegerMatrix.from_rows(rows))
        prod = 1
        for k in range(1, rank + 1):
            prod *= diag[k - 1]
            assert prod == helpers.minors_gcd(rows, k)


def test_rank_mod_p():
    m = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    assert rank_mod_p(m, 2) == 0
    assert rank_mod_p(m, 3) == 2
    with pytest.raises(InputError):
        rank_mod_p(m, 4)


def test_matrix_multiplication_and_transpose():
    a = IntegerMatrix.from_rows([[1, 2], [3, 4]])
    b = IntegerMatrix.from_rows([[0, 1], [1, 0]])
    assert (a * b) == IntegerMatrix.from_rows([[2, 1], [4, 3]])
    assert a.transpose() == IntegerMatrix.from_rows([[1, 3], [2, 4]])


def test_homology_group_repr():
    assert repr(HomologyGroup()) == "0"
    assert repr(HomologyGroup(2)) == "Z^2"
    assert repr(HomologyGroup(1, (2,))) == "Z + Z/2"
    assert HomologyGroup(0, (2, 4)).is_trivial is False
    assert HomologyGroup().is_trivial is True


def rp2_cells():
    return ChainComplexZ(
        {0: 1, 1: 1, 2: 1},
        {1: IntegerMatrix.from_rows([[0]]), 2: IntegerMatrix.from_rows([[2]])})


def test_rp2_cellular_homology():
    h = homology(rp2_cells())
    assert h[0] == HomologyGroup(1)
    assert h[1] == HomologyGroup(0, (2,))
    assert h[2] == HomologyGroup()


def test_rp2_cellular_cohomology():
    h = cohomology(rp2_cells())
    assert h[0] == HomologyGroup(1)
    assert h[1] == HomologyGroup()
    assert h[2] == HomologyGroup(0, (2,))


def test_rp2_mod_p():
    assert homology_mod_p(rp2_cells(), 2) == {0: 1, 1: 1, 2: 1}
    assert homology_mod_p(rp2_cells(), 3) == {0: 1, 1: 0, 2: 0}
    with pytest.raises(InputError):
        homology_mod_p(rp2_cells(), 6)


def test_zero_complex():
    c = ChainComplexZ({0: 0, 1: 0}, {1: IntegerMatrix(0, 0)})
    assert all(g.is_trivial for g in homology(c).values())
    assert all(v == 0 for v in homology_mod_p(c, 2).values())


def test_boundary_composition_checked():
    with pytest.raises(ConsistencyError):
        ChainComplexZ(
            {0: 1, 1: 1, 2: 1},
            {1: IntegerMatrix.from_rows([[1]]),
             2: IntegerMatrix.from_rows([[1]])})


def test_boundary_shape_checked():
    with pytest.raises(InputError):
        ChainComplexZ({0: 2, 1: 1}, {1: IntegerMatrix.from_rows([[1]])})
    with pytest.raises(InputError):
        ChainComplexZ({0: 1, 2: 1}, {2: IntegerMatrix.from_rows([[1]])})


def test_homology_label_permutation_invariance():
    star = helpers.star5()
    h = star.chain_complex(augmented=True)
    relabeled = star.relabel({"1": "z", "2": "y", "3": "x", "4": "w", "5": "m"})
    k = relabeled.chain_complex(augmented=True)
    assert homology(h) == homology(k)


def test_universal_coefficients_on_cell_corpus():
    complexes = [rp2_cells()]
    for x in helpers.complex_corpus().values():
        complexes.append(x.chain_complex())
        complexes.append(x.chain_complex(augmented=True))
    for c in complexes:
        h = homology(c)
        for p in (2, 3, 5):
            dims = homology_mod_p(c, p)
            for d in c.degrees():
                expected = (h[d].betti
                            + sum(1 for t in h[d].torsion if t % p == 0)
                            + sum(1 for t in h.get(d - 1, HomologyGroup()).torsion
                                  if t % p == 0))
                assert dims[d] == expected


def test_euler_poincare_on_corpus():
    for x in helpers.complex_corpus().values():
        c = x.chain_complex()
        h = homology(c)
        lhs = sum((-1) ** d * c.rank(d) for d in c.degrees())
        rhs = sum((-1) ** d * h[d].betti for d in c.degrees())
        assert lhs == rhs == x.euler_characteristic()
