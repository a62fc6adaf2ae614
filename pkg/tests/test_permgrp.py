"""Permutation groups: enumeration, subgroup lattice, quotients, predicates."""

import pytest

import helpers
from equichar import (InputError, Permutation, QuotientGroup,
                      ResourceLimitError, Subgroup, all_subgroups, center,
                      centralizer, conjugacy_classes_of_subgroups,
                      elementary_abelian_rank, group_from_generators,
                      is_abelian, is_cyclic, is_elementary_abelian,
                      is_elementary_abelian_any, is_nilpotent, is_normal,
                      is_p_group, normalizer, quotient)

PTS = ("1", "2", "3", "4")


def perm(text, points=PTS):
    return Permutation.from_cycles(points, text)


def test_cycle_parsing_and_printing():
    g = perm("(1 2)(3 4)")
    assert g("1") == "2" and g("3") == "4"
    assert str(g) == "(1 2)(3 4)"
    assert str(perm("(1 3)")) == "(1 3)"
    assert str(Permutation.identity(PTS)) == "()"
    assert perm("()") == Permutation.identity(PTS)


def test_cycle_parsing_rejects_garbage():
    with pytest.raises(InputError):
        perm("(1 2")
    with pytest.raises(InputError):
        perm("(1 5)")
    with pytest.raises(InputError):
        perm("(1 2)(2 3)")


def test_composition_order():
    a = perm("(1 2)")
    b = perm("(2 3)")
    # (a * b)(x) = a(b(x)): 3 -> 2 -> 1
    assert (a * b)("3") == "1"
    assert (b * a)("3") == "2"


def test_powers_inverse_order():
    r = perm("(1 2 3 4)")
    assert r ** 2 == perm("(1 3)(2 4)")
    assert r ** -1 == perm("(1 4 3 2)")
    assert r ** 0 == Permutation.identity(PTS)
    assert r.order() == 4
    assert perm("(1 2)(3 4)").order() == 2


def test_group_closure_and_membership():
    g = helpers.d8()
    assert g.order == 8
    assert perm("(1 3)") in g
    assert perm("(1 2)") not in g


def test_closure_bound_enforced():
    pts = tuple(str(i) for i in range(1, 8))
    gens = [Permutation.from_cycles(pts, "(1 2 3 4 5 6 7)"),
            Permutation.from_cycles(pts, "(1 2)")]
    with pytest.raises(ResourceLimitError):
        group_from_generators(pts, gens, max_order=100)


def test_d8_subgroup_lattice():
    g = helpers.d8()
    subs = all_subgroups(g)
    assert len(subs) == 10
    assert sorted(h.order for h in subs) == [1, 2, 2, 2, 2, 2, 4, 4, 4, 8]
    classes = conjugacy_classes_of_subgroups(g)
    assert len(classes) == 8
    assert sorted(c.size for c in classes) == [1, 1, 1, 1, 1, 1, 2, 2]


def test_subgroup_enumeration_against_brute_force():
    for g in (helpers.s3(), helpers.cyclic(6), helpers.d8(), helpers.q8(),
              helpers.c4xc2(), helpers.elem_ab(2, 3), helpers.a4(),
              helpers.d12()):
        ours = {frozenset(h.key) for h in all_subgroups(g)}
        brute = {frozenset(k) for k in helpers.brute_subgroups(g)}
        assert ours == brute


def test_conjugate_subgroup():
    g = helpers.d8()
    h = g.subgroup_generated([perm("(1 3)")])
    x = perm("(1 2 3 4)")
    assert h.conjugate(x) == g.subgroup_generated([perm("(2 4)")])


def test_normalizer_centralizer_center():
    g = helpers.d8()
    h = g.subgroup_generated([perm("(1 3)")])
    assert normalizer(g, h).order == 4
    assert centralizer(g, h).order == 4
    z = center(g)
    assert z.order == 2
    assert perm("(1 3)(2 4)") in z


def test_is_normal():
    g = helpers.d8()
    assert is_normal(g.whole(), center(g))
    reflection = g.subgroup_generated([perm("(1 3)")])
    assert not is_normal(g.whole(), reflection)
    assert is_normal(normalizer(g, reflection), reflection)


def test_quotient_is_klein_four():
    g = helpers.d8()
    q = quotient(g.whole(), center(g))
    assert q.order == 4
    assert all(x.order() in (1, 2) for x in q.elements)
    assert is_elementary_abelian(q, 2)


def test_quotient_projection_and_section():
    g = helpers.d8()
    q = QuotientGroup(g.whole(), center(g))
    for x in g.elements:
        bar = q.project_element(x)
        assert q.project_element(q.section_of(bar)) == bar
    pre = q.preimage(q.whole())
    assert pre.order == 8


def test_quotient_requires_normal():
    g = helpers.d8()
    reflection = g.subgroup_generated([perm("(1 3)")])
    with pytest.raises(InputError):
        QuotientGroup(g.whole(), reflection)


def test_predicates():
    assert is_p_group(helpers.d8(), 2)
    assert not is_p_group(helpers.s3(), 3)
    assert is_cyclic(helpers.cyclic(9))
    assert not is_cyclic(helpers.elem_ab(2, 2))
    assert is_abelian(helpers.c4xc2())
    assert not is_abelian(helpers.q8())


def test_nilpotency():
    assert is_nilpotent(helpers.d8())
    assert is_nilpotent(helpers.q8())
    assert is_nilpotent(helpers.cyclic(12))
    assert not is_nilpotent(helpers.s3())
    assert not is_nilpotent(helpers.s4())
    assert not is_nilpotent(helpers.a4())
    assert not is_nilpotent(helpers.d12())


def test_elementary_abelian_fixed_prime():
    assert is_elementary_abelian(helpers.elem_ab(2, 2), 2)
    assert is_elementary_abelian(helpers.elem_ab(3, 2), 3)
    assert not is_elementary_abelian(helpers.d8(), 2)
    assert not is_elementary_abelian(helpers.cyclic(4), 2)
    # trivial group counts for every prime
    g = helpers.cyclic(2)
    assert is_elementary_abelian(g.trivial_subgroup(), 2)
    with pytest.raises(InputError):
        is_elementary_abelian(g, 6)


def test_elementary_abelian_any_prime():
    # squarefree exponent, mixed primes allowed
    assert is_elementary_abelian_any(helpers.cyclic(2))
    assert is_elementary_abelian_any(helpers.cyclic(6))
    assert is_elementary_abelian_any(helpers.elem_ab(2, 2))
    assert not is_elementary_abelian_any(helpers.cyclic(4))
    assert not is_elementary_abelian_any(helpers.cyclic(2).trivial_subgroup())
    assert not is_elementary_abelian_any(helpers.s3())


def test_elementary_abelian_rank():
    g = helpers.elem_ab(2, 2)
    assert elementary_abelian_rank(g, 2) == 2
    assert elementary_abelian_rank(g.trivial_subgroup(), 2) == 0
    assert elementary_abelian_rank(helpers.cyclic(3), 3) == 1
    with pytest.raises(InputError):
        elementary_abelian_rank(helpers.cyclic(4), 2)


def test_subgroup_describe():
    g = helpers.d8()
    assert g.trivial_subgroup().describe() == "1"
    h = g.subgroup_generated([perm("(1 3)(2 4)")])
    assert h.describe() == "⟨(1 3)(2 4)⟩"


def test_generating_set_regenerates():
    g = helpers.d8()
    for h in all_subgroups(g):
        regen = g.subgroup_generated(h.generating_set())
        assert regen == h
