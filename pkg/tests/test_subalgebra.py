from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nashfan.nash import build_Jn
from nashfan.semigroup import SemigroupPresentation, contains
from nashfan.subalgebra import (
    Comparison,
    SubalgebraOrder,
    SubalgebraPoly,
    compare,
    divide,
    initial_form,
    initial_ideal,
    leading_data,
    normal_form,
    reduced_groebner_basis,
)

from oracles import in_power_of_unit_point
from golden_cases import A3, A12, BASIS3, BASIS12, J12, basis_polys, poly


def gb(gens, w):
    return reduced_groebner_basis(gens, SubalgebraOrder.from_weight(w))


@pytest.mark.parametrize("w", sorted(BASIS12))
def test_golden_bases_example_ideal(w):
    G = gb(J12(), w)
    assert set(G.elements) == basis_polys(A12, BASIS12[w])
    assert G.is_reduced()


@pytest.mark.parametrize("w", sorted(BASIS3))
def test_golden_bases_a3(w):
    G = gb(build_Jn(A3, 1), w)
    assert set(G.elements) == basis_polys(A3, BASIS3[w])
    assert G.is_reduced()


def test_printed_leading_terms_come_first():
    for w, data in BASIS3.items():
        order = SubalgebraOrder.from_weight(w)
        for terms in data:
            g = poly(A3, terms)
            assert leading_data(g, order)[0] == next(iter(terms))


def test_weight_outside_sigma_rejected():
    with pytest.raises(ValueError, match="not in sigma"):
        gb(J12(), (-1, 0))


def test_non_member_exponent_rejected():
    with pytest.raises(ValueError):
        SubalgebraPoly({(1, 3): 1}, A12)


def test_zero_ideal_rejected_and_unit_ideal():
    with pytest.raises(ValueError):
        gb([SubalgebraPoly({}, A12)], (1, 1))
    one = SubalgebraPoly.constant(1, A12)
    G = gb([poly(A12, {(1, 0): 1, (0, 0): 1}), poly(A12, {(1, 0): 1})], (1, 1))
    assert G.elements == (one,)


def test_compare_uses_weight_then_lex():
    order = SubalgebraOrder.from_weight((1, 1))
    assert compare((1, 1), (2, 0), order, A12) is Comparison.LESS
    assert compare((2, 3), (2, 3), order, A12) is Comparison.EQUAL


def test_order_generator_permutation_invariance():
    # the reduced basis is an invariant of the ideal, not of the presentation order
    perm = SemigroupPresentation(((2, 3), (1, 0), (1, 1)))
    gens = [SubalgebraPoly(dict(g.terms), perm) for g in J12()]
    for w in BASIS12:
        assert set(gb(gens, w).elements) == basis_polys(perm, BASIS12[w])


def test_generator_scaling_invariance():
    gens = [g * Fraction(-3, 7) for g in J12()] + [J12()[0] * J12()[1]]
    for w in BASIS12:
        assert set(gb(gens, w).elements) == basis_polys(A12, BASIS12[w])


def test_division_identity():
    G = gb(build_Jn(A3, 1), (1, 0))
    f = poly(A3, {(5, 4): 3, (2, 1): -1, (1, 0): 2, (0, 0): 7})
    qs, r = divide(f, G.elements, G.order)
    assert sum((q * g for q, g in zip(qs, G.elements)), SubalgebraPoly({}, A3)) + r == f
    leads = G.leading_exponents()
    for e in r.terms:
        for lm in leads:
            diff = tuple(a - b for a, b in zip(e, lm))
            assert not (min(diff) >= 0 and contains(diff, A3))


exps3 = st.sampled_from([(0, 0), (1, 0), (1, 1), (3, 4), (2, 1), (4, 4), (2, 2), (4, 5), (6, 8)])
polys3 = st.dictionaries(exps3, st.integers(-4, 4).filter(bool), min_size=1, max_size=4)
# weights in cone((0,1),(4,-3)): w.(1,0) >= 0 and w.(3,4) >= 0
weights3 = st.tuples(st.integers(0, 6), st.integers(-4, 4)).filter(
    lambda w: 3 * w[0] + 4 * w[1] >= 0)


@settings(max_examples=40, deadline=None)
@given(polys3, polys3, weights3)
def test_initial_form_is_multiplicative(f, g, w):
    f, g = poly(A3, f), poly(A3, g)
    assert initial_form(f * g, w) == initial_form(f, w) * initial_form(g, w)


@settings(max_examples=30, deadline=None)
@given(polys3, st.sampled_from(sorted(BASIS3)))
def test_normal_form_decides_membership_in_j1(f, w):
    # oracle: Taylor coefficients of order <= 1 at (1, 1)
    f = poly(A3, f)
    G = gb(build_Jn(A3, 1), w)
    assert (not normal_form(f, G)) == in_power_of_unit_point(f.terms, 1)


@settings(max_examples=30, deadline=None)
@given(polys3)
def test_normal_form_is_order_independent_on_members(f):
    f = poly(A3, f)
    J = build_Jn(A3, 1)
    G1, G2 = gb(J, (1, 0)), gb(J, (3, -2))
    h = f * J[2]
    assert not normal_form(h, G1) and not normal_form(h, G2)


def test_initial_ideal_requires_weight_in_cone():
    G = gb(build_Jn(A3, 1), (1, 0))
    assert initial_ideal(G, (1, 0))
    with pytest.raises(ValueError, match="weight not in cone"):
        initial_ideal(G, (3, -2))


def test_cone_constancy_on_lattice_points():
    J = build_Jn(A3, 1)
    ref = set(gb(J, (1, 0)).elements)
    # strictly inside cone((0,1),(2,-1))
    for w in [(1, 0), (2, 0), (3, -1), (1, 1), (5, -2), (2, 3)]:
        assert set(gb(J, w).elements) == ref
