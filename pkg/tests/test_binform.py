"""Binary forms, transvectants, the 24-element matrix group, and calibration."""

from fractions import Fraction

from covforge.binform import (BinaryForm, GroupElt, Lambda,
                              calibrate_conventions, delta, group_act,
                              has_distinct_roots, max_root_multiplicity_exact,
                              mul_closure, root_multiplicity, transvectant)
from covforge.construction import octic_basis, quartic_basis, special_points
from covforge.scalar import CycScalar


def form(*coeffs):
    return BinaryForm(len(coeffs) - 1, list(coeffs))


# ---------------------------------------------------------------------------
# Frozen transvectant oracles, computed once by hand from the defining sum
# binom-weighted over mixed partials and never changed since.

def test_transvectant_of_pure_powers():
    z1_4 = BinaryForm.monomial(4, 0)      # z1^4
    z2_4 = BinaryForm.monomial(4, 4)      # z2^4
    assert transvectant(z2_4, z1_4, 2) == form(0, 0, 1, 0, 0)


def test_full_contraction_of_the_symmetric_octics():
    octics = octic_basis()
    e7 = octics[6]   # z1^4 z2^4 up to the stored normalization
    e4 = octics[3]
    two_mid = form(0, 0, 2, 0, 0)
    assert transvectant(e7, e7, 6) == two_mid
    assert transvectant(e4, e4, 6) == -two_mid


def test_mixed_sixth_transvectant_lands_on_a_quartic_basis_vector():
    octics = octic_basis()
    quartics = quartic_basis()
    assert transvectant(octics[6], octics[7], 6) == quartics[0]


def test_second_transvectants_on_the_quartic_basis():
    quartics = quartic_basis()
    a1, a2 = quartics[0], quartics[1]
    assert a1 == form(1, 0, 0, 0, 1)
    assert a2 == form(0, 0, 6, 0, 0)
    assert transvectant(a1, a1, 2) == form(0, 0, 2, 0, 0)
    assert transvectant(a1, a1, 2) == a2.scale(Fraction(1, 3))
    assert transvectant(a1, a2, 2) == a1


def test_fourth_transvectant_octic_with_quartic():
    octics = octic_basis()
    quartics = quartic_basis()
    assert quartics[3] == form(0, 4, 0, -4, 0)
    assert transvectant(octics[1], quartics[3], 4) == form(24, 0, 48, 0, 24)


def test_transvectant_zero_order_is_the_product():
    f = form(1, 2)
    g = form(3, 0, 1)
    assert transvectant(f, g, 0) == f * g


def test_transvectant_symmetry_sign():
    f = form(1, 0, 2, 1, 0)
    g = form(0, 1, 1, 0, 3)
    for i in (1, 2, 3):
        lhs = transvectant(f, g, i)
        rhs = transvectant(g, f, i)
        assert lhs == (rhs if i % 2 == 0 else -rhs)


# ---------------------------------------------------------------------------
# Group elements and the action on forms.

def test_group_element_inverse_and_order():
    i = CycScalar.i()
    g = GroupElt(i, 0, 0, 1)
    assert (g * g.inverse()).canonical() == GroupElt.identity().canonical()
    assert g.order() == 4
    assert GroupElt.identity().order() == 1


def test_closure_of_the_standard_generators_has_24_elements():
    from covforge.construction import generators
    gens = generators()
    elems = mul_closure(list(gens.values()))
    assert len(elems) == 24


def test_action_is_a_right_to_left_composition():
    i = CycScalar.i()
    g = GroupElt(i, 0, 0, 1)
    h = GroupElt(0, 1, 1, 0)
    f = form(1, 2, 0, 1, 5)
    composed = group_act(g * h, f)
    stepwise = group_act(g, group_act(h, f))
    assert composed == stepwise


def test_action_preserves_transvectants_up_to_nothing_for_unimodular():
    # both generators have determinant of modulus one in the embedding;
    # the sixth transvectant of an octic with itself transforms as a quartic
    f = octic_basis()[6]
    g = GroupElt(0, 1, -1, 0)  # det 1
    lhs = group_act(g, transvectant(f, f, 6))
    rhs = transvectant(group_act(g, f), group_act(g, f), 6)
    assert lhs == rhs


# ---------------------------------------------------------------------------
# Calibration: the convention and bracket scalings recovered mechanically.

def test_calibration_is_unique_and_residual_free():
    cal = calibrate_conventions()
    assert cal.convention == "substitute_inverse"
    assert cal.matched_conventions == ("substitute_inverse",)
    assert cal.scalars == (Fraction(1), Fraction(1), Fraction(1))
    assert cal.expansion_residuals == ()
    assert cal.expansion_listing == "unordered-pairs"


def test_lambda_standard_weights():
    eps = CycScalar.i()
    lam = Lambda.standard(eps)
    assert lam.as_tuple() == (CycScalar.one(), 6 * eps, CycScalar.one(), 6)


def test_delta_vanishes_exactly_on_stored_zeros():
    lam = Lambda.standard(CycScalar.i())
    points = special_points()
    for key in ("base_point", "invariant_octic"):
        assert delta(lam, points[key]).is_zero()
    # a generic unit vector does not lie on the zero locus
    e1 = [1] + [0] * 14
    assert not delta(lam, e1).is_zero()


# ---------------------------------------------------------------------------
# Root multiplicity on exact forms.

def test_root_multiplicity_counts_linear_factors():
    cubic = form(1, -3, 3, -1)  # (z1 - z2)^3
    f = cubic * form(1, 0)      # one extra simple root at z1 = 0
    assert root_multiplicity(f, (1, 1)) == 3
    assert root_multiplicity(f, (0, 1)) == 1
    assert root_multiplicity(f, (1, 2)) == 0
    assert max_root_multiplicity_exact(f) == 3
    assert not has_distinct_roots(f)
    assert has_distinct_roots(form(1, 0, -1))


def test_multiplicity_at_a_vanishing_leading_coefficient():
    # z1 z2^2 + z2^3 = z2^2 (z1 + z2): double root at (1, 0)
    f = form(0, 0, 1, 1)
    assert root_multiplicity(f, (1, 0)) == 2
