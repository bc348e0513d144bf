"""The exact verification blocks: every symbolic and property check passes."""

import pytest

from covforge import checks

EXPECTED_SYMBOLIC_IDS = [
    "symbolic/expansion_1_2",
    "symbolic/action_table_3_1",
    "symbolic/group_structure",
    "symbolic/equivariance_invariants",
    "symbolic/jacobians",
    "symbolic/lemma_4_2",
    "symbolic/derivation_4_5",
    "symbolic/strata_6",
]

EXPECTED_PROPERTY_IDS = [
    "property/field_axioms",
    "property/mpoly_ring",
    "property/transvectants",
    "property/scaling_1_1",
]


@pytest.fixture(scope="module")
def symbolic_results():
    return checks.run_symbolic_checks()


@pytest.fixture(scope="module")
def property_results():
    return checks.run_property_checks(seed=42)


def test_every_symbolic_check_passes(symbolic_results):
    assert [r.check_id for r in symbolic_results] == EXPECTED_SYMBOLIC_IDS
    for r in symbolic_results:
        assert r.ok, f"{r.check_id}: {r.residuals}"
        assert r.residuals == ()


def test_every_property_check_passes(property_results):
    assert [r.check_id for r in property_results] == EXPECTED_PROPERTY_IDS
    for r in property_results:
        assert r.ok, f"{r.check_id}: {r.residuals}"


def _by_id(results, check_id):
    return next(r for r in results if r.check_id == check_id)


def test_expansion_check_reports_the_calibrated_convention(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/expansion_1_2")
    assert r.details["convention"] == "substitute_inverse"
    assert r.details["scalars"] == ["1", "1", "1"]
    assert r.details["expansion_listing"] == "unordered-pairs"
    assert r.details["residual_sources"] == 0
    assert len(r.erratum_notes) == 2


def test_action_table_check_singles_out_one_convention(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/action_table_3_1")
    assert r.ok
    counts = r.details["mismatch_counts"]
    assert counts["substitute_inverse"] == 0
    assert counts["substitute_direct"] > 0
    assert counts["substitute_transpose"] > 0


def test_group_check_details(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/group_structure")
    assert r.details["group_order"] == 24
    assert r.details["order_histogram"] == {"1": 1, "2": 9, "3": 8, "4": 6}
    assert r.details["quotient_order"] == 6
    assert r.details["orbit_count_times_group"] == "8*7*6 = 336 = 14 * 24"


def test_invariant_dimension_details(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/equivariance_invariants")
    dims = r.details["fixed_dims"]
    assert dims["diagonal_subgroup"] == 6
    assert dims["full_group"] == 2
    assert dims["full_group_on_target"] == 0
    assert r.details["summand_dims"] == [3, 3, 2, 1, 1, 2, 3]
    assert sum(r.details["summand_dims"]) == 15


def test_jacobian_rank_details(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/jacobians")
    assert r.details["full_rank"] == 5
    assert r.details["full_kernel_dim"] == 10
    assert r.details["restricted_rank"] == 5
    assert r.details["restricted_tangent_dim"] == 7


def test_orbit_quadratic_details(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/lemma_4_2")
    assert r.details["octic_fixed_dim"] == 3
    assert r.details["target_fixed_dim"] == 1
    assert r.details["quadratic"] == \
        "120*alpha1*alpha3 + 24*i*alpha2^2 - 312*i*alpha3^2"
    assert r.details["literal_route_factor"] == 2


def test_derivation_check_multipliers_and_notes(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/derivation_4_5")
    assert r.details["multipliers"] == [
        "x1^2*x2^2*x3^2", "x1^2*x2^2*x3^2", "x2*x3", "x1*x3", "x1*x2"]
    assert len(r.erratum_notes) == 2


def test_strata_check_counts_and_note(symbolic_results):
    r = _by_id(symbolic_results, "symbolic/strata_6")
    assert r.details["sparse_count"] == 4
    assert r.details["family_count"] == 4
    assert r.details["count_bookkeeping"] == "18 + 14 = 32 = 2^5"
    assert len(r.erratum_notes) == 1


def test_property_checks_are_reproducible_across_calls():
    first = checks.check_field_axioms(seed=7, trials=40)
    second = checks.check_field_axioms(seed=7, trials=40)
    assert first.ok and second.ok
    assert first.residuals == second.residuals == ()


def test_property_trial_counts_are_recorded(property_results):
    assert _by_id(property_results, "property/field_axioms").details["trials"] >= 1000
    assert _by_id(property_results,
                  "property/transvectants").details["trials"] >= 100
