"""Identity catalogue: closed-form oracles, brute-force agreement, reports."""

from fractions import Fraction

import pytest

from wreathcalc.groups import cyclic_group, symmetric_group
from wreathcalc.plethysm import average_p1, compose, sech_series, tanh_series
from wreathcalc.series import (eq_to_degree, exp_series, l_series,
                               natural_spec, one, p, uni_analytic, zero)
from wreathcalc.theorems import (BudgetError, THEOREM_IDS, UsageError,
                                 bn_dimension, bn_dimension_formula,
                                 brute_force_side, char_poly_product_formula,
                                 closed_form, corollary_checks,
                                 dimension_tables, family_dimension_formula,
                                 identity_char_poly, lefschetz_two_routes,
                                 mobius_dimension, natural_form,
                                 sundaram_balance, verify, _acted_poset)
from wreathcalc.wreath import (enumerate_class_types, trace_extract,
                               type_representative)

C1 = cyclic_group(1)
C2 = cyclic_group(2)
C3 = cyclic_group(3)


# ---------------------------------------------------------------------------
# closed-form low-degree oracles


def test_hanlon_closed_over_trivial_group_is_geometric():
    f = closed_form("hanlon", C1, 6)
    x = p(C1, 6, 1, 0)
    expect = one(C1, 6)
    powx = one(C1, 6)
    for k in range(1, 7):
        powx = powx * x
        expect = expect + powx.scale((-1) ** k)
    assert f == expect


def test_second_closed_over_trivial_group_is_minus_p1():
    f = closed_form("second", C1, 6)
    assert f == p(C1, 6, 1, 0).scale(-1)


def test_third_closed_degree_one_vanishes():
    f = closed_form("third", C2, 4)
    assert f.homogeneous_part(1).is_zero()
    assert f.homogeneous_part(0) == one(C2, 4).homogeneous_part(0)


def test_one_mod_two_closed_matches_sech_tanh_route():
    # independent assembly through the even/odd quotient series
    from wreathcalc.plethysm import arcsinh_series
    N = 6
    f = closed_form("one_mod_d", C2, N, 2)
    B = arcsinh_series(C1, N)
    alt = compose(sech_series(C2, N) - tanh_series(C2, N), B)
    assert f == alt


def test_zero_mod_two_closed_over_trivial_group_is_minus_tanh():
    f = closed_form("zero_mod_d", C1, 7, 2)
    assert natural_spec(f) == -uni_analytic("tanh", 7)


def test_whitney_qsim_degree_one_is_the_average_variable():
    f = closed_form("whitney_Qsim", C2, 3)
    assert f.homogeneous_part(1).truncate(1) == average_p1(C2, 1)


def test_whitney_zero_mod_constant_term_collapses_to_one():
    f = closed_form("whitney_0modd", C2, 3, 2)
    assert f.homogeneous_part(0).truncate(0) == one(C2, 0)


def test_bn_closed_low_degrees():
    f = closed_form("bn_whitney", C2, 2)
    assert f.homogeneous_part(0).truncate(0) == one(C2, 0)
    assert f.homogeneous_part(1).truncate(1) == average_p1(C2, 1)


def test_dn_closed_degree_two_is_plain_exponential_slice():
    # the (1 + t e_2) factor exactly fills the t-graded hole at degree two
    f = closed_form("dn_series", C2, 2)
    assert f.homogeneous_part(2).truncate(2) == \
        exp_series(C2, 2).homogeneous_part(2)


def test_product_form_closed_equals_inverse_route():
    assert closed_form("product_form_F", C2, 5) == closed_form("hanlon", C2, 5)


def test_derivative_link_between_stanley_and_hanlon():
    # over the trivial group the full-family closed form is the p_1
    # derivative of one plus the partition-lattice closed form
    N = 7
    lhs = (one(C1, N) + l_series(C1, N)).p_derivative(1)
    assert lhs == closed_form("hanlon", C1, N).truncate(N - 1)


def test_stanley_character_integrality():
    # (-1)^(n-1) times the degree-n slice has integer traces on all types
    f = l_series(C1, 6)
    for n in range(1, 7):
        for tau in enumerate_class_types(C1, n):
            val = trace_extract(f, C1, tau) * (-1) ** (n - 1)
            assert val.denominator == 1


# ---------------------------------------------------------------------------
# brute-force sides


def test_brute_stanley_degree_one_is_p1():
    assert brute_force_side("stanley", C1, 1) == p(C1, 1, 1, 0)


def test_brute_hanlon_degree_one_is_minus_average():
    assert brute_force_side("hanlon", C2, 1) == average_p1(C2, 1).scale(-1)


def test_brute_third_degree_one_is_zero():
    assert brute_force_side("third", C2, 1).is_zero()


def test_brute_whitney_qsim_degree_one_is_average():
    # the one-element poset at n=1 carries exactly the stray linear term
    assert brute_force_side("whitney_Qsim", C2, 1) == average_p1(C2, 1)


def test_brute_dn_has_no_model_beyond_degree_two():
    assert brute_force_side("dn_series", C2, 3) is None
    assert brute_force_side("dn_series", C2, 2) == \
        exp_series(C2, 2).homogeneous_part(2)


def test_brute_degree_zero_constants():
    assert brute_force_side("hanlon", C2, 0) == one(C2, 0)
    assert brute_force_side("second", C2, 0) == zero(C2, 0)


# ---------------------------------------------------------------------------
# verification reports


def test_verify_hanlon_small():
    rep = verify("hanlon", C2, 3)
    assert rep.ok
    assert [r.status for r in rep.degrees] == ["ok"] * 4
    assert rep.natural_status == "ok"


def test_verify_all_poset_theorems_smoke():
    cases = [
        ("stanley", C1, 3, None),
        ("second", C2, 3, None),
        ("third", C2, 3, None),
        ("one_mod_d", C2, 3, 2),
        ("zero_mod_d", C2, 3, 2),
        ("whitney_hanlon", C2, 3, None),
        ("whitney_R", C2, 3, None),
        ("whitney_Qsim", C2, 3, None),
        ("whitney_1modd", C2, 3, 2),
        ("whitney_0modd", C2, 3, 2),
        ("bn_whitney", C2, 3, None),
        ("product_form_F", C2, 3, None),
        ("fibre_corollary", C2, 3, None),
        ("qsim_corollary", C2, 3, None),
    ]
    for theorem, G, n, d in cases:
        rep = verify(theorem, G, n, d)
        assert rep.ok, (theorem, rep.to_dict())
        assert not any(r.status == "mismatch" for r in rep.degrees)


def test_verify_dn_reports_skipped_degrees():
    rep = verify("dn_series", C2, 4)
    assert rep.ok
    statuses = {r.degree: r.status for r in rep.degrees}
    assert statuses[2] == "ok"
    assert statuses[3] == "skipped"
    assert statuses[4] == "skipped"
    assert rep.natural_status == "ok"


def test_verify_report_dict_shape():
    rep = verify("hanlon", C1, 2, group_label="c1")
    data = rep.to_dict()
    assert data["theorem"] == "hanlon"
    assert data["group"] == "c1"
    assert data["ok"] is True
    assert [d["degree"] for d in data["degrees"]] == [0, 1, 2]
    assert data["natural"]["status"] == "ok"


def test_verify_mismatch_is_reported_with_coefficients():
    # force a mismatch by comparing a deliberately damaged closed form
    from wreathcalc.theorems import _first_difference
    a = one(C2, 2) + p(C2, 2, 1, 0)
    b = one(C2, 2) + p(C2, 2, 1, 0).scale(Fraction(1, 2))
    diff = _first_difference(a, b)
    assert diff["closed"] == "1" and diff["brute"] == "1/2"
    assert diff["monomial"] == [[1, 0, 1]]


def test_verify_rejects_bad_arguments():
    with pytest.raises(UsageError):
        verify("no_such_theorem", C2, 2)
    with pytest.raises(UsageError):
        verify("stanley", C2, 2)
    with pytest.raises(UsageError):
        verify("bn_whitney", C1, 2)
    with pytest.raises(UsageError):
        verify("one_mod_d", C2, 2, d=1)
    with pytest.raises(UsageError):
        verify("hanlon", C2, 3, N=2)


def test_verify_budget_guards():
    with pytest.raises(BudgetError):
        verify("hanlon", C2, 5)
    with pytest.raises(BudgetError):
        verify("hanlon", cyclic_group(7), 2)
    rep = verify("hanlon", C1, 5, force=True)
    assert rep.ok


def test_natural_form_availability():
    assert natural_form("one_mod_d", C2, 4, 3) is None
    assert natural_form("fibre_corollary", C2, 4) is None
    assert natural_form("stanley", C1, 5) == uni_analytic("log1p", 5)


def test_corollary_checks_both_pass():
    out = corollary_checks(C2, 3)
    assert set(out) == {"fibre_corollary", "qsim_corollary"}
    assert all(rep.ok for rep in out.values())


# ---------------------------------------------------------------------------
# dimensions and characteristic polynomials


def test_dimension_formulas_low_values():
    assert family_dimension_formula("q", 2, 3) == 3 * 5
    assert family_dimension_formula("r", 2, 3) == 1 * 3
    assert family_dimension_formula("qsim", 2, 4) == 3 * 1 * 3 * 5
    assert family_dimension_formula("qsim", 2, 1) is None
    assert [bn_dimension_formula(n) for n in (2, 3, 4, 5)] == [1, 6, 21, 240]


def test_mobius_dimension_against_formulas():
    rows = dimension_tables([("c1", C1), ("c2", C2)], 4)
    assert rows and all(row["ok"] for row in rows)
    assert mobius_dimension("q", C3, 5) == 4 * 7 * 10 * 13


def test_bn_dimension_both_parities():
    assert bn_dimension(2) == 1
    assert bn_dimension(3) == 6
    assert bn_dimension(4) == 21
    assert bn_dimension(5) == 240


def test_identity_char_poly_products():
    got = identity_char_poly("q", C2, 3)
    # (1 - t)(1 - 3t)(1 - 5t)
    assert got == {0: 1, 1: -9, 2: 23, 3: -15}
    assert got == char_poly_product_formula("q", 2, 3)
    # restricted family keeps a Mobius correction in top degree
    assert char_poly_product_formula("r", 2, 2) == {0: 1, 1: -2, 2: 1}
    assert identity_char_poly("r", C2, 2) == {0: 1, 1: -2, 2: 1}
    for n in range(1, 5):
        assert identity_char_poly("r", C2, n) == \
            char_poly_product_formula("r", 2, n)
    with pytest.raises(UsageError):
        char_poly_product_formula("qsim", 2, 3)


# ---------------------------------------------------------------------------
# per-automorphism oracles


def test_sundaram_balance_holds_everywhere_small():
    for family, G, n, d in (("q", C2, 3, None), ("r", C2, 3, None),
                            ("q1modd", C2, 4, 2), ("q0modd", C1, 4, 2)):
        assert sundaram_balance(family, G, n, d) == []


def test_sundaram_balance_needs_two_elements():
    with pytest.raises(UsageError):
        sundaram_balance("qsim", C1, 1)


def test_lefschetz_routes_agree_on_family_posets():
    P, act = _acted_poset("q", C2, 2, None)
    for tau in enumerate_class_types(C2, 2):
        w = type_representative(C2, tau)
        a, b = lefschetz_two_routes(P, act(w))
        assert a == b


def test_theorem_id_catalogue_is_complete():
    assert len(THEOREM_IDS) == 16
    assert len(set(THEOREM_IDS)) == 16


def test_verify_symmetric_group_spot_check():
    S3 = symmetric_group(3)
    rep = verify("hanlon", S3, 2)
    assert rep.ok
