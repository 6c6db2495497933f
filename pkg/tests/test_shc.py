"""Central series, negative half, and the central-character fit."""

import pytest

from wsh.shc import GCONVENTIONS, ShcContext, central_series, omega_preset


@pytest.fixture(scope="module")
def shc6(ctx6):
    return ShcContext(ctx6)


def test_e0_is_c0_in_both_conventions(field):
    for conv in GCONVENTIONS:
        eser = central_series(field, 3, conv)
        assert eser.coeffs[0] == eser.ring.c(0)


def test_conventions_agree_low_and_diverge_later(field):
    a = central_series(field, 5, GCONVENTIONS[0])
    b = central_series(field, 5, GCONVENTIONS[1])
    assert a.coeffs[0] == b.coeffs[0]
    assert any(a.coeffs[l] != b.coeffs[l] for l in range(1, 5))


def test_coefficient_dict_is_deterministic(field):
    eser = central_series(field, 3, "power")
    d1 = eser.coefficient_dict(2)
    d2 = central_series(field, 3, "power").coefficient_dict(2)
    assert list(d1) == list(d2) and d1 == d2


def test_omega_preset_eliminates_central_parameters(field):
    for conv in GCONVENTIONS:
        eser = central_series(field, 4, conv)
        ring = eser.ring
        for poly in omega_preset(eser):
            for e in poly.terms:
                assert not any(
                    e[ring.c_index(i)] for i in range(ring.M + 1)
                )


def test_negative_cross(shc6):
    outs = shc6.negative_cross_checks(3, 3)
    assert outs and all(o.status in ("pass", "skipped") for o in outs)
    assert any(o.status == "pass" for o in outs)


def test_split_independence_and_diagonality(shc6):
    outs = shc6.split_independence_checks(2)
    assert len(outs) == 6
    assert all(o.status == "pass" for o in outs)


def test_negative_relations(shc6):
    outs = {o.id: o for o in shc6.negative_relation_checks()}
    assert outs["neg_cubic"].status == "pass"
    assert outs["neg_quadratic_variant"].status == "pass"
    assert "minus squared-term sign" in outs["neg_quadratic_variant"].detail
    assert outs["neg_adjoint_of_quadratic"].status == "pass"


def test_fit_low_order_both_conventions(shc6):
    # through E_3 the conventions are reparametrizations of each other:
    # both must admit the same trivial central character
    for conv in GCONVENTIONS:
        outcome, fitted = shc6.fit_central_charge(2, conv)
        assert outcome.status == "pass"
        f = shc6.field
        assert fitted == {0: f.one, 1: f.zero, 2: f.zero}


def test_fit_arbitration_selects_one_convention(shc6):
    outs = shc6.fit_arbitration_check(4)
    by_id = {o.id: o for o in outs}
    uniq = by_id["fock_fit_unique_convention(hmax=4)"]
    assert uniq.status == "pass"
    assert "surviving convention: power" in uniq.detail
    fit = by_id["fock_fit(power,hmax=4)"]
    assert fit.status == "pass"
    assert "c_4 = 0" in fit.detail


def test_builtin_symbolic_checks(shc6):
    assert shc6.e0_symbolic_check().status == "pass"
    assert shc6.preset_check(hmax=2).status == "pass"
