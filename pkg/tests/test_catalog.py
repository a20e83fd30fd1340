from fractions import Fraction

import pytest

from dyckstat import catalog
from dyckstat.polynomial import Poly, VariableError, parse_poly
from dyckstat.series import DepthTooShallow, Series


def test_catalan():
    assert catalog.expand("catalan", 6).numbers() == [1, 1, 2, 5, 14, 42, 132]


def test_sval_z4_and_zero():
    s = catalog.expand("sval", 5)
    assert s[4] == parse_poly("s^3 + s^2 + 6*s + 6")
    at0 = catalog.expand("sval", 12, {"s": 0}).numbers()
    assert at0 == [1, 1, 1, 3, 6, 16, 43, 116, 329, 947, 2762, 8176, 24469]


def test_m_unimodal_sequences():
    assert catalog.expand("m_weak_unimodal", 11).numbers() == [
        1, 1, 2, 5, 14, 41, 124, 383, 1200, 3796, 12088, 38676]
    assert catalog.expand("m_strict_unimodal", 11).numbers() == [
        1, 1, 1, 3, 6, 15, 38, 95, 243, 627, 1622, 4208]


def test_cor_substitution_matches():
    order = 8
    bind = {}
    for i in range(1, order + 1):
        bind[f"t_{i}"] = Poly.var("t") * Poly.var("w") ** i
        bind[f"r_{i}"] = Poly.var("r") * Poly.var("y") ** i
    a = catalog.expand("sp_ap_by_weight", order, bind)
    assert a == catalog.expand("sp_ap_spw_apw", order)


def test_unknown_and_mixed_family():
    with pytest.raises(catalog.UnknownGf):
        catalog.expand("nope", 3)
    with pytest.raises(catalog.CatalogError):
        catalog.expand("sp_ap_by_weight", 3, {"t": 1})
    with pytest.raises(VariableError):
        catalog.expand("sp_ap_by_weight", 3, {"t_1": Poly.var("t")})


def test_verify_detects_corruption():
    good = catalog.expand("w_weak_unimodal", 8)
    cs = list(good.coeffs)
    cs[5] = cs[5] + 1
    rep = catalog.verify("w_weak_unimodal", 8, series=Series(cs, 8))
    assert not rep.ok and rep.first_mismatch == 5
    assert catalog.verify("w_weak_unimodal", 10).ok


def test_verify_sample():
    for gf in ("sp_prime", "sval_svw", "m_weak_s", "w_weak_unimodal_t", "pyramid_weight"):
        assert catalog.verify(gf, 8).ok, gf


def test_no_oracle_entry():
    with pytest.raises(catalog.NoOracle):
        catalog.verify("pea_ins_by_weight", 4)


def test_integrality_everywhere():
    for gf in catalog.CATALOG:
        assert catalog.expand(gf, 8).is_integral(), gf


def test_depth_check_raises():
    with pytest.raises(DepthTooShallow):
        catalog.expand("sval", 8, depth=6)


def test_identities_order_8():
    rep = catalog.identity_checks(8)
    assert rep.ok, [r.name for r in rep.results if not r.ok]
    rep.raise_for_failure()


def test_identity_failure_is_reported():
    rep = catalog.IdentityReport(3, [catalog.IdentityResult("x", "demo", 2)])
    with pytest.raises(catalog.IdentityFailed):
        rep.raise_for_failure()


def test_alt_form_literal_typo():
    lit = catalog.alt_m_weak_unimodal(8, literal=True).numbers()
    fixed = catalog.alt_m_weak_unimodal(8).numbers()
    assert fixed == catalog.expand("m_weak_unimodal", 8).numbers()
    assert lit != fixed


def test_ratio_trend():
    trend = dict(catalog.ratio_trend(16))
    assert trend[8] == Fraction(331, 715)
    assert abs(trend[16] - Fraction(1, 3)) < abs(trend[8] - Fraction(1, 3))
    with pytest.raises(ValueError):
        catalog.ratio_trend(7)


def test_mass_report():
    assert all(v is None for v in catalog.mass_report(8).values())
