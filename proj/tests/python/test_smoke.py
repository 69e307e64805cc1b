import math

import pytest

import hmzeta


def test_kernels():
    assert hmzeta.zeta(2).value == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert float(hmzeta.eta(1)) == pytest.approx(math.log(2), rel=1e-15)
    assert hmzeta.digamma(1).value == pytest.approx(-0.5772156649015329, rel=1e-15)
    assert hmzeta.digamma_zero() == pytest.approx(1.4616321449683623, rel=1e-14)
    assert hmzeta.zeta(3, 1).est_error < 1e-14
    lo, hi = hmzeta.zeta_sandwich(1, 0.5)
    assert lo <= -hmzeta.zeta(0.5, 1).value <= hi


def test_errors():
    with pytest.raises(hmzeta.PoleError):
        hmzeta.zeta(1.0)
    with pytest.raises(ValueError):
        hmzeta.digamma(-1.0)
    with pytest.raises(LookupError):
        hmzeta.eval_expr("NOPE", 1.0)


def test_catalog():
    names = {name for name, _, _ in hmzeta.catalog()}
    assert {"THETA", "G_ZETA", "VARPHI_RATIO", "zeta"} <= names
    assert hmzeta.eval_expr("THETA", 2.0).value == pytest.approx(-0.2274535, abs=1e-6)
    assert hmzeta.eval_expr("H_AB", 2.0, [1, 2]).value == pytest.approx(2 * hmzeta.zeta(2).value)


def test_stieltjes():
    assert hmzeta.stieltjes(1) == pytest.approx(-0.0728158454836767, rel=1e-14)
    for n in range(1, 11):
        assert abs(hmzeta.stieltjes(n)) <= hmzeta.stieltjes_bound(n)
        assert abs(hmzeta.stieltjes(n)) <= hmzeta.lavrik_bound(n)


def test_polynomials():
    assert hmzeta.count_roots("-2 0 1", "0", "2") == 1
    cert = hmzeta.certify("QUARTIC", 0, 1, 1)
    assert cert["root_count"] == 1
    cert = hmzeta.certify("Q", 1, 2, 1)
    assert cert["root_count"] == 0 and cert["sign"] == 1 and cert["robust"]
    with pytest.raises(hmzeta.CertificationError):
        hmzeta.certify("1 0 1", -1, 1, -1)


def test_verify_rows():
    rows = hmzeta.verify(["D6", "Z24"], grid_n=300)
    assert {r["claim_id"] for r in rows} == {"D6.increasing", "D6.negative",
                                            "Z24.parity_bound", "Z24.factorial_bound"}
    assert all(r["status"] == "pass" for r in rows)
    assert set(rows[0]) == {"claim_id", "status", "kind", "domain", "grid",
                            "min_margin", "argmin_x", "paper_ref", "notes"}
    assert len(hmzeta.claim_ids()) == 40


def test_cli():
    code, out, err = hmzeta.run_cli(["eval", "zeta", "2"])
    assert code == 0 and out.startswith("1.644934066848226")
    code, _, err = hmzeta.run_cli(["verify", "NOPE"])
    assert code == 2 and "NOPE" in err
