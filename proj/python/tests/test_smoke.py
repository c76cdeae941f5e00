import pytest

import hvff


def test_scalar_arithmetic():
    a = hvff.Scalar("1/2")
    b = hvff.Scalar("c_LI")
    assert str(a + a) == "1"
    assert (b / b) == hvff.Scalar(1)
    assert not b.is_numeric()
    with pytest.raises(ValueError):
        hvff.Scalar("1/0")


def test_delta_dual_symmetry():
    lam, mu, r, s = (hvff.Scalar(x) for x in ("lambda", "mu", "r", "s"))
    two = hvff.Scalar(2)
    assert hvff.delta(two * lam - r, two * mu - s, lam, mu) == hvff.delta(r, s, lam, mu)


def test_singular_vectors():
    assert hvff.schur_singular(2) == "-1/(2*c_LI)*I(-2)v + 1/(2*c_LI^2)*I(-1)^2v"
    assert hvff.lambda_neg(2).startswith("L(-2)v + 1/c_LI*I(-1)L(-1)v")
    assert hvff.w22_singular(2) == "W(-2)v - 1/(4*c_LI^2)*W(-1)^2v"


def test_fusion():
    a = hvff.fusion_dim("h", "0", "h'", "0", "c_L", "c_LI")
    assert a == {"case": "i", "d": 1, "h_out": "h + h'", "h_I_out": "0"}
    z = hvff.fusion_dim("h", "3*c_LI", "h'", "2*c_LI", "c_L", "c_LI")
    assert z["d"] == 0 and z["h_out"] is None
    with pytest.raises(ValueError):
        hvff.fusion_dim("h", "1", "h'", "1", "c_L", "0")


def test_characters():
    assert hvff.verma_char(5) == ["1", "2", "5", "10", "20", "36"]
    assert hvff.irr_char(1, 4) == ["1", "1", "3", "5", "10"]
    assert hvff.decomp_check(3, 20)


def test_phi_omega():
    assert hvff.phi_omega(3, "F", "c_LI") == hvff.phi_omega_closed(3, "F", "c_LI")
    assert hvff.phi_omega(2, "-1", "1").is_zero()


@pytest.mark.parametrize("command", ["singular", "kernel", "tensor", "fusion", "w22", "chars"])
def test_suites_pass(command):
    report = hvff.run_suite(command)
    assert report["command"] == command
    assert report["status"] == "pass"
    assert all(item["status"] == "pass" for item in report["items"])


def test_suite_arguments():
    r = hvff.run_suite("screening", N=2, p=2, cL="-3/2", cLI="2/5")
    assert r["status"] == "pass"
    assert r["params"]["cLI"] == "2/5"
    with pytest.raises(ValueError):
        hvff.run_suite("nope")
    assert "w22" in hvff.suite_names()
