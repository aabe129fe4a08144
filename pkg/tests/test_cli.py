import json
import math

import pytest

from qhopf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_hopf_passes(capsys):
    code, out, _ = run(capsys, "verify-hopf", "--kappa1", "0.3", "--kappa2", "-0.3",
                       "--gamma1", "0.8", "--k", "0", "--g0", "1")
    assert code == 0
    assert "overall: pass" in out


def test_classify_non_hermitian_point(capsys):
    code, out, _ = run(capsys, "classify", "--xi", "0", "--eta", "0.3",
                       "--gamma1", "0.5", "--gamma2", "0.4", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["params"]["verdict"]["family"] == "non_hermitian"
    assert report["overall"] == "pass"  # classification and cross-check agree


def test_classify_family_from_oscillator_params(capsys):
    code, out, _ = run(capsys, "classify", "--kappa1", "0.3", "--kappa2", "-0.3",
                       "--gamma1", "0.8", "--k", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["params"]["verdict"]["family"] == "proposition1"


def test_convert_params_forward(capsys):
    code, out, _ = run(capsys, "convert-params", "--eps", "0.5", "--alpha", "1.2",
                       "--beta", "0.3", "--k", "0", "--format", "json")
    assert code == 0
    report = json.loads(out)
    to = report["params"]["to"]
    assert to["kappa1"][0] == pytest.approx(0.3)
    assert to["gamma"][0] == pytest.approx((2 * 0.3 + 1) / (2 * 1.2))
    assert to["gamma"][1] == pytest.approx(math.pi / 1.2)
    assert to["g0"][0] == pytest.approx(math.cosh(0.4) / math.cosh(0.25))


def test_convert_params_inverse(capsys):
    code, out, _ = run(capsys, "convert-params", "--kappa1", "0.3", "--kappa2",
                       "-0.3", "--gamma1", "0.6666666666666666", "--k", "0",
                       "--g0", str(math.cosh(0.4) / math.cosh(0.25)),
                       "--format", "json")
    assert code == 0
    to = json.loads(out)["params"]["to"]
    assert to["eps"] == pytest.approx(0.5)
    assert to["alpha"] == pytest.approx(1.2)
    assert to["beta"] == pytest.approx(0.3)


def test_verify_rmatrix(capsys):
    code, out, _ = run(capsys, "verify-rmatrix", "--kappa1", "0.5", "--kappa2",
                       "0.1", "--gamma1", "0.7", "--max-sector", "3",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    names = {c["name"] for c in report["checks"]}
    assert "qt/coproduct-split-left[M=3]" in names
    assert "ybe/yang-baxter[M=3]" in names


def test_verify_rmatrix_oh_singh_and_dump(capsys, tmp_path):
    dump = tmp_path / "blocks.json"
    code, out, _ = run(capsys, "verify-rmatrix", "--eps", "0.5", "--alpha", "1.2",
                       "--beta", "0.3", "--k", "0", "--oh-singh",
                       "--max-sector", "3", "--dump-blocks", str(dump),
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    names = {c["name"] for c in report["checks"]}
    assert "realform-equivalence[M=3]" in names
    payload = json.loads(dump.read_text())
    assert payload["legs"] == 2 and payload["degree"] == 0
    assert [s["M"] for s in payload["sectors"]] == [0, 1, 2, 3]
    assert payload["sectors"][1]["rows"] == 2
    assert len(payload["sectors"][1]["entries"]) == 4


def test_tabulate_csv(capsys):
    code, out, _ = run(capsys, "tabulate", "--kappa1", "0.5", "--kappa2", "0.1",
                       "--gamma1", "0.7", "--n-max", "4")
    assert code == 0
    lines = [ln for ln in out.splitlines() if "," in ln]
    header = lines[0].split(",")
    assert header[0] == "n"
    assert "g_re" in header and "f_im" in header and "raise_right_re" in header
    assert len(lines) == 1 + 5
    row1 = lines[1].split(",")
    assert float(row1[1]) == pytest.approx(1.0)  # G(0) with g0 = 1
    assert float(row1[3]) == pytest.approx(0.0)  # F(0) = 0


def test_tabulate_overflow_exits_one(capsys):
    code, out, _ = run(capsys, "tabulate", "--kappa1", "8", "--kappa2", "0.1",
                       "--gamma1", "0.7", "--n-max", "40", "--format", "json")
    assert code == 1
    report = json.loads(out)
    assert report["overall"] == "fail"
    assert any("overflow" in (c.get("witness") or "") for c in report["checks"])


def test_rmatrix_off_generic_branch_is_parameter_error(capsys):
    code, _, err = run(capsys, "verify-rmatrix", "--kappa1", "0.3", "--kappa2",
                       "0.3", "--gamma1", "0.7")
    assert code == 2
    assert "generic" in err


def test_mixed_styles_usage_error(capsys):
    code, _, err = run(capsys, "verify-hopf", "--kappa1", "0.3", "--eps", "0.5",
                       "--alpha", "1.0")
    assert code == 2
    assert "mixed" in err


def test_gamma_flags_mixed_with_q_style_rejected(capsys):
    code, _, err = run(capsys, "verify-hopf", "--eps", "0.5", "--alpha", "1.2",
                       "--gamma1", "0.8")
    assert code == 2
    assert "mixed" in err


def test_unknown_flag_exits_two(capsys):
    code = main(["verify-hopf", "--no-such-flag", "1"])
    capsys.readouterr()
    assert code == 2


def test_missing_params_usage_error(capsys):
    code, _, err = run(capsys, "verify-hopf")
    assert code == 2
    assert "no parameters" in err


def test_config_file_supplies_defaults(capsys, tmp_path):
    cfg = tmp_path / "params.json"
    cfg.write_text(json.dumps({"kappa1": 0.3, "kappa2": -0.3, "gamma1": 0.8,
                               "k": 0, "g0": 1}))
    code, out, _ = run(capsys, "verify-hopf", "--config", str(cfg))
    assert code == 0
    assert "overall: pass" in out


def test_cli_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "params.json"
    cfg.write_text(json.dumps({"xi": 0.6, "eta": 0.0, "gamma1": 0.8,
                               "gamma2": 0.4}))
    code, out, _ = run(capsys, "classify", "--config", str(cfg), "--eta", "0.3",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["params"]["eta"] == 0.3


def test_default_sector_cap_is_eight(monkeypatch):
    from qhopf.cli import _sector_limit
    monkeypatch.delenv("QHOPF_MAX_SECTOR", raising=False)
    assert _sector_limit(12) == (8, 8)
    assert _sector_limit(3) == (3, 8)


def test_env_caps_max_sector(capsys, monkeypatch):
    monkeypatch.setenv("QHOPF_MAX_SECTOR", "2")
    code, out, _ = run(capsys, "verify-rmatrix", "--kappa1", "0.5", "--kappa2",
                       "0.1", "--gamma1", "0.7", "--max-sector", "6",
                       "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["params"]["max_sector"] == 2
    assert report["params"]["max_sector_capped_at"] == 2
    assert not any("M=3" in c["name"] for c in report["checks"])


def test_reports_deterministic(capsys):
    args = ("verify-hopf", "--kappa1", "0.5", "--kappa2", "0.1", "--gamma1",
            "0.7", "--format", "json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_exit_code_matches_overall(capsys):
    code, out, _ = run(capsys, "verify-hopf", "--kappa1", "0.5", "--kappa2", "0.1",
                       "--gamma1", "0.7", "--format", "json")
    report = json.loads(out)
    assert (code == 0) == (report["overall"] == "pass")
