import json
import xml.dom.minidom

import pytest

from hbknots import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_pattern_json(capsys):
    code, out, _ = run(capsys, "pattern", "--p", "3", "--q", "4", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["schema_version"] == cli.SCHEMA_VERSION
    assert len(d["P"]["arcs"]) == 6 and len(d["R"]["arcs"]) == 6
    assert len(d["identities"]) == 7 and all(c["passed"] for c in d["identities"])
    assert json.loads(cli.dumps(d)) == d


def test_pattern_svg(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, _, _ = run(capsys, "pattern", "--p", "2", "--q", "3", "--format", "svg", "--out", str(target))
    assert code == 0
    doc = xml.dom.minidom.parse(str(target))
    for side in "PR":
        (g,) = [g for g in doc.getElementsByTagName("g") if g.getAttribute("id") == f"pants-{side}"]
        assert len(g.getElementsByTagName("path")) == 4
        assert len(g.getElementsByTagName("polygon")) == 2
        assert len(g.getElementsByTagName("circle")) == 3


def test_pattern_bad_gcd(capsys):
    code, out, err = run(capsys, "pattern", "--p", "2", "--q", "4")
    assert code == 2 and "gcd(p,q) must be 1" in err and not out


def test_usage_errors(capsys):
    assert run(capsys, "pattern", "--p", "2")[0] == 2
    assert run(capsys, "twobridge", "2/4")[0] == 2
    assert run(capsys, "twobridge", "x")[0] == 2
    assert run(capsys, "verify", "--suite", "census", "--pmax", "1")[0] == 2
    assert run(capsys, "verify", "--suite", "easy-case", "--caps-wrap", "1")[0] == 2
    assert run(capsys, "verify", "--suite", "census", "--format", "svg")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_verify_census_and_homology(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "census", "--pmax", "12")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["suites"]["census"]["pairs"] == 34
    code, out, _ = run(capsys, "verify", "--suite", "homology", "--pmax", "50")
    rep = json.loads(out)
    assert code == 0
    for r in rep["suites"]["homology"]["results"]:
        assert r["windings"] == [r["p"], r["q"], r["q"] - r["p"]]


def test_verify_easy_small(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "easy-case", "--pmax", "3")
    rep = json.loads(out)["suites"]["easy-case"]
    assert code == 0
    assert [r["verdict"] for r in rep["results"]] == ["all candidates refuted"] * 2
    assert rep["caps"] == {"max_delta": 3, "max_eps_r": "3q", "disabled": []}


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "easy-case", "--pmax", "3",
                       "--caps-delta", "1", "--disable", "arcs-in-E")
    rep = json.loads(out)
    assert code == 1 and not rep["passed"]
    assert any(r["witnesses"] for r in rep["suites"]["easy-case"]["results"])


def test_twobridge(capsys):
    code, out, _ = run(capsys, "twobridge", "2/5")
    rep = json.loads(out)
    assert code == 0 and rep["hyperbolic"] and rep["nontrivial"]
    assert all(v["status"] == "excluded" for v in rep["rs_conditions"])
    rep = json.loads(run(capsys, "twobridge", "1/3")[1])
    assert rep["nontrivial"] and not rep["hyperbolic"]
    rep = json.loads(run(capsys, "twobridge", "1/1")[1])
    assert not rep["nontrivial"] and rep["rs_conditions"] is None and "refused" in rep


def test_homology_single(capsys):
    code, out, _ = run(capsys, "homology", "--p", "3", "--q", "4", "--format", "text")
    assert code == 0 and "windings [3, 4, 1]" in out and "x^3 y^-4" in out


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"suite": "census", "pmax": 5, "format": "text"}))
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 0 and "census: PASS (5 pairs, bound 5)" in out
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--pmax", "6", "--format", "json")
    assert json.loads(out)["suites"]["census"]["pairs"] == 6
    cfg.write_text(json.dumps({"nonsense": 1}))
    assert run(capsys, "verify", "--config", str(cfg))[0] == 2


def test_out_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cli.OUT_DIR_ENV, str(tmp_path))
    code, out, _ = run(capsys, "pattern", "--p", "2", "--q", "3")
    assert code == 0 and not out
    assert json.loads((tmp_path / "pattern-p2-q3.json").read_text())["p"] == 2


def test_report_roundtrip_and_determinism(capsys):
    a = run(capsys, "verify", "--suite", "hard-case", "--pmax", "2")[1]
    b = run(capsys, "verify", "--suite", "hard-case", "--pmax", "2")[1]
    assert a == b
    assert cli.dumps(json.loads(a)) == a
