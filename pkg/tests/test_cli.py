import json
import subprocess
import sys

import pytest

from sysroots.cli import main, parse_selector, InputError

from conftest import v


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_family(capsys):
    code, out, _ = run(capsys, "verify", "--family", "G2tilde")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert all(data["axioms"][k]["status"] == "pass" for k in "12345")


def test_verify_corrupted_file(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--family", "G2tilde")
    data = json.loads(out)
    deleted = data["roots"].pop(0)
    p = tmp_path / "corrupted.json"
    p.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--file", str(p))
    assert code == 1
    wit = [c["witness"] for c in json.loads(out)["counterexamples"] if c["id"] == "2"]
    assert [[str(-int(x)) for x in deleted]] in wit


def test_table_ctilde2(capsys):
    code, out, _ = run(capsys, "table", "--family", "Ctilde", "--rank", "2", "--format", "json")
    t = json.loads(out)
    assert code == 0
    assert len(t["rows"]) == 5 and len(t["cols"]) == 4
    for i, r in enumerate(t["rows"]):
        if r in t["cols"]:
            assert t["values"][i][t["cols"].index(r)] == 2
    code, out, _ = run(capsys, "table", "--family", "Ctilde", "--rank", "2", "--format", "tsv")
    assert len(out.splitlines()) == 6


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "verify", "--family", "F4tilde")[1] for _ in range(2)}
    assert len(outs) == 1


@pytest.mark.parametrize("argv", [
    ["verify", "--family", "H9tilde"],
    ["verify", "--file", "/nonexistent/file.json"],
    ["verify", "--classical", "Q7"],
    ["verify", "--family", "Ctilde"],
    ["chains", "--family", "G2tilde", "--alpha", "17"],
    ["chains", "--family", "G2tilde", "--alpha", "(2)"],
    ["chains", "--family", "G2tilde", "--alpha", "(x)"],
    ["decompose", "G1tilde", "--alpha", "5"],
    ["repmat", "--n", "-1"],
    ["catalog", "build"],
    ["catalog", "build", "E7tilde", "--unpatched"],
    ["sweep", "--format", "tsv"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert err.count("\n") == 1 and err.startswith("sysroots: error:")


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == 2


def test_malformed_json_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("[1, 2")
    assert run(capsys, "verify", "--file", str(p))[0] == 2
    p.write_text(json.dumps({"dimension": 1, "roots": [["1"], ["1"]]}))
    code, _, err = run(capsys, "verify", "--file", str(p))
    assert code == 2 and "duplicates" in err


def test_chains(capsys):
    code, out, _ = run(capsys, "chains", "--family", "G2tilde", "--alpha", "(1)", "--beta", "(1)")
    (c,) = json.loads(out)
    assert code == 0 and c["pair"] == [2, 0] and c["elements"] == [["-1"], ["0"], ["1"]]
    code, out, _ = run(capsys, "chains", "--family", "G2tilde", "--alpha", "(1)", "--beta", "(3)",
                       "--beta2", "(-3)")
    rep = json.loads(out)
    assert rep["additivity"] and not rep["containment"] and rep["pair_sum"] == [1, 1]
    code, out, _ = run(capsys, "chains", "--family", "G2tilde", "--alpha", "2", "--format", "tsv")
    assert code == 0 and len(out.splitlines()) == 6


def test_selectors():
    cands = [v(-1, 0), v(0, 0), v(1, 0)]
    assert parse_selector("2", cands) == v(1, 0)
    assert parse_selector("(1,0)", cands) == v(1, 0)
    assert parse_selector("[-1, 0]", cands) == v(-1, 0)
    with pytest.raises(InputError):
        parse_selector("1/2,0", cands)
    with pytest.raises(InputError):
        parse_selector("3", cands)


def test_catalog_and_decompose(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and [r["family"] for r in json.loads(out)][0] == "Ctilde"
    code, out, _ = run(capsys, "catalog", "build", "Ctilde", "--rank", "3")
    assert code == 0 and json.loads(out)["nilradical_dim"] == 7
    code, out, _ = run(capsys, "decompose", "G1tilde", "--alpha", "0")
    rep = json.loads(out)
    assert rep["jordan_type"] == [2, 1]
    assert rep["chain_spaces"][0]["dim"] == 3 and not rep["chain_spaces"][0]["matches_irreducible"]


def test_repmat(capsys):
    code, out, _ = run(capsys, "repmat", "--n", "2")
    data = json.loads(out)
    assert code == 0 and data["H"][2][0] == "2"


def test_export_classical_roundtrip(capsys, tmp_path):
    p = tmp_path / "f4.json"
    assert run(capsys, "export", "--classical", "F4", "--out", str(p))[0] == 0
    assert json.loads(p.read_text())["dimension"] == 4
    assert run(capsys, "verify", "--file", str(p))[0] == 0


def test_report_dir_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("SYSROOTS_REPORT_DIR", str(tmp_path))
    assert run(capsys, "verify", "--family", "G1tilde", "--out", "sub/g1.json")[0] == 0
    assert json.loads((tmp_path / "sub" / "g1.json").read_text())["ok"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sysroots", "verify", "--family", "G1tilde",
                           "--format", "pretty"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("G1tilde: ok")


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep")
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert len(report["criteria"]) == 10
    assert all("seconds" not in c for c in report["criteria"].values())
