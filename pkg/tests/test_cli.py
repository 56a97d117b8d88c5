import json

import pytest

from uqwork import cache
from uqwork.cache import cached_nilradical, nilradical_from_json
from uqwork.cli import main
from uqwork.pbw import quantum_group
from uqwork.rootdata import ParabolicSubset


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_normalize_prints_normal_form(capsys):
    code, out, _ = run(capsys, "normalize", "E F - F E")
    assert code == 0
    assert "K[2]" in out and "K[-2]" in out


def test_normalize_json_to_stdout(capsys):
    code, out, _ = run(capsys, "normalize", "--type", "A2", "--json", "-", "E1 E2")
    assert code == 0
    data = json.loads(out)
    assert data["type"] == "A2" and data["normal_form"]


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "normalize", "E F +")
    assert code == 3
    assert "position" in err


@pytest.mark.parametrize("argv", [
    ["check", "nosuch"],
    ["check", "serre", "--type", "G2"],
    ["check", "serre", "--cutoff", "0"],
    ["check", "serre", "--type", "A2", "--parabolic", "3"],
    ["check", "duflo", "--lambda", "q^x"],
    ["dims", "verma", "--seed", "-1"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as info:
        raise SystemExit(main(argv))
    assert info.value.code == 3


def test_check_pass_and_json_stable(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["check", "serre", "--json", str(a)]) == 0
    assert main(["check", "serre", "--json", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["schema"] == 1 and data["summary"]["fail"] == 0
    assert all(c["anchor"] for c in data["cases"])


def test_small_cutoff_is_inconclusive(capsys):
    code, out, _ = run(capsys, "check", "serre", "--type", "A2", "--cutoff", "2")
    assert code == 2
    assert "INCONCLUSIVE" in out


def test_rank_one_suite_on_rank_two(capsys):
    code, out, _ = run(capsys, "check", "duflo", "--type", "A2")
    assert code == 2


def test_dims_tables(capsys):
    code, out, _ = run(capsys, "dims", "E-subalgebra", "--type", "A2", "--cutoff", "4", "--json", "-")
    assert code == 0
    rows = json.loads(out)["table"]
    assert [r["dim"] for r in rows] == [1, 2, 4, 6, 9]
    assert all(r["dim"] == r["oracle"] for r in rows)
    code, out, _ = run(capsys, "dims", "nilradical", "--type", "A2", "--parabolic", "1", "--depth", "3",
                       "--json", "-")
    rows = json.loads(out)["table"]
    assert [r["r"] for r in rows] == [1, 1, 2, 2] == [r["rbar"] for r in rows]
    code, out, _ = run(capsys, "dims", "verma", "--lambda", "q^3", "--depth", "4", "--json", "-")
    assert [r["dim"] for r in json.loads(out)["table"]] == [1] * 5


def test_config_file_and_flag_precedence(tmp_path, capsys):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[uqwork]\ntype = A2\ncutoff = 4\n")
    code, out, _ = run(capsys, "dims", "E-subalgebra", "--config", str(cfg), "--json", "-")
    assert code == 0
    data = json.loads(out)
    assert data["config"]["type"] == "A2" and len(data["table"]) == 5
    code, out, _ = run(capsys, "dims", "E-subalgebra", "--config", str(cfg), "--cutoff", "2", "--json", "-")
    assert len(json.loads(out)["table"]) == 3


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "bad.ini"
    cfg.write_text("[uqwork]\ncolour = blue\n")
    assert run(capsys, "dims", "verma", "--config", str(cfg))[0] == 3
    assert run(capsys, "dims", "verma", "--config", str(tmp_path / "missing.ini"))[0] == 3


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    monkeypatch.setattr(cache, "_MEMORY", {})
    alg = quantum_group("A2")
    P = ParabolicSubset([0])
    N = cached_nilradical(alg, P, "r", 2)
    files = list(tmp_path.glob("nilradical-*.json"))
    assert len(files) == 1
    back = nilradical_from_json(alg, json.loads(files[0].read_text()))
    assert back.dims() == N.dims()
    assert back.graded_basis == N.graded_basis
    # a fresh process would read the file rather than recompute
    monkeypatch.setattr(cache, "_MEMORY", {})
    again = cached_nilradical(alg, P, "r", 2)
    assert again.graded_basis == N.graded_basis


def test_nilradical_suite_uses_cache_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setattr(cache, "_MEMORY", {})
    code, _, _ = run(capsys, "check", "nilradical", "--type", "A2", "--cache-dir", str(tmp_path))
    assert code == 0
    assert list(tmp_path.glob("nilradical-*.json"))
