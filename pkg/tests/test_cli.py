import json

import pytest

from cominuscule.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rootsys_dump(capsys):
    code, out, _ = run(capsys, "rootsys", "dump", "--type", "E6")
    assert code == 0
    data = json.loads(out)
    assert data["rank"] == 6 and data["positive_root_count"] == 36


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--max-rank", "4")
    assert code == 0
    rows = json.loads(out)
    assert {"space", "family", "ambient", "marked_node", "dim", "c1"} <= set(rows[0])
    code, out, _ = run(capsys, "catalog", "show", "--space", "IG:5")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 15 and data["table1_check"]["matches"]


def test_catalog_show_bad_space_is_usage_error(capsys):
    code, _, err = run(capsys, "catalog", "show", "--space", "G:0:5")
    assert code == 2
    assert "G:0:5" in err or "k" in err


def test_omega_decompose_schema(capsys):
    code, out, _ = run(capsys, "omega", "decompose", "--space", "E6", "--p", "8")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["space", "p", "method", "summands", "rank_check"]
    assert data["method"] == "WeightDP"
    assert data["rank_check"]["expected"] == data["rank_check"]["got"] == 12870
    for s in data["summands"]:
        assert list(s) == ["weight", "levi_dim", "twist"]
        assert s["twist"] == s["weight"][0]


def test_omega_decompose_csv(capsys):
    code, out, _ = run(capsys, "omega", "decompose", "--space", "G:2:5",
                       "--p", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "weight,levi_dim,twist"
    assert len(lines) == 3


def test_min_twist_csv_row(capsys):
    code, out, _ = run(capsys, "min-twist", "--space", "G:3:9", "--p", "7",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "space,p,l,d,h0_dim"
    space, p, l, d, h0 = lines[1].split(",")
    assert (space, p, l, d) == ("G:3:9", "7", "6", "-2")


def test_min_twist_force_plethysm_on_quadric(capsys):
    code, out, _ = run(capsys, "min-twist", "--space", "Q:6", "--p", "3",
                       "--force-plethysm")
    assert code == 0
    assert json.loads(out)["l"] == 4


def test_partitions_verify(capsys):
    code, out, _ = run(capsys, "partitions", "verify", "--family", "C",
                       "--max-rank", "5")
    assert code == 0
    rows = json.loads(out)
    assert all(r["formula_l"] == r["oracle_l"] for r in rows)
    assert all(list(r) == ["family", "k", "n", "p", "formula_l", "oracle_l",
                           "witnesses"] for r in rows)


def test_table_audit_exit_codes(capsys):
    code, out, _ = run(capsys, "table-audit", "--which", "E7")
    assert code == 0
    assert json.loads(out)["ok"]
    # the transcription of the 16-dimensional table carries one typo, which
    # the audit must surface as a mismatch exit
    code, out, _ = run(capsys, "table-audit", "--which", "E6")
    assert code == 1
    data = json.loads(out)
    assert not data["ok"]
    bad = [r for r in data["rows"] if not r["weights_match"]]
    assert [r["p"] for r in bad] == [8]


def test_nonvanishing_cli(capsys):
    code, out, _ = run(capsys, "nonvanishing", "--max-rank", "4")
    assert code == 0
    data = json.loads(out)
    assert data["violations"] == 0
    assert {e["space"] for e in data["exceptions"]} == {"Q:3", "IG:2", "IG:3", "IG:4"}


def test_foliation_commands(capsys):
    code, out, _ = run(capsys, "foliation", "rect", "--k", "3", "--n", "6", "--p", "4")
    assert code == 0
    (row,) = json.loads(out)
    assert row["minimal"] and row["degree"] == -1
    code, out, _ = run(capsys, "foliation", "sympl", "--n", "5", "--a", "3")
    assert code == 0
    assert json.loads(out)[0]["degree"] == -3
    code, out, _ = run(capsys, "foliation", "cayley")
    assert code == 0
    assert json.loads(out)[0]["p"] == 8
    code, out, _ = run(capsys, "foliation", "scan", "--max-rank", "5",
                       "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("space,p,l,degree,kind")
    assert len(lines) > 5


def test_foliation_bad_args_usage_error(capsys):
    code, _, err = run(capsys, "foliation", "sympl", "--n", "4", "--a", "9")
    assert code == 2
    assert "a=9" in err


def test_verify_small_run(capsys):
    code, out, _ = run(capsys, "verify", "--max-rank", "3", "--max-p", "4")
    assert code == 0
    data = json.loads(out)
    assert data["ok"] and len(data["components"]) == 6


def test_output_determinism(capsys):
    args = ["omega", "decompose", "--space", "IG:4", "--p", "5"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    args = ["foliation", "scan", "--max-rank", "4", "--format", "csv"]
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "min-twist", "--space", "Q:5", "--p", "2",
                       "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["l"] == 3
