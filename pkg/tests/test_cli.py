import csv
import io
import json
import subprocess
import sys

import pytest

from commgrowth import __version__
from commgrowth import twin_covers as tc
from commgrowth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_heisenberg_table(capsys):
    code, out, _ = run(capsys, "heisenberg", "--p", "2", "--max-n", "4")
    assert code == 0
    table = rows(out)
    assert table[0] == ["p", "n", "formula", "oracle"]
    assert [int(r[2]) for r in table[1:]] == [3, 12, 48, 192]
    assert all(r[2] == r[3] for r in table[1:])


def test_identity_series(capsys):
    code, out, _ = run(capsys, "series", "--identity", "--N", "10")
    assert code == 0
    assert out.splitlines() == ["n,c_n", "1,1"] + [f"{n},0" for n in range(2, 11)]


def test_pgl2_oracle(capsys):
    code, out, _ = run(capsys, "pgl2", "--oracle", "--p", "2", "--n", "2")
    assert code == 0
    assert rows(out)[1] == ["2", "2", "6", "6", "true"]


def test_exit_codes(capsys):
    assert run(capsys, "pgl2", "--oracle", "--p", "7", "--n", "5")[0] == 3
    assert run(capsys, "heisenberg", "--p", "6")[0] == 2
    assert run(capsys, "series", "--identity", "--N", "0")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_tree_budget_reports_partial(capsys):
    code, out, err = run(capsys, "tree", "--max-degree", "3", "--budget", "2")
    assert code == 3
    assert [r[0] for r in rows(out)[1:]] == ["1", "2"]
    assert "budget" in err


def test_tree_from_file(tmp_path, capsys):
    theta = tc.DartMultigraph.from_edges(2, [(0, 1), (0, 1), (0, 1)])
    path = tmp_path / "theta.txt"
    path.write_text(theta.to_text(base=0))
    code, out, _ = run(capsys, "tree", "--graph", str(path), "--max-degree", "2")
    assert code == 0
    table = rows(out)
    assert table[0] == ["degree", "pointed_covers", "twin_covers", "minimal_classes"]
    assert table[1][1] == "1" and table[2][1] == "3"


def test_finite_round_trip(tmp_path, capsys):
    tbl, sub = tmp_path / "g.txt", tmp_path / "a.txt"
    code, first, _ = run(capsys, "finite", "--affine", "2", "2", "--save-table", str(tbl), "--save-subgroup", str(sub))
    assert code == 0
    assert rows(first)[1:] == [["1", "1"], ["2", "2"]]
    code, second, _ = run(capsys, "finite", "--table", str(tbl), "--subgroup", str(sub))
    assert code == 0 and second == first


def test_json_embeds_config_and_version(capsys):
    code, out, _ = run(capsys, "series", "--family", "heisenberg", "--N", "64", "--probe", "3", "--format", "json", "--seed", "5")
    assert code == 0
    data = json.loads(out)
    assert data["version"] == __version__
    assert data["config"]["seed"] == 5 and data["config"]["params"]["N"] == 64
    assert data["series"]["coeffs"]["4"] == "12"
    for _, v in data["probe"]["checkpoints"]:
        assert len(repr(v).replace(".", "").lstrip("0")) <= 13


def test_outputs_are_byte_identical(tmp_path):
    outs = []
    path = tmp_path / "out.json"
    for _ in range(2):
        code = main(["series", "--family", "pgl2", "--N", "200", "--ramified", "2,3", "--format", "json", "--out", str(path)])
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "commgrowth", "pgl2", "--p", "3", "--max-n", "3"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert done.returncode == 0
    assert rows(done.stdout)[-1] == ["3", "3", "36", "36", "true"]


def test_repro_thm2(capsys):
    code, out, err = run(capsys, "repro-thm2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [r["criterion"] for r in data["results"]] == [5, 6]
    assert err.count("[PASS]") == 2
