import csv
import json
import subprocess
import sys

import pytest

from sylowchar.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_multiplicity_single(capsys):
    assert run(capsys, "multiplicity", "--p", "3", "--n", "9", "--lambda", "5,4")[:2] == (0, "0\n")
    assert run(capsys, "multiplicity", "--p", "3", "--n", "9", "--lambda", "9")[:2] == (0, "1\n")
    code, out, _ = run(
        capsys, "multiplicity", "--p", "3", "--n", "9", "--lambda", "2^4,1", "--json"
    )
    assert json.loads(out)["multiplicity"] == 0


def test_multiplicity_report_json(capsys):
    code, out, _ = run(capsys, "multiplicity", "--p", "3", "--n", "9", "--json")
    d = json.loads(out)
    assert code == 0
    assert d["prime"] == 3 and d["degree"] == 9
    assert len(d["entries"]) == 30 and len(d["zero_set"]) == 6
    assert all(set(e) == {"partition", "multiplicity"} for e in d["entries"])
    assert d["checks"] == {"degree_identity": True, "conjugation_symmetry": True}


def test_multiplicity_table(capsys):
    code, out, _ = run(capsys, "multiplicity", "--p", "3", "--n", "4")
    assert code == 0
    rows = [("4", 1), ("3,1", 1), ("2^2", 0), ("2,1^2", 1), ("1^4", 1)]
    assert out.splitlines() == [f"{lam:<5}  {m}" for lam, m in rows]


def test_verify_zero_sets(capsys):
    code, out, err = run(capsys, "verify", "theorem-a", "--p", "3", "--max-n", "12")
    assert code == 0
    d = json.loads(out)
    assert d["passed"] and len(d["checks"]) == 12
    assert err.count("PASS") == 12


def test_verify_prime_power(capsys):
    code, out, _ = run(capsys, "verify", "prime-power", "--p", "5", "--k", "2")
    d = json.loads(out)
    assert code == 0 and d["passed"]
    assert sorted(map(tuple, d["computed"])) == sorted([(24, 1), (2,) + (1,) * 23])


def test_verify_dset(capsys):
    code, out, err = run(
        capsys, "verify", "dset", "--q", "2", "--p", "5", "--k", "1", "--expect-unequal"
    )
    d = json.loads(out)
    assert code == 0 and d["passed"] and not d["equal"]
    assert d["only_in_A"] and "in A only" in err
    code, out, _ = run(capsys, "verify", "dset", "--q", "2", "--p", "5", "--k", "1")
    assert code == 1
    code, out, _ = run(capsys, "verify", "dset", "--q", "2", "--p", "3", "--k", "2")
    assert code == 0 and json.loads(out)["scanned"] == 385


def test_verify_tables(capsys):
    code, out, _ = run(capsys, "verify", "tables", "--p", "3", "--k", "2")
    d = json.loads(out)
    assert code == 0 and d["passed"] and len(d["rows"]) == 23


def test_lr_commands(capsys):
    assert run(capsys, "lr", "--lambda", "3,2,1", "--mu", "2,1", "--nu", "2,1")[:2] == (0, "2\n")
    assert run(capsys, "lr", "--lambda", "6", "--mu", "3", "--nu", "3")[:2] == (0, "1\n")
    assert run(capsys, "lr-types", "--outer", "2,2", "--inner", "1")[:2] == (0, "[(2,1)]\n")
    code, out, _ = run(capsys, "lr-types", "--outer", "2,1", "--inner", "1", "--json")
    assert json.loads(out)["types"] == [[2], [1, 1]]


def test_omega_command(capsys):
    assert run(capsys, "omega", "--q", "3", "--lambda", "9,8,7,7,6,4,4,3")[:2] == (
        0,
        "6,5,5,5,4,3,2,2\n",
    )
    code, out, _ = run(capsys, "omega", "--q", "3", "--lambda", "9,8,7,7,6,4,4,3", "--json")
    assert json.loads(out) == {
        "q": 3,
        "lambda": [9, 8, 7, 7, 6, 4, 4, 3],
        "omega": [6, 5, 5, 5, 4, 3, 2, 2],
        "zeta": 2,
    }


def test_sylow_classes(capsys):
    code, out, _ = run(capsys, "sylow-classes", "--p", "3", "--n", "9")
    d = json.loads(out)
    assert code == 0 and len(d["classes"]) == 5
    assert sum(int(c["count"]) for c in d["classes"]) == int(d["order"]) == 81
    code, out, err = run(capsys, "sylow-classes", "--p", "5", "--n", "10", "--oracle")
    assert code == 0 and json.loads(out)["oracle_match"] and "PASS" in err


def test_sylow_classes_oracle_mismatch_exits_1(capsys, monkeypatch):
    from sylowchar import cli
    from sylowchar.sylow import ClassDistribution

    monkeypatch.setattr(cli, "enumeration_oracle", lambda p, n: ClassDistribution(p, n, {(n,): 1}))
    code, out, err = run(capsys, "sylow-classes", "--p", "3", "--n", "3", "--oracle")
    assert code == 1 and "FAIL" in err and json.loads(out)["oracle_match"] is False


def test_constituent_count(capsys):
    assert run(capsys, "constituent-count", "--p", "3", "--n", "27")[:2] == (0, "3008\n")
    code, out, _ = run(capsys, "constituent-count", "--p", "3", "--n", "12", "--json")
    assert json.loads(out) == {"prime": 3, "degree": 12, "constituents": 77, "partitions": 77}


@pytest.mark.parametrize(
    "argv",
    [
        ["multiplicity", "--p", "4", "--n", "9"],
        ["multiplicity", "--p", "3", "--n", "9", "--lambda", "5,3"],
        ["multiplicity", "--p", "3", "--n", "61"],
        ["omega", "--q", "3", "--lambda", "3,1"],
        ["lr", "--lambda", "3", "--mu", "2", "--nu", "2"],
        ["report", "--p", "3", "--n", "4", "--delimiter", ";;"],
    ],
)
def test_usage_errors_exit_2(capsys, argv, tmp_path):
    if argv[0] == "report":
        argv = argv + ["--out", str(tmp_path)]
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["multiplicity", "--p", "3", "--n", "9", "--lambda", "1,2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["multiplicity", "--p", "3", "--n", "9", "--threads", "0"])
    assert exc.value.code == 2


def test_report_writes_table_and_figure(capsys, tmp_path):
    code, out, err = run(capsys, "report", "--p", "5", "--n", "25", "--out", str(tmp_path))
    assert code == 0
    d = json.loads(out)
    table = tmp_path / "multiplicity_p5_n25.csv"
    figure = tmp_path / "multiplicity_p5_n25.png"
    assert d["files"] == {"table": str(table), "figure": str(figure)}
    assert figure.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    with open(table) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["index", "partition", "degree", "multiplicity"]
    assert len(rows) == 1 + 1958
    zeros = {r[1] for r in rows[1:] if r[3] == "0"}
    assert zeros == {"24,1", "2,1^23"}


def test_report_tab_and_svg(capsys, tmp_path):
    code, out, _ = run(
        capsys,
        "report",
        "--p",
        "3",
        "--n",
        "9",
        "--out",
        str(tmp_path),
        "--delimiter",
        "tab",
        "--format",
        "svg",
    )
    assert code == 0
    lines = (tmp_path / "multiplicity_p3_n9.tsv").read_text().splitlines()
    assert lines[0].split("\t") == ["index", "partition", "degree", "multiplicity"]
    assert lines[1] == "0\t9\t1\t1"
    assert (tmp_path / "multiplicity_p3_n9.svg").read_text().lstrip().startswith("<?xml")


def _invoke(*argv):
    return subprocess.run(
        [sys.executable, "-m", "sylowchar.cli", *argv], capture_output=True, check=False
    )


def test_determinism_across_processes_and_thread_counts():
    a = _invoke("multiplicity", "--p", "3", "--n", "18", "--json", "--threads", "1")
    b = _invoke("multiplicity", "--p", "3", "--n", "18", "--json", "--threads", "1")
    c = _invoke("multiplicity", "--p", "3", "--n", "18", "--json", "--threads", "3")
    assert a.returncode == 0
    assert a.stdout == b.stdout == c.stdout


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "sylowchar" in capsys.readouterr().out
