import csv
import io
import json

import pytest

from certificate_app import RunConfig
from certification import PolytopePoint
from main import build_parser, build_run_config, main
from utils.errors import InvalidArgumentError


@pytest.mark.parametrize(
    "partition, cycle_type, n, value",
    [
        ("[25,2]", "(25,1,1)", 27, "-1"),
        ("[n-2,2]", "(n-2,1^2)", 27, "-1"),
        ("[n-3,3]", "(n)", 27, "0"),
        ("[17,1,1,1]", "(14,2,2,2)", 20, "2"),
    ],
)
def test_char_prints_the_value(capsys, partition, cycle_type, n, value):
    assert main(["char", str(n), partition, cycle_type]) == 0
    assert capsys.readouterr().out.strip() == value


def test_char_json(capsys):
    assert main(["char", "20", "[n-3,1^3]", "(n-6,2^3)", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rows"] == [{"partition": [17, 1, 1, 1], "values": ["2"]}]


def test_char_table_csv(capsys):
    assert main(["char", "27", "--table", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["partition", "label", "(27)", "(25,1,1)", "(25,2)", "(22,4,1)", "(26,1)"]
    assert rows[2] == ["[26,1]", "[n-1,1]", "-1", "1", "-1", "0", "0"]
    assert len(rows) == 15


@pytest.mark.parametrize("argv", [["char", "20", "[18,2]"], ["char", "20", "--full"], ["char", "20", "[20]", "(20)", "--table"]])
def test_char_argument_errors(argv):
    assert main(argv) == 1


def test_classes(capsys):
    assert main(["classes", "5"]) == 0
    assert "54" in capsys.readouterr().out

    assert main(["classes", "5", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["total"] == "54"


def test_classes_t_out_of_range():
    assert main(["classes", "5", "6"]) == 1


def test_certify_json(capsys):
    assert main(["certify", "20", "--point", "100/1,50/1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verified"] is True
    assert data["omegas"] == ["349", "130", "510", "50", "100"]


def test_certify_writes_a_report(tmp_path, capsys):
    path = tmp_path / "n20.json"
    assert main(["certify", "20", "--out", str(path)]) == 0
    assert "Report written to" in capsys.readouterr().out
    assert json.loads(path.read_text(encoding="utf-8"))["boundExpression"] == "6*(17)!"


def test_certify_outside_the_polytope_exits_two(capsys):
    assert main(["certify", "20", "--point", "0,0"]) == 2
    assert "Certification failed" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        ["certify", "10"],
        ["certify", "20", "--format", "json", "--out", "x.csv"],
        ["certify", "20", "--out", "x.txt"],
        ["certify", "20", "--threshold", "5"],
        ["certify", "20", "--point", "1/2"],
        ["certify", "20", "--point", "0.5,1"],
        ["spectrum", "11"],
        ["search", "5"],
        ["certify"],
        ["frobnicate", "3"],
    ],
)
def test_usage_errors_exit_one(argv):
    assert main(argv) == 1


def test_spectrum_csv(capsys):
    assert main(["spectrum", "20", "--point", "100,50", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "partition,degree,eigenvalue,regime"
    assert lines[1] == '[20],1,1139,computed'
    assert len(lines) == 628


def test_oracle_checks(capsys):
    assert main(["oracle", "mis", "4"]) == 0
    assert "VERIFIED" in capsys.readouterr().out

    assert main(["oracle", "canonical", "6", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"check": "canonical", "n": 6, "size": 36, "expected": 36, "independent": True, "passed": True}


def test_oracle_json(capsys):
    assert main(["oracle", "spectrum", "5", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data == {"check": "spectrum", "n": 5, "t": 3, "method": "float", "eigenvalues": 120, "passed": True}


def test_oracle_refuses_large_n():
    assert main(["oracle", "spectrum", "7"]) == 1
    assert main(["oracle", "mis", "5", "--mis-max-n", "4"]) == 1
    assert main(["oracle", "canonical", "7"]) == 1


def test_oracle_canonical_cap_can_be_raised(capsys):
    assert main(["oracle", "canonical", "7", "--oracle-max-n", "7", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["size"] == 144


def test_oracle_has_no_out_flag():
    assert main(["oracle", "mis", "4", "--out", "x.json"]) == 1


def test_run_config_round_trip():
    args = build_parser().parse_args(["certify", "20", "--point", "100,50", "--mode", "hybrid"])
    config = build_run_config(args)
    assert config.parsed_point() == PolytopePoint(100, 50)
    assert RunConfig.from_dict(config.to_dict()) == config


def test_run_config_rejects_unknown_keys():
    with pytest.raises(InvalidArgumentError):
        RunConfig.from_dict({"command": "certify", "n": 20, "colour": "blue"})


def test_run_config_rejects_point_for_other_commands():
    with pytest.raises(InvalidArgumentError):
        RunConfig(command="classes", n=5, point=("1", "2")).validate()


def test_workers_come_from_the_environment(monkeypatch):
    monkeypatch.setenv("CERT_WORKERS", "3")
    args = build_parser().parse_args(["spectrum", "20"])
    assert build_run_config(args).workers == 3
