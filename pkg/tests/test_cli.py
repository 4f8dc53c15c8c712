"""The command line front end."""

import json

import pytest

from gweng.cli import main
from gweng.kernel import flat, game_to_json
from gweng.predicative import value_strategy


@pytest.fixture()
def game_file(tmp_path):
    p = tmp_path / "g3.json"
    p.write_text(json.dumps(game_to_json(flat([0, 1, 2]))))
    return str(p)


def test_check_game(game_file, capsys):
    assert main(["check-game", game_file]) == 0
    out = capsys.readouterr().out
    assert "valid: True" in out


def test_check_strategy(game_file, tmp_path, capsys):
    sp = tmp_path / "s.json"
    sp.write_text(
        json.dumps(game_to_json(value_strategy(flat([0, 1, 2]), 1)))
    )
    assert main(["check-strategy", str(sp), game_file]) == 0
    out = capsys.readouterr().out
    assert "total: True" in out


def test_demo_nine_strategies(capsys):
    assert main(["demo", "nine-strategies"]) == 0
    assert capsys.readouterr().out.strip() == "9"


def test_demo_succ_double(capsys):
    assert main(["demo", "succ-double", "--n", "3"]) == 0
    assert capsys.readouterr().out.strip() == "8"


def test_demo_uip(capsys):
    assert main(["demo", "uip"]) == 0
    out = capsys.readouterr().out.strip()
    assert out == "UIP refuted: 2 distinct proofs, 0 identifications"


def test_demo_funext(capsys):
    assert main(["demo", "funext"]) == 0
    assert "FunExt refuted" in capsys.readouterr().out


def test_demo_isom(capsys):
    assert main(["demo", "isom"]) == 0
    assert "round trips" in capsys.readouterr().out


def test_laws_json_records(capsys):
    assert main(["--format", "json", "laws", "cwf", "--count", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 16
    for line in lines:
        rec = json.loads(line)
        assert set(rec) >= {"law", "instance-digest", "status"}
        assert rec["status"] == "pass"


def test_interpret(tmp_path, capsys):
    f = tmp_path / "j.txt"
    f.write_text("x : N |- refl x : Id N x x")
    assert main(["interpret", str(f)]) == 0
    assert "kind: term" in capsys.readouterr().out


def test_interpret_reports_type_error(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("|- tt : N")
    assert main(["interpret", str(f)]) == 1
    assert "error" in capsys.readouterr().out


def test_register_roundtrip(tmp_path, monkeypatch, game_file, capsys):
    reg = tmp_path / "reg.json"
    monkeypatch.setenv("GWE_REGISTRY", str(reg))
    assert main(["register", game_file]) == 0
    first = capsys.readouterr().out
    assert main(["register", game_file]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert reg.exists()
