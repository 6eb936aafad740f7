"""Command-line wiring: exit codes, reports, cache, determinism."""

import json
import os

import pytest

from e8g3.cli import main

def test_verify_rootsys_json(tmp_path, capsys):
    out = tmp_path / "r.json"
    code = main(["verify", "rootsys", "--json", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["suite"] == "rootsys"
    assert data["schema_version"] == 1
    assert all(c["status"] == "pass" for c in data["checks"])
    assert data["fixture_digest"]


def test_enumerate_counts(capsys):
    assert main(["enumerate", "1"]) == 0
    assert capsys.readouterr().out.strip() == "0"
    assert main(["enumerate", "2"]) == 0
    assert capsys.readouterr().out.strip() == "70"


def test_enumerate_csv(tmp_path, capsys):
    out = tmp_path / "e.csv"
    assert main(["enumerate", "2", "--csv", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "c12,c18,c24,c30,disc,minimal"
    rows = [ln.split(",") for ln in lines[1:]]
    assert all(int(r[4]) != 0 for r in rows)
    assert sum(int(r[5]) for r in rows) == 70
    # rerun gives identical bytes
    out2 = tmp_path / "e2.csv"
    main(["enumerate", "2", "--csv", str(out2)])
    capsys.readouterr()
    assert out.read_text() == out2.read_text()


def test_enumerate_bad_bound(capsys):
    assert main(["enumerate", "0"]) == 2


def test_bad_suite_name_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_cache_roundtrip(tmp_path, capsys):
    d = str(tmp_path / "cache")
    assert main(["cache", "rebuild", "--dir", d]) == 0
    first = capsys.readouterr().out
    assert main(["cache", "rebuild", "--dir", d]) == 0
    second = capsys.readouterr().out
    assert first == second  # identical digests on rebuild
    assert main(["cache", "check", "--dir", d]) == 0
    capsys.readouterr()
    # corrupt one file: check must fail
    path = os.path.join(d, "structure_constants.txt")
    with open(path, "a") as fh:
        fh.write("tampered\n")
    assert main(["cache", "check", "--dir", d]) == 1


def test_missing_cache_fails(tmp_path, capsys):
    assert main(["cache", "check", "--dir", str(tmp_path / "nope")]) == 1


def test_fixture_env_precedence(tmp_path, capsys, monkeypatch):
    # point E8G3_FIXTURES at a copy of the packaged fixture
    from importlib import resources
    text = resources.files("e8g3").joinpath(
        "fixtures/sections_q.json").read_text()
    fdir = tmp_path / "fx"
    fdir.mkdir()
    (fdir / "sections_q.json").write_text(text)
    monkeypatch.setenv("E8G3_FIXTURES", str(fdir))
    from e8g3.suites import _fixture_text
    assert _fixture_text(None) == text
    # explicit flag wins over the environment
    alt = tmp_path / "alt.json"
    alt.write_text(text)
    assert _fixture_text(str(alt)) == text
