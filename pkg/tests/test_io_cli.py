from __future__ import annotations

import json

import pytest

from conftest import ASM5, D0_ROWS
from dppbij.cli import CliConfig, UsageError, main
from dppbij.errors import ParseError
from dppbij.io import dumps, parse_raw, to_json_obj, to_text
from dppbij.model import StatQuadruple, validate_dpp
from dppbij.paths import dpp_to_paths

D0_TEXT = "6 6 6 4 2\n5 3 2 1\n2\n"
ASM5_TEXT = "\n".join(" ".join(map(str, r)) for r in ASM5)


def run(capsys, monkeypatch, argv, stdin=""):
    import io as _io

    monkeypatch.setattr("sys.stdin", _io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# -- formats ------------------------------------------------------------


def test_parse_dpp_text_and_json():
    assert parse_raw("dpp", D0_TEXT) == D0_ROWS
    assert parse_raw("dpp", "6 6 6 4 2 / 5 3 2 1 / 2") == D0_ROWS
    assert parse_raw("dpp", json.dumps(D0_ROWS)) == D0_ROWS
    assert parse_raw("dpp", "") == []


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_raw("asm", "1 0\n0")
    with pytest.raises(ParseError):
        parse_raw("perm", "1 x")
    with pytest.raises(ParseError):
        parse_raw("dpp", "[[1, 2]")
    with pytest.raises(ParseError):
        parse_raw("nope", "")
    with pytest.raises(ParseError):
        parse_raw("paths", "0 3 ESSS extra")


def test_json_round_trips():
    d = validate_dpp(D0_ROWS)
    assert validate_dpp(parse_raw("dpp", dumps(d))) == d
    f = dpp_to_paths(d)
    assert parse_raw("paths", dumps(f)) == f
    assert parse_raw("paths", to_text(f)) == f
    assert parse_raw("paths", to_text(f, one_line=True)) == f
    assert to_json_obj(StatQuadruple(1, 2, 3, 4)) == {"p": 1, "m": 2, "t": 3, "b": 4}
    assert to_text(StatQuadruple(1, 2, 3, 4)) == "p=1 m=2 t=3 b=4"


# -- config -------------------------------------------------------------


def test_config_invariants():
    assert CliConfig().max_n == 10
    with pytest.raises(UsageError):
        CliConfig(format="xml")
    with pytest.raises(UsageError):
        CliConfig(max_n=0)


# -- commands -----------------------------------------------------------


def test_validate(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["validate", "dpp"], D0_TEXT)[0] == 0
    code, out, _ = run(capsys, monkeypatch, ["validate", "dpp"], "1")
    assert code == 1 and "Condition3Violated" in out
    assert run(capsys, monkeypatch, ["validate", "asm"], "1 0\n0 1 0")[0] == 2
    assert run(capsys, monkeypatch, ["validate", "asm"], ASM5_TEXT)[0] == 0
    code, out, _ = run(capsys, monkeypatch, ["validate", "perm", "--format", "json"], "1 1")
    assert code == 1 and json.loads(out)["error"] == "NotAPermutation"


def test_validate_from_file(tmp_path, capsys, monkeypatch):
    p = tmp_path / "d0.txt"
    p.write_text(D0_TEXT)
    assert run(capsys, monkeypatch, ["validate", "dpp", str(p)])[0] == 0
    assert run(capsys, monkeypatch, ["validate", "dpp", str(tmp_path / "missing")])[0] == 2


def test_stats(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["stats", "dpp", "--dim", "6"], D0_TEXT)
    assert code == 0 and out.strip() == "p=3 m=3 t=10 b=2"
    code, out, _ = run(capsys, monkeypatch, ["stats", "perm", "--format", "json"], "1 2 3 4")
    assert json.loads(out) == {"p": 0, "m": 0, "t": 0, "b": 0}
    code, out, _ = run(capsys, monkeypatch, ["stats", "asm"], ASM5_TEXT)
    assert out.strip() == "p=1 m=2 t=4 b=1"
    assert run(capsys, monkeypatch, ["stats", "dpp"], D0_TEXT)[0] == 2
    assert run(capsys, monkeypatch, ["stats", "dpp", "--dim", "5"], D0_TEXT)[0] == 1


def test_convert(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["convert", "perm", "invword"], "3 5 2 4 6 1")
    assert code == 0 and out.strip() == "2 3 1 1 1"
    code, out, _ = run(capsys, monkeypatch, ["convert", "invword", "perm"], "2 3 1 1 1")
    assert out.strip() == "3 5 2 4 6 1"
    code, out, _ = run(capsys, monkeypatch, ["convert", "perm", "dpp", "--dim", "3"], "3 2 1")
    assert code == 0 and out.strip().replace("\n", " / ") == "3 3 / 2"
    code, _, err = run(capsys, monkeypatch, ["convert", "dpp", "perm", "--dim", "6"], D0_TEXT)
    assert code == 1 and "HasSpecialParts" in err
    code, out, _ = run(capsys, monkeypatch, ["convert", "dpp", "perm", "--dim", "3"], "3 3\n2")
    assert out.strip() == "3 2 1"
    code, out, _ = run(capsys, monkeypatch, ["convert", "perm", "matrix"], "2 1")
    assert out.strip() == "0 1\n1 0"
    code, out, _ = run(capsys, monkeypatch, ["convert", "asm", "perm"], "0 1\n1 0")
    assert out.strip() == "2 1"
    code, _, err = run(capsys, monkeypatch, ["convert", "asm", "perm"], ASM5_TEXT)
    assert code == 1 and "NotAPermutationMatrix" in err
    assert run(capsys, monkeypatch, ["convert", "perm", "dpp"], "1 2")[0] == 2
    assert run(capsys, monkeypatch, ["convert", "invword", "dpp", "--dim", "3"], "0 0")[0] == 2


def test_convert_paths_round_trip(capsys, monkeypatch):
    _, paths_out, _ = run(capsys, monkeypatch, ["convert", "dpp", "paths", "--format", "json"], D0_TEXT)
    code, out, _ = run(capsys, monkeypatch, ["convert", "paths", "dpp", "--format", "json"], paths_out)
    assert code == 0 and json.loads(out) == D0_ROWS


def test_enumerate(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["enumerate", "asm", "3", "--count-only"])[1].strip() == "7"
    assert run(capsys, monkeypatch, ["enumerate", "dpp", "1", "--count-only"])[1].strip() == "1"
    assert run(capsys, monkeypatch, ["enumerate", "perm", "4", "--count-only"])[1].strip() == "24"
    out = run(capsys, monkeypatch, ["enumerate", "dpp", "3", "--no-special", "--format", "json"])[1]
    assert [json.loads(ln) for ln in out.splitlines()] == [[], [[2]], [[3]], [[3, 2]], [[3, 3]], [[3, 3], [2]]]


def test_max_n(capsys, monkeypatch):
    assert run(capsys, monkeypatch, ["enumerate", "perm", "5", "--max-n", "4"])[0] == 2
    monkeypatch.setenv("DPP_MAX_N", "4")
    assert run(capsys, monkeypatch, ["enumerate", "perm", "5", "--count-only"])[0] == 2
    assert run(capsys, monkeypatch, ["enumerate", "perm", "4", "--count-only"])[0] == 0
    assert run(capsys, monkeypatch, ["enumerate", "perm", "5", "--count-only", "--max-n", "5"])[0] == 0
    monkeypatch.setenv("DPP_MAX_N", "zz")
    assert run(capsys, monkeypatch, ["enumerate", "perm", "2"])[0] == 2


def test_verify(capsys, monkeypatch):
    code, out, _ = run(capsys, monkeypatch, ["verify", "equidistribution", "3", "--projection", "quadruple"])
    assert code == 0 and "asm=7 dpp=7 PASS" in out
    code, out, _ = run(capsys, monkeypatch, ["verify", "bijection", "5"])
    assert code == 0 and "120 permutations" in out and "PASS" in out
    code, out, _ = run(capsys, monkeypatch, ["verify", "equidistribution", "1", "--format", "json"])
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = run(capsys, monkeypatch, ["verify", "words", "12", "--samples", "50", "--seed", "3"])
    assert code == 0 and "PASS" in out
    assert run(capsys, monkeypatch, ["verify", "bijection", "8"])[0] == 1


def test_output_is_deterministic(capsys, monkeypatch):
    argv = ["enumerate", "asm", "4", "--format", "json"]
    assert run(capsys, monkeypatch, argv)[1] == run(capsys, monkeypatch, argv)[1]


def test_usage_errors(capsys, monkeypatch):
    assert run(capsys, monkeypatch, [])[0] == 2
    assert run(capsys, monkeypatch, ["bogus"])[0] == 2
    assert run(capsys, monkeypatch, ["--help"])[0] == 0
