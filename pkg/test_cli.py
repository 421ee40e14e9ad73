import json

import pytest

from fermicat.main import build_parser, config_from_args, run


def output(capsys):
    return capsys.readouterr().out


# ---------------------------------------------------------------------------
# Parsing the command line
# ---------------------------------------------------------------------------

def test_defaults():
    config = config_from_args(build_parser().parse_args(["normalize", "id(+)"]))
    assert config.command == "normalize"
    assert config.args == ("id(+)",)
    assert config.source == 0 and config.n == 2 and config.format == "text"


def test_source_accepts_none():
    config = config_from_args(build_parser().parse_args(["normalize", "--source", "none", "id(1)"]))
    assert config.source is None


def test_bad_source_is_a_usage_error(capsys):
    assert run(["normalize", "--source", "2", "id(+)"]) == 2


def test_missing_command_is_a_usage_error(capsys):
    assert run([]) == 2


# ---------------------------------------------------------------------------
# normalize / render
# ---------------------------------------------------------------------------

def test_normalize_crossing_is_zero(capsys):
    assert run(["normalize", "x(++)"]) == 0
    assert output(capsys).strip() == "0"


def test_normalize_bubble(capsys):
    assert run(["normalize", "cup(-+) ; cap(-+)"]) == 0
    assert output(capsys).strip() == "1"
    assert run(["normalize", "--source", "none", "cup(-+) ; cap(-+)"]) == 0
    assert output(capsys).strip() == "cw"


def test_normalize_identity(capsys):
    assert run(["normalize", "id(-+)"]) == 0
    text = output(capsys)
    assert text.startswith("term 1: coeff 1")
    assert "| |" in text


def test_normalize_json(capsys):
    assert run(["normalize", "--format", "json", "id(+)"]) == 0
    payload = json.loads(output(capsys))
    assert payload["input"] == "id(+)"
    assert payload["source"] == 0
    assert payload["morphism"]["terms"][0]["coeff"] == "1"


def test_parse_error_exits_2_with_a_caret(capsys):
    assert run(["normalize", "foo(+)"]) == 2
    err = capsys.readouterr().err
    assert "error:" in err
    assert "^^^" in err


def test_boundary_error_exits_2(capsys):
    assert run(["normalize", "id(+) ; id(-)"]) == 2
    assert "error:" in capsys.readouterr().err


def test_render_writes_png(tmp_path, capsys):
    path = tmp_path / "zigzag.png"
    assert run(["render", "--png", str(path), "id(+) * cup(-+)"]) == 0
    assert output(capsys).splitlines()[0] == "id(+) * cup(-+)"
    assert path.read_bytes().startswith(b"\x89PNG")


# ---------------------------------------------------------------------------
# inner / reduce
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("argv, expected", [
    (["inner", "+", "+"], "1 = 1"),
    (["inner", "--", "-+", "1"], "1 = 1"),
    (["inner", "+", "--", "-"], "0 = 0"),
    (["inner", "--source", "1", "--", "-", "-"], "1 = 1"),
])
def test_inner_agrees_with_the_oracle(argv, expected, capsys):
    assert run(argv) == 0
    assert output(capsys).strip() == expected


def test_inner_json(capsys):
    assert run(["inner", "--format", "json", "+-+", "+"]) == 0
    payload = json.loads(output(capsys))
    assert payload["hom_dim"] == payload["oracle"] == 1
    assert payload["agree"] is True


def test_inner_needs_a_label(capsys):
    assert run(["inner", "--source", "none", "+", "+"]) == 2


def test_reduce(capsys):
    assert run(["reduce", "+-+"]) == 0
    lines = output(capsys).splitlines()
    assert lines[0] == "+-+ ~ +"
    assert lines[-2:] == ["  up . down = id: True", "  down . up = id: True"]


def test_reduce_invalid_word_is_zero(capsys):
    assert run(["reduce", "--source", "1", "--", "-+"]) == 0
    assert output(capsys).strip() == "-+ ~ 0"


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def test_verify_iso(capsys):
    assert run(["verify", "iso"]) == 0
    assert output(capsys).startswith("iso: 7/7 passed")


def test_verify_adjunction_for_n_3(capsys):
    assert run(["verify", "adjunction", "--n", "3", "--format", "json"]) == 0
    payload = json.loads(output(capsys))
    assert payload["failed"] == 0
    assert payload["passed"] == 5


def test_verify_json_is_deterministic(capsys):
    argv = ["verify", "nilpotent", "--max-len", "4", "--samples", "20", "--seed", "5", "--format", "json"]
    assert run(argv) == 0
    first = output(capsys)
    assert run(argv) == 0
    assert output(capsys) == first


def test_unknown_suite_is_a_usage_error(capsys):
    assert run(["verify", "everything"]) == 2
