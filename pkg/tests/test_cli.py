import json
import os
import subprocess
import sys

import jsonschema
import pytest

from conftest import FIXTURES, fixture_path
from projknot.cli import main
from projknot.schemas import record_schema

ALL = [str(fixture_path(n)) for n in FIXTURES]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_k2_1(capsys):
    code, out, _ = run(["info", str(fixture_path("k2_1"))], capsys)
    assert code == 0
    assert "faces: 5" in out
    assert "components: 1" in out
    assert "homology class 0" in out


def test_info_line_and_k5_9(capsys):
    _, out, _ = run(["--json", "info", str(fixture_path("line")), str(fixture_path("k5_9"))], capsys)
    line, k59 = (json.loads(x) for x in out.splitlines())
    assert len(line["faces"]) == 2
    assert [c["homology_class"] for c in line["components"]] == [1]
    assert [c["homology_class"] for c in k59["components"]] == [1]


def test_group_outputs(capsys):
    _, out, _ = run(["group", str(fixture_path("line"))], capsys)
    assert out.strip() == "< a | >"
    _, out, _ = run(["group", "--raw", str(fixture_path("k2_1"))], capsys)
    assert out.strip() == "< a, b, c, d, e | adbe, bdce, ac, de >"
    _, out, _ = run(["group", "--json", "--trace", str(fixture_path("k2_1"))], capsys)
    record = json.loads(out)
    assert record["trace"] and record["mode"] == "simplified"


def test_homology_and_selflink(capsys):
    _, out, _ = run(["homology", str(fixture_path("k2_1"))], capsys)
    assert out.splitlines()[0] == "Z + Z/2"
    code, out, _ = run(["selflink", str(fixture_path("k5_2"))], capsys)
    assert (code, out.strip()) == (0, "0")
    code, out, err = run(["selflink", str(fixture_path("k5_9"))], capsys)
    assert code == 4
    assert "preimage is connected" in err


def test_lift_emits_pd_lines(capsys):
    _, out, _ = run(["lift", str(fixture_path("k2_1"))], capsys)
    lines = out.splitlines()
    assert sum(line.startswith("X(") for line in lines) == 4
    assert json.loads(lines[-1])["euler_characteristic"] == 2


@pytest.mark.parametrize("text, code", [
    ("boundary 3", 2),
    ("boundary 2\nendpoint 0 x\nendpoint 0 y", 2),
    ("boundary 2; edge 1: bp0 -- bp1; edge 2: loop", 3),
])
def test_exit_codes(tmp_path, capsys, text, code):
    path = tmp_path / "bad.pld"
    path.write_text(text)
    got, out, err = run(["info", str(path)], capsys)
    assert got == code
    assert err and not out


def test_missing_file(capsys):
    code, _, err = run(["info", "/nonexistent/x.pld"], capsys)
    assert code == 2 and "x.pld" in err


def test_quiet(capsys):
    code, out, _ = run(["--quiet", "classify", str(fixture_path("k2_1"))], capsys)
    assert code == 0 and out == ""


def test_batch_exit_code_is_worst(capsys):
    code, out, _ = run(["--json", "selflink"] + ALL, capsys)
    records = [json.loads(x) for x in out.splitlines()]
    assert len(records) == len(ALL)
    assert code == 4


@pytest.mark.parametrize("command", ["info", "group", "homology", "classify", "lift", "selflink"])
def test_json_matches_schema(capsys, command):
    _, out, _ = run(["--json", command] + ALL, capsys)
    schema = record_schema(command)
    for line in out.splitlines():
        jsonschema.validate(json.loads(line), schema)


def test_json_and_text_agree(capsys):
    for path in ALL:
        _, text, _ = run(["homology", path], capsys)
        _, js, _ = run(["--json", "homology", path], capsys)
        assert text.splitlines()[0] == json.loads(js)["text"]


def _cli(args, seed):
    env = dict(os.environ, PYTHONHASHSEED=str(seed))
    return subprocess.run([sys.executable, "-m", "projknot.cli"] + args, capture_output=True, env=env).stdout


@pytest.mark.parametrize("args", [["group", "--simplified"], ["classify"]])
def test_byte_identical_runs(args):
    first = _cli(args + ALL, 1)
    second = _cli(args + ALL, 2)
    assert first and first == second
