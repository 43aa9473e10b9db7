import json
import subprocess
import sys
from pathlib import Path

import pytest

from submon.cli import main
from submon.export import is_valid_dot
from submon.geometry import ConstantsRecord
from submon.submonoid import SubmonoidSpec

SPECS = Path(__file__).resolve().parent.parent / "specs"


def spec(name):
    return str(SPECS / f"{name}.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", ["ex1", "ex2", "ex3", "ex4", "free2", "code2", "free3", "cyclic"])
def test_spec_files_parse(name):
    s = SubmonoidSpec.from_json(Path(spec(name)).read_text(), strict=True)
    assert SubmonoidSpec.from_json(s.to_json()) == s


def test_graded_exit_codes(capsys):
    assert run(capsys, "graded", spec("ex1"))[0] == 0
    code, out, _ = run(capsys, "graded", spec("ex2"))
    assert code == 1 and "witness: A" in out
    code, out, _ = run(capsys, "graded", spec("ex2"), "--format", "json")
    assert json.loads(out) == {"graded": False, "cutoff": 3, "witness": "A"}


def test_malformed_input(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert run(capsys, "graded", str(bad))[0] == 2
    dup = tmp_path / "dup.json"
    dup.write_text(json.dumps({"ambient_rank": 2, "generators": ["a", "a"]}))
    code, _, err = run(capsys, "graded", str(dup))
    assert code == 2 and "duplicate" in err
    ident = tmp_path / "id.json"
    ident.write_text(json.dumps({"ambient_rank": 2, "generators": ["aA"]}))
    assert run(capsys, "graded", str(ident))[0] == 2
    assert run(capsys, "graded", str(tmp_path / "missing.json"))[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_budget_exit_code(capsys):
    code, _, err = run(capsys, "graded", spec("ex1"), "--budget-ball", "10")
    assert code == 3 and "resource limit" in err


def test_wp(capsys):
    code, out, _ = run(capsys, "wp", spec("ex1"), "--cutoff", "6", "[a][b]", "[b][a][z]")
    assert code == 0 and out.startswith("true")
    code, out, _ = run(capsys, "wp", spec("ex1"), "--cutoff", "6", "[1][2]", "[2][1]")
    assert code == 1
    code, out, _ = run(capsys, "wp", spec("ex1"), "[x][y]", "[y][x][z]", "--format", "json")
    assert json.loads(out)["member"] is True


def test_normalize(capsys):
    code, out, _ = run(capsys, "normalize", spec("ex1"), "[b][a][z]")
    assert code == 0 and out.splitlines()[0] == "[a][b]"
    code, out, _ = run(capsys, "normalize", spec("ex1"), "[b][a][z]", "--engine", "oracle", "--format", "json")
    assert json.loads(out)["normal_form"] == "[a][b]"
    code, out, _ = run(capsys, "normalize", spec("ex1"), "[a][b]", "--order", "ABab<b<a")
    assert out.splitlines()[0] == "[b][a][ABab]"


def test_iso_and_hom(capsys):
    assert run(capsys, "iso", spec("ex1"), spec("free3"))[0] == 1
    code, out, _ = run(capsys, "iso", spec("free2"), spec("code2"))
    assert code == 0 and "yes-up-to" in out
    code, out, _ = run(capsys, "hom", spec("ex1"), "--map", "a=a", "--map", "b=b", "--map", "ABab=b", "--format", "json")
    rep = json.loads(out)
    assert code == 1 and rep["outcome"] == "no" and len(rep["witness"]) == 2
    code, out, _ = run(capsys, "hom", spec("ex1"), "--map", "x=a", "--map", "y=b", "--map", "z=ABab")
    assert code == 0 and "yes-up-to" in out
    assert run(capsys, "hom", spec("ex1"), "--map", "a=a", "--map", "b=b", "--map", "bb=a")[0] == 2
    code, out, _ = run(capsys, "hom", spec("ex1"), "--map", "1=a", "--map", "2=b", "--map", "3=ABab")
    assert code == 0 and "yes-up-to" in out


def test_other_commands(capsys):
    code, out, _ = run(capsys, "irreducibles", spec("ex3"))
    assert code == 0 and out.split() == ["bA", "Ba"]
    code, out, _ = run(capsys, "factorizations", spec("ex1"), "ab", "--max-len", "3")
    assert out.split() == ["[a][b]", "[b][a][ABab]"]
    code, out, _ = run(capsys, "factorizations", spec("ex1"), "ab", "--format", "grammar")
    assert code == 0 and out.strip()
    code, out, _ = run(capsys, "factors", spec("cyclic"), "aa", "--format", "json")
    assert json.loads(out) == {"finite": True, "max_len": 6, "factors": ["1", "a", "aa"]}
    code, out, _ = run(capsys, "constants", spec("cyclic"), "--format", "json")
    assert ConstantsRecord.from_json(json.loads(out)).cutoff == 216
    code, out, _ = run(capsys, "constants", spec("ex1"), "--skip-cutoff")
    assert code == 0 and "L_prime" in out


@pytest.mark.parametrize("argv", [
    ["automaton", "ex1", "--format", "dot"],
    ["automaton", "ex1", "--trim", "--format", "dot"],
    ["automaton", "ex2", "--kind", "monoid", "--format", "dot"],
    ["automaton", "ex1", "--kind", "normal-forms", "--cutoff", "6", "--format", "dot"],
    ["factors", "ex1", "ab", "--format", "dot"],
])
def test_dot_outputs_are_valid(capsys, argv):
    argv = [argv[0], spec(argv[1])] + argv[2:]
    code, out, _ = run(capsys, *argv)
    assert code == 0 and is_valid_dot(out)


@pytest.mark.parametrize("argv", [
    ["graded", "ex4"], ["constants", "cyclic"], ["automaton", "ex1"], ["automaton", "ex1", "--kind", "monoid"],
    ["automaton", "ex1", "--kind", "normal-forms", "--cutoff", "6"], ["wp", "ex1", "[a]", "[b]"],
    ["normalize", "ex1", "[b][a][z]"], ["irreducibles", "ex1"], ["factorizations", "ex2", "A"],
    ["factors", "ex2", "A"], ["hom", "ex1", "--map", "a=a", "--map", "b=b", "--map", "ABab=1"],
    ["iso", "free2", "code2"],
])
def test_json_round_trip_and_determinism(capsys, argv):
    names = {p.stem for p in SPECS.glob("*.json")}
    argv = [spec(a) if a in names else a for a in argv] + ["--format", "json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 in (0, 1)
    assert (code1, out1) == (code2, out2)
    rep = json.loads(out1)
    assert json.loads(json.dumps(rep, sort_keys=True)) == rep


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "submon", "graded", spec("ex2")], capture_output=True, text=True)
    assert out.returncode == 1 and "witness: A" in out.stdout
