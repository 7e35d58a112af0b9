import json
import subprocess
import sys

import pytest

from mnspecht import cli


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv(cli.CACHE_ENV, str(d))
    return d


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_char(capsys):
    assert run(capsys, "char", "4,4,4", "5,5,2") == (0, "2\n", "")
    code, out, _ = run(capsys, "char", "4,4,4", "5,5,2", "--format", "json")
    assert json.loads(out) == {"partition": "4,4,4", "cycle_type": "5,5,2", "value": 2}


def test_dim(capsys):
    assert run(capsys, "dim", "2,1,1/1")[:2] == (0, "3\n")


def test_border_strips(capsys):
    code, out, _ = run(capsys, "border-strips", "4,4,4", "5")
    assert code == 0
    assert out.splitlines() == ["4,3 ht=1", "3,3,1 ht=2"]
    code, out, _ = run(capsys, "border-strips", "6", "6")
    assert out.splitlines() == ["- ht=0"]


def test_skew_char_by_cycle_type_and_permutation(capsys):
    assert run(capsys, "skew-char", "4,4,4/3,3,1", "5")[:2] == (0, "1\n")
    assert run(capsys, "skew-char", "4,4,4/3,3,1", "(1,2,3,4,5)")[:2] == (0, "1\n")
    assert run(capsys, "skew-char", "3,3/1", "(1,2,3,4,5)")[:2] == (0, "0\n")
    assert run(capsys, "skew-char", "2,1,1/1", "1,1,1")[:2] == (0, "3\n")


def test_straighten(capsys):
    code, out, _ = run(capsys, "straighten", "3,3,2", "1,2,5/4,3,7/6,8")
    assert code == 0
    got = {line.split()[1]: int(line.split()[0]) for line in out.splitlines()}
    assert got == {
        "1,3,5/2,4,7/6,8": -1,
        "1,2,5/3,4,7/6,8": 1,
        "1,3,5/2,6,7/4,8": 1,
        "1,2,5/3,6,7/4,8": -1,
        "1,4,5/2,6,7/3,8": -1,
    }


@pytest.mark.parametrize(
    "argv",
    [
        ("char", "4,4,4", "5,5,2"),
        ("dim", "3,3,2/1"),
        ("border-strips", "4,4,4", "5"),
        ("skew-char", "3,2/1", "(1,2)"),
        ("straighten", "3,3,2", "1,2,5/4,3,7/6,8"),
        ("table", "4"),
        ("verify", "hook-orthogonality", "--budget", "5"),
    ],
)
def test_json_output_round_trips(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    text = out.rstrip("\n")
    assert json.dumps(json.loads(text)) == text


@pytest.mark.parametrize(
    "argv, token",
    [
        (("char", "4,x", "3"), "x"),
        (("char", "4,4", "3"), None),
        (("dim", "2,2/3"), None),
        (("skew-char", "3,1", "(1,2"), None),
        (("skew-char", "3,1", "(1,q)"), "q"),
        (("straighten", "2,2", "1,2/3,3"), None),
        (("border-strips", "3,1", "0"), None),
        (("table", "0"), None),
        (("verify", "nope"), "nope"),
    ],
)
def test_usage_errors_exit_2(capsys, argv, token):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "error" in err
    if token:
        assert repr(token) in err or token in err


def test_argparse_errors_exit_2(capsys):
    assert run(capsys, "char", "4,4,4")[0] == 2
    assert run(capsys, "dim", "2,1", "--bogus")[0] == 2
    assert run(capsys)[0] == 2


def test_help_on_every_subcommand(capsys):
    for name in cli.COMMANDS:
        code, out, _ = run(capsys, name, "--help")
        assert code == 0 and "usage" in out


def test_table_cold_and_warm_identical(capsys, cache_dir):
    cold = run(capsys, "table", "6")
    assert (cache_dir / "table-6.json").exists()
    warm = run(capsys, "table", "6")
    assert cold == warm
    assert cold[0] == 0
    lines = cold[1].splitlines()
    assert lines[0].split("\t")[0] == "label" and len(lines) == 12
    uncached = run(capsys, "table", "6", "--no-cache")
    assert uncached == cold


def test_stale_cache_is_rebuilt(capsys, cache_dir):
    run(capsys, "table", "5")
    path = cache_dir / "table-5.json"
    good = path.read_text()
    data = json.loads(good)
    data["schema_version"] = 0
    data["values"][0][0] = 99
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "table", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"][0][0] == 1
    assert json.loads(path.read_text())["schema_version"] == cli.CACHE_SCHEMA_VERSION
    # right version, corrupted values: rejected by the orthogonality check
    data = json.loads(good)
    data["values"][1][0] += 1
    path.write_text(json.dumps(data))
    assert json.loads(run(capsys, "table", "5", "--format", "json")[1])["values"][1][0] != data["values"][1][0]
    path.write_text("not json")
    assert run(capsys, "table", "5")[0] == 0


def test_table_checks(capsys):
    assert run(capsys, "table", "5", "--check", "orthogonality")[0] == 0
    assert run(capsys, "table", "5", "--check", "trace")[0] == 0
    code, _, err = run(capsys, "table", "9", "--check", "trace", "--trace-limit", "8")
    assert code == 2 and "trace-limit" in err


def test_table_check_reports_bad_cache(capsys, cache_dir, monkeypatch):
    # a cached table that is orthogonal but permuted still fails the trace check
    run(capsys, "table", "3")
    path = cache_dir / "table-3.json"
    data = json.loads(path.read_text())
    data["values"][0], data["values"][2] = data["values"][2], data["values"][0]
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, "table", "3", "--check", "trace")
    assert code == 1 and "check failed" in err


def test_verify_exit_codes(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "skew-ncycle", "--budget", "4")
    assert code == 0 and out.startswith("PASS skew-ncycle budget=4")
    code, out, _ = run(capsys, "verify", "pieri-young", "--suite", "hook-orthogonality", "--budget", "4")
    assert code == 0 and len(out.splitlines()) == 2

    def broken(budget):
        yield cli.verify.Case("x", lambda: ("1", "2"))

    monkeypatch.setitem(cli.verify.SUITES, "broken", broken)
    monkeypatch.setattr(cli.verify.Budgets, "broken", 1, raising=False)
    code, out, _ = run(capsys, "verify", "broken")
    assert code == 1 and out.startswith("FAIL broken")


def test_module_entry_point(cache_dir):
    proc = subprocess.run(
        [sys.executable, "-m", "mnspecht", "char", "4,4,4", "5,5,2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"
