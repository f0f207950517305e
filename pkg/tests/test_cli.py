import io
import json
import xml.etree.ElementTree as ET

import pytest

from chiratio.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_constants():
    code, text = run("constants", "--digits", "3")
    assert code == 0
    lines = text.splitlines()
    assert "chi 1.355" in lines and "chi_prime 2.095" in lines and "phi 1.618" in lines


def test_extend_silver():
    code, text = run("extend", "--rho", "2", "--branch", "above")
    assert (code, text) == (0, "1+sqrt(2) ≈ 2.4142135623\n")


def test_extend_chi_from_phi():
    code, text = run("extend", "--rho", "phi", "--branch", "below", "--digits", "3")
    assert code == 0 and text.endswith("≈ 1.355\n")


def test_extend_sequence():
    code, text = run("extend", "--sequence", "3", "--digits", "3")
    assert code == 0
    assert text.splitlines()[-1] == "x3 ~ ≈ 1.434"


def test_verify():
    code, text = run("verify")
    assert code == 0
    assert text.splitlines()[-1] == "24/24 identities hold"
    assert all(line.startswith("PASS") for line in text.splitlines()[:-1])


def test_verify_failure_exit_code(monkeypatch):
    import chiratio.cli as cli

    monkeypatch.setattr(cli, "run_identities", lambda: [("ok", True), ("broken", False)])
    code, text = run("verify")
    assert code == 2 and "FAIL broken" in text


def test_converge_variants():
    assert run("converge", "cf", "--term", "1", "--seed", "1", "--count", "4")[1].splitlines()[3] == "4 8/5 ≈ 1.6000000000"
    code, text = run("converge", "radical", "--term", "1", "--seed", "1", "--count", "1", "--digits", "3")
    assert (code, text) == (0, "1 1.414\n")
    assert run("converge", "h-seq", "--count", "3")[1].splitlines()[2].startswith("3 2*phi+1")
    assert run("converge", "fib", "--count", "3")[1] == "1 1\n2 1 1\n3 2 2\n"
    assert run("converge", "radical", "--term", "chi", "--count", "2")[0] == 0


def test_fold():
    code, text = run("fold", "harmonic", "--m", "3", "--n", "2")
    assert code == 0
    assert "sum_recip 5/6 ≈ 0.8333333333" in text and "harmonic_mean 12/5 ≈ 2.4000000000" in text


@pytest.mark.parametrize("argv", [
    ["constants", "--json"],
    ["converge", "cf", "--term", "phi", "--count", "5", "--json"],
    ["converge", "h-seq", "--count", "8", "--json"],
    ["converge", "radical", "--term", "phi", "--json"],
    ["converge", "fib", "--json"],
    ["extend", "--rho", "3/2", "--json"],
    ["extend", "--sequence", "4", "--json"],
])
def test_json_round_trip(argv):
    code, text = run(*argv)
    assert code == 0
    assert json.dumps(json.loads(text), sort_keys=True, ensure_ascii=False) + "\n" == text


def test_fold_jsonl_round_trip():
    code, text = run("fold", "cf", "--n", "2", "--depth", "2", "--json")
    assert code == 0
    rows = [json.loads(line) for line in text.splitlines()]
    assert rows[0] == {"op": "square", "before": "1/1", "after": "2/1"}
    assert "".join(json.dumps(r) + "\n" for r in rows) == text


@pytest.mark.parametrize("figure,extra", [
    ("subdivision", ["--x", "chi"]),
    ("extend", ["--count", "3"]),
    ("fold", ["--fold-kind", "harmonic"]),
    ("construction", ["--target", "chi"]),
])
def test_render(tmp_path, figure, extra):
    path = tmp_path / "out.svg"
    code, text = run("render", figure, "--out", str(path), *extra)
    assert code == 0 and text == f"wrote {path}\n"
    ET.parse(path)


@pytest.mark.parametrize("argv", [
    [],
    ["nonsense"],
    ["extend"],
    ["extend", "--rho", "two"],
    ["extend", "--rho", "1/2"],
    ["converge", "cf", "--count", "1.5"],
    ["fold", "cf", "--n", "0"],
    ["render", "subdivision", "--out", "x.svg", "--x", "1"],
    ["render", "subdivision", "--out", "x.svg", "--unit-px", "3"],
])
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_error_names_offending_token(capsys):
    run("extend", "--rho", "zwei")
    assert "'zwei'" in capsys.readouterr().err
