"""Command-line interface: output shapes, flags, exit codes."""

import json

import pytest

from wsh.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_jack_json(capsys):
    code, out, _ = run(capsys, "jack", "2", "--max-degree", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["degree"] == 2
    rows = {tuple(r["partition"]): r["power_sum_coefficients"] for r in doc["jack_basis"]}
    assert rows[(2,)] == {"p[2]": "1/k", "p[1,1]": "1"}
    assert rows[(1, 1)] == {"p[2]": "-1", "p[1,1]": "1"}


def test_jack_text_format(capsys):
    code, out, _ = run(capsys, "jack", "1", "--max-degree", "3", "--format", "text")
    assert code == 0
    assert "Jack basis at degree 1" in out


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "2", "2", "--max-degree", "6")
    assert code == 0
    doc = json.loads(out)
    assert doc["rank"] == 2
    assert all(row["match"] for row in doc["dimensions"])


def test_eseries_conventions(capsys):
    code, out, _ = run(capsys, "eseries", "--series-order", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["convention"] == "power"
    assert doc["coefficients"]["E0"] == {"c0": "1"}

    code, out, _ = run(
        capsys, "eseries", "--series-order", "3", "--convention", "printed",
        "--preset", "omega",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["preset"] == "omega"


def test_verify_small_suite(capsys):
    code, out, _ = run(
        capsys, "verify", "positive",
        "--max-degree", "5", "--kmax", "3", "--lmax", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert doc["config"]["N"] == 5
    for check in doc["checks"]:
        assert set(check) >= {"id", "status", "window"}
    ids = [c["id"] for c in doc["checks"]]
    assert ids == sorted(ids)


def test_verify_specialized(capsys):
    code, out, _ = run(
        capsys, "verify", "positive",
        "--max-degree", "5", "--kmax", "3", "--lmax", "3",
        "--specialize", "7/3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert doc["config"]["mode"] == "specialized(7/3)"


def test_verify_deterministic(capsys):
    argv = ["verify", "positive", "--max-degree", "5", "--kmax", "3", "--lmax", "3"]
    _, out1, _ = run(capsys, *argv)
    _, out2, _ = run(capsys, *argv)
    assert out1 == out2


def test_bad_input_exit_code_two(capsys):
    code, _, err = run(capsys, "jack", "9", "--max-degree", "4")
    assert code == 2
    assert err.strip()

    code, _, err = run(capsys, "verify", "positive", "--specialize", "0")
    assert code == 2

    code, _, err = run(capsys, "dims", "0", "1")
    assert code == 2


def test_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
