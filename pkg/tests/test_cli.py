import json

import pytest

from cumulants.cli import main


@pytest.fixture()
def coin_file(tmp_path):
    path = tmp_path / "coin.json"
    path.write_text(
        json.dumps(
            {
                "variables": ["X"],
                "atoms": [
                    {"values": ["0"], "prob": "1/2"},
                    {"values": ["1"], "prob": "1/2"},
                ],
            }
        )
    )
    return str(path)


@pytest.fixture()
def pair_file(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(
        json.dumps(
            {
                "variables": ["Y"],
                "atoms": [
                    {"values": ["0"], "prob": "1/3"},
                    {"values": ["2"], "prob": "2/3"},
                ],
            }
        )
    )
    return str(path)


@pytest.fixture()
def joint_file(tmp_path):
    path = tmp_path / "joint.json"
    path.write_text(
        json.dumps(
            {
                "variables": ["X1", "X2", "Y"],
                "atoms": [
                    {"values": ["0", "0", "0"], "prob": "1/8"},
                    {"values": ["0", "1", "0"], "prob": "1/8"},
                    {"values": ["1", "0", "0"], "prob": "1/8"},
                    {"values": ["1", "1", "0"], "prob": "1/8"},
                    {"values": ["0", "0", "1"], "prob": "1/4"},
                    {"values": ["1", "1", "1"], "prob": "1/4"},
                ],
            }
        )
    )
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_counts(capsys):
    code, out, _ = run(capsys, "enumerate", "partitions", "--n", "3", "--format", "count")
    assert code == 0 and out.strip() == "5"
    code, out, _ = run(capsys, "enumerate", "cyclic", "--n", "3", "--format", "count")
    assert code == 0 and out.strip() == "6"
    code, out, _ = run(capsys, "enumerate", "nested", "--shape", "2,1", "--format", "count")
    assert code == 0 and out.strip() == "13"
    code, out, _ = run(capsys, "enumerate", "g", "--n", "3", "--format", "count")
    assert code == 0 and out.strip() == "24"


def test_enumerate_streams_json(capsys):
    code, out, _ = run(capsys, "enumerate", "cyclic", "--n", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 6
    assert json.loads(lines[0]) == [[1, 2, 3]]


def test_enumerate_pretty(capsys):
    code, out, _ = run(capsys, "enumerate", "partitions", "--n", "2", "--format", "pretty")
    assert code == 0
    assert out.splitlines() == ["{1,2}", "{1} {2}"]


def test_enumerate_precondition_errors(capsys):
    code, _, err = run(capsys, "enumerate", "partitions", "--n", "0")
    assert code == 2
    code, _, err = run(capsys, "enumerate", "partitions", "--n", "8")
    assert code == 2 and "cap of 7" in err
    code, _, err = run(capsys, "enumerate", "partitions")
    assert code == 2


def test_enumerate_cap_overrides(capsys, monkeypatch):
    code, out, err = run(
        capsys, "enumerate", "partitions", "--n", "8", "--allow-large", "--format", "count"
    )
    assert code == 0 and out.strip() == "4140"
    assert "estimated 4140" in err
    monkeypatch.setenv("CUMULANTS_SIZE_CAP", "8")
    code, out, _ = run(capsys, "enumerate", "partitions", "--n", "8", "--format", "count")
    assert code == 0 and out.strip() == "4140"


def test_cumulant_command(capsys, coin_file):
    code, out, _ = run(capsys, "cumulant", "--dist", coin_file, "--vars", "X")
    assert code == 0 and out.strip() == "1/2"
    code, out, _ = run(capsys, "cumulant", "--dist", coin_file, "--vars", "X,X")
    assert code == 0 and out.strip() == "1/4"


def test_cumulant_errors(capsys, tmp_path, coin_file):
    code, _, err = run(capsys, "cumulant", "--dist", coin_file, "--vars", "Z")
    assert code == 2 and "Z" in err

    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "variables": ["X"],
                "atoms": [
                    {"values": ["0"], "prob": "1/2"},
                    {"values": ["1/x"], "prob": "1/2"},
                ],
            }
        )
    )
    code, _, err = run(capsys, "cumulant", "--dist", str(bad), "--vars", "X")
    assert code == 3 and "atom 1" in err

    code, _, err = run(capsys, "cumulant", "--dist", str(tmp_path / "nope.json"), "--vars", "X")
    assert code == 2


def test_verify_commands(capsys, coin_file, pair_file, joint_file):
    code, out, _ = run(capsys, "verify", "1", "--n", "4")
    assert code == 0 and json.loads(out)["equal"] is True
    code, out, _ = run(capsys, "verify", "2", "--n", "3")
    assert code == 0
    code, out, _ = run(capsys, "verify", "3", "--dist-m", coin_file, "--dist-n", pair_file)
    assert code == 0 and json.loads(out)["left"] == "0"
    code, out, _ = run(capsys, "verify", "4", "--n", "4")
    assert code == 0 and json.loads(out)["right"] == "m{1,2,3,4}"
    code, out, _ = run(capsys, "verify", "5", "--tau", "[[1,2],[3]]")
    assert code == 0
    code, out, _ = run(capsys, "verify", "6", "--shape", "2,1")
    assert code == 0
    code, out, _ = run(
        capsys, "verify", "7", "--dist", joint_file, "--y", "Y", "--vars", "X1,X2"
    )
    assert code == 0 and json.loads(out)["equal"] is True


def test_verify_bad_params(capsys):
    code, _, _ = run(capsys, "verify", "1")
    assert code == 2
    code, _, _ = run(capsys, "verify", "9", "--n", "3")
    assert code == 2
    code, _, _ = run(capsys, "verify", "5", "--tau", "not json")
    assert code == 2


def test_die_check_commands(capsys, joint_file):
    code, out, _ = run(capsys, "die-check", "1", "--n", "3")
    report = json.loads(out)
    assert code == 0 and report["exceptions"] == 0 and report["residual"] == "0"
    code, out, _ = run(capsys, "die-check", "4", "--n", "3")
    report = json.loads(out)
    assert code == 0 and report["exceptions"] == 1
    code, out, _ = run(capsys, "die-check", "6", "--shape", "2,1")
    report = json.loads(out)
    assert code == 0 and report["exceptions"] == 2
    code, out, _ = run(
        capsys, "die-check", "7", "--dist", joint_file, "--y", "Y", "--vars", "X1,X2"
    )
    assert code == 0 and json.loads(out)["passed"] is True


def test_output_is_deterministic(capsys, joint_file):
    runs = [
        run(capsys, "verify", "4", "--n", "4")[1],
        run(capsys, "verify", "4", "--n", "4")[1],
    ]
    assert runs[0] == runs[1]
    runs = [
        run(capsys, "enumerate", "nested", "--n", "3")[1],
        run(capsys, "enumerate", "nested", "--n", "3")[1],
    ]
    assert runs[0] == runs[1]
    runs = [
        run(capsys, "die-check", "7", "--dist", joint_file, "--y", "Y")[1],
        run(capsys, "die-check", "7", "--dist", joint_file, "--y", "Y")[1],
    ]
    assert runs[0] == runs[1]
