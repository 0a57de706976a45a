import json

import pytest

from hypersample.cli import main


@pytest.fixture
def six_ones_file(tmp_path):
    p = tmp_path / "six_ones.json"
    p.write_text(json.dumps({"d": [1] * 6, "k": 3}))
    return str(p)


def _write(tmp_path, d, k, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps({"d": list(d), "k": k}))
    return str(p)


def test_sample_format(six_ones_file, capsys):
    assert main(["sample", "--input", six_ones_file, "--sampler", "config",
                 "--count", "3", "--seed", "7"]) == 0
    blocks = capsys.readouterr().out.strip().split("\n\n")
    assert len(blocks) == 3
    for blk in blocks:
        lines = blk.splitlines()
        assert len(lines) == 2
        ids = sorted(int(x) for ln in lines for x in ln.split())
        assert ids == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("sampler, extra", [("config", []), ("switch", ["--steps", "200"]),
                                            ("oracle", [])])
def test_sample_deterministic(six_ones_file, capsys, sampler, extra):
    args = ["sample", "--input", six_ones_file, "--sampler", sampler, "--count", "5",
            "--seed", "3", *extra]
    main(args)
    first = capsys.readouterr().out
    main(args + ["--jobs", "3"])
    assert capsys.readouterr().out == first


def test_sample_json(six_ones_file, capsys):
    main(["sample", "--input", six_ones_file, "--count", "2", "--format", "json"])
    rows = [json.loads(ln) for ln in capsys.readouterr().out.splitlines()]
    assert len(rows) == 2 and rows[0]["k"] == 3 and len(rows[0]["edges"]) == 2


def test_switch_needs_budget(six_ones_file, capsys):
    assert main(["sample", "--input", six_ones_file, "--sampler", "switch"]) == 2


def test_sample_failure_exit(tmp_path, capsys):
    path = _write(tmp_path, (2, 2, 2), 3)
    assert main(["sample", "--input", path, "--sampler", "oracle", "--cap", "4"]) == 1
    assert "kind=Fail attempts=4" in capsys.readouterr().err
    assert main(["sample", "--input", path, "--cap", "10"]) == 1
    assert "kind=Exhausted" in capsys.readouterr().err


def test_bad_input_is_usage_error(tmp_path, capsys):
    path = _write(tmp_path, (1, 1), 3)
    assert main(["bounds", "--input", path]) == 2


def test_bounds(six_ones_file, capsys):
    assert main(["bounds", "--input", six_ones_file]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["regular_simplicity_lower_bound"] == 0.95
    main(["bounds", "--input", six_ones_file, "--c0", "0.25", "--eps", "0.25"])
    assert json.loads(capsys.readouterr().out)["fpaus_cap"] == 4


def test_bounds_k2(tmp_path, capsys):
    main(["bounds", "--input", _write(tmp_path, (1, 1, 1, 1), 2)])
    assert json.loads(capsys.readouterr().out)["theorem_range"] == "out of theorem range"


@pytest.mark.parametrize("argv", [["--suite", "prop42", "--max-n", "5"],
                                  ["--suite", "thm12", "--max-n", "8"],
                                  ["--suite", "uniformity", "--seed", "1", "--draws", "20000"]])
def test_verify(argv, capsys):
    assert main(["verify", *argv]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    if "uniformity" in argv:
        assert "tv=" in out


@pytest.mark.parametrize("d, line", [((1,) * 6, "B=20 B*=20 H=10 p=1"),
                                     ((2, 2, 2), "B=1 B*=0 H=0 p=0")])
def test_enumerate(tmp_path, capsys, d, line):
    assert main(["enumerate", "--input", _write(tmp_path, d, 3)]) == 0
    assert capsys.readouterr().out.startswith(line + " ")


def test_enumerate_list(six_ones_file, capsys):
    main(["enumerate", "--input", six_ones_file, "--list"])
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 21 and lines[1] == "1 2 3|4 5 6"


def test_enumerate_too_large(tmp_path, capsys):
    path = _write(tmp_path, (3,) * 30, 3)
    assert main(["enumerate", "--input", path, "--limit", "1000"]) == 3
