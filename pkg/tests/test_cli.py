import json

import pytest

from hurwitzhodge.cli import EXIT_FAIL, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, main, parse_rows
from hurwitzhodge.hurwitz import HurwitzCache


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def no_env_cache(monkeypatch):
    monkeypatch.delenv("HODGE_CACHE", raising=False)


def test_hurwitz_examples(capsys):
    assert run(capsys, "hurwitz", "--g", "0", "--alpha", "2,1")[:2] == (EXIT_OK, "H=4 r=3\n")
    assert run(capsys, "hurwitz", "--g", "1", "--alpha", "1")[1] == "H=0 r=2\n"
    assert run(capsys, "hurwitz", "--g", "1", "--alpha", "3", "--oracle")[1] == \
        "H=9 (oracle F=27)\n"
    assert run(capsys, "hurwitz", "--g", "1", "--alpha", "2")[1] == "H=1/2 r=3\n"


def test_hurwitz_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "hurwitz", "--g", "0", "--alpha", "1,1,1")
    rec = json.loads(out)
    assert rec["H"] == "24" and rec["r"] == 4 and rec["provenance"] == "solver"


def test_exit_codes(capsys):
    assert run(capsys, "hurwitz", "--g", "0", "--alpha", "x")[0] == EXIT_USAGE
    assert run(capsys, "hurwitz", "--g", "0", "--alpha", "0,1")[0] == EXIT_USAGE
    assert run(capsys, "bogus")[0] == EXIT_USAGE
    assert run(capsys, "hurwitz", "--g", "0", "--alpha", "5,4,3", "--oracle")[0] == EXIT_RESOURCE
    assert run(capsys, "hurwitz", "--g", "3", "--alpha", "2")[0] == EXIT_RESOURCE
    assert run(capsys, "--g-max", "3", "hurwitz", "--g", "3", "--alpha", "2")[0] == EXIT_OK
    assert run(capsys, "lambdag", "--g", "0", "--n", "3")[0] == EXIT_USAGE


def test_cache_file_from_environment(capsys, tmp_path, monkeypatch):
    path = tmp_path / "run.hwz.jsonl"
    monkeypatch.setenv("HODGE_CACHE", str(path))
    assert run(capsys, "hurwitz", "--g", "1", "--alpha", "3,2")[1] == "H=26460 r=7\n"
    cache = HurwitzCache.load(path)
    assert cache.H(1, (3, 2)) == 26460
    code, out, _ = run(capsys, "--format", "json", "hurwitz", "--g", "1", "--alpha", "3,2")
    assert json.loads(out)["provenance"] == "cache"


def test_lambdag_and_witten(capsys):
    assert run(capsys, "lambdag", "--g", "1", "--n", "2")[:2] == (EXIT_OK, "g=1 n=2 c_g=1/24 PASS\n")
    code, out, _ = run(capsys, "--format", "json", "witten", "--g", "1", "--n", "1")
    records = [json.loads(line) for line in out.splitlines()]
    assert {"g": 1, "k": 1, "b": [0], "value": "1/24"} in records
    text = run(capsys, "witten", "--g", "1", "--n", "1")[1]
    assert "<tau_1 lambda_0>_1 = 1/24" in text


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "--which", "g1", "--rows", "1..4")
    lines = out.splitlines()
    assert code == EXIT_OK and len(lines) == 4 and all("match" in ln for ln in lines)
    assert "m_{3 1}+m_{2^2}" in lines[1]
    code, out, _ = run(capsys, "--format", "json", "tables", "--which", "g1", "--rows", "2")
    assert json.loads(out)["terms"] == [{"m": [3, 1], "c": "1"}, {"m": [2, 2], "c": "1"}]
    code, out, _ = run(capsys, "tables", "--which", "higher", "--rows", "2")
    assert code == EXIT_FAIL and "printed = 7 x computed" in out
    assert run(capsys, "tables", "--which", "g1", "--rows", "9")[0] == EXIT_USAGE


def test_parse_rows():
    assert parse_rows("1..3,6") == [1, 2, 3, 6]
    assert parse_rows("2") == [2]


def test_verify_fast(capsys):
    code, out, err = run(capsys, "verify", "--suite", "fast")
    assert code == EXIT_OK, out + err
    assert out.splitlines()[-1].endswith("checks passed")
    assert "[FAIL]" not in out
