import csv
import json
import subprocess
import sys

import pytest

from oriposet.cli import EXIT_FAIL, EXIT_OK, EXIT_ORACLE, EXIT_USAGE, main
from oriposet.qpoly import LaurentPoly, poly, qint


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


# -- rank -----------------------------------------------------------------------------

def test_rank(capsys):
    code, out, _ = run(["rank", "2,1,1,3"], capsys)
    assert code == EXIT_OK
    assert out.strip() == "1 + 3q + 5q^2 + 6q^3 + 6q^4 + 5q^5 + 3q^6 + 2q^7 + q^8"


def test_rank_circular_with_oracle(capsys):
    code, out, _ = run(["rank", "2,1,1,3", "--circular", "--oracle"], capsys)
    assert code == EXIT_OK
    assert out.strip() == str(qint(5) * qint(4))


def test_rank_latex(capsys):
    _, out, _ = run(["rank", "3,4", "--latex"], capsys)
    assert "q^{7}" in out


def test_rank_json_round_trip(capsys):
    code, out, _ = run(["rank", "2,1,1,3", "--json", "--oracle"], capsys)
    data = json.loads(out)
    assert code == EXIT_OK and data["oracle_agrees"] is True
    assert data["composition"] == [2, 1, 1, 3]
    assert LaurentPoly.from_json(data["polynomial"]) == poly(1, 3, 5, 6, 6, 5, 3, 2, 1)


@pytest.mark.parametrize("argv", [
    ["rank", "1", "--circular"],
    ["rank", "1,0,1"],
    ["rank", "x"],
    ["qrat", "9/32"],
    ["qrat", "6/4"],
    ["markov", "a"],
    ["markov", "abc"],
    ["markov"],
    ["markov", "ab", "--depth", "1"],
    ["rank", "5,5,5,5", "--oracle", "--max-nodes", "4"],
])
def test_usage_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == EXIT_USAGE


# -- qrat ----------------------------------------------------------------------------

def test_qrat_32_9(capsys):
    code, out, _ = run(["qrat", "32/9"], capsys)
    assert code == EXIT_OK
    assert "[3,1,1,4]" in out and "[[4,3,2,2,2]]" in out
    assert "1 + 2q + 2q^2 + 2q^3 + q^4 + q^5" in out
    assert "FAIL" not in out


def test_qrat_json(capsys):
    code, out, _ = run(["qrat", "32/9", "--json", "--oracle"], capsys)
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["regular"] == [3, 1, 1, 4] and data["alpha"] == [2, 1, 1, 3]
    assert LaurentPoly.from_json(data["denominator"]) == poly(1, 2, 2, 2, 1, 1)
    assert all(data["checks"].values())


def test_qrat_integer(capsys):
    code, out, _ = run(["qrat", "5/1"], capsys)
    assert code == EXIT_OK
    assert "R(q)          1 + q + q^2 + q^3 + q^4" in out
    assert "T(q)          1\n" in out


# -- markov ------------------------------------------------------------------------

def test_markov_word(capsys):
    code, out, _ = run(["markov", "ab"], capsys)
    assert code == EXIT_OK and out.strip() == str(qint(5))


def test_markov_exponent_syntax(capsys):
    _, out, _ = run(["markov", "a^2bab"], capsys)
    assert out.strip().endswith("4q^11 + q^12")


def test_markov_trivial_with_trace(capsys):
    code, out, _ = run(["markov", "a", "--trace"], capsys)
    assert code == EXIT_OK and out.strip() == f"trace: {qint(3)}"


def test_markov_table(capsys):
    code, out, _ = run(["markov", "--depth", "1"], capsys)
    lines = out.strip().splitlines()
    assert code == EXIT_OK and len(lines) == 5
    assert lines[0].split()[:2] == ["a", "-"]
    _, out, _ = run(["markov", "--depth", "2"], capsys)
    assert len(out.strip().splitlines()) == 9


def test_markov_table_csv(tmp_path, capsys):
    target = tmp_path / "words.csv"
    run(["markov", "--depth", "1", "--csv", str(target)], capsys)
    with open(target) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["word", "path", "fence", "polynomial", "symmetric", "unimodal"]
    assert rows[2][:3] == ["ab", "", "3,1"] and rows[2][4:] == ["True", "True"]


def test_markov_json(capsys):
    _, out, _ = run(["markov", "aab", "--json", "--trace"], capsys)
    data = json.loads(out)
    assert data["path"] == "L" and data["fence"] == [3, 1, 1, 1]
    assert LaurentPoly.from_json(data["trace"]) == qint(3) * LaurentPoly.from_json(data["polynomial"])


# -- verify -------------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["verify", "traces", "--rmax", "15"],
    ["verify", "markov-eq", "--depth", "2"],
    ["verify", "unimodal-sweep", "--max-size", "8"],
    ["verify", "counterexamples"],
    ["verify", "table1"],
])
def test_verify_suites_pass(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == EXIT_OK, out


def test_verify_json_and_csv(tmp_path, capsys):
    target = tmp_path / "sweep.csv"
    code, out, _ = run(["verify", "unimodal-sweep", "--max-size", "8", "--json", "--csv", str(target)], capsys)
    data = json.loads(out)
    assert code == EXIT_OK and data["failed"] == 0
    header = target.read_text().splitlines()[0].split(",")
    assert header[-3:] == ["polynomial", "symmetric", "unimodal"]


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ORACLE) == (0, 1, 2, 3)


# -- the installed entry point -------------------------------------------------------

def test_module_entry_point_is_deterministic():
    cmd = [sys.executable, "-m", "oriposet", "markov", "--depth", "2", "--json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_module_usage_exit_code():
    done = subprocess.run([sys.executable, "-m", "oriposet", "rank", "1", "--circular"],
                          capture_output=True, text=True)
    assert done.returncode == EXIT_USAGE
    assert "error:" in done.stderr
