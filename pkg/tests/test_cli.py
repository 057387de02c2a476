import json
import subprocess
import sys

import pytest

from hypermaps.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_json(capsys):
    code, out, _ = run(capsys, "count", "--l", "5", "--b", "1,2,2")
    assert code == 0
    data = json.loads(out)
    assert data["by_genus"]["0"] == "4"
    assert data["l"] == 5 and data["b"] == [1, 2, 2]
    assert data["poly_n"] == [["2", 1], ["4", 3]]


def test_count_with_oracle(capsys):
    code, out, _ = run(capsys, "count", "--l", "3", "--b", "3,3,3", "--oracle")
    assert code == 0
    data = json.loads(out)
    assert data["oracle"]["status"] == "MATCH"
    assert data["by_genus"] == {"0": "8", "1": "152/3", "2": "16"}


def test_count_genus_filter_plain(capsys):
    code, out, _ = run(capsys, "count", "--l", "5", "--b", "1,2,2", "--genus", "0", "--oracle", "--format", "plain")
    assert code == 0
    assert "g=0: 4" in out and "g=1" not in out
    assert "oracle: MATCH" in out


def test_count_not_divisible(capsys):
    code, out, _ = run(capsys, "count", "--l", "3", "--b", "2")
    assert code == 0
    assert json.loads(out)["by_genus"] == {}


def test_count_oracle_cap(capsys):
    code, _, err = run(capsys, "count", "--l", "2", "--b", "7,7", "--oracle")
    assert code == 2
    assert "cap" in err
    code, _, _ = run(capsys, "count", "--l", "2", "--b", "2,2", "--oracle", "--oracle-cap", "3")
    assert code == 2


def test_count_resource_guard(capsys):
    code, _, err = run(capsys, "count", "--l", "2", "--b", "100")
    assert code == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as exc:
        main(["count", "--l", "3", "--b", "a,b"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["count", "--l", "1", "--b", "2"])
    assert exc.value.code == 2


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--l", "4", "--b", "4", "--kmax", "2", "--gmax", "2")
    assert code == 0
    assert out.splitlines() == ["k,g0,g1,g2", "1,1/4,5/4,0", "2,3/2,111/4,189/4"]


def test_table_l5(capsys):
    _, out, _ = run(capsys, "table", "--l", "5", "--b", "5", "--kmax", "2", "--gmax", "3")
    assert out.splitlines()[2] == "2,2,124,1210,1544"


def test_table_json_and_jobs_are_deterministic(capsys):
    _, one, _ = run(capsys, "table", "--l", "3", "--b", "3", "--kmax", "3", "--gmax", "2", "--format", "json")
    _, two, _ = run(capsys, "table", "--l", "3", "--b", "3", "--kmax", "3", "--gmax", "2", "--format", "json", "--jobs", "2")
    assert one == two
    data = json.loads(one)
    assert data["rows"][2]["by_genus"] == {"0": "8", "1": "152/3", "2": "16"}


def test_series_one_point(capsys):
    code, out, _ = run(capsys, "series", "--l", "3", "--k", "1", "--order", "7")
    assert code == 0
    terms = {tuple(e): c for e, c in json.loads(out)["terms"]}
    assert terms[(-4,)] == "n^3+n"
    assert terms[(-1,)] == "n"
    _, out, _ = run(capsys, "series", "--l", "2", "--k", "1", "--order", "3")
    assert json.loads(out)["terms"] == [[[-1], "n"], [[-3], "n^2"]]


def test_series_two_point_poles(capsys):
    code, out, _ = run(capsys, "series", "--l", "3", "--k", "2", "--order", "6")
    assert code == 0
    terms = json.loads(out)["terms"]
    assert terms
    assert all(max(e) <= -2 for e, _ in terms)


def test_series_order_too_small(capsys):
    code, _, _ = run(capsys, "series", "--l", "3", "--k", "1", "--order", "2")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--l", "5", "--b", "1,2,2", "--oracle"],
        ["series", "--l", "3", "--k", "2", "--order", "5"],
        ["verify", "duality", "--format", "json"],
    ],
)
def test_json_round_trips(capsys, argv):
    _, out, _ = run(capsys, *argv)
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_verify_suites(capsys):
    assert run(capsys, "verify", "duality", "--l", "3", "--b", "2", "--k", "3")[0] == 0
    assert run(capsys, "verify", "dualpath", "--l", "4", "--bmax", "8")[0] == 0
    code, out, _ = run(capsys, "verify", "tcfin", "--lmax", "5", "--smax", "6")
    assert code == 0 and "PASS" in out
    assert run(capsys, "verify", "properties", "--seed", "7", "--samples", "10")[0] == 0


def test_verify_duality_needs_all_arguments(capsys):
    assert run(capsys, "verify", "duality", "--l", "3")[0] == 2


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hypermaps.cli", "count", "--l", "3", "--b", "3,3", "--format", "csv"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["g,count", "0,1", "1,3"]
