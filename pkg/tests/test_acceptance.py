"""Acceptance criteria, one test each.

Every test records a one-line verdict; the lines are printed in the terminal
summary (see conftest.py) and when this file is run as a script.
"""

import json
import time
from fractions import Fraction as Fr

from hypermaps.cli import main
from hypermaps.engine import count_poly
from hypermaps.exact import Poly
from hypermaps.verify import run_suite

N = Poly.gen()
VERDICTS = {}


def record(number, title, passed, detail=""):
    VERDICTS[number] = f"criterion {number} {'PASS' if passed else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    print(VERDICTS[number])
    return passed


TABLE_3_3 = {
    1: [Fr(1, 3), Fr(1, 3), 0, 0, 0],
    2: [1, 3, 0, 0, 0],
    3: [8, Fr(152, 3), 16, 0, 0],
    4: [112, 1256, 1416, 0, 0],
}
TABLE_4_4 = {
    1: [Fr(1, 4), Fr(5, 4), 0, 0, 0],
    2: [Fr(3, 2), Fr(111, 4), Fr(189, 4), 0, 0],
    3: [27, 1170, Fr(17307, 2), Fr(18585, 2), 0],
}
TABLE_5_5 = {
    1: [Fr(1, 5), 3, Fr(8, 5), 0, 0],
    2: [2, 124, 1210, 1544, 0],
}
ANCHORS = {
    (3, (7, 8)): 7 * N**2 * (9 * N**8 + 600 * N**6 + 11077 * N**4 + 55050 * N**2 + 47664),
    (4, (2, 6)): Fr(5, 2) * N**2 * (N**4 + 16 * N**2 + 25),
    (5, (3, 3, 4)): 8 * N * (2 * N**6 + 43 * N**4 + 161 * N**2 + 46),
    (6, (1, 3, 3, 5)): 40 * N**2 * (5 * N**6 + 205 * N**4 + 1612 * N**2 + 1866),
}


def test_criterion_1_count_with_oracle(capsys):
    start = time.perf_counter()
    code = main(["count", "--l", "5", "--b", "1,2,2", "--oracle"])
    elapsed = time.perf_counter() - start
    data = json.loads(capsys.readouterr().out)
    ok = (
        code == 0
        and data["by_genus"]["0"] == "4"
        and data["oracle"]["by_genus"]["0"] == "4"
        and data["oracle"]["status"] == "MATCH"
        and elapsed < 5
    )
    with capsys.disabled():
        record(1, "M^[5]_{0,3}(1,2,2) = 4 by formula and oracle", ok, f"{elapsed:.2f} s")
    assert ok


def _table_mismatches(l, b, table):
    bad = []
    for k, row in table.items():
        result = count_poly(l, (b,) * k).by_genus
        for g, expected in enumerate(row):
            if result.get(g, 0) != expected:
                bad.append((l, b, k, g, result.get(g, 0), expected))
    return bad


def test_criterion_2_tables(capsys):
    start = time.perf_counter()
    bad = _table_mismatches(3, 3, TABLE_3_3) + _table_mismatches(4, 4, TABLE_4_4) + _table_mismatches(5, 5, TABLE_5_5)
    corner = count_poly(6, (5,) * 6).by_genus[0]
    if corner != 37950000:
        bad.append((6, 5, 6, 0, corner, 37950000))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 600
    with capsys.disabled():
        record(2, "tables for l=3,4,5 and the l=6, k=6 corner", ok, f"{elapsed:.1f} s" + (f", first mismatch {bad[0]}" if bad else ""))
    assert ok


def test_criterion_3_oracle_equivalence(capsys):
    start = time.perf_counter()
    report = run_suite("oracle", lmax=6, dmax=12)
    elapsed = time.perf_counter() - start
    ok = report.passed and elapsed < 1800
    with capsys.disabled():
        record(3, "brute force equals the engine for l <= 6, |b| <= 12", ok, f"{len(report.checks)} cases, {elapsed:.0f} s")
    assert ok


def test_criterion_4_polynomial_anchors(capsys):
    bad = [key for key, poly in ANCHORS.items() if count_poly(*key).poly_n != poly]
    with capsys.disabled():
        record(4, "four polynomial anchors", not bad, f"mismatches {bad}" if bad else "")
    assert not bad


def _suites(names, **options):
    failures = []
    total = 0
    for name in names:
        report = run_suite(name, **options)
        total += len(report.checks)
        failures += [f"{name}: {c.label}" for c in report.failures]
    return total, failures


def test_criterion_5_dual_paths(capsys):
    total, failures = _suites(["dualpath", "zagier", "special2b"])
    with capsys.disabled():
        record(5, "dual-path equalities", not failures, f"{total} checks" + (f", first failure {failures[0]}" if failures else ""))
    assert not failures


def test_criterion_6_identity_grids(capsys):
    total, failures = _suites(["tcfin", "fids", "shifts", "fftmt", "psib"])
    with capsys.disabled():
        record(6, "identity grids", not failures, f"{total} checks" + (f", first failure {failures[0]}" if failures else ""))
    assert not failures


def test_criterion_7_hurwitz_and_duality(capsys):
    total, failures = _suites(["hurwitz", "duality"])
    with capsys.disabled():
        record(7, "monotone Hurwitz cross-check and blue/white duality", not failures, f"{total} checks")
    assert not failures


def test_criterion_8_structural_properties(capsys):
    total, failures = 0, []
    for seed in range(3):
        report = run_suite("properties", seed=seed, samples=40)
        total += len(report.checks)
        failures += [c.label for c in report.failures]
    code = main(["verify", "properties", "--seed", "0", "--samples", "5"])
    capsys.readouterr()
    ok = not failures and code == 0
    with capsys.disabled():
        record(8, "structural property suite", ok, f"{total} checks")
    assert ok


if __name__ == "__main__":
    import pytest

    raise SystemExit(pytest.main([__file__, "-q"]))
