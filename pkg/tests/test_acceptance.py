"""Acceptance gate.

Each criterion runs at its stated size and tolerance and records one
PASS/FAIL line; the lines are printed at the end of the pytest session (see
conftest) or directly when this file is run as a script.
"""

import subprocess
import sys

import pytest

from buchholz.verify import run_suite

RESULTS: dict = {}

TERMS_2_6 = {"max_sub": 2, "max_norm": 6}
TERMS_2_5 = {"max_sub": 2, "max_norm": 5}


def _suites(names, params=None):
    reports = [run_suite(n, params) for n in names]
    ok = all(r.passed and r.instances > 0 for r in reports)
    detail = "; ".join(f"{r.suite} {r.instances} inst {len(r.violations)} viol" for r in reports)
    return ok, detail


def crit_1():
    r = run_suite("main", TERMS_2_6)
    return r.passed and r.instances > 0, (
        f"{r.instances} pairs, {r.stats['coverings']} coverings, {len(r.violations)} violations")


def crit_2():
    r = run_suite("corollary", TERMS_2_6)
    return r.passed and r.instances > 0, f"{r.instances} pairs, {len(r.violations)} violations"


def crit_3():
    r = run_suite("linear-order", {**TERMS_2_5, "triples_norm": 4, "sample": 200})
    return r.passed, (f"{r.stats['terms']} terms, full triples {r.stats['triples_full']}, "
                      f"sampled triples {r.stats['triples_sample']}, {len(r.violations)} violations")


def crit_4():
    return _suites(["order-monotonicity"], TERMS_2_5)


def crit_5():
    return _suites(["subscript-raising", "prefix", "g-subset", "descending-sum", "lusubterm",
                    "lD0Domega"], TERMS_2_6)


def crit_6():
    return _suites(["collapse-order", "norm-identity", "norm-bound", "height"], TERMS_2_6)


def crit_7():
    ok1, d1 = _suites(["lminsubterm"], TERMS_2_6)
    ok2, d2 = _suites(["lcases"], {**TERMS_2_6, "max_nodes": 10})
    return ok1 and ok2, f"{d1}; {d2}"


def crit_8():
    params = {"samples": 500, "max_nodes": 6, "seed": 0}
    reports = [run_suite(n, params) for n in ("covering-oracle", "canonical-oracle")]
    agree = [(r.instances - len(r.violations)) / r.instances for r in reports]
    return all(a == 1.0 for a in agree) and all(r.instances == 500 for r in reports), (
        "agreement " + ", ".join(f"{r.suite} {a:.0%}" for r, a in zip(reports, agree)))


def crit_9():
    return _suites(["ltc"], {"max_nodes": 5})


def crit_10():
    return _suites(["height-vs-norm"], {"max_nodes": 5})


def crit_11():
    runs = [["main", "--max-sub", "2", "--max-norm", "5"], ["canonical-oracle"], ["lcases"]]
    same = []
    for extra in runs:
        cmd = [sys.executable, "-m", "buchholz", "--json", "verify", "--suite", *extra]
        outs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
        same.append(outs[0] == outs[1] and len(outs[0]) > 0)
    return all(same), f"{sum(same)}/{len(same)} suites byte-identical across separate processes"


CRITERIA = {
    1: ("main theorem, subscripts <= 2, norm <= 6", crit_1),
    2: ("corollary, order-0 terms, same bound", crit_2),
    3: ("strict linear order on norm <= 5", crit_3),
    4: ("order monotonicity", crit_4),
    5: ("closure suites", crit_5),
    6: ("collapse laws, exact", crit_6),
    7: ("minimal-node lemma and case lemma", crit_7),
    8: ("covering and isomorphism oracles", crit_8),
    9: ("height <= 1 double trees vs plain trees", crit_9),
    10: ("height vs node count", crit_10),
    11: ("deterministic verify reports", crit_11),
}


def check(n):
    title, fn = CRITERIA[n]
    ok, detail = fn()
    RESULTS[n] = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    return ok


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    assert check(n), RESULTS[n]


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        failed += not check(n)
        print(RESULTS[n], flush=True)
    sys.exit(1 if failed else 0)
