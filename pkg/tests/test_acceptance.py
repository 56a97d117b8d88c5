"""Acceptance criteria, one test each, at the stated sizes and tolerances.

Every test prints ``criterion N: PASS|FAIL ...``; the lines are repeated in
the terminal summary.  Run with ``pytest tests/test_acceptance.py -s``.
"""
import itertools
import subprocess
import sys
import time

from uqwork.finiteness import big_subalgebra_identities
from uqwork.pbw import build_presentation, complete, graded_dimension, quantum_group
from uqwork.rootdata import cartan
from uqwork.suites import RunConfig, run_suite


def _suite(label, name, **kw):
    cfg = RunConfig(label, **kw)
    return run_suite(quantum_group(label, cfg.cutoff), name, cfg)


def _summary(cases):
    return ", ".join(f"{c.check}={c.status}" for c in cases)


def _all_pass(cases):
    return bool(cases) and all(c.status == "pass" for c in cases)


def _root_monomials(roots, degree):
    """Brute-force count of monomials in one variable per positive root, by total height."""
    heights = [sum(r) for r in roots]
    count = 0
    for exps in itertools.product(range(degree + 1), repeat=len(heights)):
        if sum(e * h for e, h in zip(exps, heights)) == degree:
            count += 1
    return count


def test_criterion_01_pbw_confluence(record):
    details, ok = [], True
    for label in ("A1", "A1xA1", "A2", "B2"):
        t = time.perf_counter()
        sys_ = complete(build_presentation(cartan(label), 8), 8)
        cases = _suite(label, "serre", cutoff=8)
        elapsed = time.perf_counter() - t
        alg = quantum_group(label, 8)
        roots = alg.datum.positive_roots_root_coords()
        dims_ok = all(graded_dimension(alg, "E", d) == _root_monomials(roots, d) for d in range(9))
        good = _all_pass(cases) and dims_ok and sys_.completed and elapsed < 60
        ok &= good
        details.append(f"{label} {'ok' if good else 'FAIL'} {elapsed:.1f}s")
    assert record(1, ok, "; ".join(details))


def test_criterion_02_hopf_axioms(record):
    details, ok = [], True
    for label in ("A1", "A1xA1", "A2", "B2"):
        cases = _suite(label, "hopf", seed=0)
        ok &= _all_pass(cases) and cases[0].params["samples"] == 100
        details.append(f"{label} {cases[0].status}")
    assert record(2, ok, "generators + 100 seeded degree<=3 elements: " + ", ".join(details))


def test_criterion_03_casimir(record):
    cases = _suite("A1", "casimir", window=6)
    ok = _all_pass(cases) and cases[0].data["detected_dim"] == 2
    assert record(3, ok, f"A1 window 6: {_summary(cases)}, detected dim {cases[0].data['detected_dim']}")


def test_criterion_04_big_subalgebra(record):
    res = {label: big_subalgebra_identities(quantum_group(label)) for label in ("A1", "A2")}
    ok = all(r.status == "pass" for r in res.values())
    assert record(4, ok, ", ".join(f"{k} {r.status}" for k, r in res.items()))


def test_criterion_05_hc_orbit(record):
    a1 = _suite("A1", "hc-orbit", seed=0)
    a2 = _suite("A2", "hc-orbit", seed=0)
    ok = _all_pass(a1) and _all_pass(a2)
    ok &= a1[0].params["samples"] == 20 and a1[0].data["pairs_separated"] == 20
    assert record(5, ok, f"A1 {a1[0].status} ({a1[0].data}), A2 {a2[0].status} ({a2[0].data})")


def test_criterion_06_dominance_lemmas(record):
    cases = {label: _suite(label, "dominance", window=4) for label in ("A1", "A2")}
    ok = all(_all_pass(c) for c in cases.values())
    assert record(6, ok, "window 4: " + ", ".join(f"{k} {c[0].status} {c[0].data}" for k, c in cases.items()))


def test_criterion_07_coinvariants(record):
    cases = {label: _suite(label, "coinvariants", depth=4) for label in ("A1", "A2")}
    ok = all(_all_pass(c) for c in cases.values())
    assert record(7, ok, "degree <= 4: " + ", ".join(f"{k} {c[0].status}" for k, c in cases.items()))


def test_criterion_08_nilradical(record):
    nil = _suite("A2", "nilradical", parabolic=[1], depth=4)
    q1 = _suite("A2", "specialize", parabolic=[1], depth=4)
    # roots alpha_2 and alpha_1 + alpha_2, heights 1 and 2
    oracle = [_root_monomials([(0, 1), (1, 1)], d) for d in range(5)]
    dims_ok = all(c.data["dims"] == oracle for c in nil)
    flags = all(c.data["ad_stable"] and c.data["coideal"] for c in nil)
    ok = _all_pass(nil) and _all_pass(q1) and dims_ok and flags
    assert record(8, ok, f"dims {nil[0].data['dims']} vs oracle {oracle}; {_summary(nil + q1)}")


def test_criterion_09_triangular(record):
    a1 = _suite("A1", "triangular", parabolic=[], depth=4)
    a2 = _suite("A2", "triangular", parabolic=[1], depth=3)
    ok = _all_pass(a1) and _all_pass(a2)
    assert record(9, ok, f"A1 P=B deg 4: {_summary(a1)}; A2 {{a1}} deg 3: {_summary(a2)}")


def test_criterion_10_untwist(record):
    cases = _suite("A1", "untwist", seed=0)
    counts = cases[0].data
    ok = _all_pass(cases) and counts["multiplicative"] == 50 and counts["commutes"] == 50 and counts["central"] > 0
    assert record(10, ok, f"A1: {cases[0].status} {counts}")


def test_criterion_11_duflo(record):
    cases = _suite("A1", "duflo", lam="q^3", depth=4, window=6)
    assert record(11, _all_pass(cases), f"A1 q^3 degree 4 window 6: {cases[0].status} {cases[0].data}")


def test_criterion_12_tensor_annihilation(record):
    a1 = _suite("A1", "tensor-ann", lam="q^5", depth=6)
    a2 = _suite("A2", "tensor-ann", depth=4)
    ok = _all_pass(a1) and _all_pass(a2)
    ok &= a1[0].data["factors"] == 2 and a2[0].data["factors"] == 3
    assert record(12, ok, f"A1 q^5 V(w) depth 6: {a1[0].status} {a1[0].data}; "
                          f"A2 V(w1) depth 4: {a2[0].status} {a2[0].data}")


def test_criterion_13_verma_restriction(record):
    cases = _suite("A1", "verma-restriction", lam="q^3", depth=6)
    ok = _all_pass(cases) and cases[0].params["control"] == "q^[4]"
    assert record(13, ok, f"q^3 vs sigma q^3 depth 6, control q^4: {cases[0].status}")


def test_criterion_14_parabolic_verma(record):
    a1 = _suite("A1", "parabolic-verma", parabolic=[], lam="q^3", depth=4)
    a2 = _suite("A2", "parabolic-verma", parabolic=[1], depth=3)
    ok = _all_pass(a1) and _all_pass(a2)
    assert record(14, ok, f"A1 P=B q^3 depth 4: {a1[0].status}; A2 {{a1}} depth 3: {a2[0].status}")


def test_criterion_15_end_to_end(record, tmp_path):
    details, ok = [], True
    for label in ("A1", "A2"):
        outs, codes, times = [], [], []
        for k in range(2):
            path = tmp_path / f"{label}-{k}.json"
            t = time.perf_counter()
            proc = subprocess.run([sys.executable, "-m", "uqwork.cli", "check", "all", "--type", label,
                                   "--json", str(path)], capture_output=True, text=True, timeout=600)
            times.append(time.perf_counter() - t)
            codes.append(proc.returncode)
            outs.append(path.read_bytes() if path.exists() else b"")
        stable = bool(outs[0]) and outs[0] == outs[1]
        ok &= codes == [0, 0] and stable and max(times) < 600
        details.append(f"{label} exit {codes} in {max(times):.0f}s, byte-stable {stable}")
    assert record(15, ok, "; ".join(details))
