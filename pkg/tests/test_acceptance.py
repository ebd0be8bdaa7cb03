"""Acceptance suite: one marked group of tests per criterion.

The terminal summary (see ``conftest.py``) prints one PASS/FAIL line per
criterion.  Tolerances are the stated ones; failures are left to show.
"""

import time

import numpy as np
import pytest

from opjensen.functions import ScalarFunction
from opjensen.fuzz import FUZZ_THEOREMS, fuzz_case, run_fuzz
from opjensen.generate import GenConfig, derive_seed, gen_mutant
from opjensen.instance import run_instance
from opjensen.reproduce import reproduce
import oracles

FUZZ_COUNT = 1000
FUZZ_CHECKERS = [t for t in FUZZ_THEOREMS if t != "omega.opconvex"]


def _comparison_names(example):
    return [c.name for c in reproduce(example).comparisons]


def _comparison(example, name):
    res = reproduce(example)
    (c,) = [c for c in res.comparisons if c.name == name]
    return res, c


# -- 1 -------------------------------------------------------------------------------------

@pytest.mark.criterion(1)
@pytest.mark.parametrize("name", _comparison_names("ex26"))
def test_c1_ex26(name, record_property):
    res, c = _comparison("ex26", name)
    record_property("detail", c.detail)
    assert c.passed


@pytest.mark.criterion(1)
def test_c1_ex26_chains_and_runtime(record_property):
    res = reproduce("ex26", tol=1e-9)
    record_property("detail", f"{len(res.reports)} chains, {res.wall_time:.3f}s")
    assert len(res.reports) == 4 and all(r.passed for r in res.reports)
    assert res.wall_time < 1.0


# -- 2 -------------------------------------------------------------------------------------

@pytest.mark.criterion(2)
@pytest.mark.parametrize("name", _comparison_names("ex34"))
def test_c2_ex34(name, record_property):
    res, c = _comparison("ex34", name)
    record_property("detail", c.detail)
    assert c.passed


@pytest.mark.criterion(2)
def test_c2_ex34_runtime(record_property):
    res = reproduce("ex34")
    record_property("detail", f"{res.wall_time:.3f}s")
    assert res.wall_time < 1.0


# -- 3 -------------------------------------------------------------------------------------

@pytest.mark.criterion(3)
@pytest.mark.parametrize("example, name", [(e, n) for e in ("intro-t4", "intro-sub") for n in _comparison_names(e)])
def test_c3_counterexamples(example, name, record_property):
    res, c = _comparison(example, name)
    record_property("detail", c.detail)
    assert c.passed


# -- 4 and 5 -------------------------------------------------------------------------------

@pytest.fixture(scope="session")
def fuzz_results():
    start = time.perf_counter()
    out = {t: run_fuzz(t, FUZZ_COUNT, seed=2024, tol=1e-9, keep=0) for t in FUZZ_CHECKERS}
    return out, time.perf_counter() - start


@pytest.mark.criterion(4)
@pytest.mark.parametrize("theorem", FUZZ_CHECKERS)
def test_c4_fuzz(theorem, fuzz_results, record_property):
    s = fuzz_results[0][theorem]
    detail = f"{s.passed}/{s.instances_run} passed, {s.failed} failed, {s.errored} errored"
    if s.reports:
        detail += f"; first failure: {s.reports[0].summary()}"
    if s.errors:
        detail += f"; first error: {s.errors[0]['error']}"
    record_property("detail", detail)
    assert s.instances_run == FUZZ_COUNT
    assert s.failed == 0 and s.errored == 0


@pytest.mark.criterion(4)
def test_c4_total_runtime(fuzz_results, record_property):
    record_property("detail", f"{fuzz_results[1]:.1f}s for {len(FUZZ_CHECKERS)} x {FUZZ_COUNT}")
    assert fuzz_results[1] < 120.0


@pytest.mark.criterion(5)
@pytest.mark.parametrize("theorem", FUZZ_CHECKERS)
def test_c5_refinement_ranges(theorem, fuzz_results, record_property):
    s = fuzz_results[0][theorem]
    record_property("detail", f"{len(s.range_violations)} violations"
                    + (f"; first: {s.range_violations[0]}" if s.range_violations else ""))
    assert s.errored == 0
    assert s.range_violations == []


# -- 6 -------------------------------------------------------------------------------------

ORACLE_COUNT = 500


@pytest.mark.criterion(6)
def test_c6_oracle_equivalence(record_property):
    worst, where, compared = 0.0, None, 0
    for i in range(ORACLE_COUNT):
        inst = fuzz_case(FUZZ_THEOREMS[i % len(FUZZ_THEOREMS)], 77, i, diagonal=True)
        rep = run_instance(inst)
        for name, want in oracles.expected(inst).items():
            got = np.real(np.diag(rep.matrices[name].array))
            scale = max(1.0, float(np.max(np.abs(want))))
            dev = float(np.max(np.abs(got - want))) / scale
            compared += 1
            if dev > worst:
                worst, where = dev, f"{inst.theorem} #{i} {name}"
    record_property("detail", f"{compared} matrices, worst scaled deviation {worst:.2e} at {where}")
    assert worst < 1e-10


# -- 7 -------------------------------------------------------------------------------------

_NEG_SQ = ScalarFunction.power(2, scale=-1.0)
MUTATION_SETUPS = {
    "main.X1": (None, 0.0, 2.0), "main.X2": (None, 0.0, 2.0), "main.X3": (None, 0.0, 2.0),
    "cor24": (None, 0.0, 2.0), "cor25.1": (None, 0.0, 2.0), "cor25.2": (None, 0.0, 2.0),
    "cor25.3": (None, 0.0, 2.0), "cor27": (None, 0.0, 2.0), "jm": (None, 0.0, 2.0),
    "petrovic": (None, 0.0, 2.0), "superadd": (None, 0.0, 2.0),
    "omega.mid-out": (None, 0.0, 2.0), "omega.mid-in": (None, 0.0, 2.0), "omega.opconvex": (None, 0.0, 2.0),
    "monotone.i": (None, 0.0, 2.0), "monotone.ii": (None, -2.0, -1.0),
    "monotone.iii": (_NEG_SQ, 0.5, 1.5), "monotone.iv": (_NEG_SQ, -2.0, -1.0),
    "power-pairs.i": (ScalarFunction.power(2), 2.0, 3.0), "power-pairs.ii": (ScalarFunction.power(-1), 3.0, 4.0),
    "lemma": (None, 0.0, 2.0),
}


@pytest.mark.criterion(7)
@pytest.mark.parametrize("theorem", sorted(MUTATION_SETUPS))
def test_c7_mutation(theorem, record_property):
    f, m, M = MUTATION_SETUPS[theorem]
    for trial in range(200):
        cfg = GenConfig(dim=1 + trial % 5, m=m, M=M, seed=derive_seed(7, trial))
        rep = run_instance(gen_mutant(theorem, cfg, f, eps_fraction=0.05), verify=False)
        if not rep.passed:
            record_property("detail", f"first failing link after {trial + 1} trial(s): {rep.summary()}")
            return
    record_property("detail", "no failing link in 200 trials")
    pytest.fail("mutation not detected")


# -- 8 -------------------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_c8_operator_convex_chain(record_property):
    s = run_fuzz("omega.opconvex", 200, seed=8, tol=1e-9, function=ScalarFunction.power(2), keep=200)
    links = {len(r.chain) for r in s.reports}
    record_property("detail", s.line())
    assert s.passed == 200 and links == {4}
