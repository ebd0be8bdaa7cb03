"""Seeded fuzz campaigns: generate instances for a checker, run them, aggregate."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import OpJensenError
from .functions import ScalarFunction
from .generate import GenConfig, derive_seed, gen_instance
from .instance import canonical_theorem, run_instance
from .spectral import DEFAULT_TOL

#: The checkers that fuzz campaigns cover.
FUZZ_THEOREMS = (
    "main.X1", "main.X2", "main.X3", "cor24", "cor25.1", "cor25.2", "cor25.3", "cor27",
    "jm", "petrovic", "omega.mid-out", "omega.mid-in", "omega.lambda", "superadd",
    "monotone.i", "monotone.ii", "monotone.iii", "monotone.iv", "power-pairs", "omega.opconvex",
)

_SQ = ScalarFunction.power(2)
_P4 = ScalarFunction.power(4)
_EXP = ScalarFunction.exp()
_NEG_SQ = ScalarFunction.power(2, scale=-1.0)
_LOG = ScalarFunction.log()
_LOG1P = ScalarFunction.log(shift=1.0)
_EXPM1 = ScalarFunction.exp(offset=-1.0)

CONVEX = (_SQ, _P4, _EXP)
CONCAVE = (_NEG_SQ, _LOG)

#: Per checker: the functions a campaign cycles through, paired with the
#: region their interval is drawn from ("any", "nonneg", "nonpos").
FUNCTION_POOLS = {
    "sandwich": [(f, "any") for f in CONVEX + CONCAVE],
    "petrovic": [(f, "any") for f in CONVEX + (_NEG_SQ, _LOG1P)],
    "superadd": [(f, "any") for f in (_SQ, _P4, _EXPM1, _NEG_SQ, _LOG1P)],
    "monotone.i": [(_SQ, "nonneg"), (_P4, "nonneg"), (_EXP, "any")],
    "monotone.ii": [(_SQ, "nonpos"), (_P4, "nonpos")],
    "monotone.iii": [(_NEG_SQ, "nonneg")],
    "monotone.iv": [(_NEG_SQ, "nonpos"), (_LOG, "any")],
    "omega.opconvex": [(_SQ, "any"), (_NEG_SQ, "any"), (_LOG, "any")],
}


def _pool(thm):
    if thm in FUNCTION_POOLS:
        return FUNCTION_POOLS[thm]
    return FUNCTION_POOLS["sandwich"]


def _interval(rng, f, region, thm):
    """Draw ``(m, M)`` so every operator the generator can produce stays in ``f``'s domain.

    A generated ``A`` reaches down to about ``m - spread - 1.1 (M - m)`` with
    the default spread ``(M - m)/2``; domains bounded below keep ``m`` above it.
    """
    if thm in ("petrovic", "superadd"):
        return 0.0, float(rng.uniform(0.5, 3.0))
    w = float(rng.uniform(0.3, 2.5 if f.kind == "exp" else 3.0))
    lo = f.domain.lo
    if np.isfinite(lo):
        m = lo + 1.7 * w + 0.1 + float(rng.uniform(0.0, 2.0))
    elif region == "nonneg":
        m = float(rng.uniform(0.0, 2.0))
    elif region == "nonpos":
        m = -w - float(rng.uniform(0.0, 2.0))
    elif f.kind == "exp":
        m = float(rng.uniform(-2.0, 1.0))
    else:
        m = float(rng.uniform(-2.0, 2.0))
    return m, m + w


def fuzz_case(theorem, master_seed, index, function=None, dim=None, m=None, M=None, params=None,
              diagonal=False):
    """The ``index``-th instance of a campaign, determined by ``(master_seed, index)`` alone.

    Unset choices are drawn: dimension cycles through 1..5, the function
    cycles through the checker's pool, bounds come from a region suited to
    the function.  Power pairs draw ``p`` and ``q >= p`` for their condition;
    a bare ``power-pairs`` takes the condition a fixed ``p`` admits (``p >= 1``
    or ``p <= 0``) and otherwise alternates conditions (i) and (ii).
    ``diagonal=True`` draws commuting (diagonal) operators and scalar weight maps.
    """
    if theorem == "power-pairs" and "condition" not in (params or {}):
        p = (params or {}).get("p")
        if p is not None and p >= 1:
            theorem = "power-pairs.i"
        elif p is not None and p <= 0:
            theorem = "power-pairs.ii"
        else:
            theorem = "power-pairs.i" if index % 2 == 0 else "power-pairs.ii"
    thm = canonical_theorem(theorem, params)
    seed = derive_seed(master_seed, index)
    rng = np.random.default_rng([seed, 2])
    dim = int(dim) if dim is not None else 1 + index % 5
    params = dict(params or {})
    if thm.startswith("power-pairs."):
        if thm == "power-pairs.i":
            p = params.get("p", float(rng.choice([1.0, 1.5, 2.0, 3.0, 4.0])))
            mm = float(rng.uniform(1.2, 3.0))
            w = float(rng.uniform(0.3, 2.0))
        else:
            p = params.get("p", float(rng.choice([-2.0, -1.0, -0.5, 0.0])))
            mm = float(rng.uniform(2.0, 4.0))
            w = float(rng.uniform(0.2, 0.8 * (mm - 1.0)))
        params.setdefault("p", p)
        params.setdefault("q", params["p"] + float(rng.choice([0.0, 0.5, 1.0, 2.0])))
        if function is None:
            function = ScalarFunction.power(params["p"])
        region_m, region_M = mm, mm + w
    else:
        pool = _pool(thm)
        if function is None:
            function, region = pool[index % len(pool)]
        else:
            region = next((r for g, r in pool if g == function), "any")
        region_m, region_M = _interval(rng, function, region, thm)
    m = region_m if m is None else float(m)
    M = region_M if M is None else float(M)
    cfg = GenConfig(dim=dim, m=m, M=M, seed=seed)
    return gen_instance(thm, cfg, function, diagonal=diagonal, params=params, check=False)


@dataclass
class CaseResult:
    index: int
    status: str
    report: object = None
    error: str = ""
    range_violations: list = field(default_factory=list)

    def to_json(self):
        return {"index": self.index, "status": self.status, "error": self.error,
                "range_violations": list(self.range_violations),
                "report": None if self.report is None else self.report.to_json()}


def run_case(theorem, master_seed, index, tol=DEFAULT_TOL, **kw):
    """Generate and check one instance; generator or hypothesis errors count as ``errored``."""
    try:
        inst = fuzz_case(theorem, master_seed, index, **kw)
        rep = run_instance(inst, tol=tol)
    except (OpJensenError, ValueError) as exc:
        return CaseResult(index, "errored", error=f"{type(exc).__name__}: {exc}")
    return CaseResult(index, "passed" if rep.passed else "failed", rep,
                      range_violations=rep.range_violations(tol))


@dataclass
class RunSummary:
    """Aggregate of one command run; ``passed + failed + errored == instances_run``."""

    command: str
    instances_run: int = 0
    passed: int = 0
    failed: int = 0
    errored: int = 0
    strict_count: int = 0
    wall_time: float = 0.0
    reports: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    range_violations: list = field(default_factory=list)

    @property
    def ok(self):
        return self.failed == 0 and self.errored == 0

    def add(self, result, keep=10):
        self.instances_run += 1
        if result.status == "passed":
            self.passed += 1
        elif result.status == "failed":
            self.failed += 1
        else:
            self.errored += 1
            self.errors.append({"index": result.index, "error": result.error})
        if result.report is not None:
            if result.report.strict():
                self.strict_count += 1
            if result.status == "failed" or len(self.reports) < keep:
                self.reports.append(result.report)
        for msg in result.range_violations:
            self.range_violations.append({"index": result.index, "violation": msg})

    def line(self):
        return (f"{self.command}: {self.instances_run} run, {self.passed} passed, {self.failed} failed, "
                f"{self.errored} errored, {self.strict_count} strict, {self.wall_time:.2f}s")

    def to_json(self):
        return {
            "command": self.command,
            "instances_run": self.instances_run,
            "passed": self.passed,
            "failed": self.failed,
            "errored": self.errored,
            "strict_count": self.strict_count,
            "wall_time": self.wall_time,
            "reports": [r.to_json() for r in self.reports],
            "errors": list(self.errors),
            "range_violations": list(self.range_violations),
        }


def _run_chunk(args):
    theorem, seed, indices, tol, kw = args
    return [run_case(theorem, seed, i, tol, **kw) for i in indices]


def run_fuzz(theorem, count, seed=0, tol=DEFAULT_TOL, workers=1, keep=10, **kw):
    """Run ``count`` seeded instances of ``theorem``.

    Results are aggregated in index order, so the summary does not depend on
    ``workers``.  Extra keywords (``function``, ``dim``, ``m``, ``M``,
    ``params``, ``diagonal``) fix the corresponding choices of :func:`fuzz_case`.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    thm = theorem if theorem == "power-pairs" else canonical_theorem(theorem, kw.get("params"))
    summary = RunSummary(f"fuzz {thm}")
    start = time.perf_counter()
    if workers <= 1:
        results = [run_case(thm, seed, i, tol, **kw) for i in range(count)]
    else:
        chunks = [list(range(k, count, workers)) for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_run_chunk, [(thm, seed, c, tol, kw) for c in chunks])
            results = sorted((r for part in parts for r in part), key=lambda r: r.index)
    for r in results:
        summary.add(r, keep)
    summary.wall_time = time.perf_counter() - start
    return summary
