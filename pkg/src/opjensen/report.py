"""Inequality reports: the value objects every checker returns."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .spectral import HermitianMatrix, LoewnerVerdict, loewner_compare

RELATIONS = ("<=", ">=")


@dataclass(frozen=True)
class Link:
    """One claimed relation ``lhs relation rhs`` and the verdict found for it."""

    lhs: str
    rhs: str
    relation: str
    verdict: LoewnerVerdict

    @property
    def holds(self):
        return self.verdict.holds(self.relation)

    @property
    def gap(self):
        """Least eigenvalue of the slack (``rhs - lhs`` for ``<=``)."""
        return self.verdict.gap(self.relation)

    def strict(self, rel_threshold=1e-6):
        return self.gap > rel_threshold * self.verdict.scale

    def to_json(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "relation": self.relation,
                "holds": self.holds, "verdict": self.verdict.to_json()}

    @classmethod
    def from_json(cls, d):
        return cls(d["lhs"], d["rhs"], d["relation"], LoewnerVerdict.from_json(d["verdict"]))


@dataclass
class InequalityReport:
    """Verified inequality chain with the matrices and scalars behind it.

    ``ranges`` maps the name of each refinement matrix (the tilde terms) to
    the interval its spectrum must lie in when the hypotheses hold.
    """

    theorem: str
    chain: list = field(default_factory=list)
    scalars: dict = field(default_factory=dict)
    matrices: dict = field(default_factory=dict)
    ranges: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return all(link.holds for link in self.chain)

    def strict(self, rel_threshold=1e-6):
        """True when every link holds with a positive gap above ``rel_threshold * scale``."""
        return self.passed and all(link.strict(rel_threshold) for link in self.chain)

    def failures(self):
        return [link for link in self.chain if not link.holds]

    def range_violations(self, tol=1e-9):
        """Refinement terms outside their stated ranges.

        Checks every ``delta*`` scalar for the sign of the function (entry
        ``sign``; +1 when absent) up to ``tol * max(1, ||rhs||)`` and every
        matrix in :attr:`ranges` for ``lo - tol <= lambda_min`` and
        ``lambda_max <= hi + tol`` (relative to ``max(1, |hi|)``).
        Returns a list of messages, empty when everything is in range.
        """
        out = []
        sign = self.scalars.get("sign", 1.0)
        scale = max([1.0] + [x.norm for x in self.matrices.values()])
        for name, value in self.scalars.items():
            if name.startswith("delta") and sign * value < -tol * scale:
                out.append(f"{name} = {value:.6g} has the wrong sign")
        for name, (lo, hi) in self.ranges.items():
            ev = self.matrices[name].eigenvalues
            slack = tol * max(1.0, abs(hi))
            if ev[0] < lo - slack:
                out.append(f"{name}: lambda_min {ev[0]:.6g} below {lo:g}")
            if ev[-1] > hi + slack:
                out.append(f"{name}: lambda_max {ev[-1]:.6g} above {hi:g}")
        return out

    def add_link(self, lhs, rhs, relation, tol):
        verdict = loewner_compare(self.matrices[lhs], self.matrices[rhs], tol)
        link = Link(lhs, rhs, relation, verdict)
        self.chain.append(link)
        return link

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        gaps = ", ".join(f"{lk.lhs} {lk.relation} {lk.rhs}: gap {lk.gap:.3g}" for lk in self.chain)
        return f"[{status}] {self.theorem}: {gaps}"

    def to_json(self):
        return {
            "theorem": self.theorem,
            "passed": self.passed,
            "chain": [lk.to_json() for lk in self.chain],
            "scalars": dict(self.scalars),
            "matrices": {k: v.to_json() for k, v in self.matrices.items()},
            "ranges": {k: list(v) for k, v in self.ranges.items()},
            "notes": list(self.notes),
        }

    def dumps(self, **kw):
        return json.dumps(self.to_json(), **kw)

    @classmethod
    def from_json(cls, d):
        rep = cls(
            theorem=d["theorem"],
            chain=[Link.from_json(x) for x in d["chain"]],
            scalars={k: float(v) for k, v in d.get("scalars", {}).items()},
            matrices={k: HermitianMatrix.from_json(v) for k, v in d.get("matrices", {}).items()},
            ranges={k: tuple(v) for k, v in d.get("ranges", {}).items()},
            notes=list(d.get("notes", [])),
        )
        if "passed" in d and bool(d["passed"]) != rep.passed:
            raise ValueError("report 'passed' flag disagrees with its chain")
        return rep

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))
