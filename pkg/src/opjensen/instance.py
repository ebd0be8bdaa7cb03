"""Instances: role-tagged operators plus bounds, function and maps, and dispatch to checkers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import checkers
from .functions import ScalarFunction
from .maps import MapFamily, scalar_weight_map
from .refine import lemma1_bound
from .spectral import DEFAULT_TOL, HermitianMatrix, as_hermitian

ROLES = ("A", "B", "C", "D")
SHARED = "phi"

THEOREMS = (
    "main.X1", "main.X2", "main.X3", "main.modes",
    "cor24", "cor25.1", "cor25.2", "cor25.3", "cor27",
    "jm", "petrovic",
    "omega.mid-out", "omega.mid-in", "omega.lambda", "omega.opconvex",
    "superadd",
    "monotone.i", "monotone.ii", "monotone.iii", "monotone.iv",
    "power-pairs.i", "power-pairs.ii",
    "lemma",
)

#: Accepted shorthands and the id they stand for.
ALIASES = {"main": "main.X1", "power-pairs": "power-pairs.i", "cor25": "cor25.1", "omega": "omega.mid-out"}


def canonical_theorem(theorem, params=None):
    """Resolve aliases; ``main`` honours a ``variant`` parameter, ``power-pairs`` a ``condition``."""
    params = params or {}
    if theorem == "main" and "variant" in params:
        theorem = f"main.{params['variant']}"
    if theorem == "main" and "modes" in params:
        theorem = "main.modes"
    if theorem == "power-pairs" and "condition" in params:
        theorem = f"power-pairs.{params['condition']}"
    theorem = ALIASES.get(theorem, theorem)
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    return theorem


@dataclass
class Instance:
    """Operators for one inequality.

    ``operators`` maps a role to a list of Hermitian matrices.  Roles are
    ``A``..``D`` for the four-role inequalities; the single-list ones use
    ``B`` (Jensen-Mercer, Petrovic), ``C`` (superadditivity) and ``A``
    (the secant bound).  Omega pairs are ``(A[i], D[i])``.

    ``families`` maps a role, or ``"phi"`` for a family shared by all roles,
    to a :class:`MapFamily`.  ``params`` holds per-theorem extras:
    ``variant``, ``modes``, ``lam``, ``p``, ``q``.

    Hypotheses are verified by the checker, not here.
    """

    theorem: str
    m: float
    M: float
    function: ScalarFunction
    operators: dict
    families: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        self.m, self.M = float(self.m), float(self.M)
        self.operators = {r: [as_hermitian(x) for x in xs] for r, xs in self.operators.items()}

    def ops(self, role):
        return self.operators.get(role, [])

    def family_for(self, role):
        """The family of ``role``: its own, else the shared one, else ``n`` identities (plain mean)."""
        if role in self.families:
            return self.families[role]
        if SHARED in self.families:
            return self.families[SHARED]
        xs = self.ops(role)
        return MapFamily.identities(len(xs), xs[0].dim)

    def shared_family(self, n=None):
        """The shared unital family; defaults to equal scalar weights ``1/n``."""
        if SHARED in self.families:
            return self.families[SHARED]
        xs = self.ops("A") or self.ops("B") or self.ops("C")
        n = len(xs) if n is None else n
        return MapFamily([scalar_weight_map(1.0 / n, xs[0].dim)] * n, 1.0)

    def to_json(self):
        return {
            "theorem": self.theorem,
            "m": self.m,
            "M": self.M,
            "function": self.function.to_json(),
            "operators": {r: [x.to_json() for x in xs] for r, xs in self.operators.items()},
            "families": {r: fam.to_json() for r, fam in self.families.items()},
            "params": dict(self.params),
        }

    def dumps(self, **kw):
        return json.dumps(self.to_json(), **kw)

    @classmethod
    def from_json(cls, d):
        for key in ("theorem", "m", "M", "operators"):
            if key not in d:
                raise ValueError(f"instance JSON lacks {key!r}")
        fn = d.get("function")
        if fn is None:
            if not str(d["theorem"]).startswith("power-pairs"):
                raise ValueError("instance JSON lacks 'function'")
            fn = {"kind": "power", "p": d.get("params", {})["p"]}
        return cls(
            theorem=d["theorem"],
            m=d["m"],
            M=d["M"],
            function=ScalarFunction.from_json(fn),
            operators={r: [HermitianMatrix.from_json(x) for x in xs] for r, xs in d["operators"].items()},
            families={r: MapFamily.from_json(v) for r, v in d.get("families", {}).items()},
            params=dict(d.get("params", {})),
        )

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return self.to_json() == other.to_json()


def run_instance(inst, tol=DEFAULT_TOL, verify=True):
    """Run the checker named by ``inst.theorem`` and return its report."""
    thm = canonical_theorem(inst.theorem, inst.params)
    f, m, M, ops, prm = inst.function, inst.m, inst.M, inst.ops, inst.params
    kw = {"tol": tol, "verify": verify}

    if thm.startswith("main."):
        variant = thm.split(".", 1)[1]
        if variant == "modes":
            return checkers.check_theorem_main(inst, modes=prm["modes"], **kw)
        return checkers.check_theorem_main(inst, variant, **kw)
    if thm == "cor24":
        phi = inst.families[SHARED].maps[0] if SHARED in inst.families else None
        (a,), (b,), (c,), (d,) = ops("A"), ops("B"), ops("C"), ops("D")
        return checkers.check_corollary_single_map(f, a, b, c, d, m, M, phi=phi, **kw)
    if thm.startswith("cor25."):
        return checkers.check_corollary_families(inst, int(thm[-1]), **kw)
    if thm == "cor27":
        return checkers.check_corollary_sums(f, ops("A"), ops("B"), ops("C"), ops("D"), m, M, **kw)
    if thm == "jm":
        return checkers.check_jensen_mercer(f, inst.shared_family(), ops("B"), m, M, **kw)
    if thm == "petrovic":
        return checkers.check_petrovic(f, ops("B"), M, **kw)
    if thm.startswith("omega."):
        form = thm.split(".", 1)[1]
        pairs = list(zip(ops("A"), ops("D")))
        fam = inst.shared_family() if form != "lambda" else None
        if form == "opconvex":
            return checkers.check_omega_operator_convex(f, fam, pairs, m, M, **kw)
        return checkers.check_omega_jensen(f, fam, pairs, m, M, form, lam=prm.get("lam"), **kw)
    if thm == "superadd":
        return checkers.check_superadditivity(f, ops("C"), M, **kw)
    if thm.startswith("monotone."):
        (a,), (b,), (c,), (d,) = ops("A"), ops("B"), ops("C"), ops("D")
        return checkers.check_monotone_conditions(f, a, b, c, d, m, M, thm.split(".", 1)[1], **kw)
    if thm.startswith("power-pairs."):
        (a,), (b,), (c,), (d,) = ops("A"), ops("B"), ops("C"), ops("D")
        p = prm.get("p", f.params[0] if f.kind == "power" else None)
        return checkers.check_power_pairs(a, b, c, d, m, M, p, prm["q"], thm.split(".", 1)[1], **kw)
    if thm == "lemma":
        (a,) = ops("A")
        return lemma1_bound(f, a, m, M, **kw)
    raise ValueError(f"unknown theorem id {thm!r}")
