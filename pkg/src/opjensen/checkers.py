"""One checker per refined Jensen-type inequality.

Each checker first verifies the hypotheses of its inequality (raising
:class:`~opjensen.errors.HypothesisError` when they fail) and then returns an
:class:`~opjensen.report.InequalityReport` whose chain compares the matrices
``lhs``, ``middle`` and ``rhs`` in the Loewner order.  For convex ``f`` every
link claims ``<=``; for concave ``f`` every link claims ``>=``.

Throughout, ``c = (m + M) / 2`` and ``w = M - m``.

Pass ``verify=False`` to skip the hypothesis checks.  That exists for
mutation testing only: the conclusion of a checker run on data violating
its hypotheses means nothing.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DimensionError, HypothesisError
from .functions import ScalarFunction
from .maps import MapFamily, convexity_weights_map, identity_map
from .refine import delta_f, delta_f_n, tilde
from .report import InequalityReport
from .spectral import (DEFAULT_TOL, HermitianMatrix, abs_deviation, apply_function, as_hermitian,
                       compare_to_scalar, loewner_compare)

OUTER = "outer"
INNER = "inner"

#: Theorem main and its two companion forms, as (B, C | A, D) modes.
MAIN_VARIANTS = {
    "X1": {"B": OUTER, "C": OUTER, "A": INNER, "D": INNER},
    "X2": {"B": INNER, "C": INNER, "A": OUTER, "D": OUTER},
    "X3": {"B": INNER, "C": OUTER, "A": OUTER, "D": INNER},
}

#: The three forms for a single unital family with per-index balance.
FAMILY_FORMS = {
    1: {"B": OUTER, "C": OUTER, "A": INNER, "D": INNER},
    2: {"B": INNER, "C": INNER, "A": OUTER, "D": OUTER},
    3: {"B": INNER, "C": OUTER, "A": INNER, "D": OUTER},
}

MONOTONE_CONDITIONS = ("i", "ii", "iii", "iv")


# -- hypothesis helpers -------------------------------------------------------

def _require(x, relation, y, what, tol):
    verdict = loewner_compare(x, y, tol)
    if not verdict.holds(relation):
        gap = verdict.gap(relation) if relation != "==" else -max(abs(verdict.min_eig_diff),
                                                                  abs(verdict.max_eig_diff))
        raise HypothesisError(what, f"eigenvalue gap {gap:.6g}, tolerance {tol * verdict.scale:.3g}",
                              margin=gap, witness=verdict.witness_vector)


def _scalar_bound(x, relation, c, what, tol):
    verdict = compare_to_scalar(x, c, tol)
    if not verdict.holds(relation):
        gap = verdict.gap(relation)
        raise HypothesisError(what, f"eigenvalue gap {gap:.6g}, tolerance {tol * verdict.scale:.3g}",
                              margin=gap, witness=verdict.witness_vector)


def _le_scalar(x, c, what, tol):
    _scalar_bound(as_hermitian(x), "<=", c, what, tol)


def _ge_scalar(x, c, what, tol):
    _scalar_bound(as_hermitian(x), ">=", c, what, tol)


def _hull(mats, *points):
    lo = min([float(x.eigenvalues[0]) for x in mats] + [float(p) for p in points])
    hi = max([float(x.eigenvalues[-1]) for x in mats] + [float(p) for p in points])
    return lo, hi


def _certify(f, mats, *points):
    lo, hi = _hull(mats, *points)
    f.certify(lo, hi)


def _check_bounds(m, M):
    m, M = float(m), float(M)
    if not m < M:
        raise HypothesisError("m < M", f"m={m:g}, M={M:g}")
    return m, M


def _as_list(xs):
    if isinstance(xs, HermitianMatrix) or not isinstance(xs, Sequence):
        xs = [xs]
    return [as_hermitian(x) for x in xs]


def _relation(f):
    return "<=" if f.is_convex else ">="


def _finish(rep, f, tol):
    rep.scalars["sign"] = float(f.sign)
    rel = _relation(f)
    rep.add_link("lhs", "middle", rel, tol)
    rep.add_link("middle", "rhs", rel, tol)
    return rep


def _sum(mats):
    out = mats[0]
    for x in mats[1:]:
        out = out + x
    return out


# -- the sandwich engine ------------------------------------------------------

def sandwich_chain(theorem, f, ops, fams, m, M, modes, balance="map", tol=DEFAULT_TOL, verify=True):
    """Shared core of the four-role inequalities.

    Parameters
    ----------
    ops : dict
        Role (``"A"``, ``"B"``, ``"C"``, ``"D"``) to list of operators.
    fams : dict
        Role to :class:`MapFamily`; its normalized action averages that role.
    modes : dict
        Role to ``"outer"`` (``f`` of the average) or ``"inner"`` (average
        of ``f``).  ``B`` and ``C`` form the left side, ``A`` and ``D`` the
        right side; the refinement term ``X~`` collects ``|avg - c|`` for outer
        and ``avg |X_i - c|`` for inner left-side roles.
    balance : {"map", "per-index"}
        ``map``: normalized averages satisfy ``A + D = C + B``;
        ``per-index``: additionally ``A_i + D_i = B_i + C_i`` for every ``i``.
    """
    m, M = _check_bounds(m, M)
    c, w = 0.5 * (m + M), M - m
    ops = {r: _as_list(ops[r]) for r in "ABCD"}
    for r in "ABCD":
        if len(ops[r]) != len(fams[r]):
            raise DimensionError(f"role {r}: {len(ops[r])} operators for {len(fams[r])} maps")
    avg = {r: fams[r].apply_normalized(ops[r]) for r in "ABCD"}
    if len({avg[r].dim for r in "ABCD"}) != 1:
        raise DimensionError("the four averaged operators must share one dimension")

    if verify:
        for i, a in enumerate(ops["A"]):
            _le_scalar(a, m, f"A[{i}] <= m", tol)
        for r in "BC":
            for i, x in enumerate(ops[r]):
                _ge_scalar(x, m, f"m <= {r}[{i}]", tol)
                _le_scalar(x, M, f"{r}[{i}] <= M", tol)
        for i, d in enumerate(ops["D"]):
            _ge_scalar(d, M, f"M <= D[{i}]", tol)
        if balance == "per-index":
            n = len(ops["A"])
            if any(len(ops[r]) != n for r in "BCD"):
                raise HypothesisError("A_i + D_i = B_i + C_i", "roles have different lengths")
            for i in range(n):
                _require(ops["A"][i] + ops["D"][i], "==", ops["B"][i] + ops["C"][i],
                         f"A[{i}] + D[{i}] = B[{i}] + C[{i}]", tol)
        _require(avg["A"] + avg["D"], "==", avg["C"] + avg["B"],
                 "balance avg(A) + avg(D) = avg(C) + avg(B)", tol)
        _certify(f, [x for r in "ABCD" for x in ops[r]], m, M)

    d = delta_f(f, m, M).value
    vals, dev = {}, {}
    for r in "ABCD":
        if modes[r] == OUTER:
            vals[r] = apply_function(avg[r], f)
            dev[r] = abs_deviation(avg[r], c)
        else:
            vals[r] = fams[r].apply_normalized([apply_function(x, f) for x in ops[r]])
            dev[r] = fams[r].apply_normalized([abs_deviation(x, c) for x in ops[r]])
    xt = 1.0 - (dev["B"] + dev["C"]) / w
    rhs = vals["A"] + vals["D"]

    rep = InequalityReport(theorem)
    rep.scalars.update({"delta_f": d, "m": m, "M": M})
    for r in "ABCD":
        rep.scalars[f"normalization.{r}"] = fams[r].normalization
    rep.matrices.update({"lhs": vals["B"] + vals["C"], "middle": rhs - d * xt, "rhs": rhs, "X~": xt})
    for r in "ABCD":
        rep.matrices[f"avg({r})"] = avg[r]
    rep.ranges["X~"] = (0.0, 1.0)
    rep.notes.append("modes " + ", ".join(f"{r}:{modes[r]}" for r in "BCAD"))
    return _finish(rep, f, tol)


def check_theorem_main(inst, variant="X1", modes=None, tol=DEFAULT_TOL, verify=True):
    """Four families ``Phi`` (A), ``Phi-bar`` (D), ``Psi`` (C), ``Psi-bar`` (B) with
    their own normalizations, balance of normalized averages.

    ``variant`` selects where ``f`` and the absolute values sit
    (``X1``, ``X2``, ``X3``); ``modes`` overrides it role by role.
    """
    if modes is None:
        if variant not in MAIN_VARIANTS:
            raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(MAIN_VARIANTS)}")
        modes = MAIN_VARIANTS[variant]
        theorem = f"main.{variant}"
    else:
        theorem = "main.modes"
    fams = {r: inst.family_for(r) for r in "ABCD"}
    return sandwich_chain(theorem, inst.function, inst.operators, fams, inst.m, inst.M, modes,
                          balance="map", tol=tol, verify=verify)


def _check_unital(fam):
    if not fam.unital:
        raise HypothesisError("sum_i Phi_i(I) = I", f"normalization is {fam.normalization:g}")


def check_corollary_single_map(f, A, B, C, D, m, M, phi=None, tol=DEFAULT_TOL, verify=True):
    """Single unital map, ``A + D = B + C``; ``phi=None`` means the identity map."""
    A, B, C, D = (as_hermitian(x) for x in (A, B, C, D))
    fam = MapFamily.single(phi if phi is not None else identity_map(A.dim))
    if verify:
        _check_unital(fam)
    fams = dict.fromkeys("ABCD", fam)
    ops = {"A": [A], "B": [B], "C": [C], "D": [D]}
    return sandwich_chain("cor24", f, ops, fams, m, M, FAMILY_FORMS[1], balance="per-index",
                          tol=tol, verify=verify)


def check_corollary_families(inst, form, tol=DEFAULT_TOL, verify=True):
    """One unital family ``Phi_1..Phi_n``, ``A_i + D_i = B_i + C_i`` for each ``i``."""
    form = int(form)
    if form not in FAMILY_FORMS:
        raise ValueError(f"form must be 1, 2 or 3, got {form}")
    n = len(inst.operators["A"])
    fam = inst.shared_family(n)
    if verify:
        _check_unital(fam)
    fams = dict.fromkeys("ABCD", fam)
    return sandwich_chain(f"cor25.{form}", inst.function, inst.operators, fams, inst.m, inst.M,
                          FAMILY_FORMS[form], balance="per-index", tol=tol, verify=verify)


# -- sums over n operators ----------------------------------------------------

def check_corollary_sums(f, A, B, C, D, m, M, tol=DEFAULT_TOL, verify=True):
    """Summed balance ``sum (A_i + D_i) = sum (C_i + B_i)``; two refined chains.

    ``eq1`` applies ``f`` to the sums and refines with the midpoint defect on
    ``[n m, n M]``; ``eq2`` applies ``f`` termwise with ``delta_f`` on ``[m, M]``.
    """
    m, M = _check_bounds(m, M)
    A, B, C, D = (_as_list(x) for x in (A, B, C, D))
    n = len(A)
    if any(len(x) != n for x in (B, C, D)):
        raise DimensionError("A, B, C and D lists must have equal length")
    sA, sB, sC, sD = (_sum(x) for x in (A, B, C, D))
    if verify:
        for i in range(n):
            _le_scalar(A[i], m, f"A[{i}] <= m", tol)
            for r, x in (("B", B[i]), ("C", C[i])):
                _ge_scalar(x, m, f"m <= {r}[{i}]", tol)
                _le_scalar(x, M, f"{r}[{i}] <= M", tol)
            _ge_scalar(D[i], M, f"M <= D[{i}]", tol)
        _require(sA + sD, "==", sC + sB, "sum(A_i + D_i) = sum(C_i + B_i)", tol)
        _certify(f, A + B + C + D + [sA, sB, sC, sD], m, M, n * m, n * M)

    c, w = 0.5 * (m + M), M - m
    dn = delta_f_n(f, m, M, n).value
    d = delta_f(f, m, M).value
    rel = _relation(f)
    rep = InequalityReport("cor27")
    rep.scalars.update({"delta_f": d, "delta_f_n": dn, "m": m, "M": M, "n": float(n), "sign": float(f.sign)})

    xn = 1.0 - (abs_deviation(sC, n * c) + abs_deviation(sB, n * c)) / (n * w)
    rhs1 = apply_function(sA, f) + apply_function(sD, f)
    rep.matrices.update({
        "eq1.lhs": apply_function(sC, f) + apply_function(sB, f),
        "eq1.middle": rhs1 - dn * xn,
        "eq1.rhs": rhs1,
        "X~n": xn,
    })
    tsum = _sum([tilde(x, m, M) for x in C + B])
    rhs2 = _sum([apply_function(x, f) for x in A + D])
    rep.matrices.update({
        "eq2.lhs": _sum([apply_function(x, f) for x in C + B]),
        "eq2.middle": rhs2 - d * tsum,
        "eq2.rhs": rhs2,
        "sum(C~+B~)": tsum,
    })
    rep.ranges.update({"X~n": (0.0, 1.0), "sum(C~+B~)": (0.0, float(n))})
    for eq in ("eq1", "eq2"):
        rep.add_link(f"{eq}.lhs", f"{eq}.middle", rel, tol)
        rep.add_link(f"{eq}.middle", f"{eq}.rhs", rel, tol)
    return rep


# -- applications ---------------------------------------------------------------

def check_jensen_mercer(f, fam, B, m, M, tol=DEFAULT_TOL, verify=True):
    """Refined Jensen-Mercer: ``f(m + M - sum Phi_i(B_i)) <= f(m) + f(M) - sum Phi_i(f(B_i)) - delta_f B~``."""
    m, M = _check_bounds(m, M)
    B = _as_list(B)
    if len(B) != len(fam):
        raise DimensionError(f"{len(B)} operators for {len(fam)} maps")
    if verify:
        _check_unital(fam)
        for i, b in enumerate(B):
            _ge_scalar(b, m, f"m <= B[{i}]", tol)
            _le_scalar(b, M, f"B[{i}] <= M", tol)
        _certify(f, B, m, M)
    c, w = 0.5 * (m + M), M - m
    d = delta_f(f, m, M).value
    pb = fam.apply_sum(B)
    bt = 1.0 - (fam.apply_sum([abs_deviation(b, c) for b in B]) + abs_deviation(pb, c)) / w
    rhs = (f(m) + f(M)) - fam.apply_sum([apply_function(b, f) for b in B])
    rep = InequalityReport("jm")
    rep.scalars.update({"delta_f": d, "m": m, "M": M})
    rep.matrices.update({"lhs": apply_function((m + M) - pb, f), "middle": rhs - d * bt,
                         "rhs": rhs, "B~": bt, "sum Phi(B)": pb})
    rep.ranges["B~"] = (0.0, 1.0)
    return _finish(rep, f, tol)


def check_petrovic(f, B, M, tol=DEFAULT_TOL, verify=True):
    """Refined Petrovic: ``sum f(B_i) <= f(sum B_i) + (n-1) f(0) - delta_f B~`` when ``sum B_i = M I``."""
    M = float(M)
    B = _as_list(B)
    n = len(B)
    if not M > 0:
        raise HypothesisError("M > 0", f"M={M:g}")
    total = _sum(B)
    if verify:
        for i, b in enumerate(B):
            _ge_scalar(b, 0.0, f"B[{i}] >= 0", tol)
        _require(total, "==", HermitianMatrix.scalar(M, total.dim), "sum B_i = M I", tol)
        _certify(f, B + [total], 0.0, M)
    d = delta_f(f, 0.0, M).value
    bt = _sum([tilde(b, 0.0, M) for b in B])
    rhs = apply_function(total, f) + (n - 1) * f(0.0)
    rep = InequalityReport("petrovic")
    rep.scalars.update({"delta_f": d, "m": 0.0, "M": M, "n": float(n)})
    rep.matrices.update({"lhs": _sum([apply_function(b, f) for b in B]), "middle": rhs - d * bt,
                         "rhs": rhs, "B~": bt})
    rep.ranges["B~"] = (0.0, 0.5 * n)
    return _finish(rep, f, tol)


def omega_member(A, D, m, M, tol=DEFAULT_TOL):
    """Whether ``A <= m I <= (A + D)/2 <= M I <= D``."""
    try:
        _omega_check(as_hermitian(A), as_hermitian(D), float(m), float(M), tol, "")
    except HypothesisError:
        return False
    return True


def _omega_check(a, d, m, M, tol, tag):
    if a.dim != d.dim:
        raise DimensionError("A and D must share a dimension")
    mid = 0.5 * (a + d)
    _le_scalar(a, m, f"A{tag} <= m", tol)
    _ge_scalar(mid, m, f"m <= (A{tag}+D{tag})/2", tol)
    _le_scalar(mid, M, f"(A{tag}+D{tag})/2 <= M", tol)
    _ge_scalar(d, M, f"M <= D{tag}", tol)


OMEGA_FORMS = ("mid-out", "mid-in", "lambda")


def check_omega_jensen(f, fam, pairs, m, M, form="mid-out", lam=None, tol=DEFAULT_TOL, verify=True):
    """Jensen-type refinements over pairs ``(A_i, D_i)`` in Omega.

    ``mid-out``: ``f(sum Phi_i(mid_i)) <= sum Phi_i((f(A_i) + f(D_i))/2) - delta_f X~``
    with ``X~ = 1/2 - |sum Phi_i(mid_i) - c| / w``.

    ``mid-in``: ``sum Phi_i(f(mid_i)) <= (f(sum Phi_i(A_i)) + f(sum Phi_i(D_i)))/2 - delta_f X~``
    with ``X~ = 1/2 - sum Phi_i(|mid_i - c|) / w``.

    ``lambda``: one pair, identity map, ``f(lam A + (1-lam) D) <= lam f(A) + (1-lam) f(D) - delta_f X~``
    with ``X~ = 1/2 - |(A + D)/2 - c| / w`` (no dependence on ``lam``).
    """
    m, M = _check_bounds(m, M)
    if form not in OMEGA_FORMS:
        raise ValueError(f"form must be one of {OMEGA_FORMS}, got {form!r}")
    pairs = [(as_hermitian(a), as_hermitian(d)) for a, d in pairs]
    c, w = 0.5 * (m + M), M - m
    if form == "lambda":
        if len(pairs) != 1:
            raise HypothesisError("a single pair (A, D)", f"got {len(pairs)} pairs")
        if lam is None:
            raise ValueError("the lambda form needs lam")
        fam = convexity_weights_map(lam, pairs[0][0].dim)
    elif fam is None:
        fam = MapFamily.single(identity_map(pairs[0][0].dim)) if len(pairs) == 1 else None
        if fam is None:
            raise ValueError("several pairs need a map family")
    if form != "lambda" and len(pairs) != len(fam):
        raise DimensionError(f"{len(pairs)} pairs for {len(fam)} maps")
    mats = [x for p in pairs for x in p]
    if verify:
        _check_unital(fam)
        for i, (a, d) in enumerate(pairs):
            _omega_check(a, d, m, M, tol, f"[{i}]")
        _certify(f, mats, m, M)
    dl = delta_f(f, m, M).value
    rep = InequalityReport(f"omega.{form}")
    rep.scalars.update({"delta_f": dl, "m": m, "M": M})
    mids = [0.5 * (a + d) for a, d in pairs]
    if form == "mid-out":
        pm = fam.apply_sum(mids)
        xt = 0.5 - abs_deviation(pm, c) / w
        lhs = apply_function(pm, f)
        rhs = fam.apply_sum([0.5 * (apply_function(a, f) + apply_function(d, f)) for a, d in pairs])
    elif form == "mid-in":
        xt = 0.5 - fam.apply_sum([abs_deviation(x, c) for x in mids]) / w
        lhs = fam.apply_sum([apply_function(x, f) for x in mids])
        pa = fam.apply_sum([a for a, _ in pairs])
        pd = fam.apply_sum([d for _, d in pairs])
        rhs = 0.5 * (apply_function(pa, f) + apply_function(pd, f))
    else:
        (a, d), = pairs
        rep.scalars["lambda"] = float(lam)
        xt = tilde(mids[0], m, M)
        lhs = apply_function(fam.apply_normalized([a, d]), f)
        rhs = fam.apply_normalized([apply_function(a, f), apply_function(d, f)])
    rep.matrices.update({"lhs": lhs, "middle": rhs - dl * xt, "rhs": rhs, "X~": xt})
    rep.ranges["X~"] = (0.0, 0.5)
    return _finish(rep, f, tol)


def check_omega_operator_convex(f, fam, pairs, m, M, tol=DEFAULT_TOL, verify=True):
    """Four-link chain for operator convex ``f`` over pairs in Omega.

    ``f(sum Phi(mid)) <= sum Phi(f(mid)) <= (f(sum Phi A) + f(sum Phi D))/2 - delta_f X~
    <= sum Phi((f(A) + f(D))/2) - delta_f X~ <= sum Phi((f(A) + f(D))/2)``,
    with the ``X~`` of the ``mid-in`` form.
    """
    if verify and not f.operator_convex:
        raise HypothesisError(f"{f.label()} operator {'convex' if f.is_convex else 'concave'}",
                              "not a known operator convex/concave function")
    inner = check_omega_jensen(f, fam, pairs, m, M, "mid-in", tol=tol, verify=verify)
    pairs = [(as_hermitian(a), as_hermitian(d)) for a, d in pairs]
    if fam is None:
        fam = MapFamily.single(identity_map(pairs[0][0].dim))
    d = inner.scalars["delta_f"]
    xt = inner.matrices["X~"]
    mids = [0.5 * (a + b) for a, b in pairs]
    jensen_avg = fam.apply_sum([0.5 * (apply_function(a, f) + apply_function(b, f)) for a, b in pairs])
    rep = InequalityReport("omega.opconvex")
    rep.scalars.update(inner.scalars)
    rep.matrices.update({
        "f(sum Phi(mid))": apply_function(fam.apply_sum(mids), f),
        "sum Phi(f(mid))": inner.matrices["lhs"],
        "ren.middle": inner.matrices["middle"],
        "jensen.middle": jensen_avg - d * xt,
        "jensen.rhs": jensen_avg,
        "X~": xt,
    })
    rep.ranges["X~"] = (0.0, 0.5)
    rel = _relation(f)
    names = ["f(sum Phi(mid))", "sum Phi(f(mid))", "ren.middle", "jensen.middle", "jensen.rhs"]
    for lhs, rhs in zip(names, names[1:]):
        rep.add_link(lhs, rhs, rel, tol)
    return rep


def check_superadditivity(f, C, M, tol=DEFAULT_TOL, verify=True):
    """Refined superadditivity ``sum f(C_i) <= f(sum C_i) - delta_f sum C~_i`` for ``0 <= C_i <= M <= sum C_i``.

    Needs ``f(0) <= 0`` for convex ``f`` and ``f(0) >= 0`` for concave ``f``
    (the concave statement is the convex one for ``-f``).
    """
    M = float(M)
    C = _as_list(C)
    n = len(C)
    if not M > 0:
        raise HypothesisError("M > 0", f"M={M:g}")
    total = _sum(C)
    if verify:
        for i, x in enumerate(C):
            _ge_scalar(x, 0.0, f"C[{i}] >= 0", tol)
            _le_scalar(x, M, f"C[{i}] <= M", tol)
        _ge_scalar(total, M, "M <= sum C_i", tol)
        f0 = f.evaluate_checked(0.0)
        scale = max(1.0, abs(f(M)))
        if f.sign * f0 > tol * scale:
            want = "f(0) <= 0" if f.is_convex else "f(0) >= 0"
            raise HypothesisError(want, f"f(0) = {f0:.6g}", margin=-abs(f0))
        _certify(f, C + [total], 0.0, M)
    d = delta_f(f, 0.0, M).value
    ct = _sum([tilde(x, 0.0, M) for x in C])
    rhs = apply_function(total, f)
    rep = InequalityReport("superadd")
    rep.scalars.update({"delta_f": d, "m": 0.0, "M": M, "n": float(n)})
    rep.matrices.update({"lhs": _sum([apply_function(x, f) for x in C]), "middle": rhs - d * ct,
                         "rhs": rhs, "sum C~": ct})
    if n == 2:
        rep.matrices["X~"] = 1.0 - abs_deviation(C[0] / M, 0.5) - abs_deviation(C[1] / M, 0.5)
        rep.ranges["X~"] = (0.0, 1.0)
    rep.ranges["sum C~"] = (0.0, 0.5 * n)
    return _finish(rep, f, tol)


def check_monotone_conditions(f, A, B, C, D, m, M, condition, tol=DEFAULT_TOL, verify=True):
    """``f(B) + f(C) <= f(A) + f(D) - delta_f X~`` under one of four order/monotonicity conditions.

    (i) ``B + C <= A + D`` and ``f(m) <= f(M)``, convex ``f``;
    (ii) ``A + D <= B + C`` and ``f(M) <= f(m)``, convex ``f``;
    (iii) ``B + C <= A + D`` and ``f(M) <= f(m)``, concave ``f`` (reversed);
    (iv) ``A + D <= B + C`` and ``f(m) <= f(M)``, concave ``f`` (reversed).
    """
    m, M = _check_bounds(m, M)
    if condition not in MONOTONE_CONDITIONS:
        raise ValueError(f"condition must be one of {MONOTONE_CONDITIONS}")
    A, B, C, D = (as_hermitian(x) for x in (A, B, C, D))
    if verify:
        _le_scalar(A, m, "A <= m", tol)
        for r, x in (("B", B), ("C", C)):
            _ge_scalar(x, m, f"m <= {r}", tol)
            _le_scalar(x, M, f"{r} <= M", tol)
        _ge_scalar(D, M, "M <= D", tol)
        _check_monotone_condition(f, A, B, C, D, m, M, condition, tol)
        _certify(f, [A, B, C, D], m, M)
    c, w = 0.5 * (m + M), M - m
    d = delta_f(f, m, M).value
    xt = 1.0 - (abs_deviation(B, c) + abs_deviation(C, c)) / w
    rhs = apply_function(A, f) + apply_function(D, f)
    rep = InequalityReport(f"monotone.{condition}")
    rep.scalars.update({"delta_f": d, "m": m, "M": M, "f(m)": f(m), "f(M)": f(M)})
    rep.matrices.update({"lhs": apply_function(B, f) + apply_function(C, f), "middle": rhs - d * xt,
                         "rhs": rhs, "X~": xt})
    rep.ranges["X~"] = (0.0, 1.0)
    return _finish(rep, f, tol)


def _check_monotone_condition(f, A, B, C, D, m, M, condition, tol):
    want_convex = condition in ("i", "ii")
    if f.is_convex != want_convex and not f.is_affine:
        raise HypothesisError(f"condition ({condition}) needs a {'convex' if want_convex else 'concave'} f",
                              f"{f.label()} is {f.direction}")
    order_up = condition in ("i", "iii")
    if order_up:
        _require(B + C, "<=", A + D, f"({condition}) operator half: B + C <= A + D", tol)
    else:
        _require(A + D, "<=", B + C, f"({condition}) operator half: A + D <= B + C", tol)
    fm, fM = f(m), f(M)
    scale = max(1.0, abs(fm), abs(fM))
    increasing = condition in ("i", "iv")
    ok = fm <= fM + tol * scale if increasing else fM <= fm + tol * scale
    if not ok:
        rel = "f(m) <= f(M)" if increasing else "f(M) <= f(m)"
        raise HypothesisError(f"({condition}) scalar half: {rel}", f"f(m)={fm:.6g}, f(M)={fM:.6g}",
                              margin=-abs(fM - fm))


def check_power_pairs(A, B, C, D, m, M, p, q, condition, tol=DEFAULT_TOL, verify=True):
    """``B^p + C^p <= A^q + D^q - delta_p X~ <= A^q + D^q`` for ``I <= A <= m <= B, C <= M <= D``.

    (i) ``B + C <= A + D`` and ``p >= 1``; (ii) ``A + D <= B + C`` and ``p <= 0``.
    Any ``q >= p`` is allowed.
    """
    m, M = _check_bounds(m, M)
    p, q = float(p), float(q)
    if condition not in ("i", "ii"):
        raise ValueError("condition must be 'i' or 'ii'")
    A, B, C, D = (as_hermitian(x) for x in (A, B, C, D))
    fp = ScalarFunction.power(p)
    fq = ScalarFunction.power(q)
    if verify:
        if q < p:
            raise HypothesisError("q >= p", f"p={p:g}, q={q:g}")
        if condition == "i" and p < 1:
            raise HypothesisError("(i) p >= 1", f"p={p:g}")
        if condition == "ii" and p > 0:
            raise HypothesisError("(ii) p <= 0", f"p={p:g}")
        _ge_scalar(A, 1.0, "I <= A", tol)
        _le_scalar(A, m, "A <= m", tol)
        for r, x in (("B", B), ("C", C)):
            _ge_scalar(x, m, f"m <= {r}", tol)
            _le_scalar(x, M, f"{r} <= M", tol)
        _ge_scalar(D, M, "M <= D", tol)
        if condition == "i":
            _require(B + C, "<=", A + D, "(i) B + C <= A + D", tol)
        else:
            _require(A + D, "<=", B + C, "(ii) A + D <= B + C", tol)
        _certify(fp, [A, B, C, D], m, M)
        _certify(fq, [A, D], m, M)
    c, w = 0.5 * (m + M), M - m
    dp = delta_f(fp, m, M).value
    xt = 1.0 - (abs_deviation(B, c) + abs_deviation(C, c)) / w
    rhs = apply_function(A, fq) + apply_function(D, fq)
    rep = InequalityReport(f"power-pairs.{condition}")
    rep.scalars.update({"delta_p": dp, "delta_f": dp, "m": m, "M": M, "p": p, "q": q, "sign": 1.0})
    rep.matrices.update({
        "lhs": apply_function(B, fp) + apply_function(C, fp),
        "middle": rhs - dp * xt,
        "rhs": rhs,
        "A^p+D^p-delta_p*X~": apply_function(A, fp) + apply_function(D, fp) - dp * xt,
        "X~": xt,
    })
    rep.ranges["X~"] = (0.0, 1.0)
    rep.add_link("lhs", "middle", "<=", tol)
    rep.add_link("middle", "rhs", "<=", tol)
    return rep
