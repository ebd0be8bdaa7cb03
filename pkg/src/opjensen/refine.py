"""The refinement primitives: midpoint defect, tilde transform, secant bound."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, HypothesisError
from .report import InequalityReport
from .spectral import DEFAULT_TOL, abs_deviation, apply_function, as_hermitian

_SIGN_TOL = 1e-9


@dataclass(frozen=True)
class DeltaF:
    """``f(m) + f(M) - 2 f((m+M)/2)`` together with the interval it was taken on."""

    value: float
    m: float
    M: float

    def __float__(self):
        return self.value


def _check_interval(f, m, M):
    if not m < M:
        raise ValueError(f"need m < M, got m={m}, M={M}")
    if not np.all(f.domain.contains([m, M])):
        raise DomainError(f"[{m:g}, {M:g}] is not inside the domain {f.domain} of {f.label()}")


def delta_f(f, m, M):
    m, M = float(m), float(M)
    _check_interval(f, m, M)
    fm, fM, fc = f(m), f(M), f(0.5 * (m + M))
    value = fm + fM - 2.0 * fc
    scale = max(1.0, abs(fm), abs(fM), abs(fc))
    # convex f has a nonnegative midpoint defect; a clear violation means
    # the convexity claim is wrong on [m, M]
    if f.sign * value < -_SIGN_TOL * scale:
        raise HypothesisError(f"{f.label()} is {f.direction} on [{m:g}, {M:g}]",
                              f"midpoint defect {value:.6g} has the wrong sign")
    return DeltaF(float(value), m, M)


def delta_f_n(f, m, M, n):
    """Midpoint defect on the dilated interval ``[n m, n M]``."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    return delta_f(f, n * float(m), n * float(M))


def tilde(a, m, M):
    """``1/2 - |A - (m+M)/2| / (M - m)``; lies in ``[0, I/2]`` when ``sigma(A)`` is in ``[m, M]``."""
    if not m < M:
        raise ValueError(f"need m < M, got m={m}, M={M}")
    a = as_hermitian(a)
    return 0.5 - abs_deviation(a, 0.5 * (m + M)) / (M - m)


def secant(f, a, m, M):
    """The chord of ``f`` over ``[m, M]`` evaluated at ``A``."""
    a = as_hermitian(a)
    fm, fM = f(float(m)), f(float(M))
    return ((M - a) * fm + (a - m) * fM) / (M - m)


def scalar_refined_convexity(f, a, b, lam):
    """Scalar refinement of convexity at weight ``lam``.

    Returns ``(lhs, rhs)`` with ``lhs = f(lam a + (1-lam) b)`` and ``rhs`` the
    convex combination of ``f(a), f(b)`` lowered by
    ``min(lam, 1-lam) * (f(a) + f(b) - 2 f((a+b)/2))``.
    """
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    f.evaluate_checked(np.array([a, b]))
    fa, fb = f(float(a)), f(float(b))
    lhs = f(lam * a + (1.0 - lam) * b)
    defect = fa + fb - 2.0 * f(0.5 * (a + b))
    rhs = lam * fa + (1.0 - lam) * fb - min(lam, 1.0 - lam) * defect
    return float(lhs), float(rhs)


def lemma1_bound(f, a, m, M, tol=DEFAULT_TOL, verify=True):
    """Refined secant bound ``f(A) <= secant(A) - delta_f * tilde(A)`` for ``sigma(A)`` in ``[m, M]``.

    Concave ``f`` reverses both links of the chain.
    """
    a = as_hermitian(a)
    m, M = float(m), float(M)
    lo, hi = float(a.eigenvalues[0]), float(a.eigenvalues[-1])
    if verify:
        slack = tol * max(1.0, a.norm, abs(m), abs(M))
        if lo < m - slack or hi > M + slack:
            raise HypothesisError("sigma(A) in [m, M]", f"spectrum [{lo:.6g}, {hi:.6g}]",
                                  margin=min(lo - m, M - hi))
        f.certify(m, M)
    d = delta_f(f, m, M)
    at = tilde(a, m, M)
    sec = secant(f, a, m, M)
    rel = "<=" if f.is_convex else ">="
    rep = InequalityReport("lemma")
    rep.scalars.update({"delta_f": d.value, "m": m, "M": M, "sign": float(f.sign)})
    rep.matrices.update({
        "f(A)": apply_function(a, f),
        "secant(A)-delta_f*A~": sec - d.value * at,
        "secant(A)": sec,
        "A~": at,
    })
    rep.ranges["A~"] = (0.0, 0.5)
    rep.add_link("f(A)", "secant(A)-delta_f*A~", rel, tol)
    rep.add_link("secant(A)-delta_f*A~", "secant(A)", rel, tol)
    return rep
