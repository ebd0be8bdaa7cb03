"""Hermitian matrices, functional calculus and the Loewner order.

Every operator in the package is a :class:`HermitianMatrix`: an immutable,
validated wrapper around a dense numpy array.  The eigendecomposition is
computed once on demand and reused for functional calculus, spectral bounds
and norm scaling.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .errors import DimensionError, DomainError, EigenSolverError, NotHermitianError

DEFAULT_TOL = 1e-9
HERMITIAN_TOL = 1e-12
DOMAIN_TOL = 1e-9


class HermitianMatrix:
    """A finite-dimensional self-adjoint operator.

    Parameters
    ----------
    entries : array_like, shape (n, n)
        Real or complex square array.  Must equal its conjugate transpose to
        within ``1e-12 * max(1, max|entry|)``; the stored array is the exact
        Hermitian part.
    """

    # keep numpy scalars from broadcasting into object arrays
    __array_ufunc__ = None

    def __init__(self, entries):
        a = np.array(entries, dtype=complex if np.iscomplexobj(entries) else float)
        if a.ndim == 0:
            a = a.reshape(1, 1)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise DimensionError(f"Hermitian matrix must be square and nonempty, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise NotHermitianError("matrix has non-finite entries")
        scale = max(1.0, float(np.max(np.abs(a))))
        asym = float(np.max(np.abs(a - a.conj().T)))
        if asym > HERMITIAN_TOL * scale:
            raise NotHermitianError(f"matrix is not Hermitian (max |a_ij - conj(a_ji)| = {asym:.3g})")
        self._a = self._freeze(a)

    @staticmethod
    def _freeze(a):
        a = 0.5 * (a + a.conj().T)
        if np.iscomplexobj(a) and not np.any(a.imag):
            a = np.ascontiguousarray(a.real)
        a.setflags(write=False)
        return a

    @classmethod
    def _trusted(cls, a):
        """Wrap an array that is Hermitian up to rounding, skipping validation."""
        obj = cls.__new__(cls)
        obj._a = cls._freeze(np.asarray(a))
        return obj

    @classmethod
    def identity(cls, dim):
        return cls._trusted(np.eye(dim))

    @classmethod
    def scalar(cls, c, dim):
        return cls._trusted(float(c) * np.eye(dim))

    @classmethod
    def diag(cls, values):
        return cls._trusted(np.diag(np.asarray(values, dtype=float)))

    @classmethod
    def zeros(cls, dim):
        return cls._trusted(np.zeros((dim, dim)))

    # -- basic properties ---------------------------------------------------

    @property
    def dim(self):
        return self._a.shape[0]

    @property
    def array(self):
        """Read-only view of the entries."""
        return self._a

    @cached_property
    def decomposition(self):
        return eigendecompose(self)

    @property
    def eigenvalues(self):
        return self.decomposition.eigenvalues

    @property
    def norm(self):
        """Spectral norm, taken from the cached eigendecomposition."""
        ev = self.eigenvalues
        return float(max(abs(ev[0]), abs(ev[-1])))

    @property
    def is_real(self):
        return not np.iscomplexobj(self._a)

    def trace(self):
        return float(np.trace(self._a).real)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, HermitianMatrix):
            if other.dim != self.dim:
                raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")
            return other._a
        if np.isscalar(other) and np.isreal(other):
            return float(other) * np.eye(self.dim)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return HermitianMatrix._trusted(self._a + b)

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return HermitianMatrix._trusted(self._a - b)

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return HermitianMatrix._trusted(b - self._a)

    def __neg__(self):
        return HermitianMatrix._trusted(-self._a)

    def __mul__(self, c):
        if not (np.isscalar(c) and np.isreal(c)):
            return NotImplemented
        return HermitianMatrix._trusted(float(c) * self._a)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if not (np.isscalar(c) and np.isreal(c)):
            return NotImplemented
        return HermitianMatrix._trusted(self._a / float(c))

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return self._a.shape == other._a.shape and bool(np.array_equal(self._a, other._a))

    __hash__ = None

    def allclose(self, other, atol=1e-12, rtol=0.0):
        other = other.array if isinstance(other, HermitianMatrix) else np.asarray(other)
        return self._a.shape == other.shape and bool(np.allclose(self._a, other, rtol=rtol, atol=atol))

    def __repr__(self):
        return f"HermitianMatrix({np.array2string(self._a, precision=6, suppress_small=True)})"

    # -- JSON -----------------------------------------------------------------

    def to_json(self):
        return matrix_to_json(self._a)

    @classmethod
    def from_json(cls, d):
        return cls(matrix_from_json(d))


def matrix_to_json(a):
    """Encode a (possibly rectangular) matrix as ``{"dim"|"rows","cols", "entries"}``.

    Entries are ``[re, im]`` pairs in row-major order.
    """
    a = np.asarray(a)
    rows, cols = a.shape
    flat = a.reshape(-1)
    entries = [[float(z.real), float(z.imag)] for z in flat.astype(complex)]
    if rows == cols:
        return {"dim": rows, "entries": entries}
    return {"rows": rows, "cols": cols, "entries": entries}


def matrix_from_json(d):
    if "dim" in d:
        rows = cols = int(d["dim"])
    else:
        rows, cols = int(d["rows"]), int(d["cols"])
    entries = d["entries"]
    if len(entries) != rows * cols:
        raise DimensionError(f"expected {rows * cols} entries, got {len(entries)}")
    vals = []
    for e in entries:
        if isinstance(e, (int, float)):
            vals.append(complex(e, 0.0))
        elif len(e) == 1:
            vals.append(complex(e[0], 0.0))
        else:
            vals.append(complex(e[0], e[1]))
    a = np.array(vals, dtype=complex).reshape(rows, cols)
    if not np.any(a.imag):
        a = a.real.copy()
    return a


def as_hermitian(x):
    return x if isinstance(x, HermitianMatrix) else HermitianMatrix(x)


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    """``H = U diag(eigenvalues) U*`` with eigenvalues ascending."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self, values=None):
        lam = self.eigenvalues if values is None else np.asarray(values)
        u = self.eigenvectors
        return (u * lam) @ u.conj().T


def eigendecompose(h):
    """Eigendecomposition of a Hermitian matrix, eigenvalues sorted ascending.

    Ties keep the solver's order (stable sort), so results are deterministic.
    """
    h = as_hermitian(h)
    a = h.array
    try:
        w, u = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        try:
            cond = float(np.linalg.cond(a))
        except np.linalg.LinAlgError:
            cond = float("inf")
        raise EigenSolverError(f"eigen-solver did not converge: {exc}", h.dim, cond) from exc
    order = np.argsort(w, kind="stable")
    w, u = w[order], u[:, order]
    w.setflags(write=False)
    u.setflags(write=False)
    return SpectralDecomposition(w, u)


def apply_function(h, f, domain_tol=DOMAIN_TOL):
    """Functional calculus: ``f(H) = U diag(f(lambda_i)) U*``.

    ``f`` is a :class:`~opjensen.functions.ScalarFunction` (domain-checked,
    eigenvalues within ``domain_tol`` of a closed end are clamped onto it)
    or any vectorized callable.
    """
    h = as_hermitian(h)
    dec = h.decomposition
    if hasattr(f, "evaluate_checked"):
        try:
            vals = f.evaluate_checked(dec.eigenvalues, domain_tol)
        except DomainError as exc:
            raise DomainError(f"{exc} (eigenvalue of a {h.dim}x{h.dim} operand)", exc.value) from None
    else:
        vals = np.asarray(f(dec.eigenvalues), dtype=float)
    return HermitianMatrix._trusted(dec.reconstruct(vals))


def spectral_bounds(h):
    """Return ``(lambda_min, lambda_max)``, the bounds ``m <= M`` of ``H``."""
    ev = as_hermitian(h).eigenvalues
    return float(ev[0]), float(ev[-1])


def abs_deviation(h, c):
    """``|H - cI|`` through the functional calculus; always positive semidefinite."""
    h = as_hermitian(h)
    dec = h.decomposition
    return HermitianMatrix._trusted(dec.reconstruct(np.abs(dec.eigenvalues - c)))


class Ordering(str, enum.Enum):
    EQUAL = "Equal"
    LESS_EQ = "LessEq"
    GREATER_EQ = "GreaterEq"
    INCOMPARABLE = "Incomparable"


@dataclass(frozen=True, eq=False)
class LoewnerVerdict:
    """Outcome of comparing ``X`` against ``Y`` through the spectrum of ``Y - X``.

    ``witness_vector`` is a unit vector certifying a failed relation: the
    eigenvector for ``min_eig_diff`` when ``X <= Y`` fails (GreaterEq or
    Incomparable), the one for ``max_eig_diff`` when only ``X >= Y`` fails
    (LessEq), and ``None`` for Equal.
    """

    ordering: Ordering
    min_eig_diff: float
    max_eig_diff: float
    witness_vector: Optional[np.ndarray]
    scale: float
    tol: float

    def holds(self, relation):
        """Whether ``X relation Y`` is consistent with this verdict."""
        if relation == "<=":
            return self.ordering in (Ordering.LESS_EQ, Ordering.EQUAL)
        if relation == ">=":
            return self.ordering in (Ordering.GREATER_EQ, Ordering.EQUAL)
        if relation == "==":
            return self.ordering is Ordering.EQUAL
        raise ValueError(f"unknown relation {relation!r}")

    def gap(self, relation):
        """Smallest eigenvalue of the slack in ``relation`` (negative = violated)."""
        return self.min_eig_diff if relation == "<=" else -self.max_eig_diff

    def to_json(self):
        w = self.witness_vector
        return {
            "ordering": self.ordering.value,
            "min_eig_diff": self.min_eig_diff,
            "max_eig_diff": self.max_eig_diff,
            "witness_vector": None if w is None else [[float(z.real), float(z.imag)]
                                                      for z in np.asarray(w, dtype=complex)],
            "scale": self.scale,
            "tol": self.tol,
        }

    @classmethod
    def from_json(cls, d):
        w = d.get("witness_vector")
        if w is not None:
            w = np.array([complex(re, im) for re, im in w])
            if not np.any(w.imag):
                w = w.real
        return cls(Ordering(d["ordering"]), float(d["min_eig_diff"]), float(d["max_eig_diff"]),
                   w, float(d["scale"]), float(d["tol"]))

    def __eq__(self, other):
        if not isinstance(other, LoewnerVerdict):
            return NotImplemented
        same_w = (self.witness_vector is None and other.witness_vector is None) or (
            self.witness_vector is not None and other.witness_vector is not None
            and np.array_equal(np.asarray(self.witness_vector, dtype=complex),
                               np.asarray(other.witness_vector, dtype=complex)))
        return (self.ordering, self.min_eig_diff, self.max_eig_diff, self.scale, self.tol) == \
            (other.ordering, other.min_eig_diff, other.max_eig_diff, other.scale, other.tol) and same_w


def classify(min_eig, max_eig, tol, scale):
    """Loewner classification rule shared by every verdict in the package."""
    slack = tol * scale
    lower_ok = min_eig >= -slack
    upper_ok = max_eig <= slack
    if lower_ok and upper_ok:
        return Ordering.EQUAL
    if lower_ok:
        return Ordering.LESS_EQ
    if upper_ok:
        return Ordering.GREATER_EQ
    return Ordering.INCOMPARABLE


def loewner_compare(x, y, tol=DEFAULT_TOL):
    """Compare ``X`` and ``Y`` in the Loewner order.

    The spectrum of ``D = Y - X`` is tested against ``tol * s`` with
    ``s = max(1, ||X||_2, ||Y||_2)``.

    >>> loewner_compare(HermitianMatrix.diag([1, 2]), HermitianMatrix.diag([1, 3])).ordering.value
    'LessEq'
    """
    x, y = as_hermitian(x), as_hermitian(y)
    if x.dim != y.dim:
        raise DimensionError(f"cannot compare {x.dim}x{x.dim} with {y.dim}x{y.dim}")
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    dec = (y - x).decomposition
    lo, hi = float(dec.eigenvalues[0]), float(dec.eigenvalues[-1])
    scale = max(1.0, x.norm, y.norm)
    ordering = classify(lo, hi, tol, scale)
    if ordering is Ordering.EQUAL:
        witness = None
    elif ordering is Ordering.LESS_EQ:
        witness = np.array(dec.eigenvectors[:, -1])
    else:
        witness = np.array(dec.eigenvectors[:, 0])
    return LoewnerVerdict(ordering, lo, hi, witness, scale, tol)


def compare_to_scalar(x, c, tol=DEFAULT_TOL):
    """``loewner_compare(X, c I)`` read off the cached spectrum of ``X``.

    Same rule and scale as :func:`loewner_compare`; only the decomposition
    of ``c I - X`` is replaced by the one of ``X``.
    """
    x = as_hermitian(x)
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    c = float(c)
    dec = x.decomposition
    lo, hi = c - float(dec.eigenvalues[-1]), c - float(dec.eigenvalues[0])
    scale = max(1.0, x.norm, abs(c))
    ordering = classify(lo, hi, tol, scale)
    if ordering is Ordering.EQUAL:
        witness = None
    elif ordering is Ordering.LESS_EQ:
        witness = np.array(dec.eigenvectors[:, 0])
    else:
        witness = np.array(dec.eigenvectors[:, -1])
    return LoewnerVerdict(ordering, lo, hi, witness, scale, tol)
