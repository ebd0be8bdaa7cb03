"""Positive linear maps in Kraus form and normalized families of them."""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionError, NormalizationError
from .spectral import HermitianMatrix, as_hermitian, matrix_from_json, matrix_to_json

NORMALIZATION_TOL = 1e-9


class PositiveLinearMap:
    """``Phi(X) = sum_k K_k X K_k*`` with ``K_k`` of shape ``(dim_out, dim_in)``.

    Positivity is structural: a Kraus-form map sends Hermitian operators to
    Hermitian operators and positive semidefinite ones to positive
    semidefinite ones.
    """

    def __init__(self, kraus_ops):
        ops = [np.array(k, dtype=complex if np.iscomplexobj(k) else float) for k in kraus_ops]
        if not ops:
            raise ValueError("a Kraus map needs at least one operator")
        if any(k.ndim != 2 for k in ops):
            raise DimensionError("Kraus operators must be matrices")
        shape = ops[0].shape
        if any(k.shape != shape for k in ops):
            raise DimensionError("Kraus operators must share one shape")
        stack = np.stack(ops)
        if np.iscomplexobj(stack) and not np.any(stack.imag):
            stack = stack.real.copy()
        stack.setflags(write=False)
        self._k = stack

    @property
    def kraus_ops(self):
        return list(self._k)

    @property
    def dim_out(self):
        return self._k.shape[1]

    @property
    def dim_in(self):
        return self._k.shape[2]

    def __call__(self, x):
        return apply_map(self, x)

    def unit_image(self):
        """``Phi(I)`` as a raw array."""
        k = self._k
        return np.matmul(k, k.conj().transpose(0, 2, 1)).sum(axis=0)

    def to_json(self):
        return {"dim_in": self.dim_in, "dim_out": self.dim_out,
                "kraus": [matrix_to_json(k) for k in self._k]}

    @classmethod
    def from_json(cls, d):
        phi = cls([matrix_from_json(k) for k in d["kraus"]])
        if (phi.dim_in, phi.dim_out) != (int(d.get("dim_in", phi.dim_in)), int(d.get("dim_out", phi.dim_out))):
            raise DimensionError("declared map dimensions disagree with the Kraus operators")
        return phi

    def __eq__(self, other):
        if not isinstance(other, PositiveLinearMap):
            return NotImplemented
        return self._k.shape == other._k.shape and bool(np.array_equal(self._k, other._k))

    __hash__ = None

    def __repr__(self):
        return f"PositiveLinearMap(dim_in={self.dim_in}, dim_out={self.dim_out}, kraus={len(self._k)})"


def apply_map(phi, x):
    x = as_hermitian(x)
    if x.dim != phi.dim_in:
        raise DimensionError(f"map expects {phi.dim_in}x{phi.dim_in} input, got {x.dim}x{x.dim}")
    k = phi._k
    out = np.matmul(k @ x.array, k.conj().transpose(0, 2, 1)).sum(axis=0)
    return HermitianMatrix._trusted(out)


def identity_map(dim):
    return PositiveLinearMap([np.eye(dim)])


def compression_map(dim_in, rows):
    """Map ``X`` to its principal submatrix on ``rows`` (in the given order)."""
    rows = [int(r) for r in rows]
    if len(set(rows)) != len(rows):
        raise ValueError(f"duplicate row index in {rows}")
    if not rows:
        raise ValueError("compression needs at least one row")
    if any(r < 0 or r >= dim_in for r in rows):
        raise ValueError(f"row index out of range [0, {dim_in}) in {rows}")
    v = np.zeros((len(rows), dim_in))
    v[np.arange(len(rows)), rows] = 1.0
    return PositiveLinearMap([v])


def scalar_weight_map(weight, dim):
    """``X -> weight * X`` (a single Kraus operator ``sqrt(weight) I``)."""
    if weight < 0:
        raise ValueError("weights must be nonnegative")
    return PositiveLinearMap([math.sqrt(weight) * np.eye(dim)])


class MapFamily:
    """Maps ``Phi_1..Phi_n`` with ``sum_i Phi_i(I) = normalization * I``.

    The normalization constant is given, not inferred; construction checks
    it to relative tolerance ``1e-9`` and raises
    :class:`~opjensen.errors.NormalizationError` otherwise.
    """

    def __init__(self, maps, normalization=1.0):
        maps = list(maps)
        if not maps:
            raise ValueError("a map family needs at least one map")
        d_in, d_out = maps[0].dim_in, maps[0].dim_out
        if any((p.dim_in, p.dim_out) != (d_in, d_out) for p in maps):
            raise DimensionError("all maps in a family must share dim_in and dim_out")
        alpha = float(normalization)
        if not alpha > 0:
            raise NormalizationError(f"normalization must be positive, got {alpha}")
        total = sum(p.unit_image() for p in maps)
        resid = float(np.linalg.norm(total - alpha * np.eye(d_out), 2))
        if resid > NORMALIZATION_TOL * alpha:
            raise NormalizationError(
                f"sum_i Phi_i(I) differs from {alpha:g} I by {resid:.3g} in spectral norm")
        self.maps = tuple(maps)
        self.normalization = alpha

    @classmethod
    def single(cls, phi):
        """Singleton family; the normalization is read off ``Phi(I)``."""
        img = phi.unit_image()
        return cls([phi], float(np.real(np.trace(img))) / phi.dim_out)

    @classmethod
    def identities(cls, n, dim):
        """``n`` identity maps, normalization ``n`` (so the normalized sum is a plain mean)."""
        return cls([identity_map(dim)] * n, float(n))

    @property
    def dim_in(self):
        return self.maps[0].dim_in

    @property
    def dim_out(self):
        return self.maps[0].dim_out

    @property
    def unital(self):
        return abs(self.normalization - 1.0) <= NORMALIZATION_TOL

    def __len__(self):
        return len(self.maps)

    def apply_normalized(self, xs):
        return family_apply_normalized(self, xs)

    def apply_sum(self, xs):
        """``sum_i Phi_i(X_i)`` without dividing by the normalization."""
        xs = list(xs)
        if len(xs) != len(self.maps):
            raise DimensionError(f"family has {len(self.maps)} maps but got {len(xs)} operators")
        out = apply_map(self.maps[0], xs[0])
        for phi, x in zip(self.maps[1:], xs[1:]):
            out = out + apply_map(phi, x)
        return out

    def to_json(self):
        return {"maps": [p.to_json() for p in self.maps], "normalization": self.normalization}

    @classmethod
    def from_json(cls, d):
        return cls([PositiveLinearMap.from_json(m) for m in d["maps"]], d["normalization"])

    def __eq__(self, other):
        if not isinstance(other, MapFamily):
            return NotImplemented
        return self.normalization == other.normalization and self.maps == other.maps

    __hash__ = None

    def __repr__(self):
        return f"MapFamily(n={len(self.maps)}, normalization={self.normalization:g})"


def family_apply_normalized(fam, xs):
    """``(1 / alpha) * sum_i Phi_i(X_i)``."""
    return fam.apply_sum(xs) / fam.normalization


def convexity_weights_map(lam, dim):
    """Two-member unital family whose normalized action is ``lam*A + (1-lam)*D``."""
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise ValueError(f"lambda must lie in [0, 1], got {lam}")
    return MapFamily([scalar_weight_map(lam, dim), scalar_weight_map(1.0 - lam, dim)], 1.0)
