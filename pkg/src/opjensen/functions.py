"""Scalar functions with domain and convexity metadata.

A :class:`ScalarFunction` is the ``f`` that gets lifted to Hermitian matrices
by the functional calculus.  Besides evaluating, it knows its domain, whether
it is convex or concave, and can certify that claim numerically on any
interval by checking midpoint second differences on a grid.

Descriptors round-trip through JSON and through a compact command-line
grammar (see :meth:`ScalarFunction.parse`)::

    power:4      t**4
    -power:2     -t**2
    exp          e**t
    log:1        log(t + 1)
    affine:2:1   2 t + 1
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import ConvexityError, DomainError

CONVEX = "convex"
CONCAVE = "concave"
KINDS = ("power", "exp", "log", "affine", "polynomial", "custom")

_GRID_POINTS = 101
_CERT_TOL = 1e-9


@dataclass(frozen=True)
class Interval:
    """A real interval, each end open or closed, possibly unbounded."""

    lo: float = -math.inf
    hi: float = math.inf
    lo_closed: bool = True
    hi_closed: bool = True

    def contains(self, t, tol=0.0):
        t = np.asarray(t, dtype=float)
        if self.lo_closed:
            ok_lo = t >= self.lo - tol
        else:
            ok_lo = t > self.lo
        if self.hi_closed:
            ok_hi = t <= self.hi + tol
        else:
            ok_hi = t < self.hi
        return np.logical_and(ok_lo, ok_hi)

    def clamp(self, t):
        """Pull values that sit within tolerance outside a closed end back onto it."""
        lo = self.lo if self.lo_closed else -math.inf
        hi = self.hi if self.hi_closed else math.inf
        return np.clip(t, lo, hi)

    def __str__(self):
        left = "[" if self.lo_closed and math.isfinite(self.lo) else "("
        right = "]" if self.hi_closed and math.isfinite(self.hi) else ")"
        return f"{left}{self.lo:g}, {self.hi:g}{right}"


REALS = Interval()
NONNEGATIVE = Interval(0.0, math.inf, True, False)
POSITIVE = Interval(0.0, math.inf, False, False)


def _is_int(p):
    return float(p).is_integer()


@dataclass(frozen=True, eq=False)
class ScalarFunction:
    """A real function ``t -> scale * g(t) + offset`` with convexity metadata.

    Use the constructors :meth:`power`, :meth:`exp`, :meth:`log`,
    :meth:`affine`, :meth:`polynomial` and :meth:`custom` rather than calling
    the class directly.

    Parameters
    ----------
    kind : str
        One of ``power``, ``exp``, ``log``, ``affine``, ``polynomial``, ``custom``.
    params : tuple of float
        Kind-specific parameters: ``(p,)`` for power, ``(shift,)`` for log,
        ``(a, b)`` for affine, ascending coefficients for polynomial.
    scale, offset : float
        Outer affine transform.  A negative scale flips convexity.
    direction : {"convex", "concave"}, optional
        Inferred for builtin kinds; required for polynomial and custom.
    certify_on : (float, float), optional
        Interval on which the convexity claim is verified at construction.
        Defaults to a unit-length interval at the left of the domain.
    """

    kind: str
    params: tuple = ()
    scale: float = 1.0
    offset: float = 0.0
    direction: Optional[str] = None
    domain: Optional[Interval] = None
    certify_on: Optional[tuple] = None
    fn: Optional[Callable] = field(default=None, repr=False)
    name: Optional[str] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown function kind {self.kind!r}")
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        if self.kind == "custom" and self.fn is None:
            raise ValueError("custom functions need an evaluation callable")
        dom, inferred = self._builtin_metadata()
        if self.domain is None:
            object.__setattr__(self, "domain", dom)
        direction = self.direction or inferred
        if direction is None:
            raise ValueError(f"{self.kind} functions need an explicit direction")
        if direction not in (CONVEX, CONCAVE):
            raise ValueError(f"direction must be 'convex' or 'concave', got {direction!r}")
        object.__setattr__(self, "direction", direction)
        cert = self.certify_on or self._default_certification_interval()
        object.__setattr__(self, "certify_on", (float(cert[0]), float(cert[1])))
        self.certify(*self.certify_on)

    # -- constructors ---------------------------------------------------

    @classmethod
    def power(cls, p, scale=1.0, offset=0.0, **kw):
        return cls("power", (p,), scale, offset, **kw)

    @classmethod
    def exp(cls, scale=1.0, offset=0.0, **kw):
        return cls("exp", (), scale, offset, **kw)

    @classmethod
    def log(cls, shift=0.0, scale=1.0, offset=0.0, **kw):
        return cls("log", (shift,), scale, offset, **kw)

    @classmethod
    def affine(cls, a, b=0.0, **kw):
        return cls("affine", (a, b), **kw)

    @classmethod
    def polynomial(cls, coeffs, direction, **kw):
        """Polynomial with *ascending* coefficients ``c0 + c1 t + ...``."""
        return cls("polynomial", tuple(coeffs), direction=direction, **kw)

    @classmethod
    def custom(cls, fn, direction, domain=REALS, certify_on=None, name=None):
        return cls("custom", (), direction=direction, domain=domain, certify_on=certify_on,
                   fn=fn, name=name)

    # -- metadata ---------------------------------------------------------

    def _builtin_metadata(self):
        """Return (natural domain, inferred direction) ignoring ``scale``."""
        k = self.kind
        sign_flip = self.scale < 0
        if k == "power":
            (p,) = self.params
            if _is_int(p) and p >= 0 and (p % 2 == 0 or p <= 1):
                dom = REALS
            elif p >= 0:
                dom = NONNEGATIVE
            else:
                dom = POSITIVE
            base = CONCAVE if 0 < p < 1 else CONVEX
        elif k == "exp":
            dom, base = REALS, CONVEX
        elif k == "log":
            (s,) = self.params
            dom, base = Interval(-s, math.inf, False, False), CONCAVE
        elif k == "affine":
            dom, base = REALS, CONVEX
        elif k == "polynomial":
            if len(self.params) <= 2:
                return REALS, CONVEX
            return REALS, None
        else:
            return REALS, None
        if sign_flip:
            base = CONCAVE if base == CONVEX else CONVEX
        return dom, base

    def _default_certification_interval(self):
        d = self.domain
        if math.isfinite(d.lo):
            lo = d.lo if d.lo_closed else d.lo + 0.5
            return (lo, lo + 1.0)
        if math.isfinite(d.hi):
            hi = d.hi if d.hi_closed else d.hi - 0.5
            return (hi - 1.0, hi)
        return (-1.0, 1.0)

    @property
    def is_convex(self):
        return self.direction == CONVEX

    @property
    def sign(self):
        """+1 for convex, -1 for concave: the direction every chain link points."""
        return 1 if self.direction == CONVEX else -1

    @property
    def is_affine(self):
        if self.kind == "affine":
            return True
        if self.kind == "power":
            return self.params[0] in (0.0, 1.0)
        if self.kind == "polynomial":
            return len(self.params) <= 2 or not any(self.params[2:])
        return self.scale == 0

    @property
    def operator_convex(self):
        """True when ``f`` (concave case: ``-f``) is known to be operator convex."""
        if self.is_affine:
            return True
        if self.kind == "power":
            p = self.params[0]
            return -1.0 <= p <= 2.0 and (p == 2.0 or self.domain.lo >= 0)
        if self.kind == "log":
            return True
        return False

    # -- evaluation -------------------------------------------------------

    def _base(self, t):
        k = self.kind
        if k == "power":
            return np.power(t, self.params[0])
        if k == "exp":
            return np.exp(t)
        if k == "log":
            return np.log(t + self.params[0])
        if k == "affine":
            a, b = self.params
            return a * t + b
        if k == "polynomial":
            return np.polynomial.polynomial.polyval(t, self.params)
        return np.asarray(np.vectorize(self.fn, otypes=[float])(t), dtype=float)

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        out = self.scale * self._base(t) + self.offset
        return out if out.ndim else float(out)

    def evaluate_checked(self, t, tol=1e-9):
        """Evaluate after checking (and clamping within ``tol``) the domain."""
        t = np.asarray(t, dtype=float)
        inside = self.domain.contains(t, tol)
        if not np.all(inside):
            bad = np.atleast_1d(t)[~np.atleast_1d(inside)][0]
            raise DomainError(f"{self.label()}: argument {bad:.12g} outside domain {self.domain}",
                              value=float(bad))
        return self(self.domain.clamp(t))

    def certify(self, lo, hi):
        """Check convexity (or concavity) on ``[lo, hi]`` by grid second differences.

        Uses a 101-point grid with step ``h = (hi - lo) / 100``.  Raises
        :class:`ConvexityError` if the interval leaves the domain or any
        second difference has the wrong sign beyond ``1e-9 * scale``.
        """
        lo, hi = float(lo), float(hi)
        if hi < lo:
            lo, hi = hi, lo
        if not (np.all(self.domain.contains([lo, hi]))):
            raise ConvexityError(f"{self.label()} is {self.direction} on [{lo:g}, {hi:g}]",
                                 f"interval leaves domain {self.domain}")
        if hi - lo <= 0:
            return
        grid = np.linspace(lo, hi, _GRID_POINTS)
        vals = self(grid)
        if not np.all(np.isfinite(vals)):
            raise ConvexityError(f"{self.label()} is {self.direction} on [{lo:g}, {hi:g}]",
                                 "non-finite values on the grid")
        second = vals[:-2] + vals[2:] - 2.0 * vals[1:-1]
        scale = max(1.0, float(np.max(np.abs(vals))))
        worst = float(np.min(self.sign * second))
        if worst < -_CERT_TOL * scale:
            raise ConvexityError(f"{self.label()} is {self.direction} on [{lo:g}, {hi:g}]",
                                 f"second difference of sign {-self.sign} ({worst:.3g})",
                                 margin=worst)

    # -- transforms and serialization --------------------------------------

    def negated(self):
        if self.kind == "custom":
            fn = self.fn
            return ScalarFunction.custom(lambda t: -fn(t), CONCAVE if self.is_convex else CONVEX,
                                         self.domain, self.certify_on, f"-{self.label()}")
        return ScalarFunction(self.kind, self.params, -self.scale, -self.offset,
                              direction=None if self.kind in ("power", "exp", "log", "affine")
                              else (CONCAVE if self.is_convex else CONVEX),
                              domain=self.domain, certify_on=self.certify_on)

    def label(self):
        if self.name:
            return self.name
        k = self.kind
        if k == "power":
            core = f"t^{self.params[0]:g}"
        elif k == "exp":
            core = "exp(t)"
        elif k == "log":
            s = self.params[0]
            core = f"log(t+{s:g})" if s else "log(t)"
        elif k == "affine":
            core = f"{self.params[0]:g}t+{self.params[1]:g}"
        elif k == "polynomial":
            core = "poly(" + ",".join(f"{c:g}" for c in self.params) + ")"
        else:
            core = "custom"
        if self.scale == -1.0:
            core = "-" + core
        elif self.scale != 1.0:
            core = f"{self.scale:g}*{core}"
        if self.offset:
            core += f"{self.offset:+g}"
        return core

    def to_json(self):
        if self.kind == "custom":
            raise ValueError("custom functions cannot be serialized")
        d = {"kind": self.kind}
        k = self.kind
        if k == "power":
            d["p"] = self.params[0]
        elif k == "log":
            d["shift"] = self.params[0]
        elif k == "affine":
            d["a"], d["b"] = self.params
        elif k == "polynomial":
            d["coeffs"] = list(self.params)
            d["direction"] = self.direction
        if self.scale != 1.0:
            d["scale"] = self.scale
        if self.offset:
            d["offset"] = self.offset
        return d

    @classmethod
    def from_json(cls, d):
        d = dict(d)
        kind = d.pop("kind")
        scale = float(d.pop("scale", 1.0))
        offset = float(d.pop("offset", 0.0))
        if kind == "power":
            return cls.power(d["p"], scale, offset)
        if kind == "exp":
            return cls.exp(scale, offset)
        if kind == "log":
            return cls.log(d.get("shift", 0.0), scale, offset)
        if kind == "affine":
            return cls("affine", (d.get("a", 1.0), d.get("b", 0.0)), scale, offset)
        if kind == "polynomial":
            return cls("polynomial", tuple(d["coeffs"]), scale, offset,
                       direction=d.get("direction"))
        raise ValueError(f"cannot build a function of kind {kind!r} from JSON")

    @classmethod
    def parse(cls, text):
        """Parse ``[-]kind[:param...]`` or a JSON descriptor."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_json(json.loads(text))
        scale = 1.0
        if text.startswith("-"):
            scale, text = -1.0, text[1:]
        kind, *raw = text.split(":")
        vals = [float(v) for v in raw]
        if kind == "power":
            if len(vals) != 1:
                raise ValueError("power needs one parameter, e.g. power:4")
            return cls.power(vals[0], scale)
        if kind == "exp":
            return cls.exp(scale)
        if kind == "log":
            return cls.log(vals[0] if vals else 0.0, scale)
        if kind == "affine":
            a, b = (vals + [1.0, 0.0][len(vals):])[:2]
            return cls("affine", (a, b), scale)
        if kind == "polynomial":
            raise ValueError("polynomials need a JSON descriptor with an explicit direction")
        raise ValueError(f"unknown function kind {kind!r}")

    def __eq__(self, other):
        if not isinstance(other, ScalarFunction):
            return NotImplemented
        if self.kind == "custom" or other.kind == "custom":
            return self is other
        return (self.kind, self.params, self.scale, self.offset, self.direction) == \
            (other.kind, other.params, other.scale, other.offset, other.direction)

    def __hash__(self):
        return hash((self.kind, self.params, self.scale, self.offset, self.direction))
