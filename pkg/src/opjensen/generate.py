"""Seeded random instances satisfying each inequality's hypotheses.

Balance conditions are met by construction, solving for the dependent
operator, so their residuals stay at rounding level.  When the dependent
operator misses its order bound the generator shifts ``A`` down by
``0.1 (M - m)`` and retries; every shift strictly improves the violated
bound.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace

import numpy as np

from .errors import GenerationError, HypothesisError
from .functions import ScalarFunction
from .instance import SHARED, Instance, run_instance
from .maps import MapFamily, PositiveLinearMap, scalar_weight_map
from .spectral import HermitianMatrix, apply_function, loewner_compare

SHIFT_FRACTION = 0.1


@dataclass(frozen=True)
class GenConfig:
    """Generation settings: dimension, bounds, seed and retry budget.

    ``spread`` controls how far ``A`` sits below ``m I`` (and so how far
    ``D`` sits above ``M I``); ``None`` means ``(M - m) / 2``.
    """

    dim: int = 3
    m: float = 0.0
    M: float = 1.0
    seed: int = 0
    max_retries: int = 1000
    spread: float = None

    def __post_init__(self):
        if int(self.dim) < 1:
            raise ValueError("dim must be at least 1")
        if not float(self.m) < float(self.M):
            raise ValueError(f"need m < M, got m={self.m}, M={self.M}")
        if int(self.max_retries) < 1:
            raise ValueError("max_retries must be at least 1")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        spread = 0.5 * (float(self.M) - float(self.m)) if self.spread is None else float(self.spread)
        if not spread > 0:
            raise ValueError("spread must be positive")
        object.__setattr__(self, "spread", spread)
        object.__setattr__(self, "dim", int(self.dim))
        object.__setattr__(self, "m", float(self.m))
        object.__setattr__(self, "M", float(self.M))
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def width(self):
        return self.M - self.m

    def rng(self):
        return np.random.default_rng(self.seed)

    def to_json(self):
        return asdict(self)

    @classmethod
    def from_json(cls, d):
        return cls(**{k: d[k] for k in ("dim", "m", "M", "seed", "max_retries", "spread") if k in d})


def derive_seed(master, index):
    """Per-instance seed: a spawn of ``master`` keyed by ``index`` (independent of scheduling)."""
    ss = np.random.SeedSequence(entropy=int(master), spawn_key=(int(index),))
    return int(ss.generate_state(1, np.uint64)[0])


# -- random building blocks ---------------------------------------------------

def random_psd_contraction(rng, dim, diagonal=False):
    """``u G G* / ||G G*||`` with complex Gaussian ``G`` and ``u`` uniform in ``(0, 1]``.

    The extra factor ``u`` keeps the top of the spectrum random (in dimension
    one the normalized product is always 1).  ``diagonal=True`` returns a
    diagonal matrix with uniform entries in ``[0, 1]`` instead.
    """
    if diagonal:
        return HermitianMatrix._trusted(np.diag(rng.uniform(0.0, 1.0, dim)))
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    p = g @ g.conj().T
    p *= (1.0 - rng.random()) / np.linalg.norm(p, 2)
    return HermitianMatrix(p)


def random_projector(rng, dim, diagonal=False):
    """Orthogonal projector of uniformly random rank ``0..dim``."""
    rank = int(rng.integers(0, dim + 1))
    if diagonal:
        return HermitianMatrix._trusted(np.diag(rng.permutation(np.r_[np.ones(rank), np.zeros(dim - rank)])))
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, _ = np.linalg.qr(g)
    v = q[:, :rank]
    return HermitianMatrix(v @ v.conj().T)


def random_unitary(rng, dim):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_between(rng, dim, m, M, diagonal=False):
    return m + (M - m) * random_psd_contraction(rng, dim, diagonal)


def random_below(rng, dim, m, spread, diagonal=False):
    return m - spread * random_psd_contraction(rng, dim, diagonal)


def random_family(rng, n, dim_in, dim_out, normalization=1.0, kraus=2, diagonal=False):
    """``n`` Kraus maps with ``sum_i Phi_i(I) = normalization * I``.

    The Kraus blocks of all maps are the column blocks of a matrix with
    orthonormal rows, scaled by ``sqrt(normalization)``.  ``diagonal=True``
    gives scalar weight maps (Dirichlet weights), which keep diagonal
    inputs diagonal and need ``dim_in == dim_out``.
    """
    if diagonal:
        if dim_in != dim_out:
            raise ValueError("diagonal families need dim_in == dim_out")
        w = rng.dirichlet(np.ones(n))
        return MapFamily([scalar_weight_map(normalization * wi, dim_in) for wi in w], normalization)
    cols = n * kraus * dim_in
    if cols < dim_out:
        kraus = math.ceil(dim_out / (n * dim_in))
        cols = n * kraus * dim_in
    g = rng.standard_normal((cols, dim_out)) + 1j * rng.standard_normal((cols, dim_out))
    q, _ = np.linalg.qr(g)
    w = math.sqrt(normalization) * q.conj().T
    blocks = w.reshape(dim_out, n, kraus, dim_in).transpose(1, 2, 0, 3)
    return MapFamily([PositiveLinearMap(list(b)) for b in blocks], normalization)


def _isometry(rng, dim_small, dim_big):
    g = rng.standard_normal((dim_big, dim_small)) + 1j * rng.standard_normal((dim_big, dim_small))
    q, _ = np.linalg.qr(g)
    return q[:, :dim_small]


def _min_eig(x):
    return float(x.eigenvalues[0])


def _solve_d(cfg, b, c, a, budget, what):
    """``D = B + C - A`` with ``A`` shifted down until ``D >= M``; returns ``(A, D, budget)``."""
    eps = SHIFT_FRACTION * cfg.width
    d = b + c - a
    while _min_eig(d) < cfg.M:
        if budget <= 0:
            raise GenerationError(f"retry budget exhausted building {what}", margin=_min_eig(d) - cfg.M)
        a = a - eps
        d = d + eps
        budget -= 1
    return a, d, budget


# -- sandwich (four-role) instances ---------------------------------------------

BALANCES = ("per-index", "summed", "map-level")


def gen_sandwich(cfg, n=1, balance="map-level", function=None, theorem=None, diagonal=False,
                 tight=False, check=True):
    """Operators with ``A_i <= m <= B_i, C_i <= M <= D_i`` and one of three balance conditions.

    per-index
        ``A_i + D_i = B_i + C_i`` and a random unital family ``"phi"``.
    summed
        the sums balance while individual indices need not: a positive
        transfer moves between the ``D_i``.
    map-level
        four random families with their own normalizations and
        ``avg(A) + avg(D) = avg(C) + avg(B)``.

    ``tight=True`` builds the equality configuration ``A = m``, ``D = M``,
    ``B = m + (M - m) P``, ``C = m + (M - m)(I - P)`` for a projector ``P``,
    with scalar weight maps.
    """
    if balance not in BALANCES:
        raise ValueError(f"balance must be one of {BALANCES}")
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = cfg.rng()
    f = function or ScalarFunction.power(2)
    dim, m, M, w = cfg.dim, cfg.m, cfg.M, cfg.width
    budget = cfg.max_retries
    theorem = theorem or {"per-index": "cor25.1", "summed": "cor27", "map-level": "main.X1"}[balance]

    if tight:
        p = random_projector(rng, dim, diagonal)
        eye = HermitianMatrix.identity(dim)
        ops = {"A": [m * eye] * n, "B": [m + w * p] * n, "C": [m + w * (eye - p)] * n, "D": [M * eye] * n}
        fam = random_family(rng, n, dim, dim, 1.0, diagonal=True)
        families = {SHARED: fam} if balance != "summed" else {}
        return _checked(Instance(theorem, m, M, f, ops, families), check=check)

    if balance in ("per-index", "summed"):
        ops = {r: [] for r in "ABCD"}
        for i in range(n):
            b = random_between(rng, dim, m, M, diagonal)
            c = random_between(rng, dim, m, M, diagonal)
            a = random_below(rng, dim, m, cfg.spread, diagonal)
            a, d, budget = _solve_d(cfg, b, c, a, budget, f"D[{i}]")
            for r, x in zip("ABCD", (a, b, c, d)):
                ops[r].append(x)
        families = {}
        if balance == "per-index":
            dim_out = dim if diagonal else int(rng.integers(1, dim + 1))
            families[SHARED] = random_family(rng, n, dim, dim_out, 1.0, diagonal=diagonal)
        elif n > 1:
            # move a positive part from one D to another; sums stay balanced
            i, j = rng.choice(n, size=2, replace=False)
            room = _min_eig(ops["D"][j]) - M
            if room > 0:
                e = rng.uniform(0.0, room) * random_psd_contraction(rng, dim, diagonal)
                ops["D"][i] = ops["D"][i] + e
                ops["D"][j] = ops["D"][j] - e
        return _checked(Instance(theorem, m, M, f, ops, families), check=check)

    # map-level: random families A, B, C, then solve for the D side
    families, ops = {}, {}
    for r in "ABC":
        k = int(rng.integers(1, n + 1)) if n > 1 else 1
        d_in = dim if diagonal else dim + int(rng.integers(0, 2))
        alpha = float(rng.uniform(0.5, 2.0))
        families[r] = random_family(rng, k, d_in, dim, alpha, diagonal=diagonal)
        if r == "A":
            ops[r] = [random_below(rng, d_in, m, cfg.spread, diagonal) for _ in range(k)]
        else:
            ops[r] = [random_between(rng, d_in, m, M, diagonal) for _ in range(k)]
    avg = {r: families[r].apply_normalized(ops[r]) for r in "ABC"}
    eps = SHIFT_FRACTION * w
    rhs = avg["B"] + avg["C"] - avg["A"]
    while _min_eig(rhs) < M:
        if budget <= 0:
            raise GenerationError("retry budget exhausted solving the D side", margin=_min_eig(rhs) - M)
        ops["A"] = [a - eps for a in ops["A"]]
        rhs = rhs + eps
        budget -= 1

    k = int(rng.integers(1, n + 1)) if n > 1 else 1
    delta = float(rng.uniform(0.5, 2.0))
    weights = rng.dirichlet(np.ones(k))
    if diagonal:
        families["D"] = MapFamily([scalar_weight_map(delta * wi, dim) for wi in weights], delta)
        ops["D"] = [rhs] * k
    else:
        d_in = dim + int(rng.integers(0, 2))
        maps, ds = [], []
        for wi in weights:
            v = _isometry(rng, dim, d_in)
            maps.append(PositiveLinearMap([math.sqrt(delta * wi) * v.conj().T]))
            top = M + cfg.spread * float(rng.random())
            ds.append(HermitianMatrix(v @ rhs.array @ v.conj().T + top * (np.eye(d_in) - v @ v.conj().T)))
        families["D"] = MapFamily(maps, delta)
        ops["D"] = ds
    return _checked(Instance(theorem, m, M, f, ops, families), check=check)


def _checked(inst, params=None, check=True):
    """Run the target checker's hypothesis verification; generation never returns garbage.

    ``check=False`` skips it for callers that run the checker themselves.
    """
    if params:
        inst.params.update(params)
    if not check:
        return inst
    try:
        run_instance(inst)
    except HypothesisError as exc:
        raise GenerationError(f"generated instance violates a hypothesis: {exc}") from exc
    return inst


# -- Omega pairs ---------------------------------------------------------------

def gen_omega_pair(cfg, rng=None, diagonal=False, tight=False):
    """One pair ``(A, D)`` with ``A <= m <= (A + D)/2 <= M <= D``."""
    rng = rng or cfg.rng()
    dim, m, M, w = cfg.dim, cfg.m, cfg.M, cfg.width
    if tight:
        return HermitianMatrix.scalar(m, dim), HermitianMatrix.scalar(M, dim)
    mid = random_between(rng, dim, m, M, diagonal)
    a = random_below(rng, dim, m, cfg.spread, diagonal)
    eps = SHIFT_FRACTION * w
    d = 2.0 * mid - a
    budget = cfg.max_retries
    while _min_eig(d) < M:
        if budget <= 0:
            raise GenerationError("retry budget exhausted building an Omega pair", margin=_min_eig(d) - M)
        a, d = a - eps, d + eps
        budget -= 1
    return a, d


def gen_omega(cfg, n=1, form="mid-out", function=None, lam=None, diagonal=False, tight=False, check=True):
    rng = cfg.rng()
    f = function or ScalarFunction.power(2)
    n = 1 if form == "lambda" else int(n)
    pairs = [gen_omega_pair(cfg, rng, diagonal, tight) for _ in range(n)]
    ops = {"A": [a for a, _ in pairs], "D": [d for _, d in pairs]}
    params = {}
    families = {}
    if form == "lambda":
        params["lam"] = float(rng.random()) if lam is None else float(lam)
    else:
        dim_out = cfg.dim if (diagonal or tight) else int(rng.integers(1, cfg.dim + 1))
        families[SHARED] = random_family(rng, n, cfg.dim, dim_out, 1.0, diagonal=diagonal or tight)
    return _checked(Instance(f"omega.{form}", cfg.m, cfg.M, f, ops, families), params, check)


# -- superadditivity, Petrovic, Jensen-Mercer -------------------------------------

def gen_superadditive(cfg, n=2, diagonal=False, tight=False):
    """``C_1..C_n`` with ``0 <= C_i <= M`` and ``M <= sum C_i``.

    Each ``C_i = M (a_i I + b_i Q_i)`` with ``a_i`` in ``[1/n, 1)``,
    ``0 <= b_i <= 1 - a_i`` and ``Q_i`` a positive contraction, so the
    bounds hold by construction.  ``n = 1`` gives ``C_1 = M I``.
    """
    rng = cfg.rng()
    n = int(n)
    dim, M = cfg.dim, cfg.M
    if M <= 0:
        raise ValueError("superadditivity needs M > 0")
    if n == 1:
        return [HermitianMatrix.scalar(M, dim)]
    if tight:
        p = random_projector(rng, dim, diagonal)
        return [M * p, M * (HermitianMatrix.identity(dim) - p)] + [HermitianMatrix.zeros(dim)] * (n - 2)
    out = []
    for _ in range(n):
        a = float(rng.uniform(1.0 / n, 1.0))
        b = float(rng.uniform(0.0, 1.0 - a))
        out.append(M * (a + b * random_psd_contraction(rng, dim, diagonal)))
    return out


def gen_petrovic(cfg, n=2, diagonal=False, tight=False):
    """``B_1..B_n >= 0`` with ``sum B_i = M I``: ``B_i = M S^{-1/2} P_i S^{-1/2}``, ``S = sum P_i``."""
    rng = cfg.rng()
    dim, M = cfg.dim, cfg.M
    if tight:
        p = random_projector(rng, dim, diagonal)
        return [M * p, M * (HermitianMatrix.identity(dim) - p)] + [HermitianMatrix.zeros(dim)] * (n - 2)
    ps = [random_psd_contraction(rng, dim, diagonal) + 1e-3 for _ in range(n)]
    s = ps[0]
    for x in ps[1:]:
        s = s + x
    vals, vecs = np.linalg.eigh(s.array)
    root = (vecs / np.sqrt(vals)) @ vecs.conj().T
    bs = [HermitianMatrix(M * root @ x.array @ root) for x in ps[:-1]]
    rest = M - bs[0] if len(bs) == 1 else M - sum(bs[1:], bs[0])
    return bs + [rest]


# -- two-sided order conditions ------------------------------------------------------

def gen_monotone(cfg, condition, function=None, diagonal=False, tight=False, lower=None):
    """Single operators ``A <= m <= B, C <= M <= D`` with the order half of ``condition``.

    (i)/(iii): ``D = B + C - A + s I + E`` with ``E >= 0``, so ``B + C <= A + D``.
    (ii)/(iv): ``A <= B + C - M`` and ``D = M + t (B + C - A - M)``, so ``A + D <= B + C``.
    ``lower`` is a floor kept by ``A`` (for instance 1 for power pairs).
    """
    rng = cfg.rng()
    dim, m, M, w = cfg.dim, cfg.m, cfg.M, cfg.width
    eye = HermitianMatrix.identity(dim)
    if tight:
        p = random_projector(rng, dim, diagonal)
        return m * eye, m + w * p, m + w * (eye - p), M * eye
    b = random_between(rng, dim, m, M, diagonal)
    c = random_between(rng, dim, m, M, diagonal)
    if condition in ("i", "iii"):
        a = _below_with_floor(rng, dim, m, cfg.spread, lower, diagonal)
        base = b + c - a
        e = cfg.spread * float(rng.random()) * random_psd_contraction(rng, dim, diagonal)
        s = max(0.0, M - _min_eig(base + e)) + cfg.spread * float(rng.random()) ** 2
        d = base + e + s
        return a, b, c, d
    top = min(m, _min_eig(b + c) - M)
    if lower is not None and top < lower:
        raise GenerationError(f"no room for A between {lower:g} and {top:g}", margin=top - lower)
    a = _below_with_floor(rng, dim, top, cfg.spread, lower, diagonal)
    t = float(rng.random())
    d = M + t * (b + c - a - M)
    return a, b, c, d


def _below_with_floor(rng, dim, top, spread, lower, diagonal):
    if lower is None:
        return random_below(rng, dim, top, spread, diagonal)
    depth = min(spread, top - lower)
    return top - depth * random_psd_contraction(rng, dim, diagonal)


def gen_instance(theorem, cfg, function=None, n=None, diagonal=False, tight=False, params=None, check=True):
    """Instance for any checker id, built by the matching generator.

    With ``check=True`` the instance is passed through its checker's
    hypothesis verification before it is returned.
    """
    from .instance import canonical_theorem

    params = dict(params or {})
    thm = canonical_theorem(theorem, params)
    f = function or ScalarFunction.power(2)
    rng = np.random.default_rng([cfg.seed, 1])
    if n is None:
        n = int(rng.integers(1, 4))
    dim, m, M = cfg.dim, cfg.m, cfg.M

    if thm.startswith("main.") or thm == "cor24" or thm.startswith("cor25.") or thm == "cor27":
        if thm == "cor24":
            inst = gen_sandwich(cfg, 1, "per-index", f, "cor24", diagonal, tight, check)
        elif thm.startswith("cor25."):
            inst = gen_sandwich(cfg, n, "per-index", f, thm, diagonal, tight, check)
        elif thm == "cor27":
            inst = gen_sandwich(cfg, n, "summed", f, thm, diagonal, tight, check)
        else:
            if thm == "main.modes":
                raise ValueError("generate a main instance by variant, not by explicit modes")
            inst = gen_sandwich(cfg, n, "map-level", f, thm, diagonal, tight, check)
        return inst
    if thm == "jm":
        if tight:
            p = random_projector(rng, dim, diagonal)
            bs = [m + (M - m) * p] * n
        else:
            bs = [random_between(rng, dim, m, M, diagonal) for _ in range(n)]
        dim_out = dim if (diagonal or tight) else int(rng.integers(1, dim + 1))
        fam = random_family(rng, n, dim, dim_out, 1.0, diagonal=diagonal or tight)
        return _checked(Instance(thm, m, M, f, {"B": bs}, {SHARED: fam}), check=check)
    if thm == "petrovic":
        bs = gen_petrovic(cfg, max(n, 2), diagonal, tight)
        return _checked(Instance(thm, 0.0, M, f, {"B": bs}), check=check)
    if thm.startswith("omega."):
        form = thm.split(".", 1)[1]
        if form == "opconvex":
            inst = gen_omega(cfg, n, "mid-in", f, diagonal=diagonal, tight=tight, check=False)
            inst.theorem = thm
            return _checked(inst, check=check)
        return gen_omega(cfg, n, form, f, params.get("lam"), diagonal, tight, check)
    if thm == "superadd":
        cs = gen_superadditive(cfg, max(n, 2), diagonal, tight)
        return _checked(Instance(thm, 0.0, M, f, {"C": cs}), check=check)
    if thm.startswith("monotone."):
        cond = thm.split(".", 1)[1]
        a, b, c, d = gen_monotone(cfg, cond, f, diagonal, tight)
        return _checked(Instance(thm, m, M, f, {"A": [a], "B": [b], "C": [c], "D": [d]}), check=check)
    if thm.startswith("power-pairs."):
        cond = thm.split(".", 1)[1]
        p = float(params.get("p", f.params[0] if f.kind == "power" else 2.0))
        q = float(params.get("q", p))
        a, b, c, d = gen_monotone(cfg, "i" if cond == "i" else "ii", None, diagonal, tight, lower=1.0)
        fp = ScalarFunction.power(p)
        ops = {"A": [a], "B": [b], "C": [c], "D": [d]}
        return _checked(Instance(thm, m, M, fp, ops, {}, {"p": p, "q": q}), check=check)
    if thm == "lemma":
        a = random_between(rng, dim, m, M, diagonal)
        return _checked(Instance(thm, m, M, f, {"A": [a]}), check=check)
    raise ValueError(f"no generator for {thm!r}")


# -- hypothesis mutations ------------------------------------------------------------

def gen_mutant(theorem, cfg, function=None, eps_fraction=0.05, diagonal=False):
    """A near-equality instance with one hypothesis broken by ``eps = eps_fraction (M - m)``.

    Starting from the tight configuration of :func:`gen_instance`:

    * four-role and Omega inequalities: ``A += eps``, ``D -= eps`` (so
      ``A <= m`` and ``M <= D`` fail while every balance still holds);
    * Jensen-Mercer: each ``B_i`` has spectrum in ``{m, M}``, which moves out
      to ``{m - eps, M + eps}``;
    * Petrovic: one of ``B_1, B_2`` gets eigenvalue ``-eps`` and the other
      absorbs it, so only positivity fails;
    * superadditivity: ``C_i *= 1 - eps / M``, so only ``M <= sum C_i`` fails.

    Returns the instance; its hypotheses are *not* satisfied, so run it with
    ``verify=False``.
    """
    from .instance import canonical_theorem

    thm = canonical_theorem(theorem)
    eps = eps_fraction * cfg.width
    inst = gen_instance(thm, cfg, function, diagonal=diagonal, tight=True, check=False)
    ops = inst.operators
    if thm == "jm":
        m, M = inst.m, inst.M
        # the spectrum sits on {m, M}: push the m part below m and the M part above M
        ops["B"] = [b + eps * (2.0 * (b - m) / (M - m) - 1.0) for b in ops["B"]]
    elif thm == "petrovic":
        # B_1 = M P and B_2 = M (I - P); lower whichever has a kernel
        i, j = (0, 1) if ops["B"][0].trace() < ops["B"][0].dim * inst.M - 0.5 * inst.M else (1, 0)
        kernel = HermitianMatrix.identity(ops["B"][i].dim) - ops["B"][i] / inst.M
        ops["B"][i] = ops["B"][i] - eps * kernel
        ops["B"][j] = ops["B"][j] + eps * kernel
    elif thm == "superadd":
        ops["C"] = [x * (1.0 - eps / inst.M) for x in ops["C"]]
    elif thm == "lemma":
        ops["A"] = [a + (inst.M - inst.m + eps) for a in ops["A"]]
    else:
        ops["A"] = [a + eps for a in ops["A"]]
        ops["D"] = [d - eps for d in ops["D"]]
    return inst


# -- incomparability witnesses ---------------------------------------------------------

def find_incomparable(f, phi, budget=10, seed=0, samples=None, scale=5.0, tol=1e-9):
    """Random search for ``X >= 0`` with ``f(Phi(X))`` and ``Phi(f(X))`` incomparable.

    Draws up to ``samples`` (default ``50 * budget``) positive matrices
    ``scale * G G* / ||G G*||`` and returns up to ``budget`` witnesses, each a
    dict with ``X``, both sides and the :class:`LoewnerVerdict` of
    ``f(Phi(X))`` against ``Phi(f(X))``.  An empty list is a valid outcome.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = np.random.default_rng(seed)
    samples = 50 * budget if samples is None else int(samples)
    found = []
    for _ in range(samples):
        x = scale * random_psd_contraction(rng, phi.dim_in)
        left = apply_function(phi(x), f)
        right = phi(apply_function(x, f))
        verdict = loewner_compare(left, right, tol)
        if verdict.ordering.value == "Incomparable":
            found.append({"X": x, "f(Phi(X))": left, "Phi(f(X))": right, "verdict": verdict})
            if len(found) >= budget:
                break
    return found


def with_seed(cfg, seed):
    return replace(cfg, seed=int(seed))
