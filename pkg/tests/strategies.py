"""Hypothesis strategies for Hermitian matrices and bounded operators."""

import numpy as np
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from opjensen.spectral import HermitianMatrix

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False, width=64)


@st.composite
def hermitian(draw, max_dim=4, complex_=True, dim=None):
    n = dim if dim is not None else draw(st.integers(1, max_dim))
    re = draw(arrays(np.float64, (n, n), elements=finite))
    a = re + re.T
    if complex_ and draw(st.booleans()):
        im = draw(arrays(np.float64, (n, n), elements=finite))
        a = a + 1j * (im - im.T)
    return HermitianMatrix(a)


@st.composite
def hermitian_pair(draw, max_dim=4):
    x = draw(hermitian(max_dim))
    return x, draw(hermitian(dim=x.dim))


@st.composite
def psd(draw, max_dim=4, dim=None):
    n = dim if dim is not None else draw(st.integers(1, max_dim))
    g = draw(arrays(np.float64, (n, n), elements=finite))
    return HermitianMatrix(g @ g.T)


@st.composite
def spectrum_in(draw, lo, hi, max_dim=4, dim=None):
    """Hermitian matrix with spectrum in ``[lo, hi]`` (random rotation of a random diagonal)."""
    n = dim if dim is not None else draw(st.integers(1, max_dim))
    vals = draw(arrays(np.float64, n, elements=st.floats(lo, hi, allow_nan=False)))
    seed = draw(st.integers(0, 2**32 - 1))
    q, _ = np.linalg.qr(np.random.default_rng(seed).standard_normal((n, n)))
    return HermitianMatrix((q * vals) @ q.T)


seeds = st.integers(0, 2**63 - 1)


def setup_for(theorem):
    """A function, interval and params under which generated ``theorem`` instances are valid."""
    from opjensen.functions import ScalarFunction

    if theorem == "monotone.ii":
        return ScalarFunction.power(2), -2.0, -1.0, {}
    if theorem == "monotone.iii":
        return ScalarFunction.power(2, scale=-1.0), 1.0, 2.0, {}
    if theorem == "monotone.iv":
        return ScalarFunction.log(), 4.0, 5.0, {}
    if theorem == "power-pairs.ii":
        return None, 3.0, 4.0, {"p": -1.0, "q": -0.5}
    if theorem == "omega.lambda":
        return None, 1.0, 2.0, {"lam": 0.5}
    return None, 1.0, 2.0, {}
