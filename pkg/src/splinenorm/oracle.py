"""Floating-point brute force for the projection norm.

Nothing here uses the closed-form inverse or the A/B sequences.  The Gram
matrix comes from Gauss-Legendre quadrature of hat-function products, it is
inverted by a dense Cholesky factorization, and the Lebesgue function

    L(x) = int_0^1 |K(x, y)| dy,   K(x, y) = sum_ik a[i,k] N_i(x) N_k(y)

is evaluated exactly per subinterval: K(x, .) is affine there, so the
integral of its absolute value follows from the location of its zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import cho_factor, cho_solve

__all__ = [
    "OracleResult",
    "hat_values",
    "numeric_gram",
    "numeric_inverse",
    "lebesgue_function",
    "lebesgue_function_many",
    "oracle_norm",
    "continuous_ab",
]

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(2)


def hat_values(n: int, x) -> np.ndarray:
    """Matrix of N_i(x) for each x (rows) and i = 0..n (columns)."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    i = np.arange(n + 1)
    return np.clip(1.0 - np.abs(x[:, None] * n - i[None, :]), 0.0, None)


@lru_cache(maxsize=128)
def _gram(n: int) -> np.ndarray:
    # 2-point rule per subinterval: exact for the piecewise quadratic integrands
    a = np.arange(n) / n
    half = 0.5 / n
    pts = (a[:, None] + half * (1.0 + _GL_NODES[None, :])).ravel()
    w = np.tile(_GL_WEIGHTS * half, n)
    V = hat_values(n, pts)
    G = (V * w[:, None]).T @ V
    G.setflags(write=False)
    return G


def numeric_gram(n: int) -> np.ndarray:
    if n < 1:
        raise ValueError("n must be >= 1")
    return _gram(n).copy()


@lru_cache(maxsize=128)
def _inverse(n: int) -> tuple[np.ndarray, float]:
    G = _gram(n)
    factor = cho_factor(G, lower=True)
    inv = cho_solve(factor, np.eye(n + 1))
    inv = 0.5 * (inv + inv.T)
    defect = float(np.max(np.abs(G @ inv - np.eye(n + 1))))
    inv.setflags(write=False)
    return inv, defect


def numeric_inverse(n: int) -> np.ndarray:
    """Inverse Gram matrix by Cholesky solve against the unit vectors."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _inverse(n)[0].copy()


def _abs_affine_integrals(u: np.ndarray, w: np.ndarray, h: float) -> np.ndarray:
    """int_0^h |f| for affine f with f(0) = u, f(h) = w (elementwise)."""
    au, aw = np.abs(u), np.abs(w)
    out = 0.5 * h * (au + aw)
    cross = (u * w) < 0
    if np.any(cross):
        # zero at s = u/(u-w) of the interval; two triangles
        s = u[cross] / (u[cross] - w[cross])
        out[cross] = 0.5 * h * (au[cross] * s + aw[cross] * (1.0 - s))
    return out


def lebesgue_function_many(n: int, xs) -> np.ndarray:
    inv, _ = _inverse(n)
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    if np.any((xs < 0) | (xs > 1)):
        raise ValueError("points must lie in [0, 1]")
    # nodal values of K(x, .) at the knots, one row per x
    nodal = hat_values(n, xs) @ inv
    pieces = _abs_affine_integrals(nodal[:, :-1], nodal[:, 1:], 1.0 / n)
    return pieces.sum(axis=1)


def lebesgue_function(n: int, x: float) -> float:
    return float(lebesgue_function_many(n, [x])[0])


@dataclass
class OracleResult:
    n: int
    norm_estimate: float
    argmax_x: float
    knot_max: float
    grid_size: int
    gram_defect: float
    exact_norm: float | None = None
    deviation: float | None = None


def oracle_norm(n: int, grid: int, compare: bool = True) -> OracleResult:
    """Sup of the Lebesgue function over ``grid + 1`` uniform points plus
    all knots.  With ``compare`` the exact norm is attached for reference."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if grid < 8 * n:
        raise ValueError(f"grid must be >= 8n = {8 * n}, got {grid}")
    knots = np.arange(n + 1) / n
    xs = np.union1d(np.linspace(0.0, 1.0, grid + 1), knots)
    vals = lebesgue_function_many(n, xs)
    j = int(np.argmax(vals))
    knot_vals = lebesgue_function_many(n, knots)
    res = OracleResult(
        n=n,
        norm_estimate=float(vals[j]),
        argmax_x=float(xs[j]),
        knot_max=float(knot_vals.max()),
        grid_size=int(xs.size),
        gram_defect=_inverse(n)[1],
    )
    if compare:
        from .lebesgue import norm

        res.exact_norm = norm(n).norm_float
        res.deviation = abs(res.norm_estimate - res.exact_norm)
    return res


_ALPHA = math.acosh(2.0)


def continuous_ab(x: float) -> tuple[float, float]:
    """(A_x, B_x) for real x via cosh/sinh, with cosh(alpha) = 2."""
    return math.cosh(_ALPHA * x), math.sinh(_ALPHA * x) / math.sqrt(3.0)
