"""Exact Lebesgue constants of the L2 projection onto uniform linear splines.

The norm is ``max_k g_k(n)`` where g_k(n) is the Lebesgue function at the
knot k/n::

    g_k(n) = (A[n-k] S[k] + A[k] S[n-k]) / B_n,
    S[m]   = sum_{j<m} (A[j]**2 + A[j+1]**2) / (A[j] + A[j+1]).

``(A[j] + A[j+1]) * phi(A[j+1]/A[j])`` collapses to the summand of S, so
every value stays a :class:`~fractions.Fraction`.  ``S`` does not depend on
n and is cached across calls.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .gram import GramSpec, InverseGramClosedForm
from .numbers import LAMBDA, QuadInt, quad_mul
from .report import CheckReport
from .sequences import seq, table

__all__ = [
    "NormReport",
    "phi",
    "phi_float",
    "g",
    "g_via_p",
    "g_values",
    "norm",
    "dg0",
    "h",
    "verify_theorems",
    "limit_diagnostics",
    "check_limit_band",
    "check_g_paths",
    "check_term_bounds",
    "check_phi_at_lambda",
    "LAMBDA_INV_FLOAT",
]

LAMBDA_INV_FLOAT = 2.0 - 3.0 ** 0.5


def phi(t) -> Fraction:
    """(1 + t**2) / (1 + t)**2."""
    t = Fraction(t)
    if t == -1:
        raise ZeroDivisionError("phi has a pole at t = -1")
    return (1 + t * t) / ((1 + t) * (1 + t))


def phi_float(t: float) -> float:
    return (1.0 + t * t) / ((1.0 + t) * (1.0 + t))


class _PrefixSums:
    def __init__(self):
        self._S = [Fraction(0)]
        self._lock = threading.Lock()

    def upto(self, m: int) -> list[Fraction]:
        if m >= len(self._S):
            with self._lock:
                S = self._S
                A, _ = table(m)
                acc = S[-1]
                for j in range(len(S) - 1, m):
                    a0, a1 = A[j], A[j + 1]
                    acc = acc + Fraction(a0 * a0 + a1 * a1, a0 + a1)
                    S.append(acc)
        return self._S


_prefix = _PrefixSums()


def _g(n: int, k: int, A, Bn: int, S) -> Fraction:
    return (A[n - k] * S[k] + A[k] * S[n - k]) / Bn


def g(spec: GramSpec, k: int) -> Fraction:
    """Lebesgue function at knot ``k/n``, exact."""
    spec._check_index(k)
    n = spec.n
    A, B = table(n)
    return _g(n, k, A, B[n], _prefix.upto(n))


def g_via_p(spec: GramSpec, k: int) -> Fraction:
    """Same quantity from the weighted-phi sum over subintervals, using the
    closed-form inverse Gram entries directly."""
    spec._check_index(k)
    inv = InverseGramClosedForm(spec)
    half_mesh = spec.mesh / 2
    total = Fraction(0)
    for i in range(1, spec.n + 1):
        hi, lo = abs(inv(i, k)), abs(inv(i - 1, k))
        if lo == 0:
            raise ArithmeticError(f"zero inverse Gram entry at ({i - 1}, {k})")
        total += half_mesh * (hi + lo) * phi(hi / lo)
    return total


def g_values(n: int, use_symmetry: bool = True) -> list[Fraction]:
    """g_0(n) .. g_n(n).

    With ``use_symmetry`` only k <= n/2 is evaluated and mirrored; the
    mirrored half is then spot-checked against direct evaluation so the
    symmetry is never taken on faith.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    A, B = table(n)
    Bn, S = B[n], _prefix.upto(n)
    if not use_symmetry:
        return [_g(n, k, A, Bn, S) for k in range(n + 1)]
    half = [_g(n, k, A, Bn, S) for k in range(n // 2 + 1)]
    vals = half + [half[n - k] for k in range(n // 2 + 1, n + 1)]
    for k in {n, n - 1, n // 2 + 1} & set(range(n // 2 + 1, n + 1)):
        direct = _g(n, k, A, Bn, S)
        if direct != vals[k]:
            raise ArithmeticError(f"g_k(n) symmetry broken at n={n}, k={k}")
    return vals


@dataclass
class NormReport:
    n: int
    norm_exact: Fraction
    norm_float: float
    argmax_indices: tuple[int, ...]
    gap: Fraction
    per_k: list[Fraction] | None = field(default=None, repr=False)


def norm(n: int, keep_per_k: bool = False) -> NormReport:
    vals = g_values(n)
    best = max(vals)
    argmax = tuple(k for k, v in enumerate(vals) if v == best)
    return NormReport(
        n=n,
        norm_exact=best,
        # int/int true division is correctly rounded
        norm_float=best.numerator / best.denominator,
        argmax_indices=argmax,
        gap=2 - best,
        per_k=vals if keep_per_k else None,
    )


def dg0(n: int) -> Fraction:
    """g_0(n+1) - g_0(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return g(GramSpec(n + 1), 0) - g(GramSpec(n), 0)


def h(n: int, k: int) -> Fraction:
    """B_n (g_0(n) - g_k(n))."""
    spec = GramSpec(n)
    return seq(n).B * (g(spec, 0) - g(spec, k))


def verify_theorems(N: int, dominance_max_n: int | None = None) -> CheckReport:
    """Sweep 1 <= n <= N for: g_0 increasing in n; g_0 >= g_k with equality
    only at k in {0, n} (n >= 2); g_k = g_{n-k}; norm < 2; gap decreasing.

    Dominance and symmetry are evaluated on every k by direct computation
    (no symmetry shortcut), up to ``dominance_max_n`` (default ``N``).
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    dom_n = N if dominance_max_n is None else min(N, dominance_max_n)
    rep = CheckReport("theorems", f"1<=n<={N}")
    A, B = table(N + 1)
    S = _prefix.upto(N + 1)
    g0 = [None] + [_g(n, 0, A, B[n], S) for n in range(1, N + 2)]
    for n in range(1, N + 1):
        d = g0[n + 1] - g0[n]
        rep.record(d > 0, "g0(n+1)>g0(n)", {"n": n}, d, 0)
        if n <= dom_n:
            vals = [_g(n, k, A, B[n], S) for k in range(n + 1)]
            for k in range(n + 1):
                hk = B[n] * (vals[0] - vals[k])
                if k in (0, n):
                    rep.record(hk == 0, "g0(n)=gk(n) at ends", {"n": n, "k": k}, hk, 0)
                elif n >= 2:
                    rep.record(hk > 0, "g0(n)>gk(n)", {"n": n, "k": k}, hk, 0)
                rep.record(vals[k] == vals[n - k], "gk(n)=g_{n-k}(n)", {"n": n, "k": k},
                           vals[k], vals[n - k])
            best = max(vals)
            rep.record(best == vals[0], "norm=g0(n)", {"n": n}, best, vals[0])
        else:
            best = g0[n]
        rep.record(best < 2, "norm(n)<2", {"n": n}, best, 2)
        gap_now, gap_next = 2 - g0[n], 2 - g0[n + 1]
        rep.record(gap_next < gap_now, "gap(n+1)<gap(n)", {"n": n}, gap_next, gap_now)
    return rep


def limit_diagnostics(N: int) -> list[tuple[int, float, float | None]]:
    """Rows ``(n, gap(n), gap(n)/gap(n-1))`` for 1 <= n <= N, as floats.

    The gap is ``2 - norm(n)`` with norm(n) = g_0(n); the ratio of the
    first row is ``None``.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    A, B = table(N)
    S = _prefix.upto(N)
    rows = []
    prev = None
    for n in range(1, N + 1):
        gap = 2 - _g(n, 0, A, B[n], S)
        r = None if prev is None else gap / prev
        rows.append((n, float(gap), None if r is None else float(r)))
        prev = gap
    return rows


def check_limit_band(lo: int = 10, hi: int = 30, tol: float = 0.05) -> CheckReport:
    """gap(n+1)/gap(n) < 1 for all n <= hi and within ``tol`` of 1/lambda
    for lo <= n <= hi.  The band is an empirical rate, not a proven one."""
    rows = limit_diagnostics(hi + 1)
    rep = CheckReport("gap ratio band", f"{lo}<=n<={hi}")
    for n, _, r in rows[1:]:
        m = n - 1
        rep.record(r < 1, "gap(n+1)/gap(n)<1", {"n": m}, r, 1)
        if m >= lo:
            rep.record(abs(r - LAMBDA_INV_FLOAT) < tol, "ratio~1/lambda", {"n": m}, r, LAMBDA_INV_FLOAT)
    return rep


def check_g_paths(n: int) -> CheckReport:
    """g (closed form) against g_via_p (defining weighted sum), all k."""
    spec = GramSpec(n)
    rep = CheckReport("g vs p-weighted sum", f"n={n}")
    for k in range(n + 1):
        a, b = g(spec, k), g_via_p(spec, k)
        rep.record(a == b, "g_k(n)=sum p_ik phi", {"n": n, "k": k}, a, b)
    return rep


def check_term_bounds(N: int) -> CheckReport:
    """phi(A[j+1]/A[j]) < phi(A[n+1]/A[n]) for j < n <= N, and every such
    term stays below 2/3."""
    A, _ = table(N + 1)
    phis = [phi(Fraction(A[j + 1], A[j])) for j in range(N + 1)]
    rep = CheckReport("phi term bounds", f"0<=j<n<={N}")
    two_thirds = Fraction(2, 3)
    for j, p in enumerate(phis):
        rep.record(p < two_thirds, "phi(A_{j+1}/A_j)<2/3", {"j": j}, p, two_thirds)
    for n in range(1, N + 1):
        for j in range(n):
            rep.record(phis[j] < phis[n], "phi_j<phi_n", {"j": j, "n": n}, phis[j], phis[n])
    return rep


def check_phi_at_lambda() -> CheckReport:
    """phi(2 + sqrt 3) == 2/3, decided in Z[sqrt 3] as 3(1+l^2) == 2(1+l)^2."""
    one = QuadInt(1, 0)
    lhs = quad_mul(QuadInt(3, 0), one + quad_mul(LAMBDA, LAMBDA))
    s = one + LAMBDA
    rhs = quad_mul(QuadInt(2, 0), quad_mul(s, s))
    rep = CheckReport("phi(lambda)=2/3", "exact")
    rep.record(lhs == rhs, "3(1+l^2)=2(1+l)^2", {"k": 0}, lhs, rhs)
    return rep
