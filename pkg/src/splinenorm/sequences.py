"""The integer sequences A_k, B_k solving f[k-1] - 4 f[k] + f[k+1] = 0.

``A_k + B_k*sqrt(3) = (2 + sqrt(3))**k``.  Values are produced by the
integer recurrence

    A[k+1] = 2 A[k] + 3 B[k],   A[0] = 1
    B[k+1] =   A[k] + 2 B[k],   B[0] = 0

and memoized in an append-only prefix cache.  The ``check_*`` functions
sweep the identities these sequences satisfy and return a
:class:`~splinenorm.report.CheckReport`.  Each accepts optional ``A``/``B``
sequences in place of the cached ones, which is how corrupted data is fed
through the same checks.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numbers import LAMBDA, LAMBDA_INV, QuadInt, quad_mul
from .report import CheckReport

__all__ = [
    "SeqPair",
    "seq",
    "table",
    "check_pell",
    "check_closed_form",
    "check_growth_bounds",
    "check_downward_recurrence",
    "check_sum_identities",
    "check_addition_identities",
    "check_addition_identities_range",
    "check_ratio_monotone",
]


@dataclass(frozen=True)
class SeqPair:
    k: int
    A: int
    B: int


class _PrefixCache:
    """Append-only cache of (A_k, B_k); reads are lock-free."""

    def __init__(self):
        self._A = [1]
        self._B = [0]
        self._lock = threading.Lock()

    def extend_to(self, k: int) -> None:
        if k < len(self._A):
            return
        with self._lock:
            A, B = self._A, self._B
            a, b = A[-1], B[-1]
            for _ in range(len(A), k + 1):
                a, b = 2 * a + 3 * b, a + 2 * b
                # B first: a reader checks len(A), so A must be appended last
                B.append(b)
                A.append(a)

    def get(self, k: int) -> tuple[int, int]:
        self.extend_to(k)
        return self._A[k], self._B[k]

    def prefix(self, k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        self.extend_to(k)
        return tuple(self._A[: k + 1]), tuple(self._B[: k + 1])


_cache = _PrefixCache()


def seq(k: int) -> SeqPair:
    """Return ``(A_k, B_k)``."""
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    a, b = _cache.get(k)
    return SeqPair(k, a, b)


def table(k: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(A_0..A_k, B_0..B_k)`` as two tuples."""
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    return _cache.prefix(k)


def _resolve(K: int, A: Sequence[int] | None, B: Sequence[int] | None):
    if A is None or B is None:
        cA, cB = table(K)
        A = cA if A is None else A
        B = cB if B is None else B
    if len(A) <= K or len(B) <= K:
        raise ValueError(f"sequences must cover index {K}")
    return A, B


def check_pell(K: int, A=None, B=None) -> CheckReport:
    """A_k**2 - 3 B_k**2 == 1 for 0 <= k <= K."""
    A, B = _resolve(K, A, B)
    rep = CheckReport("pell invariant", f"0<=k<={K}")
    for k in range(K + 1):
        lhs = A[k] * A[k] - 3 * B[k] * B[k]
        rep.record(lhs == 1, "A_k^2-3B_k^2=1", {"k": k}, lhs, 1)
    return rep


def check_closed_form(K: int, A=None, B=None) -> CheckReport:
    """(2+sqrt3)**k == A_k + B_k sqrt3 and (2-sqrt3)**k == A_k - B_k sqrt3.

    Powers are accumulated by repeated multiplication in Z[sqrt3], not by
    the recurrence, so the two routes share nothing but the seed.
    """
    A, B = _resolve(K, A, B)
    rep = CheckReport("closed form lambda^k", f"0<=k<={K}")
    p = q = QuadInt(1, 0)
    for k in range(K + 1):
        rep.record(p == QuadInt(A[k], B[k]), "lambda^k=A_k+B_k*sqrt3", {"k": k}, p, (A[k], B[k]))
        rep.record(q == QuadInt(A[k], -B[k]), "lambda^-k=A_k-B_k*sqrt3", {"k": k}, q, (A[k], -B[k]))
        p = quad_mul(p, LAMBDA)
        q = quad_mul(q, LAMBDA_INV)
    return rep


def check_growth_bounds(K: int, A=None, B=None) -> CheckReport:
    """A[k+1] <= 4 A[k] for 0 <= k <= K; B[k+1] <= 4 B[k] for 1 <= k <= K.

    The B bound starts at k = 1 because B_0 = 0.
    """
    if K < 1:
        raise ValueError("K must be >= 1")
    A, B = _resolve(K + 1, A, B)
    rep = CheckReport("growth bounds", f"0<=k<={K}")
    for k in range(K + 1):
        rep.record(A[k + 1] <= 4 * A[k], "A_{k+1}<=4A_k", {"k": k}, A[k + 1], 4 * A[k])
        if k >= 1:
            rep.record(B[k + 1] <= 4 * B[k], "B_{k+1}<=4B_k", {"k": k}, B[k + 1], 4 * B[k])
    return rep


def check_downward_recurrence(K: int, A=None, B=None) -> CheckReport:
    if K < 1:
        raise ValueError("K must be >= 1")
    A, B = _resolve(K + 1, A, B)
    rep = CheckReport("downward recurrence", f"0<=k<={K}")
    for k in range(K + 1):
        ra = 2 * A[k + 1] - 3 * B[k + 1]
        rb = 2 * B[k + 1] - A[k + 1]
        rep.record(A[k] == ra, "A_k=2A_{k+1}-3B_{k+1}", {"k": k}, A[k], ra)
        rep.record(B[k] == rb, "B_k=2B_{k+1}-A_{k+1}", {"k": k}, B[k], rb)
    return rep


def check_sum_identities(K: int, A=None, B=None) -> CheckReport:
    """The four partial-sum identities, for every upper limit 0 <= m <= K."""
    if K < 0:
        raise ValueError("K must be >= 0")
    A, B = _resolve(K + 1, A, B)
    rep = CheckReport("summation identities", f"0<=m<={K}")
    sum_bb = sum_a = sum_aa = sum_b = 0
    for m in range(K + 1):
        sum_bb += B[m] + B[m + 1]
        sum_a += A[m]
        sum_aa += A[m] + A[m + 1]
        sum_b += B[m]
        a1, b1 = A[m + 1], B[m + 1]
        idx = {"m": m}
        rep.record(sum_bb == a1 - 1, "sum(B_k+B_{k+1})=A_{m+1}-1", idx, sum_bb, a1 - 1)
        rep.record(2 * sum_a == 3 * b1 - a1 + 1, "2sum(A_k)=3B_{m+1}-A_{m+1}+1", idx,
                   2 * sum_a, 3 * b1 - a1 + 1)
        rep.record(sum_aa == 3 * b1, "sum(A_k+A_{k+1})=3B_{m+1}", idx, sum_aa, 3 * b1)
        rep.record(2 * sum_b == a1 - b1 - 1, "2sum(B_k)=A_{m+1}-B_{m+1}-1", idx,
                   2 * sum_b, a1 - b1 - 1)
    return rep


def _addition_into(rep: CheckReport, n: int, A, B) -> None:
    An, Bn = A[n], B[n]
    for k in range(n + 1):
        Ak, Bk, Ar, Br = A[k], B[k], A[n - k], B[n - k]
        idx = {"n": n, "k": k}
        v = Bk * Ar + Ak * Br
        rep.record(v == Bn, "B_kA_{n-k}+A_kB_{n-k}=B_n", idx, v, Bn)
        v = Bn * Ar - Br * An
        rep.record(v == Bk, "B_nA_{n-k}-B_{n-k}A_n=B_k", idx, v, Bk)
        v = Ak * Ar + 3 * Br * Bk
        rep.record(v == An, "A_kA_{n-k}+3B_{n-k}B_k=A_n", idx, v, An)
        v = An * Ar - 3 * Bn * Br
        rep.record(v == Ak, "A_nA_{n-k}-3B_nB_{n-k}=A_k", idx, v, Ak)


def check_addition_identities(n: int, A=None, B=None) -> CheckReport:
    """The four addition identities at a single ``n``, all 0 <= k <= n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    A, B = _resolve(n, A, B)
    rep = CheckReport("addition identities", f"n={n}")
    _addition_into(rep, n, A, B)
    return rep


def check_addition_identities_range(N: int, A=None, B=None) -> CheckReport:
    """Addition identities for every 1 <= n <= N."""
    if N < 1:
        raise ValueError("N must be >= 1")
    A, B = _resolve(N, A, B)
    rep = CheckReport("addition identities", f"0<=k<=n<={N}")
    for n in range(1, N + 1):
        _addition_into(rep, n, A, B)
    return rep


def check_ratio_monotone(K: int, A=None, B=None) -> CheckReport:
    """A[k+1]/A[k] strictly increases for 0 <= k < K."""
    A, B = _resolve(K + 1, A, B)
    rep = CheckReport("ratio monotone", f"0<=k<{K}")
    for k in range(K):
        r0 = Fraction(A[k + 1], A[k])
        r1 = Fraction(A[k + 2], A[k + 1])
        rep.record(r0 < r1, "A_{k+1}/A_k<A_{k+2}/A_{k+1}", {"k": k}, r0, r1)
    return rep
