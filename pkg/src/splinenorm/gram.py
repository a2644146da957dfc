"""Hat-function basis on the uniform partition of [0, 1].

The Gram matrix of the n+1 hat functions N_0..N_n with knots i/n is
tridiagonal with exact entries (mesh d = 1/n)::

    <N_0,N_0> = <N_n,N_n> = d/3,   <N_i,N_i> = 2d/3,   <N_i,N_{i+1}> = d/6

and its inverse has the closed form

    a[i,k] = (2n / B_n) (-1)**(i+k) A[min(i,k)] A[n - max(i,k)].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .report import CheckReport
from .sequences import seq, table

__all__ = [
    "GramSpec",
    "SymmetricTridiagonalMatrix",
    "InverseGramClosedForm",
    "gram_matrix",
    "inverse_gram_entry",
    "check_inverse",
    "ratio",
    "check_ratio_law",
]


@dataclass(frozen=True)
class GramSpec:
    """Uniform partition t_i = i/n of [0, 1].

    Basis support stops at the end points; no phantom knots outside
    [0, 1] are stored.
    """

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"number of subintervals must be a positive integer, got {self.n!r}")

    @property
    def mesh(self) -> Fraction:
        return Fraction(1, self.n)

    @property
    def knots(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(i, self.n) for i in range(self.n + 1))

    @property
    def dim(self) -> int:
        return self.n + 1

    def _check_index(self, *idx: int) -> None:
        for i in idx:
            if not 0 <= i <= self.n:
                raise IndexError(f"index {i} outside 0..{self.n}")


@dataclass(frozen=True)
class SymmetricTridiagonalMatrix:
    diag: tuple[Fraction, ...]
    off: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.off) != len(self.diag) - 1:
            raise ValueError("off-diagonal must have one entry fewer than the diagonal")

    @property
    def size(self) -> int:
        return len(self.diag)

    def entry(self, i: int, k: int) -> Fraction:
        if i == k:
            return self.diag[i]
        if abs(i - k) == 1:
            return self.off[min(i, k)]
        return Fraction(0)

    def dense(self) -> list[list[Fraction]]:
        m = self.size
        return [[self.entry(i, k) for k in range(m)] for i in range(m)]

    def replace(self, i: int, k: int, value: Fraction) -> SymmetricTridiagonalMatrix:
        """Copy with entry (i, k) (and its mirror) set to ``value``."""
        if i == k:
            diag = list(self.diag)
            diag[i] = Fraction(value)
            return SymmetricTridiagonalMatrix(tuple(diag), self.off)
        if abs(i - k) == 1:
            off = list(self.off)
            off[min(i, k)] = Fraction(value)
            return SymmetricTridiagonalMatrix(self.diag, tuple(off))
        raise ValueError("only tridiagonal entries can be replaced")


def gram_matrix(spec: GramSpec) -> SymmetricTridiagonalMatrix:
    n, d = spec.n, spec.mesh
    diag = [2 * d / 3] * (n + 1)
    diag[0] = diag[n] = d / 3
    return SymmetricTridiagonalMatrix(tuple(diag), tuple([d / 6] * n))


class InverseGramClosedForm:
    """Entry accessor for the inverse Gram matrix; nothing is materialized
    unless :meth:`dense` is called."""

    def __init__(self, spec: GramSpec):
        self.spec = spec
        self._A, _ = table(spec.n)
        self._scale = Fraction(2 * spec.n, seq(spec.n).B)

    def __call__(self, i: int, k: int) -> Fraction:
        self.spec._check_index(i, k)
        n = self.spec.n
        sign = -1 if (i + k) & 1 else 1
        return sign * self._scale * (self._A[min(i, k)] * self._A[n - max(i, k)])

    def abs_numerator(self, i: int, k: int) -> int:
        """|a[i,k]| divided by the common factor 2n/B_n."""
        n = self.spec.n
        return self._A[min(i, k)] * self._A[n - max(i, k)]

    @cached_property
    def dense(self) -> list[list[Fraction]]:
        m = self.spec.dim
        return [[self(i, k) for k in range(m)] for i in range(m)]


def inverse_gram_entry(spec: GramSpec, i: int, k: int) -> Fraction:
    return InverseGramClosedForm(spec)(i, k)


def check_inverse(spec: GramSpec, gram: SymmetricTridiagonalMatrix | None = None) -> CheckReport:
    """Exact product gram @ inverse against the identity.

    Failures are reported per offending ``(row, col)`` of the product; a
    corrupted Gram entry at row ``i`` shows up in row ``i``.  The report's
    ``max_defect`` attribute holds the largest absolute deviation.
    """
    gram = gram_matrix(spec) if gram is None else gram
    inv = InverseGramClosedForm(spec)
    n = spec.n
    rep = CheckReport("inverse gram closed form", f"n={n}")
    max_defect = Fraction(0)
    for r in range(n + 1):
        cols = [c for c in (r - 1, r, r + 1) if 0 <= c <= n]
        for c in range(n + 1):
            v = sum((gram.entry(r, j) * inv(j, c) for j in cols), Fraction(0))
            want = 1 if r == c else 0
            defect = abs(v - want)
            max_defect = max(max_defect, defect)
            rep.record(defect == 0, "G*Ainv=I", {"n": n, "row": r, "col": c}, v, want)
    rep.max_defect = max_defect
    return rep


def ratio(spec: GramSpec, i: int, k: int) -> Fraction:
    """|a[i,k]| / |a[i-1,k]|, which must equal A_i/A_{i-1} for i <= k and
    A_{n-i}/A_{n-i+1} for i > k."""
    if not 1 <= i <= spec.n:
        raise IndexError(f"row index {i} outside 1..{spec.n}")
    spec._check_index(k)
    inv = InverseGramClosedForm(spec)
    value = abs(inv(i, k)) / abs(inv(i - 1, k))
    expected = _ratio_law(spec.n, i, k)
    if value != expected:
        raise ArithmeticError(f"ratio law broken at n={spec.n}, i={i}, k={k}: {value} != {expected}")
    return value


def _ratio_law(n: int, i: int, k: int) -> Fraction:
    A, _ = table(n)
    if i <= k:
        return Fraction(A[i], A[i - 1])
    return Fraction(A[n - i], A[n - i + 1])


def check_ratio_law(spec: GramSpec) -> CheckReport:
    n = spec.n
    inv = InverseGramClosedForm(spec)
    rep = CheckReport("inverse ratio law", f"n={n}")
    for k in range(n + 1):
        for i in range(1, n + 1):
            value = abs(inv(i, k)) / abs(inv(i - 1, k))
            want = _ratio_law(n, i, k)
            rep.record(value == want, "|a_ik|/|a_i-1,k|", {"n": n, "i": i, "k": k}, value, want)
    return rep
