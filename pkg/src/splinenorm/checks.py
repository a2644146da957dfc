"""Run every verification sweep and collect the reports."""

from __future__ import annotations

from fractions import Fraction

from . import gram as _gram
from . import lebesgue as _leb
from . import sequences as _seq
from .report import CheckReport


def _merge(name: str, rng: str, reports) -> CheckReport:
    out = CheckReport(name, rng)
    for r in reports:
        out.checked += r.checked
        out.failures.extend(r.failures)
    return out


def run_all(max_n: int, max_k: int, A=None, B=None,
            gram_fault: tuple[int, int, Fraction] | None = None) -> list[CheckReport]:
    """All checks, sequence identities up to ``max_k`` and spline
    quantities up to ``max_n``.

    ``A``/``B`` replace the cached sequences in the sequence checks;
    ``gram_fault = (i, j, delta)`` adds ``delta`` to Gram entry (i, j) for
    every n that has such an entry.  Both exist to exercise failure paths.
    """
    if max_n < 1 or max_k < 1:
        raise ValueError("max_n and max_k must be >= 1")
    if A is not None or B is not None:
        cA, cB = _seq.table(max_k + 2)
        A = cA if A is None else A
        B = cB if B is None else B
    kw = {"A": A, "B": B}
    reports = [
        _seq.check_pell(max_k, **kw),
        _seq.check_closed_form(max_k, **kw),
        _seq.check_growth_bounds(max_k, **kw),
        _seq.check_downward_recurrence(max_k, **kw),
        _seq.check_sum_identities(max_k, **kw),
        _seq.check_addition_identities_range(max_k, **kw),
        _seq.check_ratio_monotone(max_k, **kw),
    ]

    inverse = []
    for n in range(1, max_n + 1):
        spec = _gram.GramSpec(n)
        G = None
        if gram_fault is not None:
            i, j, delta = gram_fault
            if max(i, j) <= n and abs(i - j) <= 1:
                G = _gram.gram_matrix(spec)
                G = G.replace(i, j, G.entry(i, j) + delta)
        inverse.append(_gram.check_inverse(spec, G))
    reports.append(_merge("inverse gram closed form", f"1<=n<={max_n}", inverse))
    reports.append(_merge("inverse ratio law", f"1<=n<={max_n}",
                          (_gram.check_ratio_law(_gram.GramSpec(n)) for n in range(1, max_n + 1))))
    reports.append(_merge("g vs p-weighted sum", f"1<=n<={max_n}",
                          (_leb.check_g_paths(n) for n in range(1, max_n + 1))))
    reports.append(_leb.check_phi_at_lambda())
    reports.append(_leb.check_term_bounds(max_n))
    reports.append(_leb.verify_theorems(max_n))
    reports.append(_leb.check_limit_band())
    return reports
