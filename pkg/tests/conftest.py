from fractions import Fraction

import pytest

ACCEPTANCE_LINES: list[str] = []


def exact_inverse(M):
    """Gauss-Jordan over Fractions; independent of any closed form."""
    m = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)]
           for i, row in enumerate(M)]
    for col in range(m):
        piv = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[m:] for row in aug]


def hat_gram_by_integration(n):
    """<N_i, N_k> by exact Simpson on each subinterval (exact for quadratics)."""
    def hat(i, x):
        return max(Fraction(0), 1 - abs(x * n - i))

    G = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    for j in range(n):
        a, b = Fraction(j, n), Fraction(j + 1, n)
        mid = (a + b) / 2
        for i in range(n + 1):
            for k in range(n + 1):
                G[i][k] += (b - a) / 6 * (hat(i, a) * hat(k, a) + 4 * hat(i, mid) * hat(k, mid)
                                          + hat(i, b) * hat(k, b))
    return G


def abs_affine_integral(u, w, h):
    """Exact integral over [0, h] of |f| where f is affine from u to w."""
    if u * w >= 0:
        return h * (abs(u) + abs(w)) / 2
    s = u / (u - w)
    return h * (abs(u) * s + abs(w) * (1 - s)) / 2


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    """Record a one-line pass/fail verdict for an acceptance criterion."""
    def record(name: str, ok: bool, detail: str = "") -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {name}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return record
