"""Exact Gaussian elimination over Q and Q(zeta_n).

Pivots are always chosen as the first nonzero entry in column order, so
results are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .scalar import Scalar, as_scalar, scalar_inverse


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[as_scalar(v) for v in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = scalar_inverse(m[r][c])
        m[r] = [as_scalar(v * inv) for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [as_scalar(a - f * b) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(rows)[1])


def solve(columns: Sequence[Sequence[Scalar]], target: Sequence[Scalar]) -> Optional[list[Scalar]]:
    """Solve ``sum_j lam_j * columns[j] == target``; free variables are set to 0.

    Returns ``None`` when the system is inconsistent.
    """
    n = len(columns)
    size = len(target)
    aug = [[columns[j][i] for j in range(n)] + [target[i]] for i in range(size)]
    red, pivots = rref(aug)
    if n in pivots:
        return None
    sol: list[Scalar] = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        sol[p] = row[n]
    return sol
